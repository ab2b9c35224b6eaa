// Reading and writing the plain-text morphism format.

use std::error::Error;

use morphcheck::catalog;
use morphcheck::cli::{parse_morphism_file, render_morphism};

const TEXT: &str = "\
# a square-free ternary morphism
alphabet: 012
0 -> 0121 0212 01210
1 -> 1202 1020 12021
2 -> 2010 2101 20102
";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let m = parse_morphism_file(TEXT)?;
    assert_eq!(m, catalog("leech")?);
    let rendered = render_morphism(&m, Some("leech"));
    print!("{rendered}");
    assert_eq!(parse_morphism_file(&rendered)?, m);

    let err = parse_morphism_file("alphabet: 01\n0 -> 01\n0 -> 10\n").unwrap_err();
    println!("duplicate rule: {err}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
