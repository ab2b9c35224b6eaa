// Finding squares, overlaps and cubes in a word.

use std::error::Error;
use std::sync::Arc;

use morphcheck::{find_pattern, parse_word, Alphabet, PatternKind};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let binary = Arc::new(Alphabet::new("01")?);
    for text in ["0110", "01101001", "011010011", "010010", "0101010"] {
        let word = parse_word(text, &binary)?;
        for kind in PatternKind::ALL {
            match find_pattern(&word, kind) {
                Some(occ) => {
                    let block = word.factor(occ.start, occ.span());
                    println!(
                        "{text}: {kind} {block} at {} (period {})",
                        occ.start, occ.period
                    );
                }
                None => println!("{text}: {kind}-free"),
            }
        }
    }

    let word = parse_word("010010", &binary)?;
    let occ = find_pattern(&word, PatternKind::Square).ok_or("expected a square")?;
    assert_eq!((occ.start, occ.period), (2, 1));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
