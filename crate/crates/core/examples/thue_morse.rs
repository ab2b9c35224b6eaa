// Iterating a prolongable morphism to a prefix of its fixed point.

use std::error::Error;

use morphcheck::{catalog, find_pattern, PatternKind};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mu = catalog("thue_morse")?;
    let t = mu.iterate_prefix(0, 64)?;
    println!("t = {t}");
    assert_eq!(
        t.factor(0, 32).to_string(),
        "01101001100101101001011001101001"
    );

    // the fixed point is overlap-free but full of squares
    assert!(find_pattern(&t, PatternKind::Overlap).is_none());
    let sq = find_pattern(&t, PatternKind::Square).ok_or("expected a square")?;
    println!("first square: period {} at {}", sq.period, sq.start);

    let leech = catalog("leech")?;
    let l = leech.iterate_prefix(0, 200)?;
    assert!(find_pattern(&l, PatternKind::Square).is_none());
    println!("leech prefix of length {} is square-free", l.len());

    let err = mu.iterate_prefix(1, 0).unwrap_err();
    println!("zero length: {err}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
