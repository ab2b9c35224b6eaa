// Counting pattern-free words by backtracking.

use std::error::Error;
use std::sync::Arc;

use morphcheck::words::enumerate_pattern_free;
use morphcheck::{Alphabet, PatternKind};

fn counts(letters: &str, kind: PatternKind, max_len: usize) -> Result<Vec<usize>, Box<dyn Error>> {
    let alphabet = Arc::new(Alphabet::new(letters)?);
    let mut counts = vec![0; max_len];
    for word in enumerate_pattern_free(&alphabet, kind, max_len) {
        counts[word.len() - 1] += 1;
    }
    Ok(counts)
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let ternary_square_free = counts("012", PatternKind::Square, 10)?;
    println!("ternary square-free: {ternary_square_free:?}");
    assert_eq!(&ternary_square_free[..8], &[3, 6, 12, 18, 30, 42, 60, 78]);

    let binary_overlap_free = counts("01", PatternKind::Overlap, 10)?;
    println!("binary overlap-free: {binary_overlap_free:?}");
    assert_eq!(&binary_overlap_free[..6], &[2, 4, 6, 10, 14, 20]);

    // no binary word of length 4 is square-free
    let binary_square_free = counts("01", PatternKind::Square, 6)?;
    println!("binary square-free:  {binary_square_free:?}");
    assert_eq!(binary_square_free, [2, 2, 2, 0, 0, 0]);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
