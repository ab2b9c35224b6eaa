// Where an overlap in an image sits against the tiles of a uniform morphism.

use std::error::Error;

use morphcheck::certify::{certify_forward, classify_alignment, explain, residues};
use morphcheck::{Morphism, Occurrence, PatternKind};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let r = residues(3, 4, 5)?;
    println!("j0=3 p=4 n=5: r0={} r1={} r2={}", r.r0, r.r1, r.r2);
    assert!(r.satisfies_relation(5));

    for (start, period) in [(3, 4), (1, 3), (2, 10), (4, 12)] {
        let occ = Occurrence {
            kind: PatternKind::Overlap,
            start,
            period,
        };
        let d = classify_alignment(&occ, 5)?;
        println!(
            "start {start} period {period}: {} over {} tiles",
            d.case.label(),
            d.tile_span
        );
    }

    // 2-uniform, stacks images into an overlap
    let m = Morphism::from_strs("01", "01", &["01", "00"])?;
    let c = certify_forward(&m, PatternKind::Overlap, 4)?;
    let cex = c.counterexample.ok_or("expected a counterexample")?;
    println!("{}", explain(&m, &cex));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
