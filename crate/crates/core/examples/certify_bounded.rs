// Bounded search for counterexamples to pattern preservation.

use std::error::Error;

use morphcheck::certify::{certify_backward, certify_forward, Certification};
use morphcheck::{catalog, Morphism, PatternKind};

fn summary(c: &Certification) -> String {
    match &c.counterexample {
        Some(cex) => format!("counterexample W={} h(W)={}", cex.word, cex.image),
        None => format!("none ({} words)", c.stats.words_checked()),
    }
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let jobs = [
        ("thue_morse", PatternKind::Overlap, 10),
        ("leech", PatternKind::Square, 7),
        ("f4", PatternKind::Overlap, 5),
    ];
    for (name, kind, max_len) in jobs {
        let m = catalog(name)?;
        let fwd = certify_forward(&m, kind, max_len)?;
        let bwd = certify_backward(&m, kind, max_len)?;
        println!(
            "{name} {kind} L={max_len}: forward {}, backward {}",
            summary(&fwd),
            summary(&bwd)
        );
        assert!(fwd.counterexample.is_none() && bwd.counterexample.is_none());
    }

    let bad = Morphism::from_strs("012", "012", &["01", "20", "12"])?;
    let fwd = certify_forward(&bad, PatternKind::Square, 6)?;
    println!("01/20/12 square: forward {}", summary(&fwd));
    assert!(fwd.counterexample.is_some());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
