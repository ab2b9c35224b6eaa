// Checking a morphism against the overlap and square definitions, with
// witnesses for every failed condition.

use std::error::Error;

use morphcheck::unstackable::{
    check_lemma_consequences, check_overlap_def, check_square_def, Verdict,
};
use morphcheck::{catalog, Morphism};

fn show(label: &str, m: &Morphism, verdict: &Verdict) {
    println!("{label}: {}", if verdict.pass { "pass" } else { "fail" });
    for report in &verdict.reports {
        let state = if report.holds { "holds" } else { "fails" };
        println!("  {} {state}", report.condition.as_str());
        for w in report.witnesses.iter().take(3) {
            println!("    {}", w.describe(m));
        }
    }
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mu = catalog("thue_morse")?;
    let verdict = check_overlap_def(&mu)?;
    show("thue_morse overlap", &mu, &verdict);
    assert!(!verdict.pass);
    for report in &verdict.reports {
        assert!(report.witnesses.iter().all(|w| w.recheck(&mu)));
    }

    let leech = catalog("leech")?;
    let verdict = check_square_def(&leech)?;
    show("leech square", &leech, &verdict);
    assert!(verdict.pass);

    for name in ["f4", "g4"] {
        let m = catalog(name)?;
        let verdict = check_overlap_def(&m)?;
        show(&format!("{name} overlap"), &m, &verdict);
        assert!(verdict.pass);
        assert!(check_lemma_consequences(&m)?.iter().all(|r| r.holds));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
