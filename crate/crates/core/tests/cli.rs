use std::fs;
use std::process::{Command, Output};

fn morphcheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_morphcheck"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn catalog_show_feeds_check_morphism() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("leech.morph");
    let shown = morphcheck(&["catalog", "show", "leech"]);
    assert!(shown.status.success());
    fs::write(&file, &shown.stdout).unwrap();
    let out = morphcheck(&["check-morphism", file.to_str().unwrap(), "--def", "square"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("def4.i holds"));
    assert!(text.contains("def4.ii holds"));
    assert!(text.contains("def4.iii holds"));
    assert!(text.ends_with("verdict: pass\n"));
}

#[test]
fn certify_prints_counts_per_length() {
    let out = morphcheck(&[
        "certify",
        "leech",
        "--pattern",
        "square",
        "--max-len",
        "6",
        "--direction",
        "both",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    // square-free ternary words of lengths 1..=6
    for (len, count) in [(1, 3), (2, 6), (3, 12), (4, 18), (5, 30), (6, 42)] {
        assert!(
            text.contains(&format!("length {len}: {count} words")),
            "{text}"
        );
    }
    assert!(text.contains("backward: no square counterexample up to length 6"));
}

#[test]
fn certify_reports_and_explains_counterexample() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.morph");
    fs::write(&file, "alphabet: 01\n0 -> 00\n1 -> 11\n").unwrap();
    let out = morphcheck(&[
        "certify",
        file.to_str().unwrap(),
        "--pattern",
        "square",
        "--max-len",
        "2",
        "--direction",
        "forward",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(
        text.contains("forward: counterexample W=0 h(W)=00 square at start 0 period 1"),
        "{text}"
    );
    assert!(text.contains("positions: j0=0"), "{text}");
}

#[test]
fn errors_go_to_stderr_with_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("broken.morph");
    fs::write(&file, "alphabet: 01\n0 -> 01\n").unwrap();
    let out = morphcheck(&["check-morphism", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no rule for letter '1'"));
    assert!(out.stdout.is_empty());
}

#[test]
fn help_documents_border_reading() {
    let out = morphcheck(&["check-morphism", "--help"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("The empty V is not considered"));
}

#[test]
fn printed_witness_rechecks_through_check_word() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("stacking.morph");
    fs::write(&file, "alphabet: 012\n0 -> 01\n1 -> 20\n2 -> 12\n").unwrap();
    let out = morphcheck(&[
        "certify",
        file.to_str().unwrap(),
        "--pattern",
        "square",
        "--max-len",
        "4",
        "--direction",
        "forward",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let witness = &report["witness"];
    let word = witness["word"].as_str().unwrap();
    let image = witness["image"].as_str().unwrap();

    let free = morphcheck(&[
        "check-word",
        word,
        "--pattern",
        "square",
        "--alphabet",
        "012",
    ]);
    assert_eq!(free.status.code(), Some(0));
    let found = morphcheck(&[
        "check-word",
        image,
        "--pattern",
        "square",
        "--alphabet",
        "012",
    ]);
    assert_eq!(found.status.code(), Some(1));
    let expected = format!(
        "square at start {} period {}",
        witness["occurrence"]["start"], witness["occurrence"]["period"]
    );
    assert!(stdout(&found).starts_with(&expected), "{}", stdout(&found));
}
