mod common;

use common::{golden_mismatches, round_trip_failures, transcript, CASES};

#[test]
fn every_verb_matches_its_golden_file() {
    let bad = golden_mismatches();
    assert!(bad.is_empty(), "golden mismatches (rerun with QLOOP_BLESS=1 to inspect): {bad:?}");
}

#[test]
fn every_verb_has_a_case() {
    let verbs = [
        "alpha", "act", "twist-w0", "decompose", "cone", "block", "linked", "trivial-sets", "qchar-fund", "qchar-sl2",
        "qchar-tensor", "verify",
    ];
    for v in verbs {
        assert!(CASES.iter().any(|(_, args)| args[0] == v), "{v}");
    }
}

#[test]
fn output_is_deterministic() {
    for (_, args) in CASES {
        assert_eq!(transcript(args), transcript(args));
    }
}

#[test]
fn exit_codes() {
    assert_eq!(transcript(&["linked", "--type", "A2", "w[1;a,0]", "w[1;a,2]"]).0, 0);
    assert_eq!(transcript(&["alpha", "--type", "X3", "--node", "1"]).0, 2);
    assert_eq!(transcript(&["block", "--type", "A2", "w[1;a,0"]).0, 2);
    assert_eq!(transcript(&["alpha", "--type", "A3", "--node", "9"]).0, 3);
    assert_eq!(transcript(&["twist-w0", "--type", "A2", "w[1;a,0]^-1"]).0, 3);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_qloop");
    let run = |args: &[&str]| std::process::Command::new(bin).args(args).output().expect("run qloop");
    let ok = run(&["alpha", "--type", "A1", "--node", "1"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "w[1;a,0]*w[1;a,2]\n");
    assert_eq!(run(&["alpha", "--type", "Q1", "--node", "1"]).status.code(), Some(2));
    assert_eq!(run(&["alpha", "--type", "A1", "--node", "2"]).status.code(), Some(3));
}

#[test]
fn lweights_round_trip() {
    assert_eq!(round_trip_failures(0x5eed, 200), Vec::<String>::new());
}
