//! Shared helpers for the CLI test targets.
#![allow(dead_code)]

use std::path::PathBuf;

use qloop_core::{LWeight, SpectralParam};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `(golden file name, arguments)` — one or more cases per verb.
pub const CASES: &[(&str, &[&str])] = &[
    ("alpha_b3", &["alpha", "--type", "B3", "--node", "2"]),
    ("alpha_c3_json", &["alpha", "--type", "C3", "--node", "3", "--orbit", "b", "--exp", "-1", "--format", "json"]),
    ("alpha_g2", &["alpha", "--type", "G2", "--node", "1"]),
    ("act_a2", &["act", "--type", "A2", "--word", "2,1", "w[1;a,0]"]),
    ("act_unreduced", &["act", "--type", "A2", "--word", "1,1", "w[1;a,0]"]),
    ("act_json", &["act", "--type", "B2", "--word", "1,2,1,2", "w[2;a,0]", "--format", "json"]),
    ("twist_w0_e6", &["twist-w0", "--type", "E6", "w[1;a,0]*w[6;b,2]"]),
    ("twist_w0_undominant", &["twist-w0", "--type", "A2", "w[1;a,0]^-1"]),
    ("decompose_plus", &["decompose", "--type", "A3", "--sign", "+", "w[1;a,-4]*w[3;a,0]"]),
    ("decompose_json", &["decompose", "--type", "A3", "--sign", "+", "w[1;a,-4]*w[3;a,0]", "--format", "json"]),
    ("decompose_none", &["decompose", "--type", "A2", "w[1;a,0]"]),
    ("decompose_bad_sign", &["decompose", "--type", "A2", "--sign", "?", "w[1;a,0]"]),
    ("cone_true", &["cone", "--type", "A1", "w[1;a,0]", "w[1;a,2]^-1"]),
    ("cone_false", &["cone", "--type", "A1", "w[1;a,0]", "w[1;a,-2]^-1"]),
    ("block_b3", &["block", "--type", "B3", "w[1;a,0]*w[3;b,2]"]),
    ("block_d4_json", &["block", "--type", "D4", "w[2;a,0]*w[4;a,1]", "--format", "json"]),
    ("linked_false", &["linked", "--type", "A2", "w[1;a,0]", "w[1;a,2]"]),
    ("linked_true", &["linked", "--type", "A2", "w[1;a,0]*w[2;a,3]", "1"]),
    ("trivial_sets_d4", &["trivial-sets", "--type", "D4"]),
    ("trivial_sets_g2_json", &["trivial-sets", "--type", "G2", "--orbit", "c", "--exp", "1", "--format", "json"]),
    ("qchar_fund_a3", &["qchar-fund", "--type", "A3", "--node", "2"]),
    ("qchar_fund_d4", &["qchar-fund", "--type", "D4", "--node", "2"]),
    ("qchar_fund_table", &["qchar-fund", "--type", "B2", "--node", "1", "--table", "1,0=1;0,0=1"]),
    ("qchar_fund_json", &["qchar-fund", "--type", "C2", "--node", "1", "--format", "json"]),
    ("qchar_fund_slack", &["qchar-fund", "--type", "B2", "--node", "1", "--table", "1,0=1;0,0=3"]),
    ("qchar_fund_bad_table", &["qchar-fund", "--type", "B2", "--node", "1", "--table", "1,0=1;0,0=0"]),
    ("qchar_fund_unparsable", &["qchar-fund", "--type", "B2", "--node", "1", "--table", "1,0:1"]),
    ("qchar_fund_exceptional", &["qchar-fund", "--type", "G2", "--node", "1", "--table", "1,0=1"]),
    ("qchar_sl2", &["qchar-sl2", "--m", "3", "--exp", "-1"]),
    ("qchar_sl2_json", &["qchar-sl2", "--m", "1", "--format", "json"]),
    ("qchar_tensor", &["qchar-tensor", "w[1;a,0] + w[1;a,2]^-1", "w[1;b,0] + w[1;b,2]^-1"]),
    ("verify_sl2", &["verify", "--suite", "sl2"]),
    ("verify_dn_json", &["verify", "--suite", "dn-adjoint", "--format", "json"]),
    ("verify_unknown", &["verify", "--suite", "nope"]),
    ("bad_type", &["alpha", "--type", "X3", "--node", "1"]),
    ("node_range", &["alpha", "--type", "A3", "--node", "9"]),
    ("bad_lweight", &["block", "--type", "A2", "w[1;a,0"]),
    ("missing_arg", &["alpha", "--type", "A3"]),
];

/// Run the CLI in-process; the transcript records exit code, stdout and stderr.
pub fn transcript(args: &[&str]) -> (i32, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("qloop").chain(args.iter().copied());
    let code = qloop_cli::run(argv, &mut out, &mut err);
    let text = format!(
        "exit: {code}\n--- stdout\n{}--- stderr\n{}",
        String::from_utf8(out).expect("utf-8"),
        String::from_utf8(err).expect("utf-8")
    );
    (code, text)
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.txt"))
}

/// Names of cases whose transcript differs from the stored golden file.
/// With `QLOOP_BLESS=1` the golden files are rewritten instead.
pub fn golden_mismatches() -> Vec<String> {
    let bless = std::env::var_os("QLOOP_BLESS").is_some();
    let mut bad = Vec::new();
    for (name, args) in CASES {
        let (_, got) = transcript(args);
        let path = golden_path(name);
        if bless {
            std::fs::write(&path, &got).expect("write golden file");
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(want) if want == got => {}
            _ => bad.push((*name).to_string()),
        }
    }
    bad
}

pub fn random_lweight(rng: &mut ChaCha8Rng) -> LWeight {
    let mut w = LWeight::one();
    for _ in 0..rng.gen_range(0..6) {
        let orbit = ["a", "b", "z9", "p_q"][rng.gen_range(0..4)];
        let p = SpectralParam::new(orbit, rng.gen_range(-20..=20)).expect("valid orbit");
        w.add_factor(rng.gen_range(1..=8), p, rng.gen_range(-3..=3));
    }
    w
}

/// `parse(print(w)) == w` and the reprint is byte-identical, through the
/// library and through `act` with the empty word.
pub fn round_trip_failures(seed: u64, count: usize) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = Vec::new();
    for _ in 0..count {
        let w = random_lweight(&mut rng);
        let text = w.to_string();
        match qloop_core::parse_lweight(&text) {
            Ok(back) if back == w && back.to_string() == text => {}
            _ => {
                bad.push(text);
                continue;
            }
        }
        let (code, got) = transcript(&["act", "--type", "A8", &text]);
        if code != 0 || got != format!("exit: 0\n--- stdout\n{text}\n--- stderr\n") {
            bad.push(text);
        }
    }
    bad
}
