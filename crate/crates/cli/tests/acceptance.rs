//! The twelve acceptance criteria, one PASS/FAIL line each. Run with
//! `cargo test -p qloop-cli --test acceptance -- --nocapture` to see them.

mod common;

use qloop_core::{verify_suite, Report, DEFAULT_SEED};

fn suite(name: &str) -> Report {
    verify_suite(name, DEFAULT_SEED).expect("known suite")
}

fn covers(r: &Report, prefixes: &[&str]) -> bool {
    prefixes.iter().all(|p| r.checks.iter().any(|c| c.id.starts_with(p)))
}

fn count_with(r: &Report, prefix: &str) -> usize {
    r.checks.iter().filter(|c| c.id.starts_with(prefix)).count()
}

/// `(criterion, description, passed, detail)`
fn criteria() -> Vec<(usize, &'static str, bool, String)> {
    let mut out = Vec::new();
    let mut push = |n: usize, what: &'static str, ok: bool, r: Option<&Report>| {
        let detail = r.map_or_else(String::new, |r| {
            let failed: Vec<_> = r.failures().map(|c| c.id.clone()).collect();
            format!("{} checks, failures: {failed:?}", r.checks.len())
        });
        out.push((n, what, ok, detail));
    };

    let r = suite("alpha-lists");
    let full = covers(&r, &["A2 ", "A8 ", "B2 ", "B8 ", "C2 ", "C8 ", "D4 ", "D8 "]);
    push(1, "simple l-roots match the printed lists", r.passed() && full, Some(&r));

    let r = suite("braid-relations");
    push(2, "braid relations on all generators", r.passed() && covers(&r, &["A5 ", "D5 ", "F4 ", "G2 "]), Some(&r));

    let r = suite("w0-twist");
    let full = covers(&r, &["A6 ", "B6 ", "C6 ", "D6 ", "G2 ", "F4 ", "E6 "]);
    push(3, "T_w0 twist equals its closed form", r.passed() && full, Some(&r));

    let r = suite("ellfund");
    let full = covers(&r, &["B8 (ii)", "C8 (i)", "D7 spin triple", "D8 spin quadruple", "D8 (iii)"]);
    push(4, "fundamental-weight identities in the l-root lattice", r.passed() && full, Some(&r));

    let r = suite("xi-soundness");
    let full = covers(&r, &["E8 alpha_8", "A7 image", "B7 image"]);
    push(5, "block group kills l-roots; printed images", r.passed() && full, Some(&r));

    let r = suite("xi-oracle");
    let enough = ["A2 pair", "B2 pair", "C3 pair", "D4 pair", "D5 pair", "G2 pair"].iter().all(|p| count_with(&r, p) >= 100);
    push(6, "normal-form equality agrees with lattice membership", r.passed() && enough, Some(&r));

    let r = suite("trivial-sets");
    let full = covers(&r, &["E6 ", "E7 ", "E8 ", "F4 ", "G2 ", "D8 S_+", "B8 "]);
    push(7, "trivial sets decompose in Q_q^+", r.passed() && full, Some(&r));

    let r = suite("sl2");
    push(8, "sl2 evaluation strings", r.passed() && covers(&r, &["m=10 r=m"]), Some(&r));

    let r = suite("minuscule");
    push(9, "minuscule characters: counts and cones", r.passed() && covers(&r, &["A3 node 2", "D4 node 4"]), Some(&r));

    let r = suite("dn-adjoint");
    let full = covers(&r, &["D4 T_w4", "D5 T_w5", "D6 T_w6", "D6 zero-weight"]);
    push(10, "D_n node-2 character and printed T_{w_j}", r.passed() && full, Some(&r));

    let r = suite("char-blocks");
    push(11, "characters lie in one block; tensor classes add", r.passed() && count_with(&r, "") >= 20, Some(&r));

    let golden = common::golden_mismatches();
    let trips = common::round_trip_failures(0x5eed, 200);
    let ok = golden.is_empty() && trips.is_empty();
    out.push((12, "CLI golden files and 200 round trips", ok, format!("golden: {golden:?}, round trips: {trips:?}")));
    out
}

#[test]
fn acceptance() {
    let results = criteria();
    for (n, what, ok, detail) in &results {
        let status = if *ok { "PASS" } else { "FAIL" };
        println!("criterion {n:>2}: {status} {what}");
        if !ok {
            println!("    {detail}");
        }
    }
    assert_eq!(results.len(), 12);
    assert!(results.iter().all(|r| r.2), "some acceptance criteria failed");
}
