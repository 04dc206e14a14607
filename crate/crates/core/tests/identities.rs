//! The identity suite for the Hermitian 3x3 algebras over all four
//! coordinate ranks, driven through the public verification entry point.

use zornlie::verify::jordan_suite;

#[test]
fn identity_suite_holds_at_every_rank() {
    let rep = jordan_suite(100, 20260822);
    assert!(rep.passed(), "failures: {:#?}", rep.failures);
    let rank_notes = rep.notes.iter().filter(|n| n.starts_with("rank ")).count();
    assert_eq!(rank_notes, 4, "one summary note per coordinate rank");
    assert!(
        rep.notes.iter().any(|n| n.contains("non-associativity witness")),
        "the rank-8 witness must be recorded: {:#?}",
        rep.notes
    );
}

#[test]
fn identity_suite_is_deterministic() {
    let a = serde_json::to_string(&jordan_suite(100, 5)).unwrap();
    let b = serde_json::to_string(&jordan_suite(100, 5)).unwrap();
    assert_eq!(a, b);
}
