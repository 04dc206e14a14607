//! Acceptance gate: one test per shipping criterion, each printing a
//! single PASS/FAIL line (visible with --nocapture, and on failure).
//!
//! The criteria are timed and sequenced through a shared lock so that the
//! wall-clock bounds are measured on an otherwise idle process.

use std::process::Command;
use std::sync::{Mutex, MutexGuard};
use std::time::Instant;
use zornlie::algebra::Algebra;
use zornlie::verify::{jordan_suite, octonion_suite, run_verify, Mode};

static GATE: Mutex<()> = Mutex::new(());

fn lock() -> MutexGuard<'static, ()> {
    GATE.lock().unwrap_or_else(|e| e.into_inner())
}

fn crit(n: usize, what: &str, ok: bool, detail: String) {
    println!("criterion {n}: {} - {what}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {n} ({what}) failed: {detail}");
}

fn note_present(rep: &zornlie::verify::VerificationReport, needle: &str) -> bool {
    rep.notes.iter().any(|n| n.contains(needle))
}

#[test]
fn criterion_1_octonion_arithmetic() {
    let _g = lock();
    let start = Instant::now();
    let rep = octonion_suite(1);
    let secs = start.elapsed().as_secs_f64();
    let ok = rep.passed()
        && rep.pairs_checked == 64
        && rep.triples_checked == 512
        && note_present(&rep, "associator witness")
        && secs < 1.0;
    crit(
        1,
        "unit products, alternativity, associator witness, under one second",
        ok,
        format!("failures {:?}, {secs:.3}s", rep.failures),
    );
}

#[test]
fn criterion_2_g2_generators_and_relations() {
    let _g = lock();
    let rep = run_verify(Algebra::G2, Mode::Exhaustive, 500, 2, 3600);
    let ok = rep.passed()
        && note_present(&rep, "tabulated brackets: all 196 generator pairs")
        && note_present(&rep, "bracket action equals the operator commutator")
        && note_present(&rep, "derivation rule: 14 x 64 unit pairs")
        && note_present(&rep, "jacobi (all unordered basis triples)");
    crit(
        2,
        "g2 generator brackets, representation, derivation rule, jacobi",
        ok,
        format!("failures {:?}", rep.failures),
    );
}

#[test]
fn criterion_3_f4_in_under_a_minute() {
    let _g = lock();
    let start = Instant::now();
    let rep = run_verify(Algebra::F4, Mode::Exhaustive, 2000, 3, 3600);
    let secs = start.elapsed().as_secs_f64();
    let ok = rep.passed()
        && note_present(&rep, "jacobi (all unordered basis triples)")
        && note_present(&rep, "correspondence")
        && note_present(&rep, "branching: 52 = ")
        && secs < 60.0;
    crit(
        3,
        "f4 jacobi, model correspondence, branching, under one minute",
        ok,
        format!("failures {:?}, {secs:.3}s", rep.failures),
    );
}

#[test]
fn criterion_4_e6_roots_and_weights() {
    let _g = lock();
    let rep = run_verify(Algebra::E6, Mode::Exhaustive, 2000, 4, 3600);
    let ok = rep.passed()
        && note_present(&rep, "jacobi (all unordered basis triples)")
        && note_present(&rep, "roots: 72 distinct vectors")
        && note_present(&rep, "weight table")
        && note_present(&rep, "branching: 78 = ");
    crit(
        4,
        "e6 jacobi, 72-root system, weight-table audit, branching",
        ok,
        format!("failures {:?}", rep.failures),
    );
}

#[test]
fn criterion_5_e7_with_module_action() {
    let _g = lock();
    let rep = run_verify(Algebra::E7, Mode::Exhaustive, 2000, 5, 3600);
    let ok = rep.passed()
        && note_present(&rep, "jacobi (all unordered basis triples)")
        && note_present(&rep, "respects the block invariants")
        && note_present(&rep, "module action: (78 + 1) generators x 27 basis vectors")
        && note_present(&rep, "central generator")
        && note_present(&rep, "branching: 133 = ");
    crit(
        5,
        "e7 antisymmetry, jacobi within budget, trace constraint, module action",
        ok,
        format!("failures {:?}", rep.failures),
    );
}

#[test]
fn criterion_6_e8_sampled_jacobi_and_rank() {
    let _g = lock();
    let rep = run_verify(Algebra::E8, Mode::Sampled, 2000, 6, 3600);
    let ok = rep.passed()
        && note_present(&rep, "derivation span")
        && note_present(&rep, "jacobi (dense random elements): 200 triples")
        && note_present(&rep, "jacobi (sampled basis triples): 2000 triples")
        && note_present(&rep, "branching: 248 = ");
    crit(
        6,
        "e8 antisymmetry, sampled jacobi, rank-52 derivation span, branching",
        ok,
        format!("failures {:?}", rep.failures),
    );
}

#[test]
fn criterion_7_jordan_identity_suite() {
    let _g = lock();
    let rep = jordan_suite(100, 7);
    let ranks = rep.notes.iter().filter(|n| n.starts_with("rank ")).count();
    let ok = rep.passed() && ranks == 4 && note_present(&rep, "non-associativity witness");
    crit(
        7,
        "identity suite at every coordinate rank plus the rank-8 witness",
        ok,
        format!("failures {:?}", rep.failures),
    );
}

#[test]
fn criterion_8_byte_identical_reruns() {
    let _g = lock();
    let run_once = |args: &[&str]| {
        let out = Command::new(env!("CARGO_BIN_EXE_zornlie"))
            .args(args)
            .output()
            .expect("spawning the binary");
        (out.status.code(), out.stdout)
    };
    let verify_args =
        ["verify", "--algebra", "g2", "--mode", "exhaustive", "--samples", "500", "--seed", "11"];
    let (code_a, bytes_a) = run_once(&verify_args);
    let (code_b, bytes_b) = run_once(&verify_args);
    let table_args = ["structure-constants", "--algebra", "f4"];
    let (code_c, bytes_c) = run_once(&table_args);
    let (code_d, bytes_d) = run_once(&table_args);
    let ok = code_a == Some(0)
        && code_b == Some(0)
        && code_c == Some(0)
        && code_d == Some(0)
        && bytes_a == bytes_b
        && bytes_c == bytes_d
        && !bytes_a.is_empty()
        && !bytes_c.is_empty();
    crit(
        8,
        "same-seed verify and table exports are byte-identical",
        ok,
        format!(
            "verify exits {code_a:?}/{code_b:?} ({} vs {} bytes), table exits \
             {code_c:?}/{code_d:?} ({} vs {} bytes)",
            bytes_a.len(),
            bytes_b.len(),
            bytes_c.len(),
            bytes_d.len()
        ),
    );
}
