//! End-to-end checks of the command-line interface: output shapes, exit
//! codes, and bracket evaluation on element files.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::path::PathBuf;
use std::process::{Command, Output};
use zornlie::algebra::{Algebra, AlgebraElement};
use zornlie::exc::{ExcElement, InnerAlgebraElement};
use zornlie::g2::generators;
use zornlie::jordan::JordanElement;
use zornlie::linalg::Mat3;
use zornlie::octonion::CompositionTag;
use zornlie::scalar::{ExactScalar, Rat};
use zornlie::schema::{table_from_dto, ElementDto, ScTableDto};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_zornlie"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawning the binary")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("zornlie-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("scratch dir");
    dir.join(name)
}

fn write_element(name: &str, x: &AlgebraElement) -> PathBuf {
    let path = scratch(name);
    let text = serde_json::to_string(&ElementDto::from_element(x)).unwrap();
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn dims_reports_every_dimension() {
    let out = run(&["dims"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    for (name, dim) in [("g2", 14), ("f4", 52), ("e6", 78), ("e7", 133), ("e8", 248)] {
        assert_eq!(doc[name], serde_json::json!(dim), "dimension of {name}");
    }
}

#[test]
fn branching_parts_add_up() {
    for (name, want) in [
        ("g2", vec![8, 3, 3]),
        ("f4", vec![8, 8, 18, 18]),
        ("e6", vec![8, 8, 8, 27, 27]),
        ("e7", vec![8, 35, 45, 45]),
        ("e8", vec![8, 78, 81, 81]),
    ] {
        let out = run(&["branching", "--algebra", name]);
        assert!(out.status.success());
        let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
        let dims: Vec<usize> = doc["parts"]
            .as_array()
            .unwrap()
            .iter()
            .map(|p| p["dim"].as_u64().unwrap() as usize)
            .collect();
        assert_eq!(dims, want, "{name} blocks");
        assert_eq!(
            doc["total"].as_u64().unwrap() as usize,
            want.iter().sum::<usize>()
        );
    }
}

#[test]
fn bracket_of_an_element_with_itself_vanishes() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let x = AlgebraElement::random(Algebra::G2, &mut rng);
    let path = write_element("self.json", &x);
    let out = run(&[
        "bracket",
        "--algebra",
        "g2",
        "--lhs",
        path.to_str().unwrap(),
        "--rhs",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let dto: ElementDto = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert!(dto.to_element().unwrap().is_zero());
}

#[test]
fn bracket_reproduces_a_tabulated_pair() {
    let gens = generators();
    let lhs = write_element("h1.json", &AlgebraElement::G2(gens[6].clone()));
    let rhs = write_element("g1p.json", &AlgebraElement::G2(gens[8].clone()));
    let out = run(&[
        "bracket",
        "--algebra",
        "g2",
        "--lhs",
        lhs.to_str().unwrap(),
        "--rhs",
        rhs.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let dto: ElementDto = serde_json::from_str(&stdout_of(&out)).unwrap();
    let got = dto.to_element().unwrap();
    let half_rt2 = ExactScalar::basis(2, Rat::new(1, 2));
    let want = AlgebraElement::G2(gens[8].scale(&half_rt2));
    assert_eq!(got, want);
}

#[test]
fn bracket_of_two_outer_blocks_is_their_commutator() {
    let tag = CompositionTag::N1;
    let pure = |m: Mat3| {
        AlgebraElement::Exc(
            ExcElement::new(
                m,
                InnerAlgebraElement::zero(tag),
                std::array::from_fn(|_| JordanElement::zero(tag)),
                std::array::from_fn(|_| JordanElement::zero(tag)),
            )
            .unwrap(),
        )
    };
    let lhs = write_element("e12.json", &pure(Mat3::unit(0, 1)));
    let rhs = write_element("e21.json", &pure(Mat3::unit(1, 0)));
    let out = run(&[
        "bracket",
        "--algebra",
        "f4",
        "--lhs",
        lhs.to_str().unwrap(),
        "--rhs",
        rhs.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let got = serde_json::from_str::<ElementDto>(&stdout_of(&out))
        .unwrap()
        .to_element()
        .unwrap();
    let want = pure(Mat3::unit(0, 1).commutator(&Mat3::unit(1, 0)));
    assert_eq!(got, want);
}

#[test]
fn mismatched_and_malformed_inputs_exit_2() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let g = write_element(
        "g2-element.json",
        &AlgebraElement::random(Algebra::G2, &mut rng),
    );
    let out = run(&[
        "bracket",
        "--algebra",
        "f4",
        "--lhs",
        g.to_str().unwrap(),
        "--rhs",
        g.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));

    let junk = scratch("junk.json");
    std::fs::write(&junk, "not json").unwrap();
    let out = run(&[
        "bracket",
        "--algebra",
        "g2",
        "--lhs",
        junk.to_str().unwrap(),
        "--rhs",
        junk.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));

    // an element file that breaks a block invariant
    let bad = scratch("bad.json");
    let mut dto = match ElementDto::from_element(&AlgebraElement::random(Algebra::G2, &mut rng))
    {
        ElementDto::G2(d) => d,
        _ => unreachable!(),
    };
    dto.a[0][0] = ExactScalar::int(1).to_strings();
    std::fs::write(&bad, serde_json::to_string(&ElementDto::G2(dto)).unwrap()).unwrap();
    let out = run(&[
        "bracket",
        "--algebra",
        "g2",
        "--lhs",
        bad.to_str().unwrap(),
        "--rhs",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("traceless"), "diagnostic names the invariant: {err}");
}

#[test]
fn roots_exports_are_consistent_between_formats() {
    let csv = run(&["roots", "--algebra", "e6"]);
    assert!(csv.status.success());
    let csv_text = stdout_of(&csv);
    let lines: Vec<&str> = csv_text.trim().lines().collect();
    assert_eq!(lines.len(), 73, "header plus 72 roots");
    assert!(lines[0].starts_with("k1,"));

    let json = run(&["roots", "--algebra", "e6", "--format", "json"]);
    assert!(json.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&json)).unwrap();
    assert_eq!(doc["rows"].as_array().unwrap().len(), 72);
    assert_eq!(
        doc["header"].as_array().unwrap().len(),
        lines[0].split(',').count()
    );

    let g2 = run(&["roots", "--algebra", "g2"]);
    assert!(g2.status.success());
    assert_eq!(stdout_of(&g2).trim().lines().count(), 15, "header plus 14 rows");

    let f4 = run(&["roots", "--algebra", "f4"]);
    assert_eq!(f4.status.code(), Some(2));
}

#[test]
fn structure_constants_file_round_trips() {
    let path = scratch("g2-table.json");
    let out = run(&[
        "structure-constants",
        "--algebra",
        "g2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let dto: ScTableDto = serde_json::from_str(&text).unwrap();
    let reloaded = table_from_dto(&dto).unwrap();
    let fresh = zornlie::structure::build(Algebra::G2);
    assert_eq!(reloaded.rows, fresh.rows);
    assert_eq!(reloaded.labels, fresh.labels);
}

#[test]
fn verify_passes_and_exits_zero_in_both_modes() {
    let out = run(&["verify", "--algebra", "g2", "--seed", "3"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["failures"].as_array().unwrap().len(), 0);
    assert_eq!(report["mode"], "exhaustive");

    let out = run(&[
        "verify", "--algebra", "g2", "--mode", "sampled", "--samples", "200", "--seed", "3",
    ]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["mode"], "sampled");
}
