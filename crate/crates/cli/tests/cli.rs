use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_nakayama"))
}

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().arg("--no-timing").args(args).output().expect("binary runs")
}

fn report(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{args:?}: {e}\nstdout: {}\nstderr: {}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    });
    (out.status.code().unwrap(), v)
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn classify_sweedler() {
    let (code, r) = report(&["classify", path(&corpus("sweedler.json"))]);
    assert_eq!(code, 0);
    assert_eq!(r["status"], "ok");
    let res = &r["results"];
    assert_eq!(res["cosemisimple"], false);
    assert_eq!(res["quasiFrobenius"], true);
    assert_eq!(res["coFrobenius"], true);
    assert_eq!(res["symmetric"], false);
    assert_eq!(res["permutation"], serde_json::json!([1, 0]));
}

#[test]
fn classify_serial_reports_dimension_mismatch() {
    let (code, r) = report(&["classify", path(&corpus("serial-qf-1-2.json"))]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["quasiFrobenius"], true);
    assert_eq!(r["results"]["coFrobenius"], false);
    assert_eq!(r["results"]["counterexample"]["kind"], "dimensionMismatch");
}

#[test]
fn nakayama_on_matrix_coalgebra_is_identity() {
    let (code, r) = report(&["nakayama", path(&corpus("matrix2.json")), "--comodule", "regular", "--direction", "right"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["isomorphicToInput"], true);
    assert_eq!(r["results"]["output"]["dim"], 4);
    assert_eq!(r["results"]["isomorphism"].as_array().unwrap().len(), 4);
}

#[test]
fn nakayama_moves_sweedler_simples() {
    for dir in ["left", "right"] {
        let (code, r) = report(&["nakayama", path(&corpus("sweedler.json")), "--comodule", "S0", "--direction", dir]);
        assert_eq!(code, 0);
        assert_eq!(r["results"]["output"]["dim"], 1);
        assert_eq!(r["results"]["isomorphicToInput"], false);
    }
}

#[test]
fn broken_coalgebra_is_violated_with_replayable_witness() {
    let file = data("broken.json");
    let (code, r) = report(&["validate", path(&file)]);
    assert_eq!(code, 1);
    assert_eq!(r["status"], "violated");
    let w = &r["witness"];
    assert_eq!(w["axiom"], "coassociativity");
    assert_eq!(w["indices"], serde_json::json!([1]));

    // Recompute both sides of coassociativity at the witness from the raw file.
    let f: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    let delta: Vec<[i64; 4]> = serde_json::from_value(f["delta"].clone()).unwrap();
    let d = |c: i64, a: i64, b: i64| -> i64 {
        delta.iter().filter(|t| t[0] == c && t[1] == a && t[2] == b).map(|t| t[3]).sum()
    };
    let i = 1;
    let values = w["values"].as_array().unwrap();
    assert!(!values.is_empty());
    for v in values {
        let v: [i64; 5] = serde_json::from_value(v.clone()).unwrap();
        let [a, b, c, lhs, rhs] = v;
        let l: i64 = (0..3).map(|p| d(i, p, c) * d(p, a, b)).sum();
        let r: i64 = (0..3).map(|q| d(i, a, q) * d(q, b, c)).sum();
        assert_eq!((l, r), (lhs, rhs));
        assert_ne!(l, r);
    }
}

#[test]
fn bad_comodule_is_violated() {
    let (code, r) = report(&["validate", path(&data("bad-comodule.json"))]);
    assert_eq!(code, 1);
    assert!(r["witness"]["axiom"].as_str().unwrap().starts_with("comodule M"));
}

#[test]
fn malformed_input_exits_3_with_position() {
    let out = run(&["validate", path(&data("malformed.json"))]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 4 column 3"), "{err}");

    let out = run(&["validate", path(&data("float.json"))]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("1.5"));

    for args in [
        &["validate", "does-not-exist.json"][..],
        &["frobnicate"],
        &["corpus", "emit", "taft:n=3,q=3,p=7"],
        &["verify-suite", "--seed-range", "5..2"],
        &["verify-suite", "--family", "nope"],
        &["integrals", path(&corpus("matrix2.json")), "--side", "l"],
        &["nakayama", path(&corpus("sweedler.json")), "--comodule", "X", "--direction", "left"],
    ] {
        assert_eq!(run(args).status.code(), Some(3), "{args:?}");
    }
}

const GOLDENS: [(&str, &str); 6] = [
    ("sweedler", "sweedler.json"),
    ("matrix:n=2", "matrix2.json"),
    ("serial-qf:dims=1-2", "serial-qf-1-2.json"),
    ("random:seed=0,dim=4", "random-seed0-dim4.json"),
    ("taft:n=3,q=2,p=7", "taft9.json"),
    ("cyclic-coquasi:n=2,e=1", "coquasi-z2.json"),
];

#[test]
fn goldens_match_emit() {
    for (spec, file) in GOLDENS {
        let out = run(&["corpus", "emit", spec]);
        assert_eq!(out.status.code(), Some(0));
        let golden = std::fs::read(corpus(file)).unwrap();
        assert!(out.stdout == golden, "{file} differs from `corpus emit {spec}`");
    }
}

#[test]
fn emit_validate_classify_is_byte_stable() {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("roundtrip");
    std::fs::create_dir_all(&dir).unwrap();
    for spec in ["group:n=3", "taft:n=2,q=2,p=3", "random:seed=7,dim=5", "function-hopf:group=symmetric,n=3"] {
        let emitted = run(&["corpus", "emit", spec]).stdout;
        assert_eq!(emitted, run(&["corpus", "emit", spec]).stdout);
        let file = dir.join(format!("{}.json", spec.replace([':', ',', '='], "_")));
        std::fs::write(&file, &emitted).unwrap();
        for cmd in ["validate", "classify"] {
            let a = run(&[cmd, path(&file)]);
            let b = run(&[cmd, path(&file)]);
            assert_eq!(a.status.code(), Some(0), "{spec} {cmd}");
            assert_eq!(a.stdout, b.stdout, "{spec} {cmd}");
        }
    }
}

#[test]
fn timing_is_reported_unless_disabled() {
    let out = bin().args(["validate", path(&corpus("matrix2.json"))]).output().unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["timing"]["seconds"].is_number());
    let (_, v) = report(&["validate", path(&corpus("matrix2.json"))]);
    assert!(v.get("timing").is_none());
    assert_eq!(v["input"]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn pairing_and_integrals() {
    let (code, r) = report(&["pairing", path(&corpus("sweedler.json"))]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["nakayamaAutomorphism"]["order"], 2);
    assert_eq!(r["results"]["symmetricPairing"], Value::Null);

    let (code, r) = report(&["pairing", path(&corpus("serial-qf-1-2.json"))]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["pairing"], Value::Null);

    let (_, l) = report(&["integrals", path(&corpus("sweedler.json")), "--side", "l"]);
    let (_, r) = report(&["integrals", path(&corpus("sweedler.json")), "--side", "r"]);
    assert_eq!(l["results"]["dim"], 1);
    assert_eq!(r["results"]["dim"], 1);
    assert_ne!(l["results"]["basis"], r["results"]["basis"]);
    assert_eq!(l["results"]["unimodular"], false);
}

#[test]
fn radford_and_coquasi() {
    let (code, r) = report(&["radford", path(&corpus("sweedler.json")), "--max-dim", "2"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["objects"].as_array().unwrap().len(), 4);
    assert_eq!(r["results"]["verified"], true);
    assert_eq!(r["results"]["hullCover"].as_array().unwrap().len(), 2);

    let (code, r) = report(&["coquasi", path(&corpus("coquasi-z2.json"))]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["preantipode"]["solutionDim"], 0);
    assert_eq!(r["results"]["dimensionCriterion"], true);
    assert_eq!(r["results"]["leftCointegrals"], 1);

    assert_eq!(run(&["radford", path(&corpus("coquasi-z2.json"))]).status.code(), Some(3));
}

#[test]
fn verify_suite_is_deterministic() {
    let args = ["verify-suite", "--family", "random", "--seed-range", "0..6"];
    let (code, r) = report(&args);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["total"], 6);
    assert_eq!(r["results"]["failed"], 0);
    assert_eq!(run(&args).stdout, run(&args).stdout);

    let (code, r) = report(&["verify-suite", "--family", "taft"]);
    assert_eq!(code, 0);
    let names: Vec<&str> = r["results"]["instances"].as_array().unwrap().iter().map(|i| i["instance"].as_str().unwrap()).collect();
    assert_eq!(names, ["taft:n=2,q=2,p=3", "taft:n=3,q=2,p=7"]);
    assert_eq!(r["results"]["instances"][1]["checks"]["hullCover"], true);
}
