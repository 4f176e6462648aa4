use std::process::{Command, Output};

use hilbfock::exact::RationalFunction;
use hilbfock::hilbloc::LaurentChar;
use hilbfock::report::Report;
use hilbfock::symfunc::SymFunc;

fn hilbfock(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hilbfock"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn jack_prints_monomial_expansion() {
    let o = hilbfock(&["jack", "[2]"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "m[2] + (2/(1+k))·m[1,1]\n");
    assert_eq!(stdout(&hilbfock(&["jack", "[2]", "--schur"])), "m[2] + m[1,1]\n");
}

#[test]
fn jack_json_round_trips() {
    let o = hilbfock(&["jack", "[2,1]", "--output", "json"]);
    let f: SymFunc<RationalFunction> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(f.terms().len(), 2);
}

#[test]
fn bound_violation_is_a_usage_error() {
    let o = hilbfock(&["jack", "[5]", "--max-degree", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
    assert_eq!(hilbfock(&["pieri", "[4]", "--max-degree", "4"]).status.code(), Some(2));
    assert_eq!(hilbfock(&["verify", "norm", "--max-degree", "20"]).status.code(), Some(2));
}

#[test]
fn tangent_json() {
    let o = hilbfock(&["tangent", "[2]", "--nested", "[1]", "--output", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let chi: LaurentChar = serde_json::from_value(v["character"].clone()).unwrap();
    assert_eq!(chi.dimension(), 4);
    assert_eq!(chi.multiplicity(0, 1), 2);
}

#[test]
fn pieri_text() {
    assert_eq!(stdout(&hilbfock(&["pieri", "[1]"])), "P[2] + (2k/(1+k))·P[1,1]\n");
}

#[test]
fn verify_reports_are_deterministic() {
    let args = ["verify", "heisenberg", "--max-degree", "3", "--seed", "7", "--output", "json"];
    let a = hilbfock(&args);
    let b = hilbfock(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let r: Report = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!((r.suite.as_str(), r.maxdeg), ("heisenberg", 3));
}

#[test]
fn verify_norm_covers_every_partition() {
    let o = hilbfock(&["verify", "norm", "--max-degree", "6", "--output", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: Report = serde_json::from_slice(&o.stdout).unwrap();
    let count: usize = (0..=6).map(|n| hilbfock::partitions::enumerate(n).len()).sum();
    assert!(r.checks >= count);
}
