use std::process::Command;

use gieseker_cli::{verify, Params, Status, Suite};

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_gieseker"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

#[test]
fn main_theorem_example() {
    let rep = verify(Suite::MainTheorem, Params::new(3, 2)).unwrap();
    assert!(rep.passed());
    let equalities = rep
        .checks
        .iter()
        .filter(|c| c.name.starts_with("k="))
        .count();
    assert_eq!(equalities, 2 * 3);
}

#[test]
fn calogero_covers_every_partition() {
    let rep = verify(Suite::Calogero, Params::new(6, 1)).unwrap();
    assert!(rep.passed());
    assert_eq!(
        rep.checks
            .iter()
            .filter(|c| c.name.contains("rank([X,Y] - Id)"))
            .count(),
        11
    );
}

#[test]
fn appendix_example_from_the_command_line() {
    let (code, stdout) = run(&[
        "verify", "appendix", "--n", "2", "--r", "2", "--cutoff", "8",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("dimension = |P(2,2)| = 5"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(
        run(&["verify", "appendix", "--n", "2", "--r", "2", "--cutoff", "3"]).0,
        2
    );
    assert_eq!(run(&["verify", "nonsense", "--n", "2"]).0, 2);
    assert_eq!(run(&["verify", "coulomb-rank1", "--n", "2"]).0, 2);
    assert_eq!(
        run(&[
            "verify",
            "dimensions",
            "--n",
            "2",
            "--r",
            "2",
            "--point",
            "kappa=1"
        ])
        .0,
        2
    );
    assert_eq!(run(&["verify", "hecke"]).0, 2);
}

#[test]
fn json_and_csv_reports() {
    let (code, json) = run(&[
        "verify", "hecke", "--n", "2", "--r", "2", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "verify hecke");
    assert_eq!(v["params"]["r"], 2);
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["status"] == "pass" && c.get("ms").is_none()));
    assert!(v.get("total_ms").is_none());
    let (_, csv) = run(&["verify", "hecke", "--n", "2", "--r", "2", "--format", "csv"]);
    assert!(csv.starts_with("command,name,status,witness,ms\n"));
    assert_eq!(
        csv.lines().count(),
        1 + v["checks"].as_array().unwrap().len()
    );
}

#[test]
fn explicit_point() {
    let mut p = Params::new(2, 2);
    p.point = Some("a1=3, kappa=1/2".into());
    let rep = verify(Suite::Dimensions, p).unwrap();
    assert!(rep.passed());
    assert_eq!(rep.params.point.as_deref(), Some("kappa=1/2,a1=3"));
}

#[test]
fn failing_point_is_reported_with_witness() {
    // kappa = 0 collapses the fixed points, so the explicit point fails
    let mut p = Params::new(2, 1);
    p.point = Some("kappa=0".into());
    let rep = verify(Suite::Dimensions, p).unwrap();
    assert!(!rep.passed());
    assert!(rep
        .checks
        .iter()
        .filter(|c| c.status == Status::Fail)
        .all(|c| c.witness.is_some()));
    let (code, _) = run(&["verify", "dimensions", "--n", "2", "--point", "kappa=0"]);
    assert_eq!(code, 1);
}

#[test]
fn dump_matrices_prints_both_matrices() {
    let (code, stdout) = run(&["verify", "calogero", "--n", "2", "--dump-matrices"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("X =") && stdout.contains("Y ="));
}

#[test]
fn wide_suites_skip_rather_than_fail() {
    let rep = verify(Suite::SymmetricCenter, Params::new(10, 1)).unwrap();
    assert!(rep.passed());
    assert!(rep.checks.iter().all(|c| c.status == Status::Skipped));
}
