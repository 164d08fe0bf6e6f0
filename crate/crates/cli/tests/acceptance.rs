//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use gieseker::appendixfix::{fixed_point_quotient, spanning_bound};
use gieseker::calogero::{cm_fixed_point, poly_from_roots};
use gieseker::combinat::{contents, hat_round_trip, partitions};
use gieseker::symcenter::{
    all_symmetric_jm, filtration_generation_check, rees_graded_dims, theta_map,
};
use gieseker::wreath::{c_vs_p_identity, p_sum_vanishes};
use gieseker_cli::{verify, Check, Params, Status, Suite};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

/// Runs a suite and requires every check to pass (skips are failures here).
fn all_pass(suite: Suite, params: Params) -> Result<usize, String> {
    let label = format!("{} n={} r={}", suite.name(), params.n, params.r);
    let rep = verify(suite, params).map_err(|e| format!("{label}: {e}"))?;
    match rep.checks.iter().find(|c| c.status != Status::Pass) {
        Some(Check { name, witness, .. }) => Err(format!(
            "{label}: {name}: {}",
            witness.as_deref().unwrap_or("")
        )),
        None => Ok(rep.checks.len()),
    }
}

fn criterion_1() -> Outcome {
    let mut checks = 0;
    for r in 1..=3 {
        for n in 1..=5 {
            checks += all_pass(Suite::MainTheorem, Params::new(n, r))?;
        }
    }
    Ok(format!("{checks} generator comparisons, n <= 5, r <= 3"))
}

fn criterion_2() -> Outcome {
    let mut shapes = 0;
    for n in 1..=8u32 {
        for lam in partitions(n) {
            let pair = cm_fixed_point(&lam).map_err(|e| format!("{lam}: {e}"))?;
            let cp = pair.yx_charpoly().map_err(|e| e.to_string())?;
            if cp != poly_from_roots(&contents(&lam)) {
                return Err(format!("charpoly(YX) wrong for {lam}"));
            }
            let rank = pair.cm_rank().map_err(|e| e.to_string())?;
            if rank != 1 {
                return Err(format!("rank([X,Y] - Id) = {rank} for {lam}"));
            }
            shapes += 1;
        }
    }
    Ok(format!("{shapes} partitions, n <= 8"))
}

fn criterion_3() -> Outcome {
    for n in 1..=6 {
        let theta = theta_map(n).map_err(|e| e.to_string())?;
        theta
            .check_isomorphism()
            .map_err(|e| format!("n={n}: {e}"))?;
        let want = theta.content_elementary();
        for (k, z) in all_symmetric_jm(n).iter().enumerate() {
            let coords = theta.classes.coords(z).map_err(|e| e.to_string())?;
            if theta.apply(&coords) != want[k] {
                return Err(format!(
                    "theta(e_{k}(JM)) differs from e_{k}(contents) at n={n}"
                ));
            }
        }
        if !filtration_generation_check(n).map_err(|e| e.to_string())? {
            return Err(format!("filtration generation fails at n={n}"));
        }
    }
    for n in 1..=9 {
        let mut want = vec![0usize; n];
        for lam in partitions(n as u32) {
            want[n - lam.len()] += 1;
        }
        if rees_graded_dims(n) != want {
            return Err(format!("Rees graded dimensions wrong at n={n}"));
        }
    }
    Ok("theta and filtration n <= 6, Rees dimensions n <= 9".into())
}

fn criterion_4() -> Outcome {
    for r in 1..=8 {
        if !p_sum_vanishes(r) {
            return Err(format!("sum of p(eta^i) nonzero at r={r}"));
        }
        if !c_vs_p_identity(r) {
            return Err(format!("c(q) = r(p(q/eta) - p(q)) fails at r={r}"));
        }
    }
    Ok("r <= 8".into())
}

fn criterion_5() -> Outcome {
    let mut checks = 0;
    for r in 1..=3 {
        for n in 1..=5 {
            let rep = verify(Suite::Hecke, Params::new(n, r)).map_err(|e| e.to_string())?;
            for c in &rep.checks {
                let optional = c.status == Status::Skipped && c.name.starts_with("control");
                if c.status != Status::Pass && !optional {
                    return Err(format!(
                        "n={n} r={r}: {}: {}",
                        c.name,
                        c.witness.as_deref().unwrap_or("")
                    ));
                }
            }
            checks += rep.checks.len();
        }
    }
    Ok(format!("{checks} checks, n <= 5, r <= 3"))
}

fn criterion_6() -> Outcome {
    let mut checks = 0;
    for r in 1..=3 {
        for n in 1..=4 {
            checks += all_pass(Suite::Wreath, Params::new(n, r))?;
        }
    }
    Ok(format!("{checks} checks, n <= 4, r <= 3"))
}

fn criterion_7() -> Outcome {
    let mut checks = 0;
    for r in 1..=4 {
        let rep = verify(Suite::CoulombRank1, Params::new(1, r)).map_err(|e| e.to_string())?;
        if let Some(c) = rep.checks.iter().find(|c| c.status != Status::Pass) {
            return Err(format!("r={r}: {}", c.name));
        }
        if !rep.checks[0].name.contains("stated orientation") {
            return Err(format!("r={r}: {}", rep.checks[0].name));
        }
        checks += rep.checks.len();
    }
    Ok(format!("{checks} checks, r <= 4, stated orientation"))
}

fn criterion_8() -> Outcome {
    let cases: Vec<(u32, u32)> = (1..=4)
        .map(|n| (n, 1))
        .chain((1..=3).map(|n| (n, 2)))
        .chain((1..=2).map(|n| (n, 3)))
        .collect();
    for &(n, r) in &cases {
        all_pass(Suite::Appendix, Params::new(n as usize, r))?;
        let q = fixed_point_quotient(n, r, spanning_bound(n, r) + 2).map_err(|e| e.to_string())?;
        if q.dimension() as u64 != q.expected() || !q.canonical_independent() {
            return Err(format!(
                "n={n} r={r}: dimension {} vs {}",
                q.dimension(),
                q.expected()
            ));
        }
    }
    for n in 0..=5 {
        for r in 1..=3 {
            hat_round_trip(n, r).map_err(|e| format!("n={n} r={r}: {e}"))?;
        }
    }
    Ok(format!(
        "{} (n, r) cases; hat bijections n <= 5, r <= 3",
        cases.len()
    ))
}

fn criterion_9() -> Outcome {
    let mut points = 0;
    let mut controls = 0;
    for r in 1..=3 {
        for n in 1..=4 {
            let mut p = Params::new(n, r);
            p.seed = 20_240;
            let rep = verify(Suite::Dimensions, p).map_err(|e| e.to_string())?;
            if let Some(c) = rep.checks.iter().find(|c| c.status != Status::Pass) {
                return Err(format!(
                    "n={n} r={r}: {}: {}",
                    c.name,
                    c.witness.as_deref().unwrap_or("")
                ));
            }
            points += rep
                .checks
                .iter()
                .filter(|c| c.name.ends_with("fixed points separated"))
                .count();
            controls += rep
                .checks
                .iter()
                .filter(|c| c.name.starts_with("control"))
                .count();
        }
    }
    if points < 20 * 12 {
        return Err(format!("only {points} sampled points"));
    }
    Ok(format!(
        "{points} generic points, {controls} degenerate controls fail separation"
    ))
}

fn run_cli(args: &[&str], out: &std::path::Path) -> Result<(Vec<u8>, Vec<u8>), String> {
    let res = Command::new(env!("CARGO_BIN_EXE_gieseker"))
        .args(args)
        .arg("--out")
        .arg(out)
        .output()
        .map_err(|e| e.to_string())?;
    if !res.status.success() {
        return Err(format!("{args:?} exited with {}", res.status));
    }
    let json = std::fs::read(out).map_err(|e| e.to_string())?;
    Ok((json, res.stdout))
}

fn criterion_10() -> Outcome {
    let dir = std::env::temp_dir().join(format!("gieseker-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let runs: [&[&str]; 3] = [
        &[
            "verify",
            "dimensions",
            "--n",
            "3",
            "--r",
            "2",
            "--seed",
            "7",
        ],
        &[
            "verify", "appendix", "--n", "2", "--r", "2", "--cutoff", "8",
        ],
        &[
            "verify",
            "coulomb-rank1",
            "--n",
            "1",
            "--r",
            "2",
            "--seed",
            "3",
        ],
    ];
    for args in runs {
        let a = run_cli(args, &dir.join("a.json"))?;
        let b = run_cli(args, &dir.join("b.json"))?;
        if a != b {
            return Err(format!("{args:?} produced different reports"));
        }
        serde_json_check(&a.0)?;
    }
    std::fs::remove_dir_all(&dir).ok();
    Ok(format!(
        "{} invocations repeated byte-identically",
        runs.len()
    ))
}

fn serde_json_check(bytes: &[u8]) -> Result<(), String> {
    let text = std::str::from_utf8(bytes).map_err(|e| e.to_string())?;
    if text.starts_with("{\n  \"schema\": 1,") {
        Ok(())
    } else {
        Err("report does not start with the schema field".into())
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("main theorem on generators", criterion_1),
        ("Calogero-Moser spectrum", criterion_2),
        ("symmetric group chain", criterion_3),
        ("parameter identities", criterion_4),
        ("cyclotomic Hecke relations", criterion_5),
        ("wreath product irreducibles", criterion_6),
        ("rank-one Coulomb relations", criterion_7),
        ("appendix dimension", criterion_8),
        ("generic fiber dimension", criterion_9),
        ("determinism", criterion_10),
    ];
    let mut failed = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = f();
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!(
                "criterion {:>2} PASS {title}: {detail} ({secs:.1} s)",
                i + 1
            ),
            Err(w) => {
                failed += 1;
                println!("criterion {:>2} FAIL {title}: {w} ({secs:.1} s)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
