use gieseker::appendixfix::{
    fixed_point_quotient, reduction_consistency, spanning_bound, AppendixError,
};
use gieseker::calogero::{
    block_independence_check, cm_fixed_point, poly_from_roots, wilson_commutator_check,
};
use gieseker::combinat::{contents, hat_round_trip, multipartition_count, partitions};
use gieseker::efield::{
    chern_images, sample_generic_point_for, seeded_rng, separates, specialize_and_dimension,
    verify_main_theorem, ParamSubstitution,
};
use gieseker::exact::{int, Rational, Vars};
use gieseker::heckecyclo::{centrality_check, centrality_check_with, hecke_suite};
use gieseker::symcenter::{
    all_symmetric_jm, filtration_generation_check, rees_graded_dims, theta_map, ClassAlgebra,
};
use gieseker::wreath::rankone::COULOMB_RELATIONS;
use gieseker::wreath::{
    c_vs_p_identity, confluence_check, p_sum_vanishes, verify_rank_one_coulomb, wreath_suite,
};

use crate::{timed, Check, Params, Suite, UsageError};

/// Largest `n` for which the group-algebra checks of `S_n` are attempted.
const CLASS_ALGEBRA_MAX: usize = 7;
/// Largest `n` for which the conjugacy classes are enumerated.
const REES_MAX: usize = 9;
/// Sampled points in the dimension suite.
const SAMPLES: usize = 20;

type SuiteOutput = (Vec<Check>, Vec<String>, Params);

pub fn run_suite(suite: Suite, mut params: Params) -> Result<SuiteOutput, UsageError> {
    if params.r == 0 {
        return Err(UsageError::Invalid("--r must be at least 1".into()));
    }
    let mut dumps = Vec::new();
    let checks = match suite {
        Suite::MainTheorem => main_theorem(&params),
        Suite::SymmetricCenter => symmetric_center(&params),
        Suite::Calogero => calogero(&params, &mut dumps),
        Suite::Wreath => wreath(&params),
        Suite::Hecke => hecke(&params),
        Suite::Appendix => appendix(&mut params)?,
        Suite::CoulombRank1 => coulomb(&params)?,
        Suite::Dimensions => dimensions(&mut params)?,
    };
    Ok((checks, dumps, params))
}

fn main_theorem(p: &Params) -> Vec<Check> {
    let (n, r) = (p.n, p.r);
    let mut out = vec![Check::expect(
        "substitution a_i = p(eta^(i-1)) sums to zero",
        ParamSubstitution::new(r).respects_sum(),
        || "the substituted framing values do not sum to zero".into(),
    )];
    out.extend(timed(
        || {
            verify_main_theorem(n, r).map(|v| {
                v.into_iter()
                    .map(|c| {
                        let name = format!("k={} {}", c.k, c.relation);
                        match c.witness {
                            None => Check::pass(name),
                            Some(w) => Check::fail(name, w),
                        }
                    })
                    .collect()
            })
        },
        "main theorem",
    ));
    out
}

fn symmetric_center(p: &Params) -> Vec<Check> {
    let n = p.n;
    let mut out = Vec::new();
    if n <= CLASS_ALGEBRA_MAX {
        out.extend(timed(
            || -> Result<Vec<Check>, String> {
                let theta = theta_map(n).map_err(|e| e.to_string())?;
                let mut v = vec![match theta.check_isomorphism() {
                    Ok(()) => Check::pass("theta is an algebra isomorphism"),
                    Err(w) => Check::fail("theta is an algebra isomorphism", w),
                }];
                let want = theta.content_elementary();
                for (k, z) in all_symmetric_jm(n).iter().enumerate().skip(1) {
                    let coords = theta.classes.coords(z).map_err(|e| e.to_string())?;
                    let got = theta.apply(&coords);
                    v.push(Check::expect(
                        format!("theta(e_{k}(JM)) = e_{k}(contents)"),
                        got == want[k],
                        || {
                            let i = (0..got.len()).find(|&i| got[i] != want[k][i]).unwrap_or(0);
                            format!("at {}: {} vs {}", theta.shapes[i], got[i], want[k][i])
                        },
                    ));
                }
                Ok(v)
            },
            "theta",
        ));
        out.extend(timed(
            || -> Result<Vec<Check>, String> {
                let ok = filtration_generation_check(n).map_err(|e| e.to_string())?;
                let mult = ClassAlgebra::new(n).filtration_is_multiplicative();
                Ok(vec![
                    Check::expect("cycle filtration is multiplicative", mult, || {
                        "F_i F_j not inside F_(i+j)".into()
                    }),
                    Check::expect("filtration generated by e_mu(JM)", ok, || {
                        "rank mismatch in some F_2m".into()
                    }),
                ])
            },
            "filtration",
        ));
    } else {
        let why = format!("n > {CLASS_ALGEBRA_MAX}");
        out.push(Check::skipped(
            "theta is an algebra isomorphism",
            why.clone(),
        ));
        out.push(Check::skipped("filtration generated by e_mu(JM)", why));
    }
    if n <= REES_MAX {
        out.extend(timed(
            || -> Result<Vec<Check>, String> {
                let got = rees_graded_dims(n);
                let mut want = vec![0usize; n.max(1)];
                for lam in partitions(n as u32) {
                    want[n - lam.len()] += 1;
                }
                Ok(vec![Check::expect(
                    "Rees graded dimensions count partitions by n - length",
                    got == want,
                    || format!("{got:?} vs {want:?}"),
                )])
            },
            "rees",
        ));
    } else {
        out.push(Check::skipped(
            "Rees graded dimensions count partitions by n - length",
            format!("n > {REES_MAX}"),
        ));
    }
    out
}

fn calogero(p: &Params, dumps: &mut Vec<String>) -> Vec<Check> {
    let n = p.n;
    let mut out = Vec::new();
    for lam in partitions(n as u32) {
        let pair = match cm_fixed_point(&lam) {
            Ok(x) => x,
            Err(e) => {
                out.push(Check::fail(format!("{lam} construction"), e.to_string()));
                continue;
            }
        };
        out.extend(timed(
            || -> Result<Vec<Check>, gieseker::calogero::CalogeroError> {
                let cp = pair.yx_charpoly()?;
                let want = poly_from_roots(&contents(&lam));
                let rank = pair.cm_rank()?;
                let blocks = block_independence_check(&pair)?;
                let relaxed = pair.relaxed_blocks().count();
                Ok(vec![
                    Check::expect(
                        format!("{lam} charpoly(YX) = prod (t - content)"),
                        cp == want,
                        || format!("coefficients {} vs {}", render(&cp), render(&want)),
                    ),
                    Check::expect(format!("{lam} rank([X,Y] - Id) = 1"), rank == 1, || {
                        format!("rank {rank}")
                    }),
                    Check::expect(format!("{lam} hook blocks decouple"), blocks, || {
                        "charpoly differs from the product over hooks".into()
                    })
                    .with_note(format!(
                        "{relaxed} off-diagonal blocks shifted by one diagonal"
                    )),
                ])
            },
            &format!("{lam}"),
        ));
        if p.dump_matrices {
            dumps.push(pair.dump());
        }
    }
    let mut bad = Vec::new();
    for m in 1..=n {
        for k in 1..=m {
            if !wilson_commutator_check(m, k).unwrap_or(false) {
                bad.push(format!("(m={m}, k={k})"));
            }
        }
    }
    out.push(Check::expect(
        "[Y(m,k), D_m] = m E_kk - Id for m <= n",
        bad.is_empty(),
        || bad.join(" "),
    ));
    out
}

fn render(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn wreath(p: &Params) -> Vec<Check> {
    let (n, r) = (p.n, p.r);
    let mut out = vec![
        Check::expect("sum of p(eta^i) vanishes", p_sum_vanishes(r), || {
            format!("r = {r}")
        }),
        Check::expect("c(q) = r(p(q/eta) - p(q))", c_vs_p_identity(r), || {
            format!("r = {r}")
        }),
    ];
    out.extend(timed(
        || {
            wreath_suite(n, r).map(|s| {
                vec![
                    Check::pass(format!(
                        "presentation and JM spectra on all {} irreducibles",
                        s.shapes
                    )),
                    Check::expect(
                        "sum of squared dimensions = n! r^n",
                        s.dim_square_sum == s.group_order,
                        || format!("{} vs {}", s.dim_square_sum, s.group_order),
                    ),
                    Check::expect("characters are orthonormal", s.orthonormal, || {
                        "inner products differ from identity".into()
                    }),
                    Check::expect("e_k(JM) acts by e_k(contents)", s.central_scalars, || {
                        "scalar mismatch".into()
                    }),
                ]
            })
        },
        "wreath irreducibles",
    ));
    out
}

fn hecke(p: &Params) -> Vec<Check> {
    let (n, r) = (p.n, p.r);
    let mut out = timed(
        || {
            hecke_suite(n, r).map(|s| {
                vec![
                    Check::pass(format!(
                        "relations and tableau-independent central scalars on {} modules",
                        s.shapes
                    ))
                    .with_note(format!("{} generic walls", s.walls)),
                    Check::expect(
                        "sum of squared dimensions = r^n n!",
                        s.dim_square_sum == s.expected_dim,
                        || format!("{} vs {}", s.dim_square_sum, s.expected_dim),
                    ),
                ]
            })
        },
        "hecke relations",
    );
    out.extend(timed(
        || {
            centrality_check(n, r).map(|ok| {
                vec![Check::expect("e_k(z) commutes with every s_i", ok, || {
                    "some commutator is nonzero".into()
                })]
            })
        },
        "centrality",
    ));
    if n >= 2 && r >= 2 {
        out.extend(timed(
            || {
                centrality_check_with(n, r, true).map(|c| {
                    vec![Check::expect(
                        "control: z_1 alone is not central",
                        !c,
                        || "z_1 commuted with every s_i".into(),
                    )]
                })
            },
            "control",
        ));
    } else {
        out.push(Check::skipped(
            "control: z_1 alone is not central",
            "z_1 is central when n < 2 or r = 1",
        ));
    }
    out
}

fn appendix(p: &mut Params) -> Result<Vec<Check>, UsageError> {
    let (n, r) = (p.n as u32, p.r);
    let bound = spanning_bound(n, r);
    let cutoff = p.cutoff.unwrap_or(bound + 2);
    p.cutoff = Some(cutoff);
    let q = match fixed_point_quotient(n, r, cutoff) {
        Ok(q) => q,
        Err(e @ AppendixError::CutoffTooSmall { .. }) => {
            return Err(UsageError::Invalid(e.to_string()))
        }
        Err(e) => return Ok(vec![Check::fail("fixed-point quotient", e.to_string())]),
    };
    let profile: Vec<String> = q
        .slices
        .iter()
        .map(|s| format!("{}:{}", s.degree, s.dim))
        .collect();
    let mut out = vec![
        Check::expect(
            format!("dimension = |P({r},{n})| = {}", q.expected()),
            q.dimension() as u64 == q.expected(),
            || format!("dimension {}", q.dimension()),
        )
        .with_note(format!("profile {} (deg x = deg y = 1)", profile.join(" "))),
        Check::expect(
            "canonical family is a basis",
            q.canonical_independent() && q.basis.len() == q.dimension(),
            || "canonical classes are dependent".into(),
        ),
        Check::expect(
            format!("no classes above the spanning bound {bound}"),
            q.vanishes_past_bound(),
            || format!("top nonzero degree {}", q.top_degree()),
        ),
    ];
    out.extend(timed(
        || {
            reduction_consistency(&q).map(|ok| {
                vec![Check::expect(
                    "spanning reduction agrees with linear algebra",
                    ok,
                    || "some monomial reduces outside the relation span".into(),
                )]
            })
        },
        "reduction",
    ));
    out.push(match hat_round_trip(n, r as usize) {
        Ok(()) => Check::pass("hat bijections round-trip"),
        Err(e) => Check::fail("hat bijections round-trip", e.to_string()),
    });
    Ok(out)
}

fn coulomb(p: &Params) -> Result<Vec<Check>, UsageError> {
    if p.n != 1 {
        return Err(UsageError::Invalid("coulomb-rank1 requires --n 1".into()));
    }
    let r = p.r;
    let mut out = timed(
        || -> Result<Vec<Check>, String> {
            let rep = verify_rank_one_coulomb(r);
            let swapped_ok = rep.swapped.is_some_and(|s| s.iter().all(|&b| b));
            let mut v: Vec<Check> = COULOMB_RELATIONS
                .iter()
                .zip(rep.stated)
                .map(|(name, ok)| {
                    Check::expect(
                        format!("{name} ({} orientation)", rep.orientation()),
                        ok || swapped_ok,
                        || format!("fails in both orientations for r = {r}"),
                    )
                })
                .collect();
            v.push(Check::expect(
                "hbar -> 0 makes r1 and r-1 commute",
                rep.commutative_limit,
                || "commutator survives at hbar = 0".into(),
            ));
            Ok(v)
        },
        "coulomb",
    );
    let trials = 40;
    let agree = confluence_check(r, trials, 8, p.seed);
    out.push(Check::expect(
        "normal form independent of rewriting order",
        agree == trials,
        || format!("{agree} of {trials} random words agree"),
    ));
    Ok(out)
}

fn parse_point(spec: &str, vars: &Vars) -> Result<Vec<Rational>, UsageError> {
    let mut vals: Vec<Option<Rational>> = vec![None; vars.len()];
    for item in spec.split(',').filter(|s| !s.trim().is_empty()) {
        let (k, v) = item.split_once('=').ok_or_else(|| {
            UsageError::Invalid(format!("expected name=value in --point, got {item:?}"))
        })?;
        let i = vars.index_of(k.trim()).ok_or_else(|| {
            UsageError::Invalid(format!(
                "unknown parameter {k:?}; expected {}",
                vars.names().join(", ")
            ))
        })?;
        let q: Rational = v
            .trim()
            .parse()
            .map_err(|_| UsageError::Invalid(format!("{v:?} is not a rational p/q")))?;
        vals[i] = Some(q);
    }
    vals.into_iter()
        .zip(vars.names())
        .map(|(v, name)| v.ok_or_else(|| UsageError::Invalid(format!("--point is missing {name}"))))
        .collect()
}

fn show_point(point: &[Rational], vars: &Vars) -> String {
    vars.names()
        .iter()
        .zip(point)
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn dimensions(p: &mut Params) -> Result<Vec<Check>, UsageError> {
    let (n, r) = (p.n, p.r);
    let vars = Vars::kappa_a(r);
    let gens = match chern_images(n, r) {
        Ok(g) => g,
        Err(e) => return Ok(vec![Check::fail("Chern images", e.to_string())]),
    };
    let mut points = Vec::new();
    if let Some(spec) = &p.point {
        let pt = parse_point(spec, &vars)?;
        p.point = Some(show_point(&pt, &vars));
        points.push(pt);
    } else {
        let mut rng = seeded_rng(p.seed);
        for _ in 0..SAMPLES {
            match sample_generic_point_for(&gens, r, &mut rng) {
                Ok(pt) => points.push(pt),
                Err(e) => return Ok(vec![Check::fail("sampling generic points", e.to_string())]),
            }
        }
    }
    let expected = multipartition_count(r as usize, n as u32) as usize;
    let mut out = Vec::new();
    for pt in &points {
        let label = show_point(pt, &vars);
        out.extend(timed(
            || -> Result<Vec<Check>, gieseker::efield::EFieldError> {
                let dim = specialize_and_dimension(&gens, pt)?;
                let sep = separates(&gens, pt)?;
                Ok(vec![
                    Check::expect(
                        format!("{label}: dimension = |P({r},{n})| = {expected}"),
                        dim == expected,
                        || format!("dimension {dim}"),
                    ),
                    Check::expect(format!("{label}: fixed points separated"), sep, || {
                        "two fixed points collide".into()
                    }),
                ])
            },
            &label,
        ));
    }
    let base = points[0].clone();
    let mut controls: Vec<(String, Vec<Rational>)> = Vec::new();
    if n >= 2 {
        let mut pt = base.clone();
        pt[0] = int(0);
        controls.push(("kappa = 0".into(), pt));
    }
    if r >= 2 {
        let mut pt = base.clone();
        if r == 2 {
            pt[1] = int(0);
        } else {
            pt[2] = pt[1].clone();
        }
        controls.push(("coincident framing values".into(), pt));
    }
    for (what, pt) in controls {
        let name = format!(
            "control {what} ({}) is not separated",
            show_point(&pt, &vars)
        );
        out.push(match separates(&gens, &pt) {
            Ok(sep) => Check::expect(name, !sep, || {
                "degenerate point separates the fixed points".into()
            }),
            Err(e) => Check::fail(name, e.to_string()),
        });
    }
    Ok(out)
}
