//! Degenerate cyclotomic Hecke algebras through seminormal modules over the
//! field of rational functions in `κ, a_1, .., a_r`.
//!
//! On the module attached to an `r`-multipartition, `z_i` acts diagonally
//! on `p_B` by `κ ct(B(i)) + a_{β(B(i))}` and `s_i` by the seminormal rule
//! with `α = κ / (z_{i+1} - z_i)`. The relations
//! `s_i z_j = z_{s_i(j)} s_i + κ(δ_{i+1,j} - δ_{i,j})`, the Coxeter relations
//! and `∏ (z_1 - a_i) = 0` are checked exactly.

use rayon::prelude::*;

use crate::combinat::{enumerate_multipartitions, Multipartition, StandardMultitableau};
use crate::exact::{
    elem_sym_all, int, ExactError, ExactMatrix, Field, ParamPoly, RatFunc, Rational, Ring, Vars,
};
use crate::seminormal::SeminormalModule;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HeckeError {
    #[error("k = {k} out of range 1..={n}")]
    DegreeOutOfRange { k: usize, n: usize },
    #[error("relation check failed: {0}")]
    Relation(String),
    #[error("e_{k}(z) does not act by a scalar on {shape}")]
    NotScalar { k: usize, shape: String },
    #[error(transparent)]
    Matrix(#[from] ExactError),
}

/// Variables `kappa, a1, .., ar` with no relation among the `a_i`.
pub fn hecke_vars(r: u32) -> Vars {
    Vars::new(std::iter::once("kappa".to_string()).chain((1..=r).map(|i| format!("a{i}"))))
}

/// Seminormal module of the degenerate cyclotomic Hecke algebra.
#[derive(Clone, Debug)]
pub struct HeckeModule {
    pub r: u32,
    pub vars: Vars,
    pub module: SeminormalModule<RatFunc>,
    /// `z[i]` holds the eigenvalue of `z_{i+1}` on each basis vector.
    pub z: Vec<Vec<ParamPoly<Rational>>>,
}

fn z_value(vars: &Vars, b: &StandardMultitableau, i: usize) -> ParamPoly<Rational> {
    ParamPoly::var(vars, 0)
        .scale(&int(b.content(i)))
        .plus(&ParamPoly::var(vars, b.component(i) + 1))
}

/// Builds the module of `shape` and checks all defining relations.
pub fn hecke_seminormal_module(shape: &Multipartition) -> Result<HeckeModule, HeckeError> {
    let r = shape.r() as u32;
    let vars = hecke_vars(r);
    let kappa = RatFunc::from_poly(ParamPoly::var(&vars, 0));
    let module = SeminormalModule::build(shape, |b, i| {
        let d = z_value(&vars, b, i + 1).minus(&z_value(&vars, b, i));
        kappa
            .divide(&RatFunc::from_poly(d))
            .expect("distinct eigenvalues")
    });
    let n = module.n();
    let z = (0..n)
        .map(|i| module.basis.iter().map(|b| z_value(&vars, b, i)).collect())
        .collect();
    let m = HeckeModule { r, vars, module, z };
    m.check_relations()?;
    Ok(m)
}

impl HeckeModule {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn n(&self) -> usize {
        self.module.n()
    }

    /// Matrix of `z_{i+1}`.
    pub fn z_matrix(&self, i: usize) -> ExactMatrix<RatFunc> {
        ExactMatrix::diagonal(self.z[i].iter().cloned().map(RatFunc::from_poly).collect())
    }

    pub fn check_relations(&self) -> Result<(), HeckeError> {
        let shape = &self.module.shape;
        self.module.check_coxeter().map_err(HeckeError::Relation)?;
        let n = self.n();
        let kappa = RatFunc::from_poly(ParamPoly::var(&self.vars, 0));
        let zs: Vec<ExactMatrix<RatFunc>> = (0..n).map(|i| self.z_matrix(i)).collect();
        for (i, s) in self.module.s.iter().enumerate() {
            for j in 0..n {
                let target = if j == i {
                    i + 1
                } else if j == i + 1 {
                    i
                } else {
                    j
                };
                let lhs = s.mul(&zs[j])?;
                let mut rhs = zs[target].mul(s)?;
                let shift = if j == i + 1 {
                    kappa.clone()
                } else if j == i {
                    kappa.negate()
                } else {
                    RatFunc::zero()
                };
                if !shift.is_zero() {
                    rhs = rhs.add(&ExactMatrix::scalar(self.dim(), shift))?;
                }
                if lhs != rhs {
                    return Err(HeckeError::Relation(format!(
                        "s_{} z_{} relation fails on {shape}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        if n > 0 {
            let mut prod = ExactMatrix::identity(self.dim());
            for l in 1..=self.r as usize {
                let a = RatFunc::from_poly(ParamPoly::var(&self.vars, l));
                prod = prod.mul(&zs[0].sub(&ExactMatrix::scalar(self.dim(), a))?)?;
            }
            if !prod.is_zero() {
                return Err(HeckeError::Relation(format!(
                    "cyclotomic relation fails on {shape}"
                )));
            }
        }
        Ok(())
    }

    /// Diagonal of `e_k(z_1, .., z_n)` for `k = 0..n`.
    pub fn elementary_diagonals(&self) -> Vec<Vec<ParamPoly<Rational>>> {
        let per_vector: Vec<Vec<ParamPoly<Rational>>> = (0..self.dim())
            .map(|p| {
                let vals: Vec<ParamPoly<Rational>> =
                    self.z.iter().map(|zi| zi[p].clone()).collect();
                elem_sym_all(&vals)
            })
            .collect();
        (0..=self.n())
            .map(|k| per_vector.iter().map(|e| e[k].clone()).collect())
            .collect()
    }

    /// Nonconstant denominator factors of the `s` matrices.
    pub fn walls(&self) -> Vec<ParamPoly<Rational>> {
        let mut out: Vec<ParamPoly<Rational>> = Vec::new();
        for s in &self.module.s {
            for row in s.to_rows() {
                for x in row {
                    for (f, _) in x.denominator_factors() {
                        if !out.contains(f) {
                            out.push(f.clone());
                        }
                    }
                }
            }
        }
        out
    }
}

/// The scalar by which `e_k(z_1, .., z_n)` acts on the module of `shape`,
/// in the variables of [`hecke_vars`]. Checks that it is a scalar and that
/// it is `e_k` of `{κ c + a_β}` over the boxes.
pub fn central_scalar(k: usize, shape: &Multipartition) -> Result<ParamPoly<Rational>, HeckeError> {
    let m = hecke_seminormal_module(shape)?;
    central_scalar_of(&m, k)
}

pub fn central_scalar_of(m: &HeckeModule, k: usize) -> Result<ParamPoly<Rational>, HeckeError> {
    let n = m.n();
    if k == 0 || k > n {
        return Err(HeckeError::DegreeOutOfRange { k, n });
    }
    let diag = m.elementary_diagonals().swap_remove(k);
    let shape = m.module.shape.to_string();
    let first = diag[0].clone();
    if diag.iter().any(|d| *d != first) {
        return Err(HeckeError::NotScalar { k, shape });
    }
    let boxes: Vec<ParamPoly<Rational>> = m
        .module
        .shape
        .cells()
        .map(|(l, i, j)| {
            ParamPoly::var(&m.vars, 0)
                .scale(&int(j as i64 - i as i64))
                .plus(&ParamPoly::var(&m.vars, l + 1))
        })
        .collect();
    if elem_sym_all(&boxes)[k] != first {
        return Err(HeckeError::Relation(format!(
            "central scalar of e_{k} differs from the box formula on {shape}"
        )));
    }
    Ok(first)
}

/// `e_k(z)` (or `z_1` alone when `negative_control`) commutes with every
/// `s_i` on every module of `P(r, n)`, for all `k`.
pub fn centrality_check_with(n: usize, r: u32, negative_control: bool) -> Result<bool, HeckeError> {
    let shapes = enumerate_multipartitions(r as usize, n as u32);
    let results: Vec<bool> = shapes
        .par_iter()
        .map(|shape| -> Result<bool, HeckeError> {
            let m = hecke_seminormal_module(shape)?;
            let candidates: Vec<ExactMatrix<RatFunc>> = if negative_control {
                vec![m.z_matrix(0)]
            } else {
                m.elementary_diagonals()
                    .into_iter()
                    .skip(1)
                    .map(|d| ExactMatrix::diagonal(d.into_iter().map(RatFunc::from_poly).collect()))
                    .collect()
            };
            for c in &candidates {
                for s in &m.module.s {
                    if !c.commutator(s)?.is_zero() {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        })
        .collect::<Result<_, _>>()?;
    Ok(results.into_iter().all(|b| b))
}

pub fn centrality_check(n: usize, r: u32) -> Result<bool, HeckeError> {
    centrality_check_with(n, r, false)
}

/// Summary of the relation suite over `P(r, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeSuite {
    pub shapes: usize,
    pub dim_square_sum: u64,
    pub expected_dim: u64,
    pub walls: usize,
}

/// Builds every module of `P(r, n)` (checking its relations) and every
/// central scalar.
pub fn hecke_suite(n: usize, r: u32) -> Result<HeckeSuite, HeckeError> {
    let shapes = enumerate_multipartitions(r as usize, n as u32);
    let per: Vec<(u64, Vec<ParamPoly<Rational>>)> = shapes
        .par_iter()
        .map(|shape| {
            let m = hecke_seminormal_module(shape)?;
            for k in 1..=n {
                central_scalar_of(&m, k)?;
            }
            Ok(((m.dim() * m.dim()) as u64, m.walls()))
        })
        .collect::<Result<_, HeckeError>>()?;
    let mut walls: Vec<ParamPoly<Rational>> = Vec::new();
    for (_, w) in &per {
        for f in w {
            if !walls.contains(f) {
                walls.push(f.clone());
            }
        }
    }
    Ok(HeckeSuite {
        shapes: shapes.len(),
        dim_square_sum: per.iter().map(|(d, _)| d).sum(),
        expected_dim: (crate::symcenter::factorial(n) as u64) * (r as u64).pow(n as u32),
        walls: walls.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn one_dimensional_examples() {
        let v = hecke_vars(1);
        let kappa = ParamPoly::var(&v, 0);
        let a = ParamPoly::var(&v, 1);
        let m = hecke_seminormal_module(&mp("2")).unwrap();
        assert_eq!(m.z[0][0], a);
        assert_eq!(m.z[1][0], a.plus(&kappa));
        assert_eq!(m.module.s[0].as_scalar(), Some(RatFunc::one()));
        let m = hecke_seminormal_module(&mp("1,1")).unwrap();
        assert_eq!(m.z[1][0], a.minus(&kappa));
        assert_eq!(m.module.s[0].as_scalar(), Some(RatFunc::one().negate()));
        let m = hecke_seminormal_module(&mp("1|1")).unwrap();
        assert_eq!(m.dim(), 2);
        let v2 = hecke_vars(2);
        let mut ev = m.z[0].clone();
        ev.sort_by_key(|p| p.to_string());
        assert_eq!(ev, vec![ParamPoly::var(&v2, 1), ParamPoly::var(&v2, 2)]);
    }

    #[test]
    fn central_scalar_examples() {
        let v2 = hecke_vars(2);
        assert_eq!(
            central_scalar(1, &mp("1|∅")).unwrap(),
            ParamPoly::var(&v2, 1)
        );
        let v = hecke_vars(1);
        let kappa = ParamPoly::var(&v, 0);
        let a = ParamPoly::var(&v, 1);
        assert_eq!(
            central_scalar(1, &mp("2")).unwrap(),
            a.scale(&int(2)).plus(&kappa)
        );
        for n in 1..=4u32 {
            let want = (0..n as i64).fold(ParamPoly::one(), |acc: ParamPoly<Rational>, j| {
                acc.times(&a.minus(&kappa.scale(&int(j))))
            });
            assert_eq!(
                central_scalar(
                    n as usize,
                    &Multipartition::single(crate::combinat::Partition::column(n))
                )
                .unwrap(),
                want
            );
        }
        assert!(central_scalar(0, &mp("2")).is_err());
        assert!(central_scalar(3, &mp("2")).is_err());
    }

    #[test]
    fn centrality_and_negative_control() {
        assert!(centrality_check(2, 1).unwrap());
        assert!(centrality_check(3, 2).unwrap());
        assert!(!centrality_check_with(2, 2, true).unwrap());
        assert!(!centrality_check_with(3, 2, true).unwrap());
        // z_1 acts by a_1 when r = 1
        assert!(centrality_check_with(3, 1, true).unwrap());
    }

    #[test]
    fn suite_dimensions() {
        for n in 1..=3 {
            for r in 1..=3 {
                let s = hecke_suite(n, r).unwrap();
                assert_eq!(s.dim_square_sum, s.expected_dim);
            }
        }
    }
}
