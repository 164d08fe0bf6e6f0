use rayon::prelude::*;

use super::{ClassAlgebra, Perm, SymError};
use crate::combinat::{partitions, Multipartition, Partition};
use crate::exact::{elem_sym_all, int, ExactMatrix, Field, Rational, Ring};
use crate::seminormal::{reduced_word, SeminormalModule};

/// Specht module of `λ` in Young's seminormal form.
///
/// `s_i p_B = (1/d) p_B + γ p_{B'}` with `d = ct(B(i+1)) - ct(B(i))`,
/// `γ = 1` when `d > 0` and `γ = 1 - 1/d²` otherwise. Asserts the Coxeter
/// relations and that `JM_i` acts diagonally by contents.
pub fn seminormal_specht(lambda: &Partition) -> Result<SeminormalModule<Rational>, SymError> {
    let shape = Multipartition::single(lambda.clone());
    let module = SeminormalModule::build(&shape, |b, i| {
        int(1)
            .divide(&int(b.content(i + 1) - b.content(i)))
            .expect("distinct contents")
    });
    module.check_coxeter().map_err(SymError::Relation)?;
    let jms = jm_matrices(&module);
    for (i, m) in jms.iter().enumerate() {
        let expected = module.diagonal(|b| int(b.content(i)));
        if *m != expected {
            return Err(SymError::Relation(format!(
                "JM_{} is not diagonal by contents on {lambda}",
                i + 1
            )));
        }
    }
    Ok(module)
}

/// `JM_1 = 0`, `JM_{i+1} = s_i JM_i s_i + s_i`.
pub fn jm_matrices<T: Field>(module: &SeminormalModule<T>) -> Vec<ExactMatrix<T>> {
    let n = module.n();
    let mut out = Vec::with_capacity(n);
    if n == 0 {
        return out;
    }
    out.push(ExactMatrix::zeros(module.dim(), module.dim()));
    for i in 0..n - 1 {
        let s = &module.s[i];
        let next = s
            .mul(&out[i])
            .and_then(|m| m.mul(s))
            .and_then(|m| m.add(s))
            .expect("square");
        out.push(next);
    }
    out
}

/// Character of a seminormal module at a permutation.
pub fn character_at(module: &SeminormalModule<Rational>, p: &Perm) -> Rational {
    module
        .word(&reduced_word(p.images()))
        .trace()
        .expect("square")
}

/// The isomorphism from the center of `Q S_n` onto `Q^{P(n)}` sending a
/// central element to its scalars on the Specht modules.
#[derive(Clone, Debug)]
pub struct ThetaMap {
    pub n: usize,
    /// Irreducibles, in the order of [`partitions`].
    pub shapes: Vec<Partition>,
    pub dims: Vec<u64>,
    /// `chars[λ][μ] = χ_λ(μ)` at the class representatives.
    pub chars: Vec<Vec<Rational>>,
    pub classes: ClassAlgebra,
}

/// Builds Θ for `S_n`; characters are traces of seminormal matrices.
pub fn theta_map(n: usize) -> Result<ThetaMap, SymError> {
    if n > 7 {
        return Err(SymError::TooLarge { n, max: 7 });
    }
    let classes = ClassAlgebra::new(n);
    let shapes = partitions(n as u32);
    let rows: Vec<(u64, Vec<Rational>)> = shapes
        .par_iter()
        .map(|lam| {
            let module = seminormal_specht(lam)?;
            let chars = classes
                .classes
                .iter()
                .map(|mu| character_at(&module, &Perm::of_cycle_type(n, mu)))
                .collect();
            Ok((module.dim() as u64, chars))
        })
        .collect::<Result<_, SymError>>()?;
    let (dims, chars) = rows.into_iter().unzip();
    Ok(ThetaMap {
        n,
        shapes,
        dims,
        chars,
        classes,
    })
}

impl ThetaMap {
    /// `Θ(z)_λ = Σ_μ a_μ |C_μ| χ_λ(μ) / dim λ` for `z = Σ a_μ C_μ`.
    pub fn apply(&self, coords: &[Rational]) -> Vec<Rational> {
        self.chars
            .iter()
            .zip(&self.dims)
            .map(|(chi, &d)| {
                let mut acc = int(0);
                for ((a, x), &size) in coords.iter().zip(chi).zip(&self.classes.sizes) {
                    if !a.is_zero() {
                        acc = acc.plus(&a.times(x).times(&int(size as i64)));
                    }
                }
                acc.divide(&int(d as i64)).expect("positive dimension")
            })
            .collect()
    }

    /// Class-sum coordinates of the primitive idempotent
    /// `e_λ = (dim λ / n!) Σ_μ χ_λ(μ) C_μ`.
    pub fn idempotent(&self, idx: usize) -> Vec<Rational> {
        let fact: i64 = (1..=self.n as i64).product();
        let c = int(self.dims[idx] as i64)
            .divide(&int(fact))
            .expect("nonzero");
        self.chars[idx].iter().map(|x| x.times(&c)).collect()
    }

    /// Checks that Θ is a unital algebra isomorphism: bijective and
    /// multiplicative on every pair of class sums.
    pub fn check_isomorphism(&self) -> Result<(), String> {
        let alg = &self.classes;
        let k = alg.dim();
        let images: Vec<Vec<Rational>> = (0..k)
            .map(|i| {
                let mut e = vec![int(0); k];
                e[i] = int(1);
                self.apply(&e)
            })
            .collect();
        let rank = ExactMatrix::from_rows(images.clone())
            .map_err(|e| e.to_string())?
            .rank();
        if rank != k {
            return Err(format!("Θ has rank {rank}, expected {k}"));
        }
        if self.apply(&alg.unit()).iter().any(|x| *x != int(1)) {
            return Err("Θ(1) is not the unit".into());
        }
        for mu in 0..k {
            for nu in 0..k {
                let mut a = vec![int(0); k];
                a[mu] = int(1);
                let mut b = vec![int(0); k];
                b[nu] = int(1);
                let lhs = self.apply(&alg.mul(&a, &b));
                let rhs: Vec<Rational> = images[mu]
                    .iter()
                    .zip(&images[nu])
                    .map(|(x, y)| x.times(y))
                    .collect();
                if lhs != rhs {
                    return Err(format!(
                        "Θ(C_{} C_{}) differs from the product of images",
                        alg.classes[mu], alg.classes[nu]
                    ));
                }
            }
        }
        Ok(())
    }

    /// `(e_k(contents λ))_λ` for `k = 0..n`.
    pub fn content_elementary(&self) -> Vec<Vec<Rational>> {
        let per_shape: Vec<Vec<Rational>> = self
            .shapes
            .iter()
            .map(|lam| {
                let c: Vec<Rational> = crate::combinat::contents(lam)
                    .into_iter()
                    .map(int)
                    .collect();
                elem_sym_all(&c)
            })
            .collect();
        (0..=self.n)
            .map(|k| per_shape.iter().map(|e| e[k].clone()).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcenter::{all_symmetric_jm, monomial_jm};

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn trivial_and_sign_modules() {
        for n in 1..=5u32 {
            let triv = seminormal_specht(&Partition::row(n)).unwrap();
            assert!(triv.s.iter().all(|m| m.as_scalar() == Some(int(1))));
            let jm = jm_matrices(&triv);
            for (i, m) in jm.iter().enumerate() {
                assert_eq!(m.as_scalar(), Some(int(i as i64)));
            }
            let sign = seminormal_specht(&Partition::column(n)).unwrap();
            assert!(sign.s.iter().all(|m| m.as_scalar() == Some(int(-1))));
            for (i, m) in jm_matrices(&sign).iter().enumerate() {
                assert_eq!(m.as_scalar(), Some(int(-(i as i64))));
            }
        }
    }

    #[test]
    fn two_one_module() {
        let m = seminormal_specht(&p(&[2, 1])).unwrap();
        assert_eq!(m.dim(), 2);
        let jm = jm_matrices(&m);
        let e2 = jm[0]
            .mul(&jm[1])
            .unwrap()
            .add(&jm[0].mul(&jm[2]).unwrap())
            .unwrap()
            .add(&jm[1].mul(&jm[2]).unwrap())
            .unwrap();
        assert_eq!(e2.as_scalar(), Some(int(-1)));
    }

    #[test]
    fn all_specht_modules_satisfy_relations() {
        for n in 1..=6 {
            for lam in partitions(n) {
                seminormal_specht(&lam).unwrap();
            }
        }
    }

    #[test]
    fn theta_examples() {
        let theta = theta_map(3).unwrap();
        let alg = &theta.classes;
        assert_eq!(theta.apply(&alg.unit()), vec![int(1); 3]);
        let trans = alg.classes.iter().position(|c| *c == p(&[2, 1])).unwrap();
        let mut e = vec![int(0); 3];
        e[trans] = int(1);
        assert_eq!(theta.apply(&e), vec![int(3), int(0), int(-3)]);
        for i in 0..3 {
            let img = theta.apply(&theta.idempotent(i));
            let expect: Vec<Rational> = (0..3).map(|j| int((i == j) as i64)).collect();
            assert_eq!(img, expect);
        }
    }

    #[test]
    fn theta_is_an_isomorphism_with_content_law() {
        for n in 1..=5 {
            let theta = theta_map(n).unwrap();
            theta.check_isomorphism().unwrap();
            let content_e = theta.content_elementary();
            for (k, z) in all_symmetric_jm(n).iter().enumerate() {
                let coords = theta.classes.coords(z).unwrap();
                assert_eq!(theta.apply(&coords), content_e[k], "n={n} k={k}");
            }
            // monomial symmetric functions of small degree
            for d in 0..=n as u32 {
                for nu in partitions(d) {
                    let z = monomial_jm(&nu, n);
                    let got = theta.apply(&theta.classes.coords(&z).unwrap());
                    let want: Vec<Rational> = theta
                        .shapes
                        .iter()
                        .map(|lam| monomial_of_contents(&nu, &crate::combinat::contents(lam)))
                        .collect();
                    assert_eq!(got, want, "n={n} nu={nu}");
                }
            }
        }
    }

    fn monomial_of_contents(nu: &Partition, c: &[i64]) -> Rational {
        // brute force over injective placements of the parts of ν, divided
        // by the symmetry of repeated parts
        fn rec(parts: &[u32], c: &[i64], used: &mut Vec<bool>) -> i64 {
            match parts.split_first() {
                None => 1,
                Some((&e, rest)) => {
                    let mut s = 0;
                    for i in 0..c.len() {
                        if !used[i] {
                            used[i] = true;
                            s += c[i].pow(e) * rec(rest, c, used);
                            used[i] = false;
                        }
                    }
                    s
                }
            }
        }
        let total = rec(nu.parts(), c, &mut vec![false; c.len()]);
        let sym: i64 = nu
            .multiplicities()
            .iter()
            .map(|&m| (1..=m as i64).product::<i64>())
            .product();
        int(total / sym)
    }
}
