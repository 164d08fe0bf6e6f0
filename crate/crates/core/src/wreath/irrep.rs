use rayon::prelude::*;

use super::{wreath_jm, ColoredPerm, WreathAlgebraElement, WreathError};
use crate::combinat::{enumerate_multipartitions, Multipartition};
use crate::exact::{elem_sym_all, int, CycloNum, ExactMatrix, Field, Rational, Ring};
use crate::seminormal::{reduced_word, SeminormalModule};
use crate::symcenter::all_perms;

/// Irreducible `Γ_n`-module in seminormal form.
#[derive(Clone, Debug)]
pub struct WreathIrrep {
    pub r: u32,
    pub module: SeminormalModule<CycloNum>,
    /// `ε_1, .., ε_n`, with `ε_{i+1} = s_i ε_i s_i`.
    pub eps: Vec<ExactMatrix<CycloNum>>,
}

fn cyc(r: u32, q: i64) -> CycloNum {
    CycloNum::from_rational_in(r, int(q))
}

/// Seminormal irreducible of `Γ_n = S_n ⋉ (Z/r)^n` for an `r`-multipartition.
///
/// `s_i` swaps tableaux whose entries `i, i+1` lie in different components
/// and uses the symmetric-group rule inside one component; `ε_1` is
/// diagonal with `η^{β(B(1))}`, `β` being the one-based component.
/// The full presentation of `Γ_n` is checked, together with
/// `ε_i p_B = η^{β(B(i))} p_B` and `JM_{Γ,i} p_B = ct(B(i)) p_B`.
pub fn wreath_seminormal_irrep(shape: &Multipartition) -> Result<WreathIrrep, WreathError> {
    let r = shape.r() as u32;
    let module = SeminormalModule::build(shape, |b, i| {
        if b.component(i) == b.component(i + 1) {
            cyc(r, 1)
                .divide(&cyc(r, b.content(i + 1) - b.content(i)))
                .expect("distinct contents")
        } else {
            cyc(r, 0)
        }
    });
    module.check_coxeter().map_err(WreathError::Relation)?;
    let n = module.n();
    let beta = |b: &crate::combinat::StandardMultitableau, i: usize| b.component(i) as i64 + 1;
    let mut eps = Vec::with_capacity(n);
    if n > 0 {
        eps.push(module.diagonal(|b| CycloNum::eta_pow(r, beta(b, 0))));
        for i in 0..n - 1 {
            let s = &module.s[i];
            eps.push(s.mul(&eps[i])?.mul(s)?);
        }
    }
    let irrep = WreathIrrep { r, module, eps };
    irrep.check_presentation()?;
    for (i, e) in irrep.eps.iter().enumerate() {
        if *e != irrep.module.diagonal(|b| CycloNum::eta_pow(r, beta(b, i))) {
            return Err(WreathError::Relation(format!(
                "ε_{} has the wrong spectrum on {shape}",
                i + 1
            )));
        }
    }
    for i in 1..=n {
        let m = irrep.represent(&wreath_jm(i, n, r)?)?;
        if m != irrep.module.diagonal(|b| cyc(r, b.content(i - 1))) {
            return Err(WreathError::Relation(format!(
                "JM_{i} is not diagonal by contents on {shape}"
            )));
        }
    }
    Ok(irrep)
}

impl WreathIrrep {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn n(&self) -> usize {
        self.module.n()
    }

    /// `ε_i^r = 1`, `ε_i ε_j = ε_j ε_i`, `s_i ε_j = ε_j s_i` for `j ≠ i, i+1`.
    /// Together with the Coxeter relations and the definition of `ε_{i+1}`
    /// this is a presentation of `Γ_n`.
    pub fn check_presentation(&self) -> Result<(), WreathError> {
        let id = ExactMatrix::identity(self.dim());
        let shape = &self.module.shape;
        for (i, e) in self.eps.iter().enumerate() {
            if e.pow(self.r)? != id {
                return Err(WreathError::Relation(format!(
                    "ε_{}^r != 1 on {shape}",
                    i + 1
                )));
            }
            for f in &self.eps[i + 1..] {
                if !e.commutator(f)?.is_zero() {
                    return Err(WreathError::Relation(format!(
                        "ε_{} does not commute on {shape}",
                        i + 1
                    )));
                }
            }
            for (k, s) in self.module.s.iter().enumerate() {
                if k != i && k + 1 != i && !s.commutator(e)?.is_zero() {
                    return Err(WreathError::Relation(format!(
                        "s_{} and ε_{} do not commute on {shape}",
                        k + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// Matrix of a group element.
    pub fn element_matrix(&self, g: &ColoredPerm) -> Result<ExactMatrix<CycloNum>, WreathError> {
        let mut m = ExactMatrix::identity(self.dim());
        for (k, &c) in g.colors().iter().enumerate() {
            if c > 0 {
                m = m.mul(&self.eps[k].pow(c)?)?;
            }
        }
        Ok(m.mul(&self.module.word(&reduced_word(g.perm().images())))?)
    }

    /// Matrix of a group-algebra element.
    pub fn represent(
        &self,
        x: &WreathAlgebraElement,
    ) -> Result<ExactMatrix<CycloNum>, WreathError> {
        let mut acc = ExactMatrix::zeros(self.dim(), self.dim());
        for (g, c) in x.terms() {
            acc = acc.add(&self.element_matrix(g)?.scale(c))?;
        }
        Ok(acc)
    }

    /// Character values on every element of `Γ_n`, in the order of
    /// [`ColoredPerm::all`]. Uses that `ε^a` is diagonal.
    pub fn character_table_row(&self) -> Vec<CycloNum> {
        let n = self.n();
        let r = self.r;
        let basis = &self.module.basis;
        let perms = all_perms(n);
        let total = (r as usize).pow(n as u32);
        let mut out = Vec::with_capacity(perms.len() * total);
        for p in &perms {
            let m = self.module.word(&reduced_word(p.images()));
            for mut code in 0..total {
                let mut colors = vec![0u32; n];
                for c in colors.iter_mut() {
                    *c = (code % r as usize) as u32;
                    code /= r as usize;
                }
                let mut chi = cyc(r, 0);
                for (k, b) in basis.iter().enumerate() {
                    let d = m.get(k, k);
                    if d.is_zero() {
                        continue;
                    }
                    let e: i64 = (0..n)
                        .map(|j| colors[j] as i64 * (b.component(j) as i64 + 1))
                        .sum();
                    chi = chi.plus(&d.times(&CycloNum::eta_pow(r, e)));
                }
                out.push(chi);
            }
        }
        out
    }
}

/// Summary of the irreducibility surrogates for `Γ_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathSuite {
    pub shapes: usize,
    pub dim_square_sum: u64,
    pub group_order: u64,
    pub orthonormal: bool,
    pub central_scalars: bool,
}

/// Builds every irreducible of `Γ_n`, and checks `Σ dim² = |Γ_n|`,
/// orthonormality of characters and that `e_k(JM_Γ)` acts by
/// `e_k(contents)`.
pub fn wreath_suite(n: usize, r: u32) -> Result<WreathSuite, WreathError> {
    let shapes = enumerate_multipartitions(r as usize, n as u32);
    let irreps: Vec<WreathIrrep> = shapes
        .par_iter()
        .map(wreath_seminormal_irrep)
        .collect::<Result<_, _>>()?;
    let dim_square_sum: u64 = irreps.iter().map(|m| (m.dim() * m.dim()) as u64).sum();
    let group_order = (crate::symcenter::factorial(n) * (r as usize).pow(n as u32)) as u64;
    let rows: Vec<Vec<CycloNum>> = irreps
        .par_iter()
        .map(WreathIrrep::character_table_row)
        .collect();
    let inv_order = Rational::new(1.into(), (group_order as i64).into());
    let orthonormal = (0..rows.len()).into_par_iter().all(|a| {
        (0..rows.len()).all(|b| {
            let conj: Vec<CycloNum> = rows[b].iter().map(CycloNum::conj).collect();
            let mut acc = cyc(r, 0);
            for (x, y) in rows[a].iter().zip(&conj) {
                acc = acc.plus(&x.times(y));
            }
            acc.scale(&inv_order) == cyc(r, (a == b) as i64)
        })
    });
    let jms: Vec<WreathAlgebraElement> = (1..=n)
        .map(|i| wreath_jm(i, n, r))
        .collect::<Result<_, _>>()?;
    let mut e = vec![WreathAlgebraElement::identity(n, r)];
    e.extend((1..=n).map(|_| WreathAlgebraElement::zero(n, r)));
    for jm in &jms {
        for k in (1..e.len()).rev() {
            let t = e[k - 1].mul(jm);
            e[k] = e[k].add(&t);
        }
    }
    let central_scalars = irreps
        .par_iter()
        .map(|m| -> Result<bool, WreathError> {
            let contents: Vec<CycloNum> = m
                .module
                .shape
                .cells()
                .map(|(_, i, j)| cyc(r, j as i64 - i as i64))
                .collect();
            let want = elem_sym_all(&contents);
            for (k, ek) in e.iter().enumerate() {
                if m.represent(ek)?.as_scalar() != Some(want[k].clone()) {
                    return Ok(false);
                }
            }
            Ok(true)
        })
        .collect::<Result<Vec<bool>, _>>()?
        .into_iter()
        .all(|b| b);
    Ok(WreathSuite {
        shapes: shapes.len(),
        dim_square_sum,
        group_order,
        orthonormal,
        central_scalars,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_dimensional_examples() {
        let m = wreath_seminormal_irrep(&"2|∅".parse().unwrap()).unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(m.eps[0].as_scalar(), Some(CycloNum::eta(2)));
        assert_eq!(m.module.s[0].as_scalar(), Some(cyc(2, 1)));
        let m = wreath_seminormal_irrep(&"1|1".parse().unwrap()).unwrap();
        assert_eq!(m.dim(), 2);
        let mut ev: Vec<String> = m.eps[0]
            .diagonal_entries()
            .iter()
            .map(|x| x.to_string())
            .collect();
        ev.sort();
        assert_eq!(ev, vec!["-1", "1"]);
    }

    #[test]
    fn suite_small() {
        for (n, r) in [(1, 1), (2, 2), (3, 2), (2, 3)] {
            let s = wreath_suite(n, r).unwrap();
            assert_eq!(s.dim_square_sum, s.group_order);
            assert!(s.orthonormal && s.central_scalars, "n={n} r={r}");
        }
    }
}
