use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use super::WreathError;
use crate::exact::{rat, CycloNum, Ring};
use crate::symcenter::Perm;

/// Element `ε^colors · σ` of `S_n ⋉ (Z/r)^n`, acting on `C^n` as a monomial
/// matrix: `σ` permutes coordinates, then slot `k` is scaled by `η^{colors[k]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredPerm {
    perm: Perm,
    colors: Vec<u32>,
    r: u32,
}

impl ColoredPerm {
    pub fn new(perm: Perm, colors: Vec<u32>, r: u32) -> Result<Self, WreathError> {
        if r == 0 || colors.len() != perm.n() || colors.iter().any(|&c| c >= r) {
            return Err(WreathError::BadColors);
        }
        Ok(ColoredPerm { perm, colors, r })
    }

    pub fn identity(n: usize, r: u32) -> Self {
        ColoredPerm {
            perm: Perm::identity(n),
            colors: vec![0; n],
            r,
        }
    }

    /// Uncolored permutation.
    pub fn from_perm(perm: Perm, r: u32) -> Self {
        let n = perm.n();
        ColoredPerm {
            perm,
            colors: vec![0; n],
            r,
        }
    }

    /// `ε_j^power`, zero-based slot `j`.
    pub fn eps(n: usize, r: u32, j: usize, power: i64) -> Self {
        let mut colors = vec![0; n];
        colors[j] = power.rem_euclid(r as i64) as u32;
        ColoredPerm {
            perm: Perm::identity(n),
            colors,
            r,
        }
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// `(σ, a)(τ, b) = (στ, a + b∘σ⁻¹)`.
    pub fn compose(&self, other: &Self) -> Self {
        let inv = self.perm.inverse();
        let colors = (0..self.n())
            .map(|k| (self.colors[k] + other.colors[inv.apply(k)]) % self.r)
            .collect();
        ColoredPerm {
            perm: self.perm.compose(&other.perm),
            colors,
            r: self.r,
        }
    }

    pub fn inverse(&self) -> Self {
        // (σ, a)⁻¹ = (σ⁻¹, -a∘σ)
        let colors = (0..self.n())
            .map(|k| (self.r - self.colors[self.perm.apply(k)]) % self.r)
            .collect();
        ColoredPerm {
            perm: self.perm.inverse(),
            colors,
            r: self.r,
        }
    }

    /// All `n! r^n` elements.
    pub fn all(n: usize, r: u32) -> Vec<Self> {
        let perms = crate::symcenter::all_perms(n);
        let total = (r as usize).pow(n as u32);
        let mut out = Vec::with_capacity(perms.len() * total);
        for p in perms {
            for mut code in 0..total {
                let mut colors = vec![0; n];
                for c in colors.iter_mut() {
                    *c = (code % r as usize) as u32;
                    code /= r as usize;
                }
                out.push(ColoredPerm {
                    perm: p.clone(),
                    colors,
                    r,
                });
            }
        }
        out
    }
}

impl fmt::Display for ColoredPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.perm)?;
        for (k, c) in self.colors.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Finitely supported element of `Q(ζ_r) Γ_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct WreathAlgebraElement {
    n: usize,
    r: u32,
    terms: BTreeMap<ColoredPerm, CycloNum>,
}

impl WreathAlgebraElement {
    pub fn zero(n: usize, r: u32) -> Self {
        WreathAlgebraElement {
            n,
            r,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(g: &ColoredPerm) -> Self {
        Self::monomial(g, CycloNum::constant(rat(1, 1)))
    }

    pub fn monomial(g: &ColoredPerm, c: CycloNum) -> Self {
        let mut e = Self::zero(g.n(), g.r());
        e.add_term(g.clone(), c);
        e
    }

    pub fn identity(n: usize, r: u32) -> Self {
        Self::basis(&ColoredPerm::identity(n, r))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ColoredPerm, &CycloNum)> {
        self.terms.iter()
    }

    pub fn coeff(&self, g: &ColoredPerm) -> CycloNum {
        self.terms.get(g).cloned().unwrap_or_else(CycloNum::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, g: ColoredPerm, c: CycloNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(g) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().plus(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&CycloNum::constant(rat(-1, 1))))
    }

    pub fn scale(&self, c: &CycloNum) -> Self {
        let mut out = Self::zero(self.n, self.r);
        for (g, v) in &self.terms {
            out.add_term(g.clone(), v.times(c));
        }
        out
    }

    /// Convolution.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n, self.r);
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                out.add_term(g.compose(h), a.times(b));
            }
        }
        out
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.mul(other) == other.mul(self)
    }
}

/// `ζ_{ij} = (1/r) Σ_p ε_i^p ε_j^{-p}`, one-based `i ≠ j`.
pub fn zeta_projector(
    i: usize,
    j: usize,
    n: usize,
    r: u32,
) -> Result<WreathAlgebraElement, WreathError> {
    if i == j || i == 0 || j == 0 || i > n || j > n {
        return Err(WreathError::BadIndices { i, j, n });
    }
    let mut out = WreathAlgebraElement::zero(n, r);
    let w = CycloNum::constant(rat(1, r as i64));
    for p in 0..r as i64 {
        let g = ColoredPerm::eps(n, r, i - 1, p).compose(&ColoredPerm::eps(n, r, j - 1, -p));
        out = out.add(&WreathAlgebraElement::monomial(&g, w.clone()));
    }
    Ok(out)
}

/// `JM_{Γ,i} = Σ_{j<i} ζ_{ij} (i j)`, one-based `i`.
pub fn wreath_jm(i: usize, n: usize, r: u32) -> Result<WreathAlgebraElement, WreathError> {
    if i == 0 || i > n {
        return Err(WreathError::BadIndices { i, j: i, n });
    }
    let mut out = WreathAlgebraElement::zero(n, r);
    for j in 1..i {
        let t = WreathAlgebraElement::basis(&ColoredPerm::from_perm(
            Perm::transposition(n, j - 1, i - 1),
            r,
        ));
        out = out.add(&zeta_projector(i, j, n, r)?.mul(&t));
    }
    Ok(out)
}

/// `e = |Γ_n|⁻¹ Σ_g g`.
pub fn symmetrizer(n: usize, r: u32) -> WreathAlgebraElement {
    let all = ColoredPerm::all(n, r);
    let w = CycloNum::constant(rat(1, all.len() as i64));
    let mut out = WreathAlgebraElement::zero(n, r);
    for g in all {
        out.add_term(g, w.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcenter::jm_element;

    #[test]
    fn group_law() {
        for (n, r) in [(2, 2), (3, 2), (2, 3)] {
            let all = ColoredPerm::all(n, r);
            assert_eq!(
                all.len(),
                crate::symcenter::factorial(n) * (r as usize).pow(n as u32)
            );
            let id = ColoredPerm::identity(n, r);
            for g in &all {
                assert_eq!(g.compose(&g.inverse()), id);
                assert_eq!(g.inverse().compose(g), id);
            }
            for g in all.iter().step_by(3) {
                for h in all.iter().step_by(5) {
                    for k in all.iter().step_by(7) {
                        assert_eq!(g.compose(h).compose(k), g.compose(&h.compose(k)));
                    }
                }
            }
            // s_i ε_i s_i = ε_{i+1}
            for i in 0..n - 1 {
                let s = ColoredPerm::from_perm(Perm::transposition(n, i, i + 1), r);
                let e = ColoredPerm::eps(n, r, i, 1);
                assert_eq!(s.compose(&e).compose(&s), ColoredPerm::eps(n, r, i + 1, 1));
            }
        }
    }

    #[test]
    fn zeta_examples() {
        assert_eq!(
            zeta_projector(1, 2, 2, 1).unwrap(),
            WreathAlgebraElement::identity(2, 1)
        );
        let z = zeta_projector(1, 2, 2, 2).unwrap();
        let g = ColoredPerm::new(Perm::identity(2), vec![1, 1], 2).unwrap();
        let half = CycloNum::constant(rat(1, 2));
        let expect = WreathAlgebraElement::identity(2, 2)
            .scale(&half)
            .add(&WreathAlgebraElement::monomial(&g, half.clone()));
        assert_eq!(z, expect);
        assert!(zeta_projector(1, 1, 2, 2).is_err());
        for n in 2..=3 {
            for r in 1..=4 {
                for i in 1..=n {
                    for j in 1..=n {
                        if i != j {
                            let z = zeta_projector(i, j, n, r).unwrap();
                            assert_eq!(z.mul(&z), z);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn jm_reduces_to_symmetric_group_and_commutes() {
        assert!(wreath_jm(1, 3, 2).unwrap().is_zero());
        for n in 1..=4 {
            for i in 1..=n {
                let w = wreath_jm(i, n, 1).unwrap();
                let s = jm_element(i, n).unwrap();
                for (g, c) in w.terms() {
                    assert_eq!(c.as_rational().unwrap(), s.coeff(g.perm()).clone());
                }
                assert_eq!(w.terms().count(), s.support().len());
            }
        }
        for n in 2..=4 {
            for r in 1..=3 {
                let jms: Vec<_> = (1..=n).map(|i| wreath_jm(i, n, r).unwrap()).collect();
                for a in 0..n {
                    for b in a + 1..n {
                        assert!(jms[a].commutes_with(&jms[b]), "n={n} r={r}");
                    }
                }
            }
        }
    }

    #[test]
    fn symmetrizer_is_idempotent() {
        for (n, r) in [(1, 3), (2, 2), (2, 3)] {
            let e = symmetrizer(n, r);
            assert_eq!(e.mul(&e), e);
        }
    }
}
