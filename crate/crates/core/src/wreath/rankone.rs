//! The rational Cherednik algebra of `Z/r` acting on a line: generators
//! `x, y, ε` with `[x, y] = -ħ - c(ε)`, `εx = ηxε`, `εy = η⁻¹yε`, `ε^r = 1`.
//! Elements are kept in the normal form `Σ x^a y^b ε^c`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::params::p_at_eta_power;
use crate::exact::{int, rat, CycloNum, ParamPoly, Ring, Vars};

type Coeff = ParamPoly<CycloNum>;

/// Linear combination of normal words `x^a y^b ε^c`, `c < r`, with
/// coefficients polynomial in `ħ, c1, .., c(r-1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RankOneWord {
    r: u32,
    terms: BTreeMap<(u32, u32, u32), Coeff>,
}

impl RankOneWord {
    pub fn zero(r: u32) -> Self {
        RankOneWord {
            r,
            terms: BTreeMap::new(),
        }
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32, u32), &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: (u32, u32, u32)) -> Coeff {
        self.terms.get(&key).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, key: (u32, u32, u32), c: Coeff) {
        if c.is_zero() {
            return;
        }
        let key = (key.0, key.1, key.2 % self.r);
        let sum = match self.terms.remove(&key) {
            Some(old) => old.plus(&c),
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Coeff::constant(CycloNum::constant(int(-1)))))
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        let mut out = Self::zero(self.r);
        for (k, v) in &self.terms {
            out.add_term(*k, v.times(c));
        }
        out
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&Coeff) -> Coeff) -> Self {
        let mut out = Self::zero(self.r);
        for (k, v) in &self.terms {
            out.add_term(*k, f(v));
        }
        out
    }
}

impl fmt::Display for RankOneWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, ((a, b, c), v)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({v})*x^{a}*y^{b}*eps^{c}")?;
        }
        Ok(())
    }
}

/// Letters of a formal word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X,
    Y,
    Eps,
}

/// Which reducible position the rewriting engine picks next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
    /// Uniformly random among reducible positions, seeded.
    Random(u64),
}

/// Multiplication tables and rewriting for a fixed `r`.
pub struct RankOne {
    r: u32,
    vars: Vars,
    yx_memo: RefCell<HashMap<(u32, u32), RankOneWord>>,
}

impl RankOne {
    pub fn new(r: u32) -> Self {
        assert!(r >= 1);
        RankOne {
            r,
            vars: Vars::hbar_c(r),
            yx_memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    fn eta(&self, k: i64) -> CycloNum {
        CycloNum::eta_pow(self.r, k)
    }

    pub fn scalar(&self, c: Coeff) -> RankOneWord {
        self.monomial(0, 0, 0, c)
    }

    pub fn number(&self, q: crate::exact::Rational) -> RankOneWord {
        self.scalar(Coeff::constant_in(
            &self.vars,
            CycloNum::from_rational_in(self.r, q),
        ))
    }

    pub fn monomial(&self, a: u32, b: u32, c: u32, coeff: Coeff) -> RankOneWord {
        let mut w = RankOneWord::zero(self.r);
        w.add_term((a, b, c), coeff.with_vars(&self.vars));
        w
    }

    pub fn unit_monomial(&self, a: u32, b: u32, c: u32) -> RankOneWord {
        self.monomial(
            a,
            b,
            c,
            Coeff::constant_in(&self.vars, CycloNum::from_rational_in(self.r, int(1))),
        )
    }

    pub fn hbar(&self) -> Coeff {
        Coeff::var(&self.vars, 0)
    }

    pub fn c(&self, l: u32) -> Coeff {
        Coeff::var(&self.vars, l as usize)
    }

    /// Normal form of `y^b x^a`.
    fn yx(&self, b: u32, a: u32) -> RankOneWord {
        if a == 0 || b == 0 {
            return self.unit_monomial(a, b, 0);
        }
        if let Some(w) = self.yx_memo.borrow().get(&(b, a)) {
            return w.clone();
        }
        let yb = self.unit_monomial(0, b - 1, 0);
        let xa = self.unit_monomial(a - 1, 0, 0);
        // y^{b-1} (xy + ħ + Σ c_l ε^l) x^{a-1}
        let mut out = self.mul(
            &self.mul(
                &self.mul(&yb, &self.unit_monomial(1, 0, 0)),
                &self.unit_monomial(0, 1, 0),
            ),
            &xa,
        );
        out = out.add(&self.mul(&yb, &xa).scale(&self.hbar()));
        for l in 1..self.r {
            let t = self.mul(&self.mul(&yb, &self.unit_monomial(0, 0, l)), &xa);
            out = out.add(&t.scale(&self.c(l)));
        }
        self.yx_memo.borrow_mut().insert((b, a), out.clone());
        out
    }

    /// Product of normal forms.
    pub fn mul(&self, lhs: &RankOneWord, rhs: &RankOneWord) -> RankOneWord {
        let mut out = RankOneWord::zero(self.r);
        for (&(a, b, c), u) in &lhs.terms {
            for (&(a2, b2, c2), v) in &rhs.terms {
                // ε^c x^{a2} y^{b2} = η^{c(a2-b2)} x^{a2} y^{b2} ε^c
                let coef = u
                    .times(v)
                    .scale(&self.eta(c as i64 * (a2 as i64 - b2 as i64)));
                if b == 0 || a2 == 0 {
                    out.add_term((a + a2, b + b2, c + c2), coef);
                    continue;
                }
                for (&(al, be, ga), w) in &self.yx(b, a2).terms {
                    let t = coef.times(w).scale(&self.eta(-(ga as i64) * b2 as i64));
                    out.add_term((a + al, be + b2, ga + c + c2), t);
                }
            }
        }
        out
    }

    pub fn pow(&self, x: &RankOneWord, e: u32) -> RankOneWord {
        let mut acc = self.number(int(1));
        for _ in 0..e {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// Normal form of a formal word by the leftmost strategy.
    pub fn normal_form(&self, word: &[Letter]) -> RankOneWord {
        self.rewrite(word, Strategy::Leftmost)
    }

    /// Rewrites a formal word to normal form with the rules
    /// `yx → xy + ħ + c(ε)`, `εx → ηxε`, `εy → η⁻¹yε`, `ε^r → 1`.
    pub fn rewrite(&self, word: &[Letter], strategy: Strategy) -> RankOneWord {
        let one = Coeff::constant_in(&self.vars, CycloNum::from_rational_in(self.r, int(1)));
        let mut rng = match strategy {
            Strategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        };
        let mut pending: Vec<(Vec<Letter>, Coeff)> = vec![(word.to_vec(), one)];
        let mut out = RankOneWord::zero(self.r);
        while let Some((w, c)) = pending.pop() {
            let spots = self.reducible(&w);
            if spots.is_empty() {
                let a = w.iter().filter(|&&l| l == Letter::X).count() as u32;
                let b = w.iter().filter(|&&l| l == Letter::Y).count() as u32;
                let e = w.iter().filter(|&&l| l == Letter::Eps).count() as u32;
                out.add_term((a, b, e), c);
                continue;
            }
            let pos = match (strategy, rng.as_mut()) {
                (Strategy::Leftmost, _) => spots[0],
                (Strategy::Rightmost, _) => *spots.last().expect("nonempty"),
                (_, Some(g)) => spots[g.gen_range(0..spots.len())],
                _ => unreachable!(),
            };
            let (head, tail) = (&w[..pos], &w[pos..]);
            let splice = |mid: &[Letter], skip: usize| -> Vec<Letter> {
                head.iter()
                    .chain(mid)
                    .chain(&tail[skip..])
                    .copied()
                    .collect()
            };
            let eps_run = tail.len() >= self.r as usize
                && tail[..self.r as usize].iter().all(|&l| l == Letter::Eps);
            match (tail[0], tail.get(1).copied()) {
                _ if eps_run => {
                    pending.push((splice(&[], self.r as usize), c));
                }
                (Letter::Y, Some(Letter::X)) => {
                    pending.push((splice(&[Letter::X, Letter::Y], 2), c.clone()));
                    pending.push((splice(&[], 2), c.times(&self.hbar())));
                    for l in 1..self.r {
                        let eps = vec![Letter::Eps; l as usize];
                        pending.push((splice(&eps, 2), c.times(&self.c(l))));
                    }
                }
                (Letter::Eps, Some(Letter::X)) => {
                    pending.push((splice(&[Letter::X, Letter::Eps], 2), c.scale(&self.eta(1))));
                }
                (Letter::Eps, Some(Letter::Y)) => {
                    pending.push((splice(&[Letter::Y, Letter::Eps], 2), c.scale(&self.eta(-1))));
                }
                _ => unreachable!("position is reducible"),
            }
        }
        out
    }

    /// Start positions of rule matches.
    fn reducible(&self, w: &[Letter]) -> Vec<usize> {
        let r = self.r as usize;
        (0..w.len())
            .filter(|&i| {
                let pair = w.get(i + 1).map(|&n| (w[i], n));
                matches!(
                    pair,
                    Some((Letter::Y, Letter::X))
                        | Some((Letter::Eps, Letter::X))
                        | Some((Letter::Eps, Letter::Y))
                ) || (i + r <= w.len() && w[i..i + r].iter().all(|&l| l == Letter::Eps))
            })
            .collect()
    }

    fn letter(&self, l: Letter) -> RankOneWord {
        match l {
            Letter::X => self.unit_monomial(1, 0, 0),
            Letter::Y => self.unit_monomial(0, 1, 0),
            Letter::Eps => self.unit_monomial(0, 0, 1 % self.r),
        }
    }

    /// Product of the letters through [`RankOne::mul`].
    pub fn word_product(&self, word: &[Letter]) -> RankOneWord {
        word.iter().fold(self.number(int(1)), |acc, &l| {
            self.mul(&acc, &self.letter(l))
        })
    }
}

/// Rewrites `trials` random words of length `<= max_len` under three
/// strategies and through the product table; returns the number of words
/// on which all four agree.
pub fn confluence_check(r: u32, trials: usize, max_len: usize, seed: u64) -> usize {
    let alg = RankOne::new(r);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut agree = 0;
    for t in 0..trials {
        let len = rng.gen_range(0..=max_len);
        let word: Vec<Letter> = (0..len)
            .map(|_| match rng.gen_range(0..3) {
                0 => Letter::X,
                1 => Letter::Y,
                _ => Letter::Eps,
            })
            .collect();
        let left = alg.rewrite(&word, Strategy::Leftmost);
        let ok = left == alg.rewrite(&word, Strategy::Rightmost)
            && left == alg.rewrite(&word, Strategy::Random(seed ^ t as u64))
            && left == alg.word_product(&word);
        agree += ok as usize;
    }
    agree
}

/// Status of the four Coulomb-branch relations
/// `r₁r₋₁ = ∏(b - aᵢ)`, `r₋₁r₁ = ∏(b - aᵢ - ħ)`, `[r₁, b] = ħr₁`,
/// `[r₋₁, b] = -ħr₋₁`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoulombReport {
    pub r: u32,
    pub stated: [bool; 4],
    /// Only computed when the stated orientation fails.
    pub swapped: Option<[bool; 4]>,
    /// `r₁r₋₁ = r₋₁r₁` after `ħ = 0`.
    pub commutative_limit: bool,
}

impl CoulombReport {
    pub fn holds(&self) -> bool {
        self.stated.iter().all(|&b| b) || self.swapped.is_some_and(|s| s.iter().all(|&b| b))
    }

    pub fn orientation(&self) -> &'static str {
        if self.stated.iter().all(|&b| b) {
            "stated"
        } else if self.swapped.is_some_and(|s| s.iter().all(|&b| b)) {
            "swapped"
        } else {
            "none"
        }
    }
}

pub const COULOMB_RELATIONS: [&str; 4] = ["r1*r-1", "r-1*r1", "[r1,b]", "[r-1,b]"];

/// Checks the presentation of the spherical subalgebra of the rank-one
/// Cherednik algebra: `r₋₁ = e x^r e`, `r₁ = r^{-r} e y^r e`, `b = e u e`
/// with `u = (xy + ħ)/r + p(η⁻¹ε)` and `aᵢ = p(η^{i-1}) - (i-1)ħ/r`.
pub fn verify_rank_one_coulomb(r: u32) -> CoulombReport {
    let alg = RankOne::new(r);
    let vars = alg.vars().clone();
    let inv_r = rat(1, r as i64);
    let mut e = RankOneWord::zero(r);
    for p in 0..r {
        e = e.add(&alg.unit_monomial(0, 0, p).scale(&Coeff::constant_in(
            &vars,
            CycloNum::from_rational_in(r, inv_r.clone()),
        )));
    }
    let mut u = alg
        .unit_monomial(1, 1, 0)
        .add(&alg.scalar(alg.hbar()))
        .scale(&Coeff::constant_in(
            &vars,
            CycloNum::from_rational_in(r, inv_r.clone()),
        ));
    for l in 1..r {
        // p(η⁻¹ε) has ε^l with weight c_l η^{-l} / (r(η^{-l} - 1))
        let w = CycloNum::eta_pow(r, -(l as i64))
            .minus(&CycloNum::from_rational_in(r, int(1)))
            .inverse_checked()
            .times(&CycloNum::eta_pow(r, -(l as i64)))
            .scale(&inv_r);
        u = u.add(&alg.monomial(0, 0, l, alg.c(l).scale(&w)));
    }
    let sandwich = |x: &RankOneWord| alg.mul(&alg.mul(&e, x), &e);
    let b = sandwich(&u);
    let r_minus = sandwich(&alg.pow(&alg.unit_monomial(1, 0, 0), r));
    let r_plus = sandwich(&alg.pow(&alg.unit_monomial(0, 1, 0), r)).scale(&Coeff::constant_in(
        &vars,
        CycloNum::from_rational_in(r, Ring::pow(&inv_r, r)),
    ));
    let a: Vec<Coeff> = (0..r)
        .map(|i| {
            p_at_eta_power(r, i as i64, &vars)
                .expect("c variables present")
                .minus(
                    &alg.hbar()
                        .scale(&CycloNum::from_rational_in(r, rat(i as i64, r as i64))),
                )
        })
        .collect();
    let prod = |shift: &Coeff| {
        a.iter().fold(e.clone(), |acc, ai| {
            alg.mul(&acc, &b.sub(&e.scale(&ai.plus(shift))))
        })
    };
    let zero = Coeff::zero_in(&vars);
    let p0 = prod(&zero);
    let p1 = prod(&alg.hbar());
    let check = |r1: &RankOneWord, rm1: &RankOneWord| -> [bool; 4] {
        let comm = |x: &RankOneWord| alg.mul(x, &b).sub(&alg.mul(&b, x));
        [
            alg.mul(r1, rm1) == p0,
            alg.mul(rm1, r1) == p1,
            comm(r1) == r1.scale(&alg.hbar()),
            comm(rm1) == rm1.scale(&alg.hbar().negate()),
        ]
    };
    let stated = check(&r_plus, &r_minus);
    let swapped = if stated.iter().all(|&s| s) {
        None
    } else {
        Some(check(&r_minus, &r_plus))
    };
    let mut images: Vec<Coeff> = (0..vars.len()).map(|i| Coeff::var(&vars, i)).collect();
    images[0] = zero.clone();
    let at_zero = |x: &RankOneWord| x.map_coeffs(|c| c.compose(&images));
    let commutative_limit =
        at_zero(&alg.mul(&r_plus, &r_minus)) == at_zero(&alg.mul(&r_minus, &r_plus));
    CoulombReport {
        r,
        stated,
        swapped,
        commutative_limit,
    }
}

trait InverseChecked {
    fn inverse_checked(&self) -> Self;
}

impl InverseChecked for CycloNum {
    fn inverse_checked(&self) -> Self {
        crate::exact::Field::inverse(self).expect("nonzero")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::*;

    #[test]
    fn rewriting_examples() {
        let alg = RankOne::new(3);
        let mut expect = alg.unit_monomial(1, 1, 0).add(&alg.scalar(alg.hbar()));
        for l in 1..3 {
            expect = expect.add(&alg.monomial(0, 0, l, alg.c(l)));
        }
        assert_eq!(alg.normal_form(&[Y, X]), expect);
        assert_eq!(
            alg.normal_form(&[Eps, X]),
            alg.monomial(1, 0, 1, Coeff::constant_in(alg.vars(), CycloNum::eta(3)))
        );
        assert_eq!(alg.normal_form(&[Eps, Eps, Eps]), alg.number(int(1)));
        assert_eq!(alg.normal_form(&[]), alg.number(int(1)));
    }

    #[test]
    fn confluence_on_random_words() {
        for r in 1..=4 {
            assert_eq!(confluence_check(r, 1000, 7, 17 + r as u64), 1000, "r={r}");
        }
    }

    #[test]
    fn coulomb_relations() {
        for r in 1..=4 {
            let rep = verify_rank_one_coulomb(r);
            assert_eq!(rep.orientation(), "stated", "{rep:?}");
            assert!(rep.commutative_limit);
        }
    }
}
