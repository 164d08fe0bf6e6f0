use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::{Field, Rational, Ring};

/// Ordered list of variable names shared by a family of polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        Vars(names.into_iter().map(Into::into).collect::<Vec<_>>().into())
    }

    /// No variables: the coefficient field itself.
    pub fn none() -> Self {
        Vars::new(Vec::<String>::new())
    }

    /// `kappa, a1, ..., a(r-1)`; `a_r` is eliminated through `a_1 + ... + a_r = 0`.
    pub fn kappa_a(r: u32) -> Self {
        Vars::new(std::iter::once("kappa".to_string()).chain((1..r).map(|i| format!("a{i}"))))
    }

    /// `kappa, c1, ..., c(r-1)`.
    pub fn kappa_c(r: u32) -> Self {
        Vars::new(std::iter::once("kappa".to_string()).chain((1..r).map(|i| format!("c{i}"))))
    }

    /// `hbar, c1, ..., c(r-1)`.
    pub fn hbar_c(r: u32) -> Self {
        Vars::new(std::iter::once("hbar".to_string()).chain((1..r).map(|i| format!("c{i}"))))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }
}

/// Sparse multivariate polynomial with exact coefficients.
///
/// Terms are keyed by exponent vectors (one entry per variable, lexicographic
/// order with the first variable most significant). Zero coefficients are
/// never stored. A polynomial with an empty variable list is a bare constant
/// and adapts to the variables of whatever it is combined with.
#[derive(Clone, Debug)]
pub struct ParamPoly<C> {
    vars: Vars,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Field> ParamPoly<C> {
    pub fn zero_in(vars: &Vars) -> Self {
        ParamPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant_in(vars: &Vars, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; vars.len()], c);
        }
        ParamPoly {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn constant(c: C) -> Self {
        Self::constant_in(&Vars::none(), c)
    }

    pub fn var(vars: &Vars, idx: usize) -> Self {
        assert!(idx < vars.len(), "variable index out of range");
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        Self::monomial(vars, e, C::one())
    }

    pub fn var_named(vars: &Vars, name: &str) -> Self {
        let idx = vars
            .index_of(name)
            .unwrap_or_else(|| panic!("unknown variable {name}"));
        Self::var(vars, idx)
    }

    pub fn monomial(vars: &Vars, exps: Vec<u32>, c: C) -> Self {
        assert_eq!(exps.len(), vars.len());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        ParamPoly {
            vars: vars.clone(),
            terms,
        }
    }

    /// Build from `(exponents, coefficient)` pairs, summing duplicates.
    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Vec<u32>, C)>) -> Self {
        let mut out = Self::zero_in(vars);
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.terms
            .iter()
            .find(|(e, _)| e.iter().all(|&x| x == 0))
            .map(|(_, c)| c.clone())
            .unwrap_or_else(C::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    fn add_term(&mut self, e: Vec<u32>, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().plus(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Re-expresses `self` over `vars`, which must contain all variables
    /// that actually occur in `self`.
    pub fn with_vars(&self, vars: &Vars) -> Self {
        if &self.vars == vars {
            return self.clone();
        }
        let map: Vec<usize> = self
            .vars
            .names()
            .iter()
            .map(|n| vars.index_of(n).unwrap_or(usize::MAX))
            .collect();
        let mut out = Self::zero_in(vars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; vars.len()];
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let j = map[i];
                assert!(
                    j != usize::MAX,
                    "variable {} not available",
                    self.vars.names()[i]
                );
                ne[j] = x;
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        if self.vars == other.vars {
            (self.clone(), other.clone())
        } else if self.vars.is_empty() {
            (self.with_vars(&other.vars), other.clone())
        } else if other.vars.is_empty() {
            (self.clone(), other.with_vars(&self.vars))
        } else {
            panic!(
                "polynomials over different variables: {:?} vs {:?}",
                self.vars.names(),
                other.vars.names()
            )
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero_in(&self.vars);
        }
        ParamPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.clone(), x.times(c)))
                .collect(),
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, idx: usize) -> u32 {
        self.terms.keys().map(|e| e[idx]).max().unwrap_or(0)
    }

    /// True when every term has the same total degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// Evaluates at a point given as one value per variable.
    pub fn eval(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.vars.len(), "point has wrong dimension");
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = t.times(&x.pow(k));
                }
            }
            acc = acc.plus(&t);
        }
        acc
    }

    /// Substitutes `images[i]` for the `i`-th variable; all images share one
    /// target variable list.
    pub fn compose(&self, images: &[ParamPoly<C>]) -> ParamPoly<C> {
        assert_eq!(images.len(), self.vars.len());
        let target = images
            .iter()
            .map(|p| p.vars.clone())
            .find(|v| !v.is_empty())
            .unwrap_or_else(Vars::none);
        let mut acc = ParamPoly::zero_in(&target);
        for (e, c) in &self.terms {
            let mut t = ParamPoly::constant_in(&target, c.clone());
            for (img, &k) in images.iter().zip(e) {
                if k > 0 {
                    t = t.times(&img.pow(k));
                }
            }
            acc = acc.plus(&t);
        }
        acc
    }

    /// Changes coefficient type.
    pub fn map_coeffs<D: Field>(&self, f: impl Fn(&C) -> D) -> ParamPoly<D> {
        ParamPoly::from_terms(
            &self.vars,
            self.terms.iter().map(|(e, c)| (e.clone(), f(c))),
        )
    }

    /// Multiplies the coefficient of each term by `f(exponents)`.
    pub fn map_terms(&self, f: impl Fn(&[u32], &C) -> C) -> Self {
        ParamPoly::from_terms(
            &self.vars,
            self.terms.iter().map(|(e, c)| (e.clone(), f(e, c))),
        )
    }

    fn leading(&self) -> Option<(&Vec<u32>, &C)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.leading().map(|(_, c)| c)
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn try_div(&self, divisor: &Self) -> Option<Self> {
        let (mut rem, d) = self.aligned(divisor);
        let vars = rem.vars.clone();
        let (lde, ldc) = {
            let (e, c) = d.leading()?;
            (e.clone(), c.inverse()?)
        };
        let mut quot = Self::zero_in(&vars);
        while let Some((e, c)) = rem.leading() {
            if !e.iter().zip(&lde).all(|(a, b)| a >= b) {
                return None;
            }
            let qe: Vec<u32> = e.iter().zip(&lde).map(|(a, b)| a - b).collect();
            let qc = c.times(&ldc);
            let step = Self::monomial(&vars, qe, qc);
            rem = rem.minus(&step.times(&d));
            quot = quot.plus(&step);
        }
        Some(quot)
    }
}

impl<C: Field> PartialEq for ParamPoly<C> {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        if self.terms.is_empty() && other.terms.is_empty() {
            return true;
        }
        let (a, b) = self.aligned(other);
        a.terms == b.terms
    }
}

impl<C: Field> Ring for ParamPoly<C> {
    fn zero() -> Self {
        Self::zero_in(&Vars::none())
    }
    fn one() -> Self {
        Self::constant(C::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        let (mut a, b) = self.aligned(other);
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }
    fn times(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let mut out = Self::zero_in(&a.vars);
        for (e1, c1) in &a.terms {
            for (e2, c2) in &b.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                out.add_term(e, c1.times(c2));
            }
        }
        out
    }
    fn negate(&self) -> Self {
        ParamPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.negate()))
                .collect(),
        }
    }
    fn from_int(v: i64) -> Self {
        Self::constant(C::from_int(v))
    }
}

impl<C: Field> fmt::Display for ParamPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| {
                    let name = &self.vars.names()[i];
                    if x == 1 {
                        name.clone()
                    } else {
                        format!("{name}^{x}")
                    }
                })
                .collect();
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            let body = if mono.is_empty() {
                mag
            } else if mag == "1" {
                mono.join("*")
            } else {
                format!("{mag}*{}", mono.join("*"))
            };
            match (k, neg) {
                (0, true) => out.push_str(&format!("-{body}")),
                (0, false) => out.push_str(&body),
                (_, true) => out.push_str(&format!(" - {body}")),
                (_, false) => out.push_str(&format!(" + {body}")),
            }
        }
        write!(f, "{out}")
    }
}

impl ParamPoly<Rational> {
    /// Embeds a rational polynomial into `Q(zeta_r)`.
    pub fn to_cyclo(&self, order: u32) -> ParamPoly<super::CycloNum> {
        self.map_coeffs(|q| super::CycloNum::from_rational_in(order, q.clone()))
    }
}
