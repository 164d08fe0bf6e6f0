//! Symmetrized-monomial model of the invariant ring `C[x, y]^{Γ_n}`, its
//! torus-degree-zero quotient `B_0 / Σ B_{-i} B_i`, and the rewriting that
//! expresses every degree-zero class through the canonical family indexed
//! by `(λ, p)`.
//!
//! A triple `(a, b, c)` stands for `x'^a y'^b z'^c` with `x' = x^r`,
//! `y' = y^r`, `z' = xy`, i.e. for the concrete exponent pair
//! `(ra + c, rb + c)`. Products are computed on concrete pairs, so the
//! relation `x'y' = z'^r` is built in.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::combinat::{admissible_pairs, multipartition_count, Multipartition};
use crate::exact::{int, Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AppendixError {
    #[error("invalid triple ({0}, {1}, {2}) for r = {3}")]
    BadTriple(u32, u32, u32, u32),
    #[error("operands live over different (n, r)")]
    Mismatch,
    #[error("r must be positive")]
    ZeroR,
    #[error("cutoff {cutoff} is below the spanning bound {bound} + 2")]
    CutoffTooSmall { cutoff: u32, bound: u32 },
    #[error("monomial {0} has nonzero torus degree")]
    NonzeroDegree(String),
}

pub type Triple = (u32, u32, u32);

/// Multiset of triples `(a, b, c)`, `c < r`, none equal to `(0, 0, 0)`.
/// The empty bag is the unit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbitMonomial {
    r: u32,
    bag: Vec<Triple>,
}

impl OrbitMonomial {
    pub fn new(r: u32, mut bag: Vec<Triple>) -> Result<Self, AppendixError> {
        if r == 0 {
            return Err(AppendixError::ZeroR);
        }
        for &(a, b, c) in &bag {
            if c >= r || (a, b, c) == (0, 0, 0) {
                return Err(AppendixError::BadTriple(a, b, c, r));
            }
        }
        bag.sort_unstable_by(|x, y| y.cmp(x));
        Ok(OrbitMonomial { r, bag })
    }

    pub fn unit(r: u32) -> Self {
        OrbitMonomial { r, bag: Vec::new() }
    }

    /// From concrete exponent pairs `(α, β)` with `α ≡ β mod r`.
    pub fn from_pairs(r: u32, pairs: &[(u32, u32)]) -> Result<Self, AppendixError> {
        let mut bag = Vec::with_capacity(pairs.len());
        for &(al, be) in pairs {
            if (al, be) == (0, 0) {
                continue;
            }
            let c = al % r;
            if be % r != c {
                return Err(AppendixError::BadTriple(al, be, c, r));
            }
            bag.push(((al - c) / r, (be - c) / r, c));
        }
        Self::new(r, bag)
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn triples(&self) -> &[Triple] {
        &self.bag
    }

    pub fn len(&self) -> usize {
        self.bag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bag.is_empty()
    }

    /// Torus degree `Σ a − Σ b`.
    pub fn degree(&self) -> i64 {
        self.bag.iter().map(|&(a, b, _)| a as i64 - b as i64).sum()
    }

    pub fn pairs(&self) -> Vec<(u32, u32)> {
        self.bag
            .iter()
            .map(|&(a, b, c)| (self.r * a + c, self.r * b + c))
            .collect()
    }

    /// `(Σα, Σβ)` over the concrete pairs.
    pub fn bidegree(&self) -> (u32, u32) {
        self.pairs()
            .iter()
            .fold((0, 0), |(s, t), &(a, b)| (s + a, t + b))
    }

    /// Total degree in `x, y`; a triple weighs `r(a + b) + 2c`.
    pub fn polynomial_degree(&self) -> u32 {
        let (s, t) = self.bidegree();
        s + t
    }

    fn without(&self, i: usize) -> Vec<Triple> {
        let mut v = self.bag.clone();
        v.remove(i);
        v
    }
}

impl fmt::Display for OrbitMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bag.is_empty() {
            return write!(f, "1");
        }
        for &(a, b, c) in &self.bag {
            if self.r == 1 {
                write!(f, "({a},{b})")?;
            } else {
                write!(f, "({a},{b},{c})")?;
            }
        }
        Ok(())
    }
}

/// Rational combination of orbit sums in `n` variable pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantElement {
    n: usize,
    r: u32,
    terms: BTreeMap<OrbitMonomial, Rational>,
}

impl InvariantElement {
    pub fn zero(n: usize, r: u32) -> Self {
        InvariantElement {
            n,
            r,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize, r: u32) -> Self {
        Self::monomial(OrbitMonomial::unit(r), n)
    }

    /// `m_Λ`, which vanishes when `ℓ(Λ) > n`.
    pub fn monomial(m: OrbitMonomial, n: usize) -> Self {
        let mut out = Self::zero(n, m.r);
        out.add_term(m, int(1));
        out
    }

    fn add_term(&mut self, m: OrbitMonomial, c: Rational) {
        if m.len() > self.n || c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn terms(&self) -> &BTreeMap<OrbitMonomial, Rational> {
        &self.terms
    }

    pub fn coeff(&self, m: &OrbitMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self, AppendixError> {
        if (self.n, self.r) != (other.n, other.r) {
            return Err(AppendixError::Mismatch);
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.n, self.r);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v.times(c));
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AppendixError> {
        self.add(&other.scale(&int(-1)))
    }
}

impl fmt::Display for InvariantElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "m_{m}")?;
            } else {
                write!(f, "{c}·m_{m}")?;
            }
        }
        Ok(())
    }
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// Number of distinct rearrangements of a padded exponent vector.
fn orbit_size(v: &[(u32, u32)]) -> u64 {
    let mut counts: HashMap<(u32, u32), usize> = HashMap::new();
    for p in v {
        *counts.entry(*p).or_default() += 1;
    }
    counts
        .values()
        .fold(factorial(v.len()), |acc, &m| acc / factorial(m))
}

/// Distinct permutations of `v`, starting from its sorted order.
fn arrangements(mut v: Vec<(u32, u32)>) -> Vec<Vec<(u32, u32)>> {
    v.sort_unstable();
    let mut out = vec![v.clone()];
    loop {
        let Some(i) = (0..v.len().saturating_sub(1))
            .rev()
            .find(|&i| v[i] < v[i + 1])
        else {
            return out;
        };
        let j = (i + 1..v.len())
            .rev()
            .find(|&j| v[j] > v[i])
            .expect("successor exists");
        v.swap(i, j);
        v[i + 1..].reverse();
        out.push(v.clone());
    }
}

fn padded(m: &OrbitMonomial, n: usize) -> Vec<(u32, u32)> {
    let mut v = m.pairs();
    v.resize(n, (0, 0));
    v
}

/// Structure constants of `m_μ m_ν` in `n` variable pairs.
///
/// The orbit sum of `μ` is expanded over all rearrangements and added to a
/// fixed representative of `ν`; each target orbit is then hit
/// `|orbit ρ| · c_ρ / |orbit ν|` times.
pub fn monomial_product(
    mu: &OrbitMonomial,
    nu: &OrbitMonomial,
    n: usize,
) -> BTreeMap<OrbitMonomial, u64> {
    let r = mu.r;
    let mut out = BTreeMap::new();
    if mu.len() > n || nu.len() > n {
        return out;
    }
    let v0 = padded(nu, n);
    let mut hits: HashMap<Vec<(u32, u32)>, u64> = HashMap::new();
    for u in arrangements(padded(mu, n)) {
        let mut w: Vec<(u32, u32)> = u
            .iter()
            .zip(&v0)
            .map(|(a, b)| (a.0 + b.0, a.1 + b.1))
            .collect();
        w.sort_unstable();
        *hits.entry(w).or_default() += 1;
    }
    let nu_orbit = orbit_size(&v0);
    for (w, h) in hits {
        let rho = orbit_size(&w);
        let total = h * nu_orbit;
        debug_assert_eq!(total % rho, 0);
        let m = OrbitMonomial::from_pairs(r, &w).expect("sums of compatible pairs stay compatible");
        out.insert(m, total / rho);
    }
    out
}

/// Product of two invariant elements.
pub fn orbit_product(
    u: &InvariantElement,
    v: &InvariantElement,
) -> Result<InvariantElement, AppendixError> {
    if (u.n, u.r) != (v.n, v.r) {
        return Err(AppendixError::Mismatch);
    }
    let mut out = InvariantElement::zero(u.n, u.r);
    for (m1, c1) in &u.terms {
        for (m2, c2) in &v.terms {
            let cc = c1.times(c2);
            for (m, k) in monomial_product(m1, m2, u.n) {
                out.add_term(m, cc.times(&int(k as i64)));
            }
        }
    }
    Ok(out)
}

/// `m̄_{(λ,p)(0,1,0)^{|λ|}}`: parts of component `i` become `(part, 0, i)`,
/// `p_c` copies of `(0, 0, c)`, and `|λ|` copies of `(0, 1, 0)`.
pub fn canonical_monomial(
    lambda: &Multipartition,
    p: &[u32],
) -> Result<OrbitMonomial, AppendixError> {
    let r = lambda.r() as u32;
    let mut bag = Vec::new();
    for (i, comp) in lambda.components().iter().enumerate() {
        bag.extend(comp.parts().iter().map(|&a| (a, 0, i as u32)));
    }
    for (k, &pc) in p.iter().enumerate() {
        bag.extend(std::iter::repeat_n((0, 0, k as u32 + 1), pc as usize));
    }
    bag.extend(std::iter::repeat_n((0, 1, 0), lambda.size() as usize));
    OrbitMonomial::new(r, bag)
}

/// The canonical family for `(n, r)`, one element per admissible `(λ, p)`.
pub fn canonical_family(n: u32, r: u32) -> Vec<OrbitMonomial> {
    admissible_pairs(r as usize, n)
        .iter()
        .map(|(l, p)| canonical_monomial(l, p).expect("canonical triples are valid"))
        .collect()
}

/// Largest polynomial degree in the canonical family.
pub fn spanning_bound(n: u32, r: u32) -> u32 {
    canonical_family(n, r)
        .iter()
        .map(OrbitMonomial::polynomial_degree)
        .max()
        .unwrap_or(0)
}

/// Orbit monomials with `ℓ <= n` and concrete bidegree `(s, t)`.
fn monomials_of_bidegree(n: usize, r: u32, s: u32, t: u32) -> Vec<OrbitMonomial> {
    let mut cands = Vec::new();
    for a in 0..=s {
        for b in 0..=t {
            if (a, b) != (0, 0) && a % r == b % r {
                cands.push((a, b));
            }
        }
    }
    let mut out = Vec::new();
    fn rec(
        cands: &[(u32, u32)],
        start: usize,
        left: (u32, u32),
        slots: usize,
        cur: &mut Vec<(u32, u32)>,
        out: &mut Vec<Vec<(u32, u32)>>,
    ) {
        if left == (0, 0) {
            out.push(cur.clone());
            return;
        }
        if slots == 0 {
            return;
        }
        for (k, &(a, b)) in cands.iter().enumerate().skip(start) {
            if a <= left.0 && b <= left.1 {
                cur.push((a, b));
                rec(cands, k, (left.0 - a, left.1 - b), slots - 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut raw = Vec::new();
    rec(&cands, 0, (s, t), n, &mut Vec::new(), &mut raw);
    for p in raw {
        out.push(OrbitMonomial::from_pairs(r, &p).expect("compatible pairs"));
    }
    out.sort();
    out
}

/// Sparse row echelon form over `Q`, pivot = smallest column.
#[derive(Clone, Debug, Default)]
struct Echelon {
    rows: BTreeMap<usize, BTreeMap<usize, Rational>>,
}

impl Echelon {
    fn reduce(&self, mut v: BTreeMap<usize, Rational>) -> BTreeMap<usize, Rational> {
        let mut from = 0;
        while let Some((&c, _)) = v.range(from..).next() {
            if let Some(row) = self.rows.get(&c) {
                let f = v[&c].clone();
                for (j, x) in row {
                    let e = v.entry(*j).or_insert_with(Rational::zero);
                    *e = e.minus(&f.times(x));
                    if e.is_zero() {
                        v.remove(j);
                    }
                }
            }
            from = c + 1;
        }
        v
    }

    /// Returns whether `v` was independent of the current rows.
    fn insert(&mut self, v: BTreeMap<usize, Rational>) -> bool {
        let v = self.reduce(v);
        let Some((&c, lead)) = v.iter().next() else {
            return false;
        };
        let inv = Rational::one() / lead;
        let row = v.iter().map(|(j, x)| (*j, x.times(&inv))).collect();
        self.rows.insert(c, row);
        true
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// One graded piece of the quotient, in polynomial degree `2e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientSlice {
    pub degree: u32,
    pub monomials: usize,
    pub relation_rank: usize,
    pub dim: usize,
    pub canonical: usize,
}

/// Which generators of the degree-zero ideal are used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationGenerators {
    /// `m_t m_Λ` with `t` a single triple of nonzero degree: enough, since
    /// single-triple orbit sums generate the invariant ring.
    SingleTriple,
    /// `m_Λ m_Λ'` for all pairs of opposite nonzero degrees.
    AllPairs,
}

/// `B_0 / Σ_{i>0} B_{-i} B_i` up to a polynomial-degree cutoff.
#[derive(Clone, Debug)]
pub struct FixedPointQuotient {
    pub n: u32,
    pub r: u32,
    pub cutoff: u32,
    pub bound: u32,
    pub slices: Vec<QuotientSlice>,
    /// Monomials whose classes form a basis; canonical ones are preferred.
    pub basis: Vec<OrbitMonomial>,
    index: Vec<HashMap<OrbitMonomial, usize>>,
    echelons: Vec<Echelon>,
    canonical_independent: bool,
}

fn relation_rows(
    n: usize,
    r: u32,
    e: u32,
    gens: RelationGenerators,
    index: &HashMap<OrbitMonomial, usize>,
    cache: &mut HashMap<(u32, u32), Vec<OrbitMonomial>>,
) -> Vec<BTreeMap<usize, Rational>> {
    let mut jobs: Vec<(OrbitMonomial, OrbitMonomial)> = Vec::new();
    for s in 1..=e {
        for t in 0..s {
            if (s - t) % r != 0 {
                continue;
            }
            let left: Vec<OrbitMonomial> = match gens {
                RelationGenerators::AllPairs => cache
                    .entry((s, t))
                    .or_insert_with(|| monomials_of_bidegree(n, r, s, t))
                    .clone(),
                RelationGenerators::SingleTriple => {
                    let c = s % r;
                    vec![OrbitMonomial::new(r, vec![((s - c) / r, (t - c) / r, c)])
                        .expect("valid triple")]
                }
            };
            let right = cache
                .entry((e - s, e - t))
                .or_insert_with(|| monomials_of_bidegree(n, r, e - s, e - t))
                .clone();
            if gens == RelationGenerators::SingleTriple {
                // the mirrored triple of negative degree times the rest
                let c = t % r;
                let mirror = OrbitMonomial::new(r, vec![((t - c) / r, (s - c) / r, c)])
                    .expect("valid triple");
                let rest = cache
                    .entry((e - t, e - s))
                    .or_insert_with(|| monomials_of_bidegree(n, r, e - t, e - s))
                    .clone();
                jobs.extend(rest.into_iter().map(|m| (mirror.clone(), m)));
            }
            for a in &left {
                jobs.extend(right.iter().map(|b| (a.clone(), b.clone())));
            }
        }
    }
    jobs.par_iter()
        .map(|(a, b)| {
            monomial_product(a, b, n)
                .into_iter()
                .map(|(m, k)| (index[&m], int(k as i64)))
                .collect::<BTreeMap<usize, Rational>>()
        })
        .filter(|row| !row.is_empty())
        .collect()
}

impl FixedPointQuotient {
    pub fn dimension(&self) -> usize {
        self.slices.iter().map(|s| s.dim).sum()
    }

    /// `|P(r, n)|`.
    pub fn expected(&self) -> u64 {
        multipartition_count(self.r as usize, self.n)
    }

    /// The canonical family is linearly independent in the quotient.
    pub fn canonical_independent(&self) -> bool {
        self.canonical_independent
    }

    /// Every slice strictly above the spanning bound vanishes.
    pub fn vanishes_past_bound(&self) -> bool {
        self.slices
            .iter()
            .filter(|s| s.degree > self.bound)
            .all(|s| s.dim == 0)
    }

    /// Highest degree with a nonzero piece.
    pub fn top_degree(&self) -> u32 {
        self.slices
            .iter()
            .filter(|s| s.dim > 0)
            .map(|s| s.degree)
            .max()
            .unwrap_or(0)
    }

    pub fn holds(&self) -> bool {
        self.dimension() as u64 == self.expected()
            && self.canonical_independent
            && self.vanishes_past_bound()
            && self.basis.len() == self.dimension()
    }

    /// Whether a torus-degree-zero element lies in `Σ B_{-i} B_i`.
    /// Elements with a component above the cutoff are rejected.
    pub fn in_relation_span(&self, x: &InvariantElement) -> bool {
        let mut parts: BTreeMap<u32, BTreeMap<usize, Rational>> = BTreeMap::new();
        for (m, c) in x.terms() {
            let (s, t) = m.bidegree();
            if s != t || s as usize >= self.index.len() {
                return false;
            }
            parts
                .entry(s)
                .or_default()
                .insert(self.index[s as usize][m], c.clone());
        }
        parts
            .into_iter()
            .all(|(e, v)| self.echelons[e as usize].reduce(v).is_empty())
    }
}

/// The torus-degree-zero quotient up to polynomial degree `cutoff`.
pub fn fixed_point_quotient(
    n: u32,
    r: u32,
    cutoff: u32,
) -> Result<FixedPointQuotient, AppendixError> {
    fixed_point_quotient_with(n, r, cutoff, RelationGenerators::SingleTriple)
}

pub fn fixed_point_quotient_with(
    n: u32,
    r: u32,
    cutoff: u32,
    gens: RelationGenerators,
) -> Result<FixedPointQuotient, AppendixError> {
    if r == 0 {
        return Err(AppendixError::ZeroR);
    }
    let bound = spanning_bound(n, r);
    if cutoff < bound + 2 {
        return Err(AppendixError::CutoffTooSmall { cutoff, bound });
    }
    let canonical = canonical_family(n, r);
    let mut cache = HashMap::new();
    let mut slices = Vec::new();
    let mut basis = Vec::new();
    let mut index = Vec::new();
    let mut echelons = Vec::new();
    let mut canonical_independent = true;
    for e in 0..=cutoff / 2 {
        let mut mons = monomials_of_bidegree(n as usize, r, e, e);
        // canonical columns last, so they are the last to become pivots
        mons.sort_by_key(|m| canonical.contains(m));
        let idx: HashMap<OrbitMonomial, usize> = mons
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let mut ech = Echelon::default();
        for row in relation_rows(n as usize, r, e, gens, &idx, &mut cache) {
            ech.insert(row);
            if ech.rank() == mons.len() {
                break;
            }
        }
        let rank = ech.rank();
        basis.extend(
            mons.iter()
                .enumerate()
                .filter(|(i, _)| !ech.rows.contains_key(i))
                .map(|(_, m)| m.clone()),
        );
        let can: Vec<usize> = mons
            .iter()
            .enumerate()
            .filter(|(_, m)| canonical.contains(m))
            .map(|(i, _)| i)
            .collect();
        let mut probe = ech.clone();
        for &c in &can {
            canonical_independent &= probe.insert(BTreeMap::from([(c, int(1))]));
        }
        slices.push(QuotientSlice {
            degree: 2 * e,
            monomials: mons.len(),
            relation_rank: rank,
            dim: mons.len() - rank,
            canonical: can.len(),
        });
        index.push(idx);
        echelons.push(ech);
    }
    Ok(FixedPointQuotient {
        n,
        r,
        cutoff,
        bound,
        slices,
        basis,
        index,
        echelons,
        canonical_independent,
    })
}

/// Memoized rewriting of degree-zero classes into the canonical family.
///
/// A triple with `a < b` other than `(0, 1, 0)` is removed by expanding
/// `m_t m_{Λ∖t} = 0`, which lowers the length. Once every triple is
/// `(0, 1, 0)` or has `a >= b`, a triple with `b > 0` is lowered via
/// `m_{(a,b−1,c)} m_{Λ∖(a,b,c) ∪ (0,1,0)} = 0`, which lowers `Σ b + ℓ'`
/// where `ℓ'` ignores the `(0, 1, 0)` triples.
pub struct SpanningReducer {
    n: usize,
    r: u32,
    memo: HashMap<OrbitMonomial, InvariantElement>,
}

const DOWN: Triple = (0, 1, 0);

impl SpanningReducer {
    pub fn new(n: usize, r: u32) -> Self {
        SpanningReducer {
            n,
            r,
            memo: HashMap::new(),
        }
    }

    pub fn reduce(&mut self, m: &OrbitMonomial) -> Result<InvariantElement, AppendixError> {
        if m.r != self.r {
            return Err(AppendixError::Mismatch);
        }
        if m.degree() != 0 {
            return Err(AppendixError::NonzeroDegree(m.to_string()));
        }
        self.reduce_inner(m)
    }

    fn reduce_inner(&mut self, m: &OrbitMonomial) -> Result<InvariantElement, AppendixError> {
        if m.len() > self.n {
            return Ok(InvariantElement::zero(self.n, self.r));
        }
        if let Some(v) = self.memo.get(m) {
            return Ok(v.clone());
        }
        let bad = m
            .bag
            .iter()
            .position(|&(a, b, c)| a < b && (a, b, c) != DOWN);
        let (left, right) = if let Some(i) = bad {
            (vec![m.bag[i]], m.without(i))
        } else if let Some(i) = m
            .bag
            .iter()
            .position(|&(a, b, c)| b > 0 && (a, b, c) != DOWN)
        {
            let (a, b, c) = m.bag[i];
            let mut rest = m.without(i);
            rest.push(DOWN);
            (vec![(a, b - 1, c)], rest)
        } else {
            let out = InvariantElement::monomial(m.clone(), self.n);
            self.memo.insert(m.clone(), out.clone());
            return Ok(out);
        };
        let left = OrbitMonomial::new(self.r, left)?;
        let right = OrbitMonomial::new(self.r, right)?;
        let prod = monomial_product(&left, &right, self.n);
        let lead = int(*prod.get(m).expect("target appears in the product") as i64);
        let mut out = InvariantElement::zero(self.n, self.r);
        for (t, k) in prod {
            if &t == m {
                continue;
            }
            let sub = self.reduce_inner(&t)?;
            out = out.add(&sub.scale(&(-int(k as i64) / &lead)))?;
        }
        self.memo.insert(m.clone(), out.clone());
        Ok(out)
    }
}

/// `m̄_Λ` as a combination of the canonical family.
pub fn spanning_reduction(
    m: &OrbitMonomial,
    n: usize,
    r: u32,
) -> Result<InvariantElement, AppendixError> {
    SpanningReducer::new(n, r).reduce(m)
}

/// Every torus-degree-zero monomial up to the cutoff reduces into the
/// canonical family, and the difference lies in the relation span.
pub fn reduction_consistency(q: &FixedPointQuotient) -> Result<bool, AppendixError> {
    let canonical = canonical_family(q.n, q.r);
    let mut red = SpanningReducer::new(q.n as usize, q.r);
    for e in 0..=q.cutoff / 2 {
        for m in monomials_of_bidegree(q.n as usize, q.r, e, e) {
            let x = red.reduce(&m)?;
            if x.terms().keys().any(|t| !canonical.contains(t)) {
                return Ok(false);
            }
            let diff = InvariantElement::monomial(m.clone(), q.n as usize).sub(&x)?;
            if !q.in_relation_span(&diff) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Single-triple relations span the same space as all pair products.
pub fn generators_agree(n: u32, r: u32, cutoff: u32) -> Result<bool, AppendixError> {
    let a = fixed_point_quotient_with(n, r, cutoff, RelationGenerators::SingleTriple)?;
    let b = fixed_point_quotient_with(n, r, cutoff, RelationGenerators::AllPairs)?;
    Ok(a.slices == b.slices)
}
