use std::fmt;

use rayon::prelude::*;

use crate::combinat::Partition;
use crate::exact::{int, Rational, Ring};

/// Permutation of `{0, .., n-1}` stored by images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Perm(images))
    }

    /// The transposition exchanging `a` and `b` (zero-based).
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(a, b);
        Perm(v)
    }

    /// Product of disjoint cycles of consecutive points with the given
    /// lengths, in order: `(0 1 .. μ1-1)(μ1 ..)...`.
    pub fn of_cycle_type(n: usize, mu: &Partition) -> Self {
        let mut v: Vec<usize> = (0..n).collect();
        let mut start = 0;
        for &len in mu.parts() {
            let len = len as usize;
            for k in 0..len {
                v[start + k] = start + (k + 1) % len;
            }
            start += len;
        }
        Perm(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            v[j] = i;
        }
        Perm(v)
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i];
                len += 1;
            }
            lens.push(len);
        }
        Partition::from_unsorted(lens)
    }

    pub fn num_cycles(&self) -> usize {
        self.cycle_type().len()
    }

    /// Lehmer-code rank in `0..n!`, lexicographic on image sequences.
    pub fn rank(&self) -> usize {
        let n = self.0.len();
        let mut r = 0;
        for i in 0..n {
            let smaller = self.0[i + 1..].iter().filter(|&&x| x < self.0[i]).count();
            r = r * (n - i) + smaller;
        }
        r
    }

    pub fn unrank(n: usize, mut r: usize) -> Perm {
        let mut digits = vec![0; n];
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = r % base;
            r /= base;
        }
        let mut avail: Vec<usize> = (0..n).collect();
        Perm(digits.into_iter().map(|d| avail.remove(d)).collect())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // one-based cycle notation, fixed points omitted
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for s in 0..n {
            if seen[s] || self.0[s] == s {
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                cyc.push((i + 1).to_string());
                i = self.0[i];
            }
            out.push_str(&format!("({})", cyc.join(" ")));
        }
        if out.is_empty() {
            out.push_str("()");
        }
        write!(f, "{out}")
    }
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// All permutations of `n` points in rank order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    (0..factorial(n)).map(|r| Perm::unrank(n, r)).collect()
}

/// Element of the rational group algebra of `S_n`, dense in rank order.
#[derive(Clone, Debug, PartialEq)]
pub struct PermElement {
    n: usize,
    coeffs: Vec<Rational>,
}

impl PermElement {
    pub fn zero(n: usize) -> Self {
        PermElement {
            n,
            coeffs: vec![int(0); factorial(n)],
        }
    }

    pub fn basis(p: &Perm) -> Self {
        Self::monomial(p, int(1))
    }

    pub fn monomial(p: &Perm, c: Rational) -> Self {
        let mut z = Self::zero(p.n());
        z.coeffs[p.rank()] = c;
        z
    }

    pub fn identity(n: usize) -> Self {
        Self::basis(&Perm::identity(n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, p: &Perm) -> &Rational {
        &self.coeffs[p.rank()]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    /// Nonzero terms as `(rank, coefficient)`.
    pub fn support(&self) -> Vec<(usize, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        PermElement {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.plus(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PermElement {
            n: self.n,
            coeffs: self.coeffs.iter().map(|a| a.times(c)).collect(),
        }
    }

    /// Convolution product, computed output-index by output-index in parallel.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let left: Vec<(Perm, Rational)> = self
            .support()
            .into_iter()
            .map(|(r, c)| (Perm::unrank(n, r).inverse(), c.clone()))
            .collect();
        let coeffs = (0..self.coeffs.len())
            .into_par_iter()
            .map(|k| {
                let target = Perm::unrank(n, k);
                let mut acc = int(0);
                for (ginv, a) in &left {
                    let b = &other.coeffs[ginv.compose(&target).rank()];
                    if !b.is_zero() {
                        acc = acc.plus(&a.times(b));
                    }
                }
                acc
            })
            .collect();
        PermElement { n, coeffs }
    }

    /// `t · self` for a single permutation `t`: a relabelling of coefficients.
    pub fn left_mul_perm(&self, t: &Perm) -> Self {
        let mut out = Self::zero(self.n);
        for (r, c) in self.support() {
            let h = Perm::unrank(self.n, r);
            out.coeffs[t.compose(&h).rank()] = c.clone();
        }
        out
    }

    /// `self · t`.
    pub fn right_mul_perm(&self, t: &Perm) -> Self {
        let mut out = Self::zero(self.n);
        for (r, c) in self.support() {
            let h = Perm::unrank(self.n, r);
            out.coeffs[h.compose(t).rank()] = c.clone();
        }
        out
    }

    pub fn commutes_with_perm(&self, t: &Perm) -> bool {
        self.left_mul_perm(t) == self.right_mul_perm(t)
    }

    /// Central iff it commutes with all adjacent transpositions.
    pub fn is_central(&self) -> bool {
        (0..self.n.saturating_sub(1))
            .all(|i| self.commutes_with_perm(&Perm::transposition(self.n, i, i + 1)))
    }
}

impl fmt::Display for PermElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .support()
            .into_iter()
            .map(|(r, c)| {
                format!(
                    "{}*{}",
                    crate::exact::fmt_rational(c),
                    Perm::unrank(self.n, r)
                )
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}
