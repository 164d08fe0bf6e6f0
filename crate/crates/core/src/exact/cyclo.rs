use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use super::{fmt_rational, int, rational_is_negative, Field, Rational, Ring};

/// Coefficients (constant term first) of the `r`-th cyclotomic polynomial.
///
/// Computed by dividing `x^r - 1` by `Phi_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(r: u32) -> Vec<i64> {
    assert!(r >= 1, "cyclotomic polynomial needs r >= 1");
    let mut poly = vec![0i64; r as usize + 1];
    poly[0] = -1;
    poly[r as usize] = 1;
    for d in 1..r {
        if r.is_multiple_of(d) {
            poly = div_monic_exact(&poly, &cyclotomic_polynomial(d));
        }
    }
    poly
}

fn div_monic_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![0i64; qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &dc) in den.iter().enumerate() {
            rem[i + j] -= c * dc;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "inexact cyclotomic division");
    quot
}

/// Euler's totient.
pub fn euler_phi(r: u32) -> usize {
    (1..=r).filter(|&k| num_integer::gcd(k, r) == 1).count()
}

thread_local! {
    static PHI_CACHE: RefCell<HashMap<u32, Rc<Vec<i64>>>> = RefCell::new(HashMap::new());
}

fn modulus(order: u32) -> Rc<Vec<i64>> {
    PHI_CACHE.with(|cache| {
        cache
            .borrow_mut()
            .entry(order)
            .or_insert_with(|| Rc::new(cyclotomic_polynomial(order)))
            .clone()
    })
}

/// Element of `Q(zeta_r)` in the power basis `1, eta, ..., eta^(phi(r)-1)`.
///
/// `order == 0` marks a rational constant that has not been attached to any
/// particular field yet (this is what [`Ring::zero`] and [`Ring::one`]
/// produce); it is promoted on first contact with a genuine `Q(zeta_r)`
/// element.
#[derive(Clone, Debug)]
pub struct CycloNum {
    order: u32,
    coords: Vec<Rational>,
}

impl CycloNum {
    pub fn from_rational_in(order: u32, q: Rational) -> Self {
        let dim = if order == 0 { 1 } else { euler_phi(order) };
        let mut coords = vec![Rational::zero(); dim];
        coords[0] = q;
        CycloNum { order, coords }
    }

    pub fn constant(q: Rational) -> Self {
        CycloNum {
            order: 0,
            coords: vec![q],
        }
    }

    /// `eta^k` for the primitive root `eta = exp(2 pi i / r)`; negative `k` allowed.
    pub fn eta_pow(order: u32, k: i64) -> Self {
        assert!(order >= 1);
        let e = k.rem_euclid(order as i64) as usize;
        let mut v = vec![Rational::zero(); e.max(1) + 1];
        v[e] = Rational::one();
        Self::reduce(order, v)
    }

    pub fn eta(order: u32) -> Self {
        Self::eta_pow(order, 1)
    }

    /// Build from raw power-basis coordinates (any length); reduces mod `Phi_r`.
    pub fn from_coords(order: u32, coords: Vec<Rational>) -> Self {
        Self::reduce(order, coords)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// Returns the value when it lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coords[1..].iter().all(Ring::is_zero) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    /// Attaches an order-0 constant to `Q(zeta_order)`; no-op otherwise.
    pub fn promote(&self, order: u32) -> Self {
        if self.order == 0 && order != 0 {
            Self::from_rational_in(order, self.coords[0].clone())
        } else {
            self.clone()
        }
    }

    /// Galois automorphism `eta -> eta^k` (`k` coprime to the order).
    pub fn galois(&self, k: i64) -> Self {
        if self.order == 0 {
            return self.clone();
        }
        let mut acc = Self::from_rational_in(self.order, Rational::zero());
        for (j, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = Self::eta_pow(self.order, k * j as i64).scale(c);
            acc = acc.plus(&term);
        }
        acc
    }

    /// Complex conjugation.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        CycloNum {
            order: self.order,
            coords: self.coords.iter().map(|c| c * q).collect(),
        }
    }

    fn reduce(order: u32, mut v: Vec<Rational>) -> Self {
        let phi = modulus(order);
        let deg = phi.len() - 1;
        if v.len() > deg {
            for i in (deg..v.len()).rev() {
                let c = std::mem::take(&mut v[i]);
                if c.is_zero() {
                    continue;
                }
                for (j, &pc) in phi.iter().enumerate().take(deg) {
                    if pc != 0 {
                        v[i - deg + j] -= &c * int(pc);
                    }
                }
            }
        }
        v.resize(deg, Rational::zero());
        CycloNum { order, coords: v }
    }

    fn align(&self, other: &Self) -> (Self, Self) {
        match (self.order, other.order) {
            (a, b) if a == b => (self.clone(), other.clone()),
            (0, b) => (self.promote(b), other.clone()),
            (a, 0) => (self.clone(), other.promote(a)),
            (a, b) => panic!("mixing Q(zeta_{a}) with Q(zeta_{b})"),
        }
    }

    fn mul_matrix(&self) -> Vec<Vec<Rational>> {
        // column j = self * eta^j
        let dim = self.coords.len();
        (0..dim)
            .map(|j| {
                let mut v = vec![Rational::zero(); dim + j];
                for (i, c) in self.coords.iter().enumerate() {
                    v[i + j] = c.clone();
                }
                Self::reduce(self.order, v).coords
            })
            .collect()
    }
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coords == other.coords;
        }
        let (a, b) = self.align(other);
        a.coords == b.coords
    }
}

impl Ring for CycloNum {
    fn zero() -> Self {
        Self::constant(Rational::zero())
    }
    fn one() -> Self {
        Self::constant(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.coords.iter().all(Ring::is_zero)
    }
    fn plus(&self, other: &Self) -> Self {
        if self.order == other.order {
            return CycloNum {
                order: self.order,
                coords: self
                    .coords
                    .iter()
                    .zip(&other.coords)
                    .map(|(a, b)| a + b)
                    .collect(),
            };
        }
        let (a, b) = self.align(other);
        a.plus(&b)
    }
    fn times(&self, other: &Self) -> Self {
        if self.order == 0 {
            return other.scale(&self.coords[0]);
        }
        if other.order == 0 {
            return self.scale(&other.coords[0]);
        }
        let (a, b) = self.align(other);
        let mut v = vec![Rational::zero(); a.coords.len() + b.coords.len() - 1];
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                if !y.is_zero() {
                    v[i + j] += x * y;
                }
            }
        }
        Self::reduce(a.order, v)
    }
    fn negate(&self) -> Self {
        CycloNum {
            order: self.order,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
    fn from_int(v: i64) -> Self {
        Self::constant(int(v))
    }
}

impl Field for CycloNum {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.order == 0 {
            return Some(Self::constant(self.coords[0].recip()));
        }
        // Solve (mult-by-self) x = 1 by Gauss-Jordan.
        let cols = self.mul_matrix();
        let dim = cols.len();
        let mut aug: Vec<Vec<Rational>> = (0..dim)
            .map(|i| {
                let mut row: Vec<Rational> = (0..dim).map(|j| cols[j][i].clone()).collect();
                row.push(if i == 0 {
                    Rational::one()
                } else {
                    Rational::zero()
                });
                row
            })
            .collect();
        for col in 0..dim {
            let piv = (col..dim).find(|&r| !aug[r][col].is_zero())?;
            aug.swap(col, piv);
            let inv = aug[col][col].recip();
            for v in aug[col].iter_mut() {
                *v *= &inv;
            }
            for r in 0..dim {
                if r != col && !aug[r][col].is_zero() {
                    let f = aug[r][col].clone();
                    for c in col..=dim {
                        let sub = &f * &aug[col][c];
                        aug[r][c] -= sub;
                    }
                }
            }
        }
        Some(CycloNum {
            order: self.order,
            coords: aug.into_iter().map(|mut row| row.pop().unwrap()).collect(),
        })
    }
    fn from_rational(q: &Rational) -> Self {
        Self::constant(q.clone())
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (j, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match j {
                0 => String::new(),
                1 => "eta".to_string(),
                _ => format!("eta^{j}"),
            };
            let s = if mono.is_empty() {
                fmt_rational(c)
            } else if c.is_one() {
                mono
            } else if *c == -Rational::one() {
                format!("-{mono}")
            } else {
                format!("{}*{mono}", fmt_rational(c))
            };
            parts.push(s);
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            if let Some(rest) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        if parts.len() > 1 {
            write!(f, "({out})")
        } else {
            write!(f, "{out}")
        }
    }
}

impl CycloNum {
    /// True when this is a rational number that is strictly negative.
    pub fn is_negative_rational(&self) -> bool {
        self.as_rational()
            .map(|q| rational_is_negative(&q))
            .unwrap_or(false)
    }
}
