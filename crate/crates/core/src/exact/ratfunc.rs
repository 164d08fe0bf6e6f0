use std::fmt;

use super::{Field, ParamPoly, Rational, Ring, Vars};

/// Rational function over `Q`: a polynomial numerator over a product of
/// normalized (leading coefficient one) denominator factors.
///
/// Factors are not required to be irreducible; equality is tested by
/// cross multiplication so no canonical form is needed. After every
/// operation the numerator is trial-divided by each factor.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: ParamPoly<Rational>,
    den: Vec<(ParamPoly<Rational>, u32)>,
}

impl RatFunc {
    pub fn from_poly(p: ParamPoly<Rational>) -> Self {
        RatFunc {
            num: p,
            den: Vec::new(),
        }
    }

    pub fn var(vars: &Vars, name: &str) -> Self {
        Self::from_poly(ParamPoly::var_named(vars, name))
    }

    pub fn numerator(&self) -> &ParamPoly<Rational> {
        &self.num
    }

    /// Denominator factors with multiplicities.
    pub fn denominator_factors(&self) -> &[(ParamPoly<Rational>, u32)] {
        &self.den
    }

    pub fn denominator(&self) -> ParamPoly<Rational> {
        self.den
            .iter()
            .fold(ParamPoly::one(), |acc, (f, e)| acc.times(&f.pow(*e)))
    }

    /// The polynomial this function equals, if its denominator is trivial.
    pub fn as_poly(&self) -> Option<&ParamPoly<Rational>> {
        self.den.is_empty().then_some(&self.num)
    }

    /// Evaluates at a point; `None` when a denominator factor vanishes.
    pub fn eval(&self, point: &[Rational]) -> Option<Rational> {
        let at = |p: &ParamPoly<Rational>| {
            if p.vars().is_empty() {
                p.constant_term()
            } else {
                p.eval(point)
            }
        };
        let mut d = Rational::one();
        for (f, e) in &self.den {
            d = d.times(&Ring::pow(&at(f), *e));
        }
        if d.is_zero() {
            return None;
        }
        at(&self.num).divide(&d)
    }

    /// Splits a polynomial into a normalized factor and the scalar removed.
    fn normalize(f: &ParamPoly<Rational>) -> (ParamPoly<Rational>, Rational) {
        let lc = f.leading_coeff().expect("zero denominator").clone();
        (f.scale(&lc.inverse().expect("nonzero")), lc)
    }

    fn push_factor(den: &mut Vec<(ParamPoly<Rational>, u32)>, f: ParamPoly<Rational>, e: u32) {
        if e == 0 {
            return;
        }
        match den.iter_mut().find(|(g, _)| *g == f) {
            Some((_, k)) => *k += e,
            None => den.push((f, e)),
        }
    }

    /// Divides by `f^e`, absorbing constants into the numerator.
    fn divide_by_factor(mut self, f: &ParamPoly<Rational>, e: u32) -> Self {
        if f.is_constant() {
            let c = Ring::pow(&f.constant_term(), e);
            self.num = self.num.scale(&c.inverse().expect("zero denominator"));
            return self;
        }
        let (g, lc) = Self::normalize(f);
        self.num = self
            .num
            .scale(&Ring::pow(&lc, e).inverse().expect("nonzero"));
        Self::push_factor(&mut self.den, g, e);
        self
    }

    fn cancel(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        for (f, e) in self.den.iter_mut() {
            while *e > 0 {
                match self.num.try_div(f) {
                    Some(q) => {
                        self.num = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        self.den.retain(|(_, e)| *e > 0);
        self
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        // a/D == b/E  iff  a * (E/g) == b * (D/g) with shared factors removed
        let mut lhs = self.num.clone();
        let mut rhs = other.num.clone();
        for (f, e) in &other.den {
            let mine = self.den.iter().find(|(g, _)| g == f).map_or(0, |(_, k)| *k);
            if *e > mine {
                lhs = lhs.times(&f.pow(e - mine));
            }
        }
        for (f, e) in &self.den {
            let theirs = other
                .den
                .iter()
                .find(|(g, _)| g == f)
                .map_or(0, |(_, k)| *k);
            if *e > theirs {
                rhs = rhs.times(&f.pow(e - theirs));
            }
        }
        lhs == rhs
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        Self::from_poly(ParamPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(ParamPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let mut den = self.den.clone();
        for (f, e) in &other.den {
            match den.iter_mut().find(|(g, _)| g == f) {
                Some((_, k)) => *k = (*k).max(*e),
                None => den.push((f.clone(), *e)),
            }
        }
        let lift = |r: &RatFunc| {
            let mut p = r.num.clone();
            for (f, e) in &den {
                let have = r.den.iter().find(|(g, _)| g == f).map_or(0, |(_, k)| *k);
                if *e > have {
                    p = p.times(&f.pow(e - have));
                }
            }
            p
        };
        let num = lift(self).plus(&lift(other));
        RatFunc { num, den }.cancel()
    }
    fn times(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut den = self.den.clone();
        for (f, e) in &other.den {
            Self::push_factor(&mut den, f.clone(), *e);
        }
        RatFunc {
            num: self.num.times(&other.num),
            den,
        }
        .cancel()
    }
    fn negate(&self) -> Self {
        RatFunc {
            num: self.num.negate(),
            den: self.den.clone(),
        }
    }
    fn from_int(v: i64) -> Self {
        Self::from_poly(ParamPoly::from_int(v))
    }
}

impl Field for RatFunc {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let num = self
            .den
            .iter()
            .fold(ParamPoly::one(), |acc, (f, e)| acc.times(&f.pow(*e)));
        Some(RatFunc::from_poly(num).divide_by_factor(&self.num, 1))
    }
    fn from_rational(q: &Rational) -> Self {
        Self::from_poly(ParamPoly::constant(q.clone()))
    }
    fn divide(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if other.den.is_empty() {
            return Some(self.clone().divide_by_factor(&other.num, 1).cancel());
        }
        other.inverse().map(|inv| self.times(&inv))
    }
}

impl From<ParamPoly<Rational>> for RatFunc {
    fn from(p: ParamPoly<Rational>) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        let parts: Vec<String> = self
            .den
            .iter()
            .map(|(g, e)| {
                if *e == 1 {
                    format!("({g})")
                } else {
                    format!("({g})^{e}")
                }
            })
            .collect();
        write!(f, "({})/({})", self.num, parts.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn setup() -> (Vars, RatFunc, RatFunc) {
        let v = Vars::new(["kappa", "a1"]);
        (v.clone(), RatFunc::var(&v, "kappa"), RatFunc::var(&v, "a1"))
    }

    #[test]
    fn field_operations_cancel() {
        let (_, k, a) = setup();
        let x = k.divide(&k.plus(&a)).unwrap();
        let y = a.divide(&k.plus(&a)).unwrap();
        assert_eq!(x.plus(&y), RatFunc::one());
        assert!(x.plus(&y).as_poly().is_some());
        let sq = k.times(&k).minus(&a.times(&a));
        let q = sq.divide(&k.minus(&a)).unwrap();
        assert_eq!(q, k.plus(&a));
        assert!(q.as_poly().is_some());
    }

    #[test]
    fn alpha_identity() {
        // alpha = k/d and 1 - alpha^2 = (d - k)(d + k)/d^2
        let (_, k, a) = setup();
        let d = k.scale_int(2).plus(&a);
        let alpha = k.divide(&d).unwrap();
        let lhs = RatFunc::one().minus(&alpha.times(&alpha));
        let rhs = d.minus(&k).times(&d.plus(&k)).divide(&d.times(&d)).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.times(&lhs.inverse().unwrap()), RatFunc::one());
    }

    #[test]
    fn evaluation_and_walls() {
        let (_, k, a) = setup();
        let f = RatFunc::one().divide(&k.minus(&a)).unwrap();
        assert_eq!(f.eval(&[int(3), int(1)]), Some(rat(1, 2)));
        assert_eq!(f.eval(&[int(1), int(1)]), None);
        assert_eq!(f.denominator_factors().len(), 1);
    }

    impl RatFunc {
        fn scale_int(&self, c: i64) -> Self {
            self.times(&RatFunc::from_int(c))
        }
    }
}
