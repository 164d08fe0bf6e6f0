//! The algebra `E = ⊕_{λ ∈ P(r,n)} k[parameters]` and the images of its
//! three families of generators: equivariant Chern classes at the fixed
//! points, central characters of the cyclotomic Hecke algebra and
//! Dunkl–Opdam spectra, compared after `a_i = p(η^{i-1})`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::combinat::{enumerate_multipartitions, Multipartition};
use crate::exact::{elem_sym_eval, int, CycloNum, Field, ParamPoly, Rational, Ring, Vars};
use crate::heckecyclo::{central_scalar_of, hecke_seminormal_module, hecke_vars, HeckeError};
use crate::wreath::{dunkl_opdam_spectrum, p_at_eta_power, WreathError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EFieldError {
    #[error("k = {k} out of range 1..={n}")]
    DegreeOutOfRange { k: usize, n: usize },
    #[error("expected variables {expected}, found {found}")]
    VariableMismatch { expected: String, found: String },
    #[error("point has {got} coordinates, expected {want}")]
    PointDimension { got: usize, want: usize },
    #[error("no generic point found after {0} attempts")]
    NoGenericPoint(usize),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Wreath(#[from] WreathError),
}

/// One polynomial per multipartition of `P(r, n)`, in canonical order.
#[derive(Clone, Debug)]
pub struct ETuple<C> {
    pub n: usize,
    pub r: u32,
    pub vars: Vars,
    pub entries: Vec<(Multipartition, ParamPoly<C>)>,
}

impl<C: Field> ETuple<C> {
    pub fn get(&self, shape: &Multipartition) -> Option<&ParamPoly<C>> {
        self.entries
            .iter()
            .find(|(s, _)| s == shape)
            .map(|(_, p)| p)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn map(&self, vars: &Vars, f: impl Fn(&ParamPoly<C>) -> ParamPoly<C>) -> Self {
        ETuple {
            n: self.n,
            r: self.r,
            vars: vars.clone(),
            entries: self
                .entries
                .iter()
                .map(|(s, p)| (s.clone(), f(p)))
                .collect(),
        }
    }
}

impl<C: Field> PartialEq for ETuple<C> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.r == other.r
            && self.vars == other.vars
            && self.entries == other.entries
    }
}

impl<C: Field> fmt::Display for ETuple<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (s, p)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{s} -> {p}")?;
        }
        Ok(())
    }
}

fn check_k(k: usize, n: usize) -> Result<(), EFieldError> {
    if k == 0 || k > n {
        Err(EFieldError::DegreeOutOfRange { k, n })
    } else {
        Ok(())
    }
}

/// `a_{l+1}` in the variables `κ, a_1, .., a_{r-1}` with `a_r = -Σ_{i<r} a_i`.
fn framing(vars: &Vars, r: u32, l: usize) -> ParamPoly<Rational> {
    if l + 1 < r as usize {
        ParamPoly::var(vars, l + 1)
    } else {
        (1..r as usize).fold(ParamPoly::zero_in(vars), |acc, i| {
            acc.minus(&ParamPoly::var(vars, i))
        })
    }
}

/// Restriction of `c_k` to each fixed point: `e_k` of `κ c + a_{l+1}` over
/// the boxes of content `c` in component `l`.
pub fn chern_image(k: usize, n: usize, r: u32) -> Result<ETuple<Rational>, EFieldError> {
    check_k(k, n)?;
    let vars = Vars::kappa_a(r);
    let kappa = ParamPoly::var(&vars, 0);
    let entries = enumerate_multipartitions(r as usize, n as u32)
        .into_par_iter()
        .map(|shape| {
            let weights: Vec<ParamPoly<Rational>> = shape
                .cells()
                .map(|(l, i, j)| {
                    kappa
                        .scale(&int(j as i64 - i as i64))
                        .plus(&framing(&vars, r, l))
                })
                .collect();
            let e = elem_sym_eval(k, &weights).expect("k <= n");
            (shape, e)
        })
        .collect();
    Ok(ETuple {
        n,
        r,
        vars,
        entries,
    })
}

/// Central characters of `e_1(z), .., e_n(z)` read off the seminormal
/// modules, with `a_r` eliminated. Entry `k - 1` is the image of `e_k`.
pub fn hecke_center_images(n: usize, r: u32) -> Result<Vec<ETuple<Rational>>, EFieldError> {
    let vars = Vars::kappa_a(r);
    let mut images: Vec<ParamPoly<Rational>> = vec![ParamPoly::var(&vars, 0)];
    images.extend((0..r as usize).map(|l| framing(&vars, r, l)));
    let shapes = enumerate_multipartitions(r as usize, n as u32);
    let per_shape: Vec<Vec<ParamPoly<Rational>>> = shapes
        .par_iter()
        .map(|shape| {
            let m = hecke_seminormal_module(shape)?;
            debug_assert_eq!(m.vars, hecke_vars(r));
            (1..=n)
                .map(|k| Ok(central_scalar_of(&m, k)?.compose(&images)))
                .collect()
        })
        .collect::<Result<_, EFieldError>>()?;
    Ok((0..n)
        .map(|k| ETuple {
            n,
            r,
            vars: vars.clone(),
            entries: shapes
                .iter()
                .cloned()
                .zip(per_shape.iter().map(|v| v[k].clone()))
                .collect(),
        })
        .collect())
}

pub fn hecke_center_image(k: usize, n: usize, r: u32) -> Result<ETuple<Rational>, EFieldError> {
    check_k(k, n)?;
    Ok(hecke_center_images(n, r)?.swap_remove(k - 1))
}

/// `e_k` of the Dunkl–Opdam eigenvalues `κ c + p(η^l)` on each standard
/// module, in the variables `κ, c_1, .., c_{r-1}` over `Q(ζ_r)`.
pub fn dunkl_opdam_image(k: usize, n: usize, r: u32) -> Result<ETuple<CycloNum>, EFieldError> {
    check_k(k, n)?;
    let vars = Vars::kappa_c(r);
    let entries = enumerate_multipartitions(r as usize, n as u32)
        .into_par_iter()
        .map(|shape| {
            let spectrum = dunkl_opdam_spectrum(&shape)?;
            let e = elem_sym_eval(k, &spectrum[0]).expect("k <= n");
            Ok((shape, e.with_vars(&vars)))
        })
        .collect::<Result<_, EFieldError>>()?;
    Ok(ETuple {
        n,
        r,
        vars,
        entries,
    })
}

/// `a_i ↦ p(η^{i-1})`, `κ ↦ κ`.
#[derive(Clone, Debug)]
pub struct ParamSubstitution {
    pub r: u32,
    /// Images of `a_1, .., a_r` in `κ, c_1, .., c_{r-1}`.
    pub images: Vec<ParamPoly<CycloNum>>,
}

impl ParamSubstitution {
    pub fn new(r: u32) -> Self {
        let vars = Vars::kappa_c(r);
        let images = (0..r as i64)
            .map(|i| p_at_eta_power(r, i, &vars).expect("c variables"))
            .collect();
        ParamSubstitution { r, images }
    }

    /// `Σ_i p(η^{i-1}) = 0`, so `Σ a_i = 0` is respected.
    pub fn respects_sum(&self) -> bool {
        self.images
            .iter()
            .fold(ParamPoly::zero_in(&Vars::kappa_c(self.r)), |a, p| a.plus(p))
            .is_zero()
    }
}

/// Applies [`ParamSubstitution`] to a tuple in `κ, a_1, .., a_{r-1}`.
pub fn substitute_parameters(t: &ETuple<Rational>) -> Result<ETuple<CycloNum>, EFieldError> {
    let r = t.r;
    let expected = Vars::kappa_a(r);
    if t.vars != expected {
        return Err(EFieldError::VariableMismatch {
            expected: expected.names().join(","),
            found: t.vars.names().join(","),
        });
    }
    let target = Vars::kappa_c(r);
    let sub = ParamSubstitution::new(r);
    let mut images = vec![ParamPoly::var(&target, 0)];
    images.extend(sub.images[..r as usize - 1].iter().cloned());
    Ok(ETuple {
        n: t.n,
        r,
        vars: target.clone(),
        entries: t
            .entries
            .iter()
            .map(|(s, p)| (s.clone(), p.to_cyclo(r).compose(&images).with_vars(&target)))
            .collect(),
    })
}

/// First differing component, rendered as `shape: lhs - rhs = diff`.
pub fn first_difference<C: Field>(lhs: &ETuple<C>, rhs: &ETuple<C>) -> Option<String> {
    if lhs.entries.len() != rhs.entries.len() {
        return Some(format!(
            "{} components vs {}",
            lhs.entries.len(),
            rhs.entries.len()
        ));
    }
    for ((s, p), (s2, q)) in lhs.entries.iter().zip(&rhs.entries) {
        if s != s2 {
            return Some(format!("component order differs at {s} / {s2}"));
        }
        if p != q {
            return Some(format!("{s}: difference {}", p.minus(q)));
        }
    }
    None
}

/// One comparison of the main theorem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MainTheoremCheck {
    pub k: usize,
    /// `"chern=hecke"` or `"substituted=dunkl-opdam"`.
    pub relation: &'static str,
    pub witness: Option<String>,
}

impl MainTheoremCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// Compares the generator images for every `k = 1..n`.
pub fn verify_main_theorem(n: usize, r: u32) -> Result<Vec<MainTheoremCheck>, EFieldError> {
    let hecke = hecke_center_images(n, r)?;
    (1..=n)
        .into_par_iter()
        .map(|k| {
            let chern = chern_image(k, n, r)?;
            let dunkl = dunkl_opdam_image(k, n, r)?;
            Ok(vec![
                MainTheoremCheck {
                    k,
                    relation: "chern=hecke",
                    witness: first_difference(&chern, &hecke[k - 1]),
                },
                MainTheoremCheck {
                    k,
                    relation: "substituted=dunkl-opdam",
                    witness: first_difference(&substitute_parameters(&chern)?, &dunkl),
                },
            ])
        })
        .collect::<Result<Vec<_>, EFieldError>>()
        .map(|v| v.into_iter().flatten().collect())
}

fn evaluate(t: &ETuple<Rational>, point: &[Rational]) -> Result<Vec<Rational>, EFieldError> {
    if point.len() != t.vars.len() {
        return Err(EFieldError::PointDimension {
            got: point.len(),
            want: t.vars.len(),
        });
    }
    Ok(t.entries
        .iter()
        .map(|(_, p)| p.with_vars(&t.vars).eval(point))
        .collect())
}

/// Dimension of the unital subalgebra of `Q^{P(r,n)}` generated by the
/// specialized tuples.
///
/// The closure is first computed modulo a large prime. Its rank there is at
/// most the rational rank, so reaching the ambient dimension settles the
/// answer; otherwise the closure is redone over `Q`.
pub fn specialize_and_dimension(
    gens: &[ETuple<Rational>],
    point: &[Rational],
) -> Result<usize, EFieldError> {
    let Some(first) = gens.first() else {
        return Ok(1);
    };
    let size = first.len();
    let g: Vec<Vec<Rational>> = gens
        .iter()
        .map(|t| evaluate(t, point))
        .collect::<Result<_, _>>()?;
    if let Some(gp) = g
        .iter()
        .map(|v| v.iter().map(modp::reduce).collect())
        .collect::<Option<Vec<Vec<u64>>>>()
    {
        if closure_dimension::<modp::Fp>(
            size,
            &gp.into_iter()
                .map(|v| v.into_iter().map(modp::Fp).collect())
                .collect::<Vec<_>>(),
        ) == size
        {
            return Ok(size);
        }
    }
    Ok(closure_dimension::<Rational>(size, &g))
}

/// Rank of the unital algebra generated by `g` inside `K^size`, via a
/// reduced echelon form grown by multiplying new rows with the generators.
fn closure_dimension<K: Field>(size: usize, g: &[Vec<K>]) -> usize {
    // (pivot column, row normalized to 1 there)
    let mut rows: Vec<(usize, Vec<K>)> = Vec::new();
    let mut queue = vec![vec![K::one(); size]];
    while let Some(mut v) = queue.pop() {
        for (c, row) in &rows {
            if !v[*c].is_zero() {
                let f = v[*c].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x = x.minus(&f.times(y));
                    }
                }
            }
        }
        let Some(c) = v.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        let inv = v[c].inverse().expect("nonzero pivot");
        for x in v.iter_mut() {
            *x = x.times(&inv);
        }
        for (_, row) in rows.iter_mut() {
            if !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    if !y.is_zero() {
                        *x = x.minus(&f.times(y));
                    }
                }
            }
        }
        queue.extend(
            g.iter()
                .map(|h| v.iter().zip(h).map(|(x, y)| x.times(y)).collect::<Vec<K>>()),
        );
        rows.push((c, v));
        if rows.len() == size {
            break;
        }
    }
    rows.len()
}

mod modp {
    use std::fmt;

    use num_bigint::BigInt;
    use num_traits::ToPrimitive;

    use crate::exact::{Field, Rational, Ring};

    pub const P: u64 = (1 << 61) - 1;

    /// Element of `F_p`, `p = 2^61 - 1`.
    #[derive(Clone, Copy, Debug, PartialEq, Eq)]
    pub struct Fp(pub u64);

    fn mul(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % P as u128) as u64
    }

    fn pow(mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, a);
            }
            a = mul(a, a);
            e >>= 1;
        }
        acc
    }

    fn of_int(v: &BigInt) -> u64 {
        let m = v % BigInt::from(P);
        let m = if m < BigInt::from(0) {
            m + BigInt::from(P)
        } else {
            m
        };
        m.to_u64().expect("reduced below p")
    }

    /// Image of a rational number, unless its denominator vanishes mod `p`.
    pub fn reduce(q: &Rational) -> Option<u64> {
        let d = of_int(q.denom());
        (d != 0).then(|| mul(of_int(q.numer()), pow(d, P - 2)))
    }

    impl fmt::Display for Fp {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "{} mod p", self.0)
        }
    }

    impl Ring for Fp {
        fn zero() -> Self {
            Fp(0)
        }
        fn one() -> Self {
            Fp(1)
        }
        fn is_zero(&self) -> bool {
            self.0 == 0
        }
        fn plus(&self, other: &Self) -> Self {
            Fp((self.0 + other.0) % P)
        }
        fn times(&self, other: &Self) -> Self {
            Fp(mul(self.0, other.0))
        }
        fn negate(&self) -> Self {
            Fp((P - self.0) % P)
        }
        fn from_int(v: i64) -> Self {
            Fp(of_int(&BigInt::from(v)))
        }
    }

    impl Field for Fp {
        fn inverse(&self) -> Option<Self> {
            (self.0 != 0).then(|| Fp(pow(self.0, P - 2)))
        }
        fn from_rational(q: &Rational) -> Self {
            Fp(reduce(q).expect("denominator invertible mod p"))
        }
    }
}

/// Whether the tuples `(C_1(λ), .., C_n(λ))` at `point` are pairwise
/// distinct over `λ ∈ P(r, n)`.
pub fn separation_check(n: usize, r: u32, point: &[Rational]) -> Result<bool, EFieldError> {
    separates(&chern_images(n, r)?, point)
}

/// [`separation_check`] for precomputed generator tuples.
pub fn separates(gens: &[ETuple<Rational>], point: &[Rational]) -> Result<bool, EFieldError> {
    let tuples: Vec<Vec<Rational>> = gens
        .iter()
        .map(|t| evaluate(t, point))
        .collect::<Result<_, _>>()?;
    let m = tuples.first().map_or(0, Vec::len);
    let mut keys: Vec<Vec<Rational>> = (0..m)
        .map(|s| tuples.iter().map(|t| t[s].clone()).collect())
        .collect();
    keys.sort();
    Ok(keys.windows(2).all(|w| w[0] != w[1]))
}

/// Draws a point `(κ, a_1, .., a_{r-1})` with small random rational
/// coordinates, rejecting it until `κ ≠ 0`, the framing values are
/// pairwise distinct and [`separation_check`] holds.
pub fn sample_generic_point(
    n: usize,
    r: u32,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Rational>, EFieldError> {
    sample_generic_point_for(&chern_images(n, r)?, r, rng)
}

/// [`sample_generic_point`] for precomputed Chern images.
pub fn sample_generic_point_for(
    gens: &[ETuple<Rational>],
    r: u32,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Rational>, EFieldError> {
    const ATTEMPTS: usize = 1000;
    for _ in 0..ATTEMPTS {
        let point: Vec<Rational> = (0..r as usize)
            .map(|_| {
                Rational::new(
                    rng.gen_range(-9i64..=9).into(),
                    rng.gen_range(1i64..=5).into(),
                )
            })
            .collect();
        if point[0].is_zero() {
            continue;
        }
        let mut framing: Vec<Rational> = point[1..].to_vec();
        framing.push(point[1..].iter().fold(int(0), |a, x| a - x));
        let mut sorted = framing.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        if separates(gens, &point)? {
            return Ok(point);
        }
    }
    Err(EFieldError::NoGenericPoint(ATTEMPTS))
}

/// Seeded generator used for point sampling.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// All Chern images `k = 1..n`.
pub fn chern_images(n: usize, r: u32) -> Result<Vec<ETuple<Rational>>, EFieldError> {
    (1..=n).map(|k| chern_image(k, n, r)).collect()
}
