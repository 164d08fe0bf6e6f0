use super::WreathError;
use crate::combinat::{standard_multitableaux, Multipartition};
use crate::exact::{elem_sym_all, int, rat, CycloNum, Field, ParamPoly, Ring, Vars};

/// `1/(r(η^{-l} - 1))`, the weight of `c_l q^l` in `p(q)`.
fn p_weight(r: u32, l: u32) -> CycloNum {
    let d = CycloNum::eta_pow(r, -(l as i64)).minus(&CycloNum::from_rational_in(r, int(1)));
    d.inverse()
        .expect("eta^-l != 1 for 0 < l < r")
        .scale(&rat(1, r as i64))
}

fn c_var(vars: &Vars, l: u32) -> Result<ParamPoly<CycloNum>, WreathError> {
    let name = format!("c{l}");
    vars.index_of(&name)
        .map(|idx| ParamPoly::var(vars, idx))
        .ok_or(WreathError::MissingVariable(name))
}

/// Variables `q, c1, .., c(r-1)`.
pub fn q_vars(r: u32) -> Vars {
    Vars::new(std::iter::once("q".to_string()).chain((1..r).map(|i| format!("c{i}"))))
}

/// `p(q) = (1/r) Σ_{l=1}^{r-1} c_l q^l / (η^{-l} - 1)` over [`q_vars`].
pub fn p_poly(r: u32) -> ParamPoly<CycloNum> {
    let vars = q_vars(r);
    let q = ParamPoly::var(&vars, 0);
    let mut acc = ParamPoly::zero_in(&vars);
    for l in 1..r {
        let term = c_var(&vars, l)
            .expect("own vars")
            .times(&Ring::pow(&q, l))
            .scale(&p_weight(r, l));
        acc = acc.plus(&term);
    }
    acc
}

/// `c(q) = Σ_{l=1}^{r-1} c_l q^l` over [`q_vars`].
pub fn c_poly(r: u32) -> ParamPoly<CycloNum> {
    let vars = q_vars(r);
    let q = ParamPoly::var(&vars, 0);
    let mut acc = ParamPoly::zero_in(&vars);
    for l in 1..r {
        acc = acc.plus(&c_var(&vars, l).expect("own vars").times(&Ring::pow(&q, l)));
    }
    acc.map_coeffs(|c| c.promote(r))
}

/// `p(η^k)` as a polynomial in the `c` variables of `vars`.
pub fn p_at_eta_power(r: u32, k: i64, vars: &Vars) -> Result<ParamPoly<CycloNum>, WreathError> {
    let mut acc = ParamPoly::zero_in(vars);
    for l in 1..r {
        let w = p_weight(r, l).times(&CycloNum::eta_pow(r, k * l as i64));
        acc = acc.plus(&c_var(vars, l)?.scale(&w));
    }
    Ok(acc)
}

/// `Σ_{i=1}^r p(η^{i-1}) = 0`.
pub fn p_sum_vanishes(r: u32) -> bool {
    let vars = q_vars(r);
    let mut acc = ParamPoly::zero_in(&vars);
    for i in 0..r as i64 {
        acc = acc.plus(&p_at_eta_power(r, i, &vars).expect("own vars"));
    }
    acc.is_zero()
}

/// `c(q) = r (p(η^{-1} q) - p(q))` as polynomials in `q`.
pub fn c_vs_p_identity(r: u32) -> bool {
    let vars = q_vars(r);
    let p = p_poly(r);
    let mut images: Vec<ParamPoly<CycloNum>> =
        (0..vars.len()).map(|i| ParamPoly::var(&vars, i)).collect();
    images[0] = images[0].scale(&CycloNum::eta_pow(r, -1));
    let shifted = p.compose(&images);
    let rhs = shifted
        .minus(&p)
        .scale(&CycloNum::from_rational_in(r, int(r as i64)));
    rhs == c_poly(r)
}

/// Per tableau, the list `κ ct(B(i)) + p(η^{β(B(i)) - 1})` over `i`, in the
/// variables `κ, c1, .., c(r-1)`; `β - 1` is the component index.
pub fn dunkl_opdam_spectrum(
    shape: &Multipartition,
) -> Result<Vec<Vec<ParamPoly<CycloNum>>>, WreathError> {
    let r = shape.r() as u32;
    let vars = Vars::kappa_c(r);
    let kappa = ParamPoly::var(&vars, 0);
    let p_vals: Vec<ParamPoly<CycloNum>> = (0..r as i64)
        .map(|l| p_at_eta_power(r, l, &vars))
        .collect::<Result<_, _>>()?;
    let out: Vec<Vec<ParamPoly<CycloNum>>> = standard_multitableaux(shape)
        .iter()
        .map(|b| {
            (0..b.n())
                .map(|i| {
                    kappa
                        .scale(&CycloNum::from_rational_in(r, int(b.content(i))))
                        .plus(&p_vals[b.component(i)])
                })
                .collect()
        })
        .collect();
    let first = out.first().map(|v| elem_sym_all(v));
    for spec in &out {
        if Some(elem_sym_all(spec)) != first {
            return Err(WreathError::Relation(format!(
                "symmetric functions of the spectrum depend on the tableau for {shape}"
            )));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_examples() {
        assert!(p_poly(1).is_zero());
        let p2 = p_poly(2);
        let vars = q_vars(2);
        let expect =
            ParamPoly::monomial(&vars, vec![1, 1], CycloNum::from_rational_in(2, rat(-1, 4)));
        assert_eq!(p2, expect);
        for r in 1..=8 {
            assert!(p_sum_vanishes(r), "r={r}");
            assert!(c_vs_p_identity(r), "r={r}");
        }
    }

    #[test]
    fn p_at_matches_polynomial_evaluation() {
        for r in 2..=5u32 {
            let p = p_poly(r);
            let vars = q_vars(r);
            for k in 0..r as i64 {
                let mut images: Vec<ParamPoly<CycloNum>> =
                    (0..vars.len()).map(|i| ParamPoly::var(&vars, i)).collect();
                images[0] = ParamPoly::constant_in(&vars, CycloNum::eta_pow(r, k));
                assert_eq!(p.compose(&images), p_at_eta_power(r, k, &vars).unwrap());
            }
        }
    }

    #[test]
    fn spectrum_examples() {
        let one: Multipartition = "1".parse().unwrap();
        let s = dunkl_opdam_spectrum(&one).unwrap();
        assert!(s[0][0].is_zero());
        let v = Vars::kappa_c(2);
        let c1 = ParamPoly::var(&v, 1).scale(&CycloNum::from_rational_in(2, rat(-1, 4)));
        let s = dunkl_opdam_spectrum(&"1|∅".parse().unwrap()).unwrap();
        assert_eq!(s, vec![vec![c1.clone()]]);
        let s = dunkl_opdam_spectrum(&"2|∅".parse().unwrap()).unwrap();
        assert_eq!(s, vec![vec![c1.clone(), c1.plus(&ParamPoly::var(&v, 0))]]);
        let s = dunkl_opdam_spectrum(&"∅|1".parse().unwrap()).unwrap();
        assert_eq!(s, vec![vec![c1.negate()]]);
    }

    #[test]
    fn spectrum_symmetric_functions_are_tableau_independent() {
        for r in 1..=3 {
            for n in 1..=4 {
                for shape in crate::combinat::enumerate_multipartitions(r, n) {
                    dunkl_opdam_spectrum(&shape).unwrap();
                }
            }
        }
    }
}
