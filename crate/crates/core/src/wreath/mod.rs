//! The wreath product `Γ_n = S_n ⋉ (Z/r)^n`: group algebra, generalized
//! Jucys–Murphy elements, seminormal irreducibles, the polynomials `p(q)`
//! and `c(q)`, Dunkl–Opdam spectra and the rank-one Cherednik algebra.

mod group;
mod irrep;
mod params;
pub mod rankone;

pub use group::{symmetrizer, wreath_jm, zeta_projector, ColoredPerm, WreathAlgebraElement};
pub use irrep::{wreath_seminormal_irrep, wreath_suite, WreathIrrep, WreathSuite};
pub use params::{
    c_poly, c_vs_p_identity, dunkl_opdam_spectrum, p_at_eta_power, p_poly, p_sum_vanishes, q_vars,
};
pub use rankone::{
    confluence_check, verify_rank_one_coulomb, CoulombReport, Letter, RankOne, RankOneWord,
    Strategy,
};

use crate::exact::ExactError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WreathError {
    #[error("colors must have length n with entries below r")]
    BadColors,
    #[error("invalid indices i = {i}, j = {j} for n = {n}")]
    BadIndices { i: usize, j: usize, n: usize },
    #[error("variable {0} is missing")]
    MissingVariable(String),
    #[error("relation check failed: {0}")]
    Relation(String),
    #[error(transparent)]
    Matrix(#[from] ExactError),
}
