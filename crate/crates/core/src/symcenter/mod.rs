//! Group algebra of `S_n`: Jucys–Murphy elements, the center with its
//! cycle-count filtration, Young's seminormal form and the isomorphism Θ
//! onto functions on partitions.

mod center;
mod jm;
mod perm;
mod specht;

pub use center::{
    center_basis, class_degree, filtration_generation_check, rees_graded_dims, ClassAlgebra,
    FilteredCenterElement,
};
pub use jm::{all_symmetric_jm, jm_element, jm_left_mul, monomial_jm, symmetric_jm};
pub use perm::{all_perms, factorial, Perm, PermElement};
pub use specht::{character_at, jm_matrices, seminormal_specht, theta_map, ThetaMap};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymError {
    #[error("index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("element is not central")]
    NotCentral,
    #[error("relation check failed: {0}")]
    Relation(String),
    #[error("n = {n} exceeds the supported bound {max}")]
    TooLarge { n: usize, max: usize },
}
