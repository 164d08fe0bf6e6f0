//! Partitions, multipartitions, standard tableaux and Frobenius hooks.

mod hat;
mod multipartition;
mod partition;
mod tableau;

pub use hat::{
    admissible_pairs, hat_bijection_general, hat_bijection_r1, hat_inverse_general, hat_inverse_r1,
    hat_round_trip,
};
pub use multipartition::{enumerate_multipartitions, multipartition_count, Multipartition};
pub use partition::{contents, partition_counts, partitions, Partition};
pub use tableau::{
    frobenius_hooks, hook_length_count, standard_multitableaux, Cell, FrobeniusHook,
    StandardMultitableau,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CombinatError {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("cannot parse {0:?} as a partition")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}
