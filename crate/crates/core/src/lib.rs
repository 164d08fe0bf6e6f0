//! Exact verification toolkit for the equivariant cohomology of Gieseker
//! varieties, the centers of degenerate cyclotomic Hecke algebras and the
//! fixed-point algebras of rank-`r` Cherednik algebras.

pub mod appendixfix;
pub mod calogero;
pub mod combinat;
pub mod efield;
pub mod exact;
pub mod heckecyclo;
pub mod seminormal;
pub mod symcenter;
pub mod wreath;
