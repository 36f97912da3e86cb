//! Exact computations for the reconstruction algebra of a cyclic quotient
//! surface singularity 1/r(1,a).

pub mod combinatorics;
pub mod poly;
pub mod groebner;
pub mod lattice;
pub mod artin;
pub mod deform;
pub mod fixtures;
pub mod cli;
