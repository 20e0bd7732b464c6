//! Finite projective systems of rational vector spaces and their completions,
//! multifoliate structures with their pattern groups, and Weil-algebra functors
//! on Cartesian multifibered objects.
//!
//! Everything is exact: scalars are arbitrary-precision rationals, subspaces are
//! kept in canonical reduced row-echelon form so equality of subspaces is
//! equality of data, and every randomized check is seeded and reproducible.

// indices range over poset elements and coordinates; looping over them by
// number is the natural register here
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod rat;
pub mod matrix;
pub mod subspace;
pub mod poset;
pub mod projsys;
pub mod multifoliate;
pub mod classify;
pub mod poly;
pub mod weil;
pub mod json;
pub mod selftest;

pub use error::Error;
pub use matrix::Matrix;
pub use rat::Rat;
pub use subspace::Subspace;
