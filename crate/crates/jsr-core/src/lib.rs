//! Exact toolkit for the joint spectral radius of finite sets of rational
//! matrices: bracketing bounds from products of increasing length,
//! finiteness-property certificates, reductions down to pairs of binary
//! matrices, a stability semi-decider, and a complete verified census of all
//! pairs of 2x2 binary matrices.
//!
//! All matrix arithmetic is exact rational; floating point appears only as a
//! prefilter for ranking candidates and in decimal renderings, never in a
//! decision.

pub mod bounds;
pub mod census;
pub mod doc;
pub mod error;
pub mod finiteness;
pub mod matrix;
pub mod poly;
pub mod reductions;
pub mod surd;
pub mod value;

pub use error::{Error, Result};
pub use matrix::{evaluate_word, ExactMatrix, MatrixSet, ProductWord};
pub use surd::QuadSurd;
pub use value::{
    compare_values, spectral_radius_exact_2x2, spectral_radius_interval, AlgebraicValue,
    Interval, SpectralEnclosure, ValueOrdering,
};
