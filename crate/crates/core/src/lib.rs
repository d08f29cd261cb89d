//! Exact and numerical tools for the family of genus-4 curves `y⁵ = x(x−1)(x−t)`:
//! arithmetic in Q(√5), Q(ζ₅) and Q(⁴√5), the Δ(2,3,10) triangle group acting on
//! the upper half plane, real CM points on the Shimura curve, and point counting
//! with Newton-polygon classification of the reductions.

pub(crate) mod ops;

pub mod cm_points;
pub mod cyclotomic;
pub mod error;
pub mod nt;
pub mod quartic_field;
pub mod reduction_lab;
pub mod ring_f0;
pub mod tolerance;
pub mod triangle_group;

pub use error::{Error, Result};
