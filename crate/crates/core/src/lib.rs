//! Exact powers of elements in quadratic algebras.
//!
//! If `x^2 - t*x + d = 0` over a commutative ring, every power of `x` reduces
//! to `x^m = P_m(t, d) x - d P_{m-1}(t, d)`. This crate computes `P_m` with
//! three independent engines over any [`ring::Ring`], applies the reduction to
//! 2x2 matrices through trace and determinant, and specializes it to
//! Fibonacci/Lucas numbers and Chebyshev polynomials.

pub mod bench;
pub mod error;
pub mod fibapp;
pub mod mat2;
pub mod quadratic;
pub mod report;
pub mod ring;
pub mod verify;

pub use error::{Error, Result};
pub use mat2::Mat2;
pub use quadratic::{CompanionPair, Engine, LinearForm, QuadParams};
pub use report::{Check, Report};
