//! Exact computation of genus-0 twisted stable-quotients and Gromov-Witten
//! invariants of projective spaces from hypergeometric mirror series, plus
//! order-by-order checks of the equivariant structure behind them.
//!
//! Modules, bottom up:
//! - [`series_kernel`]: rationals, polynomials, rational functions of ħ,
//!   truncated power series.
//! - [`mirror_nonequivariant`]: the series Y, I, J, Z and invariant extraction.
//! - [`equivariant_engine`]: fixed-point evaluations, recursion coefficients,
//!   recursivity and polynomiality checks, reconstruction of Z.
//! - [`hurwitz`]: the series L and ξ, twisted Hurwitz numbers, the
//!   two-pointed psi integrals.
//! - [`cli`]: the command-line front end.

pub mod cli;
pub mod equivariant_engine;
pub mod error;
pub mod hurwitz;
pub mod mirror_nonequivariant;
pub mod series_kernel;

pub use error::{Error, Result};
