//! Exact arithmetic substrate: rationals, polynomials, rational functions of
//! ħ, Laurent windows, and truncated power series.

pub mod hrational;
pub mod json;
pub mod poly;
pub mod rational;
pub mod ring;
pub mod series;
pub mod sparse;

pub use hrational::{HRational, LaurentWindow};
pub use json::CanonicalJson;
pub use poly::UniPoly;
pub use rational::{frac, rat, Rational};
pub use ring::Ring;
pub use series::{
    series_add, series_exp, series_invert, series_mul, series_reversion, series_solve_implicit,
    solve_implicit, substitute_q_scaled, SeriesCtx, TruncatedSeries,
};
pub use sparse::SparsePoly;

/// Laurent window of `f` at ħ = 0 over `low … high`.
pub fn laurent_expand(f: &HRational, low: i32, high: i32) -> LaurentWindow {
    f.laurent_expand(low, high)
}

/// Coefficient of ħ⁻¹ at ħ = 0.
pub fn residue_at_zero(f: &HRational) -> Rational {
    f.residue_at_zero()
}
