//! Twisted Hurwitz numbers on the space of two-pointed curves with flecks.
//!
//! The implicit series L and ξ at a fixed point (or with a formal
//! hyperplane class), the closed formula for `F^{(b1,b2)}` in terms of ξ,
//! both sides of the two-point generating-function identity, the ψ-integral
//! oracles, and the regularity check that pins down `F^{(0,0)}`.

pub mod l0;
pub mod lxi;
pub mod m02d;
pub mod regularity;
pub mod table;

pub use l0::{l0_identity_check, l0_sides, L0Reading};
pub use lxi::{
    defining_residual, l_series_at, l_series_formal, lxi_at, lxi_formal, xi_from_l, xi_residual, xi_series, LXiPair,
};
pub use m02d::{m02d_dual_oracle_mismatch, m02d_psi_integral, m02d_psi_integral_recursive};
pub use regularity::{check_regularity, first_singular, regularized_with, regularized_y};
pub use table::{
    check_two_point_identity, f_from_xi, first_tri_difference, hurwitz_f, two_point_lhs_rhs, two_point_sides, HurwitzTable,
    TriSeries,
};
