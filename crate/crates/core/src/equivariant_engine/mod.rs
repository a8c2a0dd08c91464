//! Equivariant side: fixed-point restrictions of Y and Z over rational
//! torus weights, the recursion coefficients 𝕮, recursivity and
//! self-polynomiality checks, secondary coefficients, reconstruction of Z
//! from twisted Hurwitz numbers, and the resulting mirror identity.
//!
//! Weights are specialized to distinct rationals ([`FixedPointFrame`]);
//! identities are checked at several generic frames.

pub mod coefficients;
pub mod fixed_point;
pub mod formal;
pub mod frame;
pub mod polynomiality;
pub mod reconstruct;
pub mod recursion;
pub mod suites;
pub mod verdict;

pub use coefficients::{edge_coefficient_via_euler, recursion_coefficient};
pub use fixed_point::{
    divide_family, pole_order_violation, twist_numerator, y_coefficient, y_equivariant, y_family,
    EquivariantYSeries, Family,
};
pub use formal::{formal_limit_mismatch, formal_restriction_mismatch, formal_y_coefficient, FormalCoefficient};
pub use frame::FixedPointFrame;
pub use polynomiality::{check_polynomiality, first_non_polynomial, phi_series, ZqSeries};
pub use reconstruct::{
    check_mirror_identity, check_mirror_identity_with, first_family_difference, reconstruct_z,
    residue_identity_mismatch, y_over_i_family, HurwitzProvider, ResidueMismatch,
};
pub use recursion::{check_recursivity, pole_part, secondary_coefficients_y, RecursionData, Remainder};
pub use suites::{check_edge_coefficients, check_polynomiality_y, check_recursivity_y};
pub use verdict::Verdict;
