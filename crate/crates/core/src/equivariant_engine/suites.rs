//! Frame-level verdicts for the recursivity, edge-coefficient and
//! self-polynomiality checks.

use super::coefficients::{edge_coefficient_via_euler, recursion_coefficient};
use super::fixed_point::y_family;
use super::frame::FixedPointFrame;
use super::polynomiality::{first_non_polynomial, phi_series};
use super::recursion::check_recursivity;
use super::verdict::Verdict;
use crate::error::Result;
use crate::mirror_nonequivariant::ExponentTuple;

/// Every remainder of Y for `d* ≤ d_max` at every fixed point must be a
/// Laurent polynomial in ħ. On success the witness shows the `d* = 1`
/// remainder at the first fixed point.
pub fn check_recursivity_y(frame: &FixedPointFrame, a: &ExponentTuple, d_max: usize) -> Result<Verdict> {
    let verdict = Verdict::new("recursivity", frame, a, d_max);
    let family = y_family(frame, a, d_max)?;
    let mut note = None;
    for d_star in 0..=d_max {
        for rem in check_recursivity(frame, a, &family, d_star)? {
            if !rem.is_laurent() {
                return Ok(verdict.fail(format!("i={} q^{d_star}: remainder {}", rem.i + 1, rem.value)));
            }
            if d_star == 1 && rem.i == 0 {
                note = Some(format!("i=1 q^1 remainder {}", rem.value));
            }
        }
    }
    let mut v = verdict.passed();
    v.witness = note;
    Ok(v)
}

/// The edge Euler-class expression of 𝕮_i^j(d) must equal the direct
/// product formula for all `i`, `j ≠ i` and `d ≤ d_max`.
pub fn check_edge_coefficients(frame: &FixedPointFrame, a: &ExponentTuple, d_max: usize) -> Result<Verdict> {
    let verdict = Verdict::new("edge-coefficients", frame, a, d_max);
    for p in frame.points() {
        for j in (0..frame.n()).filter(|&j| j != p.i()) {
            for d in 1..=d_max {
                let (x, y) = (edge_coefficient_via_euler(&p, a, j, d)?, recursion_coefficient(&p, a, j, d)?);
                if x != y {
                    return Ok(verdict.fail(format!("i={} j={} d={d}: Euler {x} vs direct {y}", p.i() + 1, j + 1)));
                }
            }
        }
    }
    Ok(verdict.passed())
}

/// Φ_Y up to `z^{z_max} q^{d_max}` must be polynomial in ħ.
pub fn check_polynomiality_y(frame: &FixedPointFrame, a: &ExponentTuple, d_max: usize, z_max: usize) -> Result<Verdict> {
    let verdict = Verdict::new("polynomiality", frame, a, d_max);
    let phi = phi_series(frame, a, &y_family(frame, a, d_max)?, z_max)?;
    Ok(match first_non_polynomial(&phi) {
        Some((d, m, c)) => verdict.fail(format!("q^{d} z^{m}: {c}")),
        None => verdict.passed(),
    })
}
