//! The bilinear assembly Φ and the self-polynomiality test.

use num_traits::One;

use super::fixed_point::Family;
use super::frame::FixedPointFrame;
use crate::error::{Error, Result};
use crate::mirror_nonequivariant::ExponentTuple;
use crate::series_kernel::rational::{rat, rpow};
use crate::series_kernel::{substitute_q_scaled, HRational, Rational, SeriesCtx, TruncatedSeries};

/// A series in q (outer) and z (inner) with rational-function coefficients.
pub type ZqSeries = TruncatedSeries<TruncatedSeries<HRational>>;

/// `e^{w z}` up to `z^{z_max}`.
fn exp_linear(w: &Rational, z_max: usize) -> TruncatedSeries<HRational> {
    let mut coeffs = Vec::with_capacity(z_max + 1);
    let mut term = Rational::one();
    for m in 0..=z_max {
        if m > 0 {
            term = term * w / rat(m as i64);
        }
        coeffs.push(HRational::constant(term.clone()));
    }
    TruncatedSeries::new((), z_max, coeffs)
}

/// `Φ = Σ_i ⟨a⟩ α_i^{ℓ(a)} e^{α_i z} / Π_{k≠i}(α_i − α_k) · F_i(ħ, q e^{ħz}) · F_i(−ħ, q)`.
pub fn phi_series(frame: &FixedPointFrame, a: &ExponentTuple, family: &Family, z_max: usize) -> Result<ZqSeries> {
    if family.len() != frame.n() {
        return Err(Error::Dependency(format!("family has {} members, need {}", family.len(), frame.n())));
    }
    let q_order = family.iter().map(|s| s.order()).min().unwrap_or(0);
    let zctx = SeriesCtx { ring: (), order: z_max };
    let mut total = TruncatedSeries::zero(zctx.clone(), q_order);
    for p in frame.points() {
        let i = p.i();
        let ai = p.weight(i);
        let w = a.bracket() * rpow(ai, a.ell())? / p.tangent_euler();
        let shifted = substitute_q_scaled(&family[i], z_max);
        let reflected = family[i].map(zctx.clone(), |c| TruncatedSeries::constant(c.reflect(), z_max));
        let ez = TruncatedSeries::constant(exp_linear(ai, z_max), q_order);
        let term = shifted.mul(&reflected).mul(&ez).map(zctx.clone(), |zs| zs.scale(&w));
        total = total.add(&term);
    }
    Ok(total)
}

/// The first `(q-degree, z-degree)` whose coefficient is not a polynomial in ħ.
pub fn first_non_polynomial(phi: &ZqSeries) -> Option<(usize, usize, HRational)> {
    phi.coeffs().iter().enumerate().find_map(|(d, zs)| {
        zs.coeffs()
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_polynomial())
            .map(|(m, c)| (d, m, c.clone()))
    })
}

/// True iff every coefficient of Φ is a polynomial in ħ.
pub fn check_polynomiality(phi: &ZqSeries) -> bool {
    first_non_polynomial(phi).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivariant_engine::fixed_point::y_family;
    use crate::series_kernel::UniPoly;

    fn ones(frame: &FixedPointFrame, d: usize) -> Family {
        (0..frame.n()).map(|_| TruncatedSeries::one((), d)).collect()
    }

    #[test]
    fn two_points_constant_term_cancels() {
        let f = FixedPointFrame::from_ints(&[2, 9], 0).unwrap();
        let phi = phi_series(&f, &ExponentTuple::empty(), &ones(&f, 1), 1).unwrap();
        assert!(phi.coeff(0).coeff(0).is_zero());
        // z^1: (α_1 − α_2)/(α_1 − α_2) = 1
        assert_eq!(phi.coeff(0).coeff(1), HRational::one());
        assert!(check_polynomiality(&phi));
    }

    #[test]
    fn negative_control_is_detected() {
        // n = 1 and F = 1 + q/ħ: the q^2 coefficient −e^{αz} e^{ħz}/ħ² has a pole.
        let f = FixedPointFrame::from_ints(&[3], 0).unwrap();
        let fam = vec![TruncatedSeries::new(
            (),
            2,
            vec![HRational::one(), HRational::from_parts(UniPoly::one(), [(rat(0), 1)])],
        )];
        let phi = phi_series(&f, &ExponentTuple::empty(), &fam, 2).unwrap();
        let (d, m, _) = first_non_polynomial(&phi).unwrap();
        assert_eq!((d, m), (2, 0));
        assert!(phi.coeff(1).coeffs().iter().all(HRational::is_polynomial));
    }

    #[test]
    fn quintic_phi_is_polynomial_low_order() {
        let f = FixedPointFrame::from_ints(&[1, -3, 4, 9, -7], 0).unwrap();
        let a: ExponentTuple = "5".parse().unwrap();
        let fam = y_family(&f, &a, 2).unwrap();
        let phi = phi_series(&f, &a, &fam, 2).unwrap();
        assert_eq!(first_non_polynomial(&phi).map(|(d, m, _)| (d, m)), None);
    }
}
