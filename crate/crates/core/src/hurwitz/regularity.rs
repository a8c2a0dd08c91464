//! Regularity at ħ = 0 of `e^{−ξ(α_i,q)/ħ} · Y(α_i, ħ, q)`.
//!
//! ξ is the unique series in `q·ℚ[[q]]` making every coefficient regular, so
//! this check confirms independently that `F^{(0,0)} = ξ`.

use num_traits::Zero;

use super::lxi::xi_series;
use crate::equivariant_engine::{y_equivariant, FixedPointFrame, Verdict};
use crate::error::Result;
use crate::mirror_nonequivariant::ExponentTuple;
use crate::series_kernel::{HRational, Rational, TruncatedSeries};

/// `e^{−ξ/ħ} · Y(α_i)` up to `q^{d_max}`.
pub fn regularized_y(frame: &FixedPointFrame, a: &ExponentTuple, d_max: usize) -> Result<TruncatedSeries<HRational>> {
    let xi = xi_series(frame, a, d_max)?;
    regularized_with(frame, a, &xi)
}

/// As [`regularized_y`] with a caller-supplied ξ.
pub fn regularized_with(frame: &FixedPointFrame, a: &ExponentTuple, xi: &TruncatedSeries<Rational>) -> Result<TruncatedSeries<HRational>> {
    let inv_h = HRational::hbar_pow(-1);
    let exponent = xi.map((), |c| inv_h.scale(&-c.clone()));
    let y = y_equivariant(frame, a, xi.order())?.series;
    Ok(exponent.exp()?.mul(&y))
}

/// First `(d, pole order at 0)` with a pole at ħ = 0.
pub fn first_singular(series: &TruncatedSeries<HRational>) -> Option<(usize, u32)> {
    (0..=series.order()).find_map(|d| {
        let k = series.coeff(d).pole_order_at(&Rational::zero());
        (k > 0).then_some((d, k))
    })
}

/// Regularity at every fixed point of the frame.
pub fn check_regularity(frame: &FixedPointFrame, a: &ExponentTuple, d_max: usize) -> Result<Verdict> {
    let verdict = Verdict::new("regularity", frame, a, d_max);
    for p in frame.points() {
        if let Some((d, k)) = first_singular(&regularized_y(&p, a, d_max)?) {
            return Ok(verdict.fail(format!("i={} q^{d}: pole of order {k} at ħ=0", p.i() + 1)));
        }
    }
    Ok(verdict.passed())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quintic_frame_is_regular() {
        let f = FixedPointFrame::from_ints(&[1, -4, 9, 6, -13], 0).unwrap();
        let v = check_regularity(&f, &"5".parse().unwrap(), 3).unwrap();
        assert!(v.pass, "{v:?}");
    }

    #[test]
    fn wrong_xi_is_singular() {
        let f = FixedPointFrame::from_ints(&[2, -3], 1).unwrap();
        let a = ExponentTuple::empty();
        let wrong = TruncatedSeries::from_ints(3, &[0, 2]);
        let s = regularized_with(&f, &a, &wrong).unwrap();
        assert_eq!(first_singular(&s).map(|(d, _)| d), Some(1));
    }
}
