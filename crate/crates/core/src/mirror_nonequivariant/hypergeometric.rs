//! The series Y, I, Z and the mirror map J.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::tuple::ExponentTuple;
use super::xclass::{XClass, XClassSeries, XCtx};
use crate::error::{Error, Result};
use crate::series_kernel::rational::{binomial, rat};
use crate::series_kernel::ring::Ring;
use crate::series_kernel::series::TruncatedSeries;
use crate::series_kernel::Rational;

/// `1/(x + rħ)^n = (rħ)^{−n} Σ_{m<n} C(−n,m) (x/(rħ))^m`, finite since `x^n = 0`.
fn inverse_power(ctx: XCtx, r: i64, n: u32) -> XClass {
    let mut out = XClass::zero(ctx);
    let rr = rat(r);
    for m in 0..n {
        let sign = if m % 2 == 0 { 1 } else { -1 };
        let c = Rational::from_integer(binomial((n + m - 1) as u64, m as u64) * sign);
        let scale = num_traits::pow(rr.recip(), (n + m) as usize);
        out.add_term(m, -((n + m) as i32), c * scale);
    }
    out
}

/// The q^d coefficient of Y before ħ-truncation.
pub(crate) fn y_coefficient_exact(n: u32, a: &ExponentTuple, d: u32) -> XClass {
    let ctx = XCtx::exact(n);
    let mut acc = XClass::one_in(&ctx);
    if d == 0 {
        return acc;
    }
    let d = d as i64;
    for &ak in a.entries() {
        if ak > 0 {
            for r in 1..=ak * d {
                acc = acc.times(&XClass::linear(ctx, rat(ak), rat(r)));
            }
        } else {
            for r in 0..(-ak * d) {
                acc = acc.times(&XClass::linear(ctx, rat(ak), rat(-r)));
            }
        }
    }
    for r in 1..=d {
        acc = acc.times(&inverse_power(ctx, r, n));
    }
    acc
}

/// The hypergeometric series Y in `ℚ[x]/(x^n)`, expanded down to ħ^{−h_order}.
pub fn y_series(n: u32, a: &ExponentTuple, d_max: usize, h_order: u32) -> XClassSeries {
    let ctx = XCtx::truncated(n, h_order);
    let coeffs = (0..=d_max)
        .map(|d| y_coefficient_exact(n, a, d as u32).truncate(h_order))
        .collect();
    TruncatedSeries::new(ctx, d_max, coeffs)
}

/// The normalizing series I: 1 below the Calabi-Yau threshold, otherwise
/// Y evaluated at `x = 0, ħ = 1`.
pub fn i_series(n: u32, a: &ExponentTuple, d_max: usize) -> Result<TruncatedSeries<Rational>> {
    let excess = a.abs_sum() as i64 - a.l_minus() as i64;
    if excess > n as i64 {
        return Err(Error::Domain(format!(
            "|a| - l_minus = {excess} exceeds n = {n} for a = {a}"
        )));
    }
    if excess < n as i64 {
        return Ok(TruncatedSeries::one((), d_max));
    }
    let coeffs = (0..=d_max).map(|d| y_at_x0_h1(n, a, d as u64)).collect();
    Ok(TruncatedSeries::from_rationals(d_max, coeffs))
}

/// `[q^d] Y(0, 1, q)` as a literal product.
fn y_at_x0_h1(n: u32, a: &ExponentTuple, d: u64) -> Rational {
    let mut num = BigInt::one();
    for &ak in a.entries() {
        if ak > 0 {
            for r in 1..=(ak as u64 * d) {
                num *= r;
            }
        } else {
            for r in 0..(ak.unsigned_abs() * d) {
                num *= -(r as i64);
            }
        }
    }
    if num.is_zero() {
        return Rational::zero();
    }
    let df = crate::series_kernel::rational::factorial(d);
    Rational::new(num, num_traits::pow(df, n as usize))
}

/// `Z = Y / I`.
pub fn z_series(n: u32, a: &ExponentTuple, d_max: usize, h_order: u32) -> Result<XClassSeries> {
    if a.abs_sum() > n as u64 {
        return Err(Error::TheoremDomain(format!("|a| = {} > n = {n}", a.abs_sum())));
    }
    let y = y_series(n, a, d_max, h_order);
    let inv_i = i_series(n, a, d_max)?.invert()?;
    let ctx = *y.ring();
    Ok(y.mul(&inv_i.map(ctx, |c| XClass::constant(ctx, c.clone()))))
}

/// The mirror map J.
pub fn mirror_map_j(n: u32, a: &ExponentTuple, d_max: usize) -> Result<TruncatedSeries<Rational>> {
    let abs = a.abs_sum() as i64;
    let n = n as i64;
    if abs > n {
        return Err(Error::TheoremDomain(format!("|a| = {abs} > n = {n}")));
    }
    if abs == n {
        let z = z_series(n as u32, a, d_max, 1)?;
        let coeffs = z.coeffs().iter().map(|c| c.coeff(1, -1)).collect();
        return Ok(TruncatedSeries::from_rationals(d_max, coeffs));
    }
    if abs == n - 1 && a.l_minus() == 0 {
        let af = Rational::from_integer(a.factorial());
        return Ok(TruncatedSeries::monomial(af, 1, d_max));
    }
    Ok(TruncatedSeries::zero((), d_max))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tup(v: &[i64]) -> ExponentTuple {
        ExponentTuple::new(v.to_vec()).unwrap()
    }

    #[test]
    fn quintic_first_coefficient() {
        let y = y_series(5, &tup(&[5]), 1, 1);
        let c = y.coeff(1);
        assert_eq!(c.coeff(0, 0), rat(120));
        assert_eq!(c.coeff(1, -1), rat(770));
        assert_eq!(c.terms().count(), 2);
    }

    #[test]
    fn fano_index_one_coefficient() {
        // (2x+ħ)(2x+2ħ)/(x+ħ)^3 mod x^3, kept to ħ^{-1}: 2/ħ
        let y = y_series(3, &tup(&[2]), 1, 1);
        let c = y.coeff(1);
        assert_eq!(c.coeff(0, -1), rat(2));
        assert_eq!(c.terms().count(), 1);
    }

    #[test]
    fn degree_zero_is_one() {
        for (n, a) in [(5, vec![5]), (3, vec![]), (4, vec![3, -1])] {
            let y = y_series(n, &tup(&a), 3, 4);
            assert_eq!(y.coeff(0), XClass::one_in(y.ring()));
        }
    }

    #[test]
    fn i_examples() {
        assert_eq!(i_series(5, &tup(&[5]), 2).unwrap(), TruncatedSeries::from_ints(2, &[1, 120, 113400]));
        assert_eq!(i_series(5, &tup(&[3]), 2).unwrap(), TruncatedSeries::one((), 2));
        assert_eq!(i_series(4, &tup(&[]), 2).unwrap(), TruncatedSeries::one((), 2));
        assert!(i_series(2, &tup(&[3]), 2).is_err());
    }

    #[test]
    fn j_examples() {
        assert_eq!(mirror_map_j(5, &tup(&[5]), 1).unwrap().coeff(1), rat(770));
        assert_eq!(mirror_map_j(3, &tup(&[2]), 3).unwrap(), TruncatedSeries::from_ints(3, &[0, 2]));
        assert!(mirror_map_j(5, &tup(&[2]), 3).unwrap().is_zero());
    }

    #[test]
    fn z_first_coefficient() {
        let z = z_series(5, &tup(&[5]), 1, 1).unwrap();
        let c = z.coeff(1);
        assert_eq!(c.coeff(0, 0), rat(0));
        assert_eq!(c.coeff(1, -1), rat(770));
    }

    #[test]
    fn z_equals_y_far_below_threshold() {
        let a = tup(&[2]);
        assert_eq!(z_series(5, &a, 3, 5).unwrap(), y_series(5, &a, 3, 5));
        assert!(z_series(3, &tup(&[2, 2]), 2, 2).is_err());
    }
}
