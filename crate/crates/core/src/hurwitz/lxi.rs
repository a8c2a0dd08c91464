//! The implicit series L and its logarithmic antiderivative ξ.
//!
//! L is the solution of `Π_k (L − α_k) − q a^a L^{|a|} = Π_k (x − α_k)` with
//! `L(q=0) = x`, and ξ is fixed by `x + q dξ/dq = L`, `ξ(0) = 0`. At a fixed
//! point `x = α_i` the right side vanishes; in the formal mode every weight is
//! 0 and `x` stays a variable.

use serde_json::{json, Value};

use crate::equivariant_engine::FixedPointFrame;
use crate::error::{Error, Result};
use crate::mirror_nonequivariant::ExponentTuple;
use crate::series_kernel::rational::rat;
use crate::series_kernel::{solve_implicit, CanonicalJson, Rational, Ring, TruncatedSeries, UniPoly};

/// L and ξ in one coefficient ring.
#[derive(Clone, PartialEq, Debug)]
pub struct LXiPair<R: Ring> {
    /// `"frame"` or `"formal-x"`.
    pub mode: &'static str,
    pub l: TruncatedSeries<R>,
    pub xi: TruncatedSeries<R>,
}

impl<R: Ring + CanonicalJson> LXiPair<R> {
    pub fn to_json(&self) -> Value {
        json!({"mode": self.mode, "L": self.l.to_json(), "xi": self.xi.to_json()})
    }
}

/// `Π_k (L − α_k) − q a^a L^{|a|} − Π_k (x − α_k)` with the weights and `x`
/// given as ring constants.
pub fn defining_residual<R: Ring>(
    l: &TruncatedSeries<R>,
    weights: &[R],
    x: &R,
    a: &ExponentTuple,
) -> TruncatedSeries<R> {
    let ring = l.ring().clone();
    let order = l.order();
    let mut lhs = TruncatedSeries::one(ring.clone(), order);
    let mut rhs = R::one_in(&ring);
    for w in weights {
        lhs = lhs.mul(&l.sub(&TruncatedSeries::constant(w.clone(), order)));
        rhs = rhs.times(&x.minus(w));
    }
    let aa = Rational::from_integer(a.a_pow_a());
    let shift = TruncatedSeries::monomial(R::from_rational(&ring, &aa), 1, order);
    lhs.sub(&shift.mul(&l.pow(a.abs_sum() as u32)))
        .sub(&TruncatedSeries::constant(rhs, order))
}

/// `ξ = Σ_{d≥1} (L_d / d) q^d`.
pub fn xi_from_l<R: Ring>(l: &TruncatedSeries<R>) -> TruncatedSeries<R> {
    let ring = l.ring().clone();
    let coeffs = (0..=l.order())
        .map(|d| if d == 0 { R::zero_in(&ring) } else { l.coeff(d).scale(&rat(d as i64).recip()) })
        .collect();
    TruncatedSeries::new(ring, l.order(), coeffs)
}

/// `x + q dξ/dq − L`, which must vanish.
pub fn xi_residual<R: Ring>(xi: &TruncatedSeries<R>, l: &TruncatedSeries<R>, x: &R) -> TruncatedSeries<R> {
    let order = xi.order().min(l.order());
    TruncatedSeries::constant(x.clone(), order).add(&xi.q_derivative()).sub(l)
}

fn solve<R: Ring>(weights: &[R], x: &R, a: &ExponentTuple, d_max: usize) -> Result<TruncatedSeries<R>> {
    let initial = TruncatedSeries::constant(x.clone(), d_max);
    solve_implicit(|l| defining_residual(l, weights, x, a), &initial)
}

/// L at the frame's fixed point (`x = α_i`).
pub fn l_series_at(frame: &FixedPointFrame, a: &ExponentTuple, d_max: usize) -> Result<TruncatedSeries<Rational>> {
    let x = frame.weight(frame.i()).clone();
    solve(frame.alpha(), &x, a, d_max).map_err(|e| match e {
        Error::SingularEquation { degree } => {
            Error::Frame(format!("singular linearization at q^{degree}; weights are degenerate"))
        }
        other => other,
    })
}

/// L over `ℚ[x]` with all `n` weights equal to 0.
pub fn l_series_formal(n: u32, a: &ExponentTuple, d_max: usize) -> Result<TruncatedSeries<UniPoly>> {
    let weights = vec![UniPoly::zero(); n as usize];
    solve(&weights, &UniPoly::var(), a, d_max)
}

pub fn lxi_at(frame: &FixedPointFrame, a: &ExponentTuple, d_max: usize) -> Result<LXiPair<Rational>> {
    let l = l_series_at(frame, a, d_max)?;
    Ok(LXiPair { mode: "frame", xi: xi_from_l(&l), l })
}

pub fn lxi_formal(n: u32, a: &ExponentTuple, d_max: usize) -> Result<LXiPair<UniPoly>> {
    let l = l_series_formal(n, a, d_max)?;
    Ok(LXiPair { mode: "formal-x", xi: xi_from_l(&l), l })
}

/// ξ at the frame's fixed point.
pub fn xi_series(frame: &FixedPointFrame, a: &ExponentTuple, d_max: usize) -> Result<TruncatedSeries<Rational>> {
    Ok(lxi_at(frame, a, d_max)?.xi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series_kernel::rational::frac;

    fn tuple(s: &str) -> ExponentTuple {
        s.parse().unwrap()
    }

    #[test]
    fn one_point_empty_tuple() {
        let f = FixedPointFrame::from_ints(&[4], 0).unwrap();
        let p = lxi_at(&f, &ExponentTuple::empty(), 4).unwrap();
        assert_eq!(p.l, TruncatedSeries::from_ints(4, &[4, 1]));
        assert_eq!(p.xi, TruncatedSeries::from_ints(4, &[0, 1]));
    }

    #[test]
    fn one_point_linear_twist_is_geometric() {
        let f = FixedPointFrame::from_ints(&[3], 0).unwrap();
        let p = lxi_at(&f, &tuple("1"), 5).unwrap();
        assert_eq!(p.l, TruncatedSeries::from_ints(5, &[3, 3, 3, 3, 3, 3]));
        assert_eq!(p.xi.coeff(2), frac(3, 2));
    }

    #[test]
    fn formal_quintic() {
        let p = lxi_formal(5, &tuple("5"), 3).unwrap();
        assert_eq!(p.l.coeff(1), UniPoly::monomial(rat(625), 1));
        assert_eq!(p.xi.coeff(1), UniPoly::monomial(rat(625), 1));
        // L^5 (1 − 3125 q) = x^5
        let lhs = p.l.pow(5).mul(&TruncatedSeries::new((), 3, vec![UniPoly::one(), UniPoly::constant(rat(-3125))]));
        assert_eq!(lhs, TruncatedSeries::constant(UniPoly::monomial(rat(1), 5), 3));
    }

    #[test]
    fn residuals_vanish_at_a_frame() {
        let f = FixedPointFrame::from_ints(&[2, -7, 5, 11, -3], 3).unwrap();
        let a = tuple("3,-1");
        let p = lxi_at(&f, &a, 4).unwrap();
        let x = f.weight(3).clone();
        assert!(defining_residual(&p.l, f.alpha(), &x, &a).is_zero());
        assert!(xi_residual(&p.xi, &p.l, &x).is_zero());
    }

    #[test]
    fn formal_mode_below_threshold_is_singular() {
        assert!(matches!(lxi_formal(5, &tuple("2"), 2), Err(Error::SingularEquation { .. })));
    }
}
