//! Fixed-point restrictions of the equivariant hypergeometric series Y.

use num_traits::{One, Zero};

use super::frame::FixedPointFrame;
use crate::error::Result;
use crate::mirror_nonequivariant::ExponentTuple;
use crate::series_kernel::rational::rat;
use crate::series_kernel::{CanonicalJson, HRational, Rational, TruncatedSeries, UniPoly};

/// A q-series with rational-function coefficients, one per fixed point.
pub type Family = Vec<TruncatedSeries<HRational>>;

/// `Y(α_i, ħ, q)` up to `q^{d_max}`.
#[derive(Clone, PartialEq, Debug)]
pub struct EquivariantYSeries {
    pub frame: FixedPointFrame,
    pub series: TruncatedSeries<HRational>,
}

impl EquivariantYSeries {
    pub fn d_max(&self) -> usize {
        self.series.order()
    }

    pub fn coeff(&self, d: usize) -> HRational {
        self.series.coeff(d)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "frame": self.frame.alpha().iter().map(|c| c.to_json()).collect::<Vec<_>>(),
            "i": self.frame.i() + 1,
            "series": self.series.to_json(),
        })
    }
}

/// Product of the twisting factors at `x = w` for degree `d`, as a
/// polynomial in ħ: `Π_{a_k>0} Π_{r=1}^{a_k d} (a_k w + rħ)` times
/// `Π_{a_k<0} Π_{r=0}^{−a_k d−1} (a_k w − rħ)`.
pub fn twist_numerator(a: &ExponentTuple, w: &Rational, d: usize) -> UniPoly {
    let d = d as i64;
    let mut num = UniPoly::one();
    for &ak in a.entries() {
        let base = rat(ak) * w;
        if ak > 0 {
            for r in 1..=ak * d {
                num = num.mul(&UniPoly::linear(rat(r), base.clone()));
            }
        } else {
            for r in 0..(-ak * d) {
                num = num.mul(&UniPoly::linear(rat(-r), base.clone()));
            }
        }
    }
    num
}

/// The `q^d` coefficient of Y at the frame's fixed point:
/// the twist numerator over `Π_{r=1}^{d} Π_k (α_i − α_k + rħ)`.
pub fn y_coefficient(frame: &FixedPointFrame, a: &ExponentTuple, d: usize) -> HRational {
    if d == 0 {
        return HRational::one();
    }
    let ai = frame.weight(frame.i());
    let n = frame.n();
    let num = twist_numerator(a, ai, d);
    // α_i − α_k + rħ = r (ħ − (α_k − α_i)/r)
    let mut lead = Rational::one();
    let mut poles = Vec::with_capacity(n * d);
    for r in 1..=d as i64 {
        lead *= num_traits::pow(rat(r), n);
        for ak in frame.alpha() {
            poles.push(((ak - ai) / rat(r), 1));
        }
    }
    HRational::from_parts(num.scale(&lead.recip()), poles)
}

/// `Y(α_i, ħ, q)` up to `q^{d_max}`.
pub fn y_equivariant(frame: &FixedPointFrame, a: &ExponentTuple, d_max: usize) -> Result<EquivariantYSeries> {
    let coeffs = (0..=d_max).map(|d| y_coefficient(frame, a, d)).collect();
    Ok(EquivariantYSeries { frame: frame.clone(), series: TruncatedSeries::new((), d_max, coeffs) })
}

/// Y at every fixed point of the frame's weights.
pub fn y_family(frame: &FixedPointFrame, a: &ExponentTuple, d_max: usize) -> Result<Family> {
    frame.points().map(|p| y_equivariant(&p, a, d_max).map(|y| y.series)).collect()
}

/// Divide every member of a family by a scalar q-series (used for `Y/I`).
pub fn divide_family(family: &Family, by: &TruncatedSeries<Rational>) -> Result<Family> {
    let inv = by.invert()?.map((), |c| HRational::constant(c.clone()));
    Ok(family.iter().map(|s| s.mul(&inv)).collect())
}

/// Highest pole order at ħ = 0 among the coefficients, paired with the
/// first degree where it exceeds the degree itself (if any).
pub fn pole_order_violation(series: &TruncatedSeries<HRational>) -> Option<(usize, u32)> {
    series.coeffs().iter().enumerate().find_map(|(d, c)| {
        let m = c.pole_order_at(&Rational::zero());
        (m as usize > d).then_some((d, m))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_points_empty_tuple_degree_one() {
        let f = FixedPointFrame::from_ints(&[3, 8], 0).unwrap();
        let y = y_equivariant(&f, &ExponentTuple::empty(), 2).unwrap();
        // 1/(ħ(α_1 − α_2 + ħ))
        let expected = HRational::from_parts(UniPoly::one(), [(rat(0), 1), (rat(5), 1)]);
        assert_eq!(y.coeff(1), expected);
        assert_eq!(y.coeff(0), HRational::one());
    }

    #[test]
    fn pole_order_at_zero_is_at_most_degree() {
        let f = FixedPointFrame::from_ints(&[1, -3, 4, 9, -7], 2).unwrap();
        let a: ExponentTuple = "5".parse().unwrap();
        let y = y_equivariant(&f, &a, 4).unwrap();
        assert_eq!(pole_order_violation(&y.series), None);
    }

    #[test]
    fn value_matches_direct_product() {
        let f = FixedPointFrame::from_ints(&[2, -1, 5], 1).unwrap();
        let a: ExponentTuple = "2,-1".parse().unwrap();
        let y2 = y_coefficient(&f, &a, 2);
        let h = rat(7);
        let ai = rat(-1);
        let mut num = rat(1);
        for r in 1..=4 {
            num *= rat(2) * &ai + rat(r) * &h;
        }
        for r in 0..2 {
            num *= -&ai - rat(r) * &h;
        }
        let mut den = rat(1);
        for r in 1..=2 {
            for ak in [2, -1, 5] {
                den *= &ai - rat(ak) + rat(r) * &h;
            }
        }
        assert_eq!(y2.eval(&h).unwrap(), num / den);
    }
}
