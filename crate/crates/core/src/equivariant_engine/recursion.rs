//! Recursivity: subtracting the simple poles at the nodes `(α_j − α_i)/d`
//! must leave a Laurent polynomial in ħ.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::coefficients::recursion_coefficient;
use super::fixed_point::{y_family, Family};
use super::frame::FixedPointFrame;
use crate::error::{Error, Result};
use crate::mirror_nonequivariant::{i_series, ExponentTuple};
use crate::series_kernel::{HRational, Rational};

/// Evaluate a family member's coefficient at a node, turning a pole into a
/// resonance error.
pub(crate) fn eval_at_node(f: &HRational, c: &Rational, what: impl FnOnce() -> String) -> Result<Rational> {
    f.eval(c).map_err(|_| Error::Resonance(what()))
}

/// The pole part `Σ_{d ≤ d_star} Σ_{j≠i} 𝕮_i^j(d)/(ħ − c) · F_j[d_star − d](c)`
/// with `c = (α_j − α_i)/d`.
pub fn pole_part(frame: &FixedPointFrame, a: &ExponentTuple, family: &Family, d_star: usize) -> Result<HRational> {
    let i = frame.i();
    let mut acc = HRational::zero();
    for d in 1..=d_star {
        for j in (0..frame.n()).filter(|&j| j != i) {
            let c = frame.node(j, d);
            let coef = recursion_coefficient(frame, a, j, d)?;
            if coef.is_zero() {
                continue;
            }
            let v = eval_at_node(&family[j].coeff(d_star - d), &c, || {
                format!("coefficient q^{} at fixed point {} has a pole at {c}", d_star - d, j + 1)
            })?;
            acc = acc.add(&HRational::inv_linear(c).scale(&(coef * v)));
        }
    }
    Ok(acc)
}

/// Outcome of the recursivity test at one fixed point and degree.
#[derive(Clone, PartialEq, Debug)]
pub struct Remainder {
    pub i: usize,
    pub d_star: usize,
    pub value: HRational,
}

impl Remainder {
    pub fn is_laurent(&self) -> bool {
        self.value.is_laurent_polynomial()
    }
}

/// For every fixed point, the `q^{d_star}` coefficient minus its pole part.
/// The family must cover degrees up to `d_star`.
pub fn check_recursivity(
    frame: &FixedPointFrame,
    a: &ExponentTuple,
    family: &Family,
    d_star: usize,
) -> Result<Vec<Remainder>> {
    if family.len() != frame.n() {
        return Err(Error::Dependency(format!("family has {} members, need {}", family.len(), frame.n())));
    }
    if family.iter().any(|s| s.order() < d_star) {
        return Err(Error::Dependency(format!("family truncated below q^{d_star}")));
    }
    frame
        .points()
        .map(|p| {
            let pole = pole_part(&p, a, family, d_star)?;
            Ok(Remainder { i: p.i(), d_star, value: family[p.i()].coeff(d_star).sub(&pole) })
        })
        .collect()
}

/// Primary coefficients 𝕮_i^j(d) and secondary coefficients `F_i^r(d)`.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct RecursionData {
    /// `(i, j, d) ↦ 𝕮_i^j(d)` (0-based fixed points).
    pub primary: BTreeMap<(usize, usize, usize), Rational>,
    /// `(i, r, d) ↦ F_i^r(d)` for `−d ≤ r ≤ d`.
    pub secondary: BTreeMap<(usize, i32, usize), Rational>,
}

impl RecursionData {
    pub fn secondary(&self, i: usize, r: i32, d: usize) -> Rational {
        self.secondary.get(&(i, r, d)).cloned().unwrap_or_else(Rational::zero)
    }

    /// `Σ_r F_i^r(d) ħ^r` as a rational function.
    pub fn laurent_part(&self, i: usize, d: usize) -> HRational {
        let di = d as i32;
        (-di..=di).fold(HRational::zero(), |acc, r| {
            acc.add(&HRational::hbar_pow(r).scale(&self.secondary(i, r, d)))
        })
    }
}

/// Secondary coefficients of Y read from its expansion at ħ = 0: the
/// Laurent coefficients for `r < 0`, the coefficients of I for `r = 0`,
/// nothing for `r > 0`.
pub fn secondary_coefficients_y(frame: &FixedPointFrame, a: &ExponentTuple, d_max: usize) -> Result<RecursionData> {
    let family = y_family(frame, a, d_max)?;
    let i_ser = i_series(frame.n() as u32, a, d_max)?;
    let mut data = RecursionData::default();
    for p in frame.points() {
        let i = p.i();
        for d in 1..=d_max {
            for j in (0..frame.n()).filter(|&j| j != i) {
                data.primary.insert((i, j, d), recursion_coefficient(&p, a, j, d)?);
            }
        }
        for d in 0..=d_max {
            let coeff = family[i].coeff(d);
            let window = coeff.laurent_expand(-(d as i32), -1);
            for r in -(d as i32)..0 {
                let v = window.coeff(r);
                if !v.is_zero() {
                    data.secondary.insert((i, r, d), v);
                }
            }
            let c0 = i_ser.coeff(d);
            if !c0.is_zero() {
                data.secondary.insert((i, 0, d), c0);
            }
        }
    }
    Ok(data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series_kernel::rational::rat;
    use crate::series_kernel::UniPoly;

    #[test]
    fn two_points_remainder_is_laurent_monomial() {
        let f = FixedPointFrame::from_ints(&[3, 8], 0).unwrap();
        let e = ExponentTuple::empty();
        let fam = y_family(&f, &e, 1).unwrap();
        let rems = check_recursivity(&f, &e, &fam, 1).unwrap();
        // −1/(c ħ) with c = α_2 − α_1
        let expected = HRational::from_parts(UniPoly::constant(rat(-1) / rat(5)), [(rat(0), 1)]);
        assert_eq!(rems[0].value, expected);
        assert!(rems.iter().all(Remainder::is_laurent));
    }

    #[test]
    fn degree_zero_remainder_is_one() {
        let f = FixedPointFrame::from_ints(&[3, 8], 1).unwrap();
        let fam = y_family(&f, &ExponentTuple::empty(), 0).unwrap();
        let rems = check_recursivity(&f, &ExponentTuple::empty(), &fam, 0).unwrap();
        assert!(rems.iter().all(|r| r.value == HRational::one()));
    }

    #[test]
    fn secondary_coefficients_two_points() {
        let f = FixedPointFrame::from_ints(&[3, 8], 0).unwrap();
        let data = secondary_coefficients_y(&f, &ExponentTuple::empty(), 1).unwrap();
        assert_eq!(data.secondary(0, -1, 1), rat(-1) / rat(5));
        assert_eq!(data.secondary(0, 0, 0), rat(1));
        assert_eq!(data.secondary(0, 0, 1), rat(0));
    }

    #[test]
    fn quintic_secondary_degree_zero_part_is_i() {
        let f = FixedPointFrame::from_ints(&[1, -3, 4, 9, -7], 0).unwrap();
        let a: ExponentTuple = "5".parse().unwrap();
        let data = secondary_coefficients_y(&f, &a, 1).unwrap();
        assert_eq!(data.secondary(0, 0, 1), rat(120));
    }
}
