//! Y with the hyperplane class kept formal: coefficients live in
//! `ℚ[x]/(Π_k (x − α_k))` and are expanded at ħ = ∞. With every weight
//! set to 0 this is the non-equivariant ring `ℚ[x]/(x^n)`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::fixed_point::y_coefficient;
use super::frame::FixedPointFrame;
use crate::error::{Error, Result};
use crate::mirror_nonequivariant::{y_series, ExponentTuple};
use crate::series_kernel::rational::rat;
use crate::series_kernel::{Rational, SparsePoly, UniPoly};

const X: usize = 0;
const H: usize = 1;

/// `u x + v ħ + w` in the variables (x, ħ).
fn affine(u: Rational, v: Rational, w: Rational) -> SparsePoly {
    SparsePoly::from_terms(2, [(vec![1, 0], u), (vec![0, 1], v), (vec![0, 0], w)])
}

/// Expansion of one q-coefficient: `ħ^e ↦` class mod the weight polynomial,
/// for `e` from the top exponent down to `low`.
#[derive(Clone, PartialEq, Debug)]
pub struct FormalCoefficient {
    pub modulus: UniPoly,
    pub low: i32,
    pub classes: BTreeMap<i32, UniPoly>,
}

impl FormalCoefficient {
    /// The class multiplying `ħ^e` (zero outside the computed range).
    pub fn class(&self, e: i32) -> UniPoly {
        self.classes.get(&e).cloned().unwrap_or_else(UniPoly::zero)
    }
}

struct Quotient {
    modulus: UniPoly,
}

impl Quotient {
    fn reduce(&self, p: &UniPoly) -> UniPoly {
        p.div_rem(&self.modulus).1
    }
    fn mul(&self, p: &UniPoly, q: &UniPoly) -> UniPoly {
        self.reduce(&p.mul(q))
    }
}

/// The `q^d` coefficient of Y over `ℚ[x]/(Π (x − α_k))`, down to `ħ^{−h_order}`.
/// Numerator and denominator are built as polynomials in (x, ħ), then
/// divided in descending powers of ħ; the leading ħ-coefficient of the
/// denominator is the unit `(d!)^n`.
pub fn formal_y_coefficient(alpha: &[Rational], a: &ExponentTuple, d: usize, h_order: u32) -> Result<FormalCoefficient> {
    let modulus = alpha.iter().fold(UniPoly::one(), |p, ak| p.mul_linear_root(ak));
    let ring = Quotient { modulus: modulus.clone() };
    let low = -(h_order as i32);

    let di = d as i64;
    let mut num = SparsePoly::constant(2, Rational::one());
    for &ak in a.entries() {
        if ak > 0 {
            for r in 1..=ak * di {
                num = num.mul(&affine(rat(ak), rat(r), Rational::zero()));
            }
        } else {
            for r in 0..(-ak * di) {
                num = num.mul(&affine(rat(ak), rat(-r), Rational::zero()));
            }
        }
    }
    let mut den = SparsePoly::constant(2, Rational::one());
    for r in 1..=di {
        for ak in alpha {
            den = den.mul(&affine(Rational::one(), rat(r), -ak));
        }
    }

    let split = |p: &SparsePoly| -> BTreeMap<i32, UniPoly> {
        p.split_bivariate(H, X)
            .into_iter()
            .map(|(e, c)| (e as i32, ring.reduce(&c)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    };
    let mut rem = split(&num);
    let den = split(&den);
    let (&top_den, lead) = den.iter().next_back().ok_or_else(|| Error::Domain("zero denominator".into()))?;
    if !lead.is_constant() || lead.is_zero() {
        return Err(Error::NotInvertible(format!("leading ħ-coefficient {lead} is not a unit")));
    }
    let lead_inv = lead.coeff(0).recip();
    let top = rem.keys().next_back().copied().unwrap_or(top_den) - top_den;

    let mut classes = BTreeMap::new();
    let mut e = top;
    while e >= low {
        let c = rem.get(&(e + top_den)).cloned().unwrap_or_else(UniPoly::zero).scale(&lead_inv);
        if !c.is_zero() {
            for (k, dk) in &den {
                let slot = rem.entry(e + k).or_insert_with(UniPoly::zero);
                *slot = slot.sub(&ring.mul(&c, dk));
            }
            classes.insert(e, c);
        }
        e -= 1;
    }
    Ok(FormalCoefficient { modulus, low, classes })
}

/// Compare the all-weights-zero formal expansion with the non-equivariant Y
/// for degrees `0 … d_max` and ħ-exponents down to `−h_order`. Returns the
/// first differing `(d, k, e)` as text.
pub fn formal_limit_mismatch(n: u32, a: &ExponentTuple, d_max: usize, h_order: u32) -> Result<Option<String>> {
    let zeros = vec![Rational::zero(); n as usize];
    let y = y_series(n, a, d_max, h_order);
    for d in 0..=d_max {
        let formal = formal_y_coefficient(&zeros, a, d, h_order)?;
        let yd = y.coeff(d);
        let top = formal.classes.keys().next_back().copied().unwrap_or(0).max(0);
        for e in (-(h_order as i32))..=top {
            let class = formal.class(e);
            for k in 0..n {
                let (lhs, rhs) = (class.coeff(k as usize), yd.coeff(k, e));
                if lhs != rhs {
                    return Ok(Some(format!("q^{d} x^{k} ħ^{e}: formal {lhs} vs series {rhs}")));
                }
            }
        }
        // Nothing in the series may sit outside the compared window.
        let above = yd.terms().find(|&(_, e, _)| e > top).map(|(k, e, c)| (k, e, c.clone()));
        if let Some((k, e, c)) = above {
            return Ok(Some(format!("q^{d} x^{k} ħ^{e}: series has {c} above the formal top")));
        }
    }
    Ok(None)
}

/// Restrict the formal expansion to `x = α_i` and compare with the expansion
/// at ħ = ∞ of the fixed-point coefficient.
pub fn formal_restriction_mismatch(
    frame: &FixedPointFrame,
    a: &ExponentTuple,
    d_max: usize,
    h_order: u32,
) -> Result<Option<String>> {
    let ai = frame.weight(frame.i());
    for d in 0..=d_max {
        let formal = formal_y_coefficient(frame.alpha(), a, d, h_order)?;
        let at_inf = y_coefficient(frame, a, d).expand_at_infinity(-(h_order as i32));
        let top = formal.classes.keys().next_back().copied().unwrap_or(0).max(at_inf.high());
        for e in (-(h_order as i32))..=top {
            let (lhs, rhs) = (formal.class(e).eval(ai), at_inf.coeff(e));
            if lhs != rhs {
                return Ok(Some(format!("q^{d} ħ^{e}: formal {lhs} vs fixed point {rhs}")));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series_kernel::rational::frac;

    #[test]
    fn quintic_degree_one_leading_terms() {
        // 120 + 770 x ħ^{-1} + …
        let a: ExponentTuple = "5".parse().unwrap();
        let f = formal_y_coefficient(&vec![rat(0); 5], &a, 1, 2).unwrap();
        assert_eq!(f.class(0), UniPoly::constant(rat(120)));
        assert_eq!(f.class(-1), UniPoly::monomial(rat(770), 1));
    }

    #[test]
    fn limit_matches_series() {
        let a: ExponentTuple = "3,-1".parse().unwrap();
        assert_eq!(formal_limit_mismatch(5, &a, 2, 4).unwrap(), None);
    }

    #[test]
    fn restriction_matches_fixed_point() {
        let frame = FixedPointFrame::from_ints(&[2, -5, 7], 1).unwrap();
        let a: ExponentTuple = "2".parse().unwrap();
        assert_eq!(formal_restriction_mismatch(&frame, &a, 2, 5).unwrap(), None);
    }

    #[test]
    fn degree_zero_is_one() {
        let f = formal_y_coefficient(&[frac(1, 2), rat(3)], &ExponentTuple::empty(), 0, 3).unwrap();
        assert_eq!(f.classes.len(), 1);
        assert_eq!(f.class(0), UniPoly::one());
    }
}
