//! The structure coefficients of the recursion, computed two ways.

use num_traits::{One, Zero};

use super::frame::FixedPointFrame;
use crate::error::{Error, Result};
use crate::mirror_nonequivariant::ExponentTuple;
use crate::series_kernel::rational::rat;
use crate::series_kernel::Rational;

fn check_args(frame: &FixedPointFrame, j: usize, d: usize) -> Result<()> {
    if j >= frame.n() || j == frame.i() {
        return Err(Error::Frame(format!("j = {} must differ from i = {} and be in range", j + 1, frame.i() + 1)));
    }
    if d == 0 {
        return Err(Error::Range("degree must be positive".into()));
    }
    Ok(())
}

/// The coefficient 𝕮_i^j(d), evaluated directly from its closed product
/// formula with `c = (α_j − α_i)/d`:
///
/// numerator `Π_{a_k>0} Π_{r=1}^{a_k d} (a_k α_i + r c) · Π_{a_k<0} Π_{r=0}^{−a_k d−1} (a_k α_i − r c)`,
/// denominator `d · Π_{r=1}^{d} Π_{k, (r,k)≠(d,j)} (α_i − α_k + r c)`.
pub fn recursion_coefficient(frame: &FixedPointFrame, a: &ExponentTuple, j: usize, d: usize) -> Result<Rational> {
    check_args(frame, j, d)?;
    let i = frame.i();
    let ai = frame.weight(i);
    let c = frame.node(j, d);
    let di = d as i64;
    let mut num = Rational::one();
    for &ak in a.entries() {
        let base = rat(ak) * ai;
        if ak > 0 {
            for r in 1..=ak * di {
                num *= &base + rat(r) * &c;
            }
        } else {
            for r in 0..(-ak * di) {
                num *= &base - rat(r) * &c;
            }
        }
    }
    let mut den = rat(di);
    for r in 1..=di {
        for (k, alk) in frame.alpha().iter().enumerate() {
            if r == di && k == j {
                continue;
            }
            den *= ai - alk + rat(r) * &c;
        }
    }
    if den.is_zero() {
        return Err(Error::Frame(format!("vanishing denominator for (i, j, d) = ({}, {}, {d})", i + 1, j + 1)));
    }
    Ok(num / den)
}

/// Weight of the section of index `s` of a degree-`deg` pullback along the
/// degree-`d` cover joining the two fixed points: the linear interpolation
/// `((deg − s) w_i + s w_j) / deg` between the fiber weights. Indices
/// outside `0..=deg` (with negative `deg`) give the weights of `H^1`.
fn section_weight(w_i: &Rational, w_j: &Rational, deg: i64, s: i64) -> Rational {
    (rat(deg - s) * w_i + rat(s) * w_j) / rat(deg)
}

/// The same coefficient obtained from the Euler classes of the edge
/// deformation spaces: section weights of `O(a_k)` (dropping the section
/// vanishing at the first marked point for `a_k > 0`, keeping it for
/// `a_k < 0`), divided by the weights of `O(1) ⊗ C_{−α_k}` for `k ≠ i, j`
/// and of the pulled-back tangent line (minus its fiber at the marked point
/// and the trivial weight), times `d` for the automorphisms of the cover.
pub fn edge_coefficient_via_euler(frame: &FixedPointFrame, a: &ExponentTuple, j: usize, d: usize) -> Result<Rational> {
    check_args(frame, j, d)?;
    let i = frame.i();
    let (ai, aj) = (frame.weight(i), frame.weight(j));
    let di = d as i64;

    let mut num = Rational::one();
    for &ak in a.entries() {
        let (wi, wj) = (rat(ak) * ai, rat(ak) * aj);
        let deg = ak * di;
        if ak > 0 {
            for s in 1..=deg {
                num *= section_weight(&wi, &wj, deg, s);
            }
        } else {
            // H^1 weights sit at s = −1 … deg + 1; the twist by the marked
            // point adds the fiber weight at s = 0.
            for s in (deg + 1)..=0 {
                num *= section_weight(&wi, &wj, deg, s);
            }
        }
    }

    let mut den = Rational::one();
    for (k, alk) in frame.alpha().iter().enumerate() {
        if k == i || k == j {
            continue;
        }
        let (wi, wj) = (ai - alk, aj - alk);
        for s in 1..=di {
            den *= section_weight(&wi, &wj, di, s);
        }
    }
    let (ti, tj) = (ai - aj, aj - ai);
    for s in 1..=2 * di {
        if s != di {
            den *= section_weight(&ti, &tj, 2 * di, s);
        }
    }
    den *= rat(di);
    if den.is_zero() {
        return Err(Error::Frame(format!("vanishing edge weight for (i, j, d) = ({}, {}, {d})", i + 1, j + 1)));
    }
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series_kernel::rational::frac;

    fn tuple(s: &str) -> ExponentTuple {
        s.parse().unwrap()
    }

    #[test]
    fn two_points_empty_tuple() {
        let f = FixedPointFrame::from_ints(&[3, 10], 0).unwrap();
        let e = ExponentTuple::empty();
        assert_eq!(recursion_coefficient(&f, &e, 1, 1).unwrap(), frac(1, 7));
        assert_eq!(edge_coefficient_via_euler(&f, &e, 1, 1).unwrap(), frac(1, 7));
    }

    #[test]
    fn two_points_degree_two_twist() {
        // 2 α_2 (α_1 + α_2) / (α_2 − α_1)
        let f = FixedPointFrame::from_ints(&[3, 10], 0).unwrap();
        let a = tuple("2");
        let expected = rat(2 * 10 * 13) / rat(7);
        assert_eq!(recursion_coefficient(&f, &a, 1, 1).unwrap(), expected);
        assert_eq!(edge_coefficient_via_euler(&f, &a, 1, 1).unwrap(), expected);
    }

    #[test]
    fn three_points_agree() {
        let f = FixedPointFrame::from_ints(&[2, -5, 11], 0).unwrap();
        let a = tuple("1");
        assert_eq!(
            recursion_coefficient(&f, &a, 1, 2).unwrap(),
            edge_coefficient_via_euler(&f, &a, 1, 2).unwrap()
        );
    }

    #[test]
    fn zero_numerator_factor_gives_zero() {
        // The r = 1 factor 2α_1 + (α_2 − α_1) vanishes when α_2 = −α_1.
        let f = FixedPointFrame::from_ints(&[1, -1, 4], 0).unwrap();
        assert_eq!(recursion_coefficient(&f, &tuple("2"), 1, 1).unwrap(), rat(0));
    }

    #[test]
    fn rejects_bad_indices() {
        let f = FixedPointFrame::from_ints(&[1, 2], 0).unwrap();
        assert!(recursion_coefficient(&f, &ExponentTuple::empty(), 0, 1).is_err());
        assert!(recursion_coefficient(&f, &ExponentTuple::empty(), 1, 0).is_err());
    }
}
