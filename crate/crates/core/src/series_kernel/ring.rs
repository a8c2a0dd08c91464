//! The coefficient-ring abstraction shared by all series.

use std::fmt::Debug;

use num_traits::{One, Zero};

use super::rational::Rational;

/// A commutative ℚ-algebra usable as a series coefficient.
///
/// `Ctx` carries whatever a value needs beyond its terms (number of
/// variables, nilpotency order, a truncation floor). Two values can only be
/// combined when their contexts agree; the series layer turns a disagreement
/// into a ring-mismatch error.
pub trait Ring: Clone + PartialEq + Debug {
    type Ctx: Clone + PartialEq + Debug;

    /// Short name used in serialized output.
    const TAG: &'static str;

    fn ctx(&self) -> Self::Ctx;
    fn zero_in(ctx: &Self::Ctx) -> Self;
    fn one_in(ctx: &Self::Ctx) -> Self;
    fn is_nil(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scale(&self, c: &Rational) -> Self;

    /// Exact division, `None` when the quotient does not exist in the ring.
    fn try_div(&self, other: &Self) -> Option<Self>;

    /// Whether two contexts may be combined.
    fn compatible(a: &Self::Ctx, b: &Self::Ctx) -> bool {
        a == b
    }

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }

    fn from_rational(ctx: &Self::Ctx, c: &Rational) -> Self {
        Self::one_in(ctx).scale(c)
    }

    fn power(&self, k: u32) -> Self {
        let mut acc = Self::one_in(&self.ctx());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.times(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

impl Ring for Rational {
    type Ctx = ();
    const TAG: &'static str = "rational";

    fn ctx(&self) {}
    fn zero_in(_: &()) -> Self {
        Zero::zero()
    }
    fn one_in(_: &()) -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            None
        } else {
            Some(self / other)
        }
    }
}
