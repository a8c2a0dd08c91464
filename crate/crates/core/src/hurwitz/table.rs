//! Twisted Hurwitz numbers `F^{(b1,b2)} = C(b1+b2, b1) ξ^{b1+b2+1} / (b1+b2+1)!`.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::lxi::xi_series;
use crate::equivariant_engine::{FixedPointFrame, HurwitzProvider, Verdict};
use crate::error::{Error, Result};
use crate::mirror_nonequivariant::ExponentTuple;
use crate::series_kernel::rational::{binomial, factorial};
use crate::series_kernel::{CanonicalJson, Rational, Ring, TruncatedSeries};

/// `C(b1+b2, b1) ξ^{b+1} / (b+1)!` with `b = b1 + b2`.
pub fn f_from_xi<R: Ring>(xi: &TruncatedSeries<R>, b1: u32, b2: u32) -> TruncatedSeries<R> {
    let b = (b1 + b2) as u64;
    let c = Rational::new(binomial(b, b1 as u64), factorial(b + 1));
    xi.pow(b1 + b2 + 1).scale(&c)
}

/// `F^{(b1,b2)}` at the frame's fixed point.
pub fn hurwitz_f(frame: &FixedPointFrame, a: &ExponentTuple, b1: u32, b2: u32, d_max: usize) -> Result<TruncatedSeries<Rational>> {
    Ok(f_from_xi(&xi_series(frame, a, d_max)?, b1, b2))
}

/// ξ at every fixed point of one frame; serves `F^{(b1,b2)}` on demand.
#[derive(Clone, PartialEq, Debug)]
pub struct HurwitzTable {
    xis: Vec<TruncatedSeries<Rational>>,
    d_max: usize,
}

impl HurwitzTable {
    pub fn new(frame: &FixedPointFrame, a: &ExponentTuple, d_max: usize) -> Result<Self> {
        let xis = frame.points().map(|p| xi_series(&p, a, d_max)).collect::<Result<_>>()?;
        Ok(HurwitzTable { xis, d_max })
    }

    pub fn d_max(&self) -> usize {
        self.d_max
    }

    pub fn xi(&self, i: usize) -> &TruncatedSeries<Rational> {
        &self.xis[i]
    }

    /// Every `F^{(b1,b2)}` at fixed point `i` that is nonzero below the
    /// truncation, keyed by `(b1, b2)`.
    pub fn rows(&self, i: usize) -> BTreeMap<(u32, u32), TruncatedSeries<Rational>> {
        let mut out = BTreeMap::new();
        for b in 0..self.d_max as u32 {
            for b1 in 0..=b {
                out.insert((b1, b - b1), f_from_xi(&self.xis[i], b1, b - b1));
            }
        }
        out
    }

    pub fn to_json(&self, i: usize) -> Value {
        let rows: Vec<Value> = self
            .rows(i)
            .into_iter()
            .map(|((b1, b2), s)| json!({"b1": b1, "b2": b2, "series": s.to_json()}))
            .collect();
        json!({"i": i + 1, "rows": rows})
    }
}

impl HurwitzProvider for HurwitzTable {
    fn hurwitz_series(&self, i: usize, b1: u32, b2: u32) -> Result<TruncatedSeries<Rational>> {
        let xi = self
            .xis
            .get(i)
            .ok_or_else(|| Error::Dependency(format!("no Hurwitz data for fixed point {}", i + 1)))?;
        Ok(f_from_xi(xi, b1, b2))
    }
}

/// Series in q (outer), `u1 = ħ1⁻¹`, `u2 = ħ2⁻¹` (inner).
pub type TriSeries<R> = TruncatedSeries<TruncatedSeries<TruncatedSeries<R>>>;

fn tri_ctx<R: Ring>(ring: &R::Ctx, h1: usize, h2: usize) -> crate::series_kernel::SeriesCtx<crate::series_kernel::SeriesCtx<R::Ctx>> {
    use crate::series_kernel::SeriesCtx;
    SeriesCtx { ring: SeriesCtx { ring: ring.clone(), order: h2 }, order: h1 }
}

/// Embed a q-series times `u1^e1 u2^e2`.
fn lift<R: Ring>(s: &TruncatedSeries<R>, e1: usize, e2: usize, h1: usize, h2: usize) -> TriSeries<R> {
    let ring = s.ring().clone();
    let ctx = tri_ctx::<R>(&ring, h1, h2);
    s.map(ctx, |c| {
        let inner = TruncatedSeries::monomial(c.clone(), e2, h2);
        TruncatedSeries::monomial(inner, e1, h1)
    })
}

/// Both sides of the two-point identity at a fixed point, given ξ:
/// `1 + Σ_{b1,b2} (u1^{b1} u2^{b2+1} + u1^{b1+1} u2^{b2}) F^{(b1,b2)}` and
/// `exp(ξ u1 + ξ u2)`, truncated at `u1^{h1}`, `u2^{h2}` and `q^{order}`.
pub fn two_point_sides<R: Ring>(xi: &TruncatedSeries<R>, h1: usize, h2: usize) -> Result<(TriSeries<R>, TriSeries<R>)> {
    let ring = xi.ring().clone();
    let ctx = tri_ctx::<R>(&ring, h1, h2);
    let order = xi.order();
    let mut lhs = TruncatedSeries::one(ctx.clone(), order);
    for b1 in 0..=h1 as u32 {
        for b2 in 0..=h2 as u32 {
            if (b1 + b2) as usize >= order {
                continue;
            }
            let f = f_from_xi(xi, b1, b2);
            let (b1u, b2u) = (b1 as usize, b2 as usize);
            lhs = lhs.add(&lift(&f, b1u, b2u + 1, h1, h2)).add(&lift(&f, b1u + 1, b2u, h1, h2));
        }
    }
    let exponent = lift(xi, 1, 0, h1, h2).add(&lift(xi, 0, 1, h1, h2));
    let rhs = exponent.exp()?;
    Ok((lhs, rhs))
}

/// Both sides at the frame's fixed point.
pub fn two_point_lhs_rhs(
    frame: &FixedPointFrame,
    a: &ExponentTuple,
    d_max: usize,
    h_orders: (usize, usize),
) -> Result<(TriSeries<Rational>, TriSeries<Rational>)> {
    two_point_sides(&xi_series(frame, a, d_max)?, h_orders.0, h_orders.1)
}

/// Compare both sides at every fixed point of the frame.
pub fn check_two_point_identity(
    frame: &FixedPointFrame,
    a: &ExponentTuple,
    d_max: usize,
    h_orders: (usize, usize),
) -> Result<Verdict> {
    let verdict = Verdict::new("two-point", frame, a, d_max);
    for p in frame.points() {
        let (lhs, rhs) = two_point_lhs_rhs(&p, a, d_max, h_orders)?;
        if let Some((d, e1, e2)) = first_tri_difference(&lhs, &rhs) {
            return Ok(verdict.fail(format!("i={} q^{d} ħ1^-{e1} ħ2^-{e2}", p.i() + 1)));
        }
    }
    Ok(verdict.passed())
}

/// First `(q, u1, u2)` exponent where two tri-series differ.
pub fn first_tri_difference<R: Ring>(x: &TriSeries<R>, y: &TriSeries<R>) -> Option<(usize, usize, usize)> {
    let top = x.order().min(y.order());
    for d in 0..=top {
        let (xd, yd) = (x.coeff(d), y.coeff(d));
        for e1 in 0..=xd.order().min(yd.order()) {
            let (x1, y1) = (xd.coeff(e1), yd.coeff(e1));
            for e2 in 0..=x1.order().min(y1.order()) {
                if x1.coeff(e2) != y1.coeff(e2) {
                    return Some((d, e1, e2));
                }
            }
        }
    }
    None
}
