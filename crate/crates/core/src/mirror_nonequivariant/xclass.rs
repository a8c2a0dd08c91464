//! Elements of `ℚ[x]/(x^n)` with coefficients that are Laurent polynomials
//! in ħ, optionally truncated below a fixed ħ-exponent.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::series_kernel::ring::Ring;
use crate::series_kernel::series::TruncatedSeries;
use crate::series_kernel::{CanonicalJson, Rational};

/// Ring context: nilpotency order and the lowest ħ-exponent kept (`None`
/// keeps everything).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct XCtx {
    pub n: u32,
    pub floor: Option<i32>,
}

impl XCtx {
    pub fn exact(n: u32) -> Self {
        XCtx { n, floor: None }
    }

    /// Keep terms down to `ħ^{−h_order}`.
    pub fn truncated(n: u32, h_order: u32) -> Self {
        XCtx { n, floor: Some(-(h_order as i32)) }
    }

    fn keeps(&self, k: u32, e: i32) -> bool {
        k < self.n && self.floor.is_none_or(|f| e >= f)
    }
}

/// `Σ c_{k,e} x^k ħ^e` with `k < n`.
#[derive(Clone, PartialEq, Debug)]
pub struct XClass {
    ctx: XCtx,
    terms: BTreeMap<(u32, i32), Rational>,
}

/// A q-series of x-classes: the shape of Y, Z and Z^GW.
pub type XClassSeries = TruncatedSeries<XClass>;

impl XClass {
    pub fn zero(ctx: XCtx) -> Self {
        XClass { ctx, terms: BTreeMap::new() }
    }

    pub fn term(ctx: XCtx, k: u32, e: i32, c: Rational) -> Self {
        let mut out = Self::zero(ctx);
        out.add_term(k, e, c);
        out
    }

    pub fn constant(ctx: XCtx, c: Rational) -> Self {
        Self::term(ctx, 0, 0, c)
    }

    /// `u·x + v·ħ`.
    pub fn linear(ctx: XCtx, u: Rational, v: Rational) -> Self {
        let mut out = Self::term(ctx, 1, 0, u);
        out.add_term(0, 1, v);
        out
    }

    pub fn ctx_value(&self) -> XCtx {
        self.ctx
    }

    pub fn add_term(&mut self, k: u32, e: i32, c: Rational) {
        if c.is_zero() || !self.ctx.keeps(k, e) {
            return;
        }
        let slot = self.terms.entry((k, e)).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(k, e));
        }
    }

    /// Coefficient of `x^k ħ^e`.
    pub fn coeff(&self, k: u32, e: i32) -> Rational {
        self.terms.get(&(k, e)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, i32, &Rational)> {
        self.terms.iter().map(|(&(k, e), c)| (k, e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Drop terms below `ħ^{−h_order}` and adopt that truncation.
    pub fn truncate(&self, h_order: u32) -> Self {
        let ctx = XCtx::truncated(self.ctx.n, h_order);
        let mut out = Self::zero(ctx);
        for (&(k, e), c) in &self.terms {
            out.add_term(k, e, c.clone());
        }
        out
    }

    /// Evaluate at `x = 0, ħ = 1`.
    pub fn at_x0_h1(&self) -> Rational {
        self.terms
            .iter()
            .filter(|((k, _), _)| *k == 0)
            .fold(Rational::zero(), |acc, (_, c)| acc + c)
    }
}

impl Ring for XClass {
    type Ctx = XCtx;
    const TAG: &'static str = "xclass";

    fn ctx(&self) -> XCtx {
        self.ctx
    }
    fn zero_in(ctx: &XCtx) -> Self {
        XClass::zero(*ctx)
    }
    fn one_in(ctx: &XCtx) -> Self {
        XClass::constant(*ctx, Rational::one())
    }
    fn is_nil(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (&(k, e), c) in &o.terms {
            out.add_term(k, e, c.clone());
        }
        out
    }
    fn negate(&self) -> Self {
        XClass { ctx: self.ctx, terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
    fn times(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.ctx);
        for (&(k1, e1), c1) in &self.terms {
            for (&(k2, e2), c2) in &o.terms {
                out.add_term(k1 + k2, e1 + e2, c1 * c2);
            }
        }
        out
    }
    fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.ctx);
        }
        XClass { ctx: self.ctx, terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }
    /// Division by a unit of the form `c·ħ^e + (terms with x)`.
    fn try_div(&self, o: &Self) -> Option<Self> {
        let lead: Vec<_> = o.terms.iter().filter(|((k, _), _)| *k == 0).collect();
        if lead.len() != 1 {
            return None;
        }
        let (&(_, e0), c0) = lead[0];
        let inv_lead = XClass::term(self.ctx, 0, -e0, c0.recip());
        // o = L(1 + u), u nilpotent, so 1/o = L⁻¹ Σ_{m<n} (−u)^m.
        let u = o.times(&inv_lead).minus(&Self::one_in(&self.ctx));
        let mut inv = Self::one_in(&self.ctx);
        let mut pow = Self::one_in(&self.ctx);
        for _ in 1..self.ctx.n {
            pow = pow.times(&u.negate());
            inv = inv.plus(&pow);
        }
        Some(self.times(&inv).times(&inv_lead))
    }
    fn compatible(a: &XCtx, b: &XCtx) -> bool {
        a == b
    }
}

impl CanonicalJson for XClass {
    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(&(k, e), c)| serde_json::json!([[k, e], c.to_string()]))
                .collect(),
        )
    }
}
