//! Truncated power series `Σ_{d ≤ order} c_d q^d` over any [`Ring`].
//!
//! A series knows its terms up to and including `q^order`. Binary operations
//! keep the smaller order. Series themselves implement [`Ring`], so series in
//! several variables are built by nesting (outer variable first).

use num_traits::One;

use super::hrational::HRational;
use super::rational::Rational;
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedSeries<R: Ring> {
    ring: R::Ctx,
    order: usize,
    coeffs: Vec<R>,
}

/// Context of a series viewed as a ring element.
#[derive(Clone, PartialEq, Debug)]
pub struct SeriesCtx<C> {
    pub ring: C,
    pub order: usize,
}

impl<R: Ring> TruncatedSeries<R> {
    /// Coefficients beyond `order` are dropped, missing ones are zero.
    pub fn new(ring: R::Ctx, order: usize, mut coeffs: Vec<R>) -> Self {
        coeffs.truncate(order + 1);
        while coeffs.len() < order + 1 {
            coeffs.push(R::zero_in(&ring));
        }
        TruncatedSeries { ring, order, coeffs }
    }

    pub fn zero(ring: R::Ctx, order: usize) -> Self {
        Self::new(ring, order, Vec::new())
    }

    pub fn one(ring: R::Ctx, order: usize) -> Self {
        Self::constant(R::one_in(&ring), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        Self::new(c.ctx(), order, vec![c])
    }

    /// `c · q^d`.
    pub fn monomial(c: R, d: usize, order: usize) -> Self {
        let ring = c.ctx();
        let mut v = vec![R::zero_in(&ring); d];
        v.push(c);
        Self::new(ring, order, v)
    }

    pub fn ring(&self) -> &R::Ctx {
        &self.ring
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, d: usize) -> R {
        self.coeffs.get(d).cloned().unwrap_or_else(|| R::zero_in(&self.ring))
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, d: usize, c: R) {
        if d <= self.order {
            self.coeffs[d] = c;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_nil)
    }

    /// Same terms, lower order.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Self::new(self.ring.clone(), order, self.coeffs[..=order].to_vec())
    }

    pub fn map<S: Ring>(&self, ring: S::Ctx, f: impl Fn(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries::new(ring, self.order, self.coeffs.iter().map(f).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let order = self.order.min(o.order);
        let c = (0..=order).map(|d| self.coeffs[d].plus(&o.coeffs[d])).collect();
        Self::new(self.ring.clone(), order, c)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.ring.clone(), self.order, self.coeffs.iter().map(Ring::negate).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.ring.clone(), self.order, self.coeffs.iter().map(|x| x.scale(c)).collect())
    }

    /// Multiply every coefficient by a ring element.
    pub fn scale_by(&self, c: &R) -> Self {
        Self::new(self.ring.clone(), self.order, self.coeffs.iter().map(|x| x.times(c)).collect())
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, o: &Self) -> Self {
        let order = self.order.min(o.order);
        let mut out: Vec<R> = (0..=order).map(|_| R::zero_in(&self.ring)).collect();
        for i in 0..=order {
            if self.coeffs[i].is_nil() {
                continue;
            }
            for j in 0..=(order - i) {
                if !o.coeffs[j].is_nil() {
                    out[i + j] = out[i + j].plus(&self.coeffs[i].times(&o.coeffs[j]));
                }
            }
        }
        Self::new(self.ring.clone(), order, out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.ring.clone(), self.order);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn invert(&self) -> Result<Self> {
        let one = R::one_in(&self.ring);
        let c0_inv = one
            .try_div(&self.coeffs[0])
            .ok_or_else(|| Error::NotInvertible(format!("constant term {:?}", self.coeffs[0])))?;
        let mut out: Vec<R> = vec![c0_inv.clone()];
        for d in 1..=self.order {
            let mut acc = R::zero_in(&self.ring);
            for j in 1..=d {
                if !self.coeffs[j].is_nil() {
                    acc = acc.plus(&self.coeffs[j].times(&out[d - j]));
                }
            }
            out.push(acc.negate().times(&c0_inv));
        }
        Ok(Self::new(self.ring.clone(), self.order, out))
    }

    /// `exp(s)` for `s` with zero constant term, via `E' = s'E`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_nil() {
            return Err(Error::Domain("exp needs a zero constant term".into()));
        }
        let mut e: Vec<R> = vec![R::one_in(&self.ring)];
        for k in 1..=self.order {
            let mut acc = R::zero_in(&self.ring);
            for j in 1..=k {
                if !self.coeffs[j].is_nil() {
                    let jj = Rational::from_integer((j as i64).into());
                    acc = acc.plus(&self.coeffs[j].times(&e[k - j]).scale(&jj));
                }
            }
            let inv_k = Rational::new(1.into(), (k as i64).into());
            e.push(acc.scale(&inv_k));
        }
        Ok(Self::new(self.ring.clone(), self.order, e))
    }

    /// `log(s)` for `s` with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if self.coeffs[0] != R::one_in(&self.ring) {
            return Err(Error::Domain("log needs constant term 1".into()));
        }
        let mut l: Vec<R> = vec![R::zero_in(&self.ring)];
        for k in 1..=self.order {
            // k·s_k = Σ_{j=1}^{k} j·l_j·s_{k−j}
            let kk = Rational::from_integer((k as i64).into());
            let mut acc = self.coeffs[k].scale(&kk);
            for (j, lj) in l.iter().enumerate().skip(1) {
                let jj = Rational::from_integer((j as i64).into());
                acc = acc.minus(&lj.times(&self.coeffs[k - j]).scale(&jj));
            }
            l.push(acc.scale(&kk.recip()));
        }
        Ok(Self::new(self.ring.clone(), self.order, l))
    }

    /// `self(inner(q))`, where `inner` has zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_nil() {
            return Err(Error::Domain("composition needs an inner series without constant term".into()));
        }
        let order = self.order.min(inner.order);
        let mut acc = Self::constant(self.coeffs[order].clone(), order);
        for d in (0..order).rev() {
            acc = acc.mul(inner).add(&Self::constant(self.coeffs[d].clone(), order));
        }
        Ok(acc)
    }

    /// Compose with a series over ℚ, embedding its coefficients in `R`.
    pub fn compose_rational(&self, inner: &TruncatedSeries<Rational>) -> Result<Self> {
        let ring = self.ring.clone();
        let lifted = inner.map(ring.clone(), |c| R::from_rational(&ring, c));
        self.compose(&lifted)
    }

    /// Compositional inverse `t` with `self(t(Q)) = Q`.
    pub fn reversion(&self) -> Result<Self> {
        if !self.coeffs[0].is_nil() {
            return Err(Error::NotReversible("nonzero constant term".into()));
        }
        if self.order == 0 {
            return Err(Error::NotReversible("order 0 series".into()));
        }
        let one = R::one_in(&self.ring);
        if one.try_div(&self.coeffs[1]).is_none() {
            return Err(Error::NotReversible("linear coefficient is not a unit".into()));
        }
        let q = Self::monomial(one.clone(), 1, self.order);
        let s = self.clone();
        let start = Self::zero(self.ring.clone(), self.order);
        solve_implicit(|t| s.compose(t).expect("constant-free by construction").sub(&q), &start)
            .map_err(|e| Error::NotReversible(e.to_string()))
    }

    /// `q · d/dq`.
    pub fn q_derivative(&self) -> Self {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(d, x)| x.scale(&Rational::from_integer((d as i64).into())))
            .collect();
        Self::new(self.ring.clone(), self.order, c)
    }
}

impl TruncatedSeries<Rational> {
    pub fn from_rationals(order: usize, coeffs: Vec<Rational>) -> Self {
        Self::new((), order, coeffs)
    }

    pub fn from_ints(order: usize, coeffs: &[i64]) -> Self {
        Self::new((), order, coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }
}

/// Check compatibility, then multiply.
pub fn series_mul<R: Ring>(a: &TruncatedSeries<R>, b: &TruncatedSeries<R>) -> Result<TruncatedSeries<R>> {
    check_rings(a, b)?;
    Ok(a.mul(b))
}

/// Check compatibility, then add.
pub fn series_add<R: Ring>(a: &TruncatedSeries<R>, b: &TruncatedSeries<R>) -> Result<TruncatedSeries<R>> {
    check_rings(a, b)?;
    Ok(a.add(b))
}

fn check_rings<R: Ring>(a: &TruncatedSeries<R>, b: &TruncatedSeries<R>) -> Result<()> {
    if R::compatible(&a.ring, &b.ring) {
        Ok(())
    } else {
        Err(Error::RingMismatch(format!("{} {:?} vs {:?}", R::TAG, a.ring, b.ring)))
    }
}

pub fn series_invert<R: Ring>(s: &TruncatedSeries<R>) -> Result<TruncatedSeries<R>> {
    s.invert()
}

pub fn series_exp<R: Ring>(s: &TruncatedSeries<R>) -> Result<TruncatedSeries<R>> {
    s.exp()
}

pub fn series_reversion<R: Ring>(s: &TruncatedSeries<R>) -> Result<TruncatedSeries<R>> {
    s.reversion()
}

/// Solve `residual(L) = 0` for `L` agreeing with `initial` at `q^0`.
///
/// Works degree by degree: with `L_{<d}` known, the `q^d` coefficient of the
/// residual is affine in the unknown `c_d`, and its slope is read off by
/// evaluating the residual at `L_{<d}` and `L_{<d} + q^d`.
pub fn solve_implicit<R: Ring>(
    residual: impl Fn(&TruncatedSeries<R>) -> TruncatedSeries<R>,
    initial: &TruncatedSeries<R>,
) -> Result<TruncatedSeries<R>> {
    let ring = initial.ring.clone();
    let order = initial.order;
    let mut sol = TruncatedSeries::constant(initial.coeff(0), order);
    if !residual(&sol.truncate(0)).coeff(0).is_nil() {
        return Err(Error::Domain("residual does not vanish at q^0".into()));
    }
    for d in 1..=order {
        let base = sol.truncate(d);
        let r0 = residual(&base).coeff(d);
        let mut bumped = base.clone();
        bumped.set_coeff(d, R::one_in(&ring));
        let slope = residual(&bumped).coeff(d).minus(&r0);
        let c = r0.negate().try_div(&slope).ok_or(Error::SingularEquation { degree: d })?;
        sol.set_coeff(d, c);
    }
    Ok(sol)
}

pub fn series_solve_implicit<R: Ring>(
    residual: impl Fn(&TruncatedSeries<R>) -> TruncatedSeries<R>,
    initial: &TruncatedSeries<R>,
) -> Result<TruncatedSeries<R>> {
    solve_implicit(residual, initial)
}

/// `s(q) ↦ s(q·e^{ħz})` as a series in `q` whose coefficients are series in
/// `z` truncated at `z_order`: the `q^d` coefficient picks up
/// `Σ_{m ≤ z_order} (dħ)^m z^m / m!`.
pub fn substitute_q_scaled(
    s: &TruncatedSeries<HRational>,
    z_order: usize,
) -> TruncatedSeries<TruncatedSeries<HRational>> {
    let ctx = SeriesCtx { ring: (), order: z_order };
    let coeffs = (0..=s.order())
        .map(|d| {
            let c = s.coeff(d);
            let mut zs = Vec::with_capacity(z_order + 1);
            let mut fact = Rational::one();
            for m in 0..=z_order {
                if m > 0 {
                    fact *= Rational::from_integer((m as i64).into());
                }
                let dm = num_traits::pow(Rational::from_integer((d as i64).into()), m);
                zs.push(c.times(&HRational::hbar_pow(m as i32)).scale(&(dm / &fact)));
            }
            TruncatedSeries::new((), z_order, zs)
        })
        .collect();
    TruncatedSeries::new(ctx, s.order(), coeffs)
}

impl<R: Ring> Ring for TruncatedSeries<R> {
    type Ctx = SeriesCtx<R::Ctx>;
    const TAG: &'static str = "series";

    fn ctx(&self) -> Self::Ctx {
        SeriesCtx { ring: self.ring.clone(), order: self.order }
    }
    fn zero_in(ctx: &Self::Ctx) -> Self {
        TruncatedSeries::zero(ctx.ring.clone(), ctx.order)
    }
    fn one_in(ctx: &Self::Ctx) -> Self {
        TruncatedSeries::one(ctx.ring.clone(), ctx.order)
    }
    fn is_nil(&self) -> bool {
        TruncatedSeries::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        TruncatedSeries::add(self, o)
    }
    fn negate(&self) -> Self {
        TruncatedSeries::neg(self)
    }
    fn times(&self, o: &Self) -> Self {
        TruncatedSeries::mul(self, o)
    }
    fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries::scale(self, c)
    }
    fn try_div(&self, o: &Self) -> Option<Self> {
        o.invert().ok().map(|inv| TruncatedSeries::mul(self, &inv))
    }
    /// Orders may differ; only the coefficient rings must agree.
    fn compatible(a: &Self::Ctx, b: &Self::Ctx) -> bool {
        R::compatible(&a.ring, &b.ring)
    }
}
