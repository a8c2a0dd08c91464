//! Rational functions of ħ with rational poles, and their Laurent windows.
//!
//! Every denominator met in this crate factors into linear terms `ħ − c` with
//! `c ∈ ℚ` (fixed-point weights, their shifts, and 0). `HRational` stores the
//! denominator in that factored form, which makes sums cheap (the lcm is a
//! max of multiplicities) and keeps exact pole data for residues.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::UniPoly;
use super::rational::Rational;
use super::ring::Ring;
use crate::error::{Error, Result};

/// `numerator / Π (ħ − c)^m`, reduced and with a monic denominator.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct HRational {
    num: UniPoly,
    poles: BTreeMap<Rational, u32>,
}

impl HRational {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn from_poly(p: UniPoly) -> Self {
        HRational { num: p, poles: BTreeMap::new() }
    }

    /// The variable ħ.
    pub fn hbar() -> Self {
        Self::from_poly(UniPoly::var())
    }

    /// `ħ^k` for any integer `k`.
    pub fn hbar_pow(k: i32) -> Self {
        if k >= 0 {
            Self::from_poly(UniPoly::monomial(Rational::one(), k as usize))
        } else {
            Self::from_parts(UniPoly::one(), [(Rational::zero(), k.unsigned_abs())])
        }
    }

    /// `1 / (ħ − c)`.
    pub fn inv_linear(c: Rational) -> Self {
        Self::from_parts(UniPoly::one(), [(c, 1)])
    }

    /// `num / Π (ħ − c)^m`, reduced.
    pub fn from_parts(num: UniPoly, poles: impl IntoIterator<Item = (Rational, u32)>) -> Self {
        let mut map = BTreeMap::new();
        for (c, m) in poles {
            if m > 0 {
                *map.entry(c).or_insert(0) += m;
            }
        }
        let mut f = HRational { num, poles: map };
        f.reduce();
        f
    }

    /// Build from an explicit numerator and denominator. The denominator must
    /// split into rational linear factors over ℚ.
    pub fn from_num_den(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        let (lead, roots) = split_rational(&den)
            .ok_or_else(|| Error::Domain(format!("denominator {den} does not split over Q")))?;
        Ok(Self::from_parts(num.scale(&lead.recip()), roots))
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    /// Poles and their orders.
    pub fn poles(&self) -> &BTreeMap<Rational, u32> {
        &self.poles
    }

    /// The monic reduced denominator as a polynomial.
    pub fn denominator(&self) -> UniPoly {
        let mut d = UniPoly::one();
        for (c, m) in &self.poles {
            for _ in 0..*m {
                d = d.mul_linear_root(c);
            }
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Reduced denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.poles.is_empty()
    }

    /// Reduced denominator is a power of ħ.
    pub fn is_laurent_polynomial(&self) -> bool {
        self.poles.keys().all(|c| c.is_zero())
    }

    pub fn pole_order_at(&self, c: &Rational) -> u32 {
        self.poles.get(c).copied().unwrap_or(0)
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.poles.clear();
            return;
        }
        for (c, m) in self.poles.iter_mut() {
            while *m > 0 {
                let (q, r) = self.num.div_linear_root(c);
                if !r.is_zero() {
                    break;
                }
                self.num = q;
                *m -= 1;
            }
        }
        self.poles.retain(|_, m| *m > 0);
    }

    fn times_missing(num: &UniPoly, have: &BTreeMap<Rational, u32>, want: &BTreeMap<Rational, u32>) -> UniPoly {
        let mut p = num.clone();
        for (c, m) in want {
            for _ in have.get(c).copied().unwrap_or(0)..*m {
                p = p.mul_linear_root(c);
            }
        }
        p
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let mut lcm = self.poles.clone();
        for (c, m) in &o.poles {
            let e = lcm.entry(c.clone()).or_insert(0);
            *e = (*e).max(*m);
        }
        let num = Self::times_missing(&self.num, &self.poles, &lcm)
            .add(&Self::times_missing(&o.num, &o.poles, &lcm));
        let mut f = HRational { num, poles: lcm };
        f.reduce();
        f
    }

    pub fn neg(&self) -> Self {
        HRational { num: self.num.neg(), poles: self.poles.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        HRational { num: self.num.scale(c), poles: self.poles.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut poles = self.poles.clone();
        for (c, m) in &o.poles {
            *poles.entry(c.clone()).or_insert(0) += m;
        }
        let mut f = HRational { num: self.num.mul(&o.num), poles };
        f.reduce();
        f
    }

    pub fn mul_poly(&self, p: &UniPoly) -> Self {
        let mut f = HRational { num: self.num.mul(p), poles: self.poles.clone() };
        f.reduce();
        f
    }

    /// Multiplicative inverse; the numerator must split over ℚ.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible("zero rational function".into()));
        }
        let (lead, roots) = split_rational(&self.num)
            .ok_or_else(|| Error::NotInvertible(format!("numerator {} does not split over Q", self.num)))?;
        Ok(Self::from_parts(self.denominator().scale(&lead.recip()), roots))
    }

    /// `f(−ħ)`.
    pub fn reflect(&self) -> Self {
        let total: u32 = self.poles.values().sum();
        let num = if total % 2 == 1 { self.num.reflect().neg() } else { self.num.reflect() };
        HRational {
            num,
            poles: self.poles.iter().map(|(c, m)| (-c, *m)).collect(),
        }
    }

    /// Value at a point; fails at a pole.
    pub fn eval(&self, t: &Rational) -> Result<Rational> {
        if self.poles.contains_key(t) {
            return Err(Error::Pole(format!("hbar = {t}")));
        }
        let mut den = Rational::one();
        for (c, m) in &self.poles {
            den *= num_traits::pow(t - c, *m as usize);
        }
        Ok(self.num.eval(t) / den)
    }

    /// Coefficients of `ħ^low … ħ^high` in the Laurent expansion at ħ = 0.
    pub fn laurent_expand(&self, low: i32, high: i32) -> LaurentWindow {
        let width = (high - low + 1).max(0) as usize;
        let mut coeffs = vec![Rational::zero(); width];
        if self.is_zero() || high < low {
            return LaurentWindow { low, coeffs };
        }
        let m0 = self.pole_order_at(&Rational::zero()) as i32;
        let top = high + m0;
        if top < 0 {
            return LaurentWindow { low, coeffs };
        }
        let mut q = UniPoly::one();
        for (c, m) in &self.poles {
            if !c.is_zero() {
                for _ in 0..*m {
                    q = q.mul_linear_root(c);
                }
            }
        }
        let g = power_series_quotient(&self.num, &q, top as usize + 1);
        for (slot, e) in coeffs.iter_mut().zip(low..=high) {
            let k = e + m0;
            if k >= 0 {
                *slot = g[k as usize].clone();
            }
        }
        LaurentWindow { low, coeffs }
    }

    /// Coefficient of `ħ^e` in the Laurent expansion at 0.
    pub fn laurent_coeff(&self, e: i32) -> Rational {
        self.laurent_expand(e, e).coeffs.pop().unwrap_or_else(Rational::zero)
    }

    pub fn residue_at_zero(&self) -> Rational {
        self.laurent_coeff(-1)
    }

    /// Expansion at ħ = ∞ in descending powers, from the top exponent down
    /// to `low`. Returned as a window `low … top`.
    pub fn expand_at_infinity(&self, low: i32) -> LaurentWindow {
        if self.is_zero() {
            return LaurentWindow { low, coeffs: Vec::new() };
        }
        let dn = self.num.degree().unwrap_or(0);
        let den = self.denominator();
        let dd = den.degree().unwrap_or(0);
        let top = dn as i32 - dd as i32;
        if top < low {
            return LaurentWindow { low, coeffs: Vec::new() };
        }
        let terms = (top - low + 1) as usize;
        let g = power_series_quotient(&self.num.reversed(dn), &den.reversed(dd), terms);
        // g_j multiplies ħ^{top − j}.
        let coeffs = (low..=top).map(|e| g[(top - e) as usize].clone()).collect();
        LaurentWindow { low, coeffs }
    }

    pub fn fmt_in(&self, var: &str) -> String {
        if self.poles.is_empty() {
            return self.num.fmt_in(var);
        }
        let den: Vec<String> = self
            .poles
            .iter()
            .map(|(c, m)| {
                let base = if c.is_zero() { var.to_string() } else { format!("({var} - {c})") };
                if *m == 1 { base } else { format!("{base}^{m}") }
            })
            .collect();
        format!("({}) / ({})", self.num.fmt_in(var), den.join("*"))
    }
}

impl fmt::Display for HRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_in("h"))
    }
}

impl Ring for HRational {
    type Ctx = ();
    const TAG: &'static str = "hrational";

    fn ctx(&self) {}
    fn zero_in(_: &()) -> Self {
        HRational::zero()
    }
    fn one_in(_: &()) -> Self {
        HRational::one()
    }
    fn is_nil(&self) -> bool {
        HRational::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        HRational::add(self, o)
    }
    fn negate(&self) -> Self {
        HRational::neg(self)
    }
    fn times(&self, o: &Self) -> Self {
        HRational::mul(self, o)
    }
    fn scale(&self, c: &Rational) -> Self {
        HRational::scale(self, c)
    }
    fn try_div(&self, o: &Self) -> Option<Self> {
        o.inverse().ok().map(|inv| self.mul(&inv))
    }
}

/// First `terms` coefficients of the power series `a / b`, with `b(0) ≠ 0`.
fn power_series_quotient(a: &UniPoly, b: &UniPoly, terms: usize) -> Vec<Rational> {
    let b0_inv = b.coeff(0).recip();
    let bc = b.coeffs();
    let mut g: Vec<Rational> = Vec::with_capacity(terms);
    for k in 0..terms {
        let mut v = a.coeff(k);
        for j in 1..=k.min(bc.len().saturating_sub(1)) {
            if !bc[j].is_zero() {
                v -= &bc[j] * &g[k - j];
            }
        }
        g.push(v * &b0_inv);
    }
    g
}

/// Factor `p = lead · Π (t − c)^m` over ℚ, or `None` if some factor is not
/// linear over ℚ. Candidate roots come from the rational root theorem, so
/// this is meant for polynomials with moderate integer content.
pub fn split_rational(p: &UniPoly) -> Option<(Rational, Vec<(Rational, u32)>)> {
    let lead = p.leading();
    let mut rest = p.monic();
    let mut roots = Vec::new();
    let v = rest.valuation()?;
    if v > 0 {
        roots.push((Rational::zero(), v as u32));
        rest = UniPoly::new(rest.coeffs()[v..].to_vec());
    }
    while rest.degree()? > 0 {
        let ints = integer_coefficients(&rest);
        let a0 = ints.first()?.abs();
        let an = ints.last()?.abs();
        let mut found = None;
        'search: for pn in divisors(&a0)? {
            for qd in divisors(&an)? {
                for sign in [1, -1] {
                    let c = Rational::new(BigInt::from(sign) * &pn, qd.clone());
                    if rest.eval(&c).is_zero() {
                        found = Some(c);
                        break 'search;
                    }
                }
            }
        }
        let c = found?;
        let mut m = 0;
        loop {
            let (q, r) = rest.div_linear_root(&c);
            if !r.is_zero() {
                break;
            }
            rest = q;
            m += 1;
        }
        roots.push((c, m));
    }
    Some((lead, roots))
}

fn integer_coefficients(p: &UniPoly) -> Vec<BigInt> {
    let l = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.coeffs().iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect()
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.to_u64().filter(|&n| n > 0 && n < 1_000_000_000_000)?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d * d != n {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// A finite slice `ħ^low … ħ^high` of a Laurent expansion at ħ = 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentWindow {
    pub low: i32,
    pub coeffs: Vec<Rational>,
}

impl LaurentWindow {
    pub fn high(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    pub fn coeff(&self, e: i32) -> Rational {
        if e < self.low || e > self.high() {
            return Rational::zero();
        }
        self.coeffs[(e - self.low) as usize].clone()
    }

    /// Restrict to a narrower window.
    pub fn restrict(&self, low: i32, high: i32) -> LaurentWindow {
        LaurentWindow { low, coeffs: (low..=high).map(|e| self.coeff(e)).collect() }
    }

    /// Sum over the common exponent range.
    pub fn add(&self, o: &Self) -> LaurentWindow {
        let low = self.low.max(o.low);
        let high = self.high().min(o.high());
        LaurentWindow { low, coeffs: (low..=high).map(|e| self.coeff(e) + o.coeff(e)).collect() }
    }

    /// Product of two windows that each start at their true valuation; the
    /// result is exact on `low₁+low₂ … min(high₁+low₂, high₂+low₁)`.
    pub fn mul(&self, o: &Self) -> LaurentWindow {
        let low = self.low + o.low;
        let high = (self.high() + o.low).min(o.high() + self.low);
        let coeffs = (low..=high)
            .map(|e| {
                (self.low..=self.high())
                    .map(|i| self.coeff(i) * o.coeff(e - i))
                    .fold(Rational::zero(), |a, b| a + b)
            })
            .collect();
        LaurentWindow { low, coeffs }
    }
}
