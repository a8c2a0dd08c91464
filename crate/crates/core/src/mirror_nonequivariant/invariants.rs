//! Extraction of stable-quotients (SQ) and Gromov-Witten (GW) invariants.
//!
//! Indexing: the `q^d` coefficient of Z is `ev_*` of a class on the moduli
//! space, written `Σ_m c_m x^m` in `H*(ℙ^{n−1})`. Pairing its `ħ^{−(p+1)}`
//! part with `x^{n−2−p}` and using `∫ x^{n−1} = 1` picks out `c_{p+1}`, so the
//! invariant is `⟨a⟩` times the coefficient of `ħ^{−(p+1)} x^{p+1} q^d`.

use std::fmt;

use num_traits::Zero;
use serde_json::{json, Value};

use super::hypergeometric::{mirror_map_j, z_series};
use super::tuple::ExponentTuple;
use super::xclass::{XClass, XClassSeries};
use crate::error::{Error, Result};
use crate::series_kernel::rational::rat;
use crate::series_kernel::ring::Ring;
use crate::series_kernel::series::TruncatedSeries;
use crate::series_kernel::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Flavor {
    Sq,
    Gw,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Sq => "SQ",
            Flavor::Gw => "GW",
        })
    }
}

impl std::str::FromStr for Flavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "SQ" => Ok(Flavor::Sq),
            "GW" => Ok(Flavor::Gw),
            _ => Err(Error::Parse(format!("unknown flavor {s:?}"))),
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct InvariantRecord {
    pub n: u32,
    pub a: ExponentTuple,
    pub flavor: Flavor,
    pub d: usize,
    pub p: usize,
    pub value: Rational,
}

impl InvariantRecord {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "a": self.a.entries(),
            "flavor": self.flavor.to_string(),
            "d": self.d,
            "p": self.p,
            "value": self.value.to_string(),
        })
    }
}

/// Z and Z^GW for one `(n, a)`, computed once and queried many times.
#[derive(Clone, Debug)]
pub struct InvariantEngine {
    n: u32,
    a: ExponentTuple,
    d_max: usize,
    z: XClassSeries,
    z_gw: XClassSeries,
}

impl InvariantEngine {
    pub fn new(n: u32, a: &ExponentTuple, d_max: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Range("n must be positive".into()));
        }
        let h_order = n.max(d_max as u32 + 2);
        let z = z_series(n, a, d_max, h_order)?;
        let z_gw = gw_transform(n, a, &z, d_max)?;
        Ok(InvariantEngine { n, a: a.clone(), d_max, z, z_gw })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn tuple(&self) -> &ExponentTuple {
        &self.a
    }

    pub fn d_max(&self) -> usize {
        self.d_max
    }

    pub fn z(&self) -> &XClassSeries {
        &self.z
    }

    pub fn z_gw(&self) -> &XClassSeries {
        &self.z_gw
    }

    fn check_range(&self, d: usize, p: usize) -> Result<()> {
        if d == 0 || d > self.d_max {
            return Err(Error::Range(format!("degree {d} outside 1..={}", self.d_max)));
        }
        let p_max = self.n as i64 - 2 - self.a.ell();
        if p as i64 > p_max {
            return Err(Error::Range(format!(
                "descendant power {p} exceeds n - 2 - l(a) = {p_max}"
            )));
        }
        Ok(())
    }

    fn extract(&self, series: &XClassSeries, flavor: Flavor, d: usize, p: usize) -> Result<InvariantRecord> {
        self.check_range(d, p)?;
        let k = p as u32 + 1;
        let value = self.a.bracket() * series.coeff(d).coeff(k, -(k as i32));
        if (p as i64) <= self.a.l_minus() as i64 - 2 && !value.is_zero() {
            return Err(Error::Domain(format!(
                "{flavor} invariant at d={d}, p={p} must vanish but equals {value}"
            )));
        }
        Ok(InvariantRecord { n: self.n, a: self.a.clone(), flavor, d, p, value })
    }

    pub fn sq(&self, d: usize, p: usize) -> Result<InvariantRecord> {
        self.extract(&self.z, Flavor::Sq, d, p)
    }

    pub fn gw(&self, d: usize, p: usize) -> Result<InvariantRecord> {
        self.extract(&self.z_gw, Flavor::Gw, d, p)
    }

    pub fn invariant(&self, flavor: Flavor, d: usize, p: usize) -> Result<InvariantRecord> {
        match flavor {
            Flavor::Sq => self.sq(d, p),
            Flavor::Gw => self.gw(d, p),
        }
    }
}

/// Pass from Z to Z^GW through the mirror factor and change of variables.
fn gw_transform(n: u32, a: &ExponentTuple, z: &XClassSeries, d_max: usize) -> Result<XClassSeries> {
    let ctx = *z.ring();
    let abs = a.abs_sum() as i64;
    if abs == n as i64 {
        // e^{−J(q) x/ħ} Z(q), then q = q(Q) with Q = q e^{J(q)}.
        let j = mirror_map_j(n, a, d_max)?;
        let x_over_h = XClass::term(ctx, 1, -1, rat(1));
        let exponent = j.map(ctx, |c| x_over_h.scale(c)).neg();
        let w = exponent.exp()?.mul(z);
        let q = TruncatedSeries::from_ints(d_max, &[0, 1]);
        let big_q = q.mul(&j.exp()?);
        let q_of_big_q = big_q.reversion()?;
        return w.compose_rational(&q_of_big_q);
    }
    if abs == n as i64 - 1 && a.l_minus() == 0 {
        // e^{−a! q/ħ} Z(q)
        let af = Rational::from_integer(a.factorial());
        let inv_h = XClass::term(ctx, 0, -1, rat(1));
        let exponent = TruncatedSeries::monomial(inv_h.scale(&(-af)), 1, d_max);
        return Ok(exponent.exp()?.mul(z));
    }
    Ok(z.clone())
}

pub fn sq_invariant(n: u32, a: &ExponentTuple, d: usize, p: usize) -> Result<InvariantRecord> {
    InvariantEngine::new(n, a, d.max(1))?.sq(d, p)
}

pub fn gw_invariant(n: u32, a: &ExponentTuple, d: usize, p: usize) -> Result<InvariantRecord> {
    InvariantEngine::new(n, a, d.max(1))?.gw(d, p)
}

/// One row of the quintic table: GW τ₁(x)/d, SQ τ₀(x²), SQ τ₁(x)/d, −SQ τ₂(1)/2.
#[derive(Clone, PartialEq, Debug)]
pub struct Table1Row {
    pub d: usize,
    pub cols: [Rational; 4],
}

pub fn table1(d_max: usize) -> Result<Vec<Table1Row>> {
    let a = ExponentTuple::new(vec![5])?;
    let engine = InvariantEngine::new(5, &a, d_max)?;
    (1..=d_max)
        .map(|d| {
            let dd = rat(d as i64);
            Ok(Table1Row {
                d,
                cols: [
                    engine.gw(d, 1)?.value / &dd,
                    engine.sq(d, 0)?.value,
                    engine.sq(d, 1)?.value / &dd,
                    -engine.sq(d, 2)?.value / rat(2),
                ],
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series_kernel::rational::frac;

    fn quintic() -> InvariantEngine {
        InvariantEngine::new(5, &ExponentTuple::new(vec![5]).unwrap(), 2).unwrap()
    }

    #[test]
    fn sq_examples() {
        let e = quintic();
        assert_eq!(e.sq(1, 0).unwrap().value, rat(3850));
        assert_eq!(e.sq(2, 1).unwrap().value, frac(19660875, 4));
        assert_eq!(e.sq(1, 2).unwrap().value, rat(-5750));
    }

    #[test]
    fn gw_examples() {
        let e = quintic();
        assert_eq!(e.gw(1, 1).unwrap().value, rat(2875));
        assert_eq!(e.gw(2, 1).unwrap().value, frac(4876875, 4));
        assert!(e.gw(1, 0).unwrap().value.is_zero());
        assert!(e.gw(2, 0).unwrap().value.is_zero());
    }

    #[test]
    fn range_errors() {
        let e = quintic();
        assert!(matches!(e.sq(1, 3), Err(Error::Range(_))));
        assert!(matches!(e.sq(0, 0), Err(Error::Range(_))));
        assert!(matches!(e.sq(3, 0), Err(Error::Range(_))));
    }

    #[test]
    fn record_json() {
        let r = quintic().sq(1, 0).unwrap();
        assert_eq!(r.to_json()["value"], json!("3850"));
        assert_eq!(r.to_json()["flavor"], json!("SQ"));
    }
}
