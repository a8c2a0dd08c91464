//! Sparse multivariate polynomials over ℚ.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::poly::UniPoly;
use super::rational::Rational;
use super::ring::Ring;

/// An exponent vector ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The `k`-th variable.
    pub fn var(nvars: usize, k: usize) -> Self {
        let mut e = vec![0; nvars];
        e[k] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, Rational::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        assert_eq!(exps.len(), self.nvars, "exponent vector arity");
        if c.is_zero() {
            return;
        }
        let key = Monomial(exps);
        let v = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Terms in canonical (graded lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(m, c)| (m.0.as_slice(), c))
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_in(&self, k: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[k]).max()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.0.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let e = m1.0.iter().zip(&m2.0).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Substitute rational values for every variable.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (m, c)| {
            let mut t = c.clone();
            for (e, v) in m.0.iter().zip(point) {
                t *= num_traits::pow(v.clone(), *e as usize);
            }
            acc + t
        })
    }

    /// View as a polynomial in variable `k` whose coefficients are univariate
    /// polynomials in variable `other` (for two-variable polynomials).
    pub fn split_bivariate(&self, k: usize, other: usize) -> BTreeMap<u32, UniPoly> {
        assert_eq!(self.nvars, 2, "split_bivariate needs exactly two variables");
        let mut parts: BTreeMap<u32, Vec<Rational>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (ek, eo) = (m.0[k], m.0[other] as usize);
            let v = parts.entry(ek).or_default();
            if v.len() <= eo {
                v.resize(eo + 1, Rational::zero());
            }
            v[eo] += c;
        }
        parts.into_iter().map(|(e, v)| (e, UniPoly::new(v))).collect()
    }

    /// Divide by a single term, if it divides every term exactly.
    fn div_by_term(&self, exps: &[u32], c: &Rational) -> Option<Self> {
        let mut out = Self::zero(self.nvars);
        for (m, v) in &self.terms {
            if m.0.iter().zip(exps).any(|(a, b)| a < b) {
                return None;
            }
            out.add_term(m.0.iter().zip(exps).map(|(a, b)| a - b).collect(), v / c);
        }
        Some(out)
    }
}

impl Ring for SparsePoly {
    type Ctx = usize;
    const TAG: &'static str = "sparse_poly";

    fn ctx(&self) -> usize {
        self.nvars
    }
    fn zero_in(ctx: &usize) -> Self {
        SparsePoly::zero(*ctx)
    }
    fn one_in(ctx: &usize) -> Self {
        SparsePoly::constant(*ctx, Rational::one())
    }
    fn is_nil(&self) -> bool {
        SparsePoly::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        SparsePoly::add(self, o)
    }
    fn negate(&self) -> Self {
        SparsePoly::neg(self)
    }
    fn times(&self, o: &Self) -> Self {
        SparsePoly::mul(self, o)
    }
    fn scale(&self, c: &Rational) -> Self {
        SparsePoly::scale(self, c)
    }
    /// Only single-term divisors are supported.
    fn try_div(&self, o: &Self) -> Option<Self> {
        if o.terms.len() != 1 {
            return None;
        }
        let (m, c) = o.terms.iter().next()?;
        self.div_by_term(&m.0, c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series_kernel::rational::rat;

    #[test]
    fn graded_lex_order() {
        let p = SparsePoly::from_terms(
            2,
            [(vec![2, 0], rat(1)), (vec![0, 1], rat(1)), (vec![1, 0], rat(1)), (vec![0, 0], rat(1))],
        );
        let order: Vec<Vec<u32>> = p.terms().map(|(e, _)| e.to_vec()).collect();
        assert_eq!(order, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![2, 0]]);
    }

    #[test]
    fn cancellation_removes_terms() {
        let x = SparsePoly::var(2, 0);
        assert!(x.add(&x.neg()).is_zero());
    }

    #[test]
    fn square_of_binomial() {
        let s = SparsePoly::var(2, 0).add(&SparsePoly::var(2, 1));
        let sq = s.mul(&s);
        assert_eq!(sq.coeff(&[1, 1]), rat(2));
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.try_div(&SparsePoly::var(2, 0)), None);
    }
}
