//! Canonical JSON forms. Scalars are `"num/den"` strings (integers print
//! without a denominator), polynomial terms are keyed by exponent vectors in
//! canonical order, and zero terms are omitted.

use serde_json::{json, Map, Value};

use super::hrational::{HRational, LaurentWindow};
use super::poly::UniPoly;
use super::rational::Rational;
use super::ring::Ring;
use super::series::TruncatedSeries;
use super::sparse::SparsePoly;

pub trait CanonicalJson {
    fn to_json(&self) -> Value;
}

impl CanonicalJson for Rational {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl CanonicalJson for UniPoly {
    fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
            .map(|(k, c)| json!([[k], c.to_string()]))
            .collect();
        Value::Array(terms)
    }
}

impl CanonicalJson for SparsePoly {
    fn to_json(&self) -> Value {
        json!({
            "nvars": self.nvars(),
            "terms": self.terms().map(|(e, c)| json!([e, c.to_string()])).collect::<Vec<_>>(),
        })
    }
}

impl CanonicalJson for HRational {
    fn to_json(&self) -> Value {
        json!({
            "numerator": self.numerator().to_json(),
            "denominator": self.denominator().to_json(),
        })
    }
}

impl CanonicalJson for LaurentWindow {
    fn to_json(&self) -> Value {
        json!({
            "low": self.low,
            "coefficients": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }
}

impl<R: Ring + CanonicalJson> CanonicalJson for TruncatedSeries<R> {
    fn to_json(&self) -> Value {
        let mut terms = Map::new();
        for (d, c) in self.coeffs().iter().enumerate() {
            if !c.is_nil() {
                terms.insert(d.to_string(), c.to_json());
            }
        }
        json!({ "ring": R::TAG, "order": self.order(), "terms": terms })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series_kernel::rational::frac;

    #[test]
    fn rational_strings() {
        assert_eq!(frac(6, 4).to_json(), json!("3/2"));
        assert_eq!(frac(-4, 2).to_json(), json!("-2"));
    }

    #[test]
    fn series_omits_zeros() {
        let s = TruncatedSeries::from_ints(3, &[1, 0, 2]);
        assert_eq!(s.to_json(), json!({"ring": "rational", "order": 3, "terms": {"0": "1", "2": "2"}}));
    }
}
