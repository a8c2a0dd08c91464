//! Pass/fail records for the structural checks.

use serde_json::{json, Value};

use super::frame::FixedPointFrame;
use crate::mirror_nonequivariant::ExponentTuple;
use crate::series_kernel::{CanonicalJson, Rational};

#[derive(Clone, PartialEq, Debug)]
pub struct Verdict {
    pub check: String,
    pub frame: Vec<Rational>,
    pub n: usize,
    pub a: ExponentTuple,
    pub d_max: usize,
    pub pass: bool,
    /// First failing coefficient, or an informational note on success.
    pub witness: Option<String>,
}

impl Verdict {
    /// A verdict that has not passed yet.
    pub fn new(check: &str, frame: &FixedPointFrame, a: &ExponentTuple, d_max: usize) -> Self {
        Verdict {
            check: check.to_string(),
            frame: frame.alpha().to_vec(),
            n: frame.n(),
            a: a.clone(),
            d_max,
            pass: false,
            witness: None,
        }
    }

    /// A verdict for a check that is not tied to one frame.
    pub fn without_frame(check: &str, n: usize, a: &ExponentTuple, d_max: usize) -> Self {
        Verdict {
            check: check.to_string(),
            frame: Vec::new(),
            n,
            a: a.clone(),
            d_max,
            pass: false,
            witness: None,
        }
    }

    pub fn fail(mut self, witness: String) -> Self {
        self.pass = false;
        self.witness = Some(witness);
        self
    }

    pub fn passed(mut self) -> Self {
        self.pass = true;
        self
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check": self.check,
            "frame": self.frame.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
            "n": self.n,
            "a": self.a.entries(),
            "d_max": self.d_max,
            "pass": self.pass,
            "witness": self.witness,
        })
    }
}
