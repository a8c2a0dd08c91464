//! Torus weights specialized to distinct rationals, plus a chosen fixed point.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::series_kernel::rational::rat;
use crate::series_kernel::Rational;

/// Largest absolute value of a randomly drawn weight.
pub const RANDOM_WEIGHT_BOUND: i64 = 50;

/// Weights `α_1 … α_n` and a fixed-point index `i` (0-based).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FixedPointFrame {
    alpha: Vec<Rational>,
    i: usize,
}

impl FixedPointFrame {
    /// Weights must be pairwise distinct and nonzero (nonzero keeps
    /// `α_i^{ℓ(a)}` defined for negative `ℓ(a)`).
    pub fn new(alpha: Vec<Rational>, i: usize) -> Result<Self> {
        if alpha.is_empty() {
            return Err(Error::Frame("at least one weight is required".into()));
        }
        if i >= alpha.len() {
            return Err(Error::Frame(format!("index {i} out of range for {} weights", alpha.len())));
        }
        if alpha.iter().any(Zero::is_zero) {
            return Err(Error::Frame("weights must be nonzero".into()));
        }
        let distinct: BTreeSet<_> = alpha.iter().collect();
        if distinct.len() != alpha.len() {
            return Err(Error::Frame("weights must be pairwise distinct".into()));
        }
        Ok(FixedPointFrame { alpha, i })
    }

    pub fn from_ints(alpha: &[i64], i: usize) -> Result<Self> {
        Self::new(alpha.iter().map(|&v| rat(v)).collect(), i)
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self) -> &[Rational] {
        &self.alpha
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn weight(&self, k: usize) -> &Rational {
        &self.alpha[k]
    }

    /// The same weights at another fixed point.
    pub fn at(&self, j: usize) -> Self {
        assert!(j < self.n(), "fixed point {j} out of range");
        FixedPointFrame { alpha: self.alpha.clone(), i: j }
    }

    /// All fixed points of these weights.
    pub fn points(&self) -> impl Iterator<Item = FixedPointFrame> + '_ {
        (0..self.n()).map(|j| self.at(j))
    }

    /// `Π_{k≠i} (α_i − α_k)`, the tangent weight at the chosen point.
    pub fn tangent_euler(&self) -> Rational {
        let ai = &self.alpha[self.i];
        self.alpha
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != self.i)
            .fold(Rational::one(), |acc, (_, ak)| acc * (ai - ak))
    }

    /// The point `(α_j − α_i)/d` where the recursion evaluates.
    pub fn node(&self, j: usize, d: usize) -> Rational {
        (&self.alpha[j] - &self.alpha[self.i]) / rat(d as i64)
    }

    /// Reject weights for which the recursion up to `d_max` would hit a
    /// coincidence: for every fixed point `i`, the nodes `(α_j − α_i)/d`
    /// must be pairwise distinct, and no node may be a pole
    /// `(α_k − α_j)/r` of the coefficient evaluated there.
    pub fn check_generic(&self, d_max: usize) -> Result<()> {
        for p in self.points() {
            let mut seen = BTreeSet::new();
            for j in (0..self.n()).filter(|&j| j != p.i) {
                for d in 1..=d_max {
                    let c = p.node(j, d);
                    if !seen.insert(c.clone()) {
                        return Err(Error::Resonance(format!(
                            "repeated node {c} at fixed point {} (j = {}, d = {d})",
                            p.i + 1,
                            j + 1
                        )));
                    }
                    let pj = self.at(j);
                    for k in (0..self.n()).filter(|&k| k != j) {
                        for r in 1..=d_max {
                            if pj.node(k, r) == c {
                                return Err(Error::Resonance(format!(
                                    "node {c} of ({}, {}, {d}) meets a pole of the coefficient at {}",
                                    p.i + 1,
                                    j + 1,
                                    j + 1
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `count` reproducible generic frames with integer weights in
    /// `[−50, 50] \ {0}`, all at fixed point 0.
    pub fn random(n: usize, count: usize, seed: u64, d_max: usize) -> Vec<FixedPointFrame> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::with_capacity(count);
        while out.len() < count {
            let alpha: Vec<i64> = (0..n)
                .map(|_| loop {
                    let v = rng.gen_range(-RANDOM_WEIGHT_BOUND..=RANDOM_WEIGHT_BOUND);
                    if v != 0 {
                        break v;
                    }
                })
                .collect();
            if let Ok(f) = FixedPointFrame::from_ints(&alpha, 0) {
                if f.check_generic(d_max).is_ok() {
                    out.push(f);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_weights() {
        assert!(FixedPointFrame::from_ints(&[1, 1], 0).is_err());
        assert!(FixedPointFrame::from_ints(&[0, 1], 0).is_err());
        assert!(FixedPointFrame::from_ints(&[1, 2], 2).is_err());
        assert!(FixedPointFrame::from_ints(&[], 0).is_err());
    }

    #[test]
    fn resonance_guard() {
        // α_2 − α_1 = (α_3 − α_2)/2: a pole at point 2 meets a node once r = 2.
        let f = FixedPointFrame::from_ints(&[1, 2, 4], 0).unwrap();
        assert!(f.check_generic(1).is_ok());
        assert!(matches!(f.check_generic(2), Err(Error::Resonance(_))));
        // A weight midway between two others collides already at degree 1.
        let g = FixedPointFrame::from_ints(&[1, 5, 3], 0).unwrap();
        assert!(matches!(g.check_generic(1), Err(Error::Resonance(_))));
    }

    #[test]
    fn random_frames_are_reproducible_and_generic() {
        let a = FixedPointFrame::random(5, 3, 7, 4);
        let b = FixedPointFrame::random(5, 3, 7, 4);
        assert_eq!(a, b);
        for f in &a {
            assert!(f.check_generic(4).is_ok());
            assert!(f.alpha().iter().all(|w| w.numer().magnitude() <= &50u32.into()));
        }
    }

    #[test]
    fn tangent_euler_two_points() {
        let f = FixedPointFrame::from_ints(&[2, 7], 0).unwrap();
        assert_eq!(f.tangent_euler(), rat(-5));
        assert_eq!(f.at(1).tangent_euler(), rat(5));
    }
}
