//! Properties of the non-equivariant series and the invariants read off them.

use num_traits::Zero;
use proptest::prelude::*;
use sqmirror::mirror_nonequivariant::{
    gw_invariant, mirror_map_j, sq_invariant, y_series, ExponentTuple, InvariantEngine,
};
use sqmirror::series_kernel::Rational;

fn tuple(v: Vec<i64>) -> ExponentTuple {
    ExponentTuple::new(v).unwrap()
}

/// `(n, a)` with nonzero entries in `[−3, 4]` and `|a| ≤ n ≤ 6`.
fn pair_within(slack: u64) -> impl Strategy<Value = (u32, ExponentTuple)> {
    prop::collection::vec(prop_oneof![-3i64..=-1, 1i64..=4], 0..=3).prop_flat_map(move |a| {
        let abs: u64 = a.iter().map(|x| x.unsigned_abs()).sum();
        let lo = (abs + slack).max(1) as u32;
        (lo..=lo.max(6)).prop_map(move |n| (n, tuple(a.clone())))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn y_starts_at_one((n, a) in pair_within(0)) {
        let y = y_series(n, &a, 2, 4);
        let y0 = y.coeff(0);
        for (k, e, c) in y0.terms() {
            prop_assert!((k, e) == (0, 0) && *c == Rational::from_integer(1.into()) || c.is_zero());
        }
        prop_assert_eq!(y0.coeff(0, 0), Rational::from_integer(1.into()));
    }

    /// Below the threshold `|a| ≤ n − 2` the ħ⁰ and ħ⁻¹ parts of Y are 1.
    #[test]
    fn mod_h2_part_is_one_below_threshold((n, a) in pair_within(2)) {
        let y = y_series(n, &a, 3, 1);
        for d in 1..=3 {
            for (_, e, c) in y.coeff(d).terms() {
                prop_assert!(e < -1 || c.is_zero(), "q^{d} ħ^{e}: {c}");
            }
        }
    }

    /// GW and SQ agree once `|a| − ℓ⁻(a) ≤ n − 2`.
    #[test]
    fn gw_equals_sq_below_threshold((n, a) in pair_within(2), d in 1usize..=2) {
        prop_assume!(n >= 2);
        let engine = InvariantEngine::new(n, &a, d).unwrap();
        for p in 0..(n as usize).saturating_sub(1).min(3) {
            let (sq, gw) = (engine.sq(d, p), engine.gw(d, p));
            if let (Ok(sq), Ok(gw)) = (sq, gw) {
                prop_assert_eq!(sq.value, gw.value, "d={} p={}", d, p);
            }
        }
    }
}

/// `|a| = n − 1`: the `q¹` part mod ħ⁻² is `a!/ħ` when `ℓ⁻ = 0`, else 0.
#[test]
fn mod_h2_dichotomy_at_threshold() {
    for (n, a) in [(3, vec![2]), (4, vec![1, 2]), (5, vec![4]), (4, vec![2, -1]), (5, vec![3, -1])] {
        let a = tuple(a);
        let y = y_series(n, &a, 1, 1);
        let q1 = y.coeff(1);
        let expected = if a.l_minus() == 0 { Rational::from_integer(a.factorial()) } else { Rational::zero() };
        assert_eq!(q1.coeff(0, -1), expected, "n={n} a={a}");
        for (k, e, c) in q1.terms() {
            assert!((k, e) == (0, -1) || c.is_zero(), "n={n} a={a}: x^{k} ħ^{e} {c}");
        }
    }
}

/// `⟨a⟩·[q^d]J` equals the SQ τ₀ column when `|a| = n`.
#[test]
fn mirror_map_matches_sq_tau0() {
    for (n, a) in [(5, vec![5]), (4, vec![2, 2]), (5, vec![3, 2]), (6, vec![3, 3])] {
        let a = tuple(a);
        let j = mirror_map_j(n, &a, 4).unwrap();
        let engine = InvariantEngine::new(n, &a, 4).unwrap();
        for d in 1..=4 {
            assert_eq!(&j.coeff(d) * a.bracket(), engine.sq(d, 0).unwrap().value, "n={n} a={a} d={d}");
        }
    }
}

#[test]
fn gw_tau0_vanishes() {
    for (n, a) in [(5, vec![5]), (4, vec![4]), (6, vec![3, 3])] {
        let engine = InvariantEngine::new(n, &tuple(a), 4).unwrap();
        for d in 1..=4 {
            assert!(engine.gw(d, 0).unwrap().value.is_zero());
        }
    }
}

#[test]
fn stability_under_appending_one() {
    for (n, a) in [(5, vec![5]), (4, vec![3]), (5, vec![3, 2])] {
        let a = tuple(a);
        let b = a.with_one();
        let p_max = (n as i64 - 2 - a.ell()) as usize;
        for d in 1..=3 {
            for p in 0..=p_max.min(2) {
                assert_eq!(sq_invariant(n, &a, d, p).unwrap(), {
                    let mut r = sq_invariant(n + 1, &b, d, p).unwrap();
                    r.n = n;
                    r.a = a.clone();
                    r
                });
                assert_eq!(
                    gw_invariant(n, &a, d, p).unwrap().value,
                    gw_invariant(n + 1, &b, d, p).unwrap().value
                );
            }
        }
    }
}
