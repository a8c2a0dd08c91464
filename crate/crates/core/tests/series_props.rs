//! Property tests for the exact series and rational-function layer.

use std::collections::BTreeSet;

use num_traits::Zero;
use proptest::prelude::*;
use sqmirror::series_kernel::rational::{frac, rat};
use sqmirror::series_kernel::{solve_implicit, HRational, Rational, TruncatedSeries, UniPoly};

const ORDER: usize = 5;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| frac(n, d))
}

fn series() -> impl Strategy<Value = TruncatedSeries<Rational>> {
    prop::collection::vec(small_rational(), ORDER + 1).prop_map(|c| TruncatedSeries::from_rationals(ORDER, c))
}

fn unit_series() -> impl Strategy<Value = TruncatedSeries<Rational>> {
    (series(), small_rational().prop_filter("nonzero", |c| !c.is_zero())).prop_map(|(mut s, c0)| {
        s.set_coeff(0, c0);
        s
    })
}

/// `c1 q + …` with `c1 ≠ 0`.
fn reversible_series() -> impl Strategy<Value = TruncatedSeries<Rational>> {
    (series(), small_rational().prop_filter("nonzero", |c| !c.is_zero())).prop_map(|(mut s, c1)| {
        s.set_coeff(0, Rational::zero());
        s.set_coeff(1, c1);
        s
    })
}

fn poly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-6i64..=6, 0..=max_deg + 1).prop_map(|c| UniPoly::new(c.into_iter().map(rat).collect()))
}

fn distinct_nonzero_points(max: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::btree_set((-12i64..=12).prop_filter("nonzero", |c| *c != 0), 1..=max)
        .prop_map(|s: BTreeSet<i64>| s.into_iter().map(|c| frac(c, 2)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn invert_then_multiply_is_one(s in unit_series()) {
        let inv = s.invert().unwrap();
        prop_assert_eq!(s.mul(&inv), TruncatedSeries::one((), ORDER));
    }

    #[test]
    fn reversion_round_trip(s in reversible_series()) {
        let t = s.reversion().unwrap();
        let q = TruncatedSeries::monomial(rat(1), 1, ORDER);
        prop_assert_eq!(s.compose(&t).unwrap(), q.clone());
        prop_assert_eq!(t.compose(&s).unwrap(), q);
    }

    #[test]
    fn exp_log_inverse(s in series()) {
        let mut s = s;
        s.set_coeff(0, Rational::zero());
        prop_assert_eq!(s.exp().unwrap().log().unwrap(), s);
    }

    /// `L − q·P(L) = x` for a random polynomial P.
    #[test]
    fn implicit_solution_has_zero_residual(x in small_rational(), p in poly(3)) {
        let residual = |l: &TruncatedSeries<Rational>| {
            let mut pl = TruncatedSeries::zero((), l.order());
            for (k, c) in p.coeffs().iter().enumerate() {
                pl = pl.add(&l.pow(k as u32).scale(c));
            }
            let q = TruncatedSeries::monomial(rat(1), 1, l.order());
            l.sub(&q.mul(&pl)).sub(&TruncatedSeries::constant(x.clone(), l.order()))
        };
        let initial = TruncatedSeries::constant(x.clone(), ORDER);
        let first = solve_implicit(residual, &initial).unwrap();
        prop_assert!(residual(&first).is_zero());
        let second = solve_implicit(residual, &initial).unwrap();
        prop_assert_eq!(first, second);
    }

    #[test]
    fn laurent_windows_multiply(
        nf in poly(3), ng in poly(3),
        mf in 0u32..3, mg in 0u32..3,
        pf in distinct_nonzero_points(2), pg in distinct_nonzero_points(2),
    ) {
        let f = HRational::from_parts(nf, pf.into_iter().map(|c| (c, 1)).chain([(rat(0), mf)]));
        let g = HRational::from_parts(ng, pg.into_iter().map(|c| (c, 1)).chain([(rat(0), mg)]));
        let lf = -(f.pole_order_at(&rat(0)) as i32);
        let lg = -(g.pole_order_at(&rat(0)) as i32);
        let (wf, wg) = (f.laurent_expand(lf, lf + 5), g.laurent_expand(lg, lg + 5));
        let prod = wf.mul(&wg);
        let direct = f.mul(&g).laurent_expand(prod.low, prod.high());
        prop_assert_eq!(prod, direct);
        let sum = f.add(&g).laurent_expand(lf.max(lg), 3);
        prop_assert_eq!(wf.add(&wg).restrict(lf.max(lg), 3), sum);
    }

    /// With `deg num ≤ deg den − 2` the residues at all finite poles sum to 0.
    #[test]
    fn residues_sum_to_zero(points in distinct_nonzero_points(4), m0 in 0u32..3, num in poly(4)) {
        let deg_den = points.len() + m0 as usize;
        prop_assume!(deg_den >= 2);
        let num = UniPoly::new(num.coeffs().iter().take(deg_den - 1).cloned().collect());
        let f = HRational::from_parts(num, points.iter().map(|c| (c.clone(), 1)).chain([(rat(0), m0)]));
        let mut total = f.residue_at_zero();
        for c in &points {
            let lin = HRational::from_poly(UniPoly::linear(rat(1), -c.clone()));
            total += f.mul(&lin).eval(c).unwrap();
        }
        prop_assert_eq!(total, Rational::zero());
    }

    #[test]
    fn inverse_and_reflect(num in poly(3).prop_filter("nonzero", |p| !p.is_zero()), pts in distinct_nonzero_points(3)) {
        let f = HRational::from_parts(num, pts.into_iter().map(|c| (c, 1)));
        if let Ok(g) = f.inverse() {
            prop_assert_eq!(f.mul(&g), HRational::one());
        }
        prop_assert_eq!(f.reflect().reflect(), f.clone());
        let t = frac(7, 3);
        if let (Ok(a), Ok(b)) = (f.eval(&t), f.reflect().eval(&-t.clone())) {
            prop_assert_eq!(a, b);
        }
    }
}
