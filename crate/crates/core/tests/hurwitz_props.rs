//! Properties of L, ξ, the twisted Hurwitz numbers and the ψ-integrals.

use num_traits::Zero;
use proptest::prelude::*;
use sqmirror::equivariant_engine::FixedPointFrame;
use sqmirror::hurwitz::{
    check_regularity, check_two_point_identity, defining_residual, first_tri_difference, lxi_at, lxi_formal,
    m02d_psi_integral, m02d_psi_integral_recursive, two_point_sides, xi_residual, HurwitzTable,
};
use sqmirror::mirror_nonequivariant::ExponentTuple;

fn tuple() -> impl Strategy<Value = ExponentTuple> {
    prop::collection::vec(prop_oneof![-2i64..=-1, 1i64..=3], 0..=2).prop_map(|v| ExponentTuple::new(v).unwrap())
}

fn frame() -> impl Strategy<Value = FixedPointFrame> {
    (1usize..=4, any::<u64>()).prop_map(|(n, seed)| FixedPointFrame::random(n, 1, seed, 4).remove(0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn lxi_residuals_vanish(f in frame(), a in tuple()) {
        for p in f.points() {
            let pair = lxi_at(&p, &a, 4).unwrap();
            let x = p.weight(p.i()).clone();
            prop_assert!(defining_residual(&pair.l, p.alpha(), &x, &a).is_zero());
            prop_assert!(xi_residual(&pair.xi, &pair.l, &x).is_zero());
            prop_assert!(pair.xi.coeff(0).is_zero());
        }
    }

    #[test]
    fn hurwitz_dimension_bound(f in frame(), a in tuple()) {
        let t = HurwitzTable::new(&f, &a, 4).unwrap();
        for i in 0..f.n() {
            for ((b1, b2), s) in t.rows(i) {
                for d in 0..=((b1 + b2) as usize).min(4) {
                    prop_assert!(s.coeff(d).is_zero());
                }
            }
        }
    }

    #[test]
    fn two_point_identity_and_regularity(f in frame(), a in tuple()) {
        let v = check_two_point_identity(&f, &a, 3, (3, 3)).unwrap();
        prop_assert!(v.pass, "{:?}", v.witness);
        if a.abs_sum() <= f.n() as u64 {
            let r = check_regularity(&f, &a, 3).unwrap();
            prop_assert!(r.pass, "{:?}", r.witness);
        }
    }

    /// With `n = 1` and the hyperplane class kept as a variable.
    #[test]
    fn formal_one_point_identity(a in tuple()) {
        prop_assume!(a.abs_sum() >= 1);
        let pair = lxi_formal(1, &a, 3).unwrap();
        let (lhs, rhs) = two_point_sides(&pair.xi, 3, 3).unwrap();
        prop_assert_eq!(first_tri_difference(&lhs, &rhs), None);
    }

    #[test]
    fn psi_integral_oracles_agree(d in 1u32..=7, a1 in 0u32..=7, a2 in 0u32..=7, b in prop::collection::vec(0u32..=2, 0..=3)) {
        prop_assume!(b.len() <= d as usize);
        prop_assert_eq!(m02d_psi_integral(d, a1, a2, &b).unwrap(), m02d_psi_integral_recursive(d, a1, a2, &b).unwrap());
    }
}
