//! Properties of the fixed-point restrictions of Y at random weight frames.

use proptest::prelude::*;
use sqmirror::equivariant_engine::{
    check_edge_coefficients, check_mirror_identity, check_recursivity, pole_order_violation,
    secondary_coefficients_y, y_equivariant, y_family, FixedPointFrame,
};
use sqmirror::mirror_nonequivariant::ExponentTuple;

const PAIRS: &[(usize, &str)] = &[(2, ""), (3, "2"), (5, "5"), (5, "3,-1"), (5, "-2"), (4, "2"), (3, "1,1")];

fn case() -> impl Strategy<Value = (FixedPointFrame, ExponentTuple)> {
    (0..PAIRS.len(), any::<u64>()).prop_map(|(k, seed)| {
        let (n, a) = PAIRS[k];
        let frame = FixedPointFrame::random(n, 1, seed, 3).remove(0);
        (frame, a.parse().unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn pole_order_at_zero_bounded_by_degree((frame, a) in case()) {
        for p in frame.points() {
            let y = y_equivariant(&p, &a, 3).unwrap();
            prop_assert_eq!(pole_order_violation(&y.series), None);
        }
    }

    #[test]
    fn edge_coefficients_match((frame, a) in case()) {
        let v = check_edge_coefficients(&frame, &a, 3).unwrap();
        prop_assert!(v.pass, "{:?}", v.witness);
    }

    /// Remainders are Laurent polynomials and equal the secondary part.
    #[test]
    fn remainders_are_the_secondary_part((frame, a) in case()) {
        let family = y_family(&frame, &a, 3).unwrap();
        let data = secondary_coefficients_y(&frame, &a, 3).unwrap();
        for d in 0..=3 {
            for rem in check_recursivity(&frame, &a, &family, d).unwrap() {
                prop_assert!(rem.is_laurent(), "i={} d={}: {}", rem.i, d, rem.value);
                prop_assert_eq!(&rem.value, &data.laurent_part(rem.i, d), "i={} d={}", rem.i, d);
            }
        }
    }
}

/// The identity lives in ℚ(α), so independent frames must agree.
#[test]
fn mirror_verdicts_agree_across_frames() {
    for (n, a) in [(3, "3"), (4, "2,-1"), (3, "1")] {
        let a: ExponentTuple = a.parse().unwrap();
        let verdicts: Vec<bool> = FixedPointFrame::random(n, 3, 11, 3)
            .iter()
            .map(|f| check_mirror_identity(f, &a, 3).unwrap().pass)
            .collect();
        assert_eq!(verdicts, vec![true; 3], "n={n} a={a}");
    }
}
