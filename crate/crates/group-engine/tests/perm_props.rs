use group_engine::Perm;
use proptest::prelude::*;

fn arb_perm(degree: usize) -> impl Strategy<Value = Perm> {
    Just(degree)
        .prop_flat_map(|d| proptest::sample::subsequence((0..d as u32).collect::<Vec<_>>(), d))
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

proptest! {
    #[test]
    fn inverse_cancels(p in arb_perm(9)) {
        prop_assert!(p.compose(&p.inverse()).is_identity());
        prop_assert!(p.inverse().compose(&p).is_identity());
    }

    #[test]
    fn composition_is_associative(a in arb_perm(8), b in arb_perm(8), c in arb_perm(8)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn order_annihilates_and_is_minimal(p in arb_perm(10)) {
        let o = p.order() as i64;
        prop_assert!(p.pow(o).is_identity());
        for d in 1..o {
            prop_assert!(!p.pow(d).is_identity());
        }
    }

    #[test]
    fn conjugation_preserves_cycle_type(x in arb_perm(8), g in arb_perm(8)) {
        let y = x.conjugate_by(&g);
        let mut a: Vec<usize> = x.cycles().iter().map(|c| c.len()).collect();
        let mut b: Vec<usize> = y.cycles().iter().map(|c| c.len()).collect();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn pow_matches_repeated_composition(p in arb_perm(7), e in 0i64..30) {
        let mut acc = Perm::identity(7);
        for _ in 0..e {
            acc = acc.compose(&p);
        }
        prop_assert_eq!(p.pow(e), acc);
    }
}
