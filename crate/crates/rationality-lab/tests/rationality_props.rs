//! Randomized structural properties of levels, profiles, and verdicts.

use bounds_numbers::factorize_u64;
use char_table::character_table;
use group_engine::{cyclic, dihedral, direct_product, Group};
use proptest::prelude::*;
use rationality_lab::{
    conductor, detect_cyclic_sylow, find_pq_rational_witness, mckay_navarro_check,
    p_rationality_level, rationality_profile, verify_class_count_inequalities,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    /// The conductor factors as the product of p^level over the primes of
    /// the exponent: per-prime levels and the global divisor scan agree.
    #[test]
    fn conductor_is_the_product_of_level_powers(n in 2u64..=48) {
        let t = character_table(cyclic(n).unwrap()).unwrap();
        for row in 0..t.k() {
            let c = conductor(&t, row).unwrap();
            let mut product = 1u64;
            for (p, _) in factorize_u64(t.exponent) {
                product *= p.pow(p_rationality_level(&t, row, p).unwrap());
            }
            prop_assert_eq!(c, product);
        }
    }

    /// On an abelian group the dual group is isomorphic to the group, and
    /// a character of order d has conductor d except that conductors are
    /// never twice an odd number. So almost rational characters match
    /// almost regular classes at every prime, rational characters match
    /// regular classes at odd primes, and at p = 2 rationality coincides
    /// with almost rationality.
    #[test]
    fn abelian_duality_matches_counts(factors in prop::collection::vec(2u64..=9, 1..=3)) {
        let parts: Vec<Group> = factors.iter().map(|&m| cyclic(m).unwrap()).collect();
        let g = direct_product(&parts).unwrap();
        let t = character_table(g).unwrap();
        for (p, _) in factorize_u64(t.exponent) {
            let pr = rationality_profile(&t, p).unwrap();
            prop_assert_eq!(pr.n_parat, pr.n_cl_pareg);
            if p == 2 {
                prop_assert_eq!(pr.n_prat, pr.n_parat);
            } else {
                prop_assert_eq!(pr.n_prat, pr.n_cl_preg);
            }
        }
    }

    /// Dihedral groups are solvable, so the McKay count identity is a
    /// theorem; and their Sylow subgroups at odd primes are cyclic, so the
    /// detector count must land in S_p.
    #[test]
    fn dihedral_verdicts(n in 3u64..=20) {
        let t = character_table(dihedral(n).unwrap()).unwrap();
        for (p, _) in factorize_u64(2 * n) {
            let rep = mckay_navarro_check(&t, p).unwrap();
            prop_assert!(rep.equal, "p={} lhs={} rhs={}", p, rep.lhs, rep.rhs);
            let v = detect_cyclic_sylow(&t, p).unwrap();
            if p != 2 {
                prop_assert!(v.actual_cyclic);
                prop_assert!(v.in_sp, "count {} outside S_{}", v.count, p);
            }
            if p != 2 {
                let rep = verify_class_count_inequalities(&t, p, &[]).unwrap();
                prop_assert!(rep.pareg_le_parat && rep.preg_le_prat);
            }
        }
    }

    /// Witnesses of two-prime almost rationality exist on every cyclic and
    /// dihedral group for every applicable prime pair.
    #[test]
    fn witnesses_everywhere(n in 2u64..=36) {
        let pairs = [(2u64, 3u64), (3, 5), (2, 7)];
        for g in [cyclic(n).unwrap(), dihedral(n.max(3)).unwrap()] {
            let t = character_table(g).unwrap();
            for (p, q) in pairs {
                prop_assert!(find_pq_rational_witness(&t, p, q).unwrap().is_some());
            }
        }
    }

    /// Levels never exceed the p-valuation of the exponent, and rational
    /// rows sit at level zero for every prime.
    #[test]
    fn level_bounds(n in 3u64..=24) {
        let t = character_table(dihedral(n).unwrap()).unwrap();
        for row in 0..t.k() {
            for p in [2u64, 3, 5, 7] {
                let lvl = p_rationality_level(&t, row, p).unwrap();
                let mut cap = 0;
                let mut m = t.exponent;
                while m % p == 0 { m /= p; cap += 1; }
                prop_assert!(lvl <= cap);
                if t.row_is_rational(row) {
                    prop_assert_eq!(lvl, 0);
                }
            }
        }
    }
}
