//! Frozen class numbers, orbit decompositions, certificates, and prime
//! verdicts, each derived independently (by hand or through the
//! permutation-group oracle) before being pinned here.

use affine_classcount::{
    burnside_orbit_count, burnside_orbit_count_from_generators, classify_prime_conditions,
    k_lower_bound_certificate, k_semidirect, k_semidirect_oracle, sp_exclusion_scan, AffineError,
    MatGroup, Method,
};
use num_bigint::BigUint;
use num_rational::Ratio;

/// Generators of a subgroup of GL_2(11) isomorphic to SL_2(5): two
/// determinant-one matrices closing to order 120.
fn sl2_5_in_gl2_11() -> Vec<Vec<u64>> {
    vec![vec![0, 1, 10, 4], vec![0, 2, 5, 0]]
}

fn neg_identity(p: u64, n: usize) -> Vec<u64> {
    let mut m = vec![0u64; n * n];
    for i in 0..n {
        m[i * n + i] = p - 1;
    }
    m
}

#[test]
fn one_dimensional_orbit_decompositions() {
    // ⟨2⟩ of order 4 on F_5: the origin plus one regular orbit.
    let h = MatGroup::new(5, 1, &[vec![2]]).unwrap();
    let report = k_semidirect(&h).unwrap();
    assert_eq!(report.k_hv, 5);
    assert_eq!(report.orbit_count, 2);
    assert_eq!(report.method, Method::OrbitReps);
    let detail: Vec<_> = report
        .orbits
        .iter()
        .map(|o| (o.representative.clone(), o.size, o.stabilizer_order, o.k_stabilizer))
        .collect();
    assert_eq!(
        detail,
        vec![(vec![0], 1, 4, 4), (vec![1], 4, 1, 1)]
    );

    // ⟨3⟩ of order 3 on F_13: the nonzero classes are the four cosets of
    // {1, 3, 9}, with lexicographically least members 1, 2, 4, 7.
    let h = MatGroup::new(13, 1, &[vec![3]]).unwrap();
    let report = k_semidirect(&h).unwrap();
    assert_eq!(report.k_hv, 7);
    assert_eq!(report.orbit_count, 5);
    assert_eq!(report.k_h, 3);
    let reps: Vec<u64> = report.orbits.iter().map(|o| o.representative[0]).collect();
    assert_eq!(reps, vec![0, 1, 2, 4, 7]);
    assert!(report.orbits.iter().skip(1).all(|o| o.size == 3 && o.k_stabilizer == 1));
    // The closed form is attained exactly: k(H) + (p−1)/|H| = 3 + 4.
    assert_eq!(report.clifford_lower, Ratio::from_integer(7));
}

#[test]
fn affine_sl2_5_has_ten_classes() {
    let h = MatGroup::new(11, 2, &sl2_5_in_gl2_11()).unwrap();
    assert_eq!(h.order, 120);

    let report = k_semidirect(&h).unwrap();
    assert_eq!(report.k_hv, 10);
    assert_eq!(report.orbit_count, 2);
    assert_eq!(report.k_h, 9);
    // The 120 nonzero vectors form a single regular orbit.
    assert_eq!(report.orbits[0].representative, vec![0, 0]);
    assert_eq!(report.orbits[0].k_stabilizer, 9);
    assert_eq!(report.orbits[1].representative, vec![0, 1]);
    assert_eq!(report.orbits[1].size, 120);
    assert_eq!(report.orbits[1].stabilizer_order, 1);
    // Lower bound 9 + 120/120 is attained; k ≤ p, so the dimension-two
    // upper bound applies and holds with room to spare.
    assert_eq!(report.clifford_lower, Ratio::from_integer(10));
    assert_eq!(report.sandwich_upper, Some(Ratio::from_integer(7210)));

    // Independent route: the order-14520 affine permutation group on the
    // 121 vectors, classified from scratch.
    assert_eq!(k_semidirect_oracle(&h).unwrap(), 10);

    // Orbit-counting route agrees, on matrices alone as well.
    assert_eq!(burnside_orbit_count(&h).unwrap(), BigUint::from(2u32));
    assert_eq!(
        burnside_orbit_count_from_generators(11, 2, &sl2_5_in_gl2_11()).unwrap(),
        BigUint::from(2u32)
    );

    // Certificate: k(SL_2(5)) = 9 classes, two orbits, bound 10, not
    // above p = 11.
    let cert = k_lower_bound_certificate(11, 2, &sl2_5_in_gl2_11()).unwrap();
    assert_eq!(cert.group_order, 120);
    assert_eq!(cert.k_h, 9);
    assert_eq!(cert.orbit_count, BigUint::from(2u32));
    assert_eq!(cert.bound, BigUint::from(10u32));
    assert!(!cert.exceeds_p);
    assert!(cert.is_consistent());

    // k = 10 misses S_11 = {7, 11}.
    let scan = sp_exclusion_scan(&h).unwrap();
    assert_eq!(scan.k_hv, 10);
    assert_eq!(scan.sp_values, vec![7, 11]);
    assert!(!scan.in_sp && !scan.counterexample);
}

#[test]
fn oracle_agreement_corpus() {
    // (p, n, generators, expected k) with every k derived by hand from the
    // orbit structure before freezing.
    let corpus: Vec<(u64, usize, Vec<Vec<u64>>, u64)> = vec![
        (5, 1, vec![vec![2]], 5),
        (7, 1, vec![vec![3]], 7),
        (13, 1, vec![vec![3]], 7),
        // C_3 on F_2²: the affine group is Alt(4).
        (2, 2, vec![vec![0, 1, 1, 1]], 4),
        // ⟨−1⟩ on F_3²: origin, plus four antipodal pairs.
        (3, 2, vec![neg_identity(3, 2)], 6),
        // Quaternion group inside SL_2(3), regular on the 8 nonzero vectors.
        (3, 2, vec![vec![0, 2, 1, 0], vec![1, 1, 1, 2]], 6),
        // Monomial dihedral group of order 8 inside GL_2(5).
        (5, 2, vec![vec![2, 0, 0, 3], vec![0, 1, 1, 0]], 14),
        // Dicyclic group of order 12 inside SL_2(7).
        (7, 2, vec![vec![0, 1, 6, 0], vec![3, 0, 0, 5]], 10),
    ];
    for (p, n, gens, expected) in corpus {
        let h = MatGroup::new(p, n, &gens).unwrap();
        let report = k_semidirect(&h).unwrap();
        assert_eq!(report.k_hv, expected, "orbit route at p={p}, n={n}");
        assert_eq!(
            k_semidirect_oracle(&h).unwrap(),
            expected,
            "permutation oracle at p={p}, n={n}"
        );
        assert_eq!(
            burnside_orbit_count(&h).unwrap(),
            BigUint::from(report.orbit_count),
            "orbit-counting lemma at p={p}, n={n}"
        );
    }
}

#[test]
fn monomial_dihedral_orbit_detail() {
    // d = diag(2,3), s = swap on F_5²: six orbits — the origin, the eight
    // axis vectors, and four orbits of size four whose stabilizers are
    // reflections.
    let h = MatGroup::new(5, 2, &[vec![2, 0, 0, 3], vec![0, 1, 1, 0]]).unwrap();
    assert_eq!(h.order, 8);
    let report = k_semidirect(&h).unwrap();
    assert_eq!(report.k_hv, 14);
    assert_eq!(report.orbit_count, 6);
    let detail: Vec<_> = report
        .orbits
        .iter()
        .map(|o| (o.representative.clone(), o.size, o.stabilizer_order, o.k_stabilizer))
        .collect();
    assert_eq!(
        detail,
        vec![
            (vec![0, 0], 1, 8, 5),
            (vec![0, 1], 8, 1, 1),
            (vec![1, 1], 4, 2, 2),
            (vec![1, 2], 4, 2, 2),
            (vec![1, 3], 4, 2, 2),
            (vec![1, 4], 4, 2, 2),
        ]
    );
    // Strictly above the lower bound here: 5 + 24/8 = 8 < 14.
    assert_eq!(report.clifford_lower, Ratio::from_integer(8));
}

#[test]
fn huge_prime_certificate_in_dimension_three() {
    // ⟨−1⟩ on a vector space of size 7207³: never enumerated, the orbit
    // count is (p³ + 1)/2 because −1 fixes only the origin.
    let p: u64 = 7207;
    let cert = k_lower_bound_certificate(p, 3, &[neg_identity(p, 3)]).unwrap();
    assert_eq!(cert.group_order, 2);
    assert_eq!(cert.k_h, 2);
    let cube = BigUint::from(p).pow(3);
    let expected_r = (&cube + BigUint::from(1u32)) / BigUint::from(2u32);
    assert_eq!(cert.orbit_count, expected_r);
    assert_eq!(cert.bound, expected_r + BigUint::from(1u32));
    assert!(cert.exceeds_p);
    assert!(cert.is_consistent());
    assert_eq!(
        burnside_orbit_count_from_generators(p, 3, &[neg_identity(p, 3)]).unwrap(),
        cert.orbit_count
    );

    // The same prime fails both congruence conditions: 7206 = 2·3·1201 has
    // no even divisor between 12 and 36, and 7207 ≢ 1 (mod 5).
    let verdict = classify_prime_conditions(p).unwrap();
    assert!(!verdict.cond_i && !verdict.cond_ii && !verdict.any);
}

#[test]
fn prime_condition_verdicts() {
    let cases: Vec<(u64, bool, Option<u64>, bool, Option<u64>)> = vec![
        (13, true, Some(12), false, None),
        (11, false, None, true, Some(5)),
        (7, false, None, false, None),
        (31, true, Some(30), true, Some(5)),
        (37, true, Some(12), false, None),
    ];
    for (p, cond_i, witness_i, cond_ii, witness_ii) in cases {
        let v = classify_prime_conditions(p).unwrap();
        assert_eq!((v.cond_i, v.witness_i), (cond_i, witness_i), "condition i at p={p}");
        assert_eq!((v.cond_ii, v.witness_ii), (cond_ii, witness_ii), "condition ii at p={p}");
        assert_eq!(v.any, cond_i || cond_ii);
    }
}

#[test]
fn exclusion_scan_reports() {
    let cases: Vec<(u64, usize, Vec<Vec<u64>>, u64, Vec<u64>)> = vec![
        (11, 2, sl2_5_in_gl2_11(), 10, vec![7, 11]),
        (3, 2, vec![neg_identity(3, 2)], 6, vec![3]),
        (2, 2, vec![vec![0, 1, 1, 1]], 4, vec![2]),
        (5, 2, vec![vec![2, 0, 0, 3], vec![0, 1, 1, 0]], 14, vec![4, 5]),
    ];
    for (p, n, gens, k, sp) in cases {
        let h = MatGroup::new(p, n, &gens).unwrap();
        let scan = sp_exclusion_scan(&h).unwrap();
        assert_eq!(scan.k_hv, k, "p={p}");
        assert_eq!(scan.sp_values, sp, "p={p}");
        assert!(!scan.in_sp && !scan.counterexample, "p={p}");
    }

    // The full GL_2(2) has order 6 — not coprime to 2 — so it cannot even
    // be constructed; its odd-order subgroup C_3 is the scannable case.
    assert!(matches!(
        MatGroup::new(2, 2, &[vec![1, 1, 0, 1], vec![0, 1, 1, 0]]),
        Err(AffineError::NotCoprime { p: 2, order: 6 })
    ));
}
