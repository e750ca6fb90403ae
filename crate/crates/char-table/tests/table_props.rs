//! Property tests: cyclotomic ring laws, Galois/class-power compatibility,
//! and structural invariants of tables over randomized group families.

use char_table::{
    character_table, unit_group_generators, verify_orthogonality, CharacterTable, CycValue,
    Reducer,
};
use group_engine::{
    alt, cyclic, dihedral, direct_product, frobenius, power_map, quaternion, sym, Group,
};
use proptest::prelude::*;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn cyc(red: &Reducer, terms: &[(u64, i64)]) -> CycValue {
    CycValue::from_terms(red, terms.iter().copied())
}

prop_compose! {
    fn small_terms()(v in prop::collection::vec((0u64..48, -9i64..=9), 0..6)) -> Vec<(u64, i64)> {
        v
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(n in 1u64..=36, a in small_terms(), b in small_terms(), c in small_terms()) {
        let red = Reducer::new(n).unwrap();
        let (a, b, c) = (cyc(&red, &a), cyc(&red, &b), cyc(&red, &c));
        // distributivity and commutativity
        let lhs = a.add(&b).mul(&c, &red);
        let rhs = a.mul(&c, &red).add(&b.mul(&c, &red));
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(a.mul(&b, &red), b.mul(&a, &red));
        // associativity
        prop_assert_eq!(
            a.mul(&b, &red).mul(&c, &red),
            a.mul(&b.mul(&c, &red), &red)
        );
        // subtraction inverts addition
        prop_assert_eq!(a.add(&b).sub(&b), a);
    }

    #[test]
    fn galois_is_a_ring_automorphism(
        n in 1u64..=36,
        m1 in 1u64..200,
        m2 in 1u64..200,
        a in small_terms(),
        b in small_terms(),
    ) {
        prop_assume!(gcd(m1, n) == 1 && gcd(m2, n) == 1);
        let red = Reducer::new(n).unwrap();
        let (a, b) = (cyc(&red, &a), cyc(&red, &b));
        // multiplicative and additive
        prop_assert_eq!(
            a.mul(&b, &red).galois(m1, &red),
            a.galois(m1, &red).mul(&b.galois(m1, &red), &red)
        );
        prop_assert_eq!(
            a.add(&b).galois(m1, &red),
            a.galois(m1, &red).add(&b.galois(m1, &red))
        );
        // composition law sigma_m1 . sigma_m2 = sigma_{m1 m2}
        prop_assert_eq!(
            a.galois(m2, &red).galois(m1, &red),
            a.galois(m1 * m2 % n.max(1), &red)
        );
        // conjugation is the m = n - 1 action and is involutive
        prop_assert_eq!(a.conj(&red).conj(&red), a);
    }

    #[test]
    fn complex_embedding_respects_ring_ops(n in 1u64..=24, a in small_terms(), b in small_terms()) {
        let red = Reducer::new(n).unwrap();
        let (a, b) = (cyc(&red, &a), cyc(&red, &b));
        let (ar, ai) = a.eval_complex();
        let (br, bi) = b.eval_complex();
        let (pr, pi) = a.mul(&b, &red).eval_complex();
        prop_assert!((pr - (ar * br - ai * bi)).abs() < 1e-6);
        prop_assert!((pi - (ar * bi + ai * br)).abs() < 1e-6);
    }

    #[test]
    fn random_abelian_products(factors in prop::collection::vec(2u64..=9, 1..4)) {
        let parts: Vec<Group> = factors.iter().map(|&n| cyclic(n).unwrap()).collect();
        let g = direct_product(&parts).unwrap();
        let order = g.order();
        let t = character_table(g).unwrap();
        prop_assert_eq!(t.k() as u64, order);
        prop_assert!(t.degrees.iter().all(|&d| d == 1));
        prop_assert!(verify_orthogonality(&t).unwrap().is_clean());
    }

    #[test]
    fn random_dihedral_shapes(n in 3u64..=24) {
        let t = character_table(dihedral(n).unwrap()).unwrap();
        let linear = t.degrees.iter().filter(|&&d| d == 1).count();
        let planar = t.degrees.iter().filter(|&&d| d == 2).count();
        prop_assert_eq!(linear + planar, t.k());
        prop_assert_eq!(linear, if n % 2 == 0 { 4 } else { 2 });
        prop_assert_eq!(planar as u64, if n % 2 == 0 { (n - 2) / 2 } else { (n - 1) / 2 });
        prop_assert_eq!(t.degrees.iter().map(|d| d * d).sum::<u64>(), 2 * n);
    }
}

fn fixed_point_counts(t: &CharacterTable, m: u64) -> (usize, usize) {
    let rows = (0..t.k())
        .filter(|&r| t.galois_conjugate_row(r, m).unwrap() == r)
        .count();
    let pm = power_map(&t.group, &t.classes, m as i64);
    let classes = pm.iter().enumerate().filter(|&(j, &img)| j == img).count();
    (rows, classes)
}

/// For every Galois element, the permutation induced on rows and the
/// permutation induced on classes by the corresponding power map have the
/// same number of fixed points.
#[test]
fn galois_and_power_map_have_matching_fixed_points() {
    let corpus: Vec<Group> = vec![
        sym(3).unwrap(),
        sym(4).unwrap(),
        alt(4).unwrap(),
        alt(5).unwrap(),
        dihedral(4).unwrap(),
        dihedral(5).unwrap(),
        quaternion().unwrap(),
        cyclic(12).unwrap(),
        frobenius(5, 1, 4).unwrap(),
        frobenius(13, 1, 3).unwrap(),
    ];
    for g in corpus {
        let t = character_table(g).unwrap();
        let n = t.exponent;
        // check all unit-group generators and a few composites
        let mut ms = unit_group_generators(n);
        if n > 1 {
            ms.push(n - 1);
        }
        for m in ms {
            let (rows, classes) = fixed_point_counts(&t, m);
            assert_eq!(rows, classes, "m = {m}, exponent {n}");
        }
    }
}

/// Every entry is bounded in absolute value by the degree, and the identity
/// column carries exactly the degrees.
#[test]
fn float_magnitude_sanity() {
    let corpus: Vec<Group> = vec![
        sym(5).unwrap(),
        alt(5).unwrap(),
        dihedral(9).unwrap(),
        frobenius(17, 1, 8).unwrap(),
        cyclic(30).unwrap(),
    ];
    for g in corpus {
        let t = character_table(g).unwrap();
        for (r, row) in t.rows.iter().enumerate() {
            assert_eq!(row[0].as_integer(), Some(t.degrees[r] as i64));
            for v in row {
                let (re, im) = v.eval_complex();
                assert!(
                    (re * re + im * im).sqrt() <= t.degrees[r] as f64 + 1e-6,
                    "entry exceeds degree bound in row {r}"
                );
            }
        }
    }
}

/// Second orthogonality read directly: column norm sums match centralizer
/// orders |C_G(g)| = |G| / |K|.
#[test]
fn column_norms_match_centralizer_orders() {
    let corpus: Vec<Group> = vec![sym(4).unwrap(), dihedral(6).unwrap(), alt(4).unwrap()];
    for g in corpus {
        let order = g.order();
        let t = character_table(g).unwrap();
        for j in 0..t.k() {
            let mut acc = CycValue::zero(t.exponent);
            for r in 0..t.k() {
                acc = acc.add(&t.rows[r][j].mul(&t.rows[r][j].conj(&t.reducer), &t.reducer));
            }
            let expect = (order / t.classes.classes[j].size) as i64;
            assert_eq!(acc.as_integer(), Some(expect), "column {j}");
        }
    }
}
