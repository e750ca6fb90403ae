//! Cross-cutting invariants of the permutation-group engine, checked over a
//! mixed bag of constructions.

use group_engine::*;

fn corpus() -> Vec<(&'static str, Group)> {
    let specs = vec![
        ("c12", Construction::Cyclic(12)),
        ("c9", Construction::Cyclic(9)),
        ("d6", Construction::Dihedral(6)),
        ("d7", Construction::Dihedral(7)),
        ("s4", Construction::Sym(4)),
        ("s5", Construction::Sym(5)),
        ("a5", Construction::Alt(5)),
        ("q8", Construction::Quaternion),
        ("f_5_1_4", Construction::Frobenius(5, 1, 4)),
        ("f_17_1_4", Construction::Frobenius(17, 1, 4)),
        ("f_7_2_3", Construction::Frobenius(7, 2, 3)),
        ("sl25", Construction::Sl2_5),
        (
            "c2xa4",
            Construction::DirectProduct(vec![Construction::Cyclic(2), Construction::Alt(4)]),
        ),
    ];
    specs
        .into_iter()
        .map(|(n, c)| (n, construct(&c).unwrap()))
        .collect()
}

#[test]
fn class_equation_holds() {
    for (name, g) in corpus() {
        let cd = conjugacy_classes(&g);
        let sum: u64 = cd.classes.iter().map(|c| c.size).sum();
        assert_eq!(sum, g.order(), "class equation fails for {name}");
        for c in &cd.classes {
            assert_eq!(g.order() % c.size, 0, "class size divides order ({name})");
        }
    }
}

#[test]
fn orbit_stabilizer_for_conjugation() {
    for (name, g) in corpus() {
        let cd = conjugacy_classes(&g);
        for c in &cd.classes {
            let cent = centralizer(&g, &c.rep).unwrap();
            assert_eq!(
                c.size * cent.order(),
                g.order(),
                "orbit-stabilizer fails for {name}"
            );
        }
    }
}

#[test]
fn sylow_subgroups_have_exact_p_part() {
    for (name, g) in corpus() {
        let cd = conjugacy_classes(&g);
        for p in [2u64, 3, 5, 7, 11, 13, 17] {
            let s = sylow_subgroup(&g, &cd, p).unwrap();
            assert_eq!(s.order(), p_part(g.order(), p), "bad Sylow order in {name}");
            assert!(g.has_subgroup(&s));
        }
    }
}

#[test]
fn power_maps_compose_modulo_exponent() {
    for (name, g) in corpus() {
        let cd = conjugacy_classes(&g);
        let exp = g.exponent();
        for (m1, m2) in [(2i64, 2i64), (3, 5), (7, 4)] {
            let a = power_map(&g, &cd, m1);
            let b = power_map(&g, &cd, m2);
            let prod = power_map(&g, &cd, (m1 * m2).rem_euclid(exp as i64));
            for c in 0..cd.count() {
                assert_eq!(b[a[c]], prod[c], "power map composition fails for {name}");
            }
        }
    }
}

#[test]
fn quotients_respect_order_and_class_counts() {
    for (name, g) in corpus() {
        let cd = conjugacy_classes(&g);
        // derived subgroup is always normal; also try p'-cores
        let mut normals = vec![derived_subgroup(&g).unwrap()];
        for p in [2u64, 3, 5] {
            normals.push(p_prime_core(&g, p, &cd).unwrap());
        }
        for n in normals {
            assert!(is_normal(&g, &n));
            let q = quotient_group(&g, &n).unwrap();
            assert_eq!(q.group.order() * n.order(), g.order(), "Lagrange in {name}");
            let qcd = conjugacy_classes(&q.group);
            assert!(
                qcd.count() <= cd.count(),
                "quotient cannot gain classes ({name})"
            );
        }
    }
}

#[test]
fn centralizers_contain_center_of_subject() {
    for (_, g) in corpus() {
        let cd = conjugacy_classes(&g);
        for c in cd.classes.iter().take(4) {
            let cent = centralizer(&g, &c.rep).unwrap();
            assert!(cent.contains(&c.rep));
            assert!(cent.elements().iter().all(|x| {
                x.compose(&c.rep) == c.rep.compose(x)
            }));
        }
    }
}

#[test]
fn frattini_quotient_of_p_groups_is_elementary_abelian() {
    for (pg, p) in [
        (construct(&Construction::Cyclic(27)).unwrap(), 3u64),
        (construct(&Construction::Quaternion).unwrap(), 2),
        (
            construct(&Construction::DirectProduct(vec![
                Construction::Cyclic(3),
                Construction::Cyclic(9),
            ]))
            .unwrap(),
            3,
        ),
    ] {
        let f = frattini_subgroup(&pg, p).unwrap();
        let q = quotient_group(&pg, &f).unwrap();
        assert!(q.group.is_abelian());
        assert!(q.group.elements().iter().all(|x| x.pow(p as i64).is_identity()));
    }
}
