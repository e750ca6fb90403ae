//! Verifiers for the counting identities and inequalities connecting
//! rationality levels, class regularity, Sylow normalizers, and block
//! structure. Each verifier returns a report; asserting is left to the
//! test suites, because some of the statements are conjectural and a
//! violation on new input is a result, not a bug.

use char_table::{character_table, CharacterTable, CycValue};
use group_engine::{
    conjugacy_classes, derived_subgroup, is_normal, normalizer, quotient_group, sylow_subgroup,
    Group,
};
use serde::Serialize;

use crate::levels::{embed_value, p_rationality_level, v_adic, ALMOST_RATIONAL};
use crate::profile::rationality_profile;
use crate::RationalityError;

/// Count comparison between almost rational p'-degree characters of the
/// group and almost rational characters of N_G(P)/P'.
#[derive(Clone, Debug, Serialize)]
pub struct McKayNavarroReport {
    pub p: u64,
    pub lhs: usize,
    pub rhs: usize,
    pub equal: bool,
    pub normalizer_order: u64,
}

pub fn mckay_navarro_check(
    t: &CharacterTable,
    p: u64,
) -> Result<McKayNavarroReport, RationalityError> {
    let order = t.group.order();
    if order % p != 0 {
        return Err(RationalityError::PrimeDoesNotDivide { p, order });
    }
    let lhs = rationality_profile(t, p)?.n_pprime_parat;
    let syl = sylow_subgroup(&t.group, &t.classes, p)?;
    let norm = normalizer(&t.group, &syl)?;
    let norm_order = norm.order();
    let pder = derived_subgroup(&syl)?;
    // N/P' is N itself when P is abelian; skip the coset action then,
    // since the regular representation of a large normalizer is wasteful
    let tq = if pder.is_trivial() {
        character_table(norm)?
    } else {
        character_table(quotient_group(&norm, &pder)?.group)?
    };
    let rhs = rationality_profile(&tq, p)?.n_parat;
    Ok(McKayNavarroReport {
        p,
        lhs,
        rhs,
        equal: lhs == rhs,
        normalizer_order: norm_order,
    })
}

/// The unconditional lower bound: a group of order divisible by p has at
/// least 2 sqrt(p-1) almost p-rational irreducible characters, with
/// equality exactly for the Frobenius groups C_{p^a} : C_e, e = sqrt(p-1).
#[derive(Clone, Debug, Serialize)]
pub struct LowerBoundReport {
    pub p: u64,
    pub count: usize,
    /// count^2 >= 4(p-1)
    pub satisfied: bool,
    pub equality: bool,
    /// On equality: does the group match the Frobenius fingerprint
    /// (order p^a * sqrt(p-1), cyclic Sylow p, class count e + (p^a-1)/e)?
    pub equality_shape_ok: Option<bool>,
}

pub fn verify_parat_lower_bound(
    t: &CharacterTable,
    p: u64,
) -> Result<LowerBoundReport, RationalityError> {
    let order = t.group.order();
    if order % p != 0 {
        return Err(RationalityError::PrimeDoesNotDivide { p, order });
    }
    let count = rationality_profile(t, p)?.n_parat as u64;
    let satisfied = count * count >= 4 * (p - 1);
    let equality = count * count == 4 * (p - 1);
    let equality_shape_ok = if equality {
        let e = count / 2;
        let a = v_adic(order, p);
        let cofactor = order / p.pow(a);
        let syl = sylow_subgroup(&t.group, &t.classes, p)?;
        let shape = a >= 1
            && cofactor == e
            && syl.is_cyclic()
            && t.k() as u64 == e + (p.pow(a) - 1) / e;
        Some(shape)
    } else {
        None
    };
    Ok(LowerBoundReport {
        p,
        count: count as usize,
        satisfied,
        equality,
        equality_shape_ok,
    })
}

/// One quotient inequality instance inside [`ClassCountReport`].
#[derive(Clone, Debug, Serialize)]
pub struct QuotientCheck {
    pub normal_order: u64,
    pub quotient_pareg: usize,
    pub orbit_count: usize,
    pub holds: bool,
}

/// Class-side counting inequalities at an odd prime: almost regular
/// classes never outnumber almost rational characters, regular classes
/// never outnumber rational characters, and for each supplied normal
/// p'-subgroup N the count is at least |Cl(G/N)| + (G-orbits on Cl(N)) - 1
/// restricted to the almost regular parts.
#[derive(Clone, Debug, Serialize)]
pub struct ClassCountReport {
    pub p: u64,
    pub n_cl_pareg: usize,
    pub n_parat: usize,
    pub n_cl_preg: usize,
    pub n_prat: usize,
    pub pareg_le_parat: bool,
    pub preg_le_prat: bool,
    pub quotient_checks: Vec<QuotientCheck>,
}

/// Number of orbits of G, acting by conjugation, on the classes of a
/// normal subgroup N whose class satisfies `keep`.
fn orbits_on_classes(
    g: &Group,
    n: &Group,
    keep: impl Fn(u64) -> bool,
) -> Result<usize, RationalityError> {
    let cd = conjugacy_classes(n);
    let k = cd.count();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut Vec<usize>, mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for gen in g.generators() {
        for i in 0..k {
            let moved = cd.classes[i].rep.conjugate_by(gen);
            let j = cd.class_of_perm(n, &moved).ok_or_else(|| {
                RationalityError::BadInput("subgroup is not normal in the parent".into())
            })?;
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a] = b;
            }
        }
    }
    let mut roots = std::collections::BTreeSet::new();
    for i in 0..k {
        if keep(cd.classes[i].element_order) {
            roots.insert(find(&mut parent, i));
        }
    }
    Ok(roots.len())
}

pub fn verify_class_count_inequalities(
    t: &CharacterTable,
    p: u64,
    normal_p_prime_subgroups: &[Group],
) -> Result<ClassCountReport, RationalityError> {
    if p == 2 || !bounds_numbers::is_prime_u64(p) {
        return Err(RationalityError::RequiresOddPrime(p));
    }
    let profile = rationality_profile(t, p)?;
    let mut quotient_checks = Vec::new();
    for n in normal_p_prime_subgroups {
        if n.order() % p == 0 {
            return Err(RationalityError::BadInput(format!(
                "normal subgroup of order {} is not a p'-group at p = {p}",
                n.order()
            )));
        }
        if !is_normal(&t.group, n) {
            return Err(RationalityError::BadInput(
                "supplied subgroup is not normal".into(),
            ));
        }
        let quo = quotient_group(&t.group, n)?;
        let cdq = conjugacy_classes(&quo.group);
        let quotient_pareg = cdq
            .classes
            .iter()
            .filter(|c| v_adic(c.element_order, p) <= ALMOST_RATIONAL)
            .count();
        // every class of a p'-group is almost p-regular, but filter anyway
        let orbit_count =
            orbits_on_classes(&t.group, n, |ord| v_adic(ord, p) <= ALMOST_RATIONAL)?;
        quotient_checks.push(QuotientCheck {
            normal_order: n.order(),
            quotient_pareg,
            orbit_count,
            holds: profile.n_cl_pareg + 1 >= quotient_pareg + orbit_count,
        });
    }
    Ok(ClassCountReport {
        p,
        n_cl_pareg: profile.n_cl_pareg,
        n_parat: profile.n_parat,
        n_cl_preg: profile.n_cl_preg,
        n_prat: profile.n_prat,
        pareg_le_parat: profile.n_cl_pareg <= profile.n_parat,
        preg_le_prat: profile.n_cl_preg <= profile.n_prat,
        quotient_checks,
    })
}

/// Restriction equivalence across a normal subgroup of p'-index: a
/// character of the parent is almost p-rational exactly when its
/// irreducible constituents on the subgroup are. Constituent
/// multiplicities are computed in exact cyclotomic arithmetic through
/// explicit class fusion.
#[derive(Clone, Debug, Serialize)]
pub struct RestrictionReport {
    pub p: u64,
    pub index: u64,
    pub rows_checked: usize,
    pub constituent_pairs: usize,
    pub iff_holds: bool,
    /// (parent row, subgroup row) pairs violating the equivalence.
    pub mismatches: Vec<(usize, usize)>,
}

pub fn verify_normal_restriction_equivalence(
    t: &CharacterTable,
    n: &Group,
    p: u64,
) -> Result<RestrictionReport, RationalityError> {
    if !bounds_numbers::is_prime_u64(p) {
        return Err(RationalityError::NotPrime(p));
    }
    if !is_normal(&t.group, n) {
        return Err(RationalityError::BadInput(
            "supplied subgroup is not normal".into(),
        ));
    }
    let index = t.group.order() / n.order();
    if index % p == 0 {
        return Err(RationalityError::BadInput(format!(
            "index {index} is divisible by p = {p}"
        )));
    }
    let tn = character_table(n.clone())?;
    if t.exponent % tn.exponent != 0 {
        return Err(RationalityError::Internal(
            "subgroup exponent does not divide the parent exponent".into(),
        ));
    }
    // class fusion: each subgroup class sits inside a unique parent class
    let fusion: Vec<usize> = tn
        .classes
        .classes
        .iter()
        .map(|c| {
            t.classes.class_of_perm(&t.group, &c.rep).ok_or_else(|| {
                RationalityError::FusionFailure("subgroup element missing from parent".into())
            })
        })
        .collect::<Result<_, _>>()?;
    let sub_order = n.order() as i64;
    let parent_almost: Vec<bool> = (0..t.k())
        .map(|r| p_rationality_level(t, r, p).map(|l| l <= ALMOST_RATIONAL))
        .collect::<Result<_, _>>()?;
    let sub_almost: Vec<bool> = (0..tn.k())
        .map(|s| p_rationality_level(&tn, s, p).map(|l| l <= ALMOST_RATIONAL))
        .collect::<Result<_, _>>()?;
    // subgroup rows embedded into the parent's cyclotomic basis
    let embedded: Vec<Vec<CycValue>> = tn
        .rows
        .iter()
        .map(|row| row.iter().map(|v| embed_value(v, &t.reducer)).collect())
        .collect();
    let mut mismatches = Vec::new();
    let mut constituent_pairs = 0;
    for r in 0..t.k() {
        let mut degree_sum = 0i64;
        for s in 0..tn.k() {
            let mut acc = CycValue::zero(t.exponent);
            for (j, &fj) in fusion.iter().enumerate() {
                let term = t.rows[r][fj]
                    .mul(&embedded[s][j].conj(&t.reducer), &t.reducer)
                    .scale(tn.classes.classes[j].size as i64);
                acc = acc.add(&term);
            }
            let mult = acc
                .div_exact(sub_order)
                .and_then(|q| q.as_integer())
                .ok_or_else(|| {
                    RationalityError::FusionFailure(format!(
                        "non-integral restriction multiplicity at rows ({r}, {s})"
                    ))
                })?;
            if mult < 0 {
                return Err(RationalityError::Internal(
                    "negative restriction multiplicity".into(),
                ));
            }
            if mult > 0 {
                constituent_pairs += 1;
                degree_sum += mult * tn.degrees[s] as i64;
                if parent_almost[r] != sub_almost[s] {
                    mismatches.push((r, s));
                }
            }
        }
        if degree_sum != t.degrees[r] as i64 {
            return Err(RationalityError::Internal(format!(
                "restriction of row {r} has degree {degree_sum}, expected {}",
                t.degrees[r]
            )));
        }
    }
    Ok(RestrictionReport {
        p,
        index,
        rows_checked: t.k(),
        constituent_pairs,
        iff_holds: mismatches.is_empty(),
        mismatches,
    })
}

/// First non-trivial row whose degree is coprime to both primes and whose
/// level is at most 1 at both. Such a row always exists by the two-prime
/// lower-bound theorem; `None` on any input would be a counterexample
/// worth reporting loudly.
pub fn find_pq_rational_witness(
    t: &CharacterTable,
    p: u64,
    q: u64,
) -> Result<Option<usize>, RationalityError> {
    for prime in [p, q] {
        if !bounds_numbers::is_prime_u64(prime) {
            return Err(RationalityError::NotPrime(prime));
        }
    }
    for r in 0..t.k() {
        if r == t.trivial_row || t.degrees[r] % p == 0 || t.degrees[r] % q == 0 {
            continue;
        }
        if p_rationality_level(t, r, p)? <= ALMOST_RATIONAL
            && p_rationality_level(t, r, q)? <= ALMOST_RATIONAL
        {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use group_engine::{alt, cyclic, frobenius, sym};

    #[test]
    fn mckay_navarro_on_sym4_and_alt5() {
        let t = character_table(sym(4).unwrap()).unwrap();
        let rep = mckay_navarro_check(&t, 2).unwrap();
        assert_eq!((rep.lhs, rep.rhs), (4, 4));
        assert!(rep.equal);
        assert_eq!(rep.normalizer_order, 8);

        let t = character_table(alt(5).unwrap()).unwrap();
        let rep = mckay_navarro_check(&t, 5).unwrap();
        assert_eq!((rep.lhs, rep.rhs), (4, 4));
        assert!(rep.equal);
        assert_eq!(rep.normalizer_order, 10);
    }

    #[test]
    fn lower_bound_cases() {
        // equality at p = 5: C5 : C2 with 4 = 2 sqrt(4) characters
        let t = character_table(frobenius(5, 1, 2).unwrap()).unwrap();
        let rep = verify_parat_lower_bound(&t, 5).unwrap();
        assert!(rep.satisfied && rep.equality);
        assert_eq!(rep.count, 4);
        assert_eq!(rep.equality_shape_ok, Some(true));

        // strict at p = 2 on Sym(4)
        let t = character_table(sym(4).unwrap()).unwrap();
        let rep = verify_parat_lower_bound(&t, 2).unwrap();
        assert!(rep.satisfied && !rep.equality);
        assert_eq!(rep.count, 5);

        // strict on C9 at p = 3: 3 > 2 sqrt(2)
        let t = character_table(cyclic(9).unwrap()).unwrap();
        let rep = verify_parat_lower_bound(&t, 3).unwrap();
        assert!(rep.satisfied && !rep.equality);
        assert_eq!(rep.count, 3);
    }

    #[test]
    fn class_count_inequalities_on_small_groups() {
        let t = character_table(sym(3).unwrap()).unwrap();
        let rep = verify_class_count_inequalities(&t, 3, &[]).unwrap();
        assert_eq!(rep.n_cl_pareg, 3);
        assert_eq!(rep.n_parat, 3);
        assert!(rep.pareg_le_parat && rep.preg_le_prat);
        assert!(matches!(
            verify_class_count_inequalities(&t, 2, &[]),
            Err(RationalityError::RequiresOddPrime(2))
        ));
    }

    #[test]
    fn quotient_inequality_with_explicit_normal() {
        // G = Sym(4), N = V4 (normal 2'-free... V4 has order 4, use p = 3)
        let g = sym(4).unwrap();
        let v4 = g
            .subgroup_closure(&[
                group_engine::Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(),
                group_engine::Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap(),
            ])
            .unwrap();
        let t = character_table(g).unwrap();
        let rep = verify_class_count_inequalities(&t, 3, &[v4]).unwrap();
        let qc = &rep.quotient_checks[0];
        // G/V4 = Sym(3): all 3 classes almost regular; orbits of G on the
        // 4 classes... V4 has 4 classes, fused by G into {1} and {the rest}
        assert_eq!(qc.quotient_pareg, 3);
        assert_eq!(qc.orbit_count, 2);
        assert_eq!(rep.n_cl_pareg, 5);
        assert!(qc.holds); // 5 >= 3 + 2 - 1
    }

    #[test]
    fn witness_rows_exist_and_qualify() {
        let t = character_table(sym(3).unwrap()).unwrap();
        let w = find_pq_rational_witness(&t, 2, 3).unwrap().unwrap();
        assert_eq!(t.degrees[w], 1); // the sign character
        assert_ne!(w, t.trivial_row);

        let t = character_table(cyclic(15).unwrap()).unwrap();
        let w = find_pq_rational_witness(&t, 3, 5).unwrap().unwrap();
        // every non-trivial character of C15 qualifies (conductor 3, 5, or
        // 15, all with level <= 1 at both primes)
        assert_ne!(w, t.trivial_row);
        assert!(p_rationality_level(&t, w, 3).unwrap() <= 1);
        assert!(p_rationality_level(&t, w, 5).unwrap() <= 1);

        let t = character_table(alt(5).unwrap()).unwrap();
        let w = find_pq_rational_witness(&t, 2, 5).unwrap().unwrap();
        assert_eq!(t.degrees[w], 3);
    }

    #[test]
    fn restriction_equivalence_sym4_over_alt4() {
        let t = character_table(sym(4).unwrap()).unwrap();
        let a4 = alt(4).unwrap();
        let rep = verify_normal_restriction_equivalence(&t, &a4, 3).unwrap();
        assert_eq!(rep.index, 2);
        assert!(rep.iff_holds, "mismatches: {:?}", rep.mismatches);
        assert!(rep.constituent_pairs >= 5);
        // index divisible by p is rejected
        assert!(verify_normal_restriction_equivalence(&t, &a4, 2).is_err());
    }
}
