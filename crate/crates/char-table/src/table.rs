//! Assembly of the finished character table: dispatch between the abelian
//! and eigenvector paths, canonical row ordering, structural invariants,
//! Galois actions on rows, and certified-exact orthogonality verification.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use bounds_numbers::factorize_u64;
use group_engine::{conjugacy_classes, power_map, ClassData, Group};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::cyclo::{CycValue, Reducer};
use crate::lift::EigenMultiset;
use crate::modl::{select_prime, Fl};
use crate::{abelian, dixon, lift, CharTableError};

/// Resource limits for table construction.
#[derive(Clone, Debug)]
pub struct TableOptions {
    /// Hard cap on the conjugacy-class count (the table is k × k).
    pub max_classes: usize,
}

impl Default for TableOptions {
    fn default() -> TableOptions {
        TableOptions { max_classes: 2048 }
    }
}

/// Unsorted table data produced by either construction path.
pub(crate) struct RawTable {
    pub degrees: Vec<u64>,
    pub rows_modl: Vec<Vec<u64>>,
    pub values: Vec<Vec<CycValue>>,
    pub multisets: Vec<Vec<EigenMultiset>>,
}

/// An exact character table. Rows are sorted by (degree, value vector);
/// columns follow the conjugacy-class order of `classes` (identity first).
#[derive(Debug)]
pub struct CharacterTable {
    pub group: Arc<Group>,
    pub classes: Arc<ClassData>,
    pub reducer: Arc<Reducer>,
    /// Group exponent; every value lies in Z[zeta_exponent].
    pub exponent: u64,
    /// Working prime used for the modular stage and row fingerprints.
    pub dixon_prime: u64,
    /// The fixed root of unity of order `exponent` in F_(dixon_prime).
    pub omega: u64,
    pub degrees: Vec<u64>,
    pub rows: Vec<Vec<CycValue>>,
    /// Per row and class: the eigenvalue multiset of a representing matrix,
    /// as sorted (exponent of zeta_exponent, multiplicity) pairs summing to
    /// the degree.
    pub multisets: Vec<Vec<EigenMultiset>>,
    /// Residues of the values at `omega`, used for fast row identification.
    pub rows_modl: Vec<Vec<u64>>,
    /// Index of the trivial character.
    pub trivial_row: usize,
    row_lookup: HashMap<Vec<u64>, usize>,
}

pub fn character_table(group: Group) -> Result<CharacterTable, CharTableError> {
    character_table_with_options(group, &TableOptions::default())
}

pub fn character_table_with_options(
    group: Group,
    opts: &TableOptions,
) -> Result<CharacterTable, CharTableError> {
    let group = Arc::new(group);
    let classes = Arc::new(conjugacy_classes(&group));
    build_table(group, classes, opts)
}

pub(crate) fn build_table(
    group: Arc<Group>,
    classes: Arc<ClassData>,
    opts: &TableOptions,
) -> Result<CharacterTable, CharTableError> {
    let k = classes.count();
    if k > opts.max_classes {
        return Err(CharTableError::ClassCountExceeded {
            count: k,
            cap: opts.max_classes,
        });
    }
    let n = group.exponent();
    let order = group.order();
    let red = Arc::new(Reducer::new(n)?);
    // l ≡ 1 (mod n) and l > 2 sqrt(|G|), so degrees and eigenvalue
    // multiplicities are determined by their residues
    let l = select_prime(n, (4 * order).isqrt(), &[])?;
    let f = Fl::new(l);
    let omega = f.root_of_unity(n);
    let raw = if group.is_abelian() {
        abelian::raw_table(&group, &classes, &red, f, omega)?
    } else {
        let mt = dixon::modular_table(&group, &classes, f)?;
        lift::lift_table(&group, &classes, &mt, &red, f, omega)?
    };

    let mut idx: Vec<usize> = (0..k).collect();
    idx.sort_by(|&a, &b| {
        raw.degrees[a]
            .cmp(&raw.degrees[b])
            .then_with(|| raw.values[a].cmp(&raw.values[b]))
    });
    let degrees: Vec<u64> = idx.iter().map(|&i| raw.degrees[i]).collect();
    let mut vsrc: Vec<Option<Vec<CycValue>>> = raw.values.into_iter().map(Some).collect();
    let rows: Vec<Vec<CycValue>> = idx.iter().map(|&i| vsrc[i].take().unwrap()).collect();
    let mut msrc: Vec<Option<Vec<EigenMultiset>>> = raw.multisets.into_iter().map(Some).collect();
    let multisets: Vec<Vec<EigenMultiset>> = idx.iter().map(|&i| msrc[i].take().unwrap()).collect();
    let mut lsrc: Vec<Option<Vec<u64>>> = raw.rows_modl.into_iter().map(Some).collect();
    let rows_modl: Vec<Vec<u64>> = idx.iter().map(|&i| lsrc[i].take().unwrap()).collect();

    let sq: u128 = degrees.iter().map(|&d| d as u128 * d as u128).sum();
    if sq != order as u128 {
        return Err(CharTableError::Internal(
            "degree squares do not sum to the group order".into(),
        ));
    }
    for r in 0..k {
        if order % degrees[r] != 0 {
            return Err(CharTableError::Internal(
                "character degree does not divide the group order".into(),
            ));
        }
        if rows[r][0].as_integer() != Some(degrees[r] as i64) {
            return Err(CharTableError::Internal(
                "identity-class value differs from the degree".into(),
            ));
        }
    }
    let one = CycValue::one(n);
    let trivial_row = rows
        .iter()
        .position(|row| row.iter().all(|v| v == &one))
        .ok_or_else(|| CharTableError::Internal("trivial character missing".into()))?;
    let mut row_lookup = HashMap::with_capacity(k);
    for (i, rm) in rows_modl.iter().enumerate() {
        if row_lookup.insert(rm.clone(), i).is_some() {
            return Err(CharTableError::Internal(
                "two rows share the same modular fingerprint".into(),
            ));
        }
    }

    Ok(CharacterTable {
        group,
        classes,
        reducer: red,
        exponent: n,
        dixon_prime: l,
        omega,
        degrees,
        rows,
        multisets,
        rows_modl,
        trivial_row,
        row_lookup,
    })
}

impl CharacterTable {
    /// Number of rows (= number of conjugacy classes).
    pub fn k(&self) -> usize {
        self.degrees.len()
    }

    /// The row index of the Galois conjugate sigma_m(chi_row), located
    /// through the modular fingerprint of the values at the powered-up
    /// classes. `m` must be coprime to the exponent.
    pub fn galois_conjugate_row(&self, row: usize, m: u64) -> Result<usize, CharTableError> {
        let n = self.exponent;
        let mm = if n <= 1 { 1 } else { m % n };
        if n > 1 && mm.gcd(&n) != 1 {
            return Err(CharTableError::BadGaloisAction(format!(
                "exponent {m} is not coprime to the conductor {n}"
            )));
        }
        let pm = power_map(&self.group, &self.classes, mm as i64);
        let target: Vec<u64> = (0..self.k()).map(|j| self.rows_modl[row][pm[j]]).collect();
        self.row_lookup.get(&target).copied().ok_or_else(|| {
            CharTableError::BadGaloisAction("no row matches the conjugated values".into())
        })
    }

    /// True when every value of the row is rational (hence a rational
    /// integer).
    pub fn row_is_rational(&self, row: usize) -> bool {
        self.rows[row].iter().all(|v| v.is_rational())
    }
}

/// Generators of the unit group (Z/n)^*, one or two per prime-power factor,
/// lifted through the Chinese remainder theorem.
pub fn unit_group_generators(n: u64) -> Vec<u64> {
    if n <= 2 {
        return Vec::new();
    }
    let mut gens = Vec::new();
    for (p, a) in factorize_u64(n) {
        let q = p.pow(a);
        let local: Vec<u64> = if p == 2 {
            match a {
                1 => vec![],
                2 => vec![3],
                _ => vec![q - 1, 5],
            }
        } else {
            vec![primitive_root_mod_prime_power(p, a)]
        };
        for g in local {
            gens.push(crt_lift(g, q, n));
        }
    }
    gens
}

/// Smallest primitive root mod p, promoted to p^a (adding p if the
/// candidate's order fails to grow at the square).
fn primitive_root_mod_prime_power(p: u64, a: u32) -> u64 {
    let fp = Fl::new(p);
    let g = fp.primitive_root();
    if a == 1 {
        return g;
    }
    let p2 = p * p;
    // order of g mod p^2 is p-1 exactly when g^(p-1) ≡ 1 (mod p^2)
    let mut acc = 1u64;
    let mut base = g % p2;
    let mut e = p - 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p2;
        }
        base = base * base % p2;
        e >>= 1;
    }
    if acc == 1 {
        g + p
    } else {
        g
    }
}

/// x ≡ g (mod q), x ≡ 1 (mod n/q), found by stepping (q and n/q coprime).
fn crt_lift(g: u64, q: u64, n: u64) -> u64 {
    let other = n / q;
    if other == 1 {
        return g;
    }
    let mut x = g;
    while x % other != 1 {
        x += q;
    }
    x
}

/// Outcome of the exact orthogonality verification. When `is_clean` the
/// first and second orthogonality relations hold exactly over Z[zeta_n]:
/// the checked congruences force every defect's canonical coefficients to
/// vanish modulo a product of primes exceeding twice their a-priori bound,
/// and the verified Galois closure transports the single evaluation point
/// to all primitive roots. Any reported violation is a sound witness of
/// failure (a true relation can never miss a congruence).
#[derive(Clone, Debug, serde::Serialize)]
pub struct OrthogonalityReport {
    pub degree_sum_ok: bool,
    pub galois_closure_ok: bool,
    pub row_violations: Vec<(usize, usize)>,
    pub col_violations: Vec<(usize, usize)>,
    pub primes_used: Vec<u64>,
    pub coefficient_bound: String,
}

impl OrthogonalityReport {
    pub fn is_clean(&self) -> bool {
        self.degree_sum_ok
            && self.galois_closure_ok
            && self.row_violations.is_empty()
            && self.col_violations.is_empty()
    }
}

/// Certified-exact check of both orthogonality relations.
pub fn verify_orthogonality(t: &CharacterTable) -> Result<OrthogonalityReport, CharTableError> {
    let k = t.k();
    let n = t.exponent;
    let order = t.group.order();
    let degree_sum_ok =
        t.degrees.iter().map(|&d| d as u128 * d as u128).sum::<u128>() == order as u128;

    // exact Galois closure on unit-group generators; composition extends it
    // to the whole Galois group
    let mut galois_closure_ok = true;
    'outer: for m in unit_group_generators(n) {
        for r in 0..k {
            let Ok(target) = t.galois_conjugate_row(r, m) else {
                galois_closure_ok = false;
                break 'outer;
            };
            for j in 0..k {
                if t.rows[r][j].galois(m, &t.reducer) != t.rows[target][j] {
                    galois_closure_ok = false;
                    break 'outer;
                }
            }
        }
    }

    // canonical-coefficient bound for any defect: a product of two entries
    // has dense coefficient mass ≤ dmax^2, class weights sum to |G|, and one
    // reduction multiplies by at most (1 + n · max rewrite coefficient)
    let dmax = *t.degrees.iter().max().unwrap();
    let bound = BigUint::from(order) * BigUint::from(dmax) * BigUint::from(dmax)
        * (BigUint::one() + BigUint::from(n) * BigUint::from(t.reducer.max_rewrite_coeff))
        + BigUint::from(order);
    let two_b = &bound * 2u32;

    let mut primes_used: Vec<u64> = Vec::new();
    let mut product = BigUint::one();
    let mut row_violations: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut col_violations: BTreeSet<(usize, usize)> = BTreeSet::new();
    while product <= two_b {
        let lower = if two_b.bits() <= 62 {
            two_b.to_u64().expect("fits by bit count")
        } else {
            1u64 << 40
        };
        let l = select_prime(n, lower.max((4 * order).isqrt()), &primes_used)?;
        let (rv, cv) = congruence_check(t, l);
        row_violations.extend(rv);
        col_violations.extend(cv);
        product *= l;
        primes_used.push(l);
    }

    Ok(OrthogonalityReport {
        degree_sum_ok,
        galois_closure_ok,
        row_violations: row_violations.into_iter().collect(),
        col_violations: col_violations.into_iter().collect(),
        primes_used,
        coefficient_bound: bound.to_string(),
    })
}

/// Both orthogonality relations modulo one prime l ≡ 1 (mod n): conjugation
/// of a value is evaluation at the inverse root.
fn congruence_check(
    t: &CharacterTable,
    l: u64,
) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
    let k = t.k();
    let f = Fl::new(l);
    let om = f.root_of_unity(t.exponent);
    let om_inv = f.inv(om);
    let x: Vec<Vec<u64>> = t
        .rows
        .iter()
        .map(|row| row.iter().map(|v| v.eval_modl(om, f)).collect())
        .collect();
    let xc: Vec<Vec<u64>> = t
        .rows
        .iter()
        .map(|row| row.iter().map(|v| v.eval_modl(om_inv, f)).collect())
        .collect();
    let wts: Vec<u64> = t.classes.classes.iter().map(|c| c.size % l).collect();
    let order = t.group.order();
    let gm = order % l;
    let mut rv = Vec::new();
    let mut cv = Vec::new();
    for i in 0..k {
        for i2 in i..k {
            let mut s = 0u64;
            for j in 0..k {
                s = f.add(s, f.mul(wts[j], f.mul(x[i][j], xc[i2][j])));
            }
            let expect = if i == i2 { gm } else { 0 };
            if s != expect {
                rv.push((i, i2));
            }
        }
    }
    let cz: Vec<u64> = t
        .classes
        .classes
        .iter()
        .map(|c| (order / c.size) % l)
        .collect();
    for a in 0..k {
        for b in a..k {
            let mut s = 0u64;
            for row in 0..k {
                s = f.add(s, f.mul(x[row][a], xc[row][b]));
            }
            let expect = if a == b { cz[a] } else { 0 };
            if s != expect {
                cv.push((a, b));
            }
        }
    }
    (rv, cv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use group_engine::{cyclic, sym};

    #[test]
    fn sym3_table_is_exact() {
        let t = character_table(sym(3).unwrap()).unwrap();
        assert_eq!(t.degrees, vec![1, 1, 2]);
        let n = t.exponent;
        assert_eq!(n, 6);
        let int = |c: i64| CycValue::integer(n, c);
        // rows sorted by (degree, values): sign, trivial, standard
        assert_eq!(t.rows[0], vec![int(1), int(-1), int(1)]);
        assert_eq!(t.rows[1], vec![int(1), int(1), int(1)]);
        assert_eq!(t.rows[2], vec![int(2), int(0), int(-1)]);
        assert_eq!(t.trivial_row, 1);
    }

    #[test]
    fn cyclic4_table_and_galois_action() {
        let t = character_table(cyclic(4).unwrap()).unwrap();
        assert_eq!(t.degrees, vec![1, 1, 1, 1]);
        let red = Reducer::new(4).unwrap();
        let i = CycValue::root(&red, 1);
        let one = CycValue::one(4);
        // classes: e, r^2, r, r^3; sorted rows: t=3, t=1, t=2, trivial
        assert_eq!(t.rows[0], vec![one.clone(), one.neg(), i.neg(), i.clone()]);
        assert_eq!(t.rows[1], vec![one.clone(), one.neg(), i.clone(), i.neg()]);
        assert_eq!(t.rows[2], vec![one.clone(), one.clone(), one.neg(), one.neg()]);
        assert_eq!(t.rows[3], vec![one.clone(), one.clone(), one.clone(), one]);
        assert_eq!(t.trivial_row, 3);
        // complex conjugation swaps the two faithful characters
        assert_eq!(t.galois_conjugate_row(1, 3).unwrap(), 0);
        assert_eq!(t.galois_conjugate_row(0, 3).unwrap(), 1);
        assert_eq!(t.galois_conjugate_row(2, 3).unwrap(), 2);
        // non-coprime exponent is rejected
        assert!(t.galois_conjugate_row(0, 2).is_err());
    }

    #[test]
    fn unit_generators_generate() {
        for n in [3u64, 4, 5, 8, 12, 16, 24, 36, 660, 729, 1024] {
            let gens = unit_group_generators(n);
            // close under multiplication and count the subgroup generated
            let mut seen = std::collections::HashSet::new();
            seen.insert(1u64);
            let mut frontier = vec![1u64];
            while let Some(x) = frontier.pop() {
                for &g in &gens {
                    let y = x * g % n;
                    if seen.insert(y) {
                        frontier.push(y);
                    }
                }
            }
            let phi = (1..=n).filter(|m| m.gcd(&n) == 1).count();
            assert_eq!(seen.len(), phi, "generators of (Z/{n})^*");
        }
    }

    #[test]
    fn orthogonality_verified_on_small_tables() {
        for g in [sym(3).unwrap(), sym(4).unwrap(), cyclic(6).unwrap()] {
            let t = character_table(g).unwrap();
            let rep = verify_orthogonality(&t).unwrap();
            assert!(rep.degree_sum_ok);
            assert!(rep.galois_closure_ok);
            assert!(rep.row_violations.is_empty(), "{:?}", rep.row_violations);
            assert!(rep.col_violations.is_empty(), "{:?}", rep.col_violations);
            assert!(rep.is_clean());
        }
    }

    #[test]
    fn class_cap_is_enforced() {
        let err = character_table_with_options(
            sym(4).unwrap(),
            &TableOptions { max_classes: 3 },
        )
        .unwrap_err();
        assert!(matches!(
            err,
            CharTableError::ClassCountExceeded { count: 5, cap: 3 }
        ));
    }
}
