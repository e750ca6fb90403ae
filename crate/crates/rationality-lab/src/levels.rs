//! Rationality levels via Galois fixedness.
//!
//! Everything here reduces to one question: is a table row fixed by the
//! subgroup {u ≡ 1 (mod f)} of (Z/n)^× acting as Galois conjugation? The
//! subgroup is handled through explicit generators assembled prime-by-prime
//! with the Chinese remainder theorem, so no field arithmetic is needed and
//! the row action reuses the table's power maps.

use bounds_numbers::factorize_u64;
use char_table::{unit_group_generators, CharacterTable, CycValue, Reducer};

use crate::RationalityError;

/// Level threshold below which a character counts as almost rational.
pub const ALMOST_RATIONAL: u32 = 1;

pub(crate) fn v_adic(mut n: u64, p: u64) -> u32 {
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factorize_u64(n) {
        let prev = out.clone();
        let mut q = 1;
        for _ in 0..e {
            q *= p;
            out.extend(prev.iter().map(|d| d * q));
        }
    }
    out.sort_unstable();
    out
}

fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 { (a, 1, 0) } else { let (g, x, y) = egcd(b, a % b); (g, y, x - (a / b) * y) }
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    let (g, x, _) = egcd((a % m) as i64, m as i64);
    assert_eq!(g, 1, "inverse of non-unit");
    x.rem_euclid(m as i64) as u64
}

/// Generators of {x ≡ 1 (mod q^a)} inside (Z/q^eq)^×, for prime q.
///
/// For odd q the subgroup is cyclic: the full unit group at a = 0, and
/// <1 + q^a> for 0 < a < eq. For q = 2 the units mod 2^eq need two
/// generators when eq >= 3, but since every unit is odd the constraint
/// "≡ 1 mod 2" is vacuous and a <= 1 still means the full group; from
/// a = 2 on the subgroup is the cyclic <1 + 2^a>.
fn local_congruence_generators(q: u64, eq: u32, a: u32) -> Vec<u64> {
    if a >= eq {
        return Vec::new();
    }
    let qe = q.pow(eq);
    let cyclic_from = if q == 2 { 2 } else { 1 };
    if a < cyclic_from {
        unit_group_generators(qe)
    } else {
        vec![1 + q.pow(a)]
    }
}

/// Lift x from (Z/qe)^× to the unit of (Z/n)^× that is x mod qe and
/// 1 modulo the cofactor n/qe.
fn crt_unit(n: u64, qe: u64, x: u64) -> u64 {
    let m = n / qe;
    if m == 1 {
        return x % n;
    }
    let t = (x + qe - 1) % qe * mod_inverse(m % qe, qe) % qe;
    (1 + (m as u128 * t as u128) % n as u128) as u64 % n
}

/// Generators of the congruence subgroup {u ∈ (Z/n)^× : u ≡ 1 (mod f)},
/// which is the Galois group of Q(ζ_n) over Q(ζ_f). Requires f | n; the
/// empty list means the trivial group.
pub fn congruence_subgroup_generators(n: u64, f: u64) -> Vec<u64> {
    assert!(f >= 1 && n % f == 0, "f must divide n");
    let mut gens = Vec::new();
    for (q, eq) in factorize_u64(n) {
        let qe = q.pow(eq);
        for x in local_congruence_generators(q, eq, v_adic(f, q)) {
            gens.push(crt_unit(n, qe, x));
        }
    }
    gens
}

fn row_fixed_by(t: &CharacterTable, row: usize, gens: &[u64]) -> Result<bool, RationalityError> {
    for &u in gens {
        if t.galois_conjugate_row(row, u)? != row {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The least a >= 0 such that the row's values lie in the cyclotomic field
/// of conductor p^a times the p'-part of the exponent; equivalently the
/// base-p logarithm of the p-part of the row's conductor.
pub fn p_rationality_level(
    t: &CharacterTable,
    row: usize,
    p: u64,
) -> Result<u32, RationalityError> {
    let n = t.exponent;
    let e = v_adic(n, p);
    let cofactor = n / p.pow(e);
    for a in 0..=e {
        let gens = congruence_subgroup_generators(n, cofactor * p.pow(a));
        if row_fixed_by(t, row, &gens)? {
            return Ok(a);
        }
    }
    unreachable!("the subgroup at a = e is trivial, so the loop must return")
}

/// The conductor of the row's field of values: the least f such that all
/// values lie in Q(ζ_f), found by scanning divisors of the exponent in
/// ascending order. Independent of [`p_rationality_level`]'s level chain:
/// v_p of this conductor must equal the level for every p.
pub fn conductor(t: &CharacterTable, row: usize) -> Result<u64, RationalityError> {
    let n = t.exponent;
    for f in divisors(n) {
        if row_fixed_by(t, row, &congruence_subgroup_generators(n, f))? {
            return Ok(f);
        }
    }
    unreachable!("f = n fixes every row")
}

/// Rewrite a value into the cyclotomic basis of a larger conductor (the
/// target reducer's modulus must be a multiple of the value's conductor).
pub fn embed_value(v: &CycValue, target: &Reducer) -> CycValue {
    assert_eq!(
        target.n % v.conductor,
        0,
        "target conductor must be a multiple of the source"
    );
    let stretch = target.n / v.conductor;
    CycValue::from_terms(target, v.terms.iter().map(|&(e, c)| (e as u64 * stretch, c)))
}
