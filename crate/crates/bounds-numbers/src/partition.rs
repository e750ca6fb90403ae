use num_bigint::BigInt;
use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};

use crate::BoundsError;

pub const PARTITION_CAP: u64 = 10_000;

/// Number of partitions of each of 0..=d, by Euler's pentagonal-number
/// recurrence. Exact big integers throughout.
pub fn partition_counts(d: u64) -> Result<Vec<BigUint>, BoundsError> {
    if d > PARTITION_CAP {
        return Err(BoundsError::InputTooLarge {
            what: "partition argument",
            got: d,
            cap: PARTITION_CAP,
        });
    }
    let d = d as usize;
    let mut table: Vec<BigInt> = Vec::with_capacity(d + 1);
    table.push(BigInt::one());
    for n in 1..=d {
        let mut acc = BigInt::zero();
        let mut k: i64 = 1;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            let g2 = k * (3 * k + 1) / 2;
            if g1 as usize > n {
                break;
            }
            let sign = if k % 2 == 0 { -1 } else { 1 };
            let mut term = table[n - g1 as usize].clone();
            if g2 as usize <= n {
                term += &table[n - g2 as usize];
            }
            if sign > 0 {
                acc += term;
            } else {
                acc -= term;
            }
            k += 1;
        }
        table.push(acc);
    }
    Ok(table
        .into_iter()
        .map(|x| {
            debug_assert!(!x.is_negative());
            x.to_biguint().expect("partition counts are nonnegative")
        })
        .collect())
}

pub fn partition_count(d: u64) -> Result<BigUint, BoundsError> {
    Ok(partition_counts(d)?.pop().expect("table is nonempty"))
}

/// All partitions of `d` (parts weakly decreasing), by direct enumeration.
fn enumerate_partitions(d: u64) -> Vec<Vec<u64>> {
    fn go(remaining: u64, max_part: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        let top = max_part.min(remaining);
        for part in (1..=top).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d.max(1), &mut Vec::new(), &mut out);
    out
}

pub const EVEN_SIGN_CAP: u64 = 26;

/// Partitions of `d` whose associated permutations are even: a cycle type
/// with r parts has sign (-1)^(d - r), so we count partitions with d - r even.
/// Direct enumeration; capped because the partition list grows quickly.
pub fn even_sign_partition_count(d: u64) -> Result<u64, BoundsError> {
    if d > EVEN_SIGN_CAP {
        return Err(BoundsError::InputTooLarge {
            what: "even-sign partition argument",
            got: d,
            cap: EVEN_SIGN_CAP,
        });
    }
    Ok(enumerate_partitions(d)
        .iter()
        .filter(|parts| (d - parts.len() as u64) % 2 == 0)
        .count() as u64)
}

pub const K_STAR_ALT_CAP: u64 = 10;

/// Number of orbits of Aut(Alt(d)) on Alt(d), for 2 <= d <= 10.
///
/// For d != 6 every automorphism comes from conjugation in Sym(d), so the
/// orbits are the even cycle types. For d = 6 the exceptional outer
/// automorphism fuses the two order-3 cycle types, giving one orbit fewer.
pub fn k_star_alt(d: u64) -> Result<u64, BoundsError> {
    if !(2..=K_STAR_ALT_CAP).contains(&d) {
        return Err(BoundsError::InputTooLarge {
            what: "alternating-orbit argument",
            got: d,
            cap: K_STAR_ALT_CAP,
        });
    }
    let base = even_sign_partition_count(d)?;
    Ok(if d == 6 { base - 1 } else { base })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn small_values() {
        assert_eq!(partition_count(0).unwrap().to_u64(), Some(1));
        assert_eq!(partition_count(5).unwrap().to_u64(), Some(7));
        assert_eq!(partition_count(10).unwrap().to_u64(), Some(42));
        assert_eq!(partition_count(25).unwrap().to_u64(), Some(1958));
        assert_eq!(partition_count(100).unwrap().to_string(), "190569292");
    }

    #[test]
    fn pentagonal_matches_enumeration_up_to_30() {
        let table = partition_counts(30).unwrap();
        for d in 0..=30u64 {
            let brute = enumerate_partitions(d).len() as u64;
            assert_eq!(table[d as usize].to_u64(), Some(brute), "mismatch at {d}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(partition_count(10_001).is_err());
        assert!(even_sign_partition_count(27).is_err());
        assert!(k_star_alt(11).is_err());
        assert!(k_star_alt(1).is_err());
    }

    #[test]
    fn even_sign_counts() {
        // d=3: partitions 3 / 2+1 / 1+1+1 with r=1,2,3; signs (-1)^(3-r):
        // even for r=3 and r=1
        assert_eq!(even_sign_partition_count(3).unwrap(), 2);
        assert_eq!(even_sign_partition_count(4).unwrap(), 3);
        assert_eq!(even_sign_partition_count(5).unwrap(), 4);
        assert_eq!(even_sign_partition_count(6).unwrap(), 6);
        // even + odd = total
        for d in 0..=20u64 {
            let even = even_sign_partition_count(d).unwrap();
            let total = partition_count(d).unwrap().to_u64().unwrap();
            let odd = enumerate_partitions(d)
                .iter()
                .filter(|p| (d - p.len() as u64) % 2 == 1)
                .count() as u64;
            assert_eq!(even + odd, total);
        }
    }

    #[test]
    fn alt_orbit_counts() {
        // d=5: even cycle types of S5 inside A5: 1^5, (2,2,1), (3,1,1), (5)
        assert_eq!(k_star_alt(5).unwrap(), 4);
        assert_eq!(k_star_alt(6).unwrap(), even_sign_partition_count(6).unwrap() - 1);
        assert_eq!(k_star_alt(7).unwrap(), even_sign_partition_count(7).unwrap());
    }
}
