//! Orbit counts from the orbit-counting lemma and the class-number lower
//! bounds they certify, in exact big-integer arithmetic.
//!
//! Nothing here ever enumerates vectors: the number of fixed vectors of a
//! matrix `h` is `p^{dim ker(h − 1)}`, and the kernel dimension is a rank
//! computation on the matrix itself. The prime only enters as an exponent
//! base, so certificates remain instant even when `p^n` has dozens of
//! digits.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::matgroup::{fixed_space_dim, matrix_class_count, symbolic_elements, MatGroup};
use crate::AffineError;

/// Number of `H`-orbits on `F_p^n`: `(1/|H|) Σ_h p^{dim fix(h)}`. The
/// division must be exact; a remainder means the element list is not a
/// group and is reported as an error rather than rounded away.
pub fn burnside_orbit_count(h: &MatGroup) -> Result<BigUint, AffineError> {
    let total = (0..h.order as u32)
        .map(|i| fixed_vector_count(h.p, h.n, &h.element_matrix(i)))
        .sum();
    exact_quotient(total, h.order)
}

/// [`burnside_orbit_count`] for generator matrices alone: the group is
/// closed by matrix multiplication (at most a million elements), so `p`
/// may be far beyond any enumerable vector space.
pub fn burnside_orbit_count_from_generators(
    p: u64,
    n: usize,
    mats: &[Vec<u64>],
) -> Result<BigUint, AffineError> {
    let (_, elements) = symbolic_elements(p, n, mats)?;
    let total = elements
        .iter()
        .map(|m| fixed_vector_count(p, n, m))
        .sum();
    exact_quotient(total, elements.len() as u64)
}

/// A certified lower bound on `k(V ⋊ H)` that never materializes `V`.
///
/// The origin's orbit contributes `k(H)` classes and each of the other
/// `r − 1` orbits contributes at least one, so `k(V ⋊ H) ≥ k(H) + r − 1`
/// with `r` the exact orbit count. When `exceeds_p` is set the certificate
/// proves `k(V ⋊ H) > p`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LowerBoundCertificate {
    pub p: u64,
    pub n: usize,
    /// `|H|`.
    pub group_order: u64,
    /// Exact class number of `H` itself.
    pub k_h: u64,
    /// Exact number of `H`-orbits on the `p^n` vectors.
    #[serde(with = "decimal_string")]
    pub orbit_count: BigUint,
    /// `k_h + orbit_count − 1 ≤ k(V ⋊ H)`.
    #[serde(with = "decimal_string")]
    pub bound: BigUint,
    pub exceeds_p: bool,
}

/// Builds a [`LowerBoundCertificate`] for the group generated by `mats`
/// inside `GL_n(p)`. Everything — closure, class number of `H`, orbit
/// count — is computed on matrices, so only `|H|` needs to be small.
pub fn k_lower_bound_certificate(
    p: u64,
    n: usize,
    mats: &[Vec<u64>],
) -> Result<LowerBoundCertificate, AffineError> {
    let (gens, elements) = symbolic_elements(p, n, mats)?;
    let group_order = elements.len() as u64;
    let k_h = matrix_class_count(p, n, &gens, &elements)?;
    let total = elements
        .iter()
        .map(|m| fixed_vector_count(p, n, m))
        .sum();
    let orbit_count = exact_quotient(total, group_order)?;
    let bound = &orbit_count + BigUint::from(k_h - 1);
    let exceeds_p = bound > BigUint::from(p);
    Ok(LowerBoundCertificate {
        p,
        n,
        group_order,
        k_h,
        orbit_count,
        bound,
        exceeds_p,
    })
}

fn fixed_vector_count(p: u64, n: usize, mat: &[u64]) -> BigUint {
    BigUint::from(p).pow(fixed_space_dim(p, n, mat) as u32)
}

fn exact_quotient(total: BigUint, order: u64) -> Result<BigUint, AffineError> {
    let order_big = BigUint::from(order);
    if (&total % &order_big).is_zero() {
        Ok(total / order_big)
    } else {
        Err(AffineError::InexactDivision { order })
    }
}

/// Serializes big integers as decimal strings so certificates stay
/// readable in JSON.
mod decimal_string {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &BigUint, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<BigUint, D::Error> {
        let text = String::deserialize(de)?;
        text.parse().map_err(D::Error::custom)
    }
}

impl LowerBoundCertificate {
    /// Re-derives the flag from the stored numbers, for consumers that
    /// want to re-check a deserialized certificate.
    pub fn is_consistent(&self) -> bool {
        if self.k_h == 0 {
            return false;
        }
        let recomputed = &self.orbit_count + BigUint::from(self.k_h - 1);
        recomputed == self.bound && self.exceeds_p == (self.bound > BigUint::from(self.p))
    }
}
