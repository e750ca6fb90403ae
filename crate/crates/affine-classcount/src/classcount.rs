//! Exact class numbers of `V ⋊ H` by orbit decomposition, with an
//! independent permutation-group oracle and the one-dimensional closed
//! form.

use bounds_numbers::is_prime_u64;
use group_engine::{conjugacy_classes, elementary_abelian_semidirect, Group, DEFAULT_ORDER_CAP};
use num_rational::Ratio;
use serde::Serialize;

use crate::matgroup::{index_to_vec, vec_to_index, MatGroup};
use crate::AffineError;

/// How a class number was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    /// Sum of stabilizer class numbers over orbit representatives.
    OrbitReps,
    /// Conjugacy classes of the affine permutation group, built directly.
    PermOracle,
    /// The one-dimensional formula `e + (p−1)/e`.
    ClosedForm,
}

/// One `H`-orbit on the vectors of `F_p^n`.
#[derive(Debug, Clone, Serialize)]
pub struct OrbitSummary {
    /// Lexicographically least vector of the orbit.
    pub representative: Vec<u64>,
    pub size: u64,
    pub stabilizer_order: u64,
    /// Class number of the stabilizer; the orbit's contribution to `k`.
    pub k_stabilizer: u64,
}

/// Exact class number of `V ⋊ H` together with the orbit decomposition
/// that produced it and the bounds it must satisfy.
#[derive(Debug, Clone, Serialize)]
pub struct ClassCountReport {
    pub p: u64,
    pub n: usize,
    /// `|H|`, the order of the linear group.
    pub group_order: u64,
    pub k_hv: u64,
    pub method: Method,
    /// Number of `H`-orbits on the vectors, including the origin.
    pub orbit_count: u64,
    /// Orbits sorted by representative; sizes sum to `p^n`.
    pub orbits: Vec<OrbitSummary>,
    /// `k(H)`, the contribution of the origin's orbit.
    pub k_h: u64,
    /// `k(H) + (p^n − 1)/|H|`; the class number never drops below this.
    pub clifford_lower: Ratio<u64>,
    /// `clifford_lower + 7200`, an upper bound valid in dimension 2
    /// whenever `k(HV) ≤ p`; absent in other dimensions.
    pub sandwich_upper: Option<Ratio<u64>>,
}

/// Class number of `V ⋊ H` via orbit representatives: every `H`-orbit on
/// `V` contributes the class number of the stabilizer (= centralizer in
/// `H`) of its representative.
pub fn k_semidirect(h: &MatGroup) -> Result<ClassCountReport, AffineError> {
    let q = h.perm_shadow.degree();
    let k_h = conjugacy_classes(&h.perm_shadow).count() as u64;
    let gens = h.perm_shadow.generators().to_vec();

    let mut visited = vec![false; q];
    let mut orbits = Vec::new();
    for start in 0..q {
        if visited[start] {
            continue;
        }
        let mut orbit = vec![start as u32];
        visited[start] = true;
        let mut cursor = 0;
        while cursor < orbit.len() {
            let point = orbit[cursor];
            cursor += 1;
            for g in &gens {
                let image = g.apply(point);
                if !visited[image as usize] {
                    visited[image as usize] = true;
                    orbit.push(image);
                }
            }
        }
        orbits.push(orbit);
    }

    let mut summaries = Vec::with_capacity(orbits.len());
    for orbit in &orbits {
        let representative = orbit
            .iter()
            .map(|&i| index_to_vec(h.p, h.n, i as usize))
            .min()
            .expect("orbit is nonempty");
        let rep_index = vec_to_index(h.p, &representative) as u32;
        let (stabilizer_order, k_stabilizer) = if rep_index == 0 {
            (h.order, k_h)
        } else {
            let fixing: Vec<_> = h
                .perm_shadow
                .elements()
                .iter()
                .filter(|g| g.apply(rep_index) == rep_index)
                .cloned()
                .collect();
            let stab = Group::from_generators(q, fixing)?;
            (stab.order(), conjugacy_classes(&stab).count() as u64)
        };
        debug_assert_eq!(stabilizer_order * orbit.len() as u64, h.order);
        summaries.push(OrbitSummary {
            representative,
            size: orbit.len() as u64,
            stabilizer_order,
            k_stabilizer,
        });
    }
    summaries.sort_by(|a, b| a.representative.cmp(&b.representative));
    debug_assert_eq!(summaries.iter().map(|o| o.size).sum::<u64>(), q as u64);

    let k_hv = summaries.iter().map(|o| o.k_stabilizer).sum();
    let clifford_lower = Ratio::from_integer(k_h) + Ratio::new(q as u64 - 1, h.order);
    let sandwich_upper = (h.n == 2).then(|| clifford_lower + Ratio::from_integer(7200));
    Ok(ClassCountReport {
        p: h.p,
        n: h.n,
        group_order: h.order,
        k_hv,
        method: Method::OrbitReps,
        orbit_count: summaries.len() as u64,
        orbits: summaries,
        k_h,
        clifford_lower,
        sandwich_upper,
    })
}

/// Independent class number of `V ⋊ H`: builds the affine permutation
/// group on the `p^n` vectors (translations together with `H`) and counts
/// its conjugacy classes from scratch. Must always agree with
/// [`k_semidirect`].
pub fn k_semidirect_oracle(h: &MatGroup) -> Result<u64, AffineError> {
    let q = h.perm_shadow.degree() as u128;
    let affine_order = q * h.order as u128;
    if affine_order > DEFAULT_ORDER_CAP as u128 {
        return Err(AffineError::CapExceeded {
            needed: affine_order,
            cap: DEFAULT_ORDER_CAP as u64,
        });
    }
    let affine = elementary_abelian_semidirect(h.p, h.n as u32, &h.generators)?;
    if affine.order() as u128 != affine_order {
        return Err(AffineError::Internal(format!(
            "affine group has order {}, expected {affine_order}",
            affine.order()
        )));
    }
    Ok(conjugacy_classes(&affine).count() as u64)
}

/// Closed form for dimension one: the cyclic subgroup of order `e` of
/// `GL_1(p)` gives `k(V ⋊ H) = e + (p−1)/e`.
pub fn metacyclic_k(p: u64, e: u64) -> Result<u64, AffineError> {
    if !is_prime_u64(p) {
        return Err(AffineError::NotPrime(p));
    }
    if e == 0 || (p - 1) % e != 0 {
        return Err(AffineError::NotADivisor { e, modulus: p - 1 });
    }
    Ok(e + (p - 1) / e)
}
