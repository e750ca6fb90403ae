//! Class numbers of affine groups `V ⋊ H`, where `V = F_p^n` and
//! `H ≤ GL_n(p)` is a matrix group of order coprime to `p`.
//!
//! The exact count is assembled orbit by orbit: every `H`-orbit on the
//! vectors contributes the class number of the stabilizer of its
//! representative, so `k(V ⋊ H) = Σ k(Stab_H(v_i))` over orbit
//! representatives `v_i`. An independent cross-check constructs the affine
//! permutation group on the `p^n` vectors from scratch and counts its
//! conjugacy classes directly.
//!
//! For fields far too large to enumerate, [`k_lower_bound_certificate`]
//! never touches the vectors: the orbit count comes from the orbit-counting
//! lemma with each fixed-space size `p^{dim ker(h − 1)}` obtained by
//! Gaussian elimination on the matrices alone, and every non-trivial orbit
//! contributes at least one class. The resulting lower bound is exact
//! big-integer arithmetic throughout, so a certificate asserting
//! `k(V ⋊ H) > p` is a proof, not an estimate.
//!
//! The one-dimensional case has the closed form `e + (p−1)/e` for the
//! cyclic subgroup of order `e`, implemented as [`metacyclic_k`] and used
//! as a ground truth against the orbit machinery. [`sp_exclusion_scan`]
//! compares class numbers of higher-dimensional instances against the set
//! `S_p` of class numbers realizable in dimension one; a hit there is
//! reported loudly but never asserted away, since no such instance is
//! known. [`classify_prime_conditions`] evaluates the congruence conditions
//! that govern, for very large primes, exactly when a two-dimensional
//! example with small class number can exist.

mod burnside;
mod classcount;
mod matgroup;
mod primes;

pub use burnside::{
    burnside_orbit_count, burnside_orbit_count_from_generators, k_lower_bound_certificate,
    LowerBoundCertificate,
};
pub use classcount::{
    k_semidirect, k_semidirect_oracle, metacyclic_k, ClassCountReport, Method, OrbitSummary,
};
pub use matgroup::{MatGroup, MatGroupSpec};
pub use primes::{
    classify_prime_conditions, sp_exclusion_scan, PrimeConditionVerdict, SpExclusionReport,
    ASYMPTOTIC_PRIME_THRESHOLD,
};

/// Everything that can go wrong while building matrix groups or counting
/// classes of the affine groups they define.
#[derive(Debug, thiserror::Error)]
pub enum AffineError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("dimension must be at least 1, got {0}")]
    BadDimension(usize),
    #[error("matrix has {got} entries, expected {expected}")]
    MatrixShape { expected: usize, got: usize },
    #[error("generator {index} is singular mod p")]
    SingularGenerator { index: usize },
    #[error("group order {order} is divisible by p = {p}; the action is not coprime")]
    NotCoprime { p: u64, order: u64 },
    #[error("instance needs {needed} items, enumeration cap is {cap}")]
    CapExceeded { needed: u128, cap: u64 },
    #[error("{e} does not divide {modulus}")]
    NotADivisor { e: u64, modulus: u64 },
    #[error("fixed-point total is not divisible by the group order {order}; element enumeration is inconsistent")]
    InexactDivision { order: u64 },
    #[error("dimension {n} is below the minimum {min} for this scan")]
    DimensionTooSmall { n: usize, min: usize },
    #[error(transparent)]
    Group(#[from] group_engine::GroupError),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
