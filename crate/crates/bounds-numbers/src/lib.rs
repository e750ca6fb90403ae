//! Exact number-theoretic and combinatorial utilities: partition counts,
//! certified evaluations of permutation-group order bounds, the 2*sqrt(p-1)
//! class-number bound, and rational interval arithmetic for the handful of
//! transcendental comparisons the rest of the workspace needs. Everything
//! here is pure and deterministic; no floating point enters any comparison.

pub mod bounds;
pub mod interval;
pub mod partition;
pub mod primes;

pub use bounds::{
    brauer_min_k, partition_growth_check, perm_order_bound, BoundEvaluation, BoundValue,
    BrauerBound, OrderBoundKind,
};
pub use interval::RatInterval;
pub use partition::{
    even_sign_partition_count, k_star_alt, partition_count, partition_counts, EVEN_SIGN_CAP,
    K_STAR_ALT_CAP, PARTITION_CAP,
};
pub use primes::{factorize_u64, is_prime_u64, mul_mod_u64, pow_mod_u64};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("{what} {got} exceeds supported cap {cap}")]
    InputTooLarge {
        what: &'static str,
        got: u64,
        cap: u64,
    },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("domain error: {0}")]
    DomainError(&'static str),
    #[error("interval narrowing failed to settle {0}")]
    PrecisionExceeded(&'static str),
}
