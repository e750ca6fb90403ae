//! Exact character tables of finite permutation groups.
//!
//! The table is computed modulo a prime `l ≡ 1 (mod exp(G))` chosen large
//! enough that integer character degrees are determined by their residues,
//! then lifted to exact cyclotomic integers through discrete Fourier
//! inversion of the eigenvalue multiplicities on each cyclic subgroup.
//! Abelian groups bypass the eigenvector stage entirely: a basis of the
//! group is computed and every character is written down directly.
//!
//! All table values are elements of `Z[ζ_n]` (`n` the group exponent) in a
//! canonical sparse representation, so equality of entries is literal
//! equality and orthogonality can be certified exactly rather than checked
//! in floating point.

pub mod abelian;
pub mod blocks;
pub mod cyclo;
pub mod dixon;
pub mod lift;
pub mod modl;
pub mod table;

pub use blocks::{block_distribution, BlockDistribution, BlockFieldInfo};
pub use cyclo::{cyclotomic_polynomial, CycValue, Reducer};
pub use lift::EigenMultiset;
pub use table::{
    character_table, character_table_with_options, unit_group_generators, verify_orthogonality,
    CharacterTable, OrthogonalityReport, TableOptions,
};

use group_engine::GroupError;

/// Errors produced while building or interrogating a character table.
#[derive(Debug, thiserror::Error)]
pub enum CharTableError {
    /// The conjugacy-class count exceeds the configured resource cap.
    #[error("group has {count} conjugacy classes, exceeding the cap of {cap}")]
    ClassCountExceeded { count: usize, cap: usize },
    /// No suitable prime was found below the search bound.
    #[error("no prime l ≡ 1 (mod {modulus}) with l > {lower} found within search bounds")]
    PrimeSearchExhausted { modulus: u64, lower: u64 },
    /// An intermediate cyclotomic coefficient left the i64 range.
    #[error("cyclotomic coefficient exceeded the 64-bit integer range")]
    CoefficientOverflow,
    /// A Galois action was requested for an exponent not coprime to the
    /// conductor, or no row matched the conjugated values.
    #[error("invalid Galois action: {0}")]
    BadGaloisAction(String),
    /// A block partition was requested for a composite modulus.
    #[error("{0} is not prime")]
    InvalidPrime(u64),
    /// The underlying permutation-group computation failed.
    #[error(transparent)]
    Group(#[from] GroupError),
    /// An internal consistency check failed; indicates a bug, not bad input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
