//! Rationality analysis of character tables.
//!
//! The central quantity is the *p-rationality level* of an irreducible
//! character: the least a >= 0 such that its values lie in a cyclotomic
//! field whose conductor has p-part p^a (equivalently, log_p of the p-part
//! of the conductor of the character's value field). Characters of level
//! zero are p-rational; level at most one is called *almost p-rational*
//! here. The dual notion for conjugacy classes is the regularity level
//! log_p of the p-part of the element order.
//!
//! On top of the levels this crate builds aggregate profiles per (group,
//! prime), the divisor-sum set S_p = {e + (p-1)/e : e | p-1}, a detector
//! that predicts cyclicity of Sylow p-subgroups from a principal-block
//! character count, a McKay--Navarro count comparison against the Sylow
//! normalizer, and verifiers for the counting inequalities that relate all
//! of these.

mod detect;
mod levels;
mod profile;
mod verify;

pub use detect::{detect_cyclic_sylow, sp_set, DetectorVerdict, SpSet};
pub use levels::{
    conductor, congruence_subgroup_generators, embed_value, p_rationality_level, ALMOST_RATIONAL,
};
pub use profile::{rationality_profile, RationalityProfile, RowRationality};
pub use verify::{
    find_pq_rational_witness, mckay_navarro_check, verify_class_count_inequalities,
    verify_normal_restriction_equivalence, verify_parat_lower_bound, ClassCountReport,
    LowerBoundReport, McKayNavarroReport, QuotientCheck, RestrictionReport,
};

#[derive(Debug, thiserror::Error)]
pub enum RationalityError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {p} does not divide the group order {order}")]
    PrimeDoesNotDivide { p: u64, order: u64 },
    #[error("operation requires an odd prime, got {0}")]
    RequiresOddPrime(u64),
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("class fusion failed: {0}")]
    FusionFailure(String),
    #[error(transparent)]
    Table(#[from] char_table::CharTableError),
    #[error("group error: {0}")]
    Group(#[from] group_engine::GroupError),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
