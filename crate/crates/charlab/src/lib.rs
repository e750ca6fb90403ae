//! Workbench for character-rationality experiments on finite groups.
//!
//! The `charlab` binary ties the permutation-group, character-table,
//! rationality, and affine class-counting crates together behind one
//! command-line surface:
//!
//! * `analyze` — rationality profile, cyclic-Sylow detector verdict and
//!   normalizer character counts for one group at one prime,
//! * `affine` — class numbers `k(HV)` of coprime affine groups, either by
//!   orbit enumeration or through a symbolic lower-bound certificate,
//! * `verify` — batch verifier suites over a corpus of groups,
//! * `sp` — the divisor-sum set `S_p`,
//! * `classify-prime` — the arithmetic prime-condition classifier.
//!
//! All reports serialize deterministically: keys are emitted in sorted
//! order and no timestamps or host details are included, so identical
//! inputs yield byte-identical output.

use thiserror::Error;

pub mod cache;
pub mod commands;
pub mod corpus;
pub mod input;
pub mod report;
pub mod suites;

/// Version stamped into every report and cache entry.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Top-level error, classified by exit code: bad input (2), resource cap
/// (3), or a violated invariant (1).
#[derive(Debug, Error)]
pub enum CliError {
    /// The user asked for something malformed or impossible.
    #[error("{0}")]
    Input(String),
    /// The computation would exceed a configured enumeration cap.
    #[error("{0}")]
    Resource(String),
    /// A mathematical invariant or suite check failed.
    #[error("{0}")]
    Assertion(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Io(_) => 2,
            CliError::Assertion(_) => 1,
            CliError::Resource(_) => 3,
        }
    }

    pub fn input(msg: impl Into<String>) -> CliError {
        CliError::Input(msg.into())
    }
}

impl From<group_engine::GroupError> for CliError {
    fn from(e: group_engine::GroupError) -> CliError {
        use group_engine::GroupError;
        match e {
            GroupError::OrderCapExceeded(_) => CliError::Resource(e.to_string()),
            GroupError::Internal(_) => CliError::Assertion(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<char_table::CharTableError> for CliError {
    fn from(e: char_table::CharTableError) -> CliError {
        use char_table::CharTableError;
        match e {
            CharTableError::ClassCountExceeded { .. }
            | CharTableError::PrimeSearchExhausted { .. }
            | CharTableError::CoefficientOverflow => CliError::Resource(e.to_string()),
            CharTableError::Internal(_) => CliError::Assertion(e.to_string()),
            CharTableError::Group(g) => g.into(),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<rationality_lab::RationalityError> for CliError {
    fn from(e: rationality_lab::RationalityError) -> CliError {
        use rationality_lab::RationalityError;
        match e {
            RationalityError::FusionFailure(_) | RationalityError::Internal(_) => {
                CliError::Assertion(e.to_string())
            }
            RationalityError::Table(t) => t.into(),
            RationalityError::Group(g) => g.into(),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<affine_classcount::AffineError> for CliError {
    fn from(e: affine_classcount::AffineError) -> CliError {
        use affine_classcount::AffineError;
        match e {
            AffineError::CapExceeded { .. } => CliError::Resource(e.to_string()),
            AffineError::InexactDivision { .. } | AffineError::Internal(_) => {
                CliError::Assertion(e.to_string())
            }
            AffineError::Group(g) => g.into(),
            _ => CliError::Input(e.to_string()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_by_class() {
        assert_eq!(CliError::input("x").exit_code(), 2);
        assert_eq!(CliError::Resource("x".into()).exit_code(), 3);
        assert_eq!(CliError::Assertion("x".into()).exit_code(), 1);
    }

    #[test]
    fn library_errors_classify() {
        let e: CliError = group_engine::GroupError::OrderCapExceeded(10).into();
        assert_eq!(e.exit_code(), 3);
        let e: CliError = group_engine::GroupError::NotPrime(4).into();
        assert_eq!(e.exit_code(), 2);
        let e: CliError = affine_classcount::AffineError::CapExceeded {
            needed: 1 << 40,
            cap: 1 << 20,
        }
        .into();
        assert_eq!(e.exit_code(), 3);
        let e: CliError =
            rationality_lab::RationalityError::Internal("bad".into()).into();
        assert_eq!(e.exit_code(), 1);
        // nested group errors keep their classification through wrappers
        let e: CliError = rationality_lab::RationalityError::Group(
            group_engine::GroupError::OrderCapExceeded(10),
        )
        .into();
        assert_eq!(e.exit_code(), 3);
    }
}
