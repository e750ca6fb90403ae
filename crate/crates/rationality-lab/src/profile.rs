//! Per-(group, prime) aggregate rationality data.

use char_table::{block_distribution, CharacterTable};
use serde::Serialize;

use crate::levels::{p_rationality_level, v_adic, ALMOST_RATIONAL};
use crate::RationalityError;

/// Rationality data for one table row.
#[derive(Clone, Debug, Serialize)]
pub struct RowRationality {
    pub level: u32,
    pub p_prime_degree: bool,
    pub block: usize,
}

/// Everything the counting results consume, for one group and one prime:
/// levels per row, regularity levels per class, and the aggregate counts.
#[derive(Clone, Debug, Serialize)]
pub struct RationalityProfile {
    pub fingerprint: String,
    pub p: u64,
    pub rows: Vec<RowRationality>,
    /// log_p of the p-part of each class's element order.
    pub class_levels: Vec<u32>,
    /// Rows of level <= 1.
    pub n_parat: usize,
    /// Rows of level 0.
    pub n_prat: usize,
    /// Rows of level <= 1 whose degree is prime to p.
    pub n_pprime_parat: usize,
    /// Rows of level <= 1, degree prime to p, in the principal block.
    pub n_b0_pprime_parat: usize,
    /// Classes of regularity level <= 1.
    pub n_cl_pareg: usize,
    /// Classes of regularity level 0.
    pub n_cl_preg: usize,
    /// Total number of classes (= number of rows).
    pub k: usize,
}

pub fn rationality_profile(
    t: &CharacterTable,
    p: u64,
) -> Result<RationalityProfile, RationalityError> {
    if !bounds_numbers::is_prime_u64(p) {
        return Err(RationalityError::NotPrime(p));
    }
    let bd = block_distribution(t, p)?;
    let k = t.k();
    let mut rows = Vec::with_capacity(k);
    for r in 0..k {
        rows.push(RowRationality {
            level: p_rationality_level(t, r, p)?,
            p_prime_degree: t.degrees[r] % p != 0,
            block: bd.block_of[r],
        });
    }
    let class_levels: Vec<u32> = t
        .classes
        .classes
        .iter()
        .map(|c| v_adic(c.element_order, p))
        .collect();
    let almost = |r: &&RowRationality| r.level <= ALMOST_RATIONAL;
    let n_parat = rows.iter().filter(almost).count();
    let n_prat = rows.iter().filter(|r| r.level == 0).count();
    let n_pprime_parat = rows.iter().filter(almost).filter(|r| r.p_prime_degree).count();
    let n_b0_pprime_parat = rows
        .iter()
        .filter(almost)
        .filter(|r| r.p_prime_degree && r.block == bd.principal_block_id)
        .count();
    let n_cl_pareg = class_levels.iter().filter(|&&l| l <= ALMOST_RATIONAL).count();
    let n_cl_preg = class_levels.iter().filter(|&&l| l == 0).count();
    Ok(RationalityProfile {
        fingerprint: group_engine::fingerprint(&t.group, &t.classes),
        p,
        rows,
        class_levels,
        n_parat,
        n_prat,
        n_pprime_parat,
        n_b0_pprime_parat,
        n_cl_pareg,
        n_cl_preg,
        k,
    })
}
