//! The divisor-sum set S_p and the cyclic-Sylow detector.
//!
//! For groups with a cyclic Sylow p-subgroup, the number of almost
//! p-rational p'-degree characters in the principal block always lands in
//! S_p = {e + (p-1)/e : e | p-1}. Whether membership conversely forces the
//! Sylow subgroup to be cyclic is open, so the detector reports agreement
//! or disagreement with the true answer instead of asserting anything.

use char_table::CharacterTable;
use group_engine::sylow_subgroup;
use serde::Serialize;

use crate::levels::divisors;
use crate::profile::rationality_profile;
use crate::RationalityError;

#[derive(Clone, Debug, Serialize)]
pub struct SpSet {
    pub p: u64,
    pub values: Vec<u64>,
}

/// S_p = {e + (p-1)/e : e | p-1}, sorted ascending.
pub fn sp_set(p: u64) -> Result<SpSet, RationalityError> {
    if !bounds_numbers::is_prime_u64(p) {
        return Err(RationalityError::NotPrime(p));
    }
    let mut values: Vec<u64> = divisors(p - 1).iter().map(|e| e + (p - 1) / e).collect();
    values.sort_unstable();
    values.dedup();
    Ok(SpSet { p, values })
}

#[derive(Clone, Debug, Serialize)]
pub struct DetectorVerdict {
    pub p: u64,
    /// |{χ in the principal block : p ∤ χ(1), level <= 1}|
    pub count: usize,
    pub in_sp: bool,
    pub predicted_cyclic: bool,
    pub actual_cyclic: bool,
    pub agree: bool,
}

/// Predict cyclicity of the Sylow p-subgroup from the principal-block
/// count and compare with the truth computed from an actual Sylow
/// subgroup. Never asserts agreement: a disagreement on some input would
/// answer an open question and deserves to be reported, not panicked over.
pub fn detect_cyclic_sylow(
    t: &CharacterTable,
    p: u64,
) -> Result<DetectorVerdict, RationalityError> {
    let order = t.group.order();
    if !bounds_numbers::is_prime_u64(p) {
        return Err(RationalityError::NotPrime(p));
    }
    if order % p != 0 {
        return Err(RationalityError::PrimeDoesNotDivide { p, order });
    }
    let count = rationality_profile(t, p)?.n_b0_pprime_parat;
    let in_sp = sp_set(p)?.values.contains(&(count as u64));
    let syl = sylow_subgroup(&t.group, &t.classes, p)?;
    let actual_cyclic = syl.is_cyclic();
    Ok(DetectorVerdict {
        p,
        count,
        in_sp,
        predicted_cyclic: in_sp,
        actual_cyclic,
        agree: in_sp == actual_cyclic,
    })
}
