//! Batch verifier suites over a corpus manifest.
//!
//! A suite expands the manifest into jobs (one per entry, or one per
//! entry and prime), builds the needed character tables, evaluates each
//! job, and folds everything into a [`RunReport`]. Job order follows the
//! manifest, so output is identical whatever the thread count.
//!
//! Two outcomes deserve care. A *failure* means a proved statement
//! broke, which indicates a bug; the run exits nonzero. A
//! *counterexample flag* means a group landed on the open side of a
//! question (a count in `S_p` without a cyclic Sylow subgroup, or a
//! normalizer count mismatch beyond the solvable case). Those runs still
//! pass — the flagged groups are collected and printed, not failed.

use std::collections::HashMap;
use std::fmt;

use char_table::{character_table, unit_group_generators, CharacterTable};
use group_engine::{
    derived_subgroup, is_solvable, normal_closure, normalizer, p_prime_core, power_map,
    sylow_subgroup, Group,
};
use num_bigint::BigUint;
use num_rational::Ratio;
use rationality_lab::{
    detect_cyclic_sylow, find_pq_rational_witness, mckay_navarro_check, rationality_profile,
    verify_class_count_inequalities, verify_normal_restriction_equivalence,
    verify_parat_lower_bound,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::corpus::{CorpusEntry, CorpusManifest};
use crate::report::{CheckResult, CheckStatus, RunReport};
use crate::CliError;

/// Parents with more conjugacy classes than this are skipped by the
/// restriction suite; the cross-check costs roughly k² cyclotomic inner
/// products per normal subgroup.
const RESTRICTION_CLASS_CAP: usize = 128;

/// Marker prefix on notes of passing checks that flag open-question
/// candidates; `run_suite` collects them into `RunReport::counterexamples`.
const COUNTEREXAMPLE_PREFIX: &str = "COUNTEREXAMPLE: ";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// `|Irr` almost-rational`| ≥ 2√(p−1)`, with the Frobenius shape
    /// characterizing equality.
    LowerBound,
    /// The same bound restricted to degrees prime to p, tested as a
    /// three-way equivalence against the Sylow normalizer.
    PprimeBound,
    /// Class-side counting inequalities plus Galois fixed-point counts.
    ClassCounts,
    /// Restriction equivalence across normal subgroups of p'-index.
    Restriction,
    /// Almost-rational p'-degree counts against the Sylow normalizer.
    MckayNavarro,
    /// Affine class numbers against independent oracles.
    AffineOracle,
    /// Membership of the count in S_p versus cyclic Sylow subgroups.
    Detector,
    /// Existence of a nontrivial character rational at two primes at once.
    PqWitness,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::LowerBound,
        Suite::PprimeBound,
        Suite::ClassCounts,
        Suite::Restriction,
        Suite::MckayNavarro,
        Suite::AffineOracle,
        Suite::Detector,
        Suite::PqWitness,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::LowerBound => "lower-bound",
            Suite::PprimeBound => "pprime-bound",
            Suite::ClassCounts => "class-counts",
            Suite::Restriction => "restriction",
            Suite::MckayNavarro => "mckay-navarro",
            Suite::AffineOracle => "affine-oracle",
            Suite::Detector => "detector",
            Suite::PqWitness => "pq-witness",
        }
    }

    pub fn parse(s: &str) -> Result<Suite, CliError> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                CliError::Input(format!(
                    "unknown suite '{s}'; available: {}",
                    names.join(", ")
                ))
            })
    }

    /// Affine suites run on matrix entries and need no character table.
    fn uses_tables(&self) -> bool {
        !matches!(self, Suite::AffineOracle)
    }

    /// Whether jobs are one-per-(entry, prime) or one-per-entry.
    fn per_prime(&self) -> bool {
        !matches!(self, Suite::AffineOracle | Suite::PqWitness)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

type TableSlot = Result<CharacterTable, String>;

/// Runs one suite over the manifest. `jobs` caps the rayon pool
/// (`None` uses the global default); `fail_fast` evaluates serially and
/// stops at the first hard failure.
pub fn run_suite(
    suite: Suite,
    manifest: &CorpusManifest,
    jobs: Option<usize>,
    fail_fast: bool,
) -> Result<RunReport, CliError> {
    manifest.validate()?;
    let work = expand_jobs(suite, manifest);
    let results = if fail_fast {
        run_serial(suite, manifest, &work)
    } else {
        match jobs {
            None => run_parallel(suite, manifest, &work),
            Some(n) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .map_err(|e| CliError::Input(format!("cannot size the thread pool: {e}")))?;
                pool.install(|| run_parallel(suite, manifest, &work))
            }
        }
    };
    let mut report = RunReport::new(suite.name(), &manifest.version, results);
    report.counterexamples = report
        .results
        .iter()
        .filter_map(|r| {
            let note = r.note.as_deref()?.strip_prefix(COUNTEREXAMPLE_PREFIX)?;
            let prime = r.prime.map(|p| format!(" at p = {p}")).unwrap_or_default();
            Some(format!("{}{prime}: {note}", r.id))
        })
        .collect();
    Ok(report)
}

/// (entry index, prime) pairs in manifest order.
fn expand_jobs(suite: Suite, manifest: &CorpusManifest) -> Vec<(usize, Option<u64>)> {
    let mut work = Vec::new();
    for (i, entry) in manifest.entries.iter().enumerate() {
        let relevant = if suite == Suite::AffineOracle {
            entry.is_affine()
        } else {
            entry.is_group()
        };
        if !relevant {
            continue;
        }
        if suite.per_prime() {
            for &p in &entry.primes {
                work.push((i, Some(p)));
            }
        } else {
            work.push((i, None));
        }
    }
    work
}

fn build_table(entry: &CorpusEntry) -> TableSlot {
    let spec = entry.group.as_ref().expect("table build on a group entry");
    let group = spec
        .build()
        .map_err(|e| format!("cannot build group: {e}"))?;
    character_table(group).map_err(|e| format!("table unavailable: {e}"))
}

fn run_parallel(
    suite: Suite,
    manifest: &CorpusManifest,
    work: &[(usize, Option<u64>)],
) -> Vec<CheckResult> {
    let tables: Vec<Option<TableSlot>> = if suite.uses_tables() {
        manifest
            .entries
            .par_iter()
            .map(|e| e.is_group().then(|| build_table(e)))
            .collect()
    } else {
        manifest.entries.iter().map(|_| None).collect()
    };
    work.par_iter()
        .map(|&(i, prime)| eval_job(suite, &manifest.entries[i], tables[i].as_ref(), prime))
        .collect()
}

fn run_serial(
    suite: Suite,
    manifest: &CorpusManifest,
    work: &[(usize, Option<u64>)],
) -> Vec<CheckResult> {
    let mut tables: HashMap<usize, TableSlot> = HashMap::new();
    let mut results = Vec::new();
    for &(i, prime) in work {
        let entry = &manifest.entries[i];
        if suite.uses_tables() && !tables.contains_key(&i) {
            tables.insert(i, build_table(entry));
        }
        let slot = if suite.uses_tables() {
            tables.get(&i)
        } else {
            None
        };
        let result = eval_job(suite, entry, slot, prime);
        let stop = result.status == CheckStatus::Fail;
        results.push(result);
        if stop {
            break;
        }
    }
    results
}

/// Per-check outcome before the entry id and prime are attached.
struct Outcome {
    status: CheckStatus,
    note: Option<String>,
    detail: Option<Value>,
}

impl Outcome {
    fn pass(detail: Option<Value>) -> Outcome {
        Outcome {
            status: CheckStatus::Pass,
            note: None,
            detail,
        }
    }

    fn pass_noted(note: String, detail: Option<Value>) -> Outcome {
        Outcome {
            status: CheckStatus::Pass,
            note: Some(note),
            detail,
        }
    }

    fn fail(note: String, detail: Option<Value>) -> Outcome {
        Outcome {
            status: CheckStatus::Fail,
            note: Some(note),
            detail,
        }
    }

    fn skip(note: String) -> Outcome {
        Outcome {
            status: CheckStatus::Skip,
            note: Some(note),
            detail: None,
        }
    }
}

fn eval_job(
    suite: Suite,
    entry: &CorpusEntry,
    table: Option<&TableSlot>,
    prime: Option<u64>,
) -> CheckResult {
    let outcome = if suite == Suite::AffineOracle {
        check_affine_oracle(entry).unwrap_or_else(|msg| Outcome::fail(msg, None))
    } else {
        match table {
            Some(Ok(t)) => {
                let run = match suite {
                    Suite::LowerBound => check_lower_bound(t, prime.unwrap()),
                    Suite::PprimeBound => check_pprime_bound(t, prime.unwrap()),
                    Suite::ClassCounts => check_class_counts(t, prime.unwrap()),
                    Suite::Restriction => check_restriction(t, prime.unwrap()),
                    Suite::MckayNavarro => check_mckay_navarro(t, prime.unwrap()),
                    Suite::Detector => check_detector(t, prime.unwrap()),
                    Suite::PqWitness => check_pq_witness(t),
                    Suite::AffineOracle => unreachable!("handled above"),
                };
                run.unwrap_or_else(|msg| Outcome::fail(msg, None))
            }
            Some(Err(msg)) => Outcome::fail(msg.clone(), None),
            None => Outcome::fail("no character table for a group suite".into(), None),
        }
    };
    CheckResult {
        id: entry.id.clone(),
        prime,
        status: outcome.status,
        note: outcome.note,
        detail: outcome.detail,
    }
}

trait StrErr<T> {
    fn str_err(self) -> Result<T, String>;
}

impl<T, E: std::error::Error> StrErr<T> for Result<T, E> {
    fn str_err(self) -> Result<T, String> {
        self.map_err(|e| e.to_string())
    }
}

fn check_lower_bound(t: &CharacterTable, p: u64) -> Result<Outcome, String> {
    let rep = verify_parat_lower_bound(t, p).str_err()?;
    let detail = serde_json::to_value(&rep).ok();
    if !rep.satisfied {
        return Ok(Outcome::fail(
            format!(
                "almost-rational count {} falls below 2*sqrt(p-1) at p = {p}",
                rep.count
            ),
            detail,
        ));
    }
    if rep.equality && rep.equality_shape_ok != Some(true) {
        return Ok(Outcome::fail(
            "count meets the bound exactly but the group is not cyclic-by-sqrt(p-1)".into(),
            detail,
        ));
    }
    Ok(Outcome::pass(detail))
}

fn isqrt(x: u64) -> u64 {
    let mut r = (x as f64).sqrt() as u64;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

fn pprime_parat_count(t: &CharacterTable, p: u64) -> Result<u64, String> {
    Ok(rationality_profile(t, p).str_err()?.n_pprime_parat as u64)
}

/// The p'-degree bound, tested as a three-way equivalence: the count of
/// the group meets `2√(p−1)` exactly iff the count of the Sylow
/// normalizer does, iff the normalizer is cyclic-by-`√(p−1)`.
fn check_pprime_bound(t: &CharacterTable, p: u64) -> Result<Outcome, String> {
    let lhs = pprime_parat_count(t, p)?;
    let satisfied = lhs * lhs >= 4 * (p - 1);
    let lhs_eq = lhs * lhs == 4 * (p - 1);

    let syl = sylow_subgroup(&t.group, &t.classes, p).str_err()?;
    let norm = normalizer(&t.group, &syl).str_err()?;
    let whole = norm.order() == t.group.order();
    let (rhs, k_n, n_order) = if whole {
        (lhs, t.k() as u64, t.group.order())
    } else {
        let tn = character_table(norm).str_err()?;
        let rhs = pprime_parat_count(&tn, p)?;
        (rhs, tn.k() as u64, tn.group.order())
    };
    let rhs_eq = rhs * rhs == 4 * (p - 1);

    // Shape: N = P ⋊ C_e with P cyclic and e = sqrt(p−1), recognized by
    // the order decomposition and the class count e + (p^a − 1)/e.
    let e = isqrt(p - 1);
    let shape = e * e == p - 1 && e >= 1 && {
        let mut q = 1u64;
        while n_order % (q * p) == 0 {
            q *= p;
        }
        q > 1 && n_order == q * e && syl.is_cyclic() && k_n == e + (q - 1) / e
    };

    let detail = Some(json!({
        "p": p,
        "count": lhs,
        "normalizer_count": rhs,
        "equality": lhs_eq,
        "normalizer_equality": rhs_eq,
        "normalizer_shape": shape,
    }));
    if !satisfied {
        return Ok(Outcome::fail(
            format!("p'-degree almost-rational count {lhs} falls below 2*sqrt(p-1) at p = {p}"),
            detail,
        ));
    }
    if lhs_eq != rhs_eq || lhs_eq != shape {
        return Ok(Outcome::fail(
            format!(
                "equality equivalence broken at p = {p}: group {}, normalizer {}, shape {}",
                lhs_eq, rhs_eq, shape
            ),
            detail,
        ));
    }
    Ok(Outcome::pass(detail))
}

fn check_class_counts(t: &CharacterTable, p: u64) -> Result<Outcome, String> {
    if p == 2 {
        return Ok(Outcome::skip(
            "class-count inequalities are stated for odd primes".into(),
        ));
    }
    let core = p_prime_core(&t.group, p, &t.classes).str_err()?;
    let normals = if core.order() > 1 { vec![core] } else { Vec::new() };
    let rep = verify_class_count_inequalities(t, p, &normals).str_err()?;
    let mut problems = Vec::new();
    if !rep.pareg_le_parat {
        problems.push("almost-regular classes outnumber almost-rational characters".to_string());
    }
    if !rep.preg_le_prat {
        problems.push("regular classes outnumber rational characters".to_string());
    }
    for q in &rep.quotient_checks {
        if !q.holds {
            problems.push(format!(
                "quotient bound fails over the normal subgroup of order {}",
                q.normal_order
            ));
        }
    }

    // Galois fixed-point counts: conjugating rows by sigma_m and raising
    // classes to the m-th power are permutations with equal fixed-point
    // counts, for every m prime to the exponent.
    let mut ms = unit_group_generators(t.exponent);
    if t.exponent > 2 {
        ms.push(t.exponent - 1);
    }
    ms.sort_unstable();
    ms.dedup();
    for &m in &ms {
        let fixed_rows = (0..t.k())
            .map(|r| t.galois_conjugate_row(r, m).str_err())
            .collect::<Result<Vec<usize>, String>>()?
            .iter()
            .enumerate()
            .filter(|(r, image)| r == *image)
            .count();
        let pm = power_map(&t.group, &t.classes, m as i64);
        let fixed_classes = pm.iter().enumerate().filter(|(c, image)| c == *image).count();
        if fixed_rows != fixed_classes {
            problems.push(format!(
                "sigma_{m} fixes {fixed_rows} rows but {fixed_classes} classes"
            ));
        }
    }

    let detail = Some(json!({
        "p": p,
        "almost_regular_classes": rep.n_cl_pareg,
        "almost_rational_rows": rep.n_parat,
        "quotient_checks": rep.quotient_checks.len(),
        "galois_elements_checked": ms.len(),
    }));
    if problems.is_empty() {
        Ok(Outcome::pass(detail))
    } else {
        Ok(Outcome::fail(problems.join("; "), detail))
    }
}

fn check_restriction(t: &CharacterTable, p: u64) -> Result<Outcome, String> {
    if t.k() > RESTRICTION_CLASS_CAP {
        return Ok(Outcome::skip(format!(
            "restriction cross-check capped at {RESTRICTION_CLASS_CAP} parent classes"
        )));
    }
    let order = t.group.order();
    let syl = sylow_subgroup(&t.group, &t.classes, p).str_err()?;
    let mut candidates: Vec<Group> = Vec::new();
    let closure = normal_closure(&t.group, syl.generators()).str_err()?;
    if closure.order() < order {
        candidates.push(closure);
    }
    let derived = derived_subgroup(&t.group).str_err()?;
    if derived.order() < order && (order / derived.order()) % p != 0 {
        let duplicate = candidates.iter().any(|c| {
            c.order() == derived.order() && derived.generators().iter().all(|g| c.contains(g))
        });
        if !duplicate {
            candidates.push(derived);
        }
    }
    if candidates.is_empty() {
        return Ok(Outcome::skip(
            "no proper normal subgroup of index prime to p".into(),
        ));
    }

    let mut ok = true;
    let mut rows = 0usize;
    let mut pairs = 0usize;
    for n in &candidates {
        let rep = verify_normal_restriction_equivalence(t, n, p).str_err()?;
        ok &= rep.iff_holds;
        rows += rep.rows_checked;
        pairs += rep.constituent_pairs;
    }
    let detail = Some(json!({
        "p": p,
        "subgroups_checked": candidates.len(),
        "rows_checked": rows,
        "constituent_pairs": pairs,
    }));
    if ok {
        Ok(Outcome::pass(detail))
    } else {
        Ok(Outcome::fail(
            format!("restriction equivalence fails at p = {p}"),
            detail,
        ))
    }
}

fn check_mckay_navarro(t: &CharacterTable, p: u64) -> Result<Outcome, String> {
    let solvable = is_solvable(&t.group);
    let rep = mckay_navarro_check(t, p).str_err()?;
    let detail = serde_json::to_value(&rep).ok();
    if rep.equal {
        Ok(Outcome::pass(detail))
    } else if solvable {
        Ok(Outcome::fail(
            format!(
                "solvable group breaks the normalizer count equality at p = {p}: {} vs {}",
                rep.lhs, rep.rhs
            ),
            detail,
        ))
    } else {
        Ok(Outcome::pass_noted(
            format!(
                "{COUNTEREXAMPLE_PREFIX}almost-rational p'-degree counts {} vs {} differ from the Sylow normalizer (equality is only proved for solvable groups)",
                rep.lhs, rep.rhs
            ),
            detail,
        ))
    }
}

fn check_detector(t: &CharacterTable, p: u64) -> Result<Outcome, String> {
    let v = detect_cyclic_sylow(t, p).str_err()?;
    let detail = serde_json::to_value(&v).ok();
    if v.actual_cyclic && !v.in_sp {
        return Ok(Outcome::fail(
            format!(
                "cyclic Sylow {p}-subgroup but the almost-rational count {} avoids S_{p}",
                v.count
            ),
            detail,
        ));
    }
    if v.in_sp && !v.actual_cyclic {
        return Ok(Outcome::pass_noted(
            format!(
                "{COUNTEREXAMPLE_PREFIX}almost-rational count {} lies in S_{p} yet the Sylow {p}-subgroup is not cyclic — candidate answer to the converse question",
                v.count
            ),
            detail,
        ));
    }
    Ok(Outcome::pass(detail))
}

const WITNESS_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

fn check_pq_witness(t: &CharacterTable) -> Result<Outcome, String> {
    if t.group.order() == 1 {
        return Ok(Outcome::skip(
            "the trivial group has only the principal character".into(),
        ));
    }
    let mut witnesses = Vec::new();
    let mut missing = Vec::new();
    for (i, &p) in WITNESS_PRIMES.iter().enumerate() {
        for &q in &WITNESS_PRIMES[i + 1..] {
            match find_pq_rational_witness(t, p, q).str_err()? {
                Some(row) => witnesses.push(json!({ "p": p, "q": q, "row": row })),
                None => missing.push(format!("({p},{q})")),
            }
        }
    }
    let detail = Some(json!({
        "pairs_checked": witnesses.len() + missing.len(),
        "witnesses": witnesses,
    }));
    if missing.is_empty() {
        Ok(Outcome::pass(detail))
    } else {
        Ok(Outcome::fail(
            format!(
                "no nontrivial character rational at both primes for {}",
                missing.join(", ")
            ),
            detail,
        ))
    }
}

fn check_affine_oracle(entry: &CorpusEntry) -> Result<Outcome, String> {
    use affine_classcount::{
        burnside_orbit_count, k_semidirect, k_semidirect_oracle, metacyclic_k, AffineError,
    };

    let spec = entry.affine.as_ref().expect("affine job on an affine entry");
    let h = match spec.build() {
        Ok(h) => h,
        Err(AffineError::CapExceeded { .. }) => {
            return Ok(Outcome::skip(
                "point count exceeds the enumeration cap; certificate-only entry".into(),
            ));
        }
        Err(e) => return Err(e.to_string()),
    };
    let rep = k_semidirect(&h).str_err()?;
    let mut problems = Vec::new();

    let averaged = burnside_orbit_count(&h).str_err()?;
    if averaged != BigUint::from(rep.orbit_count) {
        problems.push(format!(
            "fixed-point average {averaged} disagrees with the enumerated orbit count {}",
            rep.orbit_count
        ));
    }
    let mut oracle_checked = false;
    match k_semidirect_oracle(&h) {
        Ok(k2) => {
            oracle_checked = true;
            if k2 != rep.k_hv {
                problems.push(format!(
                    "permutation-group oracle counts {k2} classes, orbit method counts {}",
                    rep.k_hv
                ));
            }
        }
        Err(AffineError::CapExceeded { .. }) => {}
        Err(AffineError::Group(group_engine::GroupError::OrderCapExceeded(_))) => {}
        Err(e) => return Err(e.to_string()),
    }
    if h.n == 1 {
        let closed = metacyclic_k(h.p, h.order).str_err()?;
        if closed != rep.k_hv {
            problems.push(format!(
                "one-dimensional closed form gives {closed}, orbit method {}",
                rep.k_hv
            ));
        }
    }
    if Ratio::from_integer(rep.k_hv) < rep.clifford_lower {
        problems.push("class number falls below the Clifford lower bound".to_string());
    }
    if let Some(upper) = rep.sandwich_upper {
        if rep.k_hv <= h.p && Ratio::from_integer(rep.k_hv) > upper {
            problems.push("class number exceeds the sandwich upper bound".to_string());
        }
    }

    let detail = Some(json!({
        "p": h.p,
        "n": h.n,
        "group_order": h.order,
        "k_hv": rep.k_hv,
        "orbit_count": rep.orbit_count,
        "oracle_checked": oracle_checked,
    }));
    if problems.is_empty() {
        Ok(Outcome::pass(detail))
    } else {
        Ok(Outcome::fail(problems.join("; "), detail))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use group_engine::GroupSpec;

    fn named(construct: &str, params: &[u64]) -> GroupSpec {
        GroupSpec::Named {
            construct: construct.to_string(),
            params: params.to_vec(),
            matrices: None,
            factors: None,
        }
    }

    fn entry(id: &str, spec: GroupSpec, primes: &[u64]) -> CorpusEntry {
        CorpusEntry {
            id: id.to_string(),
            group: Some(spec),
            affine: None,
            primes: primes.to_vec(),
        }
    }

    fn mini_manifest() -> CorpusManifest {
        CorpusManifest {
            schema: crate::corpus::MANIFEST_SCHEMA.to_string(),
            version: "test-1".to_string(),
            entries: vec![
                entry("sym-3", named("sym", &[3]), &[2, 3]),
                entry("cyclic-12", named("cyclic", &[12]), &[2, 3]),
                entry("frobenius-5-1-4", named("frobenius", &[5, 1, 4]), &[2, 5]),
            ],
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(Suite::parse(suite.name()).unwrap(), suite);
        }
        assert!(Suite::parse("thm").is_err());
    }

    #[test]
    fn lower_bound_suite_passes_on_small_corpus() {
        let m = mini_manifest();
        let report = run_suite(Suite::LowerBound, &m, Some(2), false).unwrap();
        assert!(!report.has_failures(), "failures: {:?}", report.failures);
        // sym-3 at 2,3; cyclic-12 at 2,3; frobenius at 2,5
        assert_eq!(report.summary.checks, 6);
        assert_eq!(report.summary.passed, 6);
    }

    #[test]
    fn serial_and_parallel_agree() {
        let m = mini_manifest();
        let a = run_suite(Suite::Detector, &m, Some(2), false).unwrap();
        let b = run_suite(Suite::Detector, &m, Some(1), false).unwrap();
        let ja = crate::report::to_json(&a);
        let jb = crate::report::to_json(&b);
        assert_eq!(ja, jb);
    }

    #[test]
    fn fail_fast_stops_after_first_failure() {
        // An entry whose group cannot be built fails its check.
        let mut m = mini_manifest();
        m.entries.insert(
            0,
            CorpusEntry {
                id: "broken".to_string(),
                group: Some(named("nonsense", &[])),
                affine: None,
                primes: vec![2],
            },
        );
        let report = run_suite(Suite::LowerBound, &m, None, true).unwrap();
        assert!(report.has_failures());
        assert_eq!(report.results.len(), 1);
    }
}
