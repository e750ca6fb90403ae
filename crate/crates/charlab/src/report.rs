//! Report documents emitted by the commands.
//!
//! Every top-level document carries a `schema` tag and the tool version,
//! and is serialized through [`to_json`] so that two runs on the same
//! inputs and version produce byte-identical output. Nothing
//! run-dependent (timestamps, host names, cache state) belongs in a
//! report.

use serde::Serialize;
use serde_json::Value;

use crate::TOOL_VERSION;

pub const ANALYZE_SCHEMA: &str = "charlab/analyze/v1";
pub const AFFINE_SCHEMA: &str = "charlab/affine/v1";
pub const RUN_SCHEMA: &str = "charlab/report/v1";
pub const SP_SCHEMA: &str = "charlab/sp/v1";
pub const PRIME_CONDITIONS_SCHEMA: &str = "charlab/prime-conditions/v1";

/// Canonical serialization: pretty JSON, keys in map order (structs are
/// converted through `serde_json::Value`, whose object map is sorted), and
/// a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("report serialization cannot fail");
    let mut s = serde_json::to_string_pretty(&v).expect("report serialization cannot fail");
    s.push('\n');
    s
}

/// Summary of the group a command analyzed.
#[derive(Clone, Debug, Serialize)]
pub struct InputDescription {
    /// How the input was named on the command line.
    pub source: String,
    pub degree: usize,
    pub order: u64,
    pub classes: usize,
    pub fingerprint: String,
}

/// Output of `charlab analyze`.
#[derive(Clone, Debug, Serialize)]
pub struct AnalyzeReport {
    pub schema: String,
    pub tool_version: String,
    pub input: InputDescription,
    pub prime: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
    pub profile: Value,
    /// Absent when the prime does not divide the group order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detector: Option<Value>,
    /// Absent when the prime does not divide the group order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mckay: Option<Value>,
}

/// Output of `charlab affine`.
#[derive(Clone, Debug, Serialize)]
pub struct AffineReport {
    pub schema: String,
    pub tool_version: String,
    /// The class-count report, or the lower-bound certificate when the
    /// run used `--certificate`.
    pub result: Value,
    /// Divisor-sum set membership scan, present for enumerated runs in
    /// dimension at least two.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sp_scan: Option<Value>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

/// One verifier check inside a suite run: an entry at one prime (or one
/// entry for suites that are not per-prime).
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct RunSummary {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

/// Output of `charlab verify`: every check the suite ran, in manifest
/// order, plus the collected hard failures and flagged (non-failing)
/// potential counterexamples.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub schema: String,
    pub tool_version: String,
    pub manifest_version: String,
    pub suite: String,
    pub summary: RunSummary,
    pub results: Vec<CheckResult>,
    pub failures: Vec<String>,
    pub counterexamples: Vec<String>,
}

impl RunReport {
    pub fn new(suite: &str, manifest_version: &str, results: Vec<CheckResult>) -> RunReport {
        let mut summary = RunSummary {
            checks: results.len(),
            ..RunSummary::default()
        };
        let mut failures = Vec::new();
        for r in &results {
            match r.status {
                CheckStatus::Pass => summary.passed += 1,
                CheckStatus::Skip => summary.skipped += 1,
                CheckStatus::Fail => {
                    summary.failed += 1;
                    let prime = r.prime.map(|p| format!(" at p = {p}")).unwrap_or_default();
                    let note = r.note.as_deref().unwrap_or("check failed");
                    failures.push(format!("{}{prime}: {note}", r.id));
                }
            }
        }
        RunReport {
            schema: RUN_SCHEMA.to_string(),
            tool_version: TOOL_VERSION.to_string(),
            manifest_version: manifest_version.to_string(),
            suite: suite.to_string(),
            summary,
            results,
            failures,
            counterexamples: Vec::new(),
        }
    }

    pub fn has_failures(&self) -> bool {
        self.summary.failed > 0
    }

    /// Flat CSV summary of the run, one line per check.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("suite,id,prime,status,note\n");
        for r in &self.results {
            let status = match r.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "fail",
                CheckStatus::Skip => "skip",
            };
            let prime = r.prime.map(|p| p.to_string()).unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                csv_field(&self.suite),
                csv_field(&r.id),
                prime,
                status,
                csv_field(r.note.as_deref().unwrap_or(""))
            ));
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Output of `charlab sp`.
#[derive(Clone, Debug, Serialize)]
pub struct SpReport {
    pub schema: String,
    pub tool_version: String,
    pub p: u64,
    pub values: Vec<u64>,
}

/// Output of `charlab classify-prime`.
#[derive(Clone, Debug, Serialize)]
pub struct PrimeConditionsReport {
    pub schema: String,
    pub tool_version: String,
    pub verdict: Value,
}
