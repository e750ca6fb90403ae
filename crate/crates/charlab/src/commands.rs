//! Implementations behind the CLI subcommands. Each returns the rendered
//! JSON so the binary stays a thin argument-parsing shim and the behavior
//! is testable in-process.

use affine_classcount::{
    classify_prime_conditions, k_lower_bound_certificate, k_semidirect, metacyclic_k,
    sp_exclusion_scan, AffineError, ClassCountReport, MatGroupSpec, Method,
};
use char_table::character_table;
use group_engine::{conjugacy_classes, fingerprint};
use num_rational::Ratio;
use rationality_lab::{detect_cyclic_sylow, mckay_navarro_check, rationality_profile, sp_set};
use serde::Serialize;
use serde_json::Value;

use crate::cache::{self, AnalysisFragment};
use crate::corpus::CorpusManifest;
use crate::input::{resolve_affine, resolve_group, AffineArgs, AffineInput};
use crate::report::{
    to_json, AffineReport, AnalyzeReport, InputDescription, PrimeConditionsReport, RunReport,
    SpReport, AFFINE_SCHEMA, ANALYZE_SCHEMA, PRIME_CONDITIONS_SCHEMA, SP_SCHEMA,
};
use crate::suites::{run_suite, Suite};
use crate::{CliError, TOOL_VERSION};

fn val<T: Serialize>(x: &T) -> Result<Value, CliError> {
    serde_json::to_value(x).map_err(|e| CliError::Assertion(format!("serialization failed: {e}")))
}

pub struct AnalyzeOpts<'a> {
    pub input: &'a str,
    pub prime: u64,
    pub manifest: &'a CorpusManifest,
    pub no_cache: bool,
}

/// `charlab analyze`: rationality profile at one prime, plus the
/// cyclic-Sylow detector verdict and the normalizer count comparison when
/// the prime divides the group order.
pub fn cmd_analyze(opts: &AnalyzeOpts<'_>) -> Result<String, CliError> {
    if !bounds_numbers::is_prime_u64(opts.prime) {
        return Err(CliError::Input(format!(
            "--prime requires a prime, got {}",
            opts.prime
        )));
    }
    let resolved = resolve_group(opts.input, opts.manifest)?;
    let group = resolved.spec.build()?;
    let classes = conjugacy_classes(&group);
    let fp = fingerprint(&group, &classes);
    let input = InputDescription {
        source: resolved.source,
        degree: group.degree(),
        order: group.order(),
        classes: classes.count(),
        fingerprint: fp.clone(),
    };
    let divides = group.order() % opts.prime == 0;
    let warning = (!divides).then(|| {
        format!(
            "prime {} does not divide the group order {}; the detector and normalizer comparison are skipped",
            opts.prime,
            group.order()
        )
    });

    let dir = cache::cache_dir(opts.no_cache);
    let cached = dir
        .as_deref()
        .and_then(|d| cache::lookup(d, &fp, opts.prime));
    let fragment = match cached {
        Some(fragment) => {
            eprintln!("charlab: cache hit for {fp} at p = {}", opts.prime);
            fragment
        }
        None => {
            let t = character_table(group)?;
            let profile = val(&rationality_profile(&t, opts.prime)?)?;
            let (detector, mckay) = if divides {
                (
                    Some(val(&detect_cyclic_sylow(&t, opts.prime)?)?),
                    Some(val(&mckay_navarro_check(&t, opts.prime)?)?),
                )
            } else {
                (None, None)
            };
            let fragment = AnalysisFragment {
                profile,
                detector,
                mckay,
            };
            if let Some(d) = dir.as_deref() {
                cache::store(d, &fp, opts.prime, &fragment);
                eprintln!("charlab: cached analysis for {fp} at p = {}", opts.prime);
            }
            fragment
        }
    };

    let report = AnalyzeReport {
        schema: ANALYZE_SCHEMA.to_string(),
        tool_version: TOOL_VERSION.to_string(),
        input,
        prime: opts.prime,
        warning,
        profile: fragment.profile,
        detector: fragment.detector,
        mckay: fragment.mckay,
    };
    Ok(to_json(&report))
}

pub struct AffineOpts<'a> {
    pub input: Option<&'a str>,
    pub p: Option<u64>,
    pub n: Option<usize>,
    pub gens: Option<&'a str>,
    pub cyclic: Option<u64>,
    pub certificate: bool,
    pub manifest: &'a CorpusManifest,
}

/// `charlab affine`: class number of the affine group `F_p^n : H`, via
/// orbit enumeration, the one-dimensional closed form, or — with
/// `--certificate` — a symbolic lower bound that never touches the p^n
/// points.
pub fn cmd_affine(opts: &AffineOpts<'_>) -> Result<String, CliError> {
    let args = AffineArgs {
        input: opts.input,
        p: opts.p,
        n: opts.n,
        gens: opts.gens,
        cyclic: opts.cyclic,
    };
    let resolved = resolve_affine(&args, opts.manifest)?;
    let (result, sp_scan) = match resolved {
        AffineInput::Cyclic { p, e } => {
            if opts.certificate {
                return Err(CliError::input(
                    "--certificate needs explicit generator matrices; --cyclic already avoids enumeration",
                ));
            }
            let k = metacyclic_k(p, e)?;
            let rep = ClassCountReport {
                p,
                n: 1,
                group_order: e,
                k_hv: k,
                method: Method::ClosedForm,
                orbit_count: 1 + (p - 1) / e,
                orbits: Vec::new(),
                k_h: e,
                clifford_lower: Ratio::from_integer(k),
                sandwich_upper: None,
            };
            (val(&rep)?, None)
        }
        AffineInput::Spec { spec, .. } => {
            if opts.certificate {
                let flat: Vec<Vec<u64>> = spec.generators.iter().map(|m| m.concat()).collect();
                let cert = k_lower_bound_certificate(spec.p, spec.n, &flat)?;
                (val(&cert)?, None)
            } else {
                let h = build_enumerated(&spec)?;
                let rep = k_semidirect(&h)?;
                let scan = if h.n >= 2 {
                    Some(val(&sp_exclusion_scan(&h)?)?)
                } else {
                    None
                };
                (val(&rep)?, scan)
            }
        }
    };
    let report = AffineReport {
        schema: AFFINE_SCHEMA.to_string(),
        tool_version: TOOL_VERSION.to_string(),
        result,
        sp_scan,
    };
    Ok(to_json(&report))
}

fn build_enumerated(spec: &MatGroupSpec) -> Result<affine_classcount::MatGroup, CliError> {
    spec.build().map_err(|e| match e {
        AffineError::CapExceeded { .. } => CliError::Resource(format!(
            "{e}; rerun with --certificate for a symbolic lower bound"
        )),
        other => other.into(),
    })
}

/// `charlab verify`: run one suite over the manifest. The caller prints
/// the returned JSON and decides the exit code from the report.
pub fn cmd_verify(
    suite: &str,
    manifest: &CorpusManifest,
    jobs: Option<usize>,
    fail_fast: bool,
) -> Result<(RunReport, String), CliError> {
    let suite = Suite::parse(suite)?;
    let report = run_suite(suite, manifest, jobs, fail_fast)?;
    let rendered = to_json(&report);
    Ok((report, rendered))
}

/// `charlab sp`: the candidate set `S_p = {e + (p−1)/e : e | p−1}`.
pub fn cmd_sp(prime: u64) -> Result<String, CliError> {
    let sp = sp_set(prime)?;
    let report = SpReport {
        schema: SP_SCHEMA.to_string(),
        tool_version: TOOL_VERSION.to_string(),
        p: sp.p,
        values: sp.values,
    };
    Ok(to_json(&report))
}

/// `charlab classify-prime`: arithmetic conditions on p that force extra
/// elements into `S_p` for large primes.
pub fn cmd_classify_prime(prime: u64) -> Result<String, CliError> {
    let verdict = classify_prime_conditions(prime)?;
    let report = PrimeConditionsReport {
        schema: PRIME_CONDITIONS_SCHEMA.to_string(),
        tool_version: TOOL_VERSION.to_string(),
        verdict: val(&verdict)?,
    };
    Ok(to_json(&report))
}
