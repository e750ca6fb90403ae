//! End-to-end tests of the `charlab` binary: argument handling, exit
//! codes, report shapes, determinism, and the result cache.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn charlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charlab"))
        .args(args)
        // keep host cache configuration out of the tests
        .env("CHARLAB_CACHE_DIR", "")
        .output()
        .expect("binary runs")
}

fn charlab_with_cache(args: &[&str], cache: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charlab"))
        .args(args)
        .env("CHARLAB_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "expected success, stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn analyze_reports_profile_counts() {
    let out = charlab(&["analyze", "frobenius(17,1,4)", "--prime", "17"]);
    let v = stdout_json(&out);
    assert_eq!(v["input"]["order"], 68);
    assert_eq!(v["input"]["classes"], 8);
    assert_eq!(v["profile"]["n_parat"], 8);
    assert_eq!(v["profile"]["n_pprime_parat"], 8);
    assert_eq!(v["profile"]["n_b0_pprime_parat"], 8);
    assert_eq!(v["mckay"]["equal"], true);
}

#[test]
fn analyze_detects_cyclic_sylow_of_sym4() {
    let out = charlab(&["analyze", "sym(4)", "--prime", "3"]);
    let v = stdout_json(&out);
    assert_eq!(v["detector"]["actual_cyclic"], true);
    assert_eq!(v["detector"]["agree"], true);
    assert_eq!(v["detector"]["in_sp"], true);
}

#[test]
fn analyze_accepts_corpus_ids_and_spec_files() {
    let out = charlab(&["analyze", "dihedral-6", "--prime", "3"]);
    let v = stdout_json(&out);
    assert_eq!(v["input"]["order"], 12);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c3.json");
    fs::write(&path, r#"{"degree":3,"generators":[[1,2,0]]}"#).unwrap();
    let out = charlab(&["analyze", path.to_str().unwrap(), "--prime", "3"]);
    let v = stdout_json(&out);
    assert_eq!(v["input"]["order"], 3);
    assert_eq!(v["profile"]["n_parat"], 3);
}

#[test]
fn analyze_rejects_bad_permutation_with_diagnostics() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, r#"{"degree":3,"generators":[[0,0,2]]}"#).unwrap();
    let out = charlab(&["analyze", path.to_str().unwrap(), "--prime", "3"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("permutation"), "stderr: {err}");
}

#[test]
fn analyze_rejects_composite_prime_and_missing_args() {
    let out = charlab(&["analyze", "sym(3)", "--prime", "4"]);
    assert_eq!(code(&out), 2);
    // clap's own usage errors also exit 2
    let out = charlab(&["analyze", "sym(3)"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn analyze_warns_when_prime_is_coprime_to_the_order() {
    let out = charlab(&["analyze", "sym(3)", "--prime", "5"]);
    let v = stdout_json(&out);
    assert!(v.get("detector").is_none());
    assert!(v["warning"].as_str().unwrap().contains("does not divide"));
}

#[test]
fn analyze_out_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = charlab(&[
        "analyze",
        "cyclic(6)",
        "--prime",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["input"]["order"], 6);
}

#[test]
fn affine_sl2_5_matches_the_known_class_number() {
    let out = charlab(&["affine", "sl2_5", "--p", "11"]);
    let v = stdout_json(&out);
    assert_eq!(v["result"]["k_hv"], 10);
    assert_eq!(v["result"]["method"], "OrbitReps");
    assert_eq!(v["result"]["group_order"], 120);
    // 10 is not in S_11 = {7, 11}: this group certifies the exclusion
    assert_eq!(v["sp_scan"]["in_sp"], false);
    assert_eq!(v["sp_scan"]["counterexample"], false);
    assert_eq!(v["sp_scan"]["sp_values"], serde_json::json!([7, 11]));

    // mismatched characteristic is an input error
    let out = charlab(&["affine", "sl2_5", "--p", "13"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn affine_cyclic_closed_form() {
    let out = charlab(&["affine", "--p", "13", "--cyclic", "3"]);
    let v = stdout_json(&out);
    assert_eq!(v["result"]["k_hv"], 7);
    assert_eq!(v["result"]["method"], "ClosedForm");
    // no enumeration happens, so huge characteristics work too
    let out = charlab(&["affine", "--p", "1000003", "--cyclic", "2"]);
    let v = stdout_json(&out);
    assert_eq!(v["result"]["k_hv"], 500003);

    let out = charlab(&["affine", "--p", "13", "--cyclic", "5"]);
    assert_eq!(code(&out), 2, "5 does not divide 12");
}

#[test]
fn affine_explicit_generators() {
    let out = charlab(&[
        "affine",
        "--p",
        "3",
        "--n",
        "2",
        "--gens",
        "[[[0,1],[1,0]]]",
    ]);
    let v = stdout_json(&out);
    // swap action on F_3^2: orbits {00}, {01,10}, {02,20}, {11}, {12,21}, {22}
    assert_eq!(v["result"]["orbit_count"], 6);
    assert_eq!(v["result"]["group_order"], 2);
}

#[test]
fn affine_cap_suggests_certificate_and_certificate_works() {
    // 7207^3 points exceed the enumeration cap
    let out = charlab(&["affine", "neg-id-f7207"]);
    assert_eq!(code(&out), 3);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("--certificate"), "stderr: {err}");

    let out = charlab(&["affine", "neg-id-f7207", "--certificate"]);
    let v = stdout_json(&out);
    assert_eq!(v["result"]["exceeds_p"], true);
    assert_eq!(v["result"]["group_order"], 2);
    assert_eq!(v["result"]["k_h"], 2);
    // orbit count (7207^3 + 1)/2 arrives as a decimal string
    assert_eq!(
        v["result"]["orbit_count"],
        "187168849372",
        "orbits of negation on F_7207^3"
    );
}

#[test]
fn sp_set_and_composite_rejection() {
    let out = charlab(&["sp", "--prime", "13"]);
    let v = stdout_json(&out);
    assert_eq!(v["values"], serde_json::json!([7, 8, 13]));
    let out = charlab(&["sp", "--prime", "4"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn classify_prime_conditions() {
    let out = charlab(&["classify-prime", "--prime", "11"]);
    let v = stdout_json(&out);
    assert_eq!(v["verdict"]["cond_i"], false);
    assert_eq!(v["verdict"]["cond_ii"], true);
    assert_eq!(v["verdict"]["witness_ii"], 5);
    assert_eq!(v["verdict"]["any"], true);

    let out = charlab(&["classify-prime", "--prime", "13"]);
    let v = stdout_json(&out);
    assert_eq!(v["verdict"]["cond_i"], true);
    assert_eq!(v["verdict"]["witness_i"], 12);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let a = charlab(&["analyze", "dihedral(10)", "--prime", "5"]);
    let b = charlab(&["analyze", "dihedral(10)", "--prime", "5"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let a = charlab(&["affine", "sl2_5"]);
    let b = charlab(&["affine", "sl2_5"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn cache_replays_identical_reports() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["analyze", "cyclic(30)", "--prime", "5"];
    let cold = charlab_with_cache(&args, dir.path());
    assert!(cold.status.success());
    let entries = fs::read_dir(dir.path()).unwrap().count();
    assert_eq!(entries, 1, "one cache entry after a cold run");

    let warm = charlab_with_cache(&args, dir.path());
    assert!(warm.status.success());
    assert_eq!(cold.stdout, warm.stdout, "cache replay must be byte-identical");
    let err = String::from_utf8_lossy(&warm.stderr);
    assert!(err.contains("cache hit"), "stderr: {err}");

    // --no-cache bypasses the warm entry but produces the same report
    let bypass = charlab_with_cache(&["analyze", "cyclic(30)", "--prime", "5", "--no-cache"], dir.path());
    assert_eq!(cold.stdout, bypass.stdout);
    let err = String::from_utf8_lossy(&bypass.stderr);
    assert!(!err.contains("cache hit"), "stderr: {err}");
}

fn small_manifest(dir: &Path) -> String {
    let path = dir.join("manifest.json");
    fs::write(
        &path,
        r#"{
  "schema": "charlab/manifest/v1",
  "version": "cli-test-1",
  "entries": [
    { "id": "sym-3", "group": { "construct": "sym", "params": [3] }, "primes": [2, 3] },
    { "id": "cyclic-12", "group": { "construct": "cyclic", "params": [12] }, "primes": [2, 3] },
    { "id": "frobenius-5-1-4", "group": { "construct": "frobenius", "params": [5, 1, 4] }, "primes": [2, 5] },
    { "id": "c4-f5", "affine": { "p": 5, "n": 1, "generators": [[[2]]] }, "primes": [5] }
  ]
}
"#,
    )
    .unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn verify_runs_suites_over_a_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = small_manifest(dir.path());

    let out = charlab(&["verify", "--suite", "lower-bound", "--manifest", &manifest]);
    let v = stdout_json(&out);
    assert_eq!(v["suite"], "lower-bound");
    assert_eq!(v["manifest_version"], "cli-test-1");
    assert_eq!(v["summary"]["checks"], 6);
    assert_eq!(v["summary"]["failed"], 0);

    let out = charlab(&["verify", "--suite", "affine-oracle", "--manifest", &manifest]);
    let v = stdout_json(&out);
    assert_eq!(v["summary"]["checks"], 1);
    assert_eq!(v["summary"]["passed"], 1);

    let out = charlab(&["verify", "--suite", "no-such-suite", "--manifest", &manifest]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_is_order_stable_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = small_manifest(dir.path());
    let one = charlab(&[
        "verify", "--suite", "detector", "--manifest", &manifest, "--jobs", "1",
    ]);
    let two = charlab(&[
        "verify", "--suite", "detector", "--manifest", &manifest, "--jobs", "2",
    ]);
    assert!(one.status.success());
    assert_eq!(one.stdout, two.stdout);
}

#[test]
fn verify_writes_csv_summaries() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = small_manifest(dir.path());
    let csv_path = dir.path().join("run.csv");
    let out = charlab(&[
        "verify",
        "--suite",
        "pq-witness",
        "--manifest",
        &manifest,
        "--csv",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let csv = fs::read_to_string(&csv_path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("suite,id,prime,status,note"));
    // three group entries, one line each, the affine entry is not included
    assert_eq!(lines.count(), 3);
    assert!(csv.contains("pq-witness,sym-3,,pass,"));
}

#[test]
fn verify_fails_loudly_on_broken_entries() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    fs::write(
        &path,
        r#"{
  "schema": "charlab/manifest/v1",
  "version": "broken-1",
  "entries": [
    { "id": "bad", "group": { "construct": "nonsense" }, "primes": [2] },
    { "id": "sym-3", "group": { "construct": "sym", "params": [3] }, "primes": [2] }
  ]
}
"#,
    )
    .unwrap();
    let manifest = path.to_str().unwrap();
    let out = charlab(&["verify", "--suite", "lower-bound", "--manifest", manifest]);
    assert_eq!(code(&out), 1);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["summary"]["failed"], 1);
    assert_eq!(v["summary"]["passed"], 1);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("FAIL"), "stderr: {err}");

    // fail-fast stops before reaching sym-3
    let out = charlab(&[
        "verify", "--suite", "lower-bound", "--manifest", manifest, "--fail-fast",
    ]);
    assert_eq!(code(&out), 1);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["summary"]["checks"], 1);
}

#[test]
fn verify_rejects_malformed_manifests() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dup.json");
    fs::write(
        &path,
        r#"{
  "schema": "charlab/manifest/v1",
  "version": "dup-1",
  "entries": [
    { "id": "x", "group": { "construct": "sym", "params": [3] }, "primes": [2] },
    { "id": "x", "group": { "construct": "sym", "params": [4] }, "primes": [2] }
  ]
}
"#,
    )
    .unwrap();
    let out = charlab(&[
        "verify",
        "--suite",
        "detector",
        "--manifest",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("duplicate"));
}

#[test]
fn corpus_ids_cited_in_reports_are_reachable() {
    // ids used by worked examples must resolve from the built-in corpus
    for id in [
        "sym-4",
        "alt-5",
        "frobenius-17-1-4",
        "dihedral-6",
        "navarro-affine",
        "sl2_5",
    ] {
        let out = charlab(&["analyze", id, "--prime", "2"]);
        assert_eq!(code(&out), 0, "analyze {id} failed");
    }
    for id in ["sl2_5-f11", "c4-f5", "q8-f3", "neg-id-f3"] {
        let out = charlab(&["affine", id]);
        assert_eq!(code(&out), 0, "affine {id} failed");
    }
}
