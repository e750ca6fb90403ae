//! The built-in group corpus and manifest handling.
//!
//! A manifest names the inputs a verification run works through: each
//! entry is either a permutation-group construction or a matrix group
//! over a prime field, plus the primes to test it at. The built-in
//! corpus samples the cyclic, dihedral, symmetric, and alternating
//! families, every fixed-point-free Frobenius action C_{p^n} : C_e for
//! p <= 61, abelian p-groups through order 729, direct products mixing
//! p-parts, and the standard affine instances (among them SL(2,5) on
//! F_11^2, whose semidirect product has class number 10).

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use affine_classcount::MatGroupSpec;
use group_engine::GroupSpec;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Schema tag stamped on every manifest document.
pub const MANIFEST_SCHEMA: &str = "charlab/manifest/v1";

/// Version tag of the built-in corpus.
pub const BUILTIN_MANIFEST_VERSION: &str = "builtin-1";

/// One corpus entry: exactly one of `group` (permutation-group spec) or
/// `affine` (matrix group over F_p) is set.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub affine: Option<MatGroupSpec>,
    pub primes: Vec<u64>,
}

impl CorpusEntry {
    pub fn is_group(&self) -> bool {
        self.group.is_some()
    }

    pub fn is_affine(&self) -> bool {
        self.affine.is_some()
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CorpusManifest {
    pub schema: String,
    pub version: String,
    pub entries: Vec<CorpusEntry>,
}

impl CorpusManifest {
    pub fn load(path: &Path) -> Result<CorpusManifest, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read manifest {}: {e}", path.display())))?;
        let manifest: CorpusManifest = serde_json::from_str(&text).map_err(|e| {
            CliError::Input(format!("manifest {} is not valid JSON: {e}", path.display()))
        })?;
        manifest.validate()?;
        Ok(manifest)
    }

    /// Structural validation: schema tag, unique non-empty ids, exactly one
    /// spec per entry, primes actually prime. Group construction is lazy;
    /// build errors surface per entry when a command uses it.
    pub fn validate(&self) -> Result<(), CliError> {
        if self.schema != MANIFEST_SCHEMA {
            return Err(CliError::Input(format!(
                "unsupported manifest schema {:?} (expected {MANIFEST_SCHEMA:?})",
                self.schema
            )));
        }
        let mut seen = BTreeSet::new();
        for entry in &self.entries {
            if entry.id.is_empty() {
                return Err(CliError::Input("manifest entry with empty id".into()));
            }
            if !seen.insert(entry.id.as_str()) {
                return Err(CliError::Input(format!("duplicate manifest id {:?}", entry.id)));
            }
            match (entry.is_group(), entry.is_affine()) {
                (true, false) | (false, true) => {}
                _ => {
                    return Err(CliError::Input(format!(
                        "entry {:?} must set exactly one of \"group\" and \"affine\"",
                        entry.id
                    )))
                }
            }
            for &p in &entry.primes {
                if !bounds_numbers::is_prime_u64(p) {
                    return Err(CliError::Input(format!(
                        "entry {:?} lists {p}, which is not prime",
                        entry.id
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn find(&self, id: &str) -> Option<&CorpusEntry> {
        self.entries.iter().find(|e| e.id == id)
    }
}

fn named(construct: &str, params: &[u64]) -> GroupSpec {
    GroupSpec::Named {
        construct: construct.to_string(),
        params: params.to_vec(),
        matrices: None,
        factors: None,
    }
}

fn product(factors: Vec<GroupSpec>) -> GroupSpec {
    GroupSpec::Named {
        construct: "direct_product".to_string(),
        params: Vec::new(),
        matrices: None,
        factors: Some(factors),
    }
}

fn prime_divisors(mut order: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= order {
        if order % d == 0 {
            out.push(d);
            while order % d == 0 {
                order /= d;
            }
        }
        d += 1;
    }
    if order > 1 {
        out.push(order);
    }
    out
}

fn group_entry(id: &str, spec: GroupSpec, order: u64) -> CorpusEntry {
    CorpusEntry {
        id: id.to_string(),
        group: Some(spec),
        affine: None,
        primes: prime_divisors(order),
    }
}

fn affine_entry(id: &str, spec: MatGroupSpec) -> CorpusEntry {
    let p = spec.p;
    CorpusEntry {
        id: id.to_string(),
        group: None,
        affine: Some(spec),
        primes: vec![p],
    }
}

fn mat_spec(p: u64, n: usize, generators: Vec<Vec<Vec<u64>>>) -> MatGroupSpec {
    MatGroupSpec { p, n, generators }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    out.sort_unstable();
    out
}

/// Generators of the standard copy of SL(2,5) inside GL(2,11); the
/// corresponding semidirect product with F_11^2 has order 14520.
pub const SL2_5_MOD_11: [[u64; 4]; 2] = [[0, 1, 10, 4], [0, 2, 5, 0]];

fn sl2_5_f11_spec() -> MatGroupSpec {
    mat_spec(
        11,
        2,
        SL2_5_MOD_11
            .iter()
            .map(|m| vec![vec![m[0], m[1]], vec![m[2], m[3]]])
            .collect(),
    )
}

/// The built-in corpus. Family sampling favors coverage over bulk: the
/// expensive table costs concentrate in entries whose exponent is large,
/// so the cyclic family stops at 343 and large abelian orders come from
/// products of small cyclic factors instead.
pub fn default_manifest() -> CorpusManifest {
    let mut entries = Vec::new();

    for n in (2u64..=32).chain([48, 64, 81, 100, 125, 128, 243, 256, 343]) {
        entries.push(group_entry(&format!("cyclic-{n}"), named("cyclic", &[n]), n));
    }
    for n in (2u64..=12).chain([15, 16, 21, 32, 64, 128, 256, 500]) {
        entries.push(group_entry(&format!("dihedral-{n}"), named("dihedral", &[n]), 2 * n));
    }
    let mut fact = 1u64;
    for n in 2u64..=6 {
        fact *= n;
        entries.push(group_entry(&format!("sym-{n}"), named("sym", &[n]), fact));
        if n >= 3 {
            entries.push(group_entry(&format!("alt-{n}"), named("alt", &[n]), fact / 2));
        }
    }
    for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61] {
        for e in divisors(p - 1) {
            if e >= 2 {
                entries.push(group_entry(
                    &format!("frobenius-{p}-1-{e}"),
                    named("frobenius", &[p, 1, e]),
                    p * e,
                ));
            }
        }
    }
    for (p, e) in [(5u64, 2u64), (5, 4), (13, 3), (17, 4)] {
        entries.push(group_entry(
            &format!("frobenius-{p}-2-{e}"),
            named("frobenius", &[p, 2, e]),
            p * p * e,
        ));
    }
    entries.push(group_entry("quaternion", named("quaternion", &[]), 8));
    entries.push(group_entry("sl2_5", named("sl2_5", &[]), 120));
    entries.push(group_entry(
        "navarro-affine",
        GroupSpec::Named {
            construct: "elementary_abelian_semidirect".to_string(),
            params: vec![11, 2],
            matrices: Some(SL2_5_MOD_11.iter().map(|m| m.to_vec()).collect()),
            factors: None,
        },
        14520,
    ));

    let cyclic_products: [&[u64]; 17] = [
        &[2, 2],
        &[2, 4],
        &[4, 4],
        &[2, 2, 2],
        &[2, 8],
        &[8, 8],
        &[16, 16],
        &[8, 8, 8],
        &[3, 3],
        &[3, 9],
        &[3, 3, 3],
        &[9, 9],
        &[27, 3],
        &[27, 27],
        &[5, 5],
        &[25, 5],
        &[7, 7],
    ];
    for parts in cyclic_products {
        let id = parts.iter().map(|n| format!("c{n}")).collect::<Vec<_>>().join("x");
        let spec = product(parts.iter().map(|&n| named("cyclic", &[n])).collect());
        entries.push(group_entry(&id, spec, parts.iter().product()));
    }
    entries.push(group_entry(
        "q8xc3",
        product(vec![named("quaternion", &[]), named("cyclic", &[3])]),
        24,
    ));
    entries.push(group_entry(
        "s3xc5",
        product(vec![named("sym", &[3]), named("cyclic", &[5])]),
        30,
    ));
    entries.push(group_entry(
        "a4xc5",
        product(vec![named("alt", &[4]), named("cyclic", &[5])]),
        60,
    ));
    entries.push(group_entry(
        "d4xc9",
        product(vec![named("dihedral", &[4]), named("cyclic", &[9])]),
        72,
    ));

    entries.push(affine_entry("sl2_5-f11", sl2_5_f11_spec()));
    entries.push(affine_entry("c2-f5", mat_spec(5, 1, vec![vec![vec![4]]])));
    entries.push(affine_entry("c4-f5", mat_spec(5, 1, vec![vec![vec![2]]])));
    entries.push(affine_entry("c3-f7", mat_spec(7, 1, vec![vec![vec![2]]])));
    entries.push(affine_entry("c3-f13", mat_spec(13, 1, vec![vec![vec![3]]])));
    entries.push(affine_entry(
        "c3-gl2-f2",
        mat_spec(2, 2, vec![vec![vec![0, 1], vec![1, 1]]]),
    ));
    entries.push(affine_entry(
        "neg-id-f3",
        mat_spec(3, 2, vec![vec![vec![2, 0], vec![0, 2]]]),
    ));
    entries.push(affine_entry(
        "q8-f3",
        mat_spec(3, 2, vec![vec![vec![0, 2], vec![1, 0]], vec![vec![1, 1], vec![1, 2]]]),
    ));
    entries.push(affine_entry(
        "d4-f5",
        mat_spec(5, 2, vec![vec![vec![2, 0], vec![0, 3]], vec![vec![0, 1], vec![1, 0]]]),
    ));
    entries.push(affine_entry(
        "dic3-f7",
        mat_spec(7, 2, vec![vec![vec![0, 1], vec![6, 0]], vec![vec![3, 0], vec![0, 5]]]),
    ));
    entries.push(affine_entry(
        "neg-id-f7207",
        mat_spec(
            7207,
            3,
            vec![vec![
                vec![7206, 0, 0],
                vec![0, 7206, 0],
                vec![0, 0, 7206],
            ]],
        ),
    ));

    let manifest = CorpusManifest {
        schema: MANIFEST_SCHEMA.to_string(),
        version: BUILTIN_MANIFEST_VERSION.to_string(),
        entries,
    };
    debug_assert!(manifest.validate().is_ok());
    manifest
}
