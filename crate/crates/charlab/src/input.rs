//! Resolution of command-line inputs into group and matrix-group specs.
//!
//! `analyze` accepts three input forms, tried in this order:
//!
//! 1. a constructor expression such as `frobenius(17,1,4)` or `sym(4)`,
//! 2. a corpus id such as `dihedral-6`,
//! 3. a path to a JSON file holding a group spec (an explicit
//!    generator list or a named construction); `@path` forces this form.
//!
//! `affine` accepts a corpus id, the built-in name `sl2_5`, a path to a
//! JSON matrix-group spec, or explicit `--p/--n/--gens` arguments.

use std::fs;
use std::path::Path;

use affine_classcount::MatGroupSpec;
use group_engine::GroupSpec;

use crate::corpus::{CorpusManifest, SL2_5_MOD_11};
use crate::CliError;

/// A resolved `analyze` input: the spec plus the label echoed in reports.
#[derive(Debug)]
pub struct GroupInput {
    pub source: String,
    pub spec: GroupSpec,
}

/// Resolves the positional `analyze` argument against the manifest.
pub fn resolve_group(input: &str, manifest: &CorpusManifest) -> Result<GroupInput, CliError> {
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Err(CliError::input("empty input; expected a constructor expression, corpus id, or spec-file path"));
    }
    if let Some(path) = trimmed.strip_prefix('@') {
        return group_from_file(path);
    }
    if trimmed.contains('(') {
        let spec = parse_constructor(trimmed)?;
        return Ok(GroupInput {
            source: trimmed.to_string(),
            spec,
        });
    }
    if let Some(entry) = manifest.find(trimmed) {
        if let Some(spec) = &entry.group {
            return Ok(GroupInput {
                source: trimmed.to_string(),
                spec: spec.clone(),
            });
        }
        return Err(CliError::Input(format!(
            "corpus entry '{trimmed}' is an affine instance; use the affine subcommand"
        )));
    }
    if Path::new(trimmed).exists() {
        return group_from_file(trimmed);
    }
    Err(CliError::Input(format!(
        "'{trimmed}' is not a corpus id, a readable file, or a constructor expression like cyclic(12)"
    )))
}

fn group_from_file(path: &str) -> Result<GroupInput, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read group spec '{path}': {e}")))?;
    let spec: GroupSpec = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("cannot parse group spec '{path}': {e}")))?;
    Ok(GroupInput {
        source: path.to_string(),
        spec,
    })
}

/// Parses `name(a,b,...)` into a named-construction spec. Arguments must
/// be unsigned integers; an empty argument list is allowed.
pub fn parse_constructor(expr: &str) -> Result<GroupSpec, CliError> {
    let open = expr.find('(').ok_or_else(|| bad_expr(expr))?;
    let name = expr[..open].trim();
    let rest = expr[open + 1..].trim_end();
    let inner = rest.strip_suffix(')').ok_or_else(|| bad_expr(expr))?;
    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(bad_expr(expr));
    }
    let mut params = Vec::new();
    let inner = inner.trim();
    if !inner.is_empty() {
        for piece in inner.split(',') {
            let v: u64 = piece.trim().parse().map_err(|_| {
                CliError::Input(format!(
                    "constructor argument '{}' in '{expr}' is not an unsigned integer",
                    piece.trim()
                ))
            })?;
            params.push(v);
        }
    }
    Ok(GroupSpec::Named {
        construct: name.to_string(),
        params,
        matrices: None,
        factors: None,
    })
}

fn bad_expr(expr: &str) -> CliError {
    CliError::Input(format!(
        "cannot parse '{expr}'; expected name(args) such as frobenius(17,1,4) or quaternion()"
    ))
}

/// A resolved `affine` input.
pub enum AffineInput {
    /// Explicit generator matrices inside `GL_n(p)`.
    Spec { source: String, spec: MatGroupSpec },
    /// The order-`e` cyclic subgroup of the multiplicative group of
    /// `F_p`, handled by the one-dimensional closed form.
    Cyclic { p: u64, e: u64 },
}

/// Arguments of the `affine` subcommand relevant to input resolution.
pub struct AffineArgs<'a> {
    pub input: Option<&'a str>,
    pub p: Option<u64>,
    pub n: Option<usize>,
    pub gens: Option<&'a str>,
    pub cyclic: Option<u64>,
}

pub fn resolve_affine(
    args: &AffineArgs<'_>,
    manifest: &CorpusManifest,
) -> Result<AffineInput, CliError> {
    if let Some(e) = args.cyclic {
        if args.input.is_some() || args.gens.is_some() {
            return Err(CliError::input(
                "--cyclic cannot be combined with a named input or --gens",
            ));
        }
        let p = args
            .p
            .ok_or_else(|| CliError::input("--cyclic requires --p"))?;
        if args.n.unwrap_or(1) != 1 {
            return Err(CliError::input("--cyclic is one-dimensional; --n must be 1"));
        }
        return Ok(AffineInput::Cyclic { p, e });
    }
    if let Some(gens) = args.gens {
        if args.input.is_some() {
            return Err(CliError::input(
                "--gens cannot be combined with a named input",
            ));
        }
        let p = args.p.ok_or_else(|| CliError::input("--gens requires --p"))?;
        let n = args.n.ok_or_else(|| CliError::input("--gens requires --n"))?;
        let generators = parse_generators(gens)?;
        return Ok(AffineInput::Spec {
            source: "explicit generators".to_string(),
            spec: MatGroupSpec { p, n, generators },
        });
    }
    let input = args.input.ok_or_else(|| {
        CliError::input("no input: give a corpus id, sl2_5, a spec file, --gens, or --cyclic")
    })?;
    let trimmed = input.trim();
    if trimmed == "sl2_5" {
        if let Some(p) = args.p {
            if p != 11 {
                return Err(CliError::Input(format!(
                    "the built-in sl2_5 instance is defined inside GL_2(11); --p {p} does not match"
                )));
            }
        }
        return Ok(AffineInput::Spec {
            source: "sl2_5".to_string(),
            spec: MatGroupSpec {
                p: 11,
                n: 2,
                generators: SL2_5_MOD_11
                    .iter()
                    .map(|flat| vec![flat[..2].to_vec(), flat[2..].to_vec()])
                    .collect(),
            },
        });
    }
    if let Some(path) = trimmed.strip_prefix('@') {
        return affine_from_file(path, args.p);
    }
    if let Some(entry) = manifest.find(trimmed) {
        if let Some(spec) = &entry.affine {
            if let Some(p) = args.p {
                if p != spec.p {
                    return Err(CliError::Input(format!(
                        "corpus entry '{trimmed}' lives over F_{}; --p {p} does not match",
                        spec.p
                    )));
                }
            }
            return Ok(AffineInput::Spec {
                source: trimmed.to_string(),
                spec: spec.clone(),
            });
        }
        return Err(CliError::Input(format!(
            "corpus entry '{trimmed}' is a permutation group; use the analyze subcommand"
        )));
    }
    if Path::new(trimmed).exists() {
        return affine_from_file(trimmed, args.p);
    }
    Err(CliError::Input(format!(
        "'{trimmed}' is not an affine corpus id, the name sl2_5, or a readable spec file"
    )))
}

fn affine_from_file(path: &str, p_flag: Option<u64>) -> Result<AffineInput, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read matrix spec '{path}': {e}")))?;
    let spec: MatGroupSpec = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("cannot parse matrix spec '{path}': {e}")))?;
    if let Some(p) = p_flag {
        if p != spec.p {
            return Err(CliError::Input(format!(
                "spec file '{path}' declares p = {}; --p {p} does not match",
                spec.p
            )));
        }
    }
    Ok(AffineInput::Spec {
        source: path.to_string(),
        spec,
    })
}

/// Parses `--gens`: inline JSON (`[[[0,1],[1,1]]]`) or `@file`.
fn parse_generators(arg: &str) -> Result<Vec<Vec<Vec<u64>>>, CliError> {
    let text = if let Some(path) = arg.strip_prefix('@') {
        fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read generators '{path}': {e}")))?
    } else {
        arg.to_string()
    };
    serde_json::from_str(&text).map_err(|e| {
        CliError::Input(format!(
            "cannot parse generators as a JSON array of row-major matrices: {e}"
        ))
    })
}
