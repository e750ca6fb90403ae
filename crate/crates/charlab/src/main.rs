use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use charlab::commands::{
    cmd_affine, cmd_analyze, cmd_classify_prime, cmd_sp, cmd_verify, AffineOpts, AnalyzeOpts,
};
use charlab::corpus::{default_manifest, CorpusManifest};
use charlab::CliError;

/// Character-rationality workbench: profiles, detectors, affine class
/// numbers, and batch verifier suites for finite groups.
#[derive(Parser)]
#[command(name = "charlab", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Rationality profile of one group at one prime, with the
    /// cyclic-Sylow detector and normalizer comparison when p divides |G|
    Analyze {
        /// Constructor expression, corpus id, or path to a group-spec file
        input: String,
        /// The prime p
        #[arg(long)]
        prime: u64,
        /// Manifest file overriding the built-in corpus
        #[arg(long)]
        manifest: Option<PathBuf>,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Skip the result cache for this run
        #[arg(long)]
        no_cache: bool,
    },
    /// Class number k(HV) of a coprime affine group F_p^n : H
    Affine {
        /// Affine corpus id, the built-in name sl2_5, or a spec file
        input: Option<String>,
        /// Characteristic p
        #[arg(long)]
        p: Option<u64>,
        /// Dimension n
        #[arg(long)]
        n: Option<usize>,
        /// Generator matrices as JSON (or @file)
        #[arg(long)]
        gens: Option<String>,
        /// Order-e cyclic subgroup of the multiplicative group (n = 1)
        #[arg(long)]
        cyclic: Option<u64>,
        /// Emit a symbolic lower-bound certificate without enumerating
        /// the p^n points
        #[arg(long)]
        certificate: bool,
        /// Manifest file overriding the built-in corpus
        #[arg(long)]
        manifest: Option<PathBuf>,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one verifier suite across the corpus
    Verify {
        /// Suite name (see --suite help for the list)
        #[arg(long)]
        suite: String,
        /// Manifest file overriding the built-in corpus
        #[arg(long)]
        manifest: Option<PathBuf>,
        /// Stop at the first hard failure
        #[arg(long)]
        fail_fast: bool,
        /// Thread count for table building and checks
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the JSON report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write a flat CSV summary here
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Print S_p = {e + (p-1)/e : e divides p-1}
    Sp {
        #[arg(long)]
        prime: u64,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Arithmetic conditions on p that force small elements into S_p
    ClassifyPrime {
        #[arg(long)]
        prime: u64,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.cmd {
        Cmd::Analyze {
            input,
            prime,
            manifest,
            out,
            no_cache,
        } => {
            let manifest = load_manifest(manifest)?;
            let rendered = cmd_analyze(&AnalyzeOpts {
                input: &input,
                prime,
                manifest: &manifest,
                no_cache,
            })?;
            emit(out.as_deref(), &rendered)?;
            Ok(0)
        }
        Cmd::Affine {
            input,
            p,
            n,
            gens,
            cyclic,
            certificate,
            manifest,
            out,
        } => {
            let manifest = load_manifest(manifest)?;
            let rendered = cmd_affine(&AffineOpts {
                input: input.as_deref(),
                p,
                n,
                gens: gens.as_deref(),
                cyclic,
                certificate,
                manifest: &manifest,
            })?;
            emit(out.as_deref(), &rendered)?;
            Ok(0)
        }
        Cmd::Verify {
            suite,
            manifest,
            fail_fast,
            jobs,
            out,
            csv,
        } => {
            let manifest = load_manifest(manifest)?;
            let (report, rendered) = cmd_verify(&suite, &manifest, jobs, fail_fast)?;
            emit(out.as_deref(), &rendered)?;
            if let Some(path) = csv {
                fs::write(path, report.to_csv())?;
            }
            for line in &report.counterexamples {
                eprintln!("COUNTEREXAMPLE: {line}");
            }
            if report.has_failures() {
                for line in &report.failures {
                    eprintln!("FAIL: {line}");
                }
                return Ok(1);
            }
            Ok(0)
        }
        Cmd::Sp { prime, out } => {
            let rendered = cmd_sp(prime)?;
            emit(out.as_deref(), &rendered)?;
            Ok(0)
        }
        Cmd::ClassifyPrime { prime, out } => {
            let rendered = cmd_classify_prime(prime)?;
            emit(out.as_deref(), &rendered)?;
            Ok(0)
        }
    }
}

fn load_manifest(path: Option<PathBuf>) -> Result<CorpusManifest, CliError> {
    match path {
        Some(p) => CorpusManifest::load(&p),
        None => Ok(default_manifest()),
    }
}

fn emit(out: Option<&std::path::Path>, rendered: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, rendered)?,
        None => print!("{rendered}"),
    }
    Ok(())
}
