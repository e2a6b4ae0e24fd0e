use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use forge::cli::build::{build_target, Source};
use forge::cli::export::fixture_json;
use forge::cli::manifest::{load, Model};
use forge::cli::report::Report;
use forge::cli::verify::{select_suites, verify_model, Profile};
use forge::ForgeError;

/// Exact checks of Lie bialgebra, double, polyuble and Poisson identities.
#[derive(Parser)]
#[command(name = "forge", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every identity in the selected suites against a manifest.
    Verify {
        manifest: PathBuf,
        /// Suite to run; repeatable. Defaults to the manifest's `checks`, or all.
        #[arg(long = "suite")]
        suites: Vec<String>,
        #[arg(long, default_value = "full")]
        profile: String,
        /// Also write the report as JSON.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Build a derived structure and write it as a manifest.
    Build {
        /// double, polyuble, rn, r-angle, t-element, mixed-bivector, fusion or quasi.
        target: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Output path; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Shipped fixture to start from (default sl2).
        #[arg(long, conflicts_with = "manifest")]
        fixture: Option<String>,
        /// Manifest to start from.
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
    /// Print a shipped fixture manifest.
    Fixtures { name: String },
}

const INPUT_ERROR: u8 = 2;

fn input_error(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("forge: {e}");
    ExitCode::from(INPUT_ERROR)
}

fn thread_pool() -> Result<(), String> {
    let Ok(raw) = std::env::var("FORGE_THREADS") else { return Ok(()) };
    let n: usize = raw.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| format!("FORGE_THREADS must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

fn verify(manifest: PathBuf, suites: Vec<String>, profile: &str, report: Option<PathBuf>) -> Result<bool, ForgeError> {
    let profile: Profile = profile.parse()?;
    let model = Model::from_manifest(&load(&manifest)?)?;
    let selected = select_suites(&suites, &model)?;
    let checks = verify_model(&model, &selected, profile)?;
    let rep = Report::new(&manifest.display().to_string(), profile.name(), selected.iter().map(|s| s.to_string()).collect(), checks);
    print!("{}", rep.text());
    eprintln!("{} passed, {} failed", rep.passed, rep.failed);
    if let Some(path) = report {
        std::fs::write(&path, rep.json()).map_err(|e| ForgeError::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(rep.all_passed())
}

fn build(target: &str, n: usize, out: Option<PathBuf>, fixture: Option<String>, manifest: Option<PathBuf>) -> Result<(), ForgeError> {
    let src = match (&fixture, manifest) {
        (_, Some(path)) => Source::Model(Model::from_manifest(&load(&path)?)?),
        (Some(name), None) => Source::Fixture(name),
        (None, None) => Source::Fixture("sl2"),
    };
    let json = build_target(target, n, src)?.to_manifest().to_json();
    match out {
        Some(path) => std::fs::write(&path, json).map_err(|e| ForgeError::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{json}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { INPUT_ERROR } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(e) = thread_pool() {
        return input_error(e);
    }
    match cli.command {
        Command::Verify { manifest, suites, profile, report } => match verify(manifest, suites, &profile, report) {
            Ok(true) => ExitCode::SUCCESS,
            Ok(false) => ExitCode::from(1),
            Err(e) => input_error(e),
        },
        Command::Build { target, n, out, fixture, manifest } => match build(&target, n, out, fixture, manifest) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => input_error(e),
        },
        Command::Fixtures { name } => match fixture_json(&name) {
            Ok(json) => {
                print!("{json}");
                ExitCode::SUCCESS
            }
            Err(e) => input_error(e),
        },
    }
}
