//! `rotspec` — exact rotation sets and localized-entropy bounds for the
//! ternary-shift potential family, from the command line.
//!
//! Exit codes: 0 all executed checks pass, 1 a check failed, 2 validation
//! error (bad flag, malformed parameter file, violated precondition).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use rotspec::error::Error;
use rotspec::exact::{parse_rat, Vec2Q};
use rotspec::potential::PotentialParams;
use rotspec::reproduce::acceptance::{run_verify, DEFAULT_SEED};
use rotspec::reproduce::{
    discontinuity_report, gkr_report, rotation_set_report, segment_targets, spectrum_scan,
    uniqueness_report, ArtifactSet,
};
use rotspec::transfer::DualOptions;

#[derive(Parser)]
#[command(
    name = "rotspec",
    version,
    about = "Rotation sets and localized entropy for a 2-D potential on the full 3-shift"
)]
struct Cli {
    /// Parameter file (flat key = value; keys a, b, lambda, theta_num,
    /// theta_den, C, C1, x_rule)
    #[arg(long, global = true)]
    params: Option<PathBuf>,

    /// Output directory (default: $ROTSPEC_OUT or ./out)
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Seed for randomized property checks
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Skip CSV artifacts
    #[arg(long, global = true)]
    no_csv: bool,

    /// Skip SVG artifacts
    #[arg(long, global = true)]
    no_svg: bool,

    /// Skip JSON artifacts
    #[arg(long, global = true)]
    no_json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SolverArgs {
    /// Norm cap T on the dual variable
    #[arg(long, default_value_t = 1e3)]
    alpha_cap: f64,

    /// Gradient-norm convergence tolerance
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate periodic orbits, compute the exact rotation set, and
    /// compare its vertices with the predicted extreme points
    RotationSet {
        #[arg(long, default_value_t = 12)]
        max_period: u32,
    },
    /// Dual localized-entropy bounds over a list of targets
    Spectrum {
        #[arg(long, default_value_t = 8)]
        memory: u32,
        /// `segment` (builtin centroid-to-origin path) or a file of
        /// `x y` rational pairs
        #[arg(long, default_value = "segment")]
        targets: String,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Dual bounds at the vertices w_1..w_k against the accumulation point
    Discontinuity {
        #[arg(long, default_value_t = 4)]
        k_max: u32,
        #[arg(long, default_value_t = 9)]
        memory: u32,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Scan all orbits for the unique one realizing w_k
    Uniqueness {
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, default_value_t = 12)]
        max_period: u32,
    },
    /// Property suite for the concave usc counterexample
    Gkr {
        #[arg(long, default_value_t = 10_000)]
        samples: u32,
    },
    /// Run the full acceptance suite and write report.json
    Verify,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool, Error> {
    let params = match &cli.params {
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            PotentialParams::from_param_file(&text)?
        }
        None => PotentialParams::default(),
    };
    let out_dir = cli
        .out
        .clone()
        .or_else(|| std::env::var_os("ROTSPEC_OUT").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("out"));

    let mut artifacts = ArtifactSet::default();
    let pass = match &cli.command {
        Command::RotationSet { max_period } => {
            let report = rotation_set_report(&params, *max_period, Some(&mut artifacts))?;
            print!("{}", report.render_console());
            report.pass
        }
        Command::Spectrum { memory, targets, solver } => {
            validate_memory(&params, *memory)?;
            let opts = DualOptions { alpha_cap: solver.alpha_cap, tol: solver.tol };
            let target_points = resolve_targets(&params, *memory, targets)?;
            let rows = spectrum_scan(&params, &target_points, *memory, opts, Some(&mut artifacts))?;
            let feasible = rows.iter().filter(|r| r.sample.is_some()).count();
            println!("spectrum m={memory}: {} targets, {} feasible", rows.len(), feasible);
            for row in &rows {
                match &row.sample {
                    Some(s) => println!(
                        "  ({:.6}, {:.6}) -> {:.6} nats (converged {})",
                        s.wx, s.wy, s.estimate, s.converged
                    ),
                    None => println!("  ({}, {}) -> infeasible", row.target.x, row.target.y),
                }
            }
            true
        }
        Command::Discontinuity { k_max, memory, solver } => {
            if *k_max == 0 {
                return Err(Error::IndexFromOne { field: "k_max" });
            }
            validate_memory(&params, *memory)?;
            let opts = DualOptions { alpha_cap: solver.alpha_cap, tol: solver.tol };
            let ks: Vec<u32> = (1..=*k_max).collect();
            let outcome = discontinuity_report(&params, &ks, *memory, opts, Some(&mut artifacts))?;
            print!("{}", outcome.report.render_console());
            outcome.report.pass
        }
        Command::Uniqueness { k, max_period } => {
            let report = uniqueness_report(&params, *k, *max_period)?;
            print!("{}", report.render_console());
            report.pass
        }
        Command::Gkr { samples } => {
            let report = gkr_report(&params, *samples, cli.seed)?;
            print!("{}", report.render_console());
            report.pass
        }
        Command::Verify => {
            if params != PotentialParams::default() {
                return Err(Error::InvalidParam {
                    field: "params",
                    message: "verify checks the default family; run without --params".into(),
                });
            }
            let summary = run_verify()?;
            for criterion in &summary.criteria {
                println!("{}", criterion.render_line());
            }
            artifacts.merge(summary.artifacts);
            summary.pass
        }
    };

    write_artifacts(&cli, &out_dir, &artifacts)?;
    Ok(pass)
}

fn validate_memory(params: &PotentialParams, memory: u32) -> Result<(), Error> {
    if memory <= params.lambda() {
        return Err(Error::MemoryBelowLambda { memory, lambda: params.lambda() });
    }
    Ok(())
}

fn resolve_targets(
    params: &PotentialParams,
    memory: u32,
    selector: &str,
) -> Result<Vec<Vec2Q>, Error> {
    if selector == "segment" {
        return Ok(segment_targets(params, memory, 10));
    }
    let text = std::fs::read_to_string(selector).map_err(|e| Error::InvalidParam {
        field: "targets",
        message: format!("cannot read `{selector}`: {e}"),
    })?;
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = line.split([',', ' ', '\t']).filter(|p| !p.is_empty()).collect();
        if parts.len() != 2 {
            return Err(Error::InvalidParam {
                field: "targets",
                message: format!("line {}: expected `x y`, got `{line}`", lineno + 1),
            });
        }
        out.push(Vec2Q::new(parse_rat(parts[0])?, parse_rat(parts[1])?));
    }
    if out.is_empty() {
        return Err(Error::InvalidParam { field: "targets", message: "no targets in file".into() });
    }
    Ok(out)
}

fn write_artifacts(cli: &Cli, dir: &std::path::Path, artifacts: &ArtifactSet) -> Result<(), Error> {
    if artifacts.files().is_empty() {
        return Ok(());
    }
    let mut filtered = ArtifactSet::default();
    for (name, bytes) in artifacts.files() {
        let skip = (cli.no_csv && name.ends_with(".csv"))
            || (cli.no_svg && name.ends_with(".svg"))
            || (cli.no_json && name.ends_with(".json"));
        if !skip {
            filtered.insert(name, bytes.clone());
        }
    }
    filtered.write_to(dir)?;
    for name in filtered.files().keys() {
        println!("wrote {}", dir.join(name).display());
    }
    Ok(())
}
