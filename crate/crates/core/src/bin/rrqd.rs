//! Command-line front end. All entropies are in nats.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use rrqd::majorana::{symmetrize, Spinor};
use rrqd::monogamy::{q_score, table1, MonogamyReport};
use rrqd::states::{named, PureState};
use rrqd::sweep::{
    phase_dependence, self_check_perturbed, sweep_gen_w, sweep_theta, write_gen_w_csv,
    write_theta_csv, SweepConfig, SweepKind, SweepOverrides,
};
use rrqd::Result;

#[derive(Parser)]
#[command(
    name = "rrqd",
    version,
    about = "Quantum deficit monogamy toolkit (natural log)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full monogamy report for one three-qubit state, as JSON.
    Analyze(AnalyzeArgs),
    /// q(θ) over the two-spinor family, as CSV.
    SweepTheta(SweepArgs),
    /// q over the generalized W triangle, as CSV.
    SweepGenw(SweepArgs),
    /// Summary table of the benchmark states.
    Table1 {
        #[arg(long)]
        json: bool,
    },
    /// Cross-check closed forms against the numerics.
    SelfCheck {
        #[arg(long, hide = true, default_value_t = 0.0)]
        perturb: f64,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct StateSource {
    /// Named state: ghz, w, wbar, wwbar, product, psi:θ, gen-ghz:..., gen-w:..., dicke:n,k
    #[arg(long)]
    state: Option<String>,
    /// JSON amplitudes, {"n":3,"amplitudes":[[re,im],...]} or a bare list
    #[arg(long)]
    amplitudes: Option<String>,
    /// JSON spinor list, [{"beta":..,"alpha":..},...]
    #[arg(long)]
    spinors: Option<String>,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    source: StateSource,
    /// Focus qubit index (0 = A).
    #[arg(long, default_value_t = 0)]
    focus: usize,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    points: Option<usize>,
    #[arg(long)]
    theta_min: Option<f64>,
    #[arg(long)]
    theta_max: Option<f64>,
    /// May be repeated or comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    phase_delta: Option<Vec<f64>>,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON file with any of points, theta_min, theta_max, phase_delta, out.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Serialize)]
struct AnalyzeOutput<'a> {
    log_base: &'static str,
    state: serde_json::Value,
    #[serde(flatten)]
    report: &'a MonogamyReport,
}

fn load_state(src: &StateSource) -> Result<PureState> {
    if let Some(name) = &src.state {
        named(name)
    } else if let Some(json) = &src.amplitudes {
        PureState::from_json(json)
    } else {
        let text = src.spinors.as_deref().unwrap_or_default();
        let spinors: Vec<Spinor> = serde_json::from_str(text)?;
        symmetrize(&spinors)
    }
}

fn sweep_config(kind: SweepKind, args: SweepArgs) -> Result<SweepConfig> {
    let file = match &args.config {
        Some(path) => SweepOverrides::from_file(path)?,
        None => SweepOverrides::default(),
    };
    let flags = SweepOverrides {
        points: args.points,
        theta_min: args.theta_min,
        theta_max: args.theta_max,
        phase_delta: args.phase_delta,
        out: args.out,
    };
    SweepConfig::with_overrides(kind, flags.over(file))
}

fn sink(cfg: &SweepConfig) -> Result<Box<dyn Write>> {
    Ok(match &cfg.output_path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Analyze(args) => {
            let psi = load_state(&args.source)?;
            let report = q_score(&psi, args.focus)?;
            let out = AnalyzeOutput {
                log_base: "e",
                state: serde_json::from_str(&psi.to_json())?,
                report: &report,
            };
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        Command::SweepTheta(args) => {
            let cfg = sweep_config(SweepKind::Theta, args)?;
            let rows = sweep_theta(&cfg)?;
            write_theta_csv(&rows, sink(&cfg)?)?;
            eprintln!("# natural log; {} rows", rows.len());
        }
        Command::SweepGenw(args) => {
            let cfg = sweep_config(SweepKind::GenW, args)?;
            let rows = sweep_gen_w(&cfg)?;
            write_gen_w_csv(&rows, sink(&cfg)?)?;
            eprintln!("# natural log; {} rows", rows.len());
            if let Some(dev) = phase_dependence(&rows) {
                eprintln!("# max |D_A:BC(delta) - D_A:BC(0)| = {dev:e}");
            }
        }
        Command::Table1 { json } => {
            let table = table1()?;
            if json {
                println!("{}", serde_json::to_string_pretty(&table)?);
            } else {
                print!("{table}");
            }
        }
        Command::SelfCheck { perturb } => {
            let checks = self_check_perturbed(perturb)?;
            let mut ok = true;
            for c in &checks {
                println!(
                    "{} {:<45} max_error={:.3e} tol={:.0e}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.max_error,
                    c.tolerance
                );
                ok &= c.passed;
            }
            println!(
                "{} checks, {}",
                checks.len(),
                if ok { "all passed" } else { "FAILED" }
            );
            return Ok(ok);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
