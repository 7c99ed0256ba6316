use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use schwarzian::bounds::TheoremId;
use schwarzian::cli::{execute, Command, OutputFormat, RunConfig};
use schwarzian::{Error, Result};

#[derive(Parser)]
#[command(name = "schwarzian", version, about = "Convex maps of order alpha: Schwarzian norms and bound checks")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Run every residual check over seeded members; exit 1 on violations.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Maps per alpha.
        #[arg(long, default_value_t = 100)]
        sample_count: usize,
        /// Add the Koebe function as a (non-convex) control member.
        #[arg(long)]
        inject_koebe: bool,
        /// Restrict to these checks (repeatable), e.g. theorem1_ii.
        #[arg(long = "check")]
        checks: Vec<String>,
        /// Residuals below minus this count as violations.
        #[arg(long, default_value_t = 1e-9)]
        residual_tol: f64,
    },
    /// Estimate the hyperbolic Schwarzian norm of one map.
    Norm {
        #[command(flatten)]
        common: Common,
        /// Map family: extremal, random, identity or koebe.
        #[arg(long, default_value = "extremal")]
        phi: String,
        /// Blaschke degree for the random family.
        #[arg(long, default_value_t = 3)]
        degree: usize,
    },
    /// Tabulate growth envelopes at r = i/(N+1), i = 1..=N.
    GrowthTable {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 9)]
        r_steps: usize,
    },
    /// List the seeded members verify would check at one alpha.
    Generate {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
    /// Sharp constants and the extremal norm per alpha.
    Report {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// Order of convexity in [0, 1); verify and report default to the full alpha set.
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 0.999)]
    r_max: f64,
    #[arg(long, default_value_t = 64)]
    n_r: usize,
    #[arg(long, default_value_t = 64)]
    n_theta: usize,
    /// Quadrature tolerance.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Golden-section refinement passes.
    #[arg(long, default_value_t = 5)]
    refine: usize,
    /// csv or json.
    #[arg(long, default_value = "json")]
    format: String,
    /// Write here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

impl Common {
    fn into_config(self, command: Command) -> Result<RunConfig> {
        Ok(RunConfig {
            command,
            alpha: self.alpha,
            seed: self.seed,
            r_max: self.r_max,
            grid: (self.n_r, self.n_theta),
            tol: self.tol,
            refine_iters: self.refine,
            output_format: OutputFormat::parse(&self.format)?,
            output_path: self.output,
            ..RunConfig::default()
        })
    }
}

fn build_config(sub: Sub) -> Result<RunConfig> {
    match sub {
        Sub::Verify { common, sample_count, inject_koebe, checks, residual_tol } => {
            let checks = checks
                .iter()
                .map(|name| TheoremId::parse(name).ok_or_else(|| Error::Config(format!("unknown check '{name}'"))))
                .collect::<Result<Vec<_>>>()?;
            Ok(RunConfig { sample_count, inject_koebe, checks, residual_tol, ..common.into_config(Command::Verify)? })
        }
        Sub::Norm { common, phi, degree } => {
            Ok(RunConfig { family: phi, degree, ..common.into_config(Command::Norm)? })
        }
        Sub::GrowthTable { common, r_steps } => Ok(RunConfig { r_steps, ..common.into_config(Command::GrowthTable)? }),
        Sub::Generate { common, count } => Ok(RunConfig { sample_count: count, ..common.into_config(Command::Generate)? }),
        Sub::Report { common } => common.into_config(Command::Report),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = build_config(cli.command).and_then(|config| {
        let outcome = execute(&config)?;
        if config.output_path.is_none() {
            print!("{}", outcome.text);
        }
        Ok(outcome)
    });
    match result {
        Ok(outcome) => {
            if outcome.violations > 0 {
                eprintln!("{} violation(s)", outcome.violations);
            }
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
