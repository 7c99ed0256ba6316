use std::path::PathBuf;

use serde::Serialize;

use crate::bounds::{TheoremId, DEFAULT_RESIDUAL_TOL};
use crate::error::{Error, Result};
use crate::estimator::{PolarGrid, SearchOptions};

/// The α-set used by `verify` when no single α is configured.
pub const ALPHA_SET: [f64; 4] = [0.0, 0.25, 0.5, 0.75];

pub const MAX_SAMPLE_COUNT: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Verify,
    Norm,
    GrowthTable,
    Generate,
    Report,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    #[default]
    Json,
}

impl OutputFormat {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(Error::Config(format!("unknown output format '{other}' (expected csv or json)"))),
        }
    }
}

/// Everything a command reads. Built from flags only.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: Command,
    /// `None` runs `verify` over [`ALPHA_SET`]; other commands use 0.
    pub alpha: Option<f64>,
    pub seed: u64,
    pub sample_count: usize,
    pub r_max: f64,
    pub grid: (usize, usize),
    /// Quadrature tolerance.
    pub tol: f64,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
    pub residual_tol: f64,
    pub refine_iters: usize,
    /// Adds the Koebe function to every α as a claimed member.
    pub inject_koebe: bool,
    /// Checks to run; empty means all.
    pub checks: Vec<TheoremId>,
    /// Map family for `norm`.
    pub family: String,
    pub degree: usize,
    /// Radii for `growth-table`.
    pub r_steps: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            command: Command::Verify,
            alpha: None,
            seed: 42,
            sample_count: 100,
            r_max: 0.999,
            grid: (64, 64),
            tol: 1e-10,
            output_format: OutputFormat::Json,
            output_path: None,
            residual_tol: DEFAULT_RESIDUAL_TOL,
            refine_iters: SearchOptions::default().refine_iters,
            inject_koebe: false,
            checks: Vec::new(),
            family: "extremal".to_string(),
            degree: 3,
            r_steps: 9,
        }
    }
}

impl RunConfig {
    pub fn for_command(command: Command) -> Self {
        Self { command, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(a) = self.alpha {
            if !(0.0..1.0).contains(&a) {
                return Err(Error::Config(format!("alpha = {a} must lie in [0, 1)")));
            }
        }
        if self.sample_count == 0 || self.sample_count > MAX_SAMPLE_COUNT {
            return Err(Error::Config(format!(
                "sample count {} must lie in 1..={MAX_SAMPLE_COUNT}",
                self.sample_count
            )));
        }
        self.polar_grid()?;
        if !(self.tol > 0.0 && self.tol <= 1e-3) {
            return Err(Error::Config(format!("quadrature tolerance {} must lie in (0, 1e-3]", self.tol)));
        }
        if !(self.residual_tol >= 0.0 && self.residual_tol.is_finite()) {
            return Err(Error::Config(format!("residual tolerance {} must be finite and nonnegative", self.residual_tol)));
        }
        if !(1..=8).contains(&self.degree) {
            return Err(Error::Config(format!("degree {} must lie in 1..=8", self.degree)));
        }
        if self.r_steps == 0 || self.r_steps > 100_000 {
            return Err(Error::Config(format!("r-steps {} must lie in 1..=100000", self.r_steps)));
        }
        if self.refine_iters > 100 {
            return Err(Error::Config(format!("refinement count {} must be at most 100", self.refine_iters)));
        }
        Ok(())
    }

    pub fn polar_grid(&self) -> Result<PolarGrid> {
        PolarGrid::new(self.r_max, self.grid.0, self.grid.1).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn search(&self) -> SearchOptions {
        SearchOptions { refine_iters: self.refine_iters, ..SearchOptions::default() }
    }

    /// `α` for single-α commands.
    pub fn single_alpha(&self) -> f64 {
        self.alpha.unwrap_or(0.0)
    }

    pub fn alphas(&self) -> Vec<f64> {
        match self.alpha {
            Some(a) => vec![a],
            None => ALPHA_SET.to_vec(),
        }
    }
}
