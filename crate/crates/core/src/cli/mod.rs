//! Command execution behind the `schwarzian` binary.

mod commands;
mod config;
mod output;
mod suite;

use std::fs;

pub use commands::{constants_table, generate_table, growth_table, norm_table};
pub use config::{Command, OutputFormat, RunConfig, ALPHA_SET, MAX_SAMPLE_COUNT};
pub use output::{emit_report, format_float, render_reports, report_table, Cell, Table, REPORT_COLUMNS};
pub use suite::{
    find_report, generate_members, koebe_control, koebe_point, member_degree, member_phi, member_seed,
    member_vanishes, run_alpha, run_suite_with, run_verification_suite, suite_context, violation_count,
    GROWTH_GRID, KOEBE_POINT_RADIUS,
};

use crate::error::Result;

/// Rendered output of a command and the number of violations it found.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub violations: usize,
}

impl Outcome {
    /// 0 without violations, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.violations > 0)
    }
}

/// Runs `config.command`. The rendered text is written to
/// `config.output_path` when set and is always returned.
pub fn execute(config: &RunConfig) -> Result<Outcome> {
    config.validate()?;
    let outcome = match config.command {
        Command::Verify => {
            let reports = run_verification_suite(config)?;
            Outcome { text: render_reports(&reports, config.output_format)?, violations: violation_count(&reports) }
        }
        Command::Norm => Outcome { text: norm_table(config)?.render(config.output_format)?, violations: 0 },
        Command::GrowthTable => Outcome { text: growth_table(config)?.render(config.output_format)?, violations: 0 },
        Command::Generate => Outcome { text: generate_table(config)?.render(config.output_format)?, violations: 0 },
        Command::Report => Outcome { text: constants_table(config)?.render(config.output_format)?, violations: 0 },
    };
    if let Some(path) = &config.output_path {
        fs::write(path, &outcome.text)?;
    }
    Ok(outcome)
}
