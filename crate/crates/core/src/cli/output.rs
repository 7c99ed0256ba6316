use std::fs;
use std::path::Path;

use serde_json::{Map, Number, Value};

use super::config::OutputFormat;
use crate::bounds::BoundReport;
use crate::error::{Error, Result};

pub const REPORT_COLUMNS: [&str; 8] =
    ["theorem_id", "alpha", "sample_count", "min_residual", "argmin_re", "argmin_im", "violations", "tolerance"];

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Float(f64),
    Int(u64),
    Text(String),
    Bool(bool),
}

impl Cell {
    fn csv_field(&self) -> String {
        match self {
            Cell::Float(x) => format_float(*x),
            Cell::Int(n) => n.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn json_value(&self) -> Value {
        match self {
            // JSON has no NaN or infinity
            Cell::Float(x) => Number::from_f64(*x).map_or(Value::Null, Value::Number),
            Cell::Int(n) => Value::from(*n),
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Bool(b) => Value::from(*b),
        }
    }
}

/// Seventeen significant digits, so the text round-trips to the same `f64`.
pub fn format_float(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else if x.is_nan() {
        "NaN".to_string()
    } else if x > 0.0 {
        "inf".to_string()
    } else {
        "-inf".to_string()
    }
}

/// Named columns of uniform rows, rendered as CSV or as a JSON array of objects.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Self { columns: columns.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width must match the header");
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Io(std::io::Error::other(e));
        w.write_record(&self.columns).map_err(io)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv_field)).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(std::io::Error::other(e.to_string())))?;
        String::from_utf8(bytes).map_err(|e| Error::Io(std::io::Error::other(e)))
    }

    pub fn to_json(&self) -> Result<String> {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> =
                    self.columns.iter().zip(row).map(|(k, v)| (k.to_string(), v.json_value())).collect();
                Value::Object(obj)
            })
            .collect();
        let mut text = serde_json::to_string_pretty(&Value::Array(rows))?;
        text.push('\n');
        Ok(text)
    }

    pub fn render(&self, format: OutputFormat) -> Result<String> {
        match format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(),
        }
    }
}

/// Reports as a table, ordered by theorem id then ascending `α`.
pub fn report_table(reports: &[BoundReport]) -> Table {
    let mut sorted = reports.to_vec();
    sorted.sort_by(|a, b| a.theorem_id.as_str().cmp(b.theorem_id.as_str()).then(a.alpha.total_cmp(&b.alpha)));
    let mut table = Table::new(&REPORT_COLUMNS);
    for r in sorted {
        table.push(vec![
            Cell::Text(r.theorem_id.as_str().to_string()),
            Cell::Float(r.alpha),
            Cell::Int(r.sample_count as u64),
            Cell::Float(r.min_residual),
            Cell::Float(r.argmin_z.re),
            Cell::Float(r.argmin_z.im),
            Cell::Int(r.violations as u64),
            Cell::Float(r.tolerance),
        ]);
    }
    table
}

pub fn render_reports(reports: &[BoundReport], format: OutputFormat) -> Result<String> {
    if reports.is_empty() {
        return Err(Error::InvalidArgument("no reports to emit".to_string()));
    }
    report_table(reports).render(format)
}

/// Writes the rendered reports to `path`. Nothing is created on error.
pub fn emit_report(reports: &[BoundReport], format: OutputFormat, path: &Path) -> Result<()> {
    let text = render_reports(reports, format)?;
    fs::write(path, text)?;
    Ok(())
}
