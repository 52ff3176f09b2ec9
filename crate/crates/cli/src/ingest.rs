//! CSV ingestion of interval signals.

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use interval_dft::{IntervalSignal64, Error as CoreError};

use crate::error::{CliError, Result};

/// Column layout of the input file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Schema {
    /// Two columns: lower and upper endpoint.
    LoHi,
    /// Two columns: centre value and non-negative half-width.
    ValueHalfwidth,
    /// One column of crisp values widened by `--precision` on both sides.
    Value,
}

impl Schema {
    fn columns(self) -> usize {
        match self {
            Schema::LoHi | Schema::ValueHalfwidth => 2,
            Schema::Value => 1,
        }
    }
}

pub fn load(path: &Path, schema: Schema, precision: Option<f64>) -> Result<IntervalSignal64> {
    let file = std::fs::File::open(path).map_err(|e| CliError::Input {
        path: path.to_owned(),
        message: e.to_string(),
    })?;
    parse(file, path, schema, precision)
}

/// Parses one sample per row. A first row that does not parse as numbers is
/// taken as a header.
pub fn parse(reader: impl Read, path: &Path, schema: Schema, precision: Option<f64>) -> Result<IntervalSignal64> {
    match (schema, precision) {
        (Schema::Value, None) => return Err(CliError::Usage("--schema value requires --precision".into())),
        (Schema::LoHi | Schema::ValueHalfwidth, Some(_)) => {
            return Err(CliError::Usage("--precision applies only to --schema value".into()))
        }
        _ => {}
    }

    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let row_error = |line: u64, message: String| CliError::Row {
        path: PathBuf::from(path),
        line,
        message,
    };

    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (i, record) in rdr.records().enumerate() {
        let record = record.map_err(|e| CliError::Input {
            path: path.to_owned(),
            message: e.to_string(),
        })?;
        let line = record.position().map_or(0, |p| p.line());
        let parsed: std::result::Result<Vec<f64>, _> = record.iter().map(str::parse::<f64>).collect();
        let values = match parsed {
            Ok(v) => v,
            Err(_) if i == 0 => continue,
            Err(_) => {
                let shown = record.iter().collect::<Vec<_>>().join(",");
                return Err(row_error(line, format!("cannot parse `{shown}` as numbers")));
            }
        };
        if values.len() != schema.columns() {
            return Err(row_error(
                line,
                format!("expected {} column(s), found {}", schema.columns(), values.len()),
            ));
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite()) {
            return Err(row_error(line, CoreError::NonFinite { value: *v }.to_string()));
        }
        match schema {
            Schema::LoHi if values[0] > values[1] => {
                return Err(row_error(
                    line,
                    CoreError::ReversedInterval {
                        lo: values[0],
                        hi: values[1],
                    }
                    .to_string(),
                ))
            }
            Schema::ValueHalfwidth if values[1] < 0.0 => {
                return Err(row_error(line, format!("negative half-width {}", values[1])))
            }
            _ => {}
        }
        rows.push(values);
    }

    if rows.is_empty() {
        return Err(CliError::Input {
            path: path.to_owned(),
            message: "no samples found".into(),
        });
    }
    let signal = match schema {
        Schema::LoHi => IntervalSignal64::from_bounds(&rows.iter().map(|r| (r[0], r[1])).collect::<Vec<_>>()),
        Schema::ValueHalfwidth => {
            IntervalSignal64::from_bounds(&rows.iter().map(|r| (r[0] - r[1], r[0] + r[1])).collect::<Vec<_>>())
        }
        Schema::Value => {
            let values: Vec<f64> = rows.iter().map(|r| r[0]).collect();
            IntervalSignal64::from_crisp(&values, precision.unwrap_or_default())
        }
    };
    Ok(signal?)
}
