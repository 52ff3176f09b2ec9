//! Rendering of spectra, comparisons and reports into file contents.

use clap::ValueEnum;
use interval_dft::{BoundedSpectrum64, ComparisonRow, VerificationReport};
use serde::Serialize;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

/// Run metadata carried by every JSON document.
#[derive(Debug, Clone, Serialize)]
pub struct Metadata {
    pub tool: &'static str,
    pub version: &'static str,
    pub method: String,
    pub minimum_rule: &'static str,
    pub precision: Option<f64>,
    pub n: usize,
    pub k_min: usize,
    pub k_max: usize,
    pub seed: u64,
    pub mc_samples: usize,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct SpectrumRow {
    pub k: usize,
    pub frequency_fraction: f64,
    pub amp_lo: f64,
    pub amp_hi: f64,
    pub origin_enclosed: bool,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ComparisonRecord {
    pub k: usize,
    pub frequency_fraction: f64,
    pub box_lo: f64,
    pub box_hi: f64,
    pub selective_lo: f64,
    pub selective_hi: f64,
    pub box_width: f64,
    pub hull_width: f64,
    pub nested: bool,
}

pub fn spectrum_rows(spectrum: &BoundedSpectrum64) -> Vec<SpectrumRow> {
    spectrum
        .entries
        .iter()
        .map(|e| SpectrumRow {
            k: e.k,
            frequency_fraction: e.k as f64 / spectrum.len as f64,
            amp_lo: e.bounds.lo,
            amp_hi: e.bounds.hi,
            origin_enclosed: e.bounds.origin_enclosed,
        })
        .collect()
}

pub fn comparison_records(rows: &[ComparisonRow<f64>], len: usize) -> Vec<ComparisonRecord> {
    rows.iter()
        .map(|r| ComparisonRecord {
            k: r.k,
            frequency_fraction: r.k as f64 / len as f64,
            box_lo: r.box_lo,
            box_hi: r.box_hi,
            selective_lo: r.selective_lo,
            selective_hi: r.selective_hi,
            box_width: r.box_width,
            hull_width: r.hull_width,
            nested: r.nested,
        })
        .collect()
}

#[derive(Serialize)]
struct Document<'a, R> {
    #[serde(flatten)]
    metadata: &'a Metadata,
    rows: &'a [R],
    verification: Option<&'a VerificationReport>,
}

/// Renders rows as CSV (header from the field names) or as a JSON document
/// with metadata and the optional verification report.
pub fn render<R: Serialize>(
    format: Format,
    metadata: &Metadata,
    rows: &[R],
    verification: Option<&VerificationReport>,
) -> Result<String> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in rows {
                w.serialize(row).map_err(|e| CliError::Invariant(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Invariant(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| CliError::Invariant(e.to_string()))
        }
        Format::Json => {
            let doc = Document {
                metadata,
                rows,
                verification,
            };
            let mut text = serde_json::to_string_pretty(&doc).map_err(|e| CliError::Invariant(e.to_string()))?;
            text.push('\n');
            Ok(text)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn meta() -> Metadata {
        Metadata {
            tool: "interval-dft",
            version: "0.0.0",
            method: "box".into(),
            minimum_rule: "exact",
            precision: Some(2.0),
            n: 4,
            k_min: 1,
            k_max: 1,
            seed: 3,
            mc_samples: 0,
        }
    }

    fn rows() -> Vec<SpectrumRow> {
        vec![SpectrumRow {
            k: 1,
            frequency_fraction: 0.25,
            amp_lo: 0.0,
            amp_hi: 2.5,
            origin_enclosed: true,
        }]
    }

    #[test]
    fn csv_columns() {
        let text = render(Format::Csv, &meta(), &rows(), None).unwrap();
        assert_eq!(text, "k,frequency_fraction,amp_lo,amp_hi,origin_enclosed\n1,0.25,0.0,2.5,true\n");
    }

    #[test]
    fn json_carries_metadata() {
        let text = render(Format::Json, &meta(), &rows(), None).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["method"], "box");
        assert_eq!(v["precision"], 2.0);
        assert_eq!(v["n"], 4);
        assert_eq!(v["seed"], 3);
        assert_eq!(v["rows"][0]["amp_hi"], 2.5);
        assert!(v["verification"].is_null());
    }
}
