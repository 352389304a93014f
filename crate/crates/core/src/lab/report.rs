use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::LabError;
use crate::params::PhysParams;
use crate::phase::Coord;
use crate::quantum::{GaussianPacket, GridSpec};

pub const CSV_HEADER: &str = "scheme,observable,time,mean_re,mean_im,variance";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub version: String,
    /// Seconds since the Unix epoch; absent when timestamps are disabled.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<u64>,
    pub params: PhysParams,
    pub grid: GridSpec,
    pub packet: GaussianPacket,
}

/// `⟨Ô(t)⟩` and its variance for one scheme, observable and time.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Cell {
    pub scheme: usize,
    pub observable: Coord,
    pub time: f64,
    pub mean_re: f64,
    pub mean_im: f64,
    pub variance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UncertaintyRow {
    pub scheme: usize,
    pub time: f64,
    pub a: Coord,
    pub b: Coord,
    pub product: f64,
    pub bound: f64,
    pub satisfied: bool,
}

/// Largest coefficient of `X_H − A x` for pair `μ`; `exact_zero` is decided
/// symbolically.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairResidual {
    pub pair: usize,
    pub exact_zero: bool,
    pub max_abs_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub metadata: Metadata,
    pub cells: Vec<Cell>,
    pub uncertainties: Vec<UncertaintyRow>,
    pub pair_residuals: Vec<PairResidual>,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format {other:?}; expected csv or json")),
        }
    }
}

// Same shortest round-trip digits as the JSON writer.
fn float(v: f64) -> String {
    serde_json::to_string(&v).expect("finite float")
}

/// Renders the report. CSV carries only the cell table.
pub fn format_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from(CSV_HEADER);
            s.push('\n');
            for c in &report.cells {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{}",
                    c.scheme,
                    c.observable,
                    float(c.time),
                    float(c.mean_re),
                    float(c.mean_im),
                    float(c.variance)
                );
            }
            s
        }
    }
}

pub fn emit_report(report: &Report, format: Format, path: &Path) -> Result<(), LabError> {
    std::fs::write(path, format_report(report, format))
        .map_err(|source| LabError::Io { path: path.to_path_buf(), source })
}
