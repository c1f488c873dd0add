//! One row per check, written as a JSON array or CSV with the same columns.

use std::fs;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub n: usize,
    pub instance: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
    /// Elapsed milliseconds; zero unless timings were requested.
    pub ms: u64,
}

impl CheckReport {
    pub fn new(check: &str, n: usize, instance: String, expected: String, actual: String) -> CheckReport {
        let pass = expected == actual;
        CheckReport { check: check.to_string(), n, instance, expected, actual, pass, ms: 0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::Parse(format!("unknown report format `{s}`"))),
        }
    }
}

const COLUMNS: [&str; 7] = ["check", "n", "instance", "expected", "actual", "pass", "ms"];

pub fn write_report<W: Write>(reports: &[CheckReport], format: Format, out: W) -> Result<()> {
    let io = |e: std::io::Error| Error::Io(e.to_string());
    match format {
        Format::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, reports).map_err(|e| Error::Io(e.to_string()))?;
            out.write_all(b"\n").map_err(io)
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
            let csv_err = |e: csv::Error| Error::Io(e.to_string());
            w.write_record(COLUMNS).map_err(csv_err)?;
            for r in reports {
                w.serialize(r).map_err(csv_err)?;
            }
            w.flush().map_err(io)
        }
    }
}

pub fn render_report(reports: &[CheckReport], format: Format) -> Result<String> {
    let mut buf = Vec::new();
    write_report(reports, format, &mut buf)?;
    String::from_utf8(buf).map_err(|e| Error::Io(e.to_string()))
}

pub fn emit_report(reports: &[CheckReport], format: Format, path: &Path) -> Result<()> {
    fs::write(path, render_report(reports, format)?).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}
