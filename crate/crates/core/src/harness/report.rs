use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::str::FromStr;
use std::time::Duration;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::error::{Error, Result};

use super::checks::Status;

/// Result of one check on one corpus graph.
#[derive(Debug, Clone, Serialize)]
pub struct GraphRecord {
    pub graph6: String,
    pub n: usize,
    pub max_degree: usize,
    pub values: Map<String, Value>,
    pub pass: bool,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub checked: usize,
    pub passed: usize,
    pub failed: usize,
    /// Corpus graphs outside the statement's hypotheses.
    pub skipped: usize,
    pub counterexamples: Vec<String>,
    pub paper_inconsistent: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub corpus: String,
    pub records: Vec<GraphRecord>,
    pub summary: Summary,
    /// Kept out of the serialized report so that reports are reproducible.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerificationReport {
    /// Builds the summary from `records`, which are sorted by graph6 first.
    pub fn new(
        theorem: String,
        corpus: String,
        mut records: Vec<GraphRecord>,
        skipped: usize,
        wall_time: Duration,
    ) -> VerificationReport {
        records.sort_by(|a, b| a.graph6.cmp(&b.graph6));
        let mut summary = Summary {
            checked: records.len(),
            skipped,
            ..Summary::default()
        };
        for r in &records {
            if r.pass {
                summary.passed += 1;
            } else {
                summary.counterexamples.push(r.graph6.clone());
            }
            if r.status == Status::PaperInconsistent {
                summary.paper_inconsistent.push(r.graph6.clone());
            }
        }
        summary.failed = summary.counterexamples.len();
        VerificationReport {
            theorem,
            corpus,
            records,
            summary,
            wall_time,
        }
    }

    pub fn record(&self, graph6: &str) -> Option<&GraphRecord> {
        self.records.iter().find(|r| r.graph6 == graph6)
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("reports serialize");
        out.push('\n');
        out
    }

    /// Header plus one row per record; `values` is compact JSON.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("graph6\tn\tmax_degree\tstatus\tpass\tvalues\tnote\n");
        for r in &self.records {
            let values = serde_json::to_string(&r.values).expect("values serialize");
            let note = r.note.as_deref().unwrap_or("").replace(['\t', '\n'], " ");
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.graph6,
                r.n,
                r.max_degree,
                r.status.as_str(),
                r.pass,
                values,
                note
            );
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Json,
    Tsv,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<ReportFormat> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "tsv" => Ok(ReportFormat::Tsv),
            _ => Err(Error::Usage(format!("unknown report format {s:?}; expected json or tsv"))),
        }
    }
}

/// Writes the report to `path`, or to stdout when `path` is `None`.
pub fn emit_report(report: &VerificationReport, format: ReportFormat, path: Option<&Path>) -> Result<()> {
    let text = match format {
        ReportFormat::Json => report.to_json(),
        ReportFormat::Tsv => report.to_tsv(),
    };
    match path {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}
