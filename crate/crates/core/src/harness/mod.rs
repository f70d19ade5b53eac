//! Corpus enumeration, statement sweeps and reports.

mod checks;
mod corpus;
mod report;

use std::time::Instant;

use rayon::prelude::*;

pub use checks::{ceil_sqrt, evaluate, CheckId, Evaluation, Status};
pub use corpus::{
    cycle_corpus, enumerate_graphs, named_corpus, star_corpus, CorpusSource, CorpusSpec,
    MAX_BUILTIN_ORDER,
};
pub use report::{emit_report, GraphRecord, ReportFormat, Summary, VerificationReport};

use crate::error::{Error, Result};
use crate::graph::{to_graph6, Graph};
use crate::limits::Limits;

fn record_for(id: CheckId, g: &Graph, limits: &Limits) -> Option<GraphRecord> {
    let outcome = evaluate(id, g, limits);
    let (status, values, note) = match outcome {
        Ok(None) => return None,
        Ok(Some(e)) => (e.status, e.values, e.note),
        Err(err) => (Status::Error, Default::default(), Some(err.to_string())),
    };
    Some(GraphRecord {
        graph6: to_graph6(g),
        n: g.order(),
        max_degree: g.max_degree(),
        values,
        pass: status.passed(),
        status,
        note,
    })
}

/// Runs `id` over every graph of `spec` on `jobs` worker threads. Graphs that
/// fail to evaluate become error records instead of aborting the sweep.
pub fn run_check(id: CheckId, spec: &CorpusSpec, jobs: usize, limits: &Limits) -> Result<VerificationReport> {
    let start = Instant::now();
    let graphs = spec.load()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Usage(format!("cannot start {jobs} workers: {e}")))?;
    let records: Vec<Option<GraphRecord>> =
        pool.install(|| graphs.par_iter().map(|g| record_for(id, g, limits)).collect());
    let skipped = records.iter().filter(|r| r.is_none()).count();
    Ok(VerificationReport::new(
        id.id().to_string(),
        spec.to_string(),
        records.into_iter().flatten().collect(),
        skipped,
        start.elapsed(),
    ))
}
