use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{named_graph, read_graph6_file, to_graph6, Graph, NamedGraphSpec};
use crate::symmetry::canonical_form;
use crate::transforms::endline_graph;

/// Largest order the builtin enumerator accepts. Order 7 has 2^21 labelled
/// graphs; larger corpora should come from a graph6 file.
pub const MAX_BUILTIN_ORDER: usize = 6;

#[derive(Debug, Clone)]
pub enum CorpusSource {
    /// Every isomorphism class of order `1..=max_order`.
    Builtin { max_order: usize },
    File(PathBuf),
    Graphs { name: String, graphs: Vec<Graph> },
}

#[derive(Debug, Clone)]
pub struct CorpusSpec {
    pub source: CorpusSource,
    pub connected_only: bool,
    pub min_order: usize,
    pub max_order: Option<usize>,
    pub exclude_cycles: bool,
}

impl CorpusSpec {
    pub fn builtin(max_order: usize) -> CorpusSpec {
        CorpusSpec::from_source(CorpusSource::Builtin { max_order })
    }

    pub fn file(path: impl Into<PathBuf>) -> CorpusSpec {
        CorpusSpec::from_source(CorpusSource::File(path.into()))
    }

    pub fn graphs(name: impl Into<String>, graphs: Vec<Graph>) -> CorpusSpec {
        CorpusSpec::from_source(CorpusSource::Graphs {
            name: name.into(),
            graphs,
        })
    }

    fn from_source(source: CorpusSource) -> CorpusSpec {
        CorpusSpec {
            source,
            connected_only: true,
            min_order: 1,
            max_order: None,
            exclude_cycles: false,
        }
    }

    pub fn keep(&self, g: &Graph) -> bool {
        (!self.connected_only || g.is_connected())
            && g.order() >= self.min_order
            && self.max_order.is_none_or(|m| g.order() <= m)
            && !(self.exclude_cycles && g.is_cycle())
    }

    /// All graphs of the corpus that pass the filters, in source order.
    pub fn load(&self) -> Result<Vec<Graph>> {
        let graphs = match &self.source {
            CorpusSource::Builtin { max_order } => {
                let mut all = Vec::new();
                for n in 1..=*max_order {
                    all.extend(enumerate_graphs(n, self.connected_only)?);
                }
                all
            }
            CorpusSource::File(path) => read_graph6_file(path)?,
            CorpusSource::Graphs { graphs, .. } => graphs.clone(),
        };
        Ok(graphs.into_iter().filter(|g| self.keep(g)).collect())
    }
}

impl fmt::Display for CorpusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.source {
            CorpusSource::Builtin { max_order } => write!(f, "builtin:{max_order}")?,
            CorpusSource::File(path) => write!(f, "file:{}", path.display())?,
            CorpusSource::Graphs { name, .. } => write!(f, "{name}")?,
        }
        if self.connected_only {
            write!(f, ",connected")?;
        }
        Ok(())
    }
}

/// One representative per isomorphism class of graphs of order `n`, each in
/// canonical labelling, sorted by graph6.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_BUILTIN_ORDER {
        return Err(Error::Resource {
            what: "builtin enumeration order",
            cap: MAX_BUILTIN_ORDER as u64,
            actual: n as u64,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    let classes = (0..1u64 << pairs.len())
        .into_par_iter()
        .map(|mask| -> Result<Option<(String, Graph)>> {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edge_list(n, edges)?;
            if connected_only && !g.is_connected() {
                return Ok(None);
            }
            let canon = canonical_form(&g)?;
            Ok(Some((canon.graph6, g)))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut unique = BTreeMap::new();
    for (key, g) in classes.into_iter().flatten() {
        unique.entry(key).or_insert(g);
    }
    unique
        .into_iter()
        .map(|(key, g)| {
            let canon = canonical_form(&g)?;
            let relabelled = g.unlabeled().relabel(&canon.labeling.to_vec())?;
            debug_assert_eq!(to_graph6(&relabelled), key);
            Ok(relabelled)
        })
        .collect()
}

/// Stars `K1,m` for `m` in the given range.
pub fn star_corpus(ms: impl IntoIterator<Item = usize>) -> Result<CorpusSpec> {
    let graphs = ms
        .into_iter()
        .map(|m| named_graph(NamedGraphSpec::CompleteBipartite(1, m)))
        .collect::<Result<Vec<_>>>()?;
    Ok(CorpusSpec::graphs("stars", graphs))
}

/// Cycles `C_n` for `n` in the given range.
pub fn cycle_corpus(ns: impl IntoIterator<Item = usize>) -> Result<CorpusSpec> {
    let graphs = ns
        .into_iter()
        .map(|n| named_graph(NamedGraphSpec::Cycle(n)))
        .collect::<Result<Vec<_>>>()?;
    Ok(CorpusSpec::graphs("cycles", graphs))
}

/// Named graphs, each optionally replaced by its endline graph.
pub fn named_corpus(name: &str, specs: &[(NamedGraphSpec, bool)]) -> Result<CorpusSpec> {
    let graphs = specs
        .iter()
        .map(|&(spec, plus)| {
            let g = named_graph(spec)?;
            if plus {
                endline_graph(&g)
            } else {
                Ok(g)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CorpusSpec::graphs(name, graphs))
}
