use crate::error::{Error, Result};

/// Environment variable overriding [`Limits::max_vertices`].
pub const MAX_VERTICES_ENV: &str = "SYMBREAK_MAX_VERTICES";

/// Safety caps for the exhaustive algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest graph accepted by automorphism and canonical-form searches.
    pub max_vertices: usize,
    /// Largest automorphism group (or canonical search tree) enumerated.
    pub max_group_order: u64,
    /// Largest colouring domain for which lower bounds are certified.
    pub max_certified_domain: usize,
    /// Skip lower-bound certification above `max_certified_domain` and
    /// report witness values only.
    pub witness_only: bool,
    /// Node budget per palette size in witness-only mode.
    pub witness_node_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vertices: 40,
            max_group_order: 10_000_000,
            max_certified_domain: 30,
            witness_only: false,
            witness_node_budget: 2_000_000,
        }
    }
}

impl Limits {
    /// Defaults, with `SYMBREAK_MAX_VERTICES` applied when set.
    pub fn from_env() -> Result<Limits> {
        let mut limits = Limits::default();
        if let Ok(raw) = std::env::var(MAX_VERTICES_ENV) {
            let cap: usize = raw.trim().parse().map_err(|_| {
                Error::Usage(format!("{MAX_VERTICES_ENV} must be a positive integer, got {raw:?}"))
            })?;
            limits.max_vertices = cap;
            limits.max_certified_domain = limits.max_certified_domain.max(cap);
        }
        Ok(limits)
    }

    pub(crate) fn check_vertices(&self, n: usize) -> Result<()> {
        if n > self.max_vertices {
            return Err(Error::Resource {
                what: "vertex count",
                cap: self.max_vertices as u64,
                actual: n as u64,
            });
        }
        Ok(())
    }
}
