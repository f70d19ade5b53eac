use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// A graph from the built-in catalogue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedGraphSpec {
    /// Cycle `C_n`, `n >= 3`, vertices in cyclic order.
    Cycle(usize),
    /// Complete graph `K_n`.
    Complete(usize),
    /// Complete bipartite `K_{m,n}` with parts `0..m` and `m..m+n`.
    CompleteBipartite(usize, usize),
    /// Path `P_n` on `n` vertices.
    Path(usize),
    /// `K_4` minus one edge, as drawn in the catalogue figure.
    Q,
    /// A triangle with one pendant vertex, the drawing labelled `L(Q)`.
    LQ,
}

pub fn named_graph(spec: NamedGraphSpec) -> Result<Graph> {
    use NamedGraphSpec::*;
    let unsupported = || Error::MalformedInput(format!("unsupported parameters for {spec}"));
    match spec {
        Cycle(n) => {
            if n < 3 {
                return Err(unsupported());
            }
            Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Complete(n) => {
            if n < 1 {
                return Err(unsupported());
            }
            Graph::from_edge_list(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
        }
        CompleteBipartite(m, n) => {
            if m < 1 || n < 1 {
                return Err(unsupported());
            }
            Graph::from_edge_list(m + n, (0..m).flat_map(|i| (m..m + n).map(move |j| (i, j))))
        }
        Path(n) => {
            if n < 1 {
                return Err(unsupported());
            }
            Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i)))
        }
        // Top, right, left, bottom of the drawn diamond; left-right is missing.
        Q => Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]),
        // Triangle 0-1-3 with vertex 2 hanging off vertex 1.
        LQ => Graph::from_edge_list(4, [(0, 1), (0, 3), (1, 2), (1, 3)]),
    }
}

impl fmt::Display for NamedGraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use NamedGraphSpec::*;
        match *self {
            Cycle(n) => write!(f, "C{n}"),
            Complete(n) => write!(f, "K{n}"),
            CompleteBipartite(m, n) => write!(f, "K{m},{n}"),
            Path(n) => write!(f, "P{n}"),
            Q => write!(f, "Q"),
            LQ => write!(f, "LQ"),
        }
    }
}

impl FromStr for NamedGraphSpec {
    type Err = Error;

    /// Accepts `C6`, `K4`, `K3,3` (or `K3_3`), `P5`, `Q`, `LQ`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedInput(format!("unknown graph name {s:?}"));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        match s {
            "Q" => return Ok(NamedGraphSpec::Q),
            "LQ" => return Ok(NamedGraphSpec::LQ),
            _ => {}
        }
        let (head, rest) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
        match head {
            "C" => Ok(NamedGraphSpec::Cycle(num(rest)?)),
            "P" => Ok(NamedGraphSpec::Path(num(rest)?)),
            "K" => match rest.split_once([',', '_']) {
                Some((m, n)) => Ok(NamedGraphSpec::CompleteBipartite(num(m)?, num(n)?)),
                None => Ok(NamedGraphSpec::Complete(num(rest)?)),
            },
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_six() {
        let g = named_graph(NamedGraphSpec::Cycle(6)).unwrap();
        assert_eq!((g.order(), g.size()), (6, 6));
        assert!(g.degree_sequence().iter().all(|&d| d == 2));
    }

    #[test]
    fn q_matches_drawing() {
        let q = named_graph(NamedGraphSpec::Q).unwrap();
        assert_eq!((q.order(), q.size()), (4, 5));
        assert_eq!(q.degree_sequence(), vec![3, 3, 2, 2]);
        let lq = named_graph(NamedGraphSpec::LQ).unwrap();
        assert_eq!((lq.order(), lq.size()), (4, 4));
        assert_eq!(lq.degree_sequence(), vec![3, 2, 2, 1]);
    }

    #[test]
    fn k33() {
        let g = named_graph(NamedGraphSpec::CompleteBipartite(3, 3)).unwrap();
        assert_eq!((g.order(), g.size()), (6, 9));
        assert!(g.degree_sequence().iter().all(|&d| d == 3));
        let (u, w) = g.bipartition().unwrap();
        assert_eq!((u, w), (vec![0, 1, 2], vec![3, 4, 5]));
    }

    #[test]
    fn parse_names() {
        assert_eq!("K3,3".parse::<NamedGraphSpec>().unwrap(), NamedGraphSpec::CompleteBipartite(3, 3));
        assert_eq!("C6".parse::<NamedGraphSpec>().unwrap(), NamedGraphSpec::Cycle(6));
        assert_eq!("LQ".parse::<NamedGraphSpec>().unwrap(), NamedGraphSpec::LQ);
        assert!("X3".parse::<NamedGraphSpec>().is_err());
        assert!(named_graph(NamedGraphSpec::Cycle(2)).is_err());
    }
}
