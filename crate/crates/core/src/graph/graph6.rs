//! graph6 text encoding (short form, up to 62 vertices).
//!
//! The upper triangle of the adjacency matrix is written column by column:
//! for `j` in `1..n`, for `i` in `0..j`, one bit for `{i, j}`. Bits are packed
//! six at a time, most significant first, each sextet offset by 63.

use std::path::Path;

use super::Graph;
use crate::error::{Error, Result};

const MAX_SHORT_ORDER: usize = 62;

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_SHORT_ORDER, "graph6 short form supports at most 62 vertices");
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    let first = *bytes.first().ok_or_else(|| Error::Format {
        offset: 0,
        reason: "empty line".into(),
    })?;
    if first == 126 {
        return Err(Error::Format {
            offset: 0,
            reason: "long-form order prefix (n > 62) is not supported".into(),
        });
    }
    if !(63..126).contains(&first) {
        return Err(Error::Format {
            offset: 0,
            reason: format!("order byte {first} out of range"),
        });
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = 1 + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(Error::Format {
            offset: bytes.len().min(expected),
            reason: format!("expected {expected} bytes for {n} vertices, found {}", bytes.len()),
        });
    }
    for (k, &b) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return Err(Error::Format {
                offset: k,
                reason: format!("byte {b} out of range 63..=126"),
            });
        }
    }
    let bit = |k: usize| -> bool {
        let byte = bytes[1 + k / 6] - 63;
        byte & (1 << (5 - k % 6)) != 0
    };
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    // Padding must be zero, otherwise the encoding is not canonical.
    for pad in bits..(expected - 1) * 6 {
        if bit(pad) {
            return Err(Error::Format {
                offset: 1 + pad / 6,
                reason: "non-zero padding bits".into(),
            });
        }
    }
    if n == 0 {
        return Err(Error::Format {
            offset: 0,
            reason: "graph with zero vertices".into(),
        });
    }
    Graph::from_edge_list(n, edges)
}

/// Parses graph6 text, one graph per line. Blank lines and lines starting
/// with `>>` are skipped.
pub fn read_graph6_str(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with(">>"))
        .map(|(lineno, l)| {
            parse_graph6(l.trim()).map_err(|e| match e {
                Error::Format { offset, reason } => Error::Format {
                    offset,
                    reason: format!("line {}: {reason}", lineno + 1),
                },
                other => other,
            })
        })
        .collect()
}

pub fn read_graph6_file(path: impl AsRef<Path>) -> Result<Vec<Graph>> {
    read_graph6_str(&std::fs::read_to_string(path)?)
}
