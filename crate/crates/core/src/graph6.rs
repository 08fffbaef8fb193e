//! graph6 reading and writing (short form only, `n <= 62`).
//!
//! A record is one header byte `n + 63` followed by the upper-triangle
//! adjacency bits in column order, packed six to a byte (MSB first, zero
//! padded) with 63 added to each chunk.

use thiserror::Error;

use crate::graph::Graph;

/// Largest order representable by the single-byte header.
pub const MAX_SHORT_N: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte {value} at offset {offset} is outside 63..=126")]
    InvalidByte { offset: usize, value: u8 },
    #[error("graph6 long form (n > {MAX_SHORT_N}) is not supported")]
    TooLarge,
    #[error("record for n = {n} needs {expected} body bytes, found {found}")]
    Length {
        n: usize,
        expected: usize,
        found: usize,
    },
}

fn body_len(n: usize) -> usize {
    Graph::pair_count(n).div_ceil(6)
}

/// Parses a single graph6 record. A trailing line break is ignored.
pub fn parse_graph6(bytes: &[u8]) -> Result<Graph, Graph6Error> {
    let bytes = bytes.strip_suffix(b"\n").unwrap_or(bytes);
    let bytes = bytes.strip_suffix(b"\r").unwrap_or(bytes);
    let (&header, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    for (offset, &value) in bytes.iter().enumerate() {
        if !(63..=126).contains(&value) {
            return Err(Graph6Error::InvalidByte { offset, value });
        }
    }
    let n = usize::from(header - 63);
    if n > MAX_SHORT_N {
        return Err(Graph6Error::TooLarge);
    }
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::Length {
            n,
            expected,
            found: body.len(),
        });
    }

    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
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
    Ok(Graph::from_edges(n, edges).expect("graph6 bits encode a simple graph"))
}

/// Encodes `g` as a graph6 record (no trailing newline).
pub fn encode_graph6(g: &Graph) -> Result<Vec<u8>, Graph6Error> {
    let n = g.n();
    if n > MAX_SHORT_N {
        return Err(Graph6Error::TooLarge);
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    Ok(out)
}
