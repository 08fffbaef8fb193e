//! Isomorphism-class enumeration and class counts for small orders.
//!
//! The canonical code of a graph is the lexicographically smallest
//! upper-triangle adjacency bit string (column order, as in graph6) over all
//! vertex orderings. It is found by a depth-first search that places one
//! vertex per column and abandons any ordering whose prefix is already
//! larger than the best seen. A labelled mask represents its class exactly
//! when it equals its own canonical code, so enumeration filters all
//! `2^(n(n-1)/2)` masks through that test, aborting each test at the first
//! strictly smaller prefix.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::profile::check_permissible;

/// Largest order accepted by [`canonical_code`].
pub const MAX_CANONICAL_N: usize = 8;
/// Largest order accepted by [`enumerate_classes`] and [`census_row`].
pub const MAX_CENSUS_N: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("n = {n} outside the supported range 1..={max}")]
    OutOfRange { n: usize, max: usize },
}

/// Canonical adjacency bit string; first bit most significant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalCode {
    pub n: usize,
    pub bits: u64,
}

impl CanonicalCode {
    pub fn graph(&self) -> Graph {
        Graph::from_mask(self.n, self.bits)
    }

    /// The code as a `0`/`1` string.
    pub fn to_bit_string(&self) -> String {
        let len = Graph::pair_count(self.n);
        (0..len)
            .map(|k| if self.bits >> (len - 1 - k) & 1 == 1 { '1' } else { '0' })
            .collect()
    }
}

const UNSET: u32 = u32::MAX;

struct Canonizer {
    n: usize,
    adj: [u16; MAX_CANONICAL_N],
    /// Best code found so far, one column per position; `UNSET` past the
    /// point where the current best is still being built.
    best: [u32; MAX_CANONICAL_N],
    /// `cols[j][v]`: column bits vertex `v` would contribute at position `j`.
    cols: [[u32; MAX_CANONICAL_N]; MAX_CANONICAL_N + 1],
    used: u16,
    abort_on_smaller: bool,
}

impl Canonizer {
    fn new(n: usize, mask: u64) -> Self {
        let g = Graph::from_mask(n, mask);
        let mut adj = [0u16; MAX_CANONICAL_N];
        for (u, bits) in adj.iter_mut().enumerate().take(n) {
            for &v in g.neighbors(u) {
                *bits |= 1 << v;
            }
        }
        Canonizer {
            n,
            adj,
            best: [UNSET; MAX_CANONICAL_N],
            cols: [[0; MAX_CANONICAL_N]; MAX_CANONICAL_N + 1],
            used: 0,
            abort_on_smaller: false,
        }
    }

    /// Returns true when the search was aborted by a strictly smaller prefix.
    fn descend(&mut self, j: usize) -> bool {
        if j == self.n {
            return false;
        }
        for v in 0..self.n {
            if self.used >> v & 1 == 1 {
                continue;
            }
            let col = self.cols[j][v];
            if col > self.best[j] {
                continue;
            }
            if col < self.best[j] {
                if self.abort_on_smaller {
                    return true;
                }
                self.best[j] = col;
                self.best[j + 1..self.n].fill(UNSET);
            }
            for u in 0..self.n {
                self.cols[j + 1][u] = self.cols[j][u] << 1 | u32::from(self.adj[v] >> u & 1);
            }
            self.used |= 1 << v;
            let aborted = self.descend(j + 1);
            self.used &= !(1 << v);
            if aborted {
                return true;
            }
        }
        false
    }

    fn bits(&self) -> u64 {
        (1..self.n).fold(0u64, |acc, j| acc << j | u64::from(self.best[j]))
    }
}

fn mask_columns(n: usize, mask: u64) -> [u32; MAX_CANONICAL_N] {
    let total = Graph::pair_count(n);
    let mut cols = [0; MAX_CANONICAL_N];
    for (j, col) in cols.iter_mut().enumerate().take(n).skip(1) {
        let start = Graph::pair_count(j);
        *col = (mask >> (total - start - j) & ((1 << j) - 1)) as u32;
    }
    cols
}

fn check_canonical_n(n: usize) -> Result<(), CensusError> {
    if n > MAX_CANONICAL_N {
        return Err(CensusError::OutOfRange {
            n,
            max: MAX_CANONICAL_N,
        });
    }
    Ok(())
}

/// Canonical code of `g`; equal codes iff isomorphic graphs.
pub fn canonical_code(g: &Graph) -> Result<CanonicalCode, CensusError> {
    let n = g.n();
    check_canonical_n(n)?;
    let mut c = Canonizer::new(n, g.to_mask());
    c.descend(0);
    Ok(CanonicalCode { n, bits: c.bits() })
}

/// True iff `mask` is the canonical code of the graph it encodes.
pub fn is_canonical_mask(n: usize, mask: u64) -> Result<bool, CensusError> {
    check_canonical_n(n)?;
    let mut c = Canonizer::new(n, mask);
    c.best = mask_columns(n, mask);
    c.abort_on_smaller = true;
    Ok(!c.descend(0))
}

fn check_census_n(n: usize) -> Result<(), CensusError> {
    if !(1..=MAX_CENSUS_N).contains(&n) {
        return Err(CensusError::OutOfRange {
            n,
            max: MAX_CENSUS_N,
        });
    }
    Ok(())
}

/// One representative per isomorphism class on `n` vertices, sorted by code.
pub fn enumerate_classes(n: usize) -> Result<Vec<Graph>, CensusError> {
    enumerate_classes_with(n, false)
}

/// As [`enumerate_classes`]; `parallel` splits the mask range across rayon
/// workers without changing the result.
pub fn enumerate_classes_with(n: usize, parallel: bool) -> Result<Vec<Graph>, CensusError> {
    check_census_n(n)?;
    let masks = 0..1u64 << Graph::pair_count(n);
    let canonical = |&mask: &u64| is_canonical_mask(n, mask).expect("n checked");
    let codes: Vec<u64> = if parallel {
        masks.into_par_iter().filter(canonical).collect()
    } else {
        masks.filter(canonical).collect()
    };
    Ok(codes.into_iter().map(|m| Graph::from_mask(n, m)).collect())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub total: usize,
    pub connected: usize,
    pub trees: usize,
    pub permissible: usize,
    /// `permissible / total`.
    pub fraction: f64,
}

impl CensusRow {
    pub fn from_graphs(n: usize, graphs: &[Graph]) -> Self {
        let total = graphs.len();
        let connected = graphs.iter().filter(|g| g.is_connected()).count();
        let trees = graphs.iter().filter(|g| g.is_tree()).count();
        let permissible = graphs
            .iter()
            .filter(|g| check_permissible(g).permissible)
            .count();
        CensusRow {
            n,
            total,
            connected,
            trees,
            permissible,
            fraction: permissible as f64 / total as f64,
        }
    }

    /// The fraction rounded to four decimals.
    pub fn fraction_text(&self) -> String {
        format!("{:.4}", self.fraction)
    }

    /// Tab-separated `n total connected trees permissible fraction`.
    pub fn to_tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.n,
            self.total,
            self.connected,
            self.trees,
            self.permissible,
            self.fraction_text()
        )
    }
}

pub fn census_row(n: usize) -> Result<CensusRow, CensusError> {
    census_row_with(n, false)
}

pub fn census_row_with(n: usize, parallel: bool) -> Result<CensusRow, CensusError> {
    let graphs = enumerate_classes_with(n, parallel)?;
    Ok(CensusRow::from_graphs(n, &graphs))
}

/// Published class counts for `n = 1..=9`, including the two orders that
/// are too large to enumerate here. Planarity is not tracked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PublishedRow {
    pub n: usize,
    pub total: usize,
    pub connected: usize,
    pub trees: usize,
    pub permissible: usize,
    /// The fraction as printed, truncated rather than rounded.
    pub fraction: &'static str,
}

pub const PUBLISHED_ROWS: [PublishedRow; 9] = [
    PublishedRow { n: 1, total: 1, connected: 1, trees: 1, permissible: 1, fraction: "1" },
    PublishedRow { n: 2, total: 2, connected: 1, trees: 1, permissible: 1, fraction: "0.5" },
    PublishedRow { n: 3, total: 4, connected: 2, trees: 1, permissible: 0, fraction: "0" },
    PublishedRow { n: 4, total: 11, connected: 6, trees: 2, permissible: 1, fraction: "0.0909" },
    PublishedRow { n: 5, total: 34, connected: 21, trees: 3, permissible: 0, fraction: "0" },
    PublishedRow { n: 6, total: 156, connected: 112, trees: 6, permissible: 6, fraction: "0.038" },
    PublishedRow { n: 7, total: 1044, connected: 853, trees: 11, permissible: 62, fraction: "0.05938" },
    PublishedRow { n: 8, total: 12346, connected: 11117, trees: 23, permissible: 1024, fraction: "0.0829" },
    PublishedRow { n: 9, total: 274668, connected: 261080, trees: 47, permissible: 29285, fraction: "0.1066" },
];
