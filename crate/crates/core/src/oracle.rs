//! Brute-force isomorphism by permutation search.
//!
//! Vertices of the first graph are assigned in id order, candidates in
//! ascending id order, so the first mapping found is the lexicographically
//! smallest. Candidates must match in degree and agree on adjacency with all
//! previously assigned vertices; nothing cleverer is attempted.

use thiserror::Error;

use crate::graph::{Graph, VertexId};
use crate::iso::IsoMapping;

/// Largest order accepted by [`oracle_isomorphism`].
pub const MAX_ORACLE_N: usize = 10;
/// Largest order accepted by [`oracle_all_isomorphisms`].
pub const MAX_ENUMERATION_N: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle limited to n <= {limit}, got {n}")]
    TooLarge { n: usize, limit: usize },
}

struct Search<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    forward: Vec<VertexId>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn compatible(&self, v: VertexId, w: VertexId) -> bool {
        !self.used[w]
            && self.g1.degree(v) == self.g2.degree(w)
            && (0..v).all(|u| self.g1.has_edge(u, v) == self.g2.has_edge(self.forward[u], w))
    }

    /// Depth-first over assignments of vertex `v`; `visit` returns false to
    /// stop the search.
    fn run(&mut self, v: VertexId, visit: &mut dyn FnMut(&[VertexId]) -> bool) -> bool {
        if v == self.g1.n() {
            return visit(&self.forward);
        }
        for w in 0..self.g2.n() {
            if !self.compatible(v, w) {
                continue;
            }
            self.forward[v] = w;
            self.used[w] = true;
            let go_on = self.run(v + 1, visit);
            self.used[w] = false;
            if !go_on {
                return false;
            }
        }
        true
    }
}

fn search(g1: &Graph, g2: &Graph, limit: usize, visit: &mut dyn FnMut(&[VertexId]) -> bool) -> Result<(), OracleError> {
    for n in [g1.n(), g2.n()] {
        if n > limit {
            return Err(OracleError::TooLarge { n, limit });
        }
    }
    if g1.n() != g2.n()
        || g1.edge_count() != g2.edge_count()
        || g1.degree_multiset() != g2.degree_multiset()
    {
        return Ok(());
    }
    let mut s = Search {
        g1,
        g2,
        forward: vec![0; g1.n()],
        used: vec![false; g1.n()],
    };
    s.run(0, visit);
    Ok(())
}

/// Lexicographically smallest isomorphism from `g1` to `g2`, if any.
pub fn oracle_isomorphism(g1: &Graph, g2: &Graph) -> Result<Option<IsoMapping>, OracleError> {
    let mut found = None;
    search(g1, g2, MAX_ORACLE_N, &mut |forward| {
        found = IsoMapping::from_forward(forward.to_vec());
        false
    })?;
    Ok(found)
}

/// Every isomorphism from `g1` to `g2`, sorted lexicographically.
pub fn oracle_all_isomorphisms(g1: &Graph, g2: &Graph) -> Result<Vec<IsoMapping>, OracleError> {
    let mut all = Vec::new();
    search(g1, g2, MAX_ENUMERATION_N, &mut |forward| {
        all.extend(IsoMapping::from_forward(forward.to_vec()));
        true
    })?;
    Ok(all)
}
