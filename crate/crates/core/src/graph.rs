//! Immutable simple undirected graphs.
//!
//! Vertices are `0..n`. Each graph may carry one external label per vertex
//! (e.g. `"1"`..`"7"` or `"A"`..`"G"`) that is used only for reporting.

use std::collections::VecDeque;

use thiserror::Error;

/// Internal 0-based vertex identifier.
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("expected {expected} labels, got {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("permutation is not a bijection on 0..{0}")]
    InvalidPermutation(usize),
}

/// A simple undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, repeated edges and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adjacency[u].contains(&v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            adjacency,
            labels: None,
        })
    }

    /// Attaches external labels, one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n() {
            return Err(GraphError::LabelCount {
                expected: self.n(),
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Drops external labels.
    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Degrees in vertex order.
    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Degrees sorted ascending.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable();
        d
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// External label of `v`, falling back to the internal id.
    pub fn label(&self, v: VertexId) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    /// Looks up the vertex carrying external label `label`. Without labels
    /// the internal id is accepted.
    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        match &self.labels {
            Some(labels) => labels.iter().position(|l| l == label),
            None => label.parse().ok().filter(|&v| v < self.n()),
        }
    }

    /// True iff every vertex is reachable from vertex 0. Vacuously true for
    /// `n <= 1`.
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == n
    }

    pub fn is_tree(&self) -> bool {
        self.n() > 0 && self.edge_count() == self.n() - 1 && self.is_connected()
    }

    /// Relabels the graph so that vertex `v` becomes `perm[v]`. Labels move
    /// with their vertices.
    pub fn permute(&self, perm: &[VertexId]) -> Result<Self, GraphError> {
        let n = self.n();
        if !is_permutation(perm, n) {
            return Err(GraphError::InvalidPermutation(n));
        }
        let mut adjacency = vec![Vec::new(); n];
        for (u, list) in self.adjacency.iter().enumerate() {
            adjacency[perm[u]] = list.iter().map(|&v| perm[v]).collect();
            adjacency[perm[u]].sort_unstable();
        }
        let labels = self.labels.as_ref().map(|labels| {
            let mut moved = vec![String::new(); n];
            for (v, l) in labels.iter().enumerate() {
                moved[perm[v]] = l.clone();
            }
            moved
        });
        Ok(Graph { adjacency, labels })
    }

    /// Number of slots in the upper-triangle adjacency bit string.
    pub fn pair_count(n: usize) -> usize {
        n * n.saturating_sub(1) / 2
    }

    /// Upper-triangle adjacency bits in column order (`j = 1..n`, `i < j`),
    /// first bit most significant. Requires `n <= 11`.
    pub fn to_mask(&self) -> u64 {
        let n = self.n();
        assert!(n <= 11, "adjacency mask needs n <= 11");
        let bits = Self::pair_count(n);
        let mut mask = 0u64;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    mask |= 1 << (bits - 1 - k);
                }
                k += 1;
            }
        }
        mask
    }

    /// Inverse of [`Graph::to_mask`].
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 11, "adjacency mask needs n <= 11");
        let bits = Self::pair_count(n);
        let mut adjacency = vec![Vec::new(); n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> (bits - 1 - k) & 1 == 1 {
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                }
                k += 1;
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            adjacency,
            labels: None,
        }
    }
}

pub(crate) fn is_permutation(perm: &[usize], n: usize) -> bool {
    if perm.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    true
}

/// True iff the graph is connected. See [`Graph::is_connected`].
pub fn is_connected(g: &Graph) -> bool {
    g.is_connected()
}

/// True iff the graph is connected with exactly `n - 1` edges.
pub fn is_tree(g: &Graph) -> bool {
    g.is_tree()
}
