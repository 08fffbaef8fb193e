//! Random graphs and relabellings for property tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, VertexId};
use crate::profile::check_permissible;

/// Uniform random permutation of `0..n`.
pub fn random_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<VertexId> {
    let mut perm: Vec<VertexId> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// Erdős–Rényi graph: each pair joined independently with probability `p`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).expect("generated pairs are distinct")
}

/// A random spanning tree (random attachment) overlaid with an
/// Erdős–Rényi graph, so the result is always connected.
pub fn random_connected_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let order = random_permutation(n, rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        let (u, v) = (parent.min(order[i]), parent.max(order[i]));
        edges.push((u, v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated pairs are distinct")
}

/// Rejection-samples a permissible graph from [`random_connected_graph`],
/// giving up after `attempts` draws.
pub fn random_permissible_graph<R: Rng + ?Sized>(
    n: usize,
    p: f64,
    attempts: usize,
    rng: &mut R,
) -> Option<Graph> {
    (0..attempts)
        .map(|_| random_connected_graph(n, p, rng))
        .find(|g| check_permissible(g).permissible)
}

/// Applies up to `swaps` random double-edge swaps (`ab, cd -> ad, cb`),
/// each kept only if it creates no loop or repeated edge. Degrees are
/// preserved.
pub fn degree_preserving_rewire<R: Rng + ?Sized>(g: &Graph, swaps: usize, rng: &mut R) -> Graph {
    let mut edges: Vec<(VertexId, VertexId)> = g.edges().collect();
    if edges.len() < 2 {
        return g.clone().without_labels();
    }
    let mut current = g.clone();
    for _ in 0..swaps {
        let i = rng.gen_range(0..edges.len());
        let j = rng.gen_range(0..edges.len());
        if i == j {
            continue;
        }
        let (a, b) = edges[i];
        let (mut c, mut d) = edges[j];
        if rng.gen_bool(0.5) {
            std::mem::swap(&mut c, &mut d);
        }
        if a == d || c == b || current.has_edge(a, d) || current.has_edge(c, b) {
            continue;
        }
        edges[i] = (a.min(d), a.max(d));
        edges[j] = (c.min(b), c.max(b));
        current = Graph::from_edges(g.n(), edges.iter().copied()).expect("swap keeps graph simple");
    }
    current.without_labels()
}
