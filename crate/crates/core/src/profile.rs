//! Neighbourhood degree lists and the permissibility check.
//!
//! Every vertex `x` gets a label-free key: its degree followed by the sorted
//! degrees of its own neighbours. A vertex's neighbour list ordered by these
//! keys is its canonical neighbourhood degree list. A connected graph is
//! *permissible* when no vertex has two neighbours with equal keys, which
//! makes every such order strict.

use serde::Serialize;

use crate::graph::{Graph, VertexId};

/// Label-free profile of a vertex. Ordered by degree, then lexicographically
/// by the sorted neighbour degrees.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct NeighborKey {
    pub degree: usize,
    pub neighbor_degrees: Vec<usize>,
}

impl NeighborKey {
    pub fn of(g: &Graph, x: VertexId) -> Self {
        let mut neighbor_degrees: Vec<usize> = g.neighbors(x).iter().map(|&y| g.degree(y)).collect();
        neighbor_degrees.sort_unstable();
        NeighborKey {
            degree: g.degree(x),
            neighbor_degrees,
        }
    }
}

/// A vertex's neighbours in canonical order, each with its degree and key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborProfile {
    pub vertex: VertexId,
    /// `(neighbour, degree(neighbour))` pairs in key order.
    pub entries: Vec<(VertexId, usize)>,
    /// `keys[i]` is the key of `entries[i].0`.
    pub keys: Vec<NeighborKey>,
}

impl NeighborProfile {
    /// True iff consecutive keys are strictly increasing.
    pub fn is_strict(&self) -> bool {
        self.keys.windows(2).all(|w| w[0] < w[1])
    }

    /// First pair of neighbours sharing a key, in canonical order.
    pub fn first_tie(&self) -> Option<(VertexId, VertexId)> {
        (1..self.keys.len())
            .find(|&i| self.keys[i - 1] == self.keys[i])
            .map(|i| (self.entries[i - 1].0, self.entries[i].0))
    }
}

/// Keys and canonical neighbour lists for every vertex of one graph.
#[derive(Debug, Clone)]
pub struct DegreeProfiles {
    keys: Vec<NeighborKey>,
    profiles: Vec<NeighborProfile>,
}

impl DegreeProfiles {
    pub fn new(g: &Graph) -> Self {
        let keys: Vec<NeighborKey> = (0..g.n()).map(|x| NeighborKey::of(g, x)).collect();
        let profiles = (0..g.n())
            .map(|v| {
                let mut order = g.neighbors(v).to_vec();
                // neighbours are stored ascending, so a stable sort breaks key
                // ties by vertex id
                order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
                NeighborProfile {
                    vertex: v,
                    entries: order.iter().map(|&x| (x, g.degree(x))).collect(),
                    keys: order.iter().map(|&x| keys[x].clone()).collect(),
                }
            })
            .collect();
        DegreeProfiles { keys, profiles }
    }

    pub fn key(&self, x: VertexId) -> &NeighborKey {
        &self.keys[x]
    }

    pub fn profile(&self, v: VertexId) -> &NeighborProfile {
        &self.profiles[v]
    }

    pub fn len(&self) -> usize {
        self.profiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.profiles.is_empty()
    }
}

/// Canonical neighbourhood degree list of `v`.
pub fn compute_dsv(g: &Graph, v: VertexId) -> NeighborProfile {
    assert!(v < g.n(), "vertex {v} out of range");
    let keys: Vec<NeighborKey> = g.neighbors(v).iter().map(|&x| NeighborKey::of(g, x)).collect();
    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    NeighborProfile {
        vertex: v,
        entries: order
            .iter()
            .map(|&i| {
                let x = g.neighbors(v)[i];
                (x, g.degree(x))
            })
            .collect(),
        keys: order.iter().map(|&i| keys[i].clone()).collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Reason {
    NotConnected,
    DuplicateNeighborKey,
    Permissible,
}

/// Two neighbours `x` and `y` of `vertex` that share a key.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub vertex: VertexId,
    pub x: VertexId,
    pub y: VertexId,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PermissibilityVerdict {
    pub permissible: bool,
    pub reason: Reason,
    pub witness: Option<Witness>,
}

impl PermissibilityVerdict {
    fn permissible() -> Self {
        PermissibilityVerdict {
            permissible: true,
            reason: Reason::Permissible,
            witness: None,
        }
    }
}

/// Decides permissibility. The witness, if any, is the first tie found when
/// scanning vertices in id order.
pub fn check_permissible(g: &Graph) -> PermissibilityVerdict {
    check_with_profiles(g, &DegreeProfiles::new(g))
}

/// As [`check_permissible`], reusing precomputed profiles of `g`.
pub fn check_with_profiles(g: &Graph, profiles: &DegreeProfiles) -> PermissibilityVerdict {
    if !g.is_connected() {
        return PermissibilityVerdict {
            permissible: false,
            reason: Reason::NotConnected,
            witness: None,
        };
    }
    for v in 0..g.n() {
        if let Some((x, y)) = profiles.profile(v).first_tie() {
            return PermissibilityVerdict {
                permissible: false,
                reason: Reason::DuplicateNeighborKey,
                witness: Some(Witness { vertex: v, x, y }),
            };
        }
    }
    PermissibilityVerdict::permissible()
}
