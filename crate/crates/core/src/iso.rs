//! Isomorphism of permissible graphs by positional UID comparison.
//!
//! Two UIDs are aligned token by token: kinds and degrees must agree and the
//! vertex tokens must induce a consistent, injective association. A single
//! aligned pair of UIDs names an image for every vertex, so the driver fixes
//! one root in the first graph and tries each same-degree vertex of the
//! second graph. Every candidate is checked edge by edge before it is
//! returned.

use serde::Serialize;

use crate::graph::{is_permutation, Graph, VertexId};
use crate::profile::{check_with_profiles, DegreeProfiles, PermissibilityVerdict};
use crate::uid::{generate_uid_with, Token, Uid};

/// A bijection between the vertex sets of two graphs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct IsoMapping {
    forward: Vec<VertexId>,
    backward: Vec<VertexId>,
}

impl IsoMapping {
    /// Builds the mapping `v -> forward[v]`; `None` unless `forward` is a
    /// permutation of `0..forward.len()`.
    pub fn from_forward(forward: Vec<VertexId>) -> Option<Self> {
        if !is_permutation(&forward, forward.len()) {
            return None;
        }
        let mut backward = vec![0; forward.len()];
        for (v, &w) in forward.iter().enumerate() {
            backward[w] = v;
        }
        Some(IsoMapping { forward, backward })
    }

    pub fn identity(n: usize) -> Self {
        IsoMapping {
            forward: (0..n).collect(),
            backward: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn image(&self, v: VertexId) -> VertexId {
        self.forward[v]
    }

    pub fn preimage(&self, w: VertexId) -> VertexId {
        self.backward[w]
    }

    pub fn forward(&self) -> &[VertexId] {
        &self.forward
    }

    pub fn backward(&self) -> &[VertexId] {
        &self.backward
    }

    pub fn inverse(&self) -> Self {
        IsoMapping {
            forward: self.backward.clone(),
            backward: self.forward.clone(),
        }
    }

    /// `(label in g1, label in g2)` for every vertex of `g1`, in vertex order.
    pub fn labelled_pairs(&self, g1: &Graph, g2: &Graph) -> Vec<(String, String)> {
        self.forward
            .iter()
            .enumerate()
            .map(|(v, &w)| (g1.label(v), g2.label(w)))
            .collect()
    }
}

/// Association read off an aligned pair of UIDs. Vertices that never occur
/// in the UIDs stay unassigned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialMapping {
    pub forward: Vec<Option<VertexId>>,
}

impl PartialMapping {
    pub fn assigned(&self) -> usize {
        self.forward.iter().flatten().count()
    }

    /// The full bijection, if every vertex is assigned.
    pub fn into_mapping(self) -> Option<IsoMapping> {
        let forward: Option<Vec<VertexId>> = self.forward.into_iter().collect();
        IsoMapping::from_forward(forward?)
    }
}

fn tokens_align(a: &Token, b: &Token) -> bool {
    match (a, b) {
        (Token::Separator, Token::Separator) => true,
        (Token::Expanded(_), Token::Expanded(_)) => true,
        (Token::Vertex { degree: da, .. }, Token::Vertex { degree: db, .. }) => da == db,
        _ => false,
    }
}

/// Aligns two UIDs position by position. Returns the induced association
/// when lengths, token kinds and degrees agree and the vertex tokens are
/// consistent in both directions.
pub fn compare_uid(a: &Uid, b: &Uid) -> Option<PartialMapping> {
    if a.n != b.n || a.len() != b.len() {
        return None;
    }
    let mut forward = vec![None; a.n];
    let mut backward = vec![None; b.n];
    for (ta, tb) in a.tokens.iter().zip(&b.tokens) {
        if !tokens_align(ta, tb) {
            return None;
        }
        let (Some(x), Some(y)) = (ta.vertex(), tb.vertex()) else {
            continue;
        };
        match (forward[x], backward[y]) {
            (None, None) => {
                forward[x] = Some(y);
                backward[y] = Some(x);
            }
            (Some(fx), Some(by)) if fx == y && by == x => {}
            _ => return None,
        }
    }
    Some(PartialMapping { forward })
}

/// True iff `m` is a bijection with `u ~ v` in `g1` exactly when
/// `m(u) ~ m(v)` in `g2`.
pub fn verify_mapping(g1: &Graph, g2: &Graph, m: &IsoMapping) -> bool {
    let n = g1.n();
    if g2.n() != n || m.len() != n || g1.edge_count() != g2.edge_count() {
        return false;
    }
    // equal edge counts plus an injective edge map make the map onto
    g1.edges().all(|(u, v)| g2.has_edge(m.image(u), m.image(v)))
}

/// Which input failed the permissibility check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    First,
    Second,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoResult {
    Isomorphic(IsoMapping),
    NotIsomorphic,
    Inapplicable {
        side: Side,
        verdict: PermissibilityVerdict,
    },
}

impl IsoResult {
    pub fn mapping(&self) -> Option<&IsoMapping> {
        match self {
            IsoResult::Isomorphic(m) => Some(m),
            _ => None,
        }
    }

    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoResult::Isomorphic(_))
    }
}

/// Decides isomorphism of two permissible graphs, rooting the first graph's
/// UID at vertex 0.
pub fn find_isomorphism(g1: &Graph, g2: &Graph) -> IsoResult {
    find_isomorphism_rooted(g1, g2, 0)
}

/// As [`find_isomorphism`] with an explicit root in `g1`. Out-of-range roots
/// fall back to vertex 0.
pub fn find_isomorphism_rooted(g1: &Graph, g2: &Graph, root: VertexId) -> IsoResult {
    let p1 = DegreeProfiles::new(g1);
    let p2 = DegreeProfiles::new(g2);
    for (side, g, p) in [(Side::First, g1, &p1), (Side::Second, g2, &p2)] {
        let verdict = check_with_profiles(g, p);
        if !verdict.permissible {
            return IsoResult::Inapplicable { side, verdict };
        }
    }
    match_permissible(g1, &p1, g2, &p2, root)
}

/// The matching phase alone. Both graphs must already be known to be
/// permissible.
pub fn match_permissible(
    g1: &Graph,
    p1: &DegreeProfiles,
    g2: &Graph,
    p2: &DegreeProfiles,
    root: VertexId,
) -> IsoResult {
    if g1.n() != g2.n()
        || g1.edge_count() != g2.edge_count()
        || g1.degree_multiset() != g2.degree_multiset()
    {
        return IsoResult::NotIsomorphic;
    }
    if g1.n() == 0 {
        return IsoResult::Isomorphic(IsoMapping::identity(0));
    }
    let root = if root < g1.n() { root } else { 0 };
    let uid1 = generate_uid_with(g1, p1, root).expect("permissible graphs are connected");
    for w in (0..g2.n()).filter(|&w| g2.degree(w) == g1.degree(root)) {
        let uid2 = generate_uid_with(g2, p2, w).expect("permissible graphs are connected");
        let Some(mapping) = compare_uid(&uid1, &uid2).and_then(PartialMapping::into_mapping) else {
            continue;
        };
        if verify_mapping(g1, g2, &mapping) {
            return IsoResult::Isomorphic(mapping);
        }
    }
    IsoResult::NotIsomorphic
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uid::generate_uid;

    fn p4() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn mapping_construction() {
        assert!(IsoMapping::from_forward(vec![1, 1]).is_none());
        assert!(IsoMapping::from_forward(vec![0, 2]).is_none());
        let m = IsoMapping::from_forward(vec![2, 0, 1]).unwrap();
        assert_eq!(m.backward(), &[1, 2, 0]);
        assert_eq!(m.inverse().inverse(), m);
    }

    #[test]
    fn compare_rejects_length_and_degree_mismatch() {
        let g = p4();
        let end = generate_uid(&g, 0).unwrap();
        let middle = generate_uid(&g, 1).unwrap();
        assert!(compare_uid(&end, &middle).is_none());
        let other_end = generate_uid(&g, 3).unwrap();
        let m = compare_uid(&end, &other_end).unwrap().into_mapping().unwrap();
        assert_eq!(m.forward(), &[3, 2, 1, 0]);
    }

    #[test]
    fn compare_rejects_non_injective_association() {
        // hand-built UIDs that would send 0 and 1 both to 0
        let a = Uid {
            root: 0,
            n: 2,
            tokens: vec![
                Token::Vertex { vertex: 0, degree: 1 },
                Token::Separator,
                Token::Vertex { vertex: 1, degree: 1 },
                Token::Separator,
            ],
        };
        let b = Uid {
            root: 0,
            n: 2,
            tokens: vec![
                Token::Vertex { vertex: 0, degree: 1 },
                Token::Separator,
                Token::Vertex { vertex: 0, degree: 1 },
                Token::Separator,
            ],
        };
        assert!(compare_uid(&a, &b).is_none());
    }

    #[test]
    fn verify() {
        let g = p4();
        assert!(verify_mapping(&g, &g, &IsoMapping::identity(4)));
        assert!(verify_mapping(
            &g,
            &g,
            &IsoMapping::from_forward(vec![3, 2, 1, 0]).unwrap()
        ));
        assert!(!verify_mapping(
            &g,
            &g,
            &IsoMapping::from_forward(vec![1, 0, 2, 3]).unwrap()
        ));
    }

    #[test]
    fn star_is_inapplicable() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        match find_isomorphism(&p4(), &star) {
            IsoResult::Inapplicable { side, verdict } => {
                assert_eq!(side, Side::Second);
                assert!(!verdict.permissible);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn automorphic_target_picks_smallest_candidate() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(
            find_isomorphism(&k2, &k2),
            IsoResult::Isomorphic(IsoMapping::identity(2))
        );
        assert_eq!(
            find_isomorphism(&p4(), &p4()),
            IsoResult::Isomorphic(IsoMapping::identity(4))
        );
    }

    #[test]
    fn different_orders_are_not_isomorphic() {
        let k1 = Graph::empty(1);
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(find_isomorphism(&k1, &k2), IsoResult::NotIsomorphic);
        assert!(find_isomorphism(&k1, &k1).is_isomorphic());
    }
}
