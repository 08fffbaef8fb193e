//! Vertex UIDs: breadth-layered expansions of canonical neighbour lists.
//!
//! Starting from a root, each round walks the current frontier in order. An
//! unexpanded frontier vertex is expanded by emitting its canonical
//! neighbour list and queueing those neighbours for the next round; an
//! already expanded one emits a single `(x, -1)` marker. Rounds end with a
//! `(-2, -2)` separator. The expansion stops after the round in which the
//! last vertex is expanded.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexId};
use crate::profile::DegreeProfiles;

/// Numeric value of the separator sentinel in both rows.
pub const SEPARATOR: i64 = -2;
/// Numeric degree-row value marking an already expanded vertex.
pub const EXPANDED: i64 = -1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UidError {
    #[error("root {root} out of range for a graph on {n} vertices")]
    RootOutOfRange { root: VertexId, n: usize },
    #[error("graph is disconnected: {unreached} vertices unreachable from root {root}")]
    Disconnected { root: VertexId, unreached: usize },
}

/// One token pair of a UID.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Token {
    /// A vertex together with its degree.
    Vertex { vertex: VertexId, degree: usize },
    /// A frontier vertex that had already been expanded.
    Expanded(VertexId),
    Separator,
}

impl Token {
    /// Vertex-row value; the separator is `-2`.
    pub fn vertex_token(&self) -> i64 {
        match *self {
            Token::Vertex { vertex, .. } | Token::Expanded(vertex) => vertex as i64,
            Token::Separator => SEPARATOR,
        }
    }

    /// Degree-row value: the degree, `-1` for expanded markers, `-2` for
    /// separators.
    pub fn degree_token(&self) -> i64 {
        match *self {
            Token::Vertex { degree, .. } => degree as i64,
            Token::Expanded(_) => EXPANDED,
            Token::Separator => SEPARATOR,
        }
    }

    pub fn vertex(&self) -> Option<VertexId> {
        match *self {
            Token::Vertex { vertex, .. } | Token::Expanded(vertex) => Some(vertex),
            Token::Separator => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Uid {
    pub root: VertexId,
    /// Order of the graph the UID was taken from.
    pub n: usize,
    pub tokens: Vec<Token>,
}

impl Uid {
    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn vertex_row(&self) -> Vec<i64> {
        self.tokens.iter().map(Token::vertex_token).collect()
    }

    pub fn degree_row(&self) -> Vec<i64> {
        self.tokens.iter().map(Token::degree_token).collect()
    }

    /// Vertex row rendered with external labels; sentinels print as `-2`.
    pub fn labelled_vertex_row(&self, g: &Graph) -> Vec<String> {
        self.tokens
            .iter()
            .map(|t| match t.vertex() {
                Some(v) => g.label(v),
                None => SEPARATOR.to_string(),
            })
            .collect()
    }

    /// Number of expansion rounds (one less than the separator count).
    pub fn rounds(&self) -> usize {
        self.tokens.iter().filter(|t| **t == Token::Separator).count() - 1
    }
}

/// The degree row of `u`, the label-free part of a UID.
pub fn uid_degree_signature(u: &Uid) -> Vec<i64> {
    u.degree_row()
}

/// Generates the UID of `root`. The graph must be connected.
pub fn generate_uid(g: &Graph, root: VertexId) -> Result<Uid, UidError> {
    generate_uid_with(g, &DegreeProfiles::new(g), root)
}

/// As [`generate_uid`], reusing precomputed profiles of `g`.
pub fn generate_uid_with(
    g: &Graph,
    profiles: &DegreeProfiles,
    root: VertexId,
) -> Result<Uid, UidError> {
    let n = g.n();
    if root >= n {
        return Err(UidError::RootOutOfRange { root, n });
    }
    let mut tokens = vec![
        Token::Vertex {
            vertex: root,
            degree: g.degree(root),
        },
        Token::Separator,
    ];
    let mut expanded = vec![false; n];
    let mut remaining = n;
    let mut frontier = vec![root];
    while remaining > 0 {
        if frontier.is_empty() {
            return Err(UidError::Disconnected {
                root,
                unreached: remaining,
            });
        }
        let mut next = Vec::new();
        for &x in &frontier {
            if expanded[x] {
                tokens.push(Token::Expanded(x));
                continue;
            }
            expanded[x] = true;
            remaining -= 1;
            for &(y, degree) in &profiles.profile(x).entries {
                tokens.push(Token::Vertex { vertex: y, degree });
                next.push(y);
            }
        }
        tokens.push(Token::Separator);
        frontier = next;
    }
    Ok(Uid { root, n, tokens })
}

/// UIDs of every vertex, in vertex order.
pub fn generate_all_uids(g: &Graph, parallel: bool) -> Result<Vec<Uid>, UidError> {
    let profiles = DegreeProfiles::new(g);
    if parallel {
        (0..g.n())
            .into_par_iter()
            .map(|v| generate_uid_with(g, &profiles, v))
            .collect()
    } else {
        (0..g.n()).map(|v| generate_uid_with(g, &profiles, v)).collect()
    }
}
