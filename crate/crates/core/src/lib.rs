//! Graph isomorphism for graphs whose vertices never have two neighbours
//! with the same degree profile.
//!
//! For such *permissible* graphs every vertex has a canonical neighbour
//! order, and a breadth-layered expansion from any root yields a UID that
//! does not depend on vertex labels. Comparing UIDs position by position
//! produces an explicit isomorphism, which is then checked edge by edge.
//!
//! ```
//! use uidiso::{find_isomorphism, parse_edge_list, IsoResult};
//!
//! let a = parse_edge_list("4\n1 2\n2 3\n3 4\n").unwrap();
//! let b = parse_edge_list("4\n3 1\n1 4\n4 2\n").unwrap();
//! assert!(matches!(find_isomorphism(&a, &b), IsoResult::Isomorphic(_)));
//! ```
//!
//! The crate also ships a brute-force oracle ([`oracle`]) and an exhaustive
//! class census for small orders ([`census`]).

pub mod census;
pub mod edge_list;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod oracle;
pub mod profile;
pub mod random;
pub mod uid;

pub use census::{
    canonical_code, census_row, census_row_with, enumerate_classes, enumerate_classes_with,
    CanonicalCode, CensusError, CensusRow,
};
pub use edge_list::{parse_edge_list, write_edge_list, EdgeListError};
pub use graph::{is_connected, is_tree, Graph, GraphError, VertexId};
pub use graph6::{encode_graph6, parse_graph6, Graph6Error};
pub use iso::{
    compare_uid, find_isomorphism, find_isomorphism_rooted, verify_mapping, IsoMapping, IsoResult,
    PartialMapping, Side,
};
pub use oracle::{oracle_all_isomorphisms, oracle_isomorphism, OracleError};
pub use profile::{
    check_permissible, compute_dsv, DegreeProfiles, NeighborKey, NeighborProfile,
    PermissibilityVerdict, Reason, Witness,
};
pub use uid::{generate_all_uids, generate_uid, uid_degree_signature, Token, Uid, UidError};
