//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! 7          <- vertex count
//! 1 2        <- one edge per line, 1-based labels
//! 2 3
//! ```
//!
//! Vertices may alternatively be named by single letters (`A` = 1, `B` = 2,
//! ...). A file uses one style throughout; the style chosen is kept as the
//! graph's external labels.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("missing vertex count")]
    MissingCount,
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: self-loop on {label}")]
    SelfLoop { line: usize, label: String },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: String, v: String },
    #[error("line {line}: vertex {label} out of range 1..={n}")]
    OutOfRange { line: usize, label: String, n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum LabelStyle {
    Numeric,
    Letter,
}

fn letter_label(v: usize) -> String {
    char::from(b'A' + v as u8).to_string()
}

fn token_style(token: &str) -> Option<LabelStyle> {
    if token.len() == 1 && token.as_bytes()[0].is_ascii_alphabetic() {
        Some(LabelStyle::Letter)
    } else if token.bytes().all(|b| b.is_ascii_digit()) {
        Some(LabelStyle::Numeric)
    } else {
        None
    }
}

/// 1-based index named by `token`, not yet range-checked.
fn token_index(token: &str, style: LabelStyle) -> Option<usize> {
    match style {
        LabelStyle::Numeric => token.parse().ok(),
        LabelStyle::Letter => {
            let b = token.as_bytes()[0].to_ascii_uppercase();
            Some(usize::from(b - b'A') + 1)
        }
    }
}

/// Parses an edge list into a labelled graph; internal id = label index - 1.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.split('#').next().unwrap_or("").trim()))
        .filter(|(_, line)| !line.is_empty());

    let (count_line, count) = lines.next().ok_or(EdgeListError::MissingCount)?;
    let n: usize = count.parse().map_err(|_| EdgeListError::Malformed {
        line: count_line,
        message: format!("expected a vertex count, found {count:?}"),
    })?;

    let mut raw_edges = Vec::new();
    let mut style = None;
    for (line, content) in lines {
        let fields: Vec<&str> = content.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(EdgeListError::Malformed {
                line,
                message: format!("expected two vertex labels, found {content:?}"),
            });
        };
        for token in [u, v] {
            let this = token_style(token).ok_or_else(|| EdgeListError::Malformed {
                line,
                message: format!("invalid vertex label {token:?}"),
            })?;
            match style {
                None => style = Some(this),
                Some(s) if s != this => {
                    return Err(EdgeListError::Malformed {
                        line,
                        message: "mixed numeric and letter labels".into(),
                    })
                }
                Some(_) => {}
            }
        }
        raw_edges.push((line, u, v));
    }
    let style = style.unwrap_or(LabelStyle::Numeric);
    if style == LabelStyle::Letter && n > 26 {
        return Err(EdgeListError::Malformed {
            line: count_line,
            message: format!("letter labels support at most 26 vertices, not {n}"),
        });
    }

    let mut edges = Vec::with_capacity(raw_edges.len());
    for (line, u, v) in raw_edges {
        let mut ids = [0; 2];
        for (slot, token) in ids.iter_mut().zip([u, v]) {
            match token_index(token, style) {
                Some(i) if (1..=n).contains(&i) => *slot = i - 1,
                _ => {
                    return Err(EdgeListError::OutOfRange {
                        line,
                        label: token.to_string(),
                        n,
                    })
                }
            }
        }
        if ids[0] == ids[1] {
            return Err(EdgeListError::SelfLoop {
                line,
                label: u.to_string(),
            });
        }
        if edges.iter().any(|&(a, b)| (a, b) == (ids[0], ids[1]) || (b, a) == (ids[0], ids[1])) {
            return Err(EdgeListError::DuplicateEdge {
                line,
                u: u.to_string(),
                v: v.to_string(),
            });
        }
        edges.push((ids[0], ids[1]));
    }

    let labels = (0..n)
        .map(|v| match style {
            LabelStyle::Numeric => (v + 1).to_string(),
            LabelStyle::Letter => letter_label(v),
        })
        .collect();
    let graph = Graph::from_edges(n, edges).expect("edges validated above");
    Ok(graph.with_labels(labels).expect("one label per vertex"))
}

/// Writes `g` as an edge list using 1-based numeric labels.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const G1: &str = "# first worked example\n7\n1 2\n2 3\n2 4\n3 4\n4 5\n4 6\n6 7\n";

    #[test]
    fn parses_numeric_graph() {
        let g = parse_edge_list(G1).unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!(g.degrees(), vec![1, 3, 2, 4, 1, 2, 1]);
        assert_eq!(g.label(3), "4");
        assert_eq!(g.neighbors(3), &[1, 2, 4, 5]);
    }

    #[test]
    fn parses_letter_graph() {
        let g = parse_edge_list("7\nA B\nB D\nC D\nD E\nD F\nE F\nF G\n").unwrap();
        assert_eq!(g.degrees(), vec![1, 2, 1, 4, 2, 3, 1]);
        assert_eq!(g.label(6), "G");
        assert_eq!(g.vertex_by_label("D"), Some(3));
    }

    #[test]
    fn single_vertex_and_blank_lines() {
        let g = parse_edge_list("1\n").unwrap();
        assert_eq!((g.n(), g.edge_count()), (1, 0));
        let g = parse_edge_list("\n  # nothing\n3\n\n1 2 # trailing\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn error_paths() {
        assert_eq!(
            parse_edge_list("3\n3 3\n"),
            Err(EdgeListError::SelfLoop {
                line: 2,
                label: "3".into()
            })
        );
        assert!(matches!(
            parse_edge_list("3\n1 2\n2 1\n"),
            Err(EdgeListError::DuplicateEdge { line: 3, .. })
        ));
        assert!(matches!(
            parse_edge_list("3\n1 4\n"),
            Err(EdgeListError::OutOfRange { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3\n0 1\n"),
            Err(EdgeListError::OutOfRange { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3\n1 2 3\n"),
            Err(EdgeListError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3\n1 B\n"),
            Err(EdgeListError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("x\n"),
            Err(EdgeListError::Malformed { line: 1, .. })
        ));
        assert_eq!(parse_edge_list("# only\n"), Err(EdgeListError::MissingCount));
    }

    #[test]
    fn write_then_parse() {
        let g = parse_edge_list(G1).unwrap();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }
}
