//! Plain-text edge-list format.
//!
//! ```text
//! # comment lines start with '#'
//! 4
//! 0 1
//! 1 2
//! 2 3
//! ```
//!
//! The first non-comment, non-blank line is the vertex count; every later one
//! is `u v` with 0-based indices separated by a single space. Input must be
//! ASCII with `\n` line endings. Anything else is rejected.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: non-ASCII or control byte")]
    InvalidByte { line: usize },
    #[error("no vertex count line found")]
    MissingHeader,
    #[error("line {line}: expected a vertex count, found {text:?}")]
    BadHeader { line: usize, text: String },
    #[error("line {line}: expected \"u v\", found {text:?}")]
    BadEdge { line: usize, text: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
}

fn parse_index(token: &str) -> Option<usize> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    token.parse().ok()
}

pub fn parse(text: &str) -> Result<Graph, ParseError> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut header_line = 0;
    for (i, line) in text.split('\n').enumerate() {
        let line_no = i + 1;
        if line.bytes().any(|b| !(b == b' ' || b == b'\t' || b.is_ascii_graphic())) {
            return Err(ParseError::InvalidByte { line: line_no });
        }
        if line.starts_with('#') || line.trim().is_empty() {
            continue;
        }
        match n {
            None => {
                n = Some(
                    parse_index(line).ok_or_else(|| ParseError::BadHeader { line: line_no, text: line.to_string() })?,
                );
                header_line = line_no;
            }
            Some(_) => {
                let bad = || ParseError::BadEdge { line: line_no, text: line.to_string() };
                let (u, v) = line.split_once(' ').ok_or_else(bad)?;
                let u = parse_index(u).ok_or_else(bad)?;
                let v = parse_index(v).ok_or_else(bad)?;
                edges.push((line_no, u, v));
            }
        }
    }
    let n = n.ok_or(ParseError::MissingHeader)?;
    // Validate edges one at a time so the diagnostic names the offending line.
    let mut pairs = Vec::with_capacity(edges.len());
    for (line, u, v) in edges {
        if u >= n || v >= n {
            return Err(ParseError::Graph { line, source: GraphError::EndpointOutOfRange { u, v, n } });
        }
        if u == v {
            return Err(ParseError::Graph { line, source: GraphError::SelfLoop { v } });
        }
        pairs.push((u, v));
    }
    Graph::from_edge_list(n, &pairs).map_err(|source| ParseError::Graph { line: header_line, source })
}

/// Serializes `graph` with `comments` as leading `#` lines. Edges are written
/// as `u v` with `u < v`, ascending.
pub fn write(graph: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        for line in c.lines() {
            out.push_str("# ");
            out.push_str(line);
            out.push('\n');
        }
    }
    out.push_str(&graph.order().to_string());
    out.push('\n');
    for (u, v) in graph.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_commented_path() {
        let g = parse("# P4\n\n4\n0 1\n# mid\n1 2\n2 3\n").unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn header_only_is_edgeless() {
        let g = parse("3").unwrap();
        assert_eq!((g.order(), g.size()), (3, 0));
    }

    #[test]
    fn rejects_off_grammar_input() {
        assert_eq!(parse(""), Err(ParseError::MissingHeader));
        assert!(matches!(parse("x\n"), Err(ParseError::BadHeader { line: 1, .. })));
        assert!(matches!(parse("3\n0  1\n"), Err(ParseError::BadEdge { line: 2, .. })));
        assert!(matches!(parse("3\n0\t1\n"), Err(ParseError::BadEdge { line: 2, .. })));
        assert!(matches!(parse("3\n0 1 2\n"), Err(ParseError::BadEdge { line: 2, .. })));
        assert!(matches!(parse("3\n-1 2\n"), Err(ParseError::BadEdge { line: 2, .. })));
        assert!(matches!(parse("3\r\n0 1\r\n"), Err(ParseError::InvalidByte { line: 1 })));
        assert!(matches!(parse("3\n0 1 \n"), Err(ParseError::BadEdge { .. })));
        assert!(matches!(parse(" 3\n"), Err(ParseError::BadHeader { .. })));
        assert!(matches!(parse("2\n0 ü\n"), Err(ParseError::InvalidByte { line: 2 })));
    }

    #[test]
    fn graph_errors_carry_line() {
        assert_eq!(parse("2\n0 1\n1 1\n"), Err(ParseError::Graph { line: 3, source: GraphError::SelfLoop { v: 1 } }));
        assert_eq!(
            parse("2\n0 5\n"),
            Err(ParseError::Graph { line: 2, source: GraphError::EndpointOutOfRange { u: 0, v: 5, n: 2 } })
        );
        assert!(matches!(parse("0\n"), Err(ParseError::Graph { source: GraphError::Empty, .. })));
    }

    #[test]
    fn write_then_parse() {
        let g = Graph::from_edge_list(5, &[(4, 0), (1, 3), (2, 1)]).unwrap();
        let text = write(&g, &["five\nvertices".to_string()]);
        assert_eq!(text, "# five\n# vertices\n5\n0 4\n1 2\n1 3\n");
        assert_eq!(parse(&text).unwrap(), g);
    }
}
