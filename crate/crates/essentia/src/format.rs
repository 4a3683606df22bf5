//! Plain-text graph files.
//!
//! ```text
//! c optional comments, anywhere
//! p ud 3 3        (or `p di n m` for a digraph)
//! e 1 2
//! e 2 3
//! e 1 3
//! ```
//!
//! Ids in the file are 1-based; in memory they are 0-based.

use std::fmt::Write as _;

use essentia_core::{Digraph, Graph, GraphError, Instance};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `p` header")]
    MissingHeader,
    #[error("malformed header (expected `p ud|di n m`)")]
    MalformedHeader,
    #[error("second `p` header")]
    RepeatedHeader,
    #[error("malformed edge line (expected `e u v`)")]
    MalformedEdge,
    #[error("unrecognised line")]
    UnknownLine,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

pub fn parse_graph(text: &str) -> Result<Instance, ParseError> {
    let mut instance: Option<(Instance, usize)> = None;
    let mut found = 0;
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last = line;
        let mut tok = raw.split_whitespace();
        match tok.next() {
            None | Some("c") => {}
            Some("p") => {
                if instance.is_some() {
                    return Err(err(line, ParseErrorKind::RepeatedHeader));
                }
                let fields: Vec<&str> = tok.collect();
                let [kind, n, m] = fields[..] else {
                    return Err(err(line, ParseErrorKind::MalformedHeader));
                };
                let (Ok(n), Ok(m)) = (n.parse::<usize>(), m.parse::<usize>()) else {
                    return Err(err(line, ParseErrorKind::MalformedHeader));
                };
                let empty = match kind {
                    "ud" => Instance::Undirected(Graph::new(n)),
                    "di" => Instance::Directed(Digraph::new(n)),
                    _ => return Err(err(line, ParseErrorKind::MalformedHeader)),
                };
                instance = Some((empty, m));
            }
            Some("e") => {
                let Some((g, _)) = instance.as_mut() else {
                    return Err(err(line, ParseErrorKind::MissingHeader));
                };
                let fields: Vec<&str> = tok.collect();
                let [u, v] = fields[..] else {
                    return Err(err(line, ParseErrorKind::MalformedEdge));
                };
                let (Ok(u), Ok(v)) = (u.parse::<usize>(), v.parse::<usize>()) else {
                    return Err(err(line, ParseErrorKind::MalformedEdge));
                };
                let n = g.n();
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(err(line, ParseErrorKind::OutOfRange { vertex: x, n }));
                    }
                }
                let added = match g {
                    Instance::Undirected(g) => g.add_edge(u - 1, v - 1),
                    Instance::Directed(d) => d.add_arc(u - 1, v - 1),
                };
                match added {
                    Ok(()) => found += 1,
                    Err(GraphError::SelfLoop(_)) => return Err(err(line, ParseErrorKind::SelfLoop(u))),
                    Err(GraphError::DuplicateEdge(..)) => return Err(err(line, ParseErrorKind::DuplicateEdge(u, v))),
                    Err(GraphError::VertexOutOfRange { .. }) => unreachable!("range checked above"),
                }
            }
            Some(_) => return Err(err(line, ParseErrorKind::UnknownLine)),
        }
    }
    let Some((g, declared)) = instance else {
        return Err(err(last.max(1), ParseErrorKind::MissingHeader));
    };
    if declared != found {
        return Err(err(last, ParseErrorKind::EdgeCount { declared, found }));
    }
    Ok(g)
}

/// Canonical text: header, then edges in increasing order, LF endings.
pub fn serialize_graph(instance: &Instance) -> String {
    let mut out = String::new();
    match instance {
        Instance::Undirected(g) => {
            writeln!(out, "p ud {} {}", g.n(), g.m()).unwrap();
            for (u, v) in g.edges() {
                writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
            }
        }
        Instance::Directed(d) => {
            writeln!(out, "p di {} {}", d.n(), d.m()).unwrap();
            for (u, v) in d.arcs() {
                writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = parse_graph("p ud 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!(g, Instance::from(Graph::complete(3)));
    }

    #[test]
    fn round_trip_is_canonical() {
        let text = "c hello\np ud 4 3\ne 3 2\n\ne 4 1\nc mid\ne 1 2\n";
        let g = parse_graph(text).unwrap();
        let canon = serialize_graph(&g);
        assert_eq!(canon, "p ud 4 3\ne 1 2\ne 1 4\ne 2 3\n");
        assert_eq!(parse_graph(&canon).unwrap(), g);
    }

    #[test]
    fn antiparallel_arcs_are_distinct() {
        let d = parse_graph("p di 2 2\ne 1 2\ne 2 1\n").unwrap();
        assert!(d.is_directed());
        assert_eq!(d.m(), 2);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("p ud 2 1\ne 1 1\n", 2, ParseErrorKind::SelfLoop(1)),
            ("p ud 3 2\ne 1 2\ne 2 1\n", 3, ParseErrorKind::DuplicateEdge(2, 1)),
            ("c x\np ud 2 1\ne 1 3\n", 3, ParseErrorKind::OutOfRange { vertex: 3, n: 2 }),
            ("p ud 2 1\ne 0 1\n", 2, ParseErrorKind::OutOfRange { vertex: 0, n: 2 }),
            ("p xx 2 1\n", 1, ParseErrorKind::MalformedHeader),
            ("p ud two 1\n", 1, ParseErrorKind::MalformedHeader),
            ("e 1 2\n", 1, ParseErrorKind::MissingHeader),
            ("p ud 2 1\ne 1\n", 2, ParseErrorKind::MalformedEdge),
            ("p ud 2 1\nx\n", 2, ParseErrorKind::UnknownLine),
            ("p ud 3 2\ne 1 2\n", 2, ParseErrorKind::EdgeCount { declared: 2, found: 1 }),
            ("", 1, ParseErrorKind::MissingHeader),
        ];
        for (text, line, kind) in cases {
            assert_eq!(parse_graph(text), Err(ParseError { line, kind }), "{text:?}");
        }
    }
}
