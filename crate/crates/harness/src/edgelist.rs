//! Edge-list text format.
//!
//! ```text
//! graph <vertex_count>
//! e <u> <v>
//! ...
//! # scheme <name>
//! w <u> <v>
//! ```
//!
//! Vertices are 0-based. Lines starting with `#` are comments, except that a
//! `# scheme <name>` comment names the scheme of the witness that follows.
//! `w` lines carry an optional witness matching. Blank lines are skipped.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use mim_core::engine::Matching;
use mim_core::{Graph, Vertex};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: mim_core::Error,
    },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// A parsed file: the graph plus any witness edges it carries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeListFile {
    pub graph: Graph,
    pub witness: Vec<(Vertex, Vertex)>,
    pub scheme: Option<String>,
}

fn parse_error(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        message: message.into(),
    }
}

fn numbers<const N: usize>(line: usize, tokens: &[&str]) -> Result<[usize; N], FormatError> {
    if tokens.len() != N {
        return Err(parse_error(
            line,
            format!("expected {N} integer(s), found {}", tokens.len()),
        ));
    }
    let mut out = [0; N];
    for (slot, t) in out.iter_mut().zip(tokens) {
        *slot = t
            .parse()
            .map_err(|_| parse_error(line, format!("not a nonnegative integer: {t:?}")))?;
    }
    Ok(out)
}

pub fn parse(text: &str) -> Result<EdgeListFile, FormatError> {
    let mut vertex_count = None;
    let mut header_line = 0;
    let mut edges = Vec::new();
    let mut witness = Vec::new();
    let mut scheme = None;

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            if let Some(name) = comment.trim().strip_prefix("scheme ") {
                scheme = Some(name.trim().to_string());
            }
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match (tokens[0], vertex_count) {
            ("graph", None) => {
                let [n] = numbers::<1>(line, &tokens[1..])?;
                vertex_count = Some(n);
                header_line = line;
            }
            ("graph", Some(_)) => return Err(parse_error(line, "duplicate graph header")),
            (_, None) => return Err(parse_error(line, "expected `graph <vertex_count>` first")),
            ("e", Some(n)) => {
                let [u, v] = numbers::<2>(line, &tokens[1..])?;
                Graph::new(n, [(u, v)]).map_err(|source| FormatError::Graph { line, source })?;
                edges.push((u, v));
            }
            ("w", Some(_)) => {
                let [u, v] = numbers::<2>(line, &tokens[1..])?;
                witness.push((u, v));
            }
            (other, Some(_)) => {
                return Err(parse_error(line, format!("unknown directive {other:?}")))
            }
        }
    }

    let n = vertex_count.ok_or_else(|| parse_error(1, "missing `graph <vertex_count>` header"))?;
    let graph =
        Graph::new(n, edges).map_err(|source| FormatError::Graph { line: header_line, source })?;
    Ok(EdgeListFile {
        graph,
        witness,
        scheme,
    })
}

/// Canonical form: header, then edges in edge-id order.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("graph {}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

/// [`write_graph`] followed by the witness block.
pub fn write_with_witness(g: &Graph, matching: &Matching, scheme: &str) -> String {
    let mut out = write_graph(g);
    out.push_str(&witness_lines(g, matching, Some(scheme)));
    out
}

pub fn witness_lines(g: &Graph, matching: &Matching, scheme: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(scheme) = scheme {
        writeln!(out, "# scheme {scheme}").unwrap();
    }
    for (u, v) in matching.edges(g) {
        writeln!(out, "w {u} {v}").unwrap();
    }
    out
}

pub fn read_file(path: &Path) -> Result<EdgeListFile, FormatError> {
    let text = fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse(&text)
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), FormatError> {
    fs::write(path, contents).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use mim_core::constructions::construct_n4;
    use mim_core::families::{path, stacked_book};

    #[test]
    fn canonical_output() {
        let g = Graph::new(3, [(2, 1), (1, 0)]).unwrap();
        assert_eq!(write_graph(&g), "graph 3\ne 0 1\ne 1 2\n");
        assert_eq!(write_graph(&path(1).unwrap()), "graph 1\n");
    }

    #[test]
    fn roundtrip_book() {
        let (g, _) = stacked_book(4, 5).unwrap();
        let parsed = parse(&write_graph(&g)).unwrap();
        assert_eq!(parsed.graph, g);
        assert!(parsed.witness.is_empty());
        assert_eq!(parsed.scheme, None);
    }

    #[test]
    fn comments_blank_lines_and_orientation() {
        let text = "# a triangle-free path\n\ngraph 4\ne 3 2\n  # mid comment\ne 0 1\ne 1 2\ne 2 1\n";
        let parsed = parse(text).unwrap();
        assert_eq!(parsed.graph.edges(), &[(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn witness_block() {
        let r = construct_n4(3).unwrap();
        let text = write_with_witness(&r.graph, &r.matching, r.scheme.name());
        let parsed = parse(&text).unwrap();
        assert_eq!(parsed.graph, r.graph);
        assert_eq!(parsed.scheme.as_deref(), Some("cross_leaves_and_star"));
        assert_eq!(parsed.witness.len(), 3);
        assert!(text.lines().any(|l| l == "# scheme cross_leaves_and_star"));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("graph 3\ne 0 1\ne 0\n", 3),
            ("graph 3\ne 0 x\n", 2),
            ("e 0 1\n", 1),
            ("graph 3\ne 1 1\n", 2),
            ("graph 3\ne 0 3\n", 2),
            ("graph 3\nq 0 1\n", 2),
            ("graph 3\ngraph 4\n", 2),
            ("", 1),
        ];
        for (text, expected) in cases {
            let err = parse(text).unwrap_err();
            let line = match err {
                FormatError::Parse { line, .. } | FormatError::Graph { line, .. } => line,
                FormatError::Io { .. } => unreachable!(),
            };
            assert_eq!(line, expected, "{text:?}: {err}");
        }
    }
}
