//! Text formats for graphs: whitespace edge lists and DIMACS `p edge`.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Graph, GraphError, Vertex};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("missing `p edge` header")]
    MissingHeader,
    #[error("invalid graph JSON: {0}")]
    Json(#[from] serde_json::Error),
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

fn parse_vertex(tok: &str, line: usize) -> Result<Vertex, ParseError> {
    tok.parse()
        .map_err(|_| syntax(line, format!("`{tok}` is not a vertex index")))
}

/// Incrementally checks edges so the error can name the offending line.
struct EdgeCollector {
    n: Option<usize>,
    seen: std::collections::HashSet<(Vertex, Vertex)>,
    edges: Vec<(Vertex, Vertex)>,
}

impl EdgeCollector {
    fn new(n: Option<usize>) -> Self {
        EdgeCollector {
            n,
            seen: Default::default(),
            edges: Vec::new(),
        }
    }

    fn push(&mut self, u: Vertex, v: Vertex, line: usize) -> Result<(), ParseError> {
        let err = |source| ParseError::Graph { line, source };
        if u == v {
            return Err(err(GraphError::SelfLoop(u)));
        }
        if let Some(n) = self.n {
            if let Some(&w) = [u, v].iter().find(|&&w| w >= n) {
                return Err(err(GraphError::VertexOutOfRange { vertex: w, n }));
            }
        }
        let key = (u.min(v), u.max(v));
        if !self.seen.insert(key) {
            return Err(err(GraphError::DuplicateEdge(key.0, key.1)));
        }
        self.edges.push(key);
        Ok(())
    }

    fn finish(self, n: usize) -> Result<Graph, ParseError> {
        Graph::from_edges(n, self.edges).map_err(|source| ParseError::Graph { line: 0, source })
    }
}

/// One `u v` pair per line, 0-based; `#` starts a comment. The vertex count is
/// one more than the largest index, or the value of an optional `# n <count>` line.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut declared = None;
    let mut edges = EdgeCollector::new(None);
    let mut max_vertex = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let (body, comment) = raw.split_once('#').unwrap_or((raw, ""));
        let mut ctoks = comment.split_whitespace();
        if ctoks.next() == Some("n") {
            if let Some(tok) = ctoks.next() {
                declared = Some(parse_vertex(tok, line)?);
            }
        }
        let toks: Vec<_> = body.split_whitespace().collect();
        match toks.as_slice() {
            [] => {}
            [a, b] => {
                let (u, v) = (parse_vertex(a, line)?, parse_vertex(b, line)?);
                edges.push(u, v, line)?;
                max_vertex = max_vertex.max(Some(u.max(v)));
            }
            _ => return Err(syntax(line, "expected `u v`")),
        }
    }
    let n = match (declared, max_vertex) {
        (Some(n), Some(m)) if m >= n => {
            return Err(ParseError::Graph {
                line: 0,
                source: GraphError::VertexOutOfRange { vertex: m, n },
            })
        }
        (Some(n), _) => n,
        (None, m) => m.map_or(0, |m| m + 1),
    };
    edges.finish(n)
}

/// DIMACS: `c` comments, one `p edge <n> <m>` header, then `e u v` lines (1-based).
pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = EdgeCollector::new(None);
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks: Vec<_> = raw.split_whitespace().collect();
        match toks.as_slice() {
            [] | ["c", ..] => {}
            ["p", fmt, n, m] => {
                if header.is_some() {
                    return Err(syntax(line, "second `p` line"));
                }
                if *fmt != "edge" && *fmt != "col" {
                    return Err(syntax(line, format!("unsupported problem `{fmt}`")));
                }
                let n = parse_vertex(n, line)?;
                header = Some((n, parse_vertex(m, line)?));
                edges.n = Some(n);
            }
            ["e", u, v] => {
                if header.is_none() {
                    return Err(ParseError::MissingHeader);
                }
                let (u, v) = (parse_vertex(u, line)?, parse_vertex(v, line)?);
                if u == 0 || v == 0 {
                    return Err(syntax(line, "DIMACS vertices are 1-based"));
                }
                edges.push(u - 1, v - 1, line)?;
            }
            _ => return Err(syntax(line, format!("unrecognised line `{raw}`"))),
        }
    }
    let (n, m) = header.ok_or(ParseError::MissingHeader)?;
    if edges.edges.len() != m {
        return Err(syntax(
            0,
            format!("header declares {m} edges, found {}", edges.edges.len()),
        ));
    }
    edges.finish(n)
}

/// Picks JSON, DIMACS or edge-list parsing by looking at the first meaningful token.
pub fn parse_any(text: &str) -> Result<Graph, ParseError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with('{') => Ok(serde_json::from_str(text)?),
        Some(l) if l.starts_with("p ") || l.starts_with("c ") || l == "c" => parse_dimacs(text),
        _ => parse_edge_list(text),
    }
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("# n {}\n", g.n());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}
