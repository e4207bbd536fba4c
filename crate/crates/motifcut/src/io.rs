//! Edge-list files.
//!
//! ```text
//! # comment lines start with '#'
//! 4        vertex count
//! u        'd' (directed) or 'u' (undirected)
//! 0 1 1.5  one "u v w" line per edge
//! ```

use std::fmt::Write as _;
use std::path::Path;

use motifcut_core::{Graph, Kind, Motif};

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Invalid { line: usize, source: motifcut_core::Error },
    #[error("missing {0}")]
    Missing(&'static str),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl ParseError {
    fn syntax(line: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax { line, message: message.into() }
    }
}

/// Numbered content lines with comments and blanks removed.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<(usize, Kind), ParseError> {
    let (line, count) = lines.next().ok_or(ParseError::Missing("vertex count"))?;
    let n = count
        .parse::<usize>()
        .map_err(|_| ParseError::syntax(line, format!("expected a vertex count, found {count:?}")))?;
    let (line, kind) = lines.next().ok_or(ParseError::Missing("graph kind line"))?;
    let kind = match kind {
        "d" => Kind::Directed,
        "u" => Kind::Undirected,
        other => return Err(ParseError::syntax(line, format!("expected 'd' or 'u', found {other:?}"))),
    };
    Ok((n, kind))
}

fn parse_edge(line: usize, text: &str, weighted: bool) -> Result<(usize, usize, f64), ParseError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    let expected = if weighted { 3 } else { 2 };
    if fields.len() != expected && !(fields.len() == 3 && !weighted) {
        return Err(ParseError::syntax(line, format!("expected {expected} fields, found {}", fields.len())));
    }
    let vertex = |s: &str| s.parse::<usize>().map_err(|_| ParseError::syntax(line, format!("bad vertex {s:?}")));
    let u = vertex(fields[0])?;
    let v = vertex(fields[1])?;
    let w = if weighted {
        fields[2].parse::<f64>().map_err(|_| ParseError::syntax(line, format!("bad weight {:?}", fields[2])))?
    } else {
        1.0
    };
    Ok((u, v, w))
}

/// Parses an edge-list document. Errors carry 1-based line numbers.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (n, kind) = parse_header(&mut lines)?;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashMap::new();
    for (line, body) in lines {
        let (u, v, w) = parse_edge(line, body, true)?;
        let key = if kind == Kind::Undirected && u > v { (v, u) } else { (u, v) };
        if let Some(first) = seen.insert(key, line) {
            return Err(ParseError::syntax(line, format!("duplicate edge ({u}, {v}), first on line {first}")));
        }
        Graph::new(n, kind, [(u, v, w)]).map_err(|source| ParseError::Invalid { line, source })?;
        edges.push((u, v, w));
    }
    Graph::new(n, kind, edges).map_err(|source| ParseError::Invalid { line: 0, source })
}

/// Parses a motif in the edge-list format; weights are optional and ignored.
pub fn parse_motif(text: &str) -> Result<Motif, ParseError> {
    let mut lines = content_lines(text);
    let (r, kind) = parse_header(&mut lines)?;
    let mut edges = Vec::new();
    let mut last = 0;
    for (line, body) in lines {
        let (a, b, _) = parse_edge(line, body, false)?;
        edges.push((a, b));
        last = line;
    }
    Motif::new(r, kind, edges).map_err(|source| ParseError::Invalid { line: last, source })
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph, ParseError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|source| ParseError::Io { path: path.display().to_string(), source })?;
    parse_graph(&text)
}

/// Edge-list text; weights use the shortest representation that parses back exactly.
pub fn render_graph(g: &Graph) -> String {
    let mut out = String::new();
    let kind = if g.is_directed() { "d" } else { "u" };
    writeln!(out, "{}\n{kind}", g.n()).unwrap();
    for e in g.edges() {
        writeln!(out, "{} {} {}", e.u, e.v, e.w).unwrap();
    }
    out
}

pub fn write_graph(path: impl AsRef<Path>, g: &Graph) -> std::io::Result<()> {
    std::fs::write(path, render_graph(g))
}
