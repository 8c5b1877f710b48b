//! Text formats for complexes and collapse certificates.
//!
//! A complex file:
//!
//! ```text
//! scx 1
//! dim 2
//! vertices 4
//! facets 4
//! 1 2 3
//! 1 2 4
//! 1 3 4
//! 2 3 4
//! ```
//!
//! Blank lines and `#` comments are ignored. Vertex labels are any
//! non-negative integers and are kept as vertex ids. Written files list
//! facets in sorted order. An empty complex has `dim -1`.
//!
//! A certificate file, faces written with commas:
//!
//! ```text
//! scx-cert 1
//! removed 0,1,2
//! collapse 0,1 0,1,3
//! collapse 1 1,3
//! terminal 0,2
//! ```
//!
//! `removed -` means no facet is removed. `terminal` lines list the facets
//! left at the end and come after all `collapse` lines.

use thiserror::Error;

use crate::collapse::{CollapsePair, CollapseSequence};
use crate::complex::{ComplexError, Face, SimplicialComplex, VertexId};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Invalid { line: usize, source: ComplexError },
    #[error("header says {expected} {what}, found {found}")]
    CountMismatch { what: &'static str, expected: usize, found: usize },
    #[error("header says dimension {expected}, found {found}")]
    DimMismatch { expected: i64, found: i64 },
    #[error("unexpected end of input, expected {0}")]
    UnexpectedEnd(&'static str),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

/// Non-empty, comment-stripped lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

struct Lines<'a, I: Iterator<Item = (usize, &'a str)>> {
    inner: I,
}

impl<'a, I: Iterator<Item = (usize, &'a str)>> Lines<'a, I> {
    fn next(&mut self, what: &'static str) -> Result<(usize, &'a str), ParseError> {
        self.inner.next().ok_or(ParseError::UnexpectedEnd(what))
    }

    /// A `key value` line.
    fn keyed(&mut self, key: &'static str) -> Result<(usize, &'a str), ParseError> {
        let (n, l) = self.next(key)?;
        let mut parts = l.splitn(2, char::is_whitespace);
        if parts.next() != Some(key) {
            return Err(syntax(n, format!("expected `{key}`")));
        }
        Ok((n, parts.next().unwrap_or("").trim()))
    }

    fn count(&mut self, key: &'static str) -> Result<usize, ParseError> {
        let (n, v) = self.keyed(key)?;
        v.parse().map_err(|_| syntax(n, format!("`{key}` needs a count")))
    }
}

fn parse_vertices(line: usize, text: &str) -> Result<Vec<VertexId>, ParseError> {
    text.split_whitespace()
        .map(|t| t.parse::<VertexId>().map_err(|_| syntax(line, format!("bad vertex `{t}`"))))
        .collect()
}

fn parse_face(line: usize, text: &str) -> Result<Face, ParseError> {
    let vs = parse_vertices(line, text)?;
    Face::new(vs).map_err(|source| ParseError::Invalid { line, source })
}

/// Parses a complex file, checking the header against the body.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex, ParseError> {
    let mut lines = Lines { inner: content_lines(text) };
    let (n, v) = lines.keyed("scx")?;
    if v != FORMAT_VERSION.to_string() {
        return Err(syntax(n, format!("unsupported version `{v}`")));
    }
    let (n, d) = lines.keyed("dim")?;
    let dim: i64 = d.parse().map_err(|_| syntax(n, "`dim` needs an integer"))?;
    let n_vertices = lines.count("vertices")?;
    let n_facets = lines.count("facets")?;
    let mut facets: Vec<(usize, Face)> = Vec::with_capacity(n_facets);
    for (n, l) in lines.inner.by_ref() {
        facets.push((n, parse_face(n, l)?));
    }
    if facets.len() != n_facets {
        return Err(ParseError::CountMismatch { what: "facets", expected: n_facets, found: facets.len() });
    }
    // facets must form an antichain
    let mut sorted: Vec<&(usize, Face)> = facets.iter().collect();
    sorted.sort_by(|a, b| a.1.cmp(&b.1));
    for w in sorted.windows(2) {
        if w[0].1 == w[1].1 {
            return Err(syntax(w[1].0.max(w[0].0), format!("facet {} repeated", w[1].1)));
        }
    }
    for (n, f) in &facets {
        if facets.iter().any(|(_, g)| g.len() > f.len() && f.is_subset_of(g)) {
            return Err(syntax(*n, format!("facet {f} lies in another facet")));
        }
    }
    let c = SimplicialComplex::from_facets(facets.into_iter().map(|(_, f)| f));
    if c.n_vertices() != n_vertices {
        return Err(ParseError::CountMismatch { what: "vertices", expected: n_vertices, found: c.n_vertices() });
    }
    let found = c.dim().map_or(-1, |d| d as i64);
    if found != dim {
        return Err(ParseError::DimMismatch { expected: dim, found });
    }
    Ok(c)
}

/// Text of a complex: vertex ids as they are, facets in sorted order, so
/// `parse_complex(&write_complex(c)) == c`.
pub fn write_complex(c: &SimplicialComplex) -> String {
    let facets = c.facets();
    let mut out = format!(
        "scx {FORMAT_VERSION}\ndim {}\nvertices {}\nfacets {}\n",
        c.dim().map_or(-1, |d| d as i64),
        c.n_vertices(),
        facets.len()
    );
    for f in facets {
        out.push_str(&join(f.vertices()));
        out.push('\n');
    }
    out
}

fn join(vs: &[VertexId]) -> String {
    let parts: Vec<String> = vs.iter().map(ToString::to_string).collect();
    parts.join(" ")
}

fn face_token(f: &Face) -> String {
    let parts: Vec<String> = f.vertices().iter().map(ToString::to_string).collect();
    parts.join(",")
}

fn parse_face_token(line: usize, token: &str) -> Result<Face, ParseError> {
    parse_face(line, &token.replace(',', " "))
}

pub fn write_certificate(seq: &CollapseSequence) -> String {
    let mut out = format!("scx-cert {FORMAT_VERSION}\n");
    match &seq.removed {
        Some(f) => out.push_str(&format!("removed {}\n", face_token(f))),
        None => out.push_str("removed -\n"),
    }
    for p in &seq.pairs {
        out.push_str(&format!("collapse {} {}\n", face_token(&p.free), face_token(&p.coface)));
    }
    for f in &seq.terminal {
        out.push_str(&format!("terminal {}\n", face_token(f)));
    }
    out
}

pub fn parse_certificate(text: &str) -> Result<CollapseSequence, ParseError> {
    let mut lines = Lines { inner: content_lines(text) };
    let (n, v) = lines.keyed("scx-cert")?;
    if v != FORMAT_VERSION.to_string() {
        return Err(syntax(n, format!("unsupported version `{v}`")));
    }
    let (n, r) = lines.keyed("removed")?;
    let removed = if r == "-" { None } else { Some(parse_face_token(n, r)?) };
    let mut pairs = Vec::new();
    let mut terminal = Vec::new();
    for (n, l) in lines.inner {
        let parts: Vec<&str> = l.split_whitespace().collect();
        match parts[..] {
            ["collapse", a, b] if terminal.is_empty() => {
                pairs.push(CollapsePair { free: parse_face_token(n, a)?, coface: parse_face_token(n, b)? })
            }
            ["terminal", f] => terminal.push(parse_face_token(n, f)?),
            _ => return Err(syntax(n, "expected `collapse FREE COFACE` or `terminal FACE`")),
        }
    }
    Ok(CollapseSequence { removed, pairs, terminal })
}
