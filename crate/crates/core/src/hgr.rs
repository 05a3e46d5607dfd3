//! The `hgr` text format.
//!
//! ```text
//! c optional comment lines start with 'c'
//! p hgr <n> <m>
//! e 1 2 3
//! e 2 4
//! ```
//!
//! Vertex ids are 1-based on disk and 0-based in memory. Blank lines are
//! ignored. Each hyperedge is normalized to sorted order; repeating a vertex
//! inside one hyperedge is an error.

use std::fs;
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_str(text: &str) -> Result<Hypergraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(parse_error(line_no, "duplicate header line"));
                }
                if tokens.next() != Some("hgr") {
                    return Err(parse_error(line_no, "header must read 'p hgr <n> <m>'"));
                }
                let mut count = |what: &str| -> Result<usize> {
                    tokens
                        .next()
                        .ok_or_else(|| parse_error(line_no, format!("header is missing {what}")))?
                        .parse()
                        .map_err(|_| parse_error(line_no, format!("header {what} is not a count")))
                };
                let n = count("vertex count")?;
                let m = count("hyperedge count")?;
                if tokens.next().is_some() {
                    return Err(parse_error(line_no, "trailing tokens after header"));
                }
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) =
                    header.ok_or_else(|| parse_error(line_no, "hyperedge before header"))?;
                let mut edge = Vec::new();
                for tok in tokens {
                    let id: usize = tok
                        .parse()
                        .map_err(|_| parse_error(line_no, format!("'{tok}' is not a vertex id")))?;
                    if id == 0 || id > n {
                        return Err(parse_error(
                            line_no,
                            format!("vertex id {id} outside 1..={n}"),
                        ));
                    }
                    edge.push(id - 1);
                }
                if edge.is_empty() {
                    return Err(parse_error(line_no, "empty hyperedge"));
                }
                let mut sorted = edge.clone();
                sorted.sort_unstable();
                if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
                    return Err(parse_error(
                        line_no,
                        format!("repeated vertex {} in hyperedge", w[0] + 1),
                    ));
                }
                edges.push(sorted);
            }
            Some(other) => {
                return Err(parse_error(line_no, format!("unknown line type '{other}'")));
            }
            None => unreachable!("blank lines are skipped"),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_error(0, "missing 'p hgr' header"))?;
    if edges.len() != m {
        return Err(parse_error(
            text.lines().count(),
            format!("header declares {m} hyperedges, body has {}", edges.len()),
        ));
    }
    Hypergraph::new(n, edges)
}

pub fn parse(path: impl AsRef<Path>) -> Result<Hypergraph> {
    let text = fs::read_to_string(path)?;
    parse_str(&text)
}

/// Canonical text: header then one `e` line per hyperedge, no comments.
pub fn to_string(h: &Hypergraph) -> String {
    let mut out = format!("p hgr {} {}\n", h.vertex_count(), h.edge_count());
    for edge in h.edges() {
        out.push('e');
        for &x in edge {
            out.push(' ');
            out.push_str(&(x + 1).to_string());
        }
        out.push('\n');
    }
    out
}

pub fn serialize(h: &Hypergraph, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, to_string(h))?;
    Ok(())
}

/// `sha256:<hex>` of the canonical text.
pub fn digest(h: &Hypergraph) -> String {
    let hash = Sha256::digest(to_string(h).as_bytes());
    format!("sha256:{}", hex::encode(hash))
}
