//! Line-based text formats.
//!
//! All formats are UTF-8, one record per line; `#` starts a comment and
//! blank lines are skipped.
//!
//! * Bipartite graph: header `b <s_count> <t_count> <edge_count>` followed
//!   by one `s t` pair per edge.
//! * Hypergraph: header `h <node_count> <hyperedge_count>` followed by one
//!   `k v1 ... vk` line per hyperedge.
//! * Certificates mix keyword lines: `edge s t` (matching or 2-matching
//!   edges), `link u c w` (an S-link with center `c`), `hyperedge <id>` and
//!   `pair u v via <id>` (extended-matching elements).
//! * 3-dimensional matching: header `3dm <n> <m>` followed by one `x y z`
//!   triple per line, elements 0-based within each part.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::extended::{ExtendedMatching, ExtendedPair};
use crate::graph::{BipartiteGraph, Hypergraph, SLink};
use crate::reduce3dm::ThreeDMInstance;

/// A parse failure with the 1-based offending line.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

/// Content lines with their 1-based line numbers, comments stripped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

fn parse_fields(line: usize, s: &str, expect: usize, what: &str) -> Result<Vec<usize>, ParseError> {
    let fields: Result<Vec<usize>, _> = s.split_whitespace().map(str::parse).collect();
    match fields {
        Ok(v) if v.len() == expect => Ok(v),
        Ok(v) => err(line, format!("{what}: expected {expect} fields, found {}", v.len())),
        Err(_) => err(line, format!("{what}: fields must be non-negative integers")),
    }
}

/// Parses the bipartite format.
pub fn read_bipartite(text: &str) -> Result<BipartiteGraph, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = match lines.next() {
        Some(x) => x,
        None => return err(1, "missing header"),
    };
    let rest = match header.strip_prefix("b ") {
        Some(r) => r,
        None => return err(hline, "expected header 'b <s_count> <t_count> <edge_count>'"),
    };
    let h = parse_fields(hline, rest, 3, "header")?;
    let (s_count, t_count, edge_count) = (h[0], h[1], h[2]);
    let mut edges = Vec::with_capacity(edge_count);
    let mut last_line = hline;
    for (ln, line) in lines {
        let f = parse_fields(ln, line, 2, "edge")?;
        edges.push((f[0], f[1]));
        last_line = ln;
    }
    if edges.len() != edge_count {
        return err(last_line, format!("expected {edge_count} edges, found {}", edges.len()));
    }
    BipartiteGraph::new(s_count, t_count, edges).map_err(|e| ParseError {
        line: last_line,
        message: e.to_string(),
    })
}

/// Writes the bipartite format, edges ascending.
pub fn write_bipartite(g: &BipartiteGraph) -> String {
    let mut out = format!("b {} {} {}\n", g.s_count(), g.t_count(), g.edge_count());
    for &(s, t) in g.edges() {
        out.push_str(&format!("{s} {t}\n"));
    }
    out
}

/// Parses the hypergraph format.
pub fn read_hypergraph(text: &str) -> Result<Hypergraph, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = match lines.next() {
        Some(x) => x,
        None => return err(1, "missing header"),
    };
    let rest = match header.strip_prefix("h ") {
        Some(r) => r,
        None => return err(hline, "expected header 'h <node_count> <hyperedge_count>'"),
    };
    let h = parse_fields(hline, rest, 2, "header")?;
    let (node_count, edge_count) = (h[0], h[1]);
    let mut hyperedges = Vec::with_capacity(edge_count);
    let mut last_line = hline;
    for (ln, line) in lines {
        let fields: Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
        let fields = match fields {
            Ok(v) => v,
            Err(_) => return err(ln, "hyperedge: fields must be non-negative integers"),
        };
        if fields.is_empty() {
            return err(ln, "hyperedge: missing cardinality");
        }
        if fields.len() != fields[0] + 1 {
            return err(
                ln,
                format!("hyperedge: cardinality {} but {} nodes listed", fields[0], fields.len() - 1),
            );
        }
        hyperedges.push(fields[1..].to_vec());
        last_line = ln;
    }
    if hyperedges.len() != edge_count {
        return err(
            last_line,
            format!("expected {edge_count} hyperedges, found {}", hyperedges.len()),
        );
    }
    Hypergraph::new(node_count, hyperedges).map_err(|e| ParseError {
        line: last_line,
        message: e.to_string(),
    })
}

/// Writes the hypergraph format.
pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("h {} {}\n", h.node_count(), h.hyperedge_count());
    for e in h.hyperedges() {
        let mut line = e.len().to_string();
        for v in e {
            line.push_str(&format!(" {v}"));
        }
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// A parsed certificate file: any mix of edge, link, hyperedge and pair lines.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Certificate {
    pub edges: Vec<(usize, usize)>,
    pub links: Vec<SLink>,
    pub hyperedges: Vec<usize>,
    pub pairs: Vec<ExtendedPair>,
}

impl Certificate {
    /// True when the certificate only carries plain edges.
    pub fn is_edge_set(&self) -> bool {
        self.links.is_empty() && self.hyperedges.is_empty() && self.pairs.is_empty()
    }

    /// True when the certificate carries extended-matching elements.
    pub fn is_extended(&self) -> bool {
        !self.hyperedges.is_empty() || !self.pairs.is_empty()
    }
}

/// Parses a certificate file.
pub fn read_certificate(text: &str) -> Result<Certificate, ParseError> {
    let mut cert = Certificate::default();
    for (ln, line) in content_lines(text) {
        let mut words = line.split_whitespace();
        let keyword = words.next().unwrap_or("");
        let rest: Vec<&str> = words.collect();
        match keyword {
            "edge" => {
                let f = parse_fields(ln, &rest.join(" "), 2, "edge")?;
                cert.edges.push((f[0], f[1]));
            }
            "link" => {
                let f = parse_fields(ln, &rest.join(" "), 3, "link")?;
                match SLink::new(f[0], f[1], f[2]) {
                    Ok(l) => cert.links.push(l),
                    Err(e) => return err(ln, e.to_string()),
                }
            }
            "hyperedge" => {
                let f = parse_fields(ln, &rest.join(" "), 1, "hyperedge")?;
                cert.hyperedges.push(f[0]);
            }
            "pair" => {
                if rest.len() != 4 || rest[2] != "via" {
                    return err(ln, "expected 'pair u v via <id>'");
                }
                let f =
                    parse_fields(ln, &format!("{} {} {}", rest[0], rest[1], rest[3]), 3, "pair")?;
                cert.pairs.push(ExtendedPair { u: f[0].min(f[1]), v: f[0].max(f[1]), witness: f[2] });
            }
            other => return err(ln, format!("unknown certificate keyword '{other}'")),
        }
    }
    Ok(cert)
}

/// Writes an edge-set certificate, edges ascending.
pub fn write_edge_certificate(edges: &[(usize, usize)]) -> String {
    let mut sorted: Vec<(usize, usize)> = edges.to_vec();
    sorted.sort_unstable();
    let mut out = String::new();
    for (s, t) in sorted {
        out.push_str(&format!("edge {s} {t}\n"));
    }
    out
}

/// Writes a matching-plus-links certificate: edge lines then link lines.
pub fn write_liang_certificate(edges: &[(usize, usize)], links: &[SLink]) -> String {
    let mut out = write_edge_certificate(edges);
    let mut links: Vec<SLink> = links.to_vec();
    links.sort_unstable();
    for l in links {
        out.push_str(&format!("link {} {} {}\n", l.u, l.center, l.w));
    }
    out
}

/// Writes an extended-matching certificate: hyperedge lines then pair lines.
pub fn write_extended_certificate(em: &ExtendedMatching) -> String {
    let mut out = String::new();
    let mut ids: Vec<usize> = em.hyperedges.clone();
    ids.sort_unstable();
    for id in ids {
        out.push_str(&format!("hyperedge {id}\n"));
    }
    let mut pairs = em.pairs.clone();
    pairs.sort_unstable();
    for p in pairs {
        out.push_str(&format!("pair {} {} via {}\n", p.u, p.v, p.witness));
    }
    out
}

/// Parses the 3-dimensional matching format.
pub fn read_threedm(text: &str) -> Result<ThreeDMInstance, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = match lines.next() {
        Some(x) => x,
        None => return err(1, "missing header"),
    };
    let rest = match header.strip_prefix("3dm ") {
        Some(r) => r,
        None => return err(hline, "expected header '3dm <n> <m>'"),
    };
    let h = parse_fields(hline, rest, 2, "header")?;
    let (n, triple_count) = (h[0], h[1]);
    let mut triples = Vec::with_capacity(triple_count);
    let mut last_line = hline;
    for (ln, line) in lines {
        let f = parse_fields(ln, line, 3, "triple")?;
        triples.push((f[0], f[1], f[2]));
        last_line = ln;
    }
    if triples.len() != triple_count {
        return err(last_line, format!("expected {triple_count} triples, found {}", triples.len()));
    }
    ThreeDMInstance::new(n, triples).map_err(|e| ParseError {
        line: last_line,
        message: e.to_string(),
    })
}

/// Writes the 3-dimensional matching format.
pub fn write_threedm(inst: &ThreeDMInstance) -> String {
    let mut out = format!("3dm {} {}\n", inst.part_size(), inst.triple_count());
    for &(x, y, z) in inst.triples() {
        out.push_str(&format!("{x} {y} {z}\n"));
    }
    out
}

/// Parses a required-node file: whitespace-separated T-node indices.
pub fn read_required(text: &str) -> Result<BTreeSet<usize>, ParseError> {
    let mut out = BTreeSet::new();
    for (ln, line) in content_lines(text) {
        for w in line.split_whitespace() {
            match w.parse() {
                Ok(v) => {
                    out.insert(v);
                }
                Err(_) => return err(ln, format!("'{w}' is not a non-negative integer")),
            }
        }
    }
    Ok(out)
}
