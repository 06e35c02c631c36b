//! Edge-list and JSON graph formats.
//!
//! Edge list: a header line `n m` followed by `m` lines `u v` (decimal,
//! LF-terminated). Canonical output writes each edge with `u < v`, edges in
//! lexicographic order.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::Malformed {
            line: line_no,
            reason: format!("missing {what}"),
        })?;
        tok.parse::<usize>().map_err(|_| Error::Malformed {
            line: line_no,
            reason: format!("{what} `{tok}` is not a non-negative integer"),
        })
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = it.next() {
        return Err(Error::Malformed {
            line: line_no,
            reason: format!("unexpected trailing `{extra}`"),
        });
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(Error::Malformed {
        line: 1,
        reason: "empty input".into(),
    })?;
    let (n, m) = parse_pair(hline, header)?;

    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        let (u, v) = parse_pair(line, text)?;
        for w in [u, v] {
            if w >= n {
                return Err(Error::OutOfRange { line, index: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop { line, vertex: u });
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(Error::DuplicateEdge {
                line,
                u: key.0,
                v: key.1,
            });
        }
        edges.push(key);
    }
    if edges.len() != m {
        return Err(Error::EdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    Graph::from_edges(n, &edges)
}

pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

pub fn parse_json(text: &str) -> Result<Graph> {
    let raw: JsonGraph = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    let mut seen = HashSet::with_capacity(raw.edges.len());
    let mut edges = Vec::with_capacity(raw.edges.len());
    for (i, [u, v]) in raw.edges.into_iter().enumerate() {
        let line = i + 1;
        let key = (u.min(v), u.max(v));
        if key.1 < raw.n && u != v && !seen.insert(key) {
            return Err(Error::DuplicateEdge {
                line,
                u: key.0,
                v: key.1,
            });
        }
        edges.push((u, v));
    }
    let g = Graph::from_edges(raw.n, &edges)?;
    Ok(match raw.name {
        Some(name) => g.with_name(name),
        None => g,
    })
}

pub fn serialize_json(g: &Graph) -> String {
    let raw = JsonGraph {
        n: g.n(),
        edges: g.edges().map(|(u, v)| [u, v]).collect(),
        name: g.name().map(str::to_owned),
    };
    serde_json::to_string(&raw).expect("graph json")
}
