//! Text, JSON and DOT formats for graphs and orientations.
//!
//! Graph files:
//!
//! ```text
//! # comment
//! p 3 2
//! e 0 1
//! e 1 2
//! ```
//!
//! Orientation files use the header `o <n> <m>` and one `a <tail> <head>`
//! line per edge.

use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orientation::Orientation;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct OrientationJson {
    pub n: usize,
    pub arcs: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recipe: Option<String>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Parses `<tag> <n> <m>` then `m` lines of `<item> <u> <v>`.
fn parse_pairs(text: &str, header: &str, item: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut dims: Option<(usize, usize)> = None;
    let mut pairs = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        let nums = |expected: usize| -> Result<Vec<usize>> {
            if fields.len() != expected + 1 {
                return Err(parse_err(line, format!("expected {expected} integers after '{}'", fields[0])));
            }
            fields[1..]
                .iter()
                .map(|s| s.parse::<usize>().map_err(|_| parse_err(line, format!("'{s}' is not a non-negative integer"))))
                .collect()
        };
        match fields[0] {
            t if t == header => {
                if dims.is_some() {
                    return Err(parse_err(line, "duplicate header"));
                }
                let v = nums(2)?;
                dims = Some((v[0], v[1]));
            }
            t if t == item => {
                let Some((n, _)) = dims else {
                    return Err(parse_err(line, format!("'{item}' line before '{header}' header")));
                };
                let v = nums(2)?;
                let (u, w) = (v[0], v[1]);
                if u >= n || w >= n {
                    return Err(parse_err(line, format!("endpoint out of range 0..{n}")));
                }
                if u == w {
                    return Err(parse_err(line, format!("loop at vertex {u}")));
                }
                pairs.push((u, w));
            }
            other => return Err(parse_err(line, format!("unknown line type '{other}'"))),
        }
    }
    let Some((n, m)) = dims else {
        return Err(parse_err(last_line.max(1), format!("missing '{header}' header")));
    };
    if pairs.len() != m {
        return Err(parse_err(last_line.max(1), format!("header declares {m} lines, found {}", pairs.len())));
    }
    Ok((n, pairs))
}

pub fn read_graph(text: &str) -> Result<Graph> {
    let (n, edges) = parse_pairs(text, "p", "e")?;
    let mut seen = std::collections::HashSet::new();
    for (i, &(u, v)) in edges.iter().enumerate() {
        if !seen.insert((u.min(v), u.max(v))) {
            // Re-locate the offending line for the message.
            let line = nth_item_line(text, "e", i);
            return Err(parse_err(line, format!("repeated edge ({u},{v})")));
        }
    }
    Graph::new(n, edges)
}

fn nth_item_line(text: &str, item: &str, index: usize) -> usize {
    text.lines()
        .enumerate()
        .filter(|(_, l)| l.split_whitespace().next() == Some(item))
        .nth(index)
        .map(|(i, _)| i + 1)
        .unwrap_or(0)
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("p {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        writeln!(s, "e {u} {v}").unwrap();
    }
    s
}

/// Reads an orientation file; the underlying graph has one edge per arc,
/// stored tail-first.
pub fn read_orientation(text: &str) -> Result<Orientation> {
    let (n, arcs) = parse_pairs(text, "o", "a")?;
    let g = Graph::new(n, arcs).map_err(|e| parse_err(0, e.to_string()))?;
    let m = g.m();
    Orientation::new(g, vec![true; m])
}

pub fn write_orientation(o: &Orientation) -> String {
    let mut s = format!("o {} {}\n", o.n(), o.graph().m());
    for (t, h) in o.arcs() {
        writeln!(s, "a {t} {h}").unwrap();
    }
    s
}

pub fn graph_to_json(g: &Graph) -> GraphJson {
    GraphJson {
        n: g.n(),
        edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
    }
}

pub fn graph_from_json(j: &GraphJson) -> Result<Graph> {
    Graph::new(j.n, j.edges.iter().map(|e| (e[0], e[1])).collect())
}

pub fn orientation_to_json(o: &Orientation, recipe: Option<&str>) -> OrientationJson {
    OrientationJson {
        n: o.n(),
        arcs: o.arcs().into_iter().map(|(t, h)| [t, h]).collect(),
        recipe: recipe.map(str::to_owned),
    }
}

pub fn orientation_from_json(j: &OrientationJson) -> Result<Orientation> {
    let g = Graph::new(j.n, j.arcs.iter().map(|a| (a[0], a[1])).collect())?;
    let m = g.m();
    Orientation::new(Arc::new(g), vec![true; m])
}

pub fn graph_to_dot(g: &Graph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.n() {
        writeln!(s, "  {v};").unwrap();
    }
    for &(u, v) in g.edges() {
        writeln!(s, "  {u} -- {v};").unwrap();
    }
    s.push_str("}\n");
    s
}

pub fn orientation_to_dot(o: &Orientation) -> String {
    let mut s = String::from("digraph G {\n");
    for v in 0..o.n() {
        writeln!(s, "  {v};").unwrap();
    }
    for (t, h) in o.arcs() {
        writeln!(s, "  {t} -> {h};").unwrap();
    }
    s.push_str("}\n");
    s
}

/// Either kind of input document, detected from its content.
#[derive(Debug, Clone)]
pub enum Document {
    Graph(Graph),
    Orientation(Orientation),
}

/// Accepts graph or orientation input as text or JSON.
pub fn read_document(text: &str) -> Result<Document> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let value: serde_json::Value =
            serde_json::from_str(trimmed).map_err(|e| parse_err(e.line(), e.to_string()))?;
        if value.get("arcs").is_some() {
            let j: OrientationJson = serde_json::from_value(value).map_err(|e| parse_err(0, e.to_string()))?;
            return orientation_from_json(&j).map(Document::Orientation);
        }
        // A solver result carries its orientation under "orientation".
        if let (Some(arcs), Some(n)) = (value.get("orientation"), value.get("n")) {
            let j = OrientationJson {
                n: serde_json::from_value(n.clone()).map_err(|e| parse_err(0, e.to_string()))?,
                arcs: serde_json::from_value(arcs.clone()).map_err(|e| parse_err(0, e.to_string()))?,
                recipe: None,
            };
            return orientation_from_json(&j).map(Document::Orientation);
        }
        let j: GraphJson = serde_json::from_value(value).map_err(|e| parse_err(0, e.to_string()))?;
        return graph_from_json(&j).map(Document::Graph);
    }
    let first = trimmed
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if first.starts_with('o') {
        read_orientation(text).map(Document::Orientation)
    } else {
        read_graph(text).map(Document::Graph)
    }
}
