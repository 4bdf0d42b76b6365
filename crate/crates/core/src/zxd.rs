//! The `.zxd` text format and Graphviz export.
//!
//! ```text
//! # comment
//! node a z 1/2      spider, phase (1/2)·π
//! node h0 h         H-box
//! in i0             input boundaries, in order
//! out o0            output boundaries, in order
//! edge a i0         repeat a line for a parallel edge
//! ```
//!
//! Names of the form `n<k>` keep id `k`; other names get fresh ids in order of
//! first declaration. `serialize` always writes `n<k>` names, so a round trip
//! preserves node ids.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::diagram::{Diagram, NodeId, NodeKind};
use crate::error::ParseError;
use crate::phase::Phase;

struct Decl {
    kind: NodeKind,
    line: usize,
}

fn numeric_id(name: &str) -> Option<NodeId> {
    let digits = name.strip_prefix('n')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

/// Parses `.zxd` text.
pub fn parse(text: &str) -> Result<Diagram, ParseError> {
    parse_named(text).map(|(d, _)| d)
}

/// Parses `.zxd` text and also returns the id given to each declared name.
pub fn parse_named(text: &str) -> Result<(Diagram, BTreeMap<String, NodeId>), ParseError> {
    let mut order: Vec<String> = Vec::new();
    let mut decls: BTreeMap<String, Decl> = BTreeMap::new();
    let mut inputs: Vec<String> = Vec::new();
    let mut outputs: Vec<String> = Vec::new();
    let mut edges: Vec<(String, String, usize, usize)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("");
        let mut cols: Vec<(usize, &str)> = Vec::new();
        let mut pos = 0;
        for tok in line.split_whitespace() {
            let at = line[pos..].find(tok).unwrap() + pos;
            cols.push((at + 1, tok));
            pos = at + tok.len();
        }
        let Some(&(kw_col, kw)) = cols.first() else { continue };
        let mut declare = |name: &str, kind: NodeKind, col: usize| -> Result<(), ParseError> {
            if decls.contains_key(name) {
                return Err(ParseError::new(line_no, col, format!("node `{name}` declared twice")));
            }
            order.push(name.to_string());
            decls.insert(name.to_string(), Decl { kind, line: line_no });
            Ok(())
        };
        match kw {
            "node" => {
                let (name_col, name) = *cols.get(1).ok_or_else(|| {
                    ParseError::new(line_no, kw_col, "expected `node <id> z|x|h [phase]`")
                })?;
                let (kcol, k) = *cols
                    .get(2)
                    .ok_or_else(|| ParseError::new(line_no, name_col, "missing node kind"))?;
                let phase = match cols.get(3) {
                    Some(&(pcol, p)) => Some(
                        p.parse::<Phase>()
                            .map_err(|_| ParseError::new(line_no, pcol, format!("invalid phase `{p}`")))?,
                    ),
                    None => None,
                };
                if let Some(&(c, _)) = cols.get(4) {
                    return Err(ParseError::new(line_no, c, "trailing tokens"));
                }
                let kind = match (k, phase) {
                    ("z", p) => NodeKind::ZSpider(p.unwrap_or_default()),
                    ("x", p) => NodeKind::XSpider(p.unwrap_or_default()),
                    ("h", None) => NodeKind::HBox,
                    ("h", Some(_)) => {
                        return Err(ParseError::new(line_no, cols[3].0, "H-boxes take no phase"))
                    }
                    _ => return Err(ParseError::new(line_no, kcol, format!("unknown node kind `{k}`"))),
                };
                declare(name, kind, name_col)?;
            }
            "in" | "out" => {
                for &(c, name) in &cols[1..] {
                    declare(name, NodeKind::Boundary, c)?;
                    if kw == "in" { inputs.push(name.to_string()) } else { outputs.push(name.to_string()) }
                }
            }
            "edge" => {
                if cols.len() != 3 {
                    return Err(ParseError::new(line_no, kw_col, "expected `edge <id> <id>`"));
                }
                edges.push((cols[1].1.to_string(), cols[2].1.to_string(), line_no, cols[1].0));
            }
            other => {
                return Err(ParseError::new(line_no, kw_col, format!("unknown keyword `{other}`")))
            }
        }
    }

    let mut ids: BTreeMap<&str, NodeId> = BTreeMap::new();
    let mut taken: std::collections::BTreeSet<NodeId> = std::collections::BTreeSet::new();
    for name in &order {
        if let Some(k) = numeric_id(name) {
            ids.insert(name, k);
            taken.insert(k);
        }
    }
    let mut next = taken.iter().next_back().map_or(0, |m| m + 1);
    for name in &order {
        if !ids.contains_key(name.as_str()) {
            ids.insert(name, next);
            next += 1;
        }
    }

    let mut d = Diagram::new();
    for name in &order {
        d.insert_node(ids[name.as_str()], decls[name].kind);
    }
    for (a, b, line, col) in &edges {
        let ia = *ids
            .get(a.as_str())
            .ok_or_else(|| ParseError::new(*line, *col, format!("undeclared node `{a}`")))?;
        let ib = *ids
            .get(b.as_str())
            .ok_or_else(|| ParseError::new(*line, *col, format!("undeclared node `{b}`")))?;
        let kind_a = decls[a].kind;
        if ia == ib && matches!(kind_a, NodeKind::HBox | NodeKind::Boundary) {
            return Err(ParseError::new(*line, *col, format!("self-loop on `{a}` is not allowed")));
        }
        d.add_edge(ia, ib);
    }
    d.set_inputs(inputs.iter().map(|n| ids[n.as_str()]).collect());
    d.set_outputs(outputs.iter().map(|n| ids[n.as_str()]).collect());
    for name in &order {
        let v = ids[name.as_str()];
        let decl = &decls[name];
        let deg = d.degree(v);
        match decl.kind {
            NodeKind::Boundary if deg != 1 => {
                return Err(ParseError::new(
                    decl.line,
                    1,
                    format!("boundary `{name}` must have exactly one edge, found {deg}"),
                ))
            }
            NodeKind::HBox if deg != 2 => {
                return Err(ParseError::new(
                    decl.line,
                    1,
                    format!("H-box `{name}` must have exactly two edges, found {deg}"),
                ))
            }
            _ => {}
        }
    }
    let names = ids.into_iter().map(|(n, v)| (n.to_string(), v)).collect();
    Ok((d, names))
}

/// Writes `d` as `.zxd` text with `n<k>` names.
pub fn serialize(d: &Diagram) -> String {
    let mut out = String::new();
    for (v, k) in d.nodes() {
        match k {
            NodeKind::ZSpider(p) | NodeKind::XSpider(p) => {
                let c = if matches!(k, NodeKind::ZSpider(_)) { 'z' } else { 'x' };
                if p.is_zero() {
                    writeln!(out, "node n{v} {c}").unwrap();
                } else {
                    writeln!(out, "node n{v} {c} {p}").unwrap();
                }
            }
            NodeKind::HBox => writeln!(out, "node n{v} h").unwrap(),
            NodeKind::Boundary => {}
        }
    }
    let list = |ids: &[NodeId]| ids.iter().map(|v| format!(" n{v}")).collect::<String>();
    writeln!(out, "in{}", list(d.inputs())).unwrap();
    writeln!(out, "out{}", list(d.outputs())).unwrap();
    for (a, b) in d.edges() {
        writeln!(out, "edge n{a} n{b}").unwrap();
    }
    out
}

/// Graphviz rendering: Z green, X red, H as a yellow square.
pub fn to_dot(d: &Diagram) -> String {
    let mut out = String::from("graph zx {\n  rankdir=BT;\n");
    for (v, k) in d.nodes() {
        let attrs = match k {
            NodeKind::ZSpider(p) => spider_attrs("green", p),
            NodeKind::XSpider(p) => spider_attrs("red", p),
            NodeKind::HBox => "shape=square, style=filled, fillcolor=yellow, label=\"H\"".to_string(),
            NodeKind::Boundary => {
                let label = match d.inputs().iter().position(|&b| b == v) {
                    Some(i) => format!("in{i}"),
                    None => format!("out{}", d.outputs().iter().position(|&b| b == v).unwrap_or(0)),
                };
                format!("shape=plaintext, label=\"{label}\"")
            }
        };
        writeln!(out, "  n{v} [{attrs}];").unwrap();
    }
    for (a, b) in d.edges() {
        writeln!(out, "  n{a} -- n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn spider_attrs(colour: &str, p: Phase) -> String {
    let label = if p.is_zero() { String::new() } else { format!("{p}π") };
    format!("shape=circle, style=filled, fillcolor={colour}, label=\"{label}\"")
}
