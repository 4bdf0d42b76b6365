//! Simple graphs, graph-state diagrams and local complementation.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write;

use crate::diagram::{Colour, Diagram, NodeId, NodeKind};
use crate::error::{Error, ParseError, Result};
use crate::phase::Phase;
use crate::semantics::{diagrams_equal, ModelN, TOL};

/// Default vertex cap for [`lc_orbit`].
pub const ORBIT_CAP: usize = 8;

/// Undirected simple graph with ordered, string-named vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleGraph {
    vertices: Vec<String>,
    /// Pairs of vertex indices `(i, j)` with `i < j`.
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    /// A graph on the given vertices with no edges. Panics on duplicate names.
    pub fn new<S: Into<String>>(vertices: impl IntoIterator<Item = S>) -> SimpleGraph {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let distinct: BTreeSet<&String> = vertices.iter().collect();
        assert_eq!(distinct.len(), vertices.len(), "duplicate vertex name");
        SimpleGraph { vertices, edges: BTreeSet::new() }
    }

    /// Vertices `v0 .. v{n-1}`.
    pub fn with_indexed_vertices(n: usize) -> SimpleGraph {
        SimpleGraph::new((0..n).map(|i| format!("v{i}")))
    }

    /// The graph on `n` indexed vertices whose edges are the set bits of
    /// `mask` over the pairs `(i, j)`, `i < j`, in lexicographic order.
    pub fn from_mask(n: usize, mask: u64) -> SimpleGraph {
        let mut g = SimpleGraph::with_indexed_vertices(n);
        let mut bit = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if mask & (1 << bit) != 0 {
                    g.edges.insert((i, j));
                }
                bit += 1;
            }
        }
        g
    }

    /// Star with centre `c` and leaves `l1 .. l{n-1}` (`n` vertices in total).
    pub fn star(n: usize) -> SimpleGraph {
        assert!(n >= 1);
        let mut names = vec!["c".to_string()];
        names.extend((1..n).map(|i| format!("l{i}")));
        let mut g = SimpleGraph::new(names);
        for i in 1..n {
            g.edges.insert((0, i));
        }
        g
    }

    /// Complete graph on `v0 .. v{n-1}`.
    pub fn complete(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::with_indexed_vertices(n);
        for i in 0..n {
            for j in (i + 1)..n {
                g.edges.insert((i, j));
            }
        }
        g
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn index_of(&self, v: &str) -> Result<usize> {
        self.vertices.iter().position(|x| x == v).ok_or_else(|| Error::UnknownVertex(v.to_string()))
    }

    pub fn add_edge(&mut self, a: &str, b: &str) -> Result<()> {
        let (i, j) = (self.index_of(a)?, self.index_of(b)?);
        if i == j {
            return Err(Error::InvalidDiagram(format!("self-loop on vertex `{a}`")));
        }
        self.edges.insert((i.min(j), i.max(j)));
        Ok(())
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Ok(i), Ok(j)) => self.edges.contains(&(i.min(j), i.max(j))),
            _ => false,
        }
    }

    /// Edges as vertex-name pairs, in index order.
    pub fn edges(&self) -> Vec<(&str, &str)> {
        self.edges.iter().map(|&(i, j)| (self.vertices[i].as_str(), self.vertices[j].as_str())).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn neighbour_indices(&self, i: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| if a == i { Some(b) } else if b == i { Some(a) } else { None })
            .collect()
    }

    /// Neighbours of `v` in vertex order.
    pub fn neighbours(&self, v: &str) -> Result<Vec<&str>> {
        let i = self.index_of(v)?;
        Ok(self.neighbour_indices(i).into_iter().map(|j| self.vertices[j].as_str()).collect())
    }

    /// Parses the `.edges` format: `vertices a b c` followed by `edge a b` lines.
    pub fn parse(text: &str) -> std::result::Result<SimpleGraph, ParseError> {
        let mut g: Option<SimpleGraph> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("");
            let toks: Vec<&str> = line.split_whitespace().collect();
            let Some(&kw) = toks.first() else { continue };
            let col = line.find(kw).unwrap() + 1;
            match (kw, &mut g) {
                ("vertices", None) => {
                    let distinct: BTreeSet<&&str> = toks[1..].iter().collect();
                    if distinct.len() != toks.len() - 1 {
                        return Err(ParseError::new(i + 1, col, "duplicate vertex name"));
                    }
                    g = Some(SimpleGraph::new(toks[1..].iter().copied()));
                }
                ("vertices", Some(_)) => {
                    return Err(ParseError::new(i + 1, col, "vertices declared twice"))
                }
                ("edge", Some(graph)) => {
                    if toks.len() != 3 {
                        return Err(ParseError::new(i + 1, col, "expected `edge <a> <b>`"));
                    }
                    graph.add_edge(toks[1], toks[2]).map_err(|e| ParseError::new(i + 1, col, e.to_string()))?;
                }
                ("edge", None) => {
                    return Err(ParseError::new(i + 1, col, "`vertices` line must come first"))
                }
                (other, _) => {
                    return Err(ParseError::new(i + 1, col, format!("unknown keyword `{other}`")))
                }
            }
        }
        g.ok_or_else(|| ParseError::new(1, 1, "missing `vertices` line"))
    }

    /// Writes the `.edges` format.
    pub fn serialize(&self) -> String {
        let mut out = String::from("vertices");
        for v in &self.vertices {
            out.push(' ');
            out.push_str(v);
        }
        out.push('\n');
        for (a, b) in self.edges() {
            writeln!(out, "edge {a} {b}").unwrap();
        }
        out
    }
}

/// The controlled-Z diagram: two Z spiders joined through an H-box.
pub fn cz_diagram() -> Diagram {
    let mut d = Diagram::new();
    let i0 = d.add_input();
    let i1 = d.add_input();
    let o0 = d.add_output();
    let o1 = d.add_output();
    let a = d.add_spider(Colour::Z, Phase::ZERO);
    let b = d.add_spider(Colour::Z, Phase::ZERO);
    let h = d.add_node(NodeKind::HBox);
    d.add_edge(i0, a);
    d.add_edge(a, o0);
    d.add_edge(i1, b);
    d.add_edge(b, o1);
    d.add_edge(a, h);
    d.add_edge(h, b);
    d
}

/// Node ids of a graph-state diagram: spider `i` is vertex `i`, output `n + i`
/// is its wire, H-boxes follow in edge order.
pub fn graph_state(g: &SimpleGraph) -> Diagram {
    let n = g.vertices.len();
    let mut d = Diagram::new();
    let spiders: Vec<NodeId> = (0..n).map(|_| d.add_spider(Colour::Z, Phase::ZERO)).collect();
    for &s in &spiders {
        let o = d.add_output();
        d.add_edge(s, o);
    }
    for &(i, j) in &g.edges {
        let h = d.add_node(NodeKind::HBox);
        d.add_edge(spiders[i], h);
        d.add_edge(h, spiders[j]);
    }
    d
}

/// Toggles every edge between distinct neighbours of `u`.
pub fn local_complement(g: &SimpleGraph, u: &str) -> Result<SimpleGraph> {
    let i = g.index_of(u)?;
    let nb = g.neighbour_indices(i);
    let mut h = g.clone();
    for (x, &a) in nb.iter().enumerate() {
        for &b in &nb[x + 1..] {
            let e = (a.min(b), a.max(b));
            if !h.edges.remove(&e) {
                h.edges.insert(e);
            }
        }
    }
    Ok(h)
}

/// Inserts a spider on the output wire of vertex `i`.
fn rotate(d: &mut Diagram, vertex: usize, colour: Colour, phase: Phase) {
    let out = d.outputs()[vertex];
    let s = d.boundary_neighbour(out);
    d.remove_edge(s, out);
    let r = d.add_spider(colour, phase);
    d.add_edge(s, r);
    d.add_edge(r, out);
}

/// Appends local rotations to a state diagram: X(`x_phase`) on `u` and
/// Z(`z_phase`) on each neighbour of `u` in `g`.
pub fn apply_local_rotations(d: &mut Diagram, g: &SimpleGraph, u: &str, x_phase: Phase, z_phase: Phase) -> Result<()> {
    let i = g.index_of(u)?;
    rotate(d, i, Colour::X, x_phase);
    for j in g.neighbour_indices(i) {
        rotate(d, j, Colour::Z, z_phase);
    }
    Ok(())
}

/// The graph state with X(π) on `u` and Z(π) on its neighbours.
pub fn fixpoint_lhs(g: &SimpleGraph, u: &str) -> Result<Diagram> {
    let mut d = graph_state(g);
    apply_local_rotations(&mut d, g, u, Phase::PI, Phase::PI)?;
    Ok(d)
}

/// Rotation angles on `u` (X) and its neighbours (Z) that turn `|G⟩` into
/// `|G*u⟩`. Both sign pairs work, since they differ by the stabilizer of
/// [`fixpoint_lhs`]; this one is fixed for reproducibility.
pub const VDN_U_PHASE: Phase = Phase::HALF_PI;
pub const VDN_NEIGHBOUR_PHASE: Phase = Phase::MINUS_HALF_PI;

/// The graph state with X(π/2) on `u` and Z(-π/2) on its neighbours.
pub fn vdn_lhs(g: &SimpleGraph, u: &str) -> Result<Diagram> {
    let mut d = graph_state(g);
    apply_local_rotations(&mut d, g, u, VDN_U_PHASE, VDN_NEIGHBOUR_PHASE)?;
    Ok(d)
}

/// Semantic check of the fixpoint property at `u`.
pub fn check_fixpoint(g: &SimpleGraph, u: &str) -> Result<bool> {
    diagrams_equal(&fixpoint_lhs(g, u)?, &graph_state(g), ModelN::STANDARD, TOL)
}

/// Semantic check that local rotations at `u` realise `G*u`.
pub fn check_vdn(g: &SimpleGraph, u: &str) -> Result<bool> {
    diagrams_equal(&vdn_lhs(g, u)?, &graph_state(&local_complement(g, u)?), ModelN::STANDARD, TOL)
}

/// All labelled graphs reachable from `g` by local complementations, each
/// with one shortest path of complemented vertices leading to it.
pub fn lc_orbit_paths(g: &SimpleGraph, cap: usize) -> Result<BTreeMap<SimpleGraph, Vec<String>>> {
    if g.vertices.len() > cap {
        return Err(Error::CapExceeded(g.vertices.len(), cap));
    }
    let mut seen: BTreeMap<SimpleGraph, Vec<String>> = BTreeMap::new();
    seen.insert(g.clone(), Vec::new());
    let mut queue = VecDeque::from([g.clone()]);
    while let Some(h) = queue.pop_front() {
        for v in h.vertices.clone() {
            let next = local_complement(&h, &v)?;
            if !seen.contains_key(&next) {
                let mut path = seen[&h].clone();
                path.push(v);
                seen.insert(next.clone(), path);
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

/// The local-complementation orbit of `g` (labelled graphs, no isomorphism quotient).
pub fn lc_orbit(g: &SimpleGraph) -> Result<BTreeSet<SimpleGraph>> {
    Ok(lc_orbit_paths(g, ORBIT_CAP)?.into_keys().collect())
}
