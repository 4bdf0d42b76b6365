//! Open undirected multigraphs of spiders, H-boxes and boundary nodes.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::phase::Phase;

/// Node identifier. Ids are never reused within one diagram.
pub type NodeId = u32;

/// Spider colour.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Colour {
    Z,
    X,
}

impl Colour {
    pub fn other(self) -> Colour {
        match self {
            Colour::Z => Colour::X,
            Colour::X => Colour::Z,
        }
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Colour::Z => "z",
            Colour::X => "x",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodeKind {
    ZSpider(Phase),
    XSpider(Phase),
    HBox,
    Boundary,
}

impl NodeKind {
    pub fn spider(colour: Colour, phase: Phase) -> NodeKind {
        match colour {
            Colour::Z => NodeKind::ZSpider(phase),
            Colour::X => NodeKind::XSpider(phase),
        }
    }

    pub fn colour(self) -> Option<Colour> {
        match self {
            NodeKind::ZSpider(_) => Some(Colour::Z),
            NodeKind::XSpider(_) => Some(Colour::X),
            _ => None,
        }
    }

    pub fn phase(self) -> Option<Phase> {
        match self {
            NodeKind::ZSpider(p) | NodeKind::XSpider(p) => Some(p),
            _ => None,
        }
    }

    pub fn is_spider(self) -> bool {
        self.colour().is_some()
    }

    /// Same kind with every spider phase negated.
    pub fn negated(self) -> NodeKind {
        match self {
            NodeKind::ZSpider(p) => NodeKind::ZSpider(-p),
            NodeKind::XSpider(p) => NodeKind::XSpider(-p),
            k => k,
        }
    }
}

/// Single-node building blocks and the plain wire.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorId {
    DeltaZ,
    DeltaZDag,
    EpsZ,
    EpsZDag,
    PZ,
    DeltaX,
    DeltaXDag,
    EpsX,
    EpsXDag,
    PX,
    H,
    Wire,
}

impl GeneratorId {
    pub const ALL: [GeneratorId; 12] = [
        GeneratorId::DeltaZ,
        GeneratorId::DeltaZDag,
        GeneratorId::EpsZ,
        GeneratorId::EpsZDag,
        GeneratorId::PZ,
        GeneratorId::DeltaX,
        GeneratorId::DeltaXDag,
        GeneratorId::EpsX,
        GeneratorId::EpsXDag,
        GeneratorId::PX,
        GeneratorId::H,
        GeneratorId::Wire,
    ];
}

/// An open diagram. Edges are an unordered multiset; a self-loop on `v` is
/// stored once under `adj[v][v]` and contributes 2 to the degree.
#[derive(Clone, Debug, Default)]
pub struct Diagram {
    nodes: BTreeMap<NodeId, NodeKind>,
    adj: BTreeMap<NodeId, BTreeMap<NodeId, usize>>,
    inputs: Vec<NodeId>,
    outputs: Vec<NodeId>,
    next_id: NodeId,
}

impl PartialEq for Diagram {
    fn eq(&self, other: &Diagram) -> bool {
        self.nodes == other.nodes
            && self.adj == other.adj
            && self.inputs == other.inputs
            && self.outputs == other.outputs
    }
}

impl Eq for Diagram {}

impl Diagram {
    pub fn new() -> Diagram {
        Diagram::default()
    }

    /// Adds a node with a fresh id.
    pub fn add_node(&mut self, kind: NodeKind) -> NodeId {
        let id = self.next_id;
        self.next_id += 1;
        self.nodes.insert(id, kind);
        self.adj.insert(id, BTreeMap::new());
        id
    }

    /// Adds a node under a caller-chosen id (used by the parser).
    pub(crate) fn insert_node(&mut self, id: NodeId, kind: NodeKind) {
        self.nodes.insert(id, kind);
        self.adj.entry(id).or_default();
        self.next_id = self.next_id.max(id + 1);
    }

    pub fn add_spider(&mut self, colour: Colour, phase: Phase) -> NodeId {
        self.add_node(NodeKind::spider(colour, phase))
    }

    /// Adds a boundary node and appends it to the inputs.
    pub fn add_input(&mut self) -> NodeId {
        let b = self.add_node(NodeKind::Boundary);
        self.inputs.push(b);
        b
    }

    /// Adds a boundary node and appends it to the outputs.
    pub fn add_output(&mut self) -> NodeId {
        let b = self.add_node(NodeKind::Boundary);
        self.outputs.push(b);
        b
    }

    pub fn add_edge(&mut self, a: NodeId, b: NodeId) {
        assert!(self.nodes.contains_key(&a) && self.nodes.contains_key(&b), "edge endpoint missing");
        *self.adj.get_mut(&a).unwrap().entry(b).or_insert(0) += 1;
        if a != b {
            *self.adj.get_mut(&b).unwrap().entry(a).or_insert(0) += 1;
        }
    }

    /// Removes one copy of the edge `a`–`b`. Returns false if absent.
    pub fn remove_edge(&mut self, a: NodeId, b: NodeId) -> bool {
        if self.edge_count(a, b) == 0 {
            return false;
        }
        for (x, y) in [(a, b), (b, a)] {
            let row = self.adj.get_mut(&x).unwrap();
            let m = row.get_mut(&y).unwrap();
            *m -= 1;
            if *m == 0 {
                row.remove(&y);
            }
            if a == b {
                break;
            }
        }
        true
    }

    /// Removes a node together with all its incident edges and boundary entries.
    pub fn remove_node(&mut self, v: NodeId) {
        if let Some(row) = self.adj.remove(&v) {
            for u in row.keys() {
                if *u != v {
                    self.adj.get_mut(u).unwrap().remove(&v);
                }
            }
        }
        self.nodes.remove(&v);
        self.inputs.retain(|&b| b != v);
        self.outputs.retain(|&b| b != v);
    }

    pub fn set_kind(&mut self, v: NodeId, kind: NodeKind) {
        *self.nodes.get_mut(&v).expect("unknown node") = kind;
    }

    pub fn kind(&self, v: NodeId) -> Option<NodeKind> {
        self.nodes.get(&v).copied()
    }

    pub fn contains(&self, v: NodeId) -> bool {
        self.nodes.contains_key(&v)
    }

    pub fn nodes(&self) -> impl Iterator<Item = (NodeId, NodeKind)> + '_ {
        self.nodes.iter().map(|(&k, &v)| (k, v))
    }

    pub fn node_ids(&self) -> Vec<NodeId> {
        self.nodes.keys().copied().collect()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Total number of edges counted with multiplicity.
    pub fn edge_count_total(&self) -> usize {
        self.edges().len()
    }

    pub fn edge_count(&self, a: NodeId, b: NodeId) -> usize {
        self.adj.get(&a).and_then(|r| r.get(&b)).copied().unwrap_or(0)
    }

    /// Every edge as `(a, b)` with `a ≤ b`, repeated by multiplicity, sorted.
    pub fn edges(&self) -> Vec<(NodeId, NodeId)> {
        let mut out = Vec::new();
        for (&a, row) in &self.adj {
            for (&b, &m) in row.range(a..) {
                for _ in 0..m {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Distinct neighbours (including `v` itself for a self-loop) with multiplicities.
    pub fn neighbours(&self, v: NodeId) -> impl Iterator<Item = (NodeId, usize)> + '_ {
        self.adj.get(&v).into_iter().flat_map(|r| r.iter().map(|(&k, &m)| (k, m)))
    }

    /// Neighbours other than `v`, listed once per edge, sorted.
    pub fn incidences(&self, v: NodeId) -> Vec<NodeId> {
        let mut out = Vec::new();
        for (u, m) in self.neighbours(v) {
            if u != v {
                out.extend(std::iter::repeat(u).take(m));
            }
        }
        out
    }

    pub fn self_loops(&self, v: NodeId) -> usize {
        self.edge_count(v, v)
    }

    /// Degree with self-loops counted twice.
    pub fn degree(&self, v: NodeId) -> usize {
        self.neighbours(v).map(|(u, m)| if u == v { 2 * m } else { m }).sum()
    }

    pub fn inputs(&self) -> &[NodeId] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[NodeId] {
        &self.outputs
    }

    pub fn set_inputs(&mut self, inputs: Vec<NodeId>) {
        self.inputs = inputs;
    }

    pub fn set_outputs(&mut self, outputs: Vec<NodeId>) {
        self.outputs = outputs;
    }

    pub fn is_boundary(&self, v: NodeId) -> bool {
        self.kind(v) == Some(NodeKind::Boundary)
    }

    pub fn has_hbox(&self) -> bool {
        self.nodes.values().any(|k| *k == NodeKind::HBox)
    }

    /// The id the next added node will receive.
    pub fn next_id(&self) -> NodeId {
        self.next_id
    }

    /// Checks the structural invariants.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidDiagram(m));
        for (&v, &k) in &self.nodes {
            match k {
                NodeKind::Boundary => {
                    if self.degree(v) != 1 || self.self_loops(v) > 0 {
                        return bad(format!("boundary n{v} has degree {}", self.degree(v)));
                    }
                    let ins = self.inputs.iter().filter(|&&b| b == v).count();
                    let outs = self.outputs.iter().filter(|&&b| b == v).count();
                    if ins + outs != 1 {
                        return bad(format!("boundary n{v} must appear exactly once in inputs/outputs"));
                    }
                }
                NodeKind::HBox => {
                    if self.self_loops(v) > 0 {
                        return bad(format!("H-box n{v} has a self-loop"));
                    }
                    if self.degree(v) != 2 {
                        return bad(format!("H-box n{v} has degree {}", self.degree(v)));
                    }
                }
                _ => {}
            }
        }
        for &b in self.inputs.iter().chain(&self.outputs) {
            if self.kind(b) != Some(NodeKind::Boundary) {
                return bad(format!("n{b} is listed as a boundary but is not one"));
            }
        }
        Ok(())
    }

    /// Copy of `self` with ids renumbered `0..` in current id order.
    pub fn compacted(&self) -> Diagram {
        let map: BTreeMap<NodeId, NodeId> =
            self.nodes.keys().enumerate().map(|(i, &v)| (v, i as NodeId)).collect();
        self.relabelled(&map)
    }

    fn relabelled(&self, map: &BTreeMap<NodeId, NodeId>) -> Diagram {
        let mut d = Diagram::new();
        for (&v, &k) in &self.nodes {
            d.insert_node(map[&v], k);
        }
        for (a, b) in self.edges() {
            d.add_edge(map[&a], map[&b]);
        }
        d.inputs = self.inputs.iter().map(|v| map[v]).collect();
        d.outputs = self.outputs.iter().map(|v| map[v]).collect();
        d
    }

    /// Copies all of `other` into `self` under fresh ids; returns the id map.
    fn absorb(&mut self, other: &Diagram) -> BTreeMap<NodeId, NodeId> {
        let map: BTreeMap<NodeId, NodeId> =
            other.nodes.iter().map(|(&v, &k)| (v, self.add_node(k))).collect();
        for (a, b) in other.edges() {
            self.add_edge(map[&a], map[&b]);
        }
        map
    }

    /// The unique neighbour of a boundary node.
    pub fn boundary_neighbour(&self, b: NodeId) -> NodeId {
        self.neighbours(b).next().expect("boundary without edge").0
    }

    /// Deletes boundary nodes `x` and `y` (degree 1 each) and joins their neighbours.
    fn glue(&mut self, x: NodeId, y: NodeId) {
        let nx = self.boundary_neighbour(x);
        let ny = self.boundary_neighbour(y);
        self.remove_node(x);
        self.remove_node(y);
        if nx == y {
            // x and y were wired to each other: a closed loop, dropped as a scalar
            return;
        }
        self.add_edge(nx, ny);
    }
}

/// The one-node diagram (or plain wire) for a generator.
pub fn generator(kind: GeneratorId, phase: Option<Phase>) -> Result<Diagram> {
    use GeneratorId::*;
    let takes_phase = matches!(kind, PZ | PX);
    if phase.is_some() && !takes_phase {
        return Err(Error::UnexpectedPhase(format!("{kind:?}")));
    }
    let alpha = phase.unwrap_or(Phase::ZERO);
    let (node, n_in, n_out) = match kind {
        DeltaZ => (Some(NodeKind::ZSpider(alpha)), 1, 2),
        DeltaZDag => (Some(NodeKind::ZSpider(alpha)), 2, 1),
        EpsZ => (Some(NodeKind::ZSpider(alpha)), 1, 0),
        EpsZDag => (Some(NodeKind::ZSpider(alpha)), 0, 1),
        PZ => (Some(NodeKind::ZSpider(alpha)), 1, 1),
        DeltaX => (Some(NodeKind::XSpider(alpha)), 1, 2),
        DeltaXDag => (Some(NodeKind::XSpider(alpha)), 2, 1),
        EpsX => (Some(NodeKind::XSpider(alpha)), 1, 0),
        EpsXDag => (Some(NodeKind::XSpider(alpha)), 0, 1),
        PX => (Some(NodeKind::XSpider(alpha)), 1, 1),
        H => (Some(NodeKind::HBox), 1, 1),
        Wire => (None, 1, 1),
    };
    let mut d = Diagram::new();
    let ins: Vec<NodeId> = (0..n_in).map(|_| d.add_input()).collect();
    let outs: Vec<NodeId> = (0..n_out).map(|_| d.add_output()).collect();
    match node {
        Some(k) => {
            let v = d.add_node(k);
            for b in ins.into_iter().chain(outs) {
                d.add_edge(b, v);
            }
        }
        None => d.add_edge(ins[0], outs[0]),
    }
    Ok(d)
}

/// `f ∘ g`: output `i` of `g` is glued to input `i` of `f`.
pub fn compose(f: &Diagram, g: &Diagram) -> Result<Diagram> {
    if g.outputs.len() != f.inputs.len() {
        return Err(Error::ArityMismatch(g.outputs.len(), f.inputs.len()));
    }
    let mut d = Diagram::new();
    let mg = d.absorb(g);
    let mf = d.absorb(f);
    d.inputs = g.inputs.iter().map(|v| mg[v]).collect();
    d.outputs = f.outputs.iter().map(|v| mf[v]).collect();
    let pairs: Vec<(NodeId, NodeId)> =
        g.outputs.iter().zip(&f.inputs).map(|(a, b)| (mg[a], mf[b])).collect();
    for (x, y) in pairs {
        d.glue(x, y);
    }
    let d = d.compacted();
    debug_assert!(d.validate().is_ok());
    Ok(d)
}

/// Side-by-side juxtaposition.
pub fn tensor(f: &Diagram, g: &Diagram) -> Diagram {
    let mut d = Diagram::new();
    let mf = d.absorb(f);
    let mg = d.absorb(g);
    d.inputs = f.inputs.iter().map(|v| mf[v]).chain(g.inputs.iter().map(|v| mg[v])).collect();
    d.outputs = f.outputs.iter().map(|v| mf[v]).chain(g.outputs.iter().map(|v| mg[v])).collect();
    d
}

/// Swaps inputs and outputs and negates every spider phase.
pub fn dagger(f: &Diagram) -> Diagram {
    let mut d = f.clone();
    for k in d.nodes.values_mut() {
        *k = k.negated();
    }
    std::mem::swap(&mut d.inputs, &mut d.outputs);
    d
}
