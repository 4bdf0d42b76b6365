//! Structural equality: label- and multiplicity-preserving isomorphism that
//! maps inputs and outputs index-wise.

use std::collections::BTreeMap;

use crate::diagram::{Diagram, NodeId};

pub fn iso_equal(f: &Diagram, g: &Diagram) -> bool {
    iso_mapping(f, g).is_some()
}

/// An isomorphism `f → g` if one exists.
pub fn iso_mapping(f: &Diagram, g: &Diagram) -> Option<BTreeMap<NodeId, NodeId>> {
    if f.node_count() != g.node_count()
        || f.edge_count_total() != g.edge_count_total()
        || f.inputs().len() != g.inputs().len()
        || f.outputs().len() != g.outputs().len()
    {
        return None;
    }
    let sig = |d: &Diagram, v: NodeId| (d.kind(v).unwrap(), d.degree(v), d.self_loops(v));
    let mut fsigs: Vec<_> = f.node_ids().into_iter().map(|v| sig(f, v)).collect();
    let mut gsigs: Vec<_> = g.node_ids().into_iter().map(|v| sig(g, v)).collect();
    fsigs.sort();
    gsigs.sort();
    if fsigs != gsigs {
        return None;
    }

    let mut s = Search {
        f,
        g,
        fwd: BTreeMap::new(),
        used: BTreeMap::new(),
    };
    for (a, b) in f.inputs().iter().zip(g.inputs()).chain(f.outputs().iter().zip(g.outputs())) {
        if !s.compatible(*a, *b) {
            return None;
        }
        s.fwd.insert(*a, *b);
        s.used.insert(*b, *a);
    }
    // visit order: breadth-first from the boundaries so candidates are constrained early
    let mut order: Vec<NodeId> = Vec::new();
    let mut seen: std::collections::BTreeSet<NodeId> = s.fwd.keys().copied().collect();
    let mut queue: std::collections::VecDeque<NodeId> = s.fwd.keys().copied().collect();
    loop {
        while let Some(v) = queue.pop_front() {
            for (u, _) in f.neighbours(v) {
                if seen.insert(u) {
                    order.push(u);
                    queue.push_back(u);
                }
            }
        }
        match f.node_ids().into_iter().find(|v| !seen.contains(v)) {
            Some(v) => {
                seen.insert(v);
                order.push(v);
                queue.push_back(v);
            }
            None => break,
        }
    }
    if s.extend(&order, 0) {
        Some(s.fwd)
    } else {
        None
    }
}

struct Search<'a> {
    f: &'a Diagram,
    g: &'a Diagram,
    fwd: BTreeMap<NodeId, NodeId>,
    used: BTreeMap<NodeId, NodeId>,
}

impl Search<'_> {
    fn compatible(&self, a: NodeId, b: NodeId) -> bool {
        let (f, g) = (self.f, self.g);
        if f.kind(a) != g.kind(b) || f.degree(a) != g.degree(b) || f.self_loops(a) != g.self_loops(b) {
            return false;
        }
        // every already-mapped neighbour must carry the same multiplicity
        for (u, m) in f.neighbours(a) {
            if u == a {
                continue;
            }
            if let Some(&gu) = self.fwd.get(&u) {
                if g.edge_count(b, gu) != m {
                    return false;
                }
            }
        }
        for (w, m) in g.neighbours(b) {
            if w == b {
                continue;
            }
            if let Some(&fw) = self.used.get(&w) {
                if f.edge_count(a, fw) != m {
                    return false;
                }
            }
        }
        true
    }

    fn extend(&mut self, order: &[NodeId], i: usize) -> bool {
        let Some(&a) = order.get(i) else { return true };
        // candidates: neighbours of the image of a mapped neighbour, else anything unused
        let anchor = self.f.neighbours(a).map(|(u, _)| u).find(|u| self.fwd.contains_key(u));
        let candidates: Vec<NodeId> = match anchor {
            Some(u) => self.g.neighbours(self.fwd[&u]).map(|(w, _)| w).collect(),
            None => self.g.node_ids(),
        };
        for b in candidates {
            if self.used.contains_key(&b) || !self.compatible(a, b) {
                continue;
            }
            self.fwd.insert(a, b);
            self.used.insert(b, a);
            if self.extend(order, i + 1) {
                return true;
            }
            self.fwd.remove(&a);
            self.used.remove(&b);
        }
        false
    }
}
