//! Seeded random diagrams and graphs for property sweeps.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::{Colour, Diagram, NodeId, NodeKind};
use crate::graphstate::SimpleGraph;
use crate::phase::Phase;
use crate::rules::{apply_with, instances, match_sites, Config, RuleId, PHASE_GRID};

/// Default node budget for random diagrams, boundaries included.
pub const MAX_NODES: usize = 10;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn phase(rng: &mut impl Rng) -> Phase {
    match rng.gen_range(0..10) {
        0..=3 => Phase::ZERO,
        4..=5 => Phase::PI,
        _ => *PHASE_GRID.choose(rng).expect("non-empty grid"),
    }
}

fn colour(rng: &mut impl Rng) -> Colour {
    if rng.gen_bool(0.5) {
        Colour::Z
    } else {
        Colour::X
    }
}

/// A random multigraph of spiders, H-boxes and boundaries with at most
/// `max_nodes` nodes. Parallel edges and spider self-loops occur.
pub fn random_multigraph(rng: &mut impl Rng, max_nodes: usize) -> Diagram {
    let max_nodes = max_nodes.max(1);
    let mut d = Diagram::new();
    let n_in = rng.gen_range(0..=2usize);
    let n_out = rng.gen_range(0..=2usize);
    let boundaries = (n_in + n_out).min(max_nodes.saturating_sub(1));
    let room = max_nodes - boundaries;
    let n_h = rng.gen_range(0..=2usize.min(room.saturating_sub(1)));
    let n_s = rng.gen_range(1..=room - n_h);
    let spiders: Vec<NodeId> = (0..n_s).map(|_| d.add_spider(colour(rng), phase(rng))).collect();
    for i in 0..boundaries {
        let b = if i < n_in.min(boundaries) { d.add_input() } else { d.add_output() };
        let s = *spiders.choose(rng).expect("a spider");
        d.add_edge(b, s);
    }
    for _ in 0..n_h {
        let h = d.add_node(NodeKind::HBox);
        let (a, c) = (*spiders.choose(rng).unwrap(), *spiders.choose(rng).unwrap());
        d.add_edge(a, h);
        d.add_edge(h, c);
    }
    for _ in 0..rng.gen_range(0..=n_s + 3) {
        let a = *spiders.choose(rng).unwrap();
        let c = if rng.gen_bool(0.1) { a } else { *spiders.choose(rng).unwrap() };
        d.add_edge(a, c);
    }
    d
}

/// A random rule's catalogue instance, if one fits in `max_nodes`.
fn random_instance(rng: &mut impl Rng, max_nodes: usize) -> Option<Diagram> {
    let rule = *RuleId::ALL.iter().filter(|r| !r.is_euler()).collect::<Vec<_>>().choose(rng)?;
    let fitting: Vec<Diagram> =
        instances(*rule).into_iter().map(|i| i.diagram).filter(|d| d.node_count() <= max_nodes).collect();
    fitting.choose(rng).cloned()
}

/// Applies up to `steps` random non-Euler rewrites that keep the diagram
/// within `max_nodes`.
fn scramble(rng: &mut impl Rng, mut d: Diagram, steps: usize, max_nodes: usize) -> Diagram {
    let cfg = Config::default();
    for _ in 0..steps {
        let mut options: Vec<(RuleId, Vec<NodeId>)> = RuleId::ALL
            .iter()
            .filter(|r| !r.is_euler())
            .flat_map(|&r| match_sites(r, &d).into_iter().map(move |a| (r, a)))
            .collect();
        options.shuffle(rng);
        let params = Default::default();
        let next = options
            .into_iter()
            .filter_map(|(r, a)| apply_with(r, &d, &a, &params, &cfg).ok())
            .find(|e| e.node_count() <= max_nodes);
        match next {
            Some(e) => d = e,
            None => break,
        }
    }
    d
}

/// A random diagram with at most `max_nodes` nodes: a raw multigraph, a rule
/// left-hand side, or either after a few random rewrites.
pub fn random_diagram(rng: &mut impl Rng, max_nodes: usize) -> Diagram {
    let base = match rng.gen_range(0..3) {
        0 => random_instance(rng, max_nodes).unwrap_or_else(|| random_multigraph(rng, max_nodes)),
        _ => random_multigraph(rng, max_nodes),
    };
    if rng.gen_bool(0.4) {
        let steps = rng.gen_range(1..=3);
        scramble(rng, base, steps, max_nodes)
    } else {
        base
    }
}

/// `count` diagrams from `seed`, reproducible.
pub fn random_diagrams(seed: u64, count: usize, max_nodes: usize) -> Vec<Diagram> {
    let mut r = rng(seed);
    (0..count).map(|_| random_diagram(&mut r, max_nodes)).collect()
}

/// A labelled graph on `n` vertices with each edge present with probability 1/2.
pub fn random_graph(rng: &mut impl Rng, n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::with_indexed_vertices(n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.5) {
                let (a, b) = (g.vertices()[i].clone(), g.vertices()[j].clone());
                g.add_edge(&a, &b).expect("vertices exist");
            }
        }
    }
    g
}
