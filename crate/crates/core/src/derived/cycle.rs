//! Alternating even cycles unfold into a chain of hexagons.

use super::{Derivation, ScriptBuilder};
use crate::diagram::{Colour, Diagram, NodeId, NodeKind};
use crate::error::{Error, Result};
use crate::phase::Phase;
use crate::rules::RuleId;

/// `C_{2n}`: nodes `0..2n` alternate red (even) and green (odd), node `i`
/// joined to `i + 1 mod 2n`, each with one output.
pub fn even_cycle(n: usize) -> Diagram {
    let mut d = Diagram::new();
    let len = 2 * n;
    let cs: Vec<NodeId> =
        (0..len).map(|i| d.add_spider(if i % 2 == 0 { Colour::X } else { Colour::Z }, Phase::ZERO)).collect();
    for &c in &cs {
        let o = d.add_output();
        d.add_edge(c, o);
    }
    for i in 0..len {
        d.add_edge(cs[i], cs[(i + 1) % len]);
    }
    d
}

fn check_anchor(d: &Diagram, cycle: &[NodeId]) -> Result<()> {
    let bad = |m: &str| Err(Error::BadAnchor(format!("not an alternating even cycle: {m}")));
    let len = cycle.len();
    if len < 4 || len % 2 == 1 {
        return bad("length");
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != len {
        return bad("repeated node");
    }
    for (i, &c) in cycle.iter().enumerate() {
        let colour = if i % 2 == 0 { Colour::X } else { Colour::Z };
        if d.kind(c) != Some(NodeKind::spider(colour, Phase::ZERO)) {
            return bad("colours must alternate from red, all phases 0");
        }
        let next = cycle[(i + 1) % len];
        let inner = cycle.iter().filter(|&&w| d.edge_count(c, w) > 0).count();
        if d.edge_count(c, next) != 1 || d.degree(c) != 3 || inner != 2 || d.self_loops(c) > 0 {
            return bad("each node needs its two cycle edges and one further leg");
        }
    }
    Ok(())
}

fn unfold(b: &mut ScriptBuilder, cycle: &[NodeId]) -> Result<()> {
    let len = cycle.len();
    if len == 4 {
        let (x1, x2) = (cycle[0].min(cycle[2]), cycle[0].max(cycle[2]));
        let (z1, z2) = (cycle[1].min(cycle[3]), cycle[1].max(cycle[3]));
        b.step(RuleId::Bialgebra, &[x1, x2, z1, z2])?;
        return Ok(());
    }
    let (c0, c1, c2, last) = (cycle[0], cycle[1], cycle[2], cycle[len - 1]);
    let ext = |b: &ScriptBuilder, v: NodeId, left: NodeId, right: NodeId| {
        b.diagram().incidences(v).into_iter().find(|&w| w != left && w != right).expect("external leg")
    };
    let (e2, e_last) = (ext(b, c2, c1, cycle[3]), ext(b, last, cycle[len - 2], c0));
    // the cycle edge c0–c1 becomes a K_{2,2} with the colours swapped
    let new = b.step(RuleId::BialgebraInverse, &[c0, c1])?;
    let d = b.diagram();
    let red_on = |v: NodeId| new.iter().copied().find(|&w| d.edge_count(w, v) > 0 && d.kind(w).unwrap().colour() == Some(Colour::X));
    let green_on = |v: NodeId| new.iter().copied().find(|&w| d.edge_count(w, v) > 0 && d.kind(w).unwrap().colour() == Some(Colour::Z));
    let r_a = red_on(c2).expect("red on c2");
    let g_a = green_on(last).expect("green on the last node");
    let r_b = new.iter().copied().find(|&w| w != r_a && d.kind(w).unwrap().colour() == Some(Colour::X)).unwrap();
    let g_b = new.iter().copied().find(|&w| w != g_a && d.kind(w).unwrap().colour() == Some(Colour::Z)).unwrap();
    b.step(RuleId::SpiderFuse, &[c2, r_a])?;
    b.step(RuleId::SpiderFuse, &[last, g_a])?;
    b.split(c2, &[e2, g_b], Phase::ZERO)?;
    b.split(last, &[e_last, r_b], Phase::ZERO)?;
    unfold(b, &cycle[2..])
}

/// Rewrites the alternating cycle `cycle` (starting from a red node) into
/// the hexagon chain by repeated inverse bialgebra steps, finishing with one
/// bialgebra step on the last square.
pub fn reduce_even_cycle(d: &Diagram, cycle: &[NodeId]) -> Result<Derivation> {
    check_anchor(d, cycle)?;
    let name = format!("cycle-{}", cycle.len());
    let mut b = ScriptBuilder::new(d, &name, "alternating even cycle to a chain of hexagons");
    unfold(&mut b, cycle)?;
    Ok(Derivation::from_builder(d, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derived::{replay, ReplayOptions};

    fn spider_cycle_rank(d: &Diagram) -> usize {
        let spiders: Vec<NodeId> = d.nodes().filter(|(_, k)| k.is_spider()).map(|(v, _)| v).collect();
        let edges: usize = d.edges().iter().filter(|(a, b)| spiders.contains(a) && spiders.contains(b)).count();
        // the spider subgraph is connected
        edges + 1 - spiders.len()
    }

    #[test]
    fn cycles_become_hexagon_chains() {
        for n in 2..=4 {
            let d = even_cycle(n);
            let cycle: Vec<NodeId> = (0..2 * n as NodeId).collect();
            let r = reduce_even_cycle(&d, &cycle).unwrap();
            let end = replay(&r.script, &r.start, &ReplayOptions::default()).unwrap();
            assert_eq!(end, r.end);
            assert_eq!(end.nodes().filter(|(_, k)| k.is_spider()).count(), 4 * n - 6);
            assert_eq!(spider_cycle_rank(&end), n - 2);
            assert!(end.nodes().filter(|(_, k)| k.is_spider()).all(|(v, _)| end.degree(v) == 3));
        }
    }

    #[test]
    fn four_cycle_is_one_bialgebra() {
        let r = reduce_even_cycle(&even_cycle(2), &[0, 1, 2, 3]).unwrap();
        assert_eq!(r.script.len(), 1);
    }

    #[test]
    fn rejects_odd_or_broken_cycles() {
        let d = even_cycle(3);
        assert!(reduce_even_cycle(&d, &[0, 1, 2, 3]).is_err());
        assert!(reduce_even_cycle(&d, &[1, 2, 3, 4, 5, 0]).is_err());
    }
}
