//! Complete bipartite red/green subdiagrams collapse to a single edge.

use super::{Derivation, ScriptBuilder};
use crate::diagram::{Colour, Diagram, NodeId, NodeKind};
use crate::error::{Error, Result};
use crate::phase::Phase;
use crate::rules::RuleId;

/// `K_{m,n}`: `m` red and `n` green phase-0 spiders, every red joined to
/// every green, each spider with one output. Reds are nodes `0..m`, greens
/// `m..m+n`; outputs follow in the same order.
pub fn complete_bipartite(m: usize, n: usize) -> Diagram {
    let mut d = Diagram::new();
    let reds: Vec<NodeId> = (0..m).map(|_| d.add_spider(Colour::X, Phase::ZERO)).collect();
    let greens: Vec<NodeId> = (0..n).map(|_| d.add_spider(Colour::Z, Phase::ZERO)).collect();
    for &v in reds.iter().chain(&greens) {
        let o = d.add_output();
        d.add_edge(v, o);
    }
    for &r in &reds {
        for &g in &greens {
            d.add_edge(r, g);
        }
    }
    d
}

/// The collapsed form of [`complete_bipartite`]: a green spider holding the
/// first `m` outputs joined to a red spider holding the last `n`.
pub fn p2_form(m: usize, n: usize) -> Diagram {
    let mut d = Diagram::new();
    let g = d.add_spider(Colour::Z, Phase::ZERO);
    let r = d.add_spider(Colour::X, Phase::ZERO);
    d.add_edge(g, r);
    for i in 0..m + n {
        let o = d.add_output();
        d.add_edge(if i < m { g } else { r }, o);
    }
    d
}

fn check_anchor(d: &Diagram, reds: &[NodeId], greens: &[NodeId]) -> Result<()> {
    let bad = |m: &str| Err(Error::BadAnchor(format!("not a complete bipartite subdiagram: {m}")));
    if reds.is_empty() || greens.is_empty() {
        return bad("empty side");
    }
    let all: Vec<NodeId> = reds.iter().chain(greens).copied().collect();
    let mut sorted = all.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != all.len() {
        return bad("repeated node");
    }
    for (side, colour, other) in [(reds, Colour::X, greens), (greens, Colour::Z, reds)] {
        for &v in side {
            match d.kind(v) {
                Some(k) if k == NodeKind::spider(colour, Phase::ZERO) => {}
                _ => return bad("wrong kind or phase"),
            }
            if d.self_loops(v) > 0 || side.iter().any(|&w| w != v && d.edge_count(v, w) > 0) {
                return bad("edge inside a side");
            }
            if other.iter().any(|&w| d.edge_count(v, w) != 1) {
                return bad("missing or parallel edge");
            }
            if d.degree(v) != other.len() + 1 {
                return bad("each spider needs exactly one further leg");
            }
        }
    }
    Ok(())
}

fn external(d: &Diagram, v: NodeId, side: &[NodeId]) -> NodeId {
    d.incidences(v).into_iter().find(|w| !side.contains(w)).expect("one external leg")
}

/// Returns `(green, red)`: the green spider now holding the reds' legs and
/// the red spider holding the greens' legs.
fn reduce(b: &mut ScriptBuilder, reds: &[NodeId], greens: &[NodeId]) -> Result<(NodeId, NodeId)> {
    let (m, n) = (reds.len(), greens.len());
    if m == 1 {
        let a = reds[0];
        let e = external(b.diagram(), a, greens);
        for &g in greens {
            b.step(RuleId::IdentityRemove, &[g])?;
        }
        let g = b.insert(a, e, Colour::Z)?;
        return Ok((g, a));
    }
    if n == 1 {
        let c = greens[0];
        let e = external(b.diagram(), c, reds);
        for &r in reds {
            b.step(RuleId::IdentityRemove, &[r])?;
        }
        let r = b.insert(c, e, Colour::X)?;
        return Ok((c, r));
    }
    if m == 2 && n == 2 {
        let mut at = vec![reds[0].min(reds[1]), reds[0].max(reds[1])];
        at.extend([greens[0].min(greens[1]), greens[0].max(greens[1])]);
        let new = b.step(RuleId::Bialgebra, &at)?;
        return Ok((new[0], new[1]));
    }
    if n >= 3 {
        // peel one green off: split every red, reduce K_{m,n-1}, then K_{m,2}
        let rest = &greens[1..];
        let split: Vec<NodeId> = reds.iter().map(|&a| b.split(a, rest, Phase::ZERO)).collect::<Result<_>>()?;
        let (g1, r1) = reduce(b, &split, rest)?;
        let (g2, r2) = reduce(b, reds, &[greens[0], g1])?;
        b.step(RuleId::SpiderFuse, &[r2, r1])?;
        Ok((g2, r2))
    } else {
        let rest = &reds[1..];
        let split: Vec<NodeId> = greens.iter().map(|&c| b.split(c, rest, Phase::ZERO)).collect::<Result<_>>()?;
        let (g1, r1) = reduce(b, rest, &split)?;
        let (g2, r2) = reduce(b, &[reds[0], r1], greens)?;
        b.step(RuleId::SpiderFuse, &[g2, g1])?;
        Ok((g2, r2))
    }
}

/// Collapses the complete bipartite subdiagram on `reds` and `greens` to one
/// green–red edge by induction on its size, emitting every step.
pub fn reduce_complete_bipartite(d: &Diagram, reds: &[NodeId], greens: &[NodeId]) -> Result<Derivation> {
    check_anchor(d, reds, greens)?;
    let name = format!("knm-{}x{}", reds.len(), greens.len());
    let mut b = ScriptBuilder::new(d, &name, "complete bipartite subdiagram to a single edge");
    reduce(&mut b, reds, greens)?;
    Ok(Derivation::from_builder(d, b))
}
