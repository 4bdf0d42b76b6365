//! The fixpoint property of star graph states, by induction on the star.

use super::{Derivation, ProofScript, ScriptBuilder};
use crate::diagram::NodeId;
use crate::error::Result;
use crate::graphstate::{fixpoint_lhs, SimpleGraph};
use crate::phase::Phase;
use crate::rules::RuleId;

/// Pushes the red π on `xc` through the centre `c` and out along each
/// `(h, leaf)` pair, where the green π already sits on the leaf.
fn push(b: &mut ScriptBuilder, xc: NodeId, c: NodeId, leaves: &[(NodeId, NodeId)]) -> Result<()> {
    let Some((&(h1, l1), rest)) = leaves.split_first() else {
        b.step(RuleId::PiState, &[xc, c])?;
        return Ok(());
    };
    let c2 = if rest.is_empty() {
        None
    } else {
        let moved: Vec<NodeId> = rest.iter().map(|&(h, _)| h).collect();
        Some(b.split(c, &moved, Phase::ZERO)?)
    };
    let pis = b.step(RuleId::PiCommute, &[xc, c])?;
    let d = b.diagram();
    let on = |v: NodeId| pis.iter().copied().find(|&p| d.edge_count(p, v) > 0).expect("π on each leg");
    let x1 = on(h1);
    let next = c2.map(on);
    b.step(RuleId::HPhaseSlide, &[x1, h1])?;
    b.step(RuleId::SpiderFuse, &[l1, x1])?;
    if let (Some(c2), Some(x2)) = (c2, next) {
        push(b, x2, c2, rest)?;
        b.step(RuleId::SpiderFuse, &[c, c2])?;
    }
    Ok(())
}

/// Rewrites the star on `n` vertices, with red π on the centre and green π
/// on every leaf, back to the plain star graph state.
pub fn fixpoint_derivation(n: usize) -> Result<Derivation> {
    let g = SimpleGraph::star(n.max(1));
    let start = fixpoint_lhs(&g, "c")?;
    let n = g.vertices().len();
    let mut b = ScriptBuilder::new(&start, &format!("fixpoint-s{n}"), "fixpoint property of the star graph state");
    // graph_state ids: vertex i is node i, its output n + i, H-boxes from 2n
    // in edge order; the rotations follow, centre first
    let rot = |i: usize| (3 * n - 1 + i) as NodeId;
    let leaves: Vec<(NodeId, NodeId)> = (1..n).map(|i| ((2 * n + i - 1) as NodeId, i as NodeId)).collect();
    for i in 1..n {
        b.step(RuleId::SpiderFuse, &[i as NodeId, rot(i)])?;
    }
    push(&mut b, rot(0), 0, &leaves)?;
    Ok(Derivation::from_builder(&start, b))
}

pub fn fixpoint_script(n: usize) -> Result<ProofScript> {
    Ok(fixpoint_derivation(n)?.script)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derived::{replay, ReplayOptions};
    use crate::graphstate::graph_state;
    use crate::iso::iso_equal;

    #[test]
    fn stars_reach_their_graph_state() {
        for n in 1..=6 {
            let r = fixpoint_derivation(n).unwrap();
            let end = replay(&r.script, &r.start, &ReplayOptions::default()).unwrap();
            assert!(iso_equal(&end, &graph_state(&SimpleGraph::star(n))), "n = {n}");
        }
    }

    #[test]
    fn single_vertex_is_one_step() {
        let s = fixpoint_script(1).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.steps[0].rule, crate::derived::StepRule::Rule(RuleId::PiState));
    }
}
