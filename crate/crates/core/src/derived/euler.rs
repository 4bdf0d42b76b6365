//! Derivations around the Euler decomposition of the Hadamard box.

use super::{strip_scalar_components, Derivation, Hypothesis, ProofScript, ReplayOptions, ScriptBuilder};
use crate::diagram::{generator, Colour, Diagram, GeneratorId, NodeId, NodeKind};
use crate::error::{Error, Result};
use crate::graphstate::{graph_state, vdn_lhs, SimpleGraph};
use crate::iso::iso_equal;
use crate::phase::Phase;
use crate::rules::{normalize, Config, RuleId};

/// Three spiders of phase -π/2 in series, coloured `outer`, other, `outer`.
pub fn euler_chain(outer: Colour) -> Diagram {
    let mut d = Diagram::new();
    let i = d.add_input();
    let o = d.add_output();
    let a = d.add_spider(outer, Phase::MINUS_HALF_PI);
    let m = d.add_spider(outer.other(), Phase::MINUS_HALF_PI);
    let c = d.add_spider(outer, Phase::MINUS_HALF_PI);
    for (x, y) in [(i, a), (a, m), (m, c), (c, o)] {
        d.add_edge(x, y);
    }
    d
}

fn gate(cfg: &Config, what: &str) -> Result<()> {
    if cfg.euler_axiom {
        Ok(())
    } else {
        Err(Error::EulerGated(what.to_string()))
    }
}

fn hbox() -> Diagram {
    generator(GeneratorId::H, None).expect("H generator")
}

/// H written with the colours of the Euler axiom swapped.
pub fn euler_nonuniqueness_script() -> Result<Derivation> {
    let start = hbox();
    let (input, h) = (start.inputs()[0], 2);
    let mut b = ScriptBuilder::new(&start, "euler-nonunique", "the H decomposition with the colours swapped");
    let w = b.insert(input, h, Colour::X)?;
    let w2 = b.split(w, &[h], Phase::HALF_PI)?;
    b.step(RuleId::HPhaseSlide, &[w2, h])?;
    let zs = b.step(RuleId::EulerH, &[h])?;
    let z2 = zs[2];
    b.step(RuleId::SpiderFuse, &[z2, w2])?;
    b.step(RuleId::IdentityRemove, &[z2])?;
    Ok(Derivation::from_builder(&start, b))
}

/// Replays the colour-swapped decomposition and checks its end state.
pub fn euler_nonuniqueness_check(cfg: &Config) -> Result<bool> {
    gate(cfg, "euler-nonunique")?;
    let r = euler_nonuniqueness_script()?;
    let end = super::replay(&r.script, &r.start, &ReplayOptions { config: *cfg, ..ReplayOptions::default() })?;
    Ok(iso_equal(&end, &euler_chain(Colour::X)))
}

/// Red spider `r` with green -π/2 state `g` attached: rewrite until `r`
/// carries red π/2 and the rest is a disconnected scalar.
fn absorb_green_state(b: &mut ScriptBuilder, r: NodeId, g: NodeId) -> Result<()> {
    let h = b.step(RuleId::HColour, &[g])?[0];
    let g2 = b.split(g, &[h], Phase::HALF_PI)?;
    b.step(RuleId::HPhaseSlide, &[g2, h])?;
    let zs = b.step(RuleId::EulerH, &[h])?;
    let (z1, x, z2) = (zs[0], zs[1], zs[2]);
    // z1 sits on the lower id, which is g
    b.step(RuleId::SpiderFuse, &[g2, z2])?;
    b.step(RuleId::IdentityRemove, &[g2])?;
    b.step(RuleId::SpiderFuse, &[r, x])?;
    b.split(z1, &[], Phase::MINUS_HALF_PI)?;
    let p = b.split(g, &[z1], Phase::PI)?;
    let pis = b.step(RuleId::PiCommute, &[p, z1])?;
    let d = b.diagram();
    let pr = pis.iter().copied().find(|&q| d.edge_count(q, r) > 0).expect("π on the r leg");
    let copies = b.step(RuleId::Copy, &[g, z1])?;
    let d = b.diagram();
    let c1 = copies.iter().copied().find(|&c| d.edge_count(c, pr) > 0).expect("copy on the r leg");
    b.step(RuleId::SpiderFuse, &[pr, c1])?;
    b.step(RuleId::SpiderFuse, &[r, pr])?;
    Ok(())
}

/// A red phase-0 wire with a green -π/2 state plugged into it.
pub fn pi2_colour_start() -> Diagram {
    let mut d = Diagram::new();
    let i = d.add_input();
    let o = d.add_output();
    let r = d.add_spider(Colour::X, Phase::ZERO);
    let g = d.add_spider(Colour::Z, Phase::MINUS_HALF_PI);
    d.add_edge(i, r);
    d.add_edge(r, o);
    d.add_edge(r, g);
    d
}

/// Red π/2 expressed through green -π/2.
pub fn pi2_colour_script() -> Result<Derivation> {
    let start = pi2_colour_start();
    let mut b = ScriptBuilder::new(&start, "pi2-colour", "a π/2 rotation in terms of the other colour");
    absorb_green_state(&mut b, 2, 3)?;
    Ok(Derivation::from_builder(&start, b))
}

pub fn pi2_colour_change_check(cfg: &Config) -> Result<bool> {
    gate(cfg, "pi2-colour")?;
    let r = pi2_colour_script()?;
    let end = super::replay(&r.script, &r.start, &ReplayOptions { config: *cfg, ..ReplayOptions::default() })?;
    let target = generator(GeneratorId::PX, Some(Phase::HALF_PI))?;
    Ok(iso_equal(&strip_scalar_components(&end), &target))
}

fn triangle() -> SimpleGraph {
    let mut g = SimpleGraph::new(["u", "a", "b"]);
    for (x, y) in [("u", "a"), ("u", "b"), ("a", "b")] {
        g.add_edge(x, y).expect("vertices exist");
    }
    g
}

/// The triangle graph state as the path `a - u - b` under the local
/// rotations at `u`, spider-fused.
pub fn triangle_lc_target() -> Result<Diagram> {
    let mut p = SimpleGraph::new(["u", "a", "b"]);
    p.add_edge("u", "a")?;
    p.add_edge("u", "b")?;
    Ok(normalize(&vdn_lhs(&p, "u")?))
}

/// The triangle graph state rewritten to the path graph state with local
/// rotations, using the Euler decomposition.
pub fn triangle_lc_script() -> Result<Derivation> {
    let start = graph_state(&triangle());
    // vertices u, a, b are 0, 1, 2; H-boxes ua, ub, ab are 6, 7, 8
    let (u, a, bb, hab) = (0, 1, 2, 8);
    let (oa, ob) = (start.outputs()[1], start.outputs()[2]);
    let mut b = ScriptBuilder::new(&start, "triangle", "local complementation of the triangle from the Euler rule");
    let zs = b.step(RuleId::EulerH, &[hab])?;
    let x = zs[1];
    b.step(RuleId::SpiderFuse, &[a, zs[0]])?;
    b.step(RuleId::SpiderFuse, &[bb, zs[2]])?;
    b.step(RuleId::HColour, &[u])?;
    b.split(a, &[oa], Phase::MINUS_HALF_PI)?;
    b.split(bb, &[ob], Phase::MINUS_HALF_PI)?;
    let xs = b.split(x, &[], Phase::MINUS_HALF_PI)?;
    let gr = b.step(RuleId::Bialgebra, &[u, x, a, bb])?;
    let (g, r) = (gr[0], gr[1]);
    b.step(RuleId::HColour, &[r])?;
    b.step(RuleId::HColour, &[g])?;
    b.step(RuleId::HColour, &[xs])?;
    absorb_green_state(&mut b, g, xs)?;
    Ok(Derivation::from_builder(&start, b))
}

/// Three same-coloured phase-0 spiders around `h` with its two far ends:
/// unfolds `h` into a triangle `[u, a, b]` through a copied state and
/// returns those three nodes. `h` sits between `a` and `b`.
fn unfold_triangle(b: &mut ScriptBuilder, h: NodeId, colour: Colour) -> Result<[NodeId; 3]> {
    let ends: Vec<NodeId> = b.diagram().incidences(h);
    let a = b.insert(ends[0], h, colour)?;
    let bb = b.insert(h, ends[1], colour)?;
    let ga = b.split(a, &[], Phase::ZERO)?;
    let gb = b.split(bb, &[], Phase::ZERO)?;
    let ra = b.step(RuleId::HStateInverse, &[ga])?[1];
    let rb = b.step(RuleId::HStateInverse, &[gb])?[1];
    let u = b.step(RuleId::CopyInverse, &[ra.min(rb), ra.max(rb)])?[0];
    Ok([u, a, bb])
}

/// The nodes the triangle hypothesis inserts, in creation order, on the
/// legs of `u`, `a` and `b`.
fn lc_triangle(b: &mut ScriptBuilder, t: [NodeId; 3]) -> Result<[NodeId; 3]> {
    let new = b.hypothesis(Hypothesis::LcTriangle, &t)?;
    Ok([new[0], new[1], new[2]])
}

fn neighbour_of(b: &ScriptBuilder, v: NodeId, pred: impl Fn(NodeId, NodeKind) -> bool) -> NodeId {
    let d = b.diagram();
    d.incidences(v).into_iter().find(|&w| pred(w, d.kind(w).unwrap())).expect("neighbour exists")
}

/// H decomposed into green -π/2, red -π/2, green -π/2 from the triangle
/// local complementation equation, assumed as a hypothesis.
pub fn lc_implies_euler() -> Result<Derivation> {
    let start = hbox();
    let h = 2;
    let mut b = ScriptBuilder::new(&start, "lc-implies-euler", "the H decomposition from local complementation");
    let [u, a, bb] = unfold_triangle(&mut b, h, Colour::Z)?;
    let r = neighbour_of(&b, u, |_, k| k.colour() == Some(Colour::X));
    let [xu, za, zb] = lc_triangle(&mut b, [u, a, bb])?;
    b.step(RuleId::SpiderFuse, &[xu, r])?;
    b.step(RuleId::SpiderFuse, &[a, za])?;
    b.step(RuleId::SpiderFuse, &[bb, zb])?;
    let h3 = b.step(RuleId::HColour, &[u])?[0];

    // u (red) - h3 - xu (red π/2): the same unfolding with colours swapped
    let [u2, a2, b2] = unfold_triangle(&mut b, h3, Colour::X)?;
    let zg = neighbour_of(&b, u2, |_, k| k.colour() == Some(Colour::Z));
    let [zu, xa, xb] = lc_triangle(&mut b, [u2, a2, b2])?;
    b.step(RuleId::SpiderFuse, &[zu, zg])?;
    b.step(RuleId::HColour, &[u2])?;
    b.step(RuleId::HColour, &[zu])?;
    b.step(RuleId::SpiderFuse, &[b2, xb])?;
    b.step(RuleId::SpiderFuse, &[b2, xu])?;
    let copies = b.step(RuleId::Copy, &[b2, u2])?;
    let d = b.diagram();
    let c1 = copies.iter().copied().find(|&c| d.edge_count(c, a2) > 0).expect("copy on a2");
    let c2 = copies.iter().copied().find(|&c| d.edge_count(c, zu) > 0).expect("copy on zu");
    b.step(RuleId::SpiderFuse, &[a2, c1])?;
    b.step(RuleId::SpiderFuse, &[u, xa])?;
    b.step(RuleId::SpiderFuse, &[u, a2])?;
    b.step(RuleId::SpiderFuse, &[zu, c2])?;
    Ok(Derivation::from_builder(&start, b))
}

pub fn derive_euler_from_lc_script() -> Result<ProofScript> {
    Ok(lc_implies_euler()?.script)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derived::{apply_step, replay, Step, StepRule};
    use crate::semantics::{evaluate, scalar_fit, ModelN, TOL};

    fn permissive() -> ReplayOptions {
        ReplayOptions::permissive()
    }

    #[test]
    fn swapped_colours_decompose_h() {
        assert!(euler_nonuniqueness_check(&Config::with_euler()).unwrap());
    }

    #[test]
    fn checks_are_gated() {
        assert!(matches!(euler_nonuniqueness_check(&Config::default()), Err(Error::EulerGated(_))));
        assert!(matches!(pi2_colour_change_check(&Config::default()), Err(Error::EulerGated(_))));
    }

    #[test]
    fn pi2_changes_colour() {
        assert!(pi2_colour_change_check(&Config::with_euler()).unwrap());
    }

    #[test]
    fn triangle_complements_via_euler() {
        let r = triangle_lc_script().unwrap();
        let end = replay(&r.script, &r.start, &permissive()).unwrap();
        assert!(iso_equal(&strip_scalar_components(&end), &triangle_lc_target().unwrap()));
    }

    #[test]
    fn local_complementation_gives_euler() {
        let r = lc_implies_euler().unwrap();
        let end = replay(&r.script, &r.start, &permissive()).unwrap();
        assert!(iso_equal(&strip_scalar_components(&end), &euler_chain(Colour::Z)));
    }

    #[test]
    fn hypothesis_step_fails_at_n2() {
        let r = lc_implies_euler().unwrap();
        let i = r.script.steps.iter().position(|s| matches!(s.rule, StepRule::Hypothesis(_))).unwrap();
        let mut d = r.start.clone();
        for s in &r.script.steps[..i] {
            d = apply_step(&d, s, &permissive()).unwrap();
        }
        let step: &Step = &r.script.steps[i];
        let after = apply_step(&d, step, &permissive()).unwrap();
        let fit = |n| scalar_fit(&evaluate(&d, ModelN(n)).unwrap(), &evaluate(&after, ModelN(n)).unwrap(), TOL).unwrap();
        assert!(fit(1).equal);
        assert!(!fit(2).equal);
    }
}
