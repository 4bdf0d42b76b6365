//! Small diagrams containing each rule's left-hand side, used to check the
//! rules against the semantics.

use super::{Params, RuleId};
use crate::diagram::{Colour, Diagram, NodeId, NodeKind};
use crate::phase::Phase;

/// Phases used for rules with a free angle: the Clifford quarter turns plus
/// two non-Clifford values.
pub const PHASE_GRID: [Phase; 6] = [
    Phase::ZERO,
    Phase::HALF_PI,
    Phase::PI,
    Phase::MINUS_HALF_PI,
    Phase::new_const(1, 3),
    Phase::new_const(2, 5),
];

/// A diagram and the parameter sets to try at each of its sites.
#[derive(Clone, Debug)]
pub struct Instance {
    pub diagram: Diagram,
    pub params: Vec<Params>,
}

fn inp(d: &mut Diagram, v: NodeId) {
    let b = d.add_input();
    d.add_edge(b, v);
}

fn out(d: &mut Diagram, v: NodeId) {
    let b = d.add_output();
    d.add_edge(v, b);
}

fn plain(diagram: Diagram) -> Instance {
    Instance { diagram, params: vec![Params::default()] }
}

const COLOURS: [Colour; 2] = [Colour::Z, Colour::X];

/// Instances of `rule`'s left-hand side, in both colourings where the rule
/// has two, over the phase grid where it has a free angle.
pub fn instances(rule: RuleId) -> Vec<Instance> {
    let mut v = Vec::new();
    match rule {
        RuleId::SpiderFuse => {
            for c in COLOURS {
                for a in PHASE_GRID {
                    for b in PHASE_GRID {
                        let mut d = Diagram::new();
                        let s = d.add_spider(c, a);
                        let t = d.add_spider(c, b);
                        inp(&mut d, s);
                        out(&mut d, s);
                        d.add_edge(s, t);
                        out(&mut d, t);
                        out(&mut d, t);
                        v.push(plain(d));
                    }
                    let mut d = Diagram::new();
                    let s = d.add_spider(c, a);
                    let t = d.add_spider(c, Phase::HALF_PI);
                    let h = d.add_node(NodeKind::HBox);
                    inp(&mut d, s);
                    d.add_edge(s, t);
                    d.add_edge(s, t);
                    d.add_edge(t, h);
                    out(&mut d, h);
                    v.push(plain(d));
                }
            }
        }
        RuleId::SpiderSplit => {
            for c in COLOURS {
                for a in PHASE_GRID {
                    let mut d = Diagram::new();
                    let s = d.add_spider(c, a);
                    let h = d.add_node(NodeKind::HBox);
                    inp(&mut d, s);
                    out(&mut d, s);
                    out(&mut d, s);
                    d.add_edge(s, h);
                    out(&mut d, h);
                    let params = PHASE_GRID.iter().map(|&p| Params { phase: Some(p), colour: None }).collect();
                    v.push(Instance { diagram: d, params });
                }
            }
        }
        RuleId::IdentityRemove => {
            for c in COLOURS {
                let mut d = Diagram::new();
                let s = d.add_spider(c, Phase::ZERO);
                inp(&mut d, s);
                out(&mut d, s);
                v.push(plain(d));
                for a in PHASE_GRID {
                    let mut d = Diagram::new();
                    let l = d.add_spider(c.other(), a);
                    let s = d.add_spider(c, Phase::ZERO);
                    let h = d.add_node(NodeKind::HBox);
                    inp(&mut d, l);
                    out(&mut d, l);
                    d.add_edge(l, s);
                    d.add_edge(s, h);
                    out(&mut d, h);
                    v.push(plain(d));
                }
            }
        }
        RuleId::IdentityInsert => {
            for c in COLOURS {
                for a in PHASE_GRID {
                    let mut d = Diagram::new();
                    let s = d.add_spider(c, a);
                    let h = d.add_node(NodeKind::HBox);
                    inp(&mut d, s);
                    d.add_edge(s, h);
                    out(&mut d, h);
                    let params =
                        COLOURS.iter().map(|&k| Params { phase: None, colour: Some(k) }).collect();
                    v.push(Instance { diagram: d, params });
                }
            }
        }
        RuleId::SelfLoopDrop => {
            for c in COLOURS {
                for a in PHASE_GRID {
                    let mut d = Diagram::new();
                    let s = d.add_spider(c, a);
                    d.add_edge(s, s);
                    inp(&mut d, s);
                    out(&mut d, s);
                    v.push(plain(d));
                    let mut d = Diagram::new();
                    let s = d.add_spider(c, a);
                    d.add_edge(s, s);
                    d.add_edge(s, s);
                    out(&mut d, s);
                    v.push(plain(d));
                }
            }
        }
        RuleId::Copy => {
            for c in COLOURS {
                for legs in 1..=3 {
                    let mut d = Diagram::new();
                    let s = d.add_spider(c, Phase::ZERO);
                    let t = d.add_spider(c.other(), Phase::ZERO);
                    d.add_edge(s, t);
                    for _ in 0..legs {
                        out(&mut d, t);
                    }
                    v.push(plain(d));
                }
            }
        }
        RuleId::CopyInverse => {
            for c in COLOURS {
                let mut d = Diagram::new();
                for _ in 0..3 {
                    let s = d.add_spider(c, Phase::ZERO);
                    out(&mut d, s);
                }
                let w = d.add_spider(c.other(), Phase::HALF_PI);
                let s = d.add_spider(c, Phase::ZERO);
                d.add_edge(s, w);
                inp(&mut d, w);
                out(&mut d, w);
                v.push(plain(d));
            }
        }
        RuleId::Bialgebra => {
            let mut d = Diagram::new();
            let xs = [d.add_spider(Colour::X, Phase::ZERO), d.add_spider(Colour::X, Phase::ZERO)];
            let zs = [d.add_spider(Colour::Z, Phase::ZERO), d.add_spider(Colour::Z, Phase::ZERO)];
            for &x in &xs {
                inp(&mut d, x);
                for &z in &zs {
                    d.add_edge(x, z);
                }
            }
            for &z in &zs {
                out(&mut d, z);
            }
            v.push(plain(d));
            // the other colouring: greens on the inputs
            let mut d = Diagram::new();
            let zs = [d.add_spider(Colour::Z, Phase::ZERO), d.add_spider(Colour::Z, Phase::ZERO)];
            let xs = [d.add_spider(Colour::X, Phase::ZERO), d.add_spider(Colour::X, Phase::ZERO)];
            for &z in &zs {
                inp(&mut d, z);
                for &x in &xs {
                    d.add_edge(z, x);
                }
            }
            for &x in &xs {
                out(&mut d, x);
            }
            v.push(plain(d));
        }
        RuleId::BialgebraInverse => {
            for c in COLOURS {
                let mut d = Diagram::new();
                let a = d.add_spider(c, Phase::ZERO);
                let b = d.add_spider(c.other(), Phase::ZERO);
                inp(&mut d, a);
                inp(&mut d, a);
                d.add_edge(a, b);
                out(&mut d, b);
                out(&mut d, b);
                v.push(plain(d));
            }
        }
        RuleId::PiCommute => {
            for c in COLOURS {
                for px in [Phase::ZERO, Phase::PI] {
                    for legs in 1..=3 {
                        let mut d = Diagram::new();
                        let p = d.add_spider(c, Phase::PI);
                        let x = d.add_spider(c.other(), px);
                        inp(&mut d, p);
                        d.add_edge(p, x);
                        for _ in 0..legs {
                            out(&mut d, x);
                        }
                        v.push(plain(d));
                    }
                }
            }
        }
        RuleId::PiState => {
            for c in COLOURS {
                let mut d = Diagram::new();
                let x = d.add_spider(c.other(), Phase::ZERO);
                let p = d.add_spider(c, Phase::PI);
                d.add_edge(x, p);
                out(&mut d, p);
                v.push(plain(d));
            }
        }
        RuleId::Hopf => {
            for a in PHASE_GRID {
                for b in [Phase::ZERO, Phase::new(1, 3)] {
                    let mut d = Diagram::new();
                    let z = d.add_spider(Colour::Z, a);
                    let x = d.add_spider(Colour::X, b);
                    inp(&mut d, z);
                    d.add_edge(z, x);
                    d.add_edge(z, x);
                    out(&mut d, x);
                    v.push(plain(d));
                }
            }
        }
        RuleId::HCancel => {
            let mut d = Diagram::new();
            let h1 = d.add_node(NodeKind::HBox);
            let h2 = d.add_node(NodeKind::HBox);
            inp(&mut d, h1);
            d.add_edge(h1, h2);
            out(&mut d, h2);
            v.push(plain(d));
            let mut d = Diagram::new();
            let s = d.add_spider(Colour::Z, Phase::HALF_PI);
            let h1 = d.add_node(NodeKind::HBox);
            let h2 = d.add_node(NodeKind::HBox);
            inp(&mut d, s);
            d.add_edge(s, h1);
            d.add_edge(h1, h2);
            d.add_edge(h2, s);
            out(&mut d, s);
            v.push(plain(d));
        }
        RuleId::HColour => {
            for c in COLOURS {
                for a in PHASE_GRID {
                    let mut d = Diagram::new();
                    let s = d.add_spider(c, a);
                    let h = d.add_node(NodeKind::HBox);
                    let t = d.add_spider(c, Phase::ZERO);
                    inp(&mut d, s);
                    out(&mut d, s);
                    d.add_edge(s, h);
                    d.add_edge(h, t);
                    out(&mut d, t);
                    d.add_edge(s, t);
                    d.add_edge(s, s);
                    v.push(plain(d));
                }
            }
        }
        RuleId::HPhaseSlide => {
            for c in COLOURS {
                for a in PHASE_GRID {
                    let mut d = Diagram::new();
                    let x = d.add_spider(c, a);
                    let h = d.add_node(NodeKind::HBox);
                    inp(&mut d, x);
                    d.add_edge(x, h);
                    out(&mut d, h);
                    v.push(plain(d));
                }
            }
        }
        RuleId::HState => {
            for c in COLOURS {
                let mut d = Diagram::new();
                let s = d.add_spider(c, Phase::ZERO);
                let h = d.add_node(NodeKind::HBox);
                d.add_edge(s, h);
                out(&mut d, h);
                v.push(plain(d));
            }
        }
        RuleId::HStateInverse => {
            for c in COLOURS {
                let mut d = Diagram::new();
                let s = d.add_spider(c, Phase::ZERO);
                out(&mut d, s);
                v.push(plain(d));
            }
        }
        RuleId::EulerH => {
            let mut d = Diagram::new();
            let h = d.add_node(NodeKind::HBox);
            inp(&mut d, h);
            out(&mut d, h);
            v.push(plain(d));
        }
        RuleId::EulerHInverse => {
            let mut d = Diagram::new();
            let m = Phase::MINUS_HALF_PI;
            let z1 = d.add_spider(Colour::Z, m);
            let x = d.add_spider(Colour::X, m);
            let z2 = d.add_spider(Colour::Z, m);
            inp(&mut d, z1);
            d.add_edge(z1, x);
            d.add_edge(x, z2);
            out(&mut d, z2);
            v.push(plain(d));
        }
    }
    v
}
