//! Anchored rewrite rules.
//!
//! Every rule is a pair of a site predicate and a rewrite. `match_sites`
//! enumerates candidate anchors and keeps those the predicate accepts, so any
//! anchor it returns is accepted by `apply`. New nodes always receive fresh
//! ids, allocated in a fixed order documented per rule.

mod catalogue;
mod normalize;

use std::fmt;
use std::str::FromStr;

use crate::diagram::{Colour, Diagram, NodeId, NodeKind};
use crate::error::{Error, Result};
use crate::phase::Phase;

pub use catalogue::{instances, Instance, PHASE_GRID};
pub use normalize::{is_bipartite_form, normalize, normalize_trace};

/// Ordered list of node ids locating one occurrence of a rule's left-hand side.
pub type Anchor = Vec<NodeId>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    /// `[u, v]`: fuse same-colour neighbours; `u` survives with the summed phase.
    SpiderFuse,
    /// `[v, n1, ..]`: move one edge to each `ni` onto a new spider joined to `v`.
    SpiderSplit,
    /// `[v]`: drop a phase-0 degree-2 spider and join its neighbours.
    IdentityRemove,
    /// `[a, b]`: put a phase-0 spider on one `a`–`b` edge.
    IdentityInsert,
    /// `[v]`: delete one self-loop of a spider.
    SelfLoopDrop,
    /// `[s, d]`: a phase-0 state `s` is copied through the opposite-colour spider `d`.
    Copy,
    /// `[s1, ..]`: merge phase-0 states of one colour into a copy of a single state.
    CopyInverse,
    /// `[x1, x2, z1, z2]`: the 2×2 complete bipartite pattern becomes a path.
    Bialgebra,
    /// `[x, z]`: a red–green path of degree-3 spiders becomes the 2×2 pattern.
    BialgebraInverse,
    /// `[p, x]`: a π spider passes through an opposite-colour spider.
    PiCommute,
    /// `[p, x]`: a π spider is absorbed by an opposite-colour phase-0 state.
    PiState,
    /// `[z, x]`: two parallel edges between opposite colours disappear.
    Hopf,
    /// `[h1, h2]`: two adjacent H-boxes cancel.
    HCancel,
    /// `[v]`: flip the colour of `v` and toggle an H-box on each incident edge.
    HColour,
    /// `[x, h]`: a degree-2 spider moves across an H-box, changing colour.
    HPhaseSlide,
    /// `[s, h]`: a phase-0 state behind an H-box becomes the other colour's state.
    HState,
    /// `[s]`: a phase-0 state becomes an H-box followed by the other colour's state.
    HStateInverse,
    /// `[h]`: an H-box becomes the chain Z(-π/2) X(-π/2) Z(-π/2).
    EulerH,
    /// `[z1, x, z2]`: the chain Z(-π/2) X(-π/2) Z(-π/2) becomes an H-box.
    EulerHInverse,
}

impl RuleId {
    pub const ALL: [RuleId; 19] = [
        RuleId::SpiderFuse,
        RuleId::SpiderSplit,
        RuleId::IdentityRemove,
        RuleId::IdentityInsert,
        RuleId::SelfLoopDrop,
        RuleId::Copy,
        RuleId::CopyInverse,
        RuleId::Bialgebra,
        RuleId::BialgebraInverse,
        RuleId::PiCommute,
        RuleId::PiState,
        RuleId::Hopf,
        RuleId::HCancel,
        RuleId::HColour,
        RuleId::HPhaseSlide,
        RuleId::HState,
        RuleId::HStateInverse,
        RuleId::EulerH,
        RuleId::EulerHInverse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RuleId::SpiderFuse => "spider-fuse",
            RuleId::SpiderSplit => "spider-split",
            RuleId::IdentityRemove => "id-remove",
            RuleId::IdentityInsert => "id-insert",
            RuleId::SelfLoopDrop => "self-loop",
            RuleId::Copy => "copy",
            RuleId::CopyInverse => "copy-inv",
            RuleId::Bialgebra => "bialgebra",
            RuleId::BialgebraInverse => "bialgebra-inv",
            RuleId::PiCommute => "pi-commute",
            RuleId::PiState => "pi-state",
            RuleId::Hopf => "hopf",
            RuleId::HCancel => "h-cancel",
            RuleId::HColour => "h-colour",
            RuleId::HPhaseSlide => "h-phase",
            RuleId::HState => "h-state",
            RuleId::HStateInverse => "h-state-inv",
            RuleId::EulerH => "euler",
            RuleId::EulerHInverse => "euler-inv",
        }
    }

    pub fn is_euler(self) -> bool {
        matches!(self, RuleId::EulerH | RuleId::EulerHInverse)
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RuleId {
    type Err = Error;
    fn from_str(s: &str) -> Result<RuleId> {
        RuleId::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::UnknownRule(s.to_string()))
    }
}

/// Optional step parameters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Params {
    /// SpiderSplit: phase given to the new spider (the anchor keeps the rest).
    pub phase: Option<Phase>,
    /// IdentityInsert: colour of the inserted spider (default Z).
    pub colour: Option<Colour>,
}

/// Rewriting configuration.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Config {
    /// Enables `EulerH` and `EulerHInverse`.
    pub euler_axiom: bool,
}

impl Config {
    pub fn with_euler() -> Config {
        Config { euler_axiom: true }
    }
}

fn spider(d: &Diagram, v: NodeId) -> Option<(Colour, Phase)> {
    let k = d.kind(v)?;
    Some((k.colour()?, k.phase()?))
}

fn is_h(d: &Diagram, v: NodeId) -> bool {
    d.kind(v) == Some(NodeKind::HBox)
}

/// The neighbour of a degree-2 node other than one copy of `via`.
fn far_end(d: &Diagram, v: NodeId, via: NodeId) -> Option<NodeId> {
    let mut inc = d.incidences(v);
    let i = inc.iter().position(|&u| u == via)?;
    inc.remove(i);
    (inc.len() == 1).then(|| inc[0])
}

fn minus_one(mut inc: Vec<NodeId>, x: NodeId) -> Vec<NodeId> {
    if let Some(i) = inc.iter().position(|&u| u == x) {
        inc.remove(i);
    }
    inc
}

/// True iff `at` is a valid site of `rule` in `d`.
pub fn matches(rule: RuleId, d: &Diagram, at: &[NodeId]) -> bool {
    if at.iter().any(|&v| !d.contains(v)) {
        return false;
    }
    match rule {
        RuleId::SpiderFuse => match *at {
            [u, v] if u != v => match (spider(d, u), spider(d, v)) {
                (Some((cu, _)), Some((cv, _))) => cu == cv && d.edge_count(u, v) > 0,
                _ => false,
            },
            _ => false,
        },
        RuleId::SpiderSplit => {
            let Some((&v, rest)) = at.split_first() else { return false };
            if spider(d, v).is_none() {
                return false;
            }
            let mut inc = d.incidences(v);
            rest.iter().all(|&n| match inc.iter().position(|&u| u == n) {
                Some(i) => {
                    inc.remove(i);
                    true
                }
                None => false,
            })
        }
        RuleId::IdentityRemove => match *at {
            [v] => match spider(d, v) {
                Some((_, p)) if p.is_zero() && d.self_loops(v) == 0 && d.degree(v) == 2 => {
                    let inc = d.incidences(v);
                    !(inc[0] == inc[1] && is_h(d, inc[0]))
                }
                _ => false,
            },
            _ => false,
        },
        RuleId::IdentityInsert => match *at {
            [a, b] => d.edge_count(a, b) > 0,
            _ => false,
        },
        RuleId::SelfLoopDrop => match *at {
            [v] => spider(d, v).is_some() && d.self_loops(v) > 0,
            _ => false,
        },
        RuleId::Copy => match *at {
            [s, t] if s != t => match (spider(d, s), spider(d, t)) {
                (Some((cs, ps)), Some((ct, pt))) => {
                    cs != ct
                        && ps.is_zero()
                        && pt.is_zero()
                        && d.degree(s) == 1
                        && d.edge_count(s, t) == 1
                        && d.self_loops(t) == 0
                }
                _ => false,
            },
            _ => false,
        },
        RuleId::CopyInverse => {
            if at.is_empty() || at.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            let Some((c0, _)) = spider(d, at[0]) else { return false };
            at.iter().all(|&s| match spider(d, s) {
                Some((c, p)) => {
                    c == c0 && p.is_zero() && d.degree(s) == 1 && d.self_loops(s) == 0 && {
                        let n = d.incidences(s)[0];
                        !at.contains(&n)
                    }
                }
                None => false,
            })
        }
        RuleId::Bialgebra => match *at {
            [x1, x2, z1, z2] => {
                let xs = [x1, x2];
                let zs = [z1, z2];
                let all = [x1, x2, z1, z2];
                if x1 >= x2 || z1 >= z2 {
                    return false;
                }
                let ok_node = |v: NodeId, c: Colour| match spider(d, v) {
                    Some((cv, p)) => cv == c && p.is_zero() && d.degree(v) == 3 && d.self_loops(v) == 0,
                    None => false,
                };
                xs.iter().all(|&x| ok_node(x, Colour::X))
                    && zs.iter().all(|&z| ok_node(z, Colour::Z))
                    && xs.iter().all(|&x| zs.iter().all(|&z| d.edge_count(x, z) == 1))
                    && d.edge_count(x1, x2) == 0
                    && d.edge_count(z1, z2) == 0
                    && all.iter().all(|&v| {
                        let ext: Vec<NodeId> =
                            d.incidences(v).into_iter().filter(|u| !all.contains(u)).collect();
                        ext.len() == 1
                    })
            }
            _ => false,
        },
        RuleId::BialgebraInverse => match *at {
            [x, z] => {
                let ok = |v: NodeId, c: Colour| match spider(d, v) {
                    Some((cv, p)) => cv == c && p.is_zero() && d.degree(v) == 3 && d.self_loops(v) == 0,
                    None => false,
                };
                ok(x, Colour::X) && ok(z, Colour::Z) && d.edge_count(x, z) == 1
            }
            _ => false,
        },
        RuleId::PiCommute | RuleId::PiState => match *at {
            [p, x] if p != x => match (spider(d, p), spider(d, x)) {
                (Some((cp, pp)), Some((cx, px))) => {
                    let base = cp != cx
                        && pp.is_pi()
                        && d.degree(p) == 2
                        && d.self_loops(p) == 0
                        && d.edge_count(p, x) == 1
                        && d.self_loops(x) == 0;
                    if rule == RuleId::PiCommute {
                        base && (px.is_zero() || px.is_pi()) && d.degree(x) >= 2
                    } else {
                        base && px.is_zero() && d.degree(x) == 1
                    }
                }
                _ => false,
            },
            _ => false,
        },
        RuleId::Hopf => match *at {
            [z, x] => {
                matches!(spider(d, z), Some((Colour::Z, _)))
                    && matches!(spider(d, x), Some((Colour::X, _)))
                    && d.edge_count(z, x) >= 2
            }
            _ => false,
        },
        RuleId::HCancel => match *at {
            [h1, h2] if h1 < h2 => {
                if !is_h(d, h1) || !is_h(d, h2) || d.edge_count(h1, h2) == 0 {
                    return false;
                }
                if d.edge_count(h1, h2) == 2 {
                    return true;
                }
                let a = far_end(d, h1, h2).unwrap();
                let b = far_end(d, h2, h1).unwrap();
                !(a == b && is_h(d, a))
            }
            _ => false,
        },
        RuleId::HColour => match *at {
            [v] => spider(d, v).is_some(),
            _ => false,
        },
        RuleId::HPhaseSlide => match *at {
            [x, h] => {
                spider(d, x).is_some()
                    && is_h(d, h)
                    && d.degree(x) == 2
                    && d.self_loops(x) == 0
                    && d.edge_count(x, h) == 1
            }
            _ => false,
        },
        RuleId::HState => match *at {
            [s, h] => match spider(d, s) {
                Some((_, p)) => p.is_zero() && d.degree(s) == 1 && is_h(d, h) && d.edge_count(s, h) == 1,
                None => false,
            },
            _ => false,
        },
        RuleId::HStateInverse => match *at {
            [s] => match spider(d, s) {
                Some((_, p)) => p.is_zero() && d.degree(s) == 1 && d.self_loops(s) == 0,
                None => false,
            },
            _ => false,
        },
        RuleId::EulerH => match *at {
            [h] => is_h(d, h),
            _ => false,
        },
        RuleId::EulerHInverse => match *at {
            [z1, x, z2] => {
                let m = Phase::MINUS_HALF_PI;
                let link = |v: NodeId, c: Colour| {
                    spider(d, v) == Some((c, m)) && d.degree(v) == 2 && d.self_loops(v) == 0
                };
                z1 < z2
                    && link(z1, Colour::Z)
                    && link(x, Colour::X)
                    && link(z2, Colour::Z)
                    && d.edge_count(z1, x) == 1
                    && d.edge_count(x, z2) == 1
                    && ![z1, x, z2].contains(&far_end(d, z1, x).unwrap())
                    && ![z1, x, z2].contains(&far_end(d, z2, x).unwrap())
            }
            _ => false,
        },
    }
}

fn sub_multisets(items: &[(NodeId, usize)]) -> Vec<Vec<NodeId>> {
    let mut out = vec![Vec::new()];
    for &(v, m) in items {
        let mut next = Vec::new();
        for base in &out {
            for k in 0..=m {
                let mut s = base.clone();
                s.extend(std::iter::repeat(v).take(k));
                next.push(s);
            }
        }
        out = next;
    }
    out
}

fn candidates(rule: RuleId, d: &Diagram) -> Vec<Anchor> {
    let spiders: Vec<NodeId> = d.nodes().filter(|(_, k)| k.is_spider()).map(|(v, _)| v).collect();
    let hboxes: Vec<NodeId> = d.nodes().filter(|(_, k)| *k == NodeKind::HBox).map(|(v, _)| v).collect();
    let pairs = |vs: &[NodeId]| -> Vec<Anchor> {
        vs.iter().flat_map(|&v| d.neighbours(v).filter(move |&(u, _)| u != v).map(move |(u, _)| vec![v, u])).collect()
    };
    match rule {
        RuleId::SpiderFuse => d.edges().into_iter().filter(|(a, b)| a < b).map(|(a, b)| vec![a, b]).collect(),
        RuleId::SpiderSplit => spiders
            .iter()
            .flat_map(|&v| {
                let items: Vec<(NodeId, usize)> = d.neighbours(v).filter(|&(u, _)| u != v).collect();
                sub_multisets(&items).into_iter().map(move |s| {
                    let mut a = vec![v];
                    a.extend(s);
                    a
                })
            })
            .collect(),
        RuleId::IdentityRemove | RuleId::SelfLoopDrop | RuleId::HColour | RuleId::HStateInverse => {
            spiders.iter().map(|&v| vec![v]).collect()
        }
        RuleId::IdentityInsert => d.edges().into_iter().map(|(a, b)| vec![a, b]).collect(),
        RuleId::Copy | RuleId::PiCommute | RuleId::PiState | RuleId::HPhaseSlide | RuleId::HState => {
            pairs(&spiders)
        }
        RuleId::CopyInverse => {
            let mut out = Vec::new();
            for c in [Colour::Z, Colour::X] {
                let states: Vec<NodeId> = spiders
                    .iter()
                    .copied()
                    .filter(|&s| matches!(spider(d, s), Some((cs, p)) if cs == c && p.is_zero()) && d.degree(s) == 1)
                    .collect();
                let n = states.len().min(16);
                for mask in 1u32..(1 << n) {
                    out.push((0..n).filter(|i| mask & (1 << i) != 0).map(|i| states[i]).collect());
                }
            }
            out
        }
        RuleId::Bialgebra => {
            let mut out = Vec::new();
            for &x1 in &spiders {
                let zs: Vec<NodeId> = d.neighbours(x1).map(|(u, _)| u).filter(|&u| u != x1).collect();
                for (i, &z1) in zs.iter().enumerate() {
                    for &z2 in &zs[i + 1..] {
                        for (x2, _) in d.neighbours(z1) {
                            if x2 > x1 && d.edge_count(x2, z2) > 0 {
                                out.push(vec![x1, x2, z1.min(z2), z1.max(z2)]);
                            }
                        }
                    }
                }
            }
            out
        }
        RuleId::BialgebraInverse | RuleId::Hopf => pairs(&spiders),
        RuleId::HCancel => pairs(&hboxes),
        RuleId::EulerH => hboxes.iter().map(|&h| vec![h]).collect(),
        RuleId::EulerHInverse => {
            let mut out = Vec::new();
            for &z1 in &spiders {
                for (x, _) in d.neighbours(z1) {
                    for (z2, _) in d.neighbours(x) {
                        out.push(vec![z1, x, z2]);
                    }
                }
            }
            out
        }
    }
}

/// Every anchor at which `rule` applies, sorted and without duplicates.
pub fn match_sites(rule: RuleId, d: &Diagram) -> Vec<Anchor> {
    let mut sites: Vec<Anchor> = candidates(rule, d).into_iter().filter(|a| matches(rule, d, a)).collect();
    sites.sort();
    sites.dedup();
    sites
}

/// Applies `rule` at `at` with default parameters.
pub fn apply(rule: RuleId, d: &Diagram, at: &[NodeId], cfg: &Config) -> Result<Diagram> {
    apply_with(rule, d, at, &Params::default(), cfg)
}

/// Applies `rule` at `at`.
pub fn apply_with(rule: RuleId, d: &Diagram, at: &[NodeId], params: &Params, cfg: &Config) -> Result<Diagram> {
    if rule.is_euler() && !cfg.euler_axiom {
        return Err(Error::EulerGated(rule.name().to_string()));
    }
    if !matches(rule, d, at) {
        return Err(Error::NoMatch { rule: rule.name().to_string(), anchor: at.to_vec() });
    }
    let mut d = d.clone();
    rewrite(rule, &mut d, at, params);
    debug_assert!(d.validate().is_ok(), "{rule} broke an invariant");
    Ok(d)
}

fn rewrite(rule: RuleId, d: &mut Diagram, at: &[NodeId], params: &Params) {
    match rule {
        RuleId::SpiderFuse => {
            let (u, v) = (at[0], at[1]);
            let (c, pu) = spider(d, u).unwrap();
            let (_, pv) = spider(d, v).unwrap();
            while d.remove_edge(u, v) {}
            for (w, m) in d.neighbours(v).collect::<Vec<_>>() {
                let w2 = if w == v { u } else { w };
                for _ in 0..m {
                    d.add_edge(u, w2);
                }
            }
            d.remove_node(v);
            d.set_kind(u, NodeKind::spider(c, pu + pv));
        }
        RuleId::SpiderSplit => {
            let v = at[0];
            let (c, p) = spider(d, v).unwrap();
            let moved = params.phase.unwrap_or(Phase::ZERO);
            let w = d.add_spider(c, moved);
            d.set_kind(v, NodeKind::spider(c, p - moved));
            for &n in &at[1..] {
                d.remove_edge(v, n);
                d.add_edge(w, n);
            }
            d.add_edge(v, w);
        }
        RuleId::IdentityRemove => {
            let v = at[0];
            let inc = d.incidences(v);
            d.remove_node(v);
            d.add_edge(inc[0], inc[1]);
        }
        RuleId::IdentityInsert => {
            let (a, b) = (at[0], at[1]);
            d.remove_edge(a, b);
            let w = d.add_spider(params.colour.unwrap_or(Colour::Z), Phase::ZERO);
            d.add_edge(a, w);
            d.add_edge(w, b);
        }
        RuleId::SelfLoopDrop => {
            d.remove_edge(at[0], at[0]);
        }
        RuleId::Copy => {
            let (s, t) = (at[0], at[1]);
            let (cs, _) = spider(d, s).unwrap();
            let rest = minus_one(d.incidences(t), s);
            d.remove_node(s);
            d.remove_node(t);
            for u in rest {
                let w = d.add_spider(cs, Phase::ZERO);
                d.add_edge(w, u);
            }
        }
        RuleId::CopyInverse => {
            let (c, _) = spider(d, at[0]).unwrap();
            let ends: Vec<NodeId> = at.iter().map(|&s| d.incidences(s)[0]).collect();
            for &s in at {
                d.remove_node(s);
            }
            let t = d.add_spider(c.other(), Phase::ZERO);
            for u in ends {
                d.add_edge(t, u);
            }
            let s = d.add_spider(c, Phase::ZERO);
            d.add_edge(s, t);
        }
        RuleId::Bialgebra => {
            let all = [at[0], at[1], at[2], at[3]];
            let ext = |d: &Diagram, v: NodeId| d.incidences(v).into_iter().find(|u| !all.contains(u)).unwrap();
            let xe: Vec<NodeId> = all[..2].iter().map(|&v| ext(d, v)).collect();
            let ze: Vec<NodeId> = all[2..].iter().map(|&v| ext(d, v)).collect();
            for v in all {
                d.remove_node(v);
            }
            let g = d.add_spider(Colour::Z, Phase::ZERO);
            let r = d.add_spider(Colour::X, Phase::ZERO);
            for u in xe {
                d.add_edge(g, u);
            }
            for u in ze {
                d.add_edge(r, u);
            }
            d.add_edge(g, r);
        }
        RuleId::BialgebraInverse => {
            let (x, z) = (at[0], at[1]);
            let xe = minus_one(d.incidences(x), z);
            let ze = minus_one(d.incidences(z), x);
            d.remove_node(x);
            d.remove_node(z);
            let reds: Vec<NodeId> = ze
                .iter()
                .map(|&u| {
                    let r = d.add_spider(Colour::X, Phase::ZERO);
                    d.add_edge(r, u);
                    r
                })
                .collect();
            let greens: Vec<NodeId> = xe
                .iter()
                .map(|&u| {
                    let g = d.add_spider(Colour::Z, Phase::ZERO);
                    d.add_edge(g, u);
                    g
                })
                .collect();
            for &r in &reds {
                for &g in &greens {
                    d.add_edge(r, g);
                }
            }
        }
        RuleId::PiCommute => {
            let (p, x) = (at[0], at[1]);
            let (cp, _) = spider(d, p).unwrap();
            let (cx, px) = spider(d, x).unwrap();
            let q = far_end(d, p, x).unwrap();
            let rest = minus_one(d.incidences(x), p);
            d.remove_node(p);
            d.set_kind(x, NodeKind::spider(cx, -px));
            for u in rest {
                d.remove_edge(x, u);
                let w = d.add_spider(cp, Phase::PI);
                d.add_edge(x, w);
                d.add_edge(w, u);
            }
            d.add_edge(q, x);
        }
        RuleId::PiState => {
            let (p, x) = (at[0], at[1]);
            let q = far_end(d, p, x).unwrap();
            d.remove_node(p);
            d.add_edge(q, x);
        }
        RuleId::Hopf => {
            d.remove_edge(at[0], at[1]);
            d.remove_edge(at[0], at[1]);
        }
        RuleId::HCancel => {
            let (h1, h2) = (at[0], at[1]);
            if d.edge_count(h1, h2) == 2 {
                d.remove_node(h1);
                d.remove_node(h2);
            } else {
                let a = far_end(d, h1, h2).unwrap();
                let b = far_end(d, h2, h1).unwrap();
                d.remove_node(h1);
                d.remove_node(h2);
                d.add_edge(a, b);
            }
        }
        RuleId::HColour => {
            let v = at[0];
            let (c, p) = spider(d, v).unwrap();
            d.set_kind(v, NodeKind::spider(c.other(), p));
            for (u, m) in d.neighbours(v).collect::<Vec<_>>() {
                if u == v {
                    continue; // a loop gets an H at both ends, which cancel
                }
                if is_h(d, u) {
                    if m == 2 {
                        continue; // H·H·H on a v–v H loop is a single H
                    }
                    let w = far_end(d, u, v).unwrap();
                    d.remove_node(u);
                    d.add_edge(v, w);
                } else {
                    for _ in 0..m {
                        d.remove_edge(v, u);
                        let h = d.add_node(NodeKind::HBox);
                        d.add_edge(v, h);
                        d.add_edge(h, u);
                    }
                }
            }
        }
        RuleId::HPhaseSlide => {
            let (x, h) = (at[0], at[1]);
            let (c, p) = spider(d, x).unwrap();
            let a = far_end(d, x, h).unwrap();
            let b = far_end(d, h, x).unwrap();
            d.remove_edge(a, x);
            d.remove_edge(x, h);
            d.remove_edge(h, b);
            d.add_edge(a, h);
            d.add_edge(h, x);
            d.add_edge(x, b);
            d.set_kind(x, NodeKind::spider(c.other(), p));
        }
        RuleId::HState => {
            let (s, h) = (at[0], at[1]);
            let (c, _) = spider(d, s).unwrap();
            let b = far_end(d, h, s).unwrap();
            d.remove_node(s);
            d.remove_node(h);
            let w = d.add_spider(c.other(), Phase::ZERO);
            d.add_edge(w, b);
        }
        RuleId::HStateInverse => {
            let s = at[0];
            let (c, _) = spider(d, s).unwrap();
            let b = d.incidences(s)[0];
            d.remove_node(s);
            let h = d.add_node(NodeKind::HBox);
            d.add_edge(b, h);
            let w = d.add_spider(c.other(), Phase::ZERO);
            d.add_edge(h, w);
        }
        RuleId::EulerH => {
            let h = at[0];
            let inc = d.incidences(h);
            d.remove_node(h);
            let m = Phase::MINUS_HALF_PI;
            let z1 = d.add_spider(Colour::Z, m);
            let x = d.add_spider(Colour::X, m);
            let z2 = d.add_spider(Colour::Z, m);
            d.add_edge(inc[0], z1);
            d.add_edge(z1, x);
            d.add_edge(x, z2);
            d.add_edge(z2, inc[1]);
        }
        RuleId::EulerHInverse => {
            let (z1, x, z2) = (at[0], at[1], at[2]);
            let a = far_end(d, z1, x).unwrap();
            let b = far_end(d, z2, x).unwrap();
            for v in [z1, x, z2] {
                d.remove_node(v);
            }
            let h = d.add_node(NodeKind::HBox);
            d.add_edge(a, h);
            d.add_edge(h, b);
        }
    }
}
