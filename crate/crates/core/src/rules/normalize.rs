//! Deterministic simplification to a fusion- and Hopf-normal form.

use super::{apply, match_sites, Anchor, Config, RuleId};
use crate::diagram::{Diagram, NodeKind};
use crate::error::{Error, Result};

const PRIORITY: [RuleId; 4] = [RuleId::SpiderFuse, RuleId::SelfLoopDrop, RuleId::IdentityRemove, RuleId::Hopf];

/// Identities next to an H-box are kept, so graph-state diagrams are normal.
fn eligible(rule: RuleId, d: &Diagram, at: &Anchor) -> bool {
    rule != RuleId::IdentityRemove
        || d.incidences(at[0]).iter().all(|&u| d.kind(u) != Some(NodeKind::HBox))
}

/// Normalizes `d` and returns the steps taken.
pub fn normalize_trace(d: &Diagram) -> (Diagram, Vec<(RuleId, Anchor)>) {
    let mut d = d.clone();
    let mut steps = Vec::new();
    'outer: loop {
        for rule in PRIORITY {
            if let Some(at) = match_sites(rule, &d).into_iter().find(|a| eligible(rule, &d, a)) {
                d = apply(rule, &d, &at, &Config::default()).expect("site from match_sites");
                steps.push((rule, at));
                continue 'outer;
            }
        }
        return (d, steps);
    }
}

/// Applies SpiderFuse > SelfLoopDrop > IdentityRemove > Hopf to exhaustion,
/// always at the smallest anchor of the highest-priority rule.
pub fn normalize(d: &Diagram) -> Diagram {
    normalize_trace(d).0
}

/// True iff no edge joins two spiders of the same colour.
pub fn is_bipartite_form(d: &Diagram) -> Result<bool> {
    if d.has_hbox() {
        return Err(Error::HBoxPresent);
    }
    Ok(d.edges().into_iter().all(|(a, b)| {
        let (ka, kb) = (d.kind(a).unwrap(), d.kind(b).unwrap());
        !(ka.is_spider() && ka.colour() == kb.colour())
    }))
}
