//! Proof scripts, their replay, and the constructive lemmas that emit them.

mod bipartite;
mod cycle;
mod euler;
mod fixpoint;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{Colour, Diagram, NodeId, NodeKind};
use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::phase::Phase;
use crate::rules::{apply_with, Anchor, Config, Params, RuleId};
use crate::semantics::{evaluate, scalar_fit, ModelN, TOL};

pub use bipartite::{complete_bipartite, p2_form, reduce_complete_bipartite};
pub use cycle::{even_cycle, reduce_even_cycle};
pub use euler::{
    derive_euler_from_lc_script, euler_chain, euler_nonuniqueness_check, euler_nonuniqueness_script,
    lc_implies_euler, pi2_colour_change_check, pi2_colour_script, pi2_colour_start, triangle_lc_script,
    triangle_lc_target,
};
pub use fixpoint::{fixpoint_derivation, fixpoint_script};

/// Assumed equations that may appear only in scripts that declare them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Hypothesis {
    /// `[u, a, b]`: a triangle of same-colour phase-0 spiders joined by
    /// H-boxes, each with one further leg, loses the `a`–`b` H-box; the other
    /// colour's π/2 goes on `u`'s leg and this colour's -π/2 on the legs of
    /// `a` and `b`.
    LcTriangle,
}

impl Hypothesis {
    pub fn name(self) -> &'static str {
        match self {
            Hypothesis::LcTriangle => "lc-triangle",
        }
    }

    pub fn from_name(s: &str) -> Option<Hypothesis> {
        (s == "lc-triangle").then_some(Hypothesis::LcTriangle)
    }
}

/// What a step applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepRule {
    Rule(RuleId),
    Hypothesis(Hypothesis),
}

impl StepRule {
    pub fn name(self) -> &'static str {
        match self {
            StepRule::Rule(r) => r.name(),
            StepRule::Hypothesis(h) => h.name(),
        }
    }
}

impl fmt::Display for StepRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub rule: StepRule,
    pub anchor: Anchor,
    pub params: Params,
}

/// A named sequence of anchored rewrite steps.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProofScript {
    pub name: String,
    pub description: String,
    pub steps: Vec<Step>,
}

#[derive(Serialize, Deserialize)]
struct StepLine {
    rule: String,
    anchor: Vec<NodeId>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    phase: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    colour: Option<String>,
}

impl ProofScript {
    pub fn new(name: impl Into<String>, description: impl Into<String>) -> ProofScript {
        ProofScript { name: name.into(), description: description.into(), steps: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// True iff some step uses an Euler rule or a hypothesis.
    pub fn uses_euler_or_hypothesis(&self) -> bool {
        self.steps.iter().any(|s| match s.rule {
            StepRule::Rule(r) => r.is_euler(),
            StepRule::Hypothesis(_) => true,
        })
    }

    /// One JSON object per line: `{"rule", "anchor"}` plus optional
    /// `"phase"` (e.g. `"-1/2"`) and `"colour"` (`"z"` or `"x"`).
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for s in &self.steps {
            let line = StepLine {
                rule: s.rule.name().to_string(),
                anchor: s.anchor.clone(),
                phase: s.params.phase.map(|p| p.to_string()),
                colour: s.params.colour.map(|c| c.to_string()),
            };
            out.push_str(&serde_json::to_string(&line).expect("serializable"));
            out.push('\n');
        }
        out
    }

    pub fn from_json_lines(name: &str, text: &str) -> Result<ProofScript> {
        let mut script = ProofScript::new(name, "");
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let bad = |m: String| Error::Parse(crate::error::ParseError::new(i + 1, 1, m));
            let raw: StepLine = serde_json::from_str(line).map_err(|e| bad(e.to_string()))?;
            let rule = match Hypothesis::from_name(&raw.rule) {
                Some(h) => StepRule::Hypothesis(h),
                None => StepRule::Rule(raw.rule.parse().map_err(|_| bad(format!("unknown rule `{}`", raw.rule)))?),
            };
            let phase = match raw.phase {
                Some(p) => Some(p.parse::<Phase>().map_err(|_| bad(format!("invalid phase `{p}`")))?),
                None => None,
            };
            let colour = match raw.colour.as_deref() {
                None => None,
                Some("z") => Some(Colour::Z),
                Some("x") => Some(Colour::X),
                Some(c) => return Err(bad(format!("invalid colour `{c}`"))),
            };
            script.steps.push(Step { rule, anchor: raw.anchor, params: Params { phase, colour } });
        }
        Ok(script)
    }
}

/// Replay settings.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReplayOptions {
    pub config: Config,
    /// Accept hypothesis steps.
    pub allow_hypotheses: bool,
    /// Check every step against the semantics.
    pub check: bool,
    pub tol: f64,
}

impl Default for ReplayOptions {
    fn default() -> ReplayOptions {
        ReplayOptions { config: Config::default(), allow_hypotheses: false, check: true, tol: TOL }
    }
}

impl ReplayOptions {
    /// Euler rules and hypotheses enabled, semantic checks on.
    pub fn permissive() -> ReplayOptions {
        ReplayOptions { config: Config::with_euler(), allow_hypotheses: true, ..ReplayOptions::default() }
    }
}

/// Applies one step.
pub fn apply_step(d: &Diagram, step: &Step, opts: &ReplayOptions) -> Result<Diagram> {
    match step.rule {
        StepRule::Rule(r) => apply_with(r, d, &step.anchor, &step.params, &opts.config),
        StepRule::Hypothesis(h) => {
            if !opts.allow_hypotheses {
                return Err(Error::BadAnchor(format!("hypothesis {} is not assumed", h.name())));
            }
            apply_hypothesis(h, d, &step.anchor)
        }
    }
}

/// Replays `script` from `start`. With checks on, every step must preserve
/// the semantics up to scalar at n = 1, and also at n = 2 when the script
/// uses neither Euler rules nor hypotheses.
pub fn replay(script: &ProofScript, start: &Diagram, opts: &ReplayOptions) -> Result<Diagram> {
    let models: Vec<u32> = if script.uses_euler_or_hypothesis() { vec![1] } else { vec![1, 2] };
    let eval_all = |d: &Diagram| -> Result<Vec<CMatrix>> {
        models.iter().map(|&n| evaluate(d, ModelN(n))).collect()
    };
    let mut d = start.clone();
    let mut before = if opts.check { eval_all(&d)? } else { Vec::new() };
    for (i, step) in script.steps.iter().enumerate() {
        d = apply_step(&d, step, opts).map_err(|e| Error::Step {
            index: i,
            rule: step.rule.name().to_string(),
            reason: e.to_string(),
        })?;
        if opts.check {
            let after = eval_all(&d)?;
            for ((a, b), &n) in before.iter().zip(&after).zip(&models) {
                let fit = scalar_fit(a, b, opts.tol)?;
                if !fit.equal {
                    return Err(Error::Drift { index: i, rule: step.rule.name().to_string(), model: n, residual: fit.residual });
                }
            }
            before = after;
        }
    }
    Ok(d)
}

fn triangle_parts(d: &Diagram, at: &[NodeId]) -> Option<(Colour, [NodeId; 3], NodeId, [NodeId; 3])> {
    let [u, a, b] = *at else { return None };
    if u == a || u == b || a == b {
        return None;
    }
    let c = d.kind(u)?.colour()?;
    let nodes = [u, a, b];
    for &v in &nodes {
        let k = d.kind(v)?;
        if k.colour()? != c || !k.phase()?.is_zero() || d.degree(v) != 3 || d.self_loops(v) > 0 {
            return None;
        }
    }
    // the H-box joining each pair
    let link = |x: NodeId, y: NodeId| -> Option<NodeId> {
        d.neighbours(x)
            .map(|(h, _)| h)
            .find(|&h| d.kind(h) == Some(NodeKind::HBox) && d.edge_count(h, x) == 1 && d.edge_count(h, y) == 1)
    };
    let (hua, hub, hab) = (link(u, a)?, link(u, b)?, link(a, b)?);
    let hs = [hua, hub, hab];
    let mut ext = [0; 3];
    for (i, &v) in nodes.iter().enumerate() {
        let rest: Vec<NodeId> = d.incidences(v).into_iter().filter(|w| !hs.contains(w)).collect();
        if rest.len() != 1 {
            return None;
        }
        ext[i] = rest[0];
    }
    Some((c, nodes, hab, ext))
}

fn apply_hypothesis(h: Hypothesis, d: &Diagram, at: &[NodeId]) -> Result<Diagram> {
    match h {
        Hypothesis::LcTriangle => {
            let (c, nodes, hab, ext) = triangle_parts(d, at)
                .ok_or_else(|| Error::NoMatch { rule: h.name().to_string(), anchor: at.to_vec() })?;
            let mut d = d.clone();
            d.remove_node(hab);
            let phases = [(c.other(), Phase::HALF_PI), (c, Phase::MINUS_HALF_PI), (c, Phase::MINUS_HALF_PI)];
            for i in 0..3 {
                d.remove_edge(nodes[i], ext[i]);
                let r = d.add_spider(phases[i].0, phases[i].1);
                d.add_edge(nodes[i], r);
                d.add_edge(r, ext[i]);
            }
            Ok(d)
        }
    }
}

/// A script together with the diagrams it starts from and ends at.
#[derive(Clone, Debug)]
pub struct Derivation {
    pub start: Diagram,
    pub end: Diagram,
    pub script: ProofScript,
}

impl Derivation {
    fn from_builder(start: &Diagram, b: ScriptBuilder) -> Derivation {
        let (end, script) = b.finish();
        Derivation { start: start.clone(), end, script }
    }
}

/// Every derivation shipped under `proofs/`, in a fixed order.
pub fn shipped() -> Result<Vec<Derivation>> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.push(fixpoint_derivation(n)?);
    }
    for m in 1..=4 {
        for n in 1..=4 {
            let d = complete_bipartite(m, n);
            let reds: Vec<NodeId> = (0..m as NodeId).collect();
            let greens: Vec<NodeId> = (m as NodeId..(m + n) as NodeId).collect();
            out.push(reduce_complete_bipartite(&d, &reds, &greens)?);
        }
    }
    for n in 2..=4 {
        let cycle: Vec<NodeId> = (0..2 * n as NodeId).collect();
        out.push(reduce_even_cycle(&even_cycle(n), &cycle)?);
    }
    out.push(euler_nonuniqueness_script()?);
    out.push(pi2_colour_script()?);
    out.push(triangle_lc_script()?);
    out.push(lc_implies_euler()?);
    Ok(out)
}

/// Drops every connected component that contains no boundary.
pub fn strip_scalar_components(d: &Diagram) -> Diagram {
    let mut seen: std::collections::BTreeSet<NodeId> = d.inputs().iter().chain(d.outputs()).copied().collect();
    let mut stack: Vec<NodeId> = seen.iter().copied().collect();
    while let Some(v) = stack.pop() {
        for (w, _) in d.neighbours(v) {
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    let mut out = d.clone();
    for v in d.node_ids() {
        if !seen.contains(&v) {
            out.remove_node(v);
        }
    }
    out
}

/// Builds a script by applying steps to a working diagram.
#[derive(Clone, Debug)]
pub struct ScriptBuilder {
    diagram: Diagram,
    script: ProofScript,
    opts: ReplayOptions,
}

impl ScriptBuilder {
    pub fn new(start: &Diagram, name: &str, description: &str) -> ScriptBuilder {
        ScriptBuilder {
            diagram: start.clone(),
            script: ProofScript::new(name, description),
            opts: ReplayOptions { check: false, ..ReplayOptions::permissive() },
        }
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    fn push(&mut self, rule: StepRule, anchor: &[NodeId], params: Params) -> Result<Vec<NodeId>> {
        let step = Step { rule, anchor: anchor.to_vec(), params };
        let first_new = self.diagram.next_id();
        self.diagram = apply_step(&self.diagram, &step, &self.opts).map_err(|e| Error::Step {
            index: self.script.steps.len(),
            rule: rule.name().to_string(),
            reason: e.to_string(),
        })?;
        self.script.steps.push(step);
        Ok(self.diagram.node_ids().into_iter().filter(|&v| v >= first_new).collect())
    }

    /// Applies `rule` at `anchor`; returns the ids of the created nodes in
    /// creation order.
    pub fn step(&mut self, rule: RuleId, anchor: &[NodeId]) -> Result<Vec<NodeId>> {
        self.push(StepRule::Rule(rule), anchor, Params::default())
    }

    pub fn step_with(&mut self, rule: RuleId, anchor: &[NodeId], params: Params) -> Result<Vec<NodeId>> {
        self.push(StepRule::Rule(rule), anchor, params)
    }

    pub fn split(&mut self, v: NodeId, moved: &[NodeId], phase: Phase) -> Result<NodeId> {
        let mut at = vec![v];
        at.extend_from_slice(moved);
        Ok(self.step_with(RuleId::SpiderSplit, &at, Params { phase: Some(phase), colour: None })?[0])
    }

    pub fn insert(&mut self, a: NodeId, b: NodeId, colour: Colour) -> Result<NodeId> {
        Ok(self.step_with(RuleId::IdentityInsert, &[a, b], Params { phase: None, colour: Some(colour) })?[0])
    }

    pub fn hypothesis(&mut self, h: Hypothesis, anchor: &[NodeId]) -> Result<Vec<NodeId>> {
        self.push(StepRule::Hypothesis(h), anchor, Params::default())
    }

    pub fn finish(self) -> (Diagram, ProofScript) {
        (self.diagram, self.script)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{generator, GeneratorId};

    #[test]
    fn empty_script_is_identity() {
        let d = generator(GeneratorId::H, None).unwrap();
        let out = replay(&ProofScript::default(), &d, &ReplayOptions::default()).unwrap();
        assert_eq!(out, d);
    }

    #[test]
    fn json_lines_round_trip() {
        let mut s = ProofScript::new("t", "");
        s.steps.push(Step {
            rule: StepRule::Rule(RuleId::SpiderSplit),
            anchor: vec![3, 1],
            params: Params { phase: Some(Phase::MINUS_HALF_PI), colour: None },
        });
        s.steps.push(Step {
            rule: StepRule::Rule(RuleId::IdentityInsert),
            anchor: vec![0, 2],
            params: Params { phase: None, colour: Some(Colour::X) },
        });
        s.steps.push(Step { rule: StepRule::Hypothesis(Hypothesis::LcTriangle), anchor: vec![1, 2, 3], params: Params::default() });
        let text = s.to_json_lines();
        assert!(text.starts_with("{\"rule\":\"spider-split\",\"anchor\":[3,1],\"phase\":\"3/2\"}"));
        assert_eq!(ProofScript::from_json_lines("t", &text).unwrap(), s);
        assert!(ProofScript::from_json_lines("t", "{\"rule\":\"nope\",\"anchor\":[]}").is_err());
    }

    #[test]
    fn failing_step_reports_index_and_rule() {
        let d = generator(GeneratorId::H, None).unwrap();
        let text = "{\"rule\":\"euler\",\"anchor\":[2]}\n{\"rule\":\"hopf\",\"anchor\":[0,1]}\n";
        let s = ProofScript::from_json_lines("t", text).unwrap();
        let e = replay(&s, &d, &ReplayOptions::permissive()).unwrap_err();
        assert!(matches!(e, Error::Step { index: 1, ref rule, .. } if rule == "hopf"), "{e}");
        let e = replay(&s, &d, &ReplayOptions::default()).unwrap_err();
        assert!(matches!(e, Error::Step { index: 0, .. }));
    }

    #[test]
    fn hypotheses_need_opt_in() {
        let d = generator(GeneratorId::H, None).unwrap();
        let s = ProofScript::from_json_lines("t", "{\"rule\":\"lc-triangle\",\"anchor\":[0,1,2]}\n").unwrap();
        assert!(replay(&s, &d, &ReplayOptions::default()).is_err());
    }
}
