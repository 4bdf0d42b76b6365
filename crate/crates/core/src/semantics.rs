//! Matrix semantics, scalar-insensitive comparison and axiom checks.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::rules::{apply_with, instances, match_sites, Config, RuleId};
use crate::tensor::contract_diagram;

/// Tolerance for equality checks.
pub const TOL: f64 = 1e-9;

/// Entries below this magnitude count as zero when deciding whether a whole
/// matrix vanishes.
const ZERO_EPS: f64 = 1e-10;

/// The interpretation that multiplies every spider phase by `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModelN(pub u32);

impl ModelN {
    pub const STANDARD: ModelN = ModelN(1);
}

/// Evaluates a diagram to its `2^outputs × 2^inputs` matrix.
pub fn evaluate(d: &Diagram, model: ModelN) -> Result<CMatrix> {
    assert!(model.0 >= 1, "model index must be positive");
    contract_diagram(d, model.0 as i64)
}

/// Outcome of fitting `A ≈ λB`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScalarFit {
    pub equal: bool,
    /// λ relating the raw matrices (`A ≈ λB`); zero if either side vanishes.
    pub lambda: Complex64,
    /// Largest entrywise residual after scaling both sides to unit max entry
    /// and fitting λ by least squares.
    pub residual: f64,
}

fn check_shape(a: &CMatrix, b: &CMatrix) -> Result<()> {
    if (a.rows(), a.cols()) != (b.rows(), b.cols()) {
        return Err(Error::ShapeMismatch(a.rows(), a.cols(), b.rows(), b.cols()));
    }
    Ok(())
}

/// Compares `A` and `B` up to a nonzero scalar.
///
/// Both matrices are scaled to unit largest entry, λ is read off at the
/// largest entry of `B`, and the entrywise residual must not exceed `tol`.
pub fn equal_up_to_scalar(a: &CMatrix, b: &CMatrix, tol: f64) -> Result<bool> {
    Ok(scalar_fit(a, b, tol)?.equal)
}

/// The full comparison record behind [`equal_up_to_scalar`].
pub fn scalar_fit(a: &CMatrix, b: &CMatrix, tol: f64) -> Result<ScalarFit> {
    check_shape(a, b)?;
    let (ma, mb) = (a.max_abs(), b.max_abs());
    let zero = Complex64::new(0.0, 0.0);
    match (ma < ZERO_EPS, mb < ZERO_EPS) {
        (true, true) => return Ok(ScalarFit { equal: true, lambda: zero, residual: 0.0 }),
        (true, false) | (false, true) => return Ok(ScalarFit { equal: false, lambda: zero, residual: 1.0 }),
        _ => {}
    }
    let an = a.scale(Complex64::new(1.0 / ma, 0.0));
    let bn = b.scale(Complex64::new(1.0 / mb, 0.0));
    let pivot = (0..bn.entries().len())
        .max_by(|&i, &j| bn.entries()[i].norm().total_cmp(&bn.entries()[j].norm()))
        .unwrap();
    let lam = an.entries()[pivot] / bn.entries()[pivot];
    let pivot_residual = an.max_diff(&bn.scale(lam));
    // least-squares λ for the reported residual
    let num: Complex64 = bn.entries().iter().zip(an.entries()).map(|(x, y)| x.conj() * y).sum();
    let den: f64 = bn.entries().iter().map(|x| x.norm_sqr()).sum();
    let ls = num / den;
    let residual = an.max_diff(&bn.scale(ls)).min(pivot_residual);
    Ok(ScalarFit {
        equal: lam.norm() > tol && pivot_residual <= tol,
        lambda: lam * (ma / mb),
        residual,
    })
}

/// Evaluates both diagrams in `model` and compares them up to scalar.
pub fn diagrams_equal(a: &Diagram, b: &Diagram, model: ModelN, tol: f64) -> Result<bool> {
    equal_up_to_scalar(&evaluate(a, model)?, &evaluate(b, model)?, tol)
}

/// Result of checking one rule in one model.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AxiomCheck {
    pub holds: bool,
    pub max_residual: f64,
    /// Number of (instance, site, parameter) triples evaluated.
    pub checked: usize,
}

/// Applies `rule` at every site of every catalogue instance and compares
/// both sides in `model`.
pub fn check_axiom(rule: RuleId, model: ModelN) -> Result<AxiomCheck> {
    let cfg = Config::with_euler();
    let results: Vec<Result<(bool, f64)>> = instances(rule)
        .par_iter()
        .flat_map_iter(|inst| {
            let sites = match_sites(rule, &inst.diagram);
            assert!(!sites.is_empty(), "catalogue instance without a {rule} site");
            sites
                .into_iter()
                .flat_map(move |at| inst.params.iter().map(move |p| (at.clone(), *p)))
                .map(move |(at, p)| {
                    let rhs = apply_with(rule, &inst.diagram, &at, &p, &cfg)?;
                    let fit = scalar_fit(&evaluate(&inst.diagram, model)?, &evaluate(&rhs, model)?, TOL)?;
                    Ok((fit.equal, fit.residual))
                })
        })
        .collect();
    let mut out = AxiomCheck { holds: true, max_residual: 0.0, checked: 0 };
    for r in results {
        let (eq, res) = r?;
        out.holds &= eq;
        out.max_residual = out.max_residual.max(res);
        out.checked += 1;
    }
    Ok(out)
}

/// True iff every catalogue instance of `rule` is sound in `model`.
pub fn verify_axiom(rule: RuleId, model: ModelN) -> bool {
    check_axiom(rule, model).map(|c| c.holds).unwrap_or(false)
}

/// One row of the independence table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub model_n: u32,
    pub axiom: String,
    pub holds: bool,
    pub max_residual: f64,
}

impl ReportRow {
    /// Whether this row shows the expected outcome: every rule holds except
    /// the Euler rules in even models.
    pub fn as_expected(&self) -> bool {
        let euler = self.axiom == RuleId::EulerH.name() || self.axiom == RuleId::EulerHInverse.name();
        self.holds == !(euler && self.model_n % 2 == 0)
    }
}

/// Checks every rule in the models `n = 1, 2, 3`.
pub fn independence_report() -> Result<Vec<ReportRow>> {
    axiom_report(&[1, 2, 3])
}

/// Checks every rule in each listed model.
pub fn axiom_report(models: &[u32]) -> Result<Vec<ReportRow>> {
    let mut rows = Vec::new();
    for &n in models {
        for rule in RuleId::ALL {
            let c = check_axiom(rule, ModelN(n))?;
            rows.push(ReportRow {
                model_n: n,
                axiom: rule.name().to_string(),
                holds: c.holds,
                max_residual: c.max_residual,
            });
        }
    }
    Ok(rows)
}
