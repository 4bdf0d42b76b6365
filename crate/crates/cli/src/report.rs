//! JSON reports written by `--json`. The shape is fixed by `report.schema.json`.

use serde::Serialize;

#[derive(Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Report {
    CheckEqual(EqualityReport),
    Verify(VerifyReport),
}

#[derive(Debug, Serialize)]
pub struct EqualityReport {
    pub model_n: u32,
    pub tol: f64,
    pub equal: bool,
    /// Best scalar `[re, im]` with `a ≈ lambda · b`.
    pub lambda: [f64; 2],
    pub residual: f64,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    /// True iff every case came out as expected.
    pub passed: bool,
    pub cases: usize,
    pub unexpected: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub axioms: Vec<AxiomRow>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<GraphCase>,
}

#[derive(Debug, Serialize)]
pub struct AxiomRow {
    pub model_n: u32,
    pub axiom: String,
    pub holds: bool,
    pub expected: bool,
    pub max_residual: f64,
}

#[derive(Debug, Serialize)]
pub struct GraphCase {
    /// The graph in `.edges` format.
    pub graph: String,
    pub vertex: String,
}
