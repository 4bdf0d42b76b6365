//! ZX-calculus diagrams, rewrite rules, and a tensor-contraction semantics
//! for checking them.
//!
//! Diagrams are open multigraphs of green (Z) and red (X) spiders, H-boxes
//! and boundaries. Each rewrite rule is applied at an explicit anchor, and
//! its soundness can be checked against the family of models in which every
//! spider phase is scaled by an integer `n`.

pub mod derived;
pub mod diagram;
pub mod error;
pub mod graphstate;
pub mod iso;
pub mod matrix;
pub mod phase;
pub mod random;
pub mod rules;
pub mod semantics;
pub mod tensor;
pub mod zxd;

pub use diagram::{compose, dagger, generator, tensor, Colour, Diagram, GeneratorId, NodeId, NodeKind};
pub use error::{Error, ParseError, Result};
pub use iso::{iso_equal, iso_mapping};
pub use matrix::CMatrix;
pub use phase::Phase;
pub use rules::{apply, apply_with, match_sites, matches, normalize, Anchor, Config, Params, RuleId};
pub use semantics::{diagrams_equal, equal_up_to_scalar, evaluate, ModelN, TOL};
