//! The deformed relations over λ, the parameter space Δ, chart eliminations, and the
//! fibers of the map π.

mod charts;
mod fiber;
mod params;
mod relations;

pub use charts::{
    chart_eliminate, chart_eliminate_custom, chart_indices, chart_layout, jacobian_singular_at, Chart, ChartJson,
    SolveRule,
};
pub use fiber::{fiber_dimension, fiber_dimension_direct, fiber_relations, pi_fiber_ideal, pi_map_eval, reduced_fiber};
pub use params::{DeformationParams, SAMPLE_BOUND};
pub use relations::{
    deformed_relations, impose_delta, lambda_name, rep_variety_empty_check, symbolic_ring, DeformedRelation,
    DeformedRelations, Lambda,
};

use crate::groebner::GroebnerError;
use crate::poly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DeformError {
    #[error("λ has step lengths {got:?}, expected {expected:?}")]
    Shape { expected: Vec<usize>, got: Vec<usize> },
    #[error("λ is not in Δ")]
    NotInDelta,
    #[error("normalization is inconsistent: {relation} became a nonzero constant")]
    Inconsistent { relation: String },
    #[error("elimination stuck with unsolved arrows {unsolved:?}")]
    EliminationStuck { unsolved: Vec<String> },
    #[error("point does not lie on the variety")]
    NotOnVariety,
    #[error("point has {got} coordinates, expected {expected}")]
    PointDimension { expected: usize, got: usize },
    #[error("no arrow named {0}")]
    UnknownArrow(String),
    #[error("no chart with index {0}")]
    ChartIndex(usize),
    #[error("closing relation of step {step} is not implied by the others")]
    ClosingRelation { step: usize },
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[cfg(test)]
mod tests;
