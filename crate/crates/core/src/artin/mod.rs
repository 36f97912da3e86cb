//! Generators of the invariant ring as cycles, the quasideterminantal ideal, the
//! exponent matrices and the end-to-end check that QDet is the toric kernel.

mod decompose;
mod generators;
mod matrices;
mod qdet;
mod verify;

pub use decompose::{decompose_cycle, decompose_with, CycleStart, Decomposition};
pub use generators::{generator_set, phi_image, z_name, GeneratorSet, ZVar};
pub use matrices::{
    block_form_holds, build_k, build_m, build_q, column_order, exponent_matrices, kernel_report,
    verify_kernel_spanning, ExponentMatrixBundle, KernelReport,
};
pub use qdet::{qdet_ideal, quasiminors, saturating_product_e, QuasiMatrix, QuasiMinor};
pub use verify::{
    closed_form_s_polynomial, closed_form_s_with_e, e_minus_u, lattice_ideal, pair_shape, reduction_chain,
    s_pair_outcomes, saturation_basis, toric_oracle, u_ring, u_rings, verify_theorem, CheckSummary, OracleSummary,
    PairOutcome, PairShape, PairWitness, TheoremReport, VerifyMode,
};

use crate::groebner::GroebnerError;
use crate::poly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArtinError {
    #[error("generator index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("not a closed path: {0}")]
    NotAPath(String),
    #[error("cycle is not a product of generators")]
    Undecomposable,
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
