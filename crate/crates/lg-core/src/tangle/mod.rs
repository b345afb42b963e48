//! Tangle evaluation: braid closures, oriented tangle programs and the
//! Seifert-surface pipelines.

pub mod admissible;
pub mod braid;
mod lg;
pub mod program;
pub mod surface;

pub use admissible::{admissible_eval, cable, cable_braid, AdmissibleDiagram, AdmissibleResult};
pub use braid::{closure_operator, closure_scalar, BraidWord};
pub use lg::{closure_bounds, lg_exact, lg_from_braid, lg_from_braid_with, lg_interp, lg_from_program, program_scalar, EvalOptions, Mode};
pub use surface::{surface_pipeline, surface_pipeline_checked, BandOp, BottomTangle, GTensor, SurfaceResult};
pub use program::{
    eval_dense, eval_program, eval_sparse, exact_ops, laurent_ops, program_bounds, rescaled_ops, rescaling_exponent, Elementary,
    Slice, SparseVec, TangleProgram,
};

use crate::ring::{to_t0t1_checked, LaurentBi, RingError, T0T1Poly};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TangleError {
    #[error("bad braid: {0}")]
    BadBraid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("closure operator is not scalar")]
    SchurFailure,
    #[error("slices do not compose: {0}")]
    NonComposable(String),
    #[error("coefficient has nonzero u-support: {0}")]
    USupport(String),
    #[error("bound violated: {0}")]
    BoundViolated(String),
    #[error("closure of the input is not a knot")]
    NotKnot,
    #[error("too many strands: {0} > {1}")]
    TooManyStrands(usize, usize),
    #[error("invariant is not a Laurent polynomial: {0}")]
    NotLaurent(String),
    #[error("interpolation did not stabilize: {0}")]
    Interpolation(String),
    #[error(transparent)]
    Braiding(#[from] crate::rmatrix::RMatrixError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// A computed invariant with its (t0, t1) form when on the lattice.
#[derive(Clone, Debug, PartialEq)]
pub struct LGValue {
    pub value: LaurentBi,
    pub t0t1: Option<T0T1Poly>,
}

impl LGValue {
    pub fn new(value: LaurentBi) -> Self {
        let t0t1 = to_t0t1_checked(&value);
        LGValue { value, t0t1 }
    }
}
