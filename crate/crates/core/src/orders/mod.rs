//! Hopf orders: the named families, Koch's matrix construction, and an
//! exact verifier working on coordinates over the box-monomial basis.
//!
//! Every closure check reduces to "are these coordinates in R". Coordinates
//! on a basis are unique, so a failing check always comes with a concrete
//! witness.

mod duality;
mod families;
mod file;
mod params;
mod presentation;
mod verify;

use thiserror::Error;

use crate::groupalg::GroupAlgError;
use crate::linalg::LinalgError;
use crate::localfield::{LocalFieldError, Valuation};

pub use duality::{
    discriminant_valuation, dualize, orders_equal, pairing_matrix, regular_trace, trace_form, PairingMatrix,
};
pub use families::{
    build_dual, build_primal, koch_generators, koch_matrix, koch_order, koch_relation_holds, Family, KochMatrix,
    ThetaMatrix,
};
pub use file::{parse_theta, OrderFile, ParamsFile};
pub use params::{check_conditions, params_equivalent, ConditionCheck, ConditionReport, DualFamilyParams};
pub use presentation::{BasisData, Membership, OrderPresentation};
pub use verify::{pth_power_witness, verify_hopf_order, AxiomStatus, VerificationReport, Witness, WITNESS_LIMIT};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrdersError {
    #[error("expected {expected} elements, found {found}")]
    GeneratorCount { expected: usize, found: usize },
    #[error("box monomials are linearly dependent (rank {rank} of {dim})")]
    Dependent { rank: usize, dim: usize },
    #[error("operands live in different ambient algebras")]
    AmbientMismatch,
    #[error("operands live over different primes or ranks")]
    ShapeMismatch,
    #[error("presentation is not given by generators")]
    NotGeneratorForm,
    #[error("Koch matrix entry ({row}, {col}) has valuation {valuation} < 0")]
    KochNotIntegral {
        row: usize,
        col: usize,
        valuation: Valuation,
    },
    #[error("bad theta: {0}")]
    BadTheta(String),
    #[error("{0}")]
    BadFamily(String),
    #[error("trace form is degenerate (determinant 0)")]
    DegenerateTraceForm,
    #[error("order file: {0}")]
    File(String),
    #[error(transparent)]
    Group(#[from] GroupAlgError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Scalar(#[from] LocalFieldError),
}

impl OrdersError {
    pub fn is_degree_cap(&self) -> bool {
        matches!(self, OrdersError::Linalg(LinalgError::DegreeCapExceeded { .. }))
    }
}
