//! Truncated Fock-space model of the deformed oscillator, evolved exactly
//! at finite `β`. Central differences in `β` give numerical first-order
//! coefficients independent of the closed forms.

mod evolve;
mod oracle;
mod space;
mod state;

use thiserror::Error;

pub use evolve::{
    heisenberg_evolve, unitarity_defect, HermitianEigensystem, RECONSTRUCTION_TOL, UNITARITY_TOL,
};
pub use oracle::{
    dimension_heuristic, first_order_coefficient, truncation_audit, variance_slopes,
    FirstOrderEstimate, Oracle, OracleVariances, Quantity, TruncationReport, AUDIT_TOL,
    DEFAULT_G_STEP, RICHARDSON_TOL,
};
pub use space::{
    canonical_xp, deformed_ops, hamiltonian, ladder_ops, number_op, quadratures, FockOperator,
    FockSpace,
};
pub use state::{expect, variance_numeric, AsState, CoherentVector, StateVector, NEGATIVE_FLOOR};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FockError {
    #[error("Fock space needs at least 2 levels, got {0}")]
    DimensionTooSmall(usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operator is not Hermitian (defect {defect:.3e})")]
    NotHermitian { defect: f64 },
    #[error("eigendecomposition did not converge")]
    EigenFailure,
    #[error("eigendecomposition reconstruction error {error:.3e}")]
    Reconstruction { error: f64 },
    #[error("propagator not unitary (defect {defect:.3e})")]
    NonUnitary { defect: f64 },
    #[error("variance {0:.3e} is negative beyond rounding")]
    NegativeVariance(f64),
    #[error("finite difference did not converge: slope {slope:.6e} at step {step:.1e}, {half_step_slope:.6e} at half step")]
    NonConvergent {
        slope: f64,
        half_step_slope: f64,
        step: f64,
    },
}
