//! Exact symbolic algebra over normal-ordered single-mode bosonic operators.
//!
//! Coefficients are exact complex rationals split into `g⁰` and `g¹` parts,
//! with `g = ħmωβ`. This is enough to re-derive the nested-commutator
//! expansion of the evolved annihilation operator term by term and to check
//! the closed forms its coefficients sum to.

mod bch;
mod coefficient;
mod polynomial;
mod series;

use thiserror::Error;

pub use bch::{
    bch_series, bch_term, collect_monomial_series, collect_monomial_series_at,
    deformed_hamiltonian, BchTerm,
};
pub use coefficient::{
    exact_real, exact_to_f64, ratio, Coefficient, ExactCoefficient, ExactComplex, GupOrder,
    NumericCoefficient,
};
pub use polynomial::{commutator, normal_order, Monomial, OperatorPolynomial};
pub use series::{
    closed_form_taylor, compare_tabulated_bodies, verify_bch_collection, BchReport, ClosedForm,
    MonomialCheck, TableDiscrepancy, TabulatedEntry, TaylorSeries, FIRST_ORDER_FORMS,
    TABULATED_FIRST_ORDER_BODIES,
};

/// Polynomial with floating-point first-order coefficients.
pub type NumericPolynomial = OperatorPolynomial<NumericCoefficient>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("unknown closed form '{0}' (expected base, drift, sine, a3 or adag3)")]
    UnknownForm(String),
    #[error("series order {requested} is below the minimum {minimum}")]
    OrderTooLow { requested: usize, minimum: usize },
    #[error("term {index} contains unexpected monomial {monomial}")]
    UnexpectedMonomial { index: usize, monomial: Monomial },
}
