//! Nested commutators of the deformed Hamiltonian with the ladder operator.
//!
//! `e^{iHt/ħ} B e^{−iHt/ħ} = Σ_k (iτ)ᵏ/k! · [H̃,[H̃,…[H̃,B]…]]` with
//! `H̃ = H/ħω` and `τ = ωt`. The scalar `(iτ)ᵏ/k!` is carried by the term
//! index; only the operator body is stored.

use super::coefficient::{Coefficient, ExactCoefficient, ExactComplex, GupOrder};
use super::polynomial::{Monomial, OperatorPolynomial};
use super::series::TaylorSeries;

/// `H/ħω = a†a + 1/2 + (g/12)(a − a†)⁴`.
pub fn deformed_hamiltonian() -> OperatorPolynomial {
    let number = OperatorPolynomial::monomial(Monomial::new(1, 1), ExactCoefficient::one());
    let half = OperatorPolynomial::monomial(
        Monomial::IDENTITY,
        ExactCoefficient::rational(1, 2, GupOrder::Zeroth),
    );
    let quartic = (&OperatorPolynomial::annihilation() - &OperatorPolynomial::creation())
        .pow(4)
        .scaled(&ExactCoefficient::rational(1, 12, GupOrder::First));
    &(&number + &half) + &quartic
}

/// k-th nested commutator body; multiply by `(iτ)ᵏ/k!` to get the series term.
#[derive(Clone, Debug, PartialEq)]
pub struct BchTerm {
    pub index: usize,
    pub body: OperatorPolynomial,
}

/// `[H,[H,…[H,B]…]]` with `k` nested commutators.
pub fn bch_term(k: usize, h: &OperatorPolynomial, b: &OperatorPolynomial) -> BchTerm {
    let body = (0..k).fold(b.clone(), |acc, _| h.commutator(&acc));
    BchTerm { index: k, body }
}

/// All terms `0..=k_max`, built incrementally.
pub fn bch_series(k_max: usize, h: &OperatorPolynomial, b: &OperatorPolynomial) -> Vec<BchTerm> {
    let mut terms = Vec::with_capacity(k_max + 1);
    let mut body = b.clone();
    for index in 0..=k_max {
        if index > 0 {
            body = h.commutator(&body);
        }
        terms.push(BchTerm {
            index,
            body: body.clone(),
        });
    }
    terms
}

/// Coefficient of `mono` at `order` across the bodies of `a(t)`'s expansion,
/// i.e. the Taylor coefficients `c_k` of `Σ c_k (iτ)ᵏ/k!`.
pub fn collect_monomial_series_at(mono: Monomial, k_max: usize, order: GupOrder) -> TaylorSeries {
    let h = deformed_hamiltonian();
    let terms = bch_series(k_max, &h, &OperatorPolynomial::annihilation());
    collect_from_terms(&terms, mono, order)
}

/// First-order (`g¹`) Taylor coefficients of `mono` through `k_max`.
pub fn collect_monomial_series(mono: Monomial, k_max: usize) -> TaylorSeries {
    collect_monomial_series_at(mono, k_max, GupOrder::First)
}

pub(crate) fn collect_from_terms(
    terms: &[BchTerm],
    mono: Monomial,
    order: GupOrder,
) -> TaylorSeries {
    let coefficients = terms
        .iter()
        .map(|t| {
            t.body
                .coefficient(mono)
                .map(|c| c.at(order).clone())
                .unwrap_or_else(num::Zero::zero)
        })
        .collect::<Vec<ExactComplex>>();
    TaylorSeries::new(coefficients)
}
