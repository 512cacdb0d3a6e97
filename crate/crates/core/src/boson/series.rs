//! Taylor series in `(iτ)ⁿ/n!` and the closed forms they collect into.

use std::fmt;
use std::str::FromStr;

use num::complex::Complex64;
use num::{BigInt, BigRational, Complex, Zero};

use super::bch::{bch_series, collect_from_terms, deformed_hamiltonian};
use super::coefficient::{exact_real, exact_to_f64, ratio, ExactComplex, GupOrder};
use super::polynomial::{Monomial, OperatorPolynomial};
use super::AlgebraError;

/// Coefficients `c_n` of `Σ c_n (iτ)ⁿ/n!` for `n = 0..=order`.
#[derive(Clone, Debug, PartialEq)]
pub struct TaylorSeries {
    coefficients: Vec<ExactComplex>,
}

impl TaylorSeries {
    pub fn new(coefficients: Vec<ExactComplex>) -> Self {
        Self { coefficients }
    }

    pub fn coefficients(&self) -> &[ExactComplex] {
        &self.coefficients
    }

    pub fn order(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    /// Partial sum at real `τ`.
    pub fn evaluate(&self, tau: f64) -> Complex64 {
        let mut term = Complex64::new(1.0, 0.0);
        let mut acc = Complex64::zero();
        for (n, c) in self.coefficients.iter().enumerate() {
            if n > 0 {
                term *= Complex64::new(0.0, tau) / n as f64;
            }
            acc += exact_to_f64(c) * term;
        }
        acc
    }

    /// Index of the first differing coefficient, if any.
    pub fn first_mismatch(&self, other: &TaylorSeries) -> Option<usize> {
        let n = self.coefficients.len().max(other.coefficients.len());
        let zero = ExactComplex::zero();
        (0..n).find(|&i| {
            self.coefficients.get(i).unwrap_or(&zero) != other.coefficients.get(i).unwrap_or(&zero)
        })
    }
}

/// The closed-form functions of `τ` the first-order coefficients collect into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosedForm {
    /// `e^{−iτ}`
    Base,
    /// `−iτ e^{−iτ}`
    Drift,
    /// `i sin τ`
    Sine,
    /// `(e^{−iτ} − e^{−3iτ}) / 6`
    CubeA,
    /// `(e^{−iτ} − e^{3iτ}) / 12`
    CubeAdag,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 5] = [
        ClosedForm::Base,
        ClosedForm::Drift,
        ClosedForm::Sine,
        ClosedForm::CubeA,
        ClosedForm::CubeAdag,
    ];

    pub fn id(self) -> &'static str {
        match self {
            ClosedForm::Base => "base",
            ClosedForm::Drift => "drift",
            ClosedForm::Sine => "sine",
            ClosedForm::CubeA => "a3",
            ClosedForm::CubeAdag => "adag3",
        }
    }

    /// Exact `c_n` such that the form equals `Σ c_n (iτ)ⁿ/n!`.
    pub fn taylor_coefficient(self, n: usize) -> ExactComplex {
        let pow = |base: i64| BigInt::from(base).pow(n as u32);
        let value = match self {
            ClosedForm::Base => BigRational::from_integer(pow(-1)),
            ClosedForm::Drift => BigRational::from_integer(pow(-1) * BigInt::from(n)),
            ClosedForm::Sine => {
                if n % 2 == 1 {
                    ratio(1, 1)
                } else {
                    ratio(0, 1)
                }
            }
            ClosedForm::CubeA => BigRational::new(pow(-1) - pow(-3), BigInt::from(6)),
            ClosedForm::CubeAdag => BigRational::new(pow(-1) - pow(3), BigInt::from(12)),
        };
        Complex::new(value, BigRational::zero())
    }

    /// Direct evaluation at real `τ`.
    pub fn evaluate(self, tau: f64) -> Complex64 {
        let e = |k: f64| Complex64::new(0.0, k * tau).exp();
        match self {
            ClosedForm::Base => e(-1.0),
            ClosedForm::Drift => Complex64::new(0.0, -tau) * e(-1.0),
            ClosedForm::Sine => Complex64::new(0.0, tau.sin()),
            ClosedForm::CubeA => (e(-1.0) - e(-3.0)) / 6.0,
            ClosedForm::CubeAdag => (e(-1.0) - e(3.0)) / 12.0,
        }
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for ClosedForm {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClosedForm::ALL
            .into_iter()
            .find(|f| f.id() == s)
            .ok_or_else(|| AlgebraError::UnknownForm(s.to_string()))
    }
}

/// Taylor coefficients of a closed form through `k_max`.
pub fn closed_form_taylor(form: ClosedForm, k_max: usize) -> Result<TaylorSeries, AlgebraError> {
    if k_max < 1 {
        return Err(AlgebraError::OrderTooLow {
            requested: k_max,
            minimum: 1,
        });
    }
    Ok(TaylorSeries::new(
        (0..=k_max).map(|n| form.taylor_coefficient(n)).collect(),
    ))
}

/// The six monomials of the evolved annihilation operator with the closed
/// forms their first-order coefficients collect into.
pub const FIRST_ORDER_FORMS: [(Monomial, ClosedForm); 6] = [
    (Monomial::A, ClosedForm::Drift),
    (Monomial::ADAG, ClosedForm::Sine),
    (Monomial::A3, ClosedForm::CubeA),
    (Monomial::ADAG3, ClosedForm::CubeAdag),
    (Monomial::ADAG_A2, ClosedForm::Drift),
    (Monomial::ADAG2_A, ClosedForm::Sine),
];

/// Verification outcome for one monomial.
#[derive(Clone, Debug, PartialEq)]
pub struct MonomialCheck {
    pub monomial: Monomial,
    pub form: ClosedForm,
    /// Highest order through which both `g⁰` and `g¹` coefficients agree.
    pub max_verified_order: Option<usize>,
    pub first_mismatch: Option<usize>,
}

impl MonomialCheck {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }

    /// `monomial, max_verified_order, status`
    pub fn report_line(&self) -> String {
        let verified = self
            .max_verified_order
            .map(|k| k.to_string())
            .unwrap_or_else(|| "none".to_string());
        let status = match self.first_mismatch {
            None => "ok".to_string(),
            Some(k) => format!("mismatch at order {k}"),
        };
        format!("{}, {}, {}", self.monomial, verified, status)
    }
}

/// Per-monomial report of the symbolic-versus-closed-form comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct BchReport {
    pub k_max: usize,
    pub checks: Vec<MonomialCheck>,
}

impl BchReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(MonomialCheck::passed)
    }

    pub fn lines(&self) -> Vec<String> {
        self.checks.iter().map(MonomialCheck::report_line).collect()
    }
}

fn zero_series(k_max: usize) -> TaylorSeries {
    TaylorSeries::new(vec![ExactComplex::zero(); k_max + 1])
}

fn build_report(k_max: usize, terms: &[super::bch::BchTerm]) -> BchReport {
    let checks = FIRST_ORDER_FORMS
        .iter()
        .map(|&(monomial, form)| {
            let order0_expected = if monomial == Monomial::A {
                TaylorSeries::new(
                    (0..=k_max)
                        .map(|n| ClosedForm::Base.taylor_coefficient(n))
                        .collect(),
                )
            } else {
                zero_series(k_max)
            };
            let order1_expected =
                TaylorSeries::new((0..=k_max).map(|n| form.taylor_coefficient(n)).collect());
            let order0 = collect_from_terms(terms, monomial, GupOrder::Zeroth);
            let order1 = collect_from_terms(terms, monomial, GupOrder::First);
            let first_mismatch = [
                order0.first_mismatch(&order0_expected),
                order1.first_mismatch(&order1_expected),
            ]
            .into_iter()
            .flatten()
            .min();
            let max_verified_order = match first_mismatch {
                None => Some(k_max),
                Some(0) => None,
                Some(k) => Some(k - 1),
            };
            MonomialCheck {
                monomial,
                form,
                max_verified_order,
                first_mismatch,
            }
        })
        .collect();
    BchReport { k_max, checks }
}

/// Checks the exact nested-commutator coefficients of all six monomials
/// against their closed forms, order by order, through `k_max`.
///
/// A mismatch is reported, not raised.
pub fn verify_bch_collection(k_max: usize) -> Result<BchReport, AlgebraError> {
    if k_max < 1 {
        return Err(AlgebraError::OrderTooLow {
            requested: k_max,
            minimum: 1,
        });
    }
    let terms = bch_series(
        k_max,
        &deformed_hamiltonian(),
        &OperatorPolynomial::annihilation(),
    );
    let report = build_report(k_max, &terms);
    // any monomial outside the six would be an unaccounted contribution
    let stray = terms.iter().find_map(|t| {
        t.body
            .terms()
            .map(|(m, _)| *m)
            .find(|m| !FIRST_ORDER_FORMS.iter().any(|(known, _)| known == m))
            .map(|m| (t.index, m))
    });
    match stray {
        None => Ok(report),
        Some((index, monomial)) => Err(AlgebraError::UnexpectedMonomial { index, monomial }),
    }
}

/// One hand-tabulated `g¹` body entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TabulatedEntry {
    pub index: usize,
    pub monomial: Monomial,
    pub numerator: i64,
    pub denominator: i64,
}

const fn entry(
    index: usize,
    monomial: Monomial,
    numerator: i64,
    denominator: i64,
) -> TabulatedEntry {
    TabulatedEntry {
        index,
        monomial,
        numerator,
        denominator,
    }
}

/// Hand-derived `g¹` bodies of the first five nested commutators, as they
/// are commonly tabulated for this model (monomials not listed are zero).
pub const TABULATED_FIRST_ORDER_BODIES: &[TabulatedEntry] = &[
    entry(1, Monomial::A, -1, 1),
    entry(1, Monomial::ADAG, 1, 1),
    entry(1, Monomial::A3, 1, 3),
    entry(1, Monomial::ADAG3, -1, 3),
    entry(1, Monomial::ADAG_A2, -1, 1),
    entry(1, Monomial::ADAG2_A, 1, 1),
    entry(2, Monomial::A, 2, 1),
    entry(2, Monomial::A3, -4, 3),
    entry(2, Monomial::ADAG3, -4, 3),
    entry(2, Monomial::ADAG_A2, 2, 1),
    entry(3, Monomial::A, -3, 1),
    entry(3, Monomial::ADAG, 1, 1),
    entry(3, Monomial::A3, 13, 3),
    entry(3, Monomial::ADAG3, -7, 3),
    entry(3, Monomial::ADAG_A2, -3, 1),
    entry(3, Monomial::ADAG2_A, 1, 1),
    entry(4, Monomial::A, 4, 1),
    entry(4, Monomial::A3, -40, 3),
    entry(4, Monomial::ADAG3, -20, 3),
    entry(4, Monomial::ADAG_A2, 4, 1),
    entry(5, Monomial::A, -5, 1),
    entry(5, Monomial::ADAG, 1, 1),
    entry(5, Monomial::A3, 121, 3),
    entry(5, Monomial::ADAG3, -61, 3),
    entry(5, Monomial::ADAG_A2, -5, 1),
    entry(5, Monomial::ADAG2_A, 1, 1),
];

/// A tabulated coefficient that disagrees with the symbolic engine.
#[derive(Clone, Debug, PartialEq)]
pub struct TableDiscrepancy {
    pub index: usize,
    pub monomial: Monomial,
    pub tabulated: ExactComplex,
    pub computed: ExactComplex,
}

impl fmt::Display for TableDiscrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "term {}: {} tabulated {} but computed {}",
            self.index, self.monomial, self.tabulated.re, self.computed.re
        )
    }
}

/// Compares every tabulated `g¹` body with the engine, term by term and
/// monomial by monomial (including monomials the table omits).
pub fn compare_tabulated_bodies() -> Vec<TableDiscrepancy> {
    let k_max = TABULATED_FIRST_ORDER_BODIES
        .iter()
        .map(|e| e.index)
        .max()
        .unwrap_or(0);
    let terms = bch_series(
        k_max,
        &deformed_hamiltonian(),
        &OperatorPolynomial::annihilation(),
    );
    let mut out = Vec::new();
    for term in terms.iter().skip(1) {
        for (monomial, _) in FIRST_ORDER_FORMS {
            let tabulated = TABULATED_FIRST_ORDER_BODIES
                .iter()
                .find(|e| e.index == term.index && e.monomial == monomial)
                .map(|e| exact_real(e.numerator, e.denominator))
                .unwrap_or_else(ExactComplex::zero);
            let computed = term
                .body
                .coefficient(monomial)
                .map(|c| c.order1.clone())
                .unwrap_or_else(ExactComplex::zero);
            if tabulated != computed {
                out.push(TableDiscrepancy {
                    index: term.index,
                    monomial,
                    tabulated,
                    computed,
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reals(values: &[(i64, i64)]) -> Vec<ExactComplex> {
        values.iter().map(|&(n, d)| exact_real(n, d)).collect()
    }

    #[test]
    fn base_series() {
        let s = closed_form_taylor(ClosedForm::Base, 3).unwrap();
        assert_eq!(
            s.coefficients(),
            &reals(&[(1, 1), (-1, 1), (1, 1), (-1, 1)])[..]
        );
        assert_eq!(s.order(), 3);
    }

    #[test]
    fn cube_forms_match_power_formulas() {
        for n in 0..=12usize {
            let sign: i64 = if n % 2 == 0 { 1 } else { -1 };
            let three = 3i64.pow(n as u32);
            // −(−1)ⁿ(3ⁿ−1)/6 and −(3ⁿ−(−1)ⁿ)/12
            assert_eq!(
                ClosedForm::CubeA.taylor_coefficient(n),
                exact_real(-sign * (three - 1), 6)
            );
            assert_eq!(
                ClosedForm::CubeAdag.taylor_coefficient(n),
                exact_real(-(three - sign), 12)
            );
        }
    }

    #[test]
    fn unknown_form_is_rejected() {
        assert!(matches!(
            "cosine".parse::<ClosedForm>(),
            Err(AlgebraError::UnknownForm(_))
        ));
        assert_eq!("adag3".parse::<ClosedForm>().unwrap(), ClosedForm::CubeAdag);
    }

    #[test]
    fn taylor_partial_sums_converge_to_closed_forms() {
        for form in ClosedForm::ALL {
            let s = closed_form_taylor(form, 40).unwrap();
            for tau in [0.0, 0.3, 1.0, 2.5] {
                let d = (s.evaluate(tau) - form.evaluate(tau)).norm();
                assert!(d < 1e-12, "{form} at {tau}: {d}");
            }
        }
    }

    #[test]
    fn order_zero_is_rejected() {
        assert!(verify_bch_collection(0).is_err());
        assert!(closed_form_taylor(ClosedForm::Sine, 0).is_err());
    }

    #[test]
    fn verification_passes_at_six_and_one() {
        for k in [1, 6] {
            let report = verify_bch_collection(k).unwrap();
            assert!(report.all_passed(), "{:?}", report.lines());
            assert_eq!(report.checks.len(), 6);
        }
    }

    #[test]
    fn report_line_format() {
        let report = verify_bch_collection(6).unwrap();
        assert_eq!(report.lines()[0], "a, 6, ok");
    }
}
