use std::f64::consts::SQRT_2;

use num::complex::Complex64;
use num::Zero;

use super::{PhysicalParams, Validity};
use crate::boson::{Coefficient, Monomial, NumericCoefficient, NumericPolynomial};

fn cis(x: f64) -> Complex64 {
    Complex64::new(0.0, x).exp()
}

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// First-order evolved annihilation operator
/// `a(τ) = c_a a + c_adag a† + c_a3 a³ + c_adag3 a†³ + c_adag_a2 a†a² + c_adag2_a a†²a`.
#[derive(Clone, Debug, PartialEq)]
pub struct EvolvedLadder {
    pub tau: f64,
    pub g: f64,
    terms: [(Monomial, NumericCoefficient); 6],
}

impl EvolvedLadder {
    /// Coefficient of `mono` split into `g⁰` and `g¹` parts.
    pub fn split(&self, mono: Monomial) -> NumericCoefficient {
        self.terms
            .iter()
            .find(|(m, _)| *m == mono)
            .map(|(_, c)| *c)
            .unwrap_or_else(NumericCoefficient::zero)
    }

    /// Full coefficient of `mono` at this ladder's `g`.
    pub fn coefficient(&self, mono: Monomial) -> Complex64 {
        self.split(mono).evaluate(self.g)
    }

    pub fn c_a(&self) -> Complex64 {
        self.coefficient(Monomial::A)
    }

    pub fn c_adag(&self) -> Complex64 {
        self.coefficient(Monomial::ADAG)
    }

    pub fn c_a3(&self) -> Complex64 {
        self.coefficient(Monomial::A3)
    }

    pub fn c_adag3(&self) -> Complex64 {
        self.coefficient(Monomial::ADAG3)
    }

    pub fn c_adag_a2(&self) -> Complex64 {
        self.coefficient(Monomial::ADAG_A2)
    }

    pub fn c_adag2_a(&self) -> Complex64 {
        self.coefficient(Monomial::ADAG2_A)
    }

    pub fn validity(&self) -> Validity {
        Validity::assess(self.tau, self.g, 0.0)
    }

    /// `a(τ)` as a polynomial with `g`-split coefficients.
    pub fn to_polynomial(&self) -> NumericPolynomial {
        NumericPolynomial::from_terms(self.terms.iter().copied())
    }
}

/// Evolved annihilation operator to first order in `g`.
pub fn evolved_annihilation(tau: f64, g: f64) -> EvolvedLadder {
    let drift = -I * tau * cis(-tau);
    let sine = I * tau.sin();
    let zero = Complex64::zero();
    let first = |c: Complex64| NumericCoefficient::new(zero, c);
    let terms = [
        (Monomial::A, NumericCoefficient::new(cis(-tau), drift)),
        (Monomial::ADAG, first(sine)),
        (Monomial::A3, first((cis(-tau) - cis(-3.0 * tau)) / 6.0)),
        (Monomial::ADAG3, first((cis(-tau) - cis(3.0 * tau)) / 12.0)),
        (Monomial::ADAG_A2, first(drift)),
        (Monomial::ADAG2_A, first(sine)),
    ];
    EvolvedLadder { tau, g, terms }
}

/// `(X₁, X₂)` at time `τ` built from `a(τ)` and its adjoint.
pub fn quadrature_polynomials(tau: f64) -> (NumericPolynomial, NumericPolynomial) {
    let a = evolved_annihilation(tau, 0.0).to_polynomial();
    let adag = a.adjoint();
    let half = NumericCoefficient::order0(Complex64::new(0.5, 0.0));
    let minus_half_i = NumericCoefficient::order0(Complex64::new(0.0, -0.5));
    (
        (&a + &adag).scaled(&half),
        (&a - &adag).scaled(&minus_half_i),
    )
}

fn scaled_real(p: &NumericPolynomial, factor: f64) -> NumericPolynomial {
    p.scaled(&NumericCoefficient::order0(Complex64::new(factor, 0.0)))
}

/// `x̂(τ) = √(2ħ/mω) X₁`.
pub fn position_from_ladder(tau: f64, params: &PhysicalParams) -> NumericPolynomial {
    let (x1, _) = quadrature_polynomials(tau);
    scaled_real(&x1, (2.0 * params.length_sq_scale()).sqrt())
}

/// `p̂(τ) = √(2ħmω) (X₂ + (2/3) g X₂³)`, normal-ordered, first order in `g`.
pub fn momentum_from_ladder(tau: f64, params: &PhysicalParams) -> NumericPolynomial {
    let (_, x2) = quadrature_polynomials(tau);
    let cubic = x2
        .pow(3)
        .scaled(&NumericCoefficient::order1(Complex64::new(2.0 / 3.0, 0.0)));
    scaled_real(&(&x2 + &cubic), (2.0 * params.momentum_sq_scale()).sqrt())
}

/// Evolved deformed position and momentum with their closed-form
/// coefficient functions; the `g¹` parts are to be weighted by `params.g()`.
pub fn evolved_position_momentum(
    tau: f64,
    params: &PhysicalParams,
) -> (NumericPolynomial, NumericPolynomial) {
    let e = |k: f64| cis(k * tau);
    let (s, t) = (tau.sin(), tau);
    let zero = Complex64::zero();
    let pre_x = e(-3.0) / (12.0 * SQRT_2);
    let x_terms = [
        (
            Monomial::A,
            e(-1.0) / SQRT_2,
            pre_x * -6.0 * e(2.0) * (-1.0 + e(2.0) + 2.0 * I * t),
        ),
        (
            Monomial::ADAG,
            e(1.0) / SQRT_2,
            pre_x * 12.0 * I * e(3.0) * (e(1.0) * t + s),
        ),
        (Monomial::A3, zero, pre_x * (2.0 * e(2.0) - 3.0 + e(4.0))),
        (
            Monomial::ADAG_A2,
            zero,
            -pre_x * (12.0 * I * e(2.0) * t + 12.0 * I * e(3.0) * s),
        ),
        (
            Monomial::ADAG2_A,
            zero,
            pre_x * (12.0 * I * e(4.0) * t + 12.0 * I * e(3.0) * s),
        ),
        (
            Monomial::ADAG3,
            zero,
            pre_x * (e(2.0) + 2.0 * e(4.0) - 3.0 * e(6.0)),
        ),
    ];
    let pre_p = -e(-3.0) / (12.0 * SQRT_2);
    let p_terms = [
        (
            Monomial::A,
            -I * e(-1.0) / SQRT_2,
            pre_p * 6.0 * e(2.0) * (I * e(2.0) + 2.0 * t),
        ),
        (
            Monomial::ADAG,
            I * e(1.0) / SQRT_2,
            pre_p * 6.0 * e(2.0) * (-I + 2.0 * e(2.0) * t),
        ),
        (
            Monomial::ADAG_A2,
            zero,
            pre_p * (6.0 * I * e(4.0) + 12.0 * e(2.0) * t),
        ),
        (
            Monomial::ADAG2_A,
            zero,
            pre_p * (-6.0 * I * e(2.0) + 12.0 * e(4.0) * t),
        ),
        (
            Monomial::A3,
            zero,
            pre_p * I * (-3.0 + 2.0 * e(2.0) - e(4.0)),
        ),
        (
            Monomial::ADAG3,
            zero,
            pre_p * I * (e(2.0) - 2.0 * e(4.0) + 3.0 * e(6.0)),
        ),
    ];
    let build = |terms: &[(Monomial, Complex64, Complex64)], scale: f64| {
        NumericPolynomial::from_terms(
            terms
                .iter()
                .map(|&(m, c0, c1)| (m, NumericCoefficient::new(c0 * scale, c1 * scale))),
        )
    };
    (
        build(&x_terms, params.length_sq_scale().sqrt()),
        build(&p_terms, params.momentum_sq_scale().sqrt()),
    )
}

/// `⟨α| P |α⟩` for a normal-ordered polynomial: `Σ c_mn α*^m αⁿ`.
pub fn coherent_expectation(poly: &NumericPolynomial, alpha: Complex64) -> NumericCoefficient {
    poly.terms()
        .fold(NumericCoefficient::zero(), |acc, (m, c)| {
            let w = alpha.conj().powu(m.dagger_power) * alpha.powu(m.annihilation_power);
            acc.plus(&NumericCoefficient::new(c.order0 * w, c.order1 * w))
        })
}

/// Coherent-state moments obtained by normal-ordering products of the
/// evolved ladder polynomials, natural units.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LadderMoments {
    pub x1_sq: NumericCoefficient,
    pub x1_mean_sq: NumericCoefficient,
    pub x2_sq: NumericCoefficient,
    pub x2_mean_sq: NumericCoefficient,
    pub p_hat_sq: NumericCoefficient,
    pub p_hat_mean_sq: NumericCoefficient,
}

impl LadderMoments {
    pub fn var_x1(&self) -> NumericCoefficient {
        self.x1_sq.minus(&self.x1_mean_sq)
    }

    pub fn var_x2(&self) -> NumericCoefficient {
        self.x2_sq.minus(&self.x2_mean_sq)
    }

    pub fn var_p_hat(&self) -> NumericCoefficient {
        self.p_hat_sq.minus(&self.p_hat_mean_sq)
    }
}

/// Moments of the evolved quadratures and deformed momentum computed
/// symbolically from `a(τ)`, independent of the closed-form variance formulas.
pub fn ladder_route_moments(tau: f64, alpha: Complex64) -> LadderMoments {
    let full = evolved_annihilation(tau, 0.0).to_polynomial();
    let adag = full.adjoint();
    let half = NumericCoefficient::order0(Complex64::new(0.5, 0.0));
    let minus_half_i = NumericCoefficient::order0(Complex64::new(0.0, -0.5));
    let x1 = (&full + &adag).scaled(&half);
    let x2 = (&full - &adag).scaled(&minus_half_i);
    let p_hat = momentum_from_ladder(tau, &PhysicalParams::natural(0.0).expect("natural units"));
    let mean_sq = |p: &NumericPolynomial| {
        let m = coherent_expectation(p, alpha);
        m.times(&m)
    };
    LadderMoments {
        x1_sq: coherent_expectation(&x1.product(&x1), alpha),
        x1_mean_sq: mean_sq(&x1),
        x2_sq: coherent_expectation(&x2.product(&x2), alpha),
        x2_mean_sq: mean_sq(&x2),
        p_hat_sq: coherent_expectation(&p_hat.product(&p_hat), alpha),
        p_hat_mean_sq: mean_sq(&p_hat),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boson::{
        collect_monomial_series, collect_monomial_series_at, GupOrder, FIRST_ORDER_FORMS,
    };
    use std::f64::consts::PI;

    fn max_diff(p: &NumericPolynomial, q: &NumericPolynomial, g: f64) -> f64 {
        let diff = p - q;
        diff.terms()
            .map(|(_, c)| c.evaluate(g).norm())
            .fold(0.0, f64::max)
    }

    #[test]
    fn canonical_rotation_at_zero_g() {
        let l = evolved_annihilation(1.3, 0.0);
        assert!((l.c_a() - cis(-1.3)).norm() < 1e-15);
        for c in [
            l.c_adag(),
            l.c_a3(),
            l.c_adag3(),
            l.c_adag_a2(),
            l.c_adag2_a(),
        ] {
            assert_eq!(c, Complex64::zero());
        }
    }

    #[test]
    fn adag3_vanishes_at_pi() {
        let l = evolved_annihilation(PI, 1.0);
        assert!(l.c_adag3().norm() < 1e-15);
    }

    #[test]
    fn matches_symbolic_series_at_small_tau() {
        let k_max = 12;
        for tau in [0.05, 0.1, 0.2] {
            let l = evolved_annihilation(tau, 0.0);
            for (mono, _) in FIRST_ORDER_FORMS {
                let series = collect_monomial_series(mono, k_max).evaluate(tau);
                let d = (series - l.split(mono).order1).norm();
                assert!(d < 1e-12, "{mono} at τ={tau}: {d}");
            }
            let base =
                collect_monomial_series_at(Monomial::A, k_max, GupOrder::Zeroth).evaluate(tau);
            assert!((base - l.split(Monomial::A).order0).norm() < 1e-12);
        }
    }

    #[test]
    fn closed_form_position_momentum_match_ladder() {
        let params = PhysicalParams::new(2.0, 0.7, 1.3, 0.01).unwrap();
        for tau in [0.0, 0.4, 1.7, 5.5] {
            let (x, p) = evolved_position_momentum(tau, &params);
            let g = params.g();
            assert!(max_diff(&x, &position_from_ladder(tau, &params), g) < 1e-12);
            assert!(max_diff(&p, &momentum_from_ladder(tau, &params), g) < 1e-12);
        }
    }

    #[test]
    fn initial_time_reproduces_darboux_map() {
        // x̂(0) = x, p̂(0) = p + (β/3)p³
        let params = PhysicalParams::natural(0.02).unwrap();
        let (x, p) = evolved_position_momentum(0.0, &params);
        let a = NumericPolynomial::annihilation();
        let adag = NumericPolynomial::creation();
        let x0 = scaled_real(&(&a + &adag), 1.0 / SQRT_2);
        let p0 = (&adag - &a).scaled(&NumericCoefficient::order0(Complex64::new(
            0.0,
            1.0 / SQRT_2,
        )));
        let p_expected = &p0
            + &p0
                .pow(3)
                .scaled(&NumericCoefficient::order1(Complex64::new(1.0 / 3.0, 0.0)));
        assert!(max_diff(&x, &x0, params.g()) < 1e-14);
        assert!(max_diff(&p, &p_expected, params.g()) < 1e-14);
    }

    #[test]
    fn zero_g_position_is_free_rotation() {
        let params = PhysicalParams::natural(0.0).unwrap();
        let (x, _) = evolved_position_momentum(0.9, &params);
        assert!((x.coefficient(Monomial::A).unwrap().order0 - cis(-0.9) / SQRT_2).norm() < 1e-15);
        assert!(x
            .terms()
            .all(|(m, c)| m.degree() == 1 || c.evaluate(0.0).norm() == 0.0));
    }

    #[test]
    fn coherent_expectation_of_number_operator() {
        let n = NumericPolynomial::monomial(Monomial::new(1, 1), NumericCoefficient::one());
        let e = coherent_expectation(&n, Complex64::new(1.0, 1.0));
        assert!((e.order0 - Complex64::new(2.0, 0.0)).norm() < 1e-15);
    }
}
