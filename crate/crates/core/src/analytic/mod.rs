//! Closed-form first-order (in `g = ħmωβ`) dynamics of the deformed
//! oscillator in a coherent state.
//!
//! All formulas are evaluated in natural units (`ħ = m = ω = 1`), where they
//! depend on `(τ, g, α)` only; [`PhysicalParams`] supplies the dimensional
//! prefactors at the boundary.

mod ladder;
mod moments;
mod region;
mod variances;

use std::f64::consts::TAU;

use num::complex::Complex64;
use thiserror::Error;

use crate::physics::constants::PLANCK_MOMENTUM;

pub use ladder::{
    coherent_expectation, evolved_annihilation, evolved_position_momentum, ladder_route_moments,
    momentum_from_ladder, position_from_ladder, quadrature_polynomials, EvolvedLadder,
    LadderMoments,
};
pub use moments::{
    second_moments, coherent_x2_moments, uncorrected_p_hat_sq, uncorrected_x2_mean_sq,
    SecondMoments, QuadratureMoments,
};
pub use region::{squeezing_region_scan, RegionScan};
pub use variances::{
    deformed_variances, first_order_slopes, momentum_bracket, momentum_variance_from_moments,
    position_bracket, uncorrected_var_x2, product_bracket, quadrature_bracket, quadrature_variances,
    squeezing_deltas, uncertainty_product, variance_record, DeformedVariances, FirstOrderSlopes,
    QuadratureVariances, SqueezingDeltas, UncertaintyProduct, VarianceRecord,
};

/// `g·τ·(1+γ²)` above which first-order results are flagged.
pub const DEGRADED_THRESHOLD: f64 = 0.1;
/// `g·τ·(1+γ²)` above which evaluation is refused.
pub const REFUSED_THRESHOLD: f64 = 10.0;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AnalyticError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("g·τ·(1+γ²) = {measure:.3e} exceeds {REFUSED_THRESHOLD}; first-order results are meaningless here")]
    OutsideValidityWindow { measure: f64 },
    #[error(transparent)]
    Grid(#[from] crate::grid::GridError),
}

/// Oscillator parameters `(m, ω, ħ, β)`.
///
/// `β` carries units of inverse momentum squared; everything derived
/// (`g`, `β₀`, `Δx_min`) is recomputed on demand.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhysicalParams {
    mass: f64,
    omega: f64,
    hbar: f64,
    beta: f64,
}

impl PhysicalParams {
    pub fn new(mass: f64, omega: f64, hbar: f64, beta: f64) -> Result<Self, AnalyticError> {
        for (name, v) in [("mass", mass), ("omega", omega), ("hbar", hbar)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(AnalyticError::InvalidParameter(format!(
                    "{name} must be positive and finite, got {v}"
                )));
            }
        }
        if !(beta.is_finite() && beta >= 0.0) {
            return Err(AnalyticError::InvalidParameter(format!(
                "beta must be non-negative and finite, got {beta}"
            )));
        }
        Ok(Self {
            mass,
            omega,
            hbar,
            beta,
        })
    }

    /// `ħ = m = ω = 1`, `β = g`.
    pub fn natural(g: f64) -> Result<Self, AnalyticError> {
        Self::new(1.0, 1.0, 1.0, g)
    }

    /// Same oscillator with a different `β`, which may be negative.
    ///
    /// Only meant for numerical differentiation in `β`; the Hamiltonian
    /// stays Hermitian for either sign.
    pub fn with_signed_beta(&self, beta: f64) -> Self {
        Self { beta, ..*self }
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Dimensionless deformation strength `ħmωβ`.
    pub fn g(&self) -> f64 {
        self.hbar * self.mass * self.omega * self.beta
    }

    /// `β·(M_Pl c)²`, meaningful for SI parameters.
    pub fn beta0(&self) -> f64 {
        self.beta * PLANCK_MOMENTUM * PLANCK_MOMENTUM
    }

    /// Minimal length `ħ√β`.
    pub fn min_length(&self) -> f64 {
        self.hbar * self.beta.abs().sqrt()
    }

    /// `ħ/mω`, the unit of squared length.
    pub fn length_sq_scale(&self) -> f64 {
        self.hbar / (self.mass * self.omega)
    }

    /// `ħmω`, the unit of squared momentum.
    pub fn momentum_sq_scale(&self) -> f64 {
        self.hbar * self.mass * self.omega
    }

    /// Canonical `(Δx₀)² = ħ/2mω`.
    pub fn canonical_var_x(&self) -> f64 {
        0.5 * self.length_sq_scale()
    }

    /// Canonical `(Δp₀)² = ħmω/2`.
    pub fn canonical_var_p(&self) -> f64 {
        0.5 * self.momentum_sq_scale()
    }

    /// Canonical product `ħ²/4`.
    pub fn canonical_product(&self) -> f64 {
        0.25 * self.hbar * self.hbar
    }
}

/// Coherent-state eigenvalue `α = γ e^{iθ}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoherentAmplitude {
    gamma: f64,
    theta: f64,
}

impl CoherentAmplitude {
    /// `θ` is reduced to `[0, 2π)`.
    pub fn new(gamma: f64, theta: f64) -> Result<Self, AnalyticError> {
        if !(gamma.is_finite() && gamma >= 0.0) {
            return Err(AnalyticError::InvalidParameter(format!(
                "gamma must be non-negative, got {gamma}"
            )));
        }
        if !theta.is_finite() {
            return Err(AnalyticError::InvalidParameter(format!(
                "theta must be finite, got {theta}"
            )));
        }
        let theta = theta.rem_euclid(TAU);
        // rem_euclid can round up to exactly 2π for tiny negative inputs
        let theta = if theta >= TAU { 0.0 } else { theta };
        Ok(Self { gamma, theta })
    }

    pub fn from_complex(alpha: Complex64) -> Self {
        let (gamma, theta) = alpha.to_polar();
        Self::new(gamma, theta).expect("finite complex amplitude")
    }

    pub fn vacuum() -> Self {
        Self {
            gamma: 0.0,
            theta: 0.0,
        }
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn alpha(&self) -> Complex64 {
        Complex64::from_polar(self.gamma, self.theta)
    }
}

/// Position of a point relative to the first-order validity window.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Validity {
    Valid,
    /// `g·τ·(1+γ²)` above [`DEGRADED_THRESHOLD`]: secular terms make the
    /// first-order result increasingly unreliable.
    Degraded,
    Refused,
}

impl Validity {
    pub fn measure(tau: f64, g: f64, gamma: f64) -> f64 {
        (g * tau).abs() * (1.0 + gamma * gamma)
    }

    pub fn assess(tau: f64, g: f64, gamma: f64) -> Validity {
        let m = Self::measure(tau, g, gamma);
        if m > REFUSED_THRESHOLD {
            Validity::Refused
        } else if m > DEGRADED_THRESHOLD {
            Validity::Degraded
        } else {
            Validity::Valid
        }
    }

    pub(crate) fn check(tau: f64, g: f64, gamma: f64) -> Result<Validity, AnalyticError> {
        match Self::assess(tau, g, gamma) {
            Validity::Refused => Err(AnalyticError::OutsideValidityWindow {
                measure: Self::measure(tau, g, gamma),
            }),
            v => Ok(v),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Validity::Valid => "valid",
            Validity::Degraded => "degraded",
            Validity::Refused => "refused",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn derived_strength() {
        let p = PhysicalParams::natural(0.001).unwrap();
        assert_eq!(p.g(), 0.001);
        let p = PhysicalParams::new(2.0, 3.0, 0.5, 0.1).unwrap();
        assert!((p.g() - 0.3).abs() < 1e-15);
        assert!((p.min_length() - 0.5 * 0.1f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_params() {
        assert!(PhysicalParams::new(0.0, 1.0, 1.0, 0.0).is_err());
        assert!(PhysicalParams::new(1.0, -1.0, 1.0, 0.0).is_err());
        assert!(PhysicalParams::new(1.0, 1.0, 1.0, -1e-3).is_err());
        assert!(PhysicalParams::new(1.0, 1.0, f64::NAN, 0.0).is_err());
    }

    #[test]
    fn signed_beta_is_allowed_for_differencing() {
        let p = PhysicalParams::natural(0.0)
            .unwrap()
            .with_signed_beta(-1e-6);
        assert_eq!(p.g(), -1e-6);
    }

    #[test]
    fn amplitude_phase_is_reduced() {
        let a = CoherentAmplitude::new(1.0, PI / 4.0).unwrap();
        assert_eq!(a.theta(), PI / 4.0);
        let a = CoherentAmplitude::new(2.0, -PI / 2.0).unwrap();
        assert!((a.theta() - 1.5 * PI).abs() < 1e-15);
        assert!((a.alpha() - Complex64::new(0.0, -2.0)).norm() < 1e-15);
        assert!(CoherentAmplitude::new(-1.0, 0.0).is_err());
    }

    #[test]
    fn validity_window() {
        assert_eq!(Validity::assess(1.0, 0.01, 0.0), Validity::Valid);
        assert_eq!(Validity::assess(10.0, 0.01, 1.0), Validity::Degraded);
        assert_eq!(Validity::assess(20.0, 0.1, 10.0), Validity::Refused);
        assert!(Validity::check(20.0, 0.1, 10.0).is_err());
    }
}
