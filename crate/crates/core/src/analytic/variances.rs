//! Coherent-state variances, uncertainty product and squeezing deltas.

use num::complex::Complex64;

use super::moments::{second_moments, coherent_x2_moments};
use super::{AnalyticError, CoherentAmplitude, PhysicalParams, Validity};

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

fn cis(x: f64) -> Complex64 {
    Complex64::new(0.0, x).exp()
}

/// Time- and amplitude-dependent bracket `B(τ, α)` of the first-order
/// quadrature variance, `(ΔX₁)² = 1/4 + (g/16) B`.
///
/// `Re[α]` enters literally as the real part of the amplitude.
pub fn quadrature_bracket(tau: f64, alpha: Complex64) -> Complex64 {
    let (a, ac) = (alpha, alpha.conj());
    let (a2, ac2) = (a * a, ac * ac);
    let n = alpha.norm_sqr();
    let re = alpha.re;
    let t = tau;
    cis(-2.0 * t)
        * ((-2.0 + 3.0 * a2 - 4.0 * I * t * a2 + ac2 - 8.0 * a * re)
            + 4.0 * cis(2.0 * t) * (1.0 + 2.0 * n)
            + cis(4.0 * t) * (-2.0 + a2 - 4.0 * n + 4.0 * I * t * ac2 - ac2))
}

/// Uncorrected `(ΔX₂)²`, kept for reference only: it does not
/// match the exact evolution for `α ≠ 0` (see the crate tests).
pub fn uncorrected_var_x2(tau: f64, g: f64, alpha: Complex64) -> Complex64 {
    let (a, ac) = (alpha, alpha.conj());
    let (a2, ac2) = (a * a, ac * ac);
    let n = alpha.norm_sqr();
    let re = alpha.re;
    let t = tau;
    let bracket = cis(-2.0 * t)
        * ((2.0 - 3.0 * a2 + 4.0 * I * t * a2 - ac2 + 8.0 * a * re)
            - 4.0 * cis(2.0 * t) * (1.0 + 2.0 * n)
            + cis(4.0 * t) * (2.0 - 5.0 * a2 + 4.0 * I * t * ac2 - ac2));
    0.25 + g / 16.0 * bracket
}

/// Bracket `M(τ, α)` of the deformed momentum variance,
/// `(Δp̂)² = ħmω (1/2 + (g/8) M)`.
fn momentum_variance_bracket(tau: f64, alpha: Complex64) -> Complex64 {
    let (a, ac) = (alpha, alpha.conj());
    let (a2, ac2) = (a * a, ac * ac);
    let re = alpha.re;
    let t = tau;
    cis(-2.0 * t)
        * (2.0 - 7.0 * a2 + 4.0 * I * t * a2 - ac2
            + 8.0 * a * re
            + cis(4.0 * t) * (2.0 - 5.0 * a2 - 3.0 * ac2 - 4.0 * I * t * ac2 + 8.0 * a * re))
}

/// `1 − e^{−2iτ}α² + 2|α|² − e^{2iτ}α*²`, real by construction.
fn product_excess(tau: f64, alpha: Complex64) -> Complex64 {
    let a2 = alpha * alpha;
    1.0 - cis(-2.0 * tau) * a2 + 2.0 * alpha.norm_sqr() - cis(2.0 * tau) * a2.conj()
}

/// Coefficient-stripped position delta `(2/ħ²β)[(Δx̂)² − (Δx₀)²]`.
pub fn position_bracket(tau: f64, amp: &CoherentAmplitude) -> f64 {
    let (g2, th, t) = (amp.gamma() * amp.gamma(), amp.theta(), tau);
    let s = t.sin();
    2.0 * s * s
        + g2 * (4.0 * s * s - 2.0 * t * (2.0 * th).cos() * (2.0 * t).sin()
            + (2.0 * t * (2.0 * t).cos() - (2.0 * t).sin()) * (2.0 * th).sin())
}

/// Coefficient-stripped momentum delta `(4/ħ²m²ω²β)[(Δp̂)² − (Δp₀)²]`.
pub fn momentum_bracket(tau: f64, amp: &CoherentAmplitude) -> f64 {
    let (g2, th, t) = (amp.gamma() * amp.gamma(), amp.theta(), tau);
    2.0 * (2.0 * t).cos()
        + g2 * (4.0 * (2.0 * t).cos()
            - 3.0 * (2.0 * t - 2.0 * th).cos()
            - (2.0 * t + 2.0 * th).cos()
            + 4.0 * t * (2.0 * t - 2.0 * th).sin())
}

/// Coefficient-stripped product excess `(4/ħ³mωβ)[(Δx̂)²(Δp̂)² − ħ²/4]`.
pub fn product_bracket(tau: f64, amp: &CoherentAmplitude) -> f64 {
    let g2 = amp.gamma() * amp.gamma();
    1.0 + 2.0 * g2 * (1.0 - (2.0 * tau - 2.0 * amp.theta()).cos())
}

/// Coefficients of `g` in natural units.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FirstOrderSlopes {
    pub var_x1: f64,
    pub var_x2: f64,
    pub var_x_hat: f64,
    pub var_p_hat: f64,
    pub product: f64,
}

/// `∂/∂g` of every variance and of the product, natural units.
pub fn first_order_slopes(tau: f64, amp: &CoherentAmplitude) -> FirstOrderSlopes {
    let alpha = amp.alpha();
    let b = quadrature_bracket(tau, alpha).re;
    FirstOrderSlopes {
        var_x1: b / 16.0,
        var_x2: -b / 16.0,
        var_x_hat: b / 8.0,
        var_p_hat: momentum_variance_bracket(tau, alpha).re / 8.0,
        product: product_excess(tau, alpha).re / 4.0,
    }
}

/// Quadrature variances in a coherent state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureVariances {
    pub var_x1: f64,
    pub var_x2: f64,
    /// Largest imaginary part discarded when taking real parts.
    pub residual_imag: f64,
    pub validity: Validity,
}

/// `(ΔX₁)²` and `(ΔX₂)²` to first order in `g`.
///
/// The two corrections are equal and opposite: `(ΔX₂)² = 1/4 − (g/16) B`.
pub fn quadrature_variances(
    tau: f64,
    g: f64,
    amp: &CoherentAmplitude,
) -> Result<QuadratureVariances, AnalyticError> {
    let validity = Validity::check(tau, g, amp.gamma())?;
    let b = quadrature_bracket(tau, amp.alpha());
    let x1 = 0.25 + g / 16.0 * b;
    let x2 = 0.25 - g / 16.0 * b;
    Ok(QuadratureVariances {
        var_x1: x1.re,
        var_x2: x2.re,
        residual_imag: x1.im.abs().max(x2.im.abs()),
        validity,
    })
}

/// Deformed position and momentum variances with units.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DeformedVariances {
    pub var_x_hat: f64,
    pub var_p_hat: f64,
    pub residual_imag: f64,
    pub validity: Validity,
}

/// `(Δx̂)²` and `(Δp̂)²` in a coherent state, first order in `β`.
pub fn deformed_variances(
    tau: f64,
    amp: &CoherentAmplitude,
    params: &PhysicalParams,
) -> Result<DeformedVariances, AnalyticError> {
    let g = params.g();
    let validity = Validity::check(tau, g, amp.gamma())?;
    let alpha = amp.alpha();
    // natural units
    let x = 0.5 + g / 8.0 * quadrature_bracket(tau, alpha);
    let p = 0.5 + g / 8.0 * momentum_variance_bracket(tau, alpha);
    Ok(DeformedVariances {
        var_x_hat: x.re * params.length_sq_scale(),
        var_p_hat: p.re * params.momentum_sq_scale(),
        residual_imag: x.im.abs().max(p.im.abs()),
        validity,
    })
}

/// `(Δp̂)²` assembled from quadrature moments,
/// `2(ΔX₂)² + (8/3) g (⟨X₂⁴⟩ − ⟨X₂⟩⟨X₂³⟩)`, natural units.
pub fn momentum_variance_from_moments(tau: f64, g: f64, alpha: Complex64) -> Complex64 {
    let b = second_moments(tau, g, alpha);
    let var_x2 = b.x2_sq - b.x2_mean_sq;
    let m = coherent_x2_moments(tau, alpha);
    2.0 * var_x2 + 8.0 / 3.0 * g * (m.fourth - m.first * m.third)
}

/// Deformed uncertainty product and the generalized lower bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UncertaintyProduct {
    pub product: f64,
    /// `(ħ²/4)(1 + 2β⟨p̂²⟩)` truncated at first order.
    pub bound: f64,
    pub validity: Validity,
}

/// Product of the deformed variances and the bound it saturates.
pub fn uncertainty_product(
    tau: f64,
    amp: &CoherentAmplitude,
    params: &PhysicalParams,
) -> Result<UncertaintyProduct, AnalyticError> {
    let g = params.g();
    let validity = Validity::check(tau, g, amp.gamma())?;
    let alpha = amp.alpha();
    let hbar_sq = params.hbar() * params.hbar();
    let product = 0.25 + g / 4.0 * product_excess(tau, alpha).re;
    // ⟨p̂²⟩ only contributes its g⁰ part once multiplied by β
    let p_sq0 = second_moments(tau, 0.0, alpha).p_hat_sq.re;
    let bound = 0.25 * (1.0 + 2.0 * g * p_sq0);
    Ok(UncertaintyProduct {
        product: product * hbar_sq,
        bound: bound * hbar_sq,
        validity,
    })
}

/// Deformed-minus-canonical differences.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SqueezingDeltas {
    pub delta_x: f64,
    pub delta_p: f64,
    pub delta_product: f64,
    pub validity: Validity,
}

/// `(Δx̂)² − ħ/2mω`, `(Δp̂)² − ħmω/2` and `(Δx̂)²(Δp̂)² − ħ²/4`.
///
/// The product delta carries the `ħ³mωβ/4` prefactor.
pub fn squeezing_deltas(
    tau: f64,
    amp: &CoherentAmplitude,
    params: &PhysicalParams,
) -> Result<SqueezingDeltas, AnalyticError> {
    let validity = Validity::check(tau, params.g(), amp.gamma())?;
    let (hbar, m, w, beta) = (params.hbar(), params.mass(), params.omega(), params.beta());
    Ok(SqueezingDeltas {
        delta_x: hbar * hbar * beta / 2.0 * position_bracket(tau, amp),
        delta_p: 0.25 * hbar * hbar * m * m * w * w * beta * momentum_bracket(tau, amp),
        delta_product: 0.25 * hbar.powi(3) * m * w * beta * product_bracket(tau, amp),
        validity,
    })
}

/// One evaluated point: all variances, the product, its bound and deltas.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VarianceRecord {
    pub tau: f64,
    pub gamma: f64,
    pub theta: f64,
    pub g: f64,
    pub var_x_hat: f64,
    pub var_p_hat: f64,
    pub product: f64,
    pub gup_bound: f64,
    pub delta_x: f64,
    pub delta_p: f64,
    pub delta_product: f64,
    pub validity: Validity,
}

pub fn variance_record(
    tau: f64,
    amp: &CoherentAmplitude,
    params: &PhysicalParams,
) -> Result<VarianceRecord, AnalyticError> {
    let v = deformed_variances(tau, amp, params)?;
    let u = uncertainty_product(tau, amp, params)?;
    let d = squeezing_deltas(tau, amp, params)?;
    Ok(VarianceRecord {
        tau,
        gamma: amp.gamma(),
        theta: amp.theta(),
        g: params.g(),
        var_x_hat: v.var_x_hat,
        var_p_hat: v.var_p_hat,
        product: u.product,
        gup_bound: u.bound,
        delta_x: d.delta_x,
        delta_p: d.delta_p,
        delta_product: d.delta_product,
        validity: v.validity,
    })
}
