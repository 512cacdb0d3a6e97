//! Coherent-state quadrature moments to first order, natural units.

use num::complex::Complex64;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

fn e(x: f64) -> Complex64 {
    Complex64::new(0.0, x).exp()
}

/// `⟨X₁²⟩`, `⟨X₁⟩²`, `⟨X₂²⟩`, `⟨X₂⟩²` and `⟨p̂²⟩` evaluated at one `g`.
///
/// `p_hat_sq` is in units of `ħmω`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SecondMoments {
    pub x1_sq: Complex64,
    pub x1_mean_sq: Complex64,
    pub x2_sq: Complex64,
    pub x2_mean_sq: Complex64,
    pub p_hat_sq: Complex64,
}

impl SecondMoments {
    pub fn var_x1(&self) -> Complex64 {
        self.x1_sq - self.x1_mean_sq
    }

    pub fn var_x2(&self) -> Complex64 {
        self.x2_sq - self.x2_mean_sq
    }
}

fn x1_sq_bracket(t: f64, a: Complex64) -> Complex64 {
    let c = a.conj();
    let r = a.re;
    let s = a.norm_sqr();
    let inner = 6.0 + 5.0 * a * a * (-6.0 + a * a) + c * c * (-6.0 - 4.0 * a * c + c * c)
        - 8.0 * a * (-6.0 + a * a) * r
        + 24.0 * s * s * t.sin().powi(2);
    let br = -6.0 * a.powi(4) - 6.0 * e(8.0 * t) * c.powi(4)
        + e(6.0 * t)
            * (-6.0
                + 27.0 * a * a
                + 2.0 * a.powi(3) * c
                + 9.0 * (1.0 + 4.0 * I * t) * c * c
                + 6.0 * (1.0 + 4.0 * I * t) * a * c.powi(3)
                + 4.0 * c.powi(4)
                - 48.0 * a * r)
        + e(2.0 * t)
            * (-6.0 + a * a * (33.0 - 36.0 * I * t - 2.0 * a * a) - 24.0 * I * t * a.powi(3) * c
                + 3.0 * c * c
                + 2.0 * a * c.powi(3)
                + 12.0 * a * (-4.0 + a * a) * r)
        + 2.0 * e(4.0 * t) * inner;
    e(-4.0 * t) / 48.0 * br
}

fn x1_mean_sq_bracket(t: f64, a: Complex64) -> Complex64 {
    let c = a.conj();
    let r = a.re;
    let s = a.norm_sqr();
    let br = -3.0 * a.powi(3) - 3.0 * e(6.0 * t) * c.powi(3)
        + e(2.0 * t)
            * (6.0 * (1.0 - 2.0 * I * t) * a * s - 6.0 * a * c * c
                + c.powi(3)
                + 2.0 * (a * (6.0 - 6.0 * I * t + a * a) - 6.0 * r))
        + e(4.0 * t)
            * (-12.0 * a + a.powi(3) - 6.0 * a * s
                + 2.0 * c * (6.0 * I * t + c * (3.0 * a + 6.0 * I * t * a + c))
                + 12.0 * r);
    e(-4.0 * t) / 24.0 * (a + e(2.0 * t) * c) * br
}

fn x2_sq_bracket(t: f64, a: Complex64) -> Complex64 {
    let c = a.conj();
    let s = a.norm_sqr();
    let (a2, c2) = (a * a, c * c);
    let d = e(2.0 * t) - 1.0;
    let br = 2.0 * a2 * a2 - 3.0 * e(6.0 * t) * (a2 - 2.0)
        + e(2.0 * t) * (6.0 + 3.0 * a2 * (5.0 + 12.0 * I * t) - 4.0 * a2 * a2)
        + 2.0 * e(4.0 * t) * (-6.0 - 6.0 * a2 + a2 * a2)
        + 12.0 * e(2.0 * t) * d * d * s * s
        + 3.0 * e(2.0 * t) * c2 * (-1.0 - 4.0 * e(2.0 * t) + e(4.0 * t) * (5.0 - 12.0 * I * t))
        + 2.0 * e(4.0 * t) * c2 * c2 * d * d
        - 2.0
            * e(2.0 * t)
            * s
            * (-12.0 - 5.0 * a2 - 12.0 * I * t * a2
                + e(4.0 * t) * (a2 - 12.0)
                + 4.0 * e(2.0 * t) * (6.0 + a2)
                + (1.0 + 4.0 * e(2.0 * t) + e(4.0 * t) * (12.0 * I * t - 5.0)) * c2);
    e(-4.0 * t) / 48.0 * br
}

/// `faithful = false` reproduces the widely circulated variant with its
/// three slips (see [`uncorrected_x2_mean_sq`]).
fn x2_mean_sq_bracket(t: f64, a: Complex64, faithful: bool) -> Complex64 {
    let c = a.conj();
    let s = a.norm_sqr();
    let d = e(2.0 * t) - 1.0;
    let (q, inner) = if faithful {
        (
            a,
            6.0 * e(2.0 * t) * c * (1.0 + e(2.0 * t) * (2.0 * I * t - 1.0)),
        )
    } else {
        (
            Complex64::new(1.0, 0.0),
            6.0 * e(2.0 * t) * (1.0 + e(2.0 * t) * c * (2.0 * I * t - 1.0)),
        )
    };
    let br = a.powi(3)
        + 2.0 * e(2.0 * t) * a * (3.0 + 6.0 * I * t - a * a)
        + e(4.0 * t) * q * (a * a - 6.0)
        + inner
        - e(2.0 * t) * c.powi(3) * d * d
        - 6.0
            * e(2.0 * t)
            * s
            * ((-1.0 + e(2.0 * t) - 2.0 * I * t) * a
                + (-1.0 + e(2.0 * t) * (1.0 - 2.0 * I * t)) * c);
    e(-4.0 * t) / 24.0 * (a - e(2.0 * t) * c) * br
}

fn p_hat_sq_bracket(t: f64, a: Complex64, faithful: bool) -> Complex64 {
    let c = a.conj();
    let s = a.norm_sqr();
    let (a2, c2) = (a * a, c * c);
    let a2_coeff = if faithful {
        -3.0 * e(2.0 * t) * (3.0 + 4.0 * e(2.0 * t) + e(4.0 * t) - 12.0 * I * t)
    } else {
        -3.0 * e(2.0 * t) * (3.0 + 4.0 * e(2.0 * t) - 12.0 * I * t)
    };
    let d = e(2.0 * t) - 1.0;
    let br = 6.0 * e(2.0 * t)
        + 6.0 * e(6.0 * t)
        + a2_coeff * a2
        + 2.0 * (3.0 - 2.0 * e(2.0 * t) + e(4.0 * t)) * a2 * a2
        + 12.0 * e(2.0 * t) * (1.0 + e(4.0 * t)) * s * s
        + 16.0 * e(2.0 * t) * s * (3.0 * e(2.0 * t) - a2)
        + (-3.0 * e(2.0 * t) - 12.0 * e(4.0 * t) - e(6.0 * t) * (9.0 + 36.0 * I * t)) * c2
        - 16.0 * e(6.0 * t) * s * c2
        + 2.0 * e(4.0 * t) * (1.0 - 2.0 * e(2.0 * t) + 3.0 * e(4.0 * t)) * c2 * c2
        - 2.0
            * e(2.0 * t)
            * s
            * (-12.0 * d * d
                + (-5.0 + 4.0 * e(2.0 * t) + e(4.0 * t) - 12.0 * I * t) * a2
                + (1.0 + 4.0 * e(2.0 * t) + e(4.0 * t) * (-5.0 + 12.0 * I * t)) * c2);
    e(-4.0 * t) / 24.0 * br
}

fn x1_sq0(t: f64, a: Complex64) -> Complex64 {
    0.25 * (1.0 + e(-2.0 * t) * a * a + 2.0 * a.norm_sqr() + e(2.0 * t) * a.conj() * a.conj())
}

fn x2_sq0(t: f64, a: Complex64) -> Complex64 {
    0.25 * (1.0 - e(-2.0 * t) * a * a + 2.0 * a.norm_sqr() - e(2.0 * t) * a.conj() * a.conj())
}

/// All five moments to first order in `g`.
pub fn second_moments(tau: f64, g: f64, alpha: Complex64) -> SecondMoments {
    let (t, a, c) = (tau, alpha, alpha.conj());
    let mean1 = a + e(2.0 * t) * c;
    let mean2 = a - e(2.0 * t) * c;
    SecondMoments {
        x1_sq: x1_sq0(t, a) + g * x1_sq_bracket(t, a),
        x1_mean_sq: 0.25 * e(-2.0 * t) * mean1 * mean1 + g * x1_mean_sq_bracket(t, a),
        x2_sq: x2_sq0(t, a) + g * x2_sq_bracket(t, a),
        x2_mean_sq: -0.25 * e(-2.0 * t) * mean2 * mean2 + g * x2_mean_sq_bracket(t, a, true),
        p_hat_sq: 2.0 * x2_sq0(t, a) + g * p_hat_sq_bracket(t, a, true),
    }
}

/// Uncorrected `⟨X₂⟩²`: `+¼` on the zeroth-order square, a missing
/// factor `α` on `e^{4iτ}(α²−6)` and `α*` misplaced inside `6e^{2iτ}(…)`.
pub fn uncorrected_x2_mean_sq(tau: f64, g: f64, alpha: Complex64) -> Complex64 {
    let (t, a) = (tau, alpha);
    let mean1 = a + e(2.0 * t) * a.conj();
    -0.25 * e(-2.0 * t) * mean1 * mean1 + g * x2_mean_sq_bracket(t, a, false)
}

/// Uncorrected `⟨p̂²⟩`, without the `e^{4iτ}` in the `α²` coefficient.
pub fn uncorrected_p_hat_sq(tau: f64, g: f64, alpha: Complex64) -> Complex64 {
    2.0 * x2_sq0(tau, alpha) + g * p_hat_sq_bracket(tau, alpha, false)
}

/// Raw moments `⟨X₂ᵏ⟩`, `k = 1..4`, of the undeformed evolved coherent state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureMoments {
    pub first: f64,
    pub second: f64,
    pub third: f64,
    pub fourth: f64,
}

/// Gaussian moments with mean `Im(α e^{−iτ})` and variance `1/4`.
pub fn coherent_x2_moments(tau: f64, alpha: Complex64) -> QuadratureMoments {
    let y = (alpha * e(-tau)).im;
    QuadratureMoments {
        first: y,
        second: y * y + 0.25,
        third: y.powi(3) + 0.75 * y,
        fourth: y.powi(4) + 1.5 * y * y + 3.0 / 16.0,
    }
}
