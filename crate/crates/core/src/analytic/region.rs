//! Sign structure of the coefficient-stripped squeezing deltas over `(τ, θ)`.

use rayon::prelude::*;

use super::variances::{momentum_bracket, position_bracket};
use super::{AnalyticError, CoherentAmplitude};
use crate::grid::Linspace;

/// Row-major `(τ, θ)` surface of the plotted brackets, `τ` outer.
#[derive(Clone, Debug, PartialEq)]
pub struct RegionScan {
    pub gamma: f64,
    pub taus: Vec<f64>,
    pub thetas: Vec<f64>,
    /// `(2/ħ²β)·delta_x`
    pub x_scaled: Vec<f64>,
    /// `(4/ħ²m²ω²β)·delta_p`
    pub p_scaled: Vec<f64>,
}

impl RegionScan {
    pub fn index(&self, i_tau: usize, i_theta: usize) -> usize {
        i_tau * self.thetas.len() + i_theta
    }

    pub fn x_has_negative(&self) -> bool {
        self.x_scaled.iter().any(|&v| v < 0.0)
    }

    pub fn p_has_negative(&self) -> bool {
        self.p_scaled.iter().any(|&v| v < 0.0)
    }

    pub fn x_min(&self) -> f64 {
        self.x_scaled.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn p_min(&self) -> f64 {
        self.p_scaled.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

/// Evaluates both brackets on the product grid. Rows are computed in
/// parallel but stored in grid order.
pub fn squeezing_region_scan(
    gamma: f64,
    tau: Linspace,
    theta: Linspace,
) -> Result<RegionScan, AnalyticError> {
    let tau = Linspace::resolved(tau.start, tau.end, tau.count)?;
    let theta = Linspace::resolved(theta.start, theta.end, theta.count)?;
    CoherentAmplitude::new(gamma, 0.0)?;
    let taus = tau.values();
    let thetas = theta.values();
    let rows: Vec<(Vec<f64>, Vec<f64>)> = taus
        .par_iter()
        .map(|&t| {
            thetas
                .iter()
                .map(|&th| {
                    let amp = CoherentAmplitude::new(gamma, th).expect("validated amplitude");
                    (position_bracket(t, &amp), momentum_bracket(t, &amp))
                })
                .unzip()
        })
        .collect();
    let (x_scaled, p_scaled) =
        rows.into_iter()
            .fold((Vec::new(), Vec::new()), |(mut xs, mut ps), (x, p)| {
                xs.extend(x);
                ps.extend(p);
                (xs, ps)
            });
    Ok(RegionScan {
        gamma,
        taus,
        thetas,
        x_scaled,
        p_scaled,
    })
}
