//! Closed-form first-order slopes against Fock-oracle central differences.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use rayon::prelude::*;
use thiserror::Error;

use crate::analytic::{
    first_order_slopes, AnalyticError, CoherentAmplitude, FirstOrderSlopes, PhysicalParams,
};
use crate::fock::{
    dimension_heuristic, truncation_audit, variance_slopes, FirstOrderEstimate, FockError,
    FockSpace, Quantity, TruncationReport, DEFAULT_G_STEP,
};

/// Relative slope agreement required for a pass.
pub const SLOPE_TOL: f64 = 1e-3;

pub const STANDARD_GAMMAS: [f64; 3] = [0.0, 1.0, 2.0];
pub const STANDARD_THETAS: [f64; 3] = [0.0, FRAC_PI_4, FRAC_PI_2];
pub const STANDARD_TAUS: [f64; 5] = [0.5, 1.0, 2.0, 4.0, 6.0];

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CompareError {
    #[error("{0}")]
    Truncation(TruncationReport),
    #[error(transparent)]
    Fock(#[from] FockError),
    #[error(transparent)]
    Analytic(#[from] AnalyticError),
}

#[derive(Clone, Debug, PartialEq)]
pub struct CompareConfig {
    pub amplitude: CoherentAmplitude,
    pub taus: Vec<f64>,
    /// Expansion point; slopes are taken at this `g`.
    pub g: f64,
    /// `None` selects [`dimension_heuristic`].
    pub dim: Option<usize>,
    pub g_step: f64,
}

impl CompareConfig {
    pub fn new(amplitude: CoherentAmplitude, taus: Vec<f64>) -> Self {
        Self {
            amplitude,
            taus,
            g: 0.0,
            dim: None,
            g_step: DEFAULT_G_STEP,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
            .unwrap_or_else(|| dimension_heuristic(self.amplitude.gamma()))
    }
}

fn analytic_slope(s: &FirstOrderSlopes, q: Quantity) -> f64 {
    match q {
        Quantity::VarX1 => s.var_x1,
        Quantity::VarX2 => s.var_x2,
        Quantity::VarXHat => s.var_x_hat,
        Quantity::VarPHat => s.var_p_hat,
        Quantity::Product => s.product,
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CompareRow {
    pub tau: f64,
    pub quantity: Quantity,
    pub analytic_slope: f64,
    pub oracle: FirstOrderEstimate,
}

impl CompareRow {
    pub fn oracle_slope(&self) -> f64 {
        self.oracle.slope
    }

    pub fn rel_err(&self) -> f64 {
        let a = self.analytic_slope;
        let d = (self.oracle.slope - a).abs();
        if a == 0.0 {
            d
        } else {
            d / a.abs()
        }
    }

    pub fn passed(&self) -> bool {
        self.oracle.converged() && self.rel_err() < SLOPE_TOL
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CompareReport {
    pub amplitude: CoherentAmplitude,
    pub audit: TruncationReport,
    pub rows: Vec<CompareRow>,
}

impl CompareReport {
    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(CompareRow::passed)
    }

    pub fn worst(&self) -> Option<&CompareRow> {
        self.rows
            .iter()
            .max_by(|a, b| a.rel_err().total_cmp(&b.rel_err()))
    }
}

pub const CSV_HEADER: &str = "tau,quantity,analytic_slope,oracle_slope,rel_err";

pub fn csv_row(r: &CompareRow) -> String {
    format!(
        "{:.16e},{},{:.16e},{:.16e},{:.16e}",
        r.tau,
        r.quantity,
        r.analytic_slope,
        r.oracle_slope(),
        r.rel_err()
    )
}

/// Audits the truncation, then differentiates the oracle at `cfg.g` in
/// natural units.
pub fn oracle_compare(cfg: &CompareConfig) -> Result<CompareReport, CompareError> {
    let space = FockSpace::new(cfg.dim())?;
    let tau_max = cfg.taus.iter().copied().fold(0.0, f64::max);
    let audit = truncation_audit(space, &cfg.amplitude, cfg.g.abs() + cfg.g_step, tau_max)?;
    if !audit.passed() {
        return Err(CompareError::Truncation(audit));
    }
    let params = PhysicalParams::natural(0.0)?.with_signed_beta(cfg.g);
    let estimates = variance_slopes(space, &params, &cfg.amplitude, &cfg.taus, cfg.g_step)?;
    let rows = cfg
        .taus
        .iter()
        .zip(estimates)
        .flat_map(|(&tau, est)| {
            let s = first_order_slopes(tau, &cfg.amplitude);
            Quantity::ALL
                .into_iter()
                .zip(est)
                .map(move |(quantity, oracle)| CompareRow {
                    tau,
                    quantity,
                    analytic_slope: analytic_slope(&s, quantity),
                    oracle,
                })
        })
        .collect();
    Ok(CompareReport {
        amplitude: cfg.amplitude,
        audit,
        rows,
    })
}

/// Every `(γ, θ)` of the standard grid at the standard `τ` values.
pub fn standard_grid_compare() -> Result<Vec<CompareReport>, CompareError> {
    let cells: Vec<(f64, f64)> = STANDARD_GAMMAS
        .iter()
        .flat_map(|&g| STANDARD_THETAS.iter().map(move |&t| (g, t)))
        .collect();
    cells
        .par_iter()
        .map(|&(gamma, theta)| {
            let amp = CoherentAmplitude::new(gamma, theta)?;
            oracle_compare(&CompareConfig::new(amp, STANDARD_TAUS.to_vec()))
        })
        .collect()
}
