//! Grid evaluations behind the figure and sweep commands, plus their CSV
//! layouts. Values are written with 17 significant digits.

use std::f64::consts::{PI, TAU};
use std::io::{self, Write};

use rayon::prelude::*;
use thiserror::Error;

use crate::analytic::{
    squeezing_region_scan, variance_record, AnalyticError, CoherentAmplitude, PhysicalParams,
    RegionScan, Validity, VarianceRecord,
};
use crate::grid::{Axis, GridError, Linspace};
use crate::kv::{KvDocument, KvError};
use crate::physics::Preset;

#[derive(Debug, Error)]
pub enum ScanError {
    #[error(transparent)]
    Analytic(#[from] AnalyticError),
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Config(#[from] KvError),
    #[error("could not build thread pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

pub fn default_tau_grid() -> Linspace {
    Linspace {
        start: 0.0,
        end: 4.0 * PI,
        count: 200,
    }
}

pub fn default_theta_grid() -> Linspace {
    Linspace {
        start: 0.0,
        end: TAU,
        count: 100,
    }
}

/// Runs `f` on a dedicated pool of `threads` workers, or on the global
/// pool when `None`.
pub fn with_threads<T: Send>(
    threads: Option<usize>,
    f: impl FnOnce() -> T + Send,
) -> Result<T, ScanError> {
    match threads {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| ScanError::ThreadPool(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

fn sci(v: f64) -> String {
    format!("{v:.16e}")
}

/// Which plotted bracket a surface shows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Surface {
    /// `(2/ħ²β)[(Δx̂)² − (Δx₀)²]`
    Position,
    /// `(4/ħ²m²ω²β)[(Δp̂)² − (Δp₀)²]`
    Momentum,
}

pub const SURFACE_HEADER: &str = "tau,theta,delta_scaled";

pub fn surface_values(scan: &RegionScan, which: Surface) -> &[f64] {
    match which {
        Surface::Position => &scan.x_scaled,
        Surface::Momentum => &scan.p_scaled,
    }
}

pub fn write_surface_csv<W: Write>(mut w: W, scan: &RegionScan, which: Surface) -> io::Result<()> {
    writeln!(w, "{SURFACE_HEADER}")?;
    let values = surface_values(scan, which);
    for (i, &tau) in scan.taus.iter().enumerate() {
        for (j, &theta) in scan.thetas.iter().enumerate() {
            writeln!(
                w,
                "{},{},{}",
                sci(tau),
                sci(theta),
                sci(values[scan.index(i, j)])
            )?;
        }
    }
    Ok(())
}

pub fn figure_surface(gamma: f64, tau: Linspace, theta: Linspace) -> Result<RegionScan, ScanError> {
    Ok(squeezing_region_scan(gamma, tau, theta)?)
}

/// One row of the time series of deformed against canonical variances.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TimeSeriesRow {
    pub tau: f64,
    pub var_x_deformed: f64,
    pub var_x_canonical: f64,
    pub var_p_deformed: f64,
    pub var_p_canonical: f64,
    pub product_deformed: f64,
    pub product_canonical: f64,
}

pub const TIME_SERIES_HEADER: &str =
    "tau,var_x_deformed,var_x_canonical,var_p_deformed,var_p_canonical,product_deformed,product_canonical";

pub fn variance_time_series(
    preset: &Preset,
    tau: Linspace,
) -> Result<Vec<TimeSeriesRow>, ScanError> {
    let tau = Linspace::resolved(tau.start, tau.end, tau.count)?;
    let p = &preset.params;
    tau.values()
        .into_par_iter()
        .map(|t| {
            let r = variance_record(t, &preset.amplitude, p)?;
            Ok(TimeSeriesRow {
                tau: t,
                var_x_deformed: r.var_x_hat,
                var_x_canonical: p.canonical_var_x(),
                var_p_deformed: r.var_p_hat,
                var_p_canonical: p.canonical_var_p(),
                product_deformed: r.product,
                product_canonical: p.canonical_product(),
            })
        })
        .collect()
}

pub fn write_time_series_csv<W: Write>(mut w: W, rows: &[TimeSeriesRow]) -> io::Result<()> {
    writeln!(w, "{TIME_SERIES_HEADER}")?;
    for r in rows {
        let cells = [
            r.tau,
            r.var_x_deformed,
            r.var_x_canonical,
            r.var_p_deformed,
            r.var_p_canonical,
            r.product_deformed,
            r.product_canonical,
        ];
        writeln!(w, "{}", cells.map(sci).join(","))?;
    }
    Ok(())
}

/// `(τ, γ, θ, g)` product grid; `g` is converted to `β = g/ħmω`.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub tau: Axis,
    pub gamma: Axis,
    pub theta: Axis,
    pub g: Axis,
    pub mass: f64,
    pub omega: f64,
    pub hbar: f64,
}

pub const SWEEP_KEYS: [&str; 7] = ["tau", "gamma", "theta", "g", "mass", "omega", "hbar"];

impl SweepConfig {
    /// Keys: `tau`, `gamma`, `theta`, `g` (axes) and optional `mass`,
    /// `omega`, `hbar` (default 1).
    pub fn from_kv(text: &str) -> Result<Self, ScanError> {
        let mut doc = KvDocument::parse(text)?;
        let cfg = Self {
            tau: doc.require("tau")?,
            gamma: doc.require("gamma")?,
            theta: doc.require("theta")?,
            g: doc.require("g")?,
            mass: doc.take("mass")?.unwrap_or(1.0),
            omega: doc.take("omega")?.unwrap_or(1.0),
            hbar: doc.take("hbar")?.unwrap_or(1.0),
        };
        doc.finish()?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), ScanError> {
        PhysicalParams::new(self.mass, self.omega, self.hbar, 0.0)?;
        for gamma in self.gamma.values() {
            CoherentAmplitude::new(gamma, 0.0)?;
        }
        for g in self.g.values() {
            if g.is_nan() || g < 0.0 {
                return Err(AnalyticError::InvalidParameter(format!(
                    "g must be non-negative, got {g}"
                ))
                .into());
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.tau.len() * self.gamma.len() * self.theta.len() * self.g.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub const SWEEP_HEADER: &str =
    "tau,gamma,theta,g,var_x_hat,var_p_hat,product,gup_bound,delta_x,delta_p,delta_product,validity";

/// Evaluates every grid point; refused points become NaN rows flagged
/// `refused`. Row order is lexicographic in `(τ, γ, θ, g)` indices.
pub fn sweep(cfg: &SweepConfig) -> Result<Vec<VarianceRecord>, ScanError> {
    cfg.validate()?;
    let (taus, gammas, thetas, gs) = (
        cfg.tau.values(),
        cfg.gamma.values(),
        cfg.theta.values(),
        cfg.g.values(),
    );
    let (nga, nth, ng) = (gammas.len(), thetas.len(), gs.len());
    (0..cfg.len())
        .into_par_iter()
        .map(|k| {
            let (ig, rest) = (k % ng, k / ng);
            let (ith, rest) = (rest % nth, rest / nth);
            let (iga, it) = (rest % nga, rest / nga);
            let (tau, gamma, theta, g) = (taus[it], gammas[iga], thetas[ith], gs[ig]);
            let amp = CoherentAmplitude::new(gamma, theta)?;
            let params = PhysicalParams::new(
                cfg.mass,
                cfg.omega,
                cfg.hbar,
                g / (cfg.hbar * cfg.mass * cfg.omega),
            )?;
            match variance_record(tau, &amp, &params) {
                Ok(r) => Ok(r),
                Err(AnalyticError::OutsideValidityWindow { .. }) => {
                    Ok(refused_record(tau, gamma, theta, params.g()))
                }
                Err(e) => Err(e.into()),
            }
        })
        .collect()
}

fn refused_record(tau: f64, gamma: f64, theta: f64, g: f64) -> VarianceRecord {
    let nan = f64::NAN;
    VarianceRecord {
        tau,
        gamma,
        theta,
        g,
        var_x_hat: nan,
        var_p_hat: nan,
        product: nan,
        gup_bound: nan,
        delta_x: nan,
        delta_p: nan,
        delta_product: nan,
        validity: Validity::Refused,
    }
}

pub fn write_sweep_csv<W: Write>(mut w: W, rows: &[VarianceRecord]) -> io::Result<()> {
    writeln!(w, "{SWEEP_HEADER}")?;
    for r in rows {
        let cells = [
            r.tau,
            r.gamma,
            r.theta,
            r.g,
            r.var_x_hat,
            r.var_p_hat,
            r.product,
            r.gup_bound,
            r.delta_x,
            r.delta_p,
            r.delta_product,
        ];
        writeln!(w, "{},{}", cells.map(sci).join(","), r.validity.as_str())?;
    }
    Ok(())
}
