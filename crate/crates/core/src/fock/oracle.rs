use std::fmt;

use super::evolve::HermitianEigensystem;
use super::space::{deformed_ops, hamiltonian, quadratures, FockOperator, FockSpace};
use super::state::{variance_numeric, CoherentVector, StateVector};
use super::FockError;
use crate::analytic::{CoherentAmplitude, PhysicalParams};

/// Default step in `g` for central differences.
pub const DEFAULT_G_STEP: f64 = 1e-6;
/// Step-halving agreement required of a slope estimate.
pub const RICHARDSON_TOL: f64 = 1e-3;
/// Relative `N` vs `2N` deviation accepted by the truncation audit.
pub const AUDIT_TOL: f64 = 1e-6;

/// `N = ⌈|α|² + 10|α| + 30⌉`.
pub fn dimension_heuristic(gamma: f64) -> usize {
    (gamma * gamma + 10.0 * gamma + 30.0).ceil() as usize
}

/// Central-difference slope with a step-halving cross-check.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FirstOrderEstimate {
    pub slope: f64,
    pub half_step_slope: f64,
    pub step: f64,
}

impl FirstOrderEstimate {
    pub fn from_samples(step: f64, plus: f64, minus: f64, plus_half: f64, minus_half: f64) -> Self {
        Self {
            slope: (plus - minus) / (2.0 * step),
            half_step_slope: (plus_half - minus_half) / step,
            step,
        }
    }

    /// `|s(h) − s(h/2)| / max(|s(h)|, |s(h/2)|)`; zero when both vanish.
    pub fn relative_disagreement(&self) -> f64 {
        let scale = self.slope.abs().max(self.half_step_slope.abs());
        if scale == 0.0 {
            0.0
        } else {
            (self.slope - self.half_step_slope).abs() / scale
        }
    }

    pub fn converged(&self) -> bool {
        self.relative_disagreement() <= RICHARDSON_TOL
    }

    pub fn checked(self) -> Result<f64, FockError> {
        if self.converged() {
            Ok(self.slope)
        } else {
            Err(FockError::NonConvergent {
                slope: self.slope,
                half_step_slope: self.half_step_slope,
                step: self.step,
            })
        }
    }
}

/// `(f(h) − f(−h)) / 2h`, recomputed at `h/2`.
pub fn first_order_coefficient<E>(
    f: impl Fn(f64) -> Result<f64, E>,
    step: f64,
) -> Result<FirstOrderEstimate, E> {
    assert!(step > 0.0 && step.is_finite(), "step must be positive");
    Ok(FirstOrderEstimate::from_samples(
        step,
        f(step)?,
        f(-step)?,
        f(step / 2.0)?,
        f(-step / 2.0)?,
    ))
}

/// Observables compared against the closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quantity {
    VarX1,
    VarX2,
    VarXHat,
    VarPHat,
    Product,
}

impl Quantity {
    pub const ALL: [Quantity; 5] = [
        Quantity::VarX1,
        Quantity::VarX2,
        Quantity::VarXHat,
        Quantity::VarPHat,
        Quantity::Product,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Quantity::VarX1 => "var_X1",
            Quantity::VarX2 => "var_X2",
            Quantity::VarXHat => "var_x_hat",
            Quantity::VarPHat => "var_p_hat",
            Quantity::Product => "product",
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Oracle variances at one `(τ, α)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OracleVariances {
    pub var_x1: f64,
    pub var_x2: f64,
    pub var_x_hat: f64,
    pub var_p_hat: f64,
}

impl OracleVariances {
    pub fn product(&self) -> f64 {
        self.var_x_hat * self.var_p_hat
    }

    pub fn get(&self, q: Quantity) -> f64 {
        match q {
            Quantity::VarX1 => self.var_x1,
            Quantity::VarX2 => self.var_x2,
            Quantity::VarXHat => self.var_x_hat,
            Quantity::VarPHat => self.var_p_hat,
            Quantity::Product => self.product(),
        }
    }
}

/// Diagonalized Hamiltonian plus the observables, for one `(N, params)`.
#[derive(Clone, Debug)]
pub struct Oracle {
    params: PhysicalParams,
    eig: HermitianEigensystem,
    x1: FockOperator,
    x2: FockOperator,
    x_hat: FockOperator,
    p_hat: FockOperator,
}

impl Oracle {
    pub fn new(space: FockSpace, params: PhysicalParams) -> Result<Self, FockError> {
        let eig = HermitianEigensystem::new(&hamiltonian(space, &params))?;
        let (x1, x2) = quadratures(space);
        let (x_hat, p_hat) = deformed_ops(space, &params);
        Ok(Self {
            params,
            eig,
            x1,
            x2,
            x_hat,
            p_hat,
        })
    }

    pub fn space(&self) -> FockSpace {
        self.x1.space()
    }

    pub fn params(&self) -> &PhysicalParams {
        &self.params
    }

    pub fn eigensystem(&self) -> &HermitianEigensystem {
        &self.eig
    }

    /// `|ψ(τ)⟩` for `τ = ωt`.
    pub fn evolve(&self, amp: &CoherentAmplitude, tau: f64) -> Result<StateVector, FockError> {
        let u = self
            .eig
            .propagator(tau / self.params.omega(), self.params.hbar())?;
        CoherentVector::new(*amp, self.space()).evolved(&u)
    }

    pub fn variances(
        &self,
        amp: &CoherentAmplitude,
        tau: f64,
    ) -> Result<OracleVariances, FockError> {
        let psi = self.evolve(amp, tau)?;
        Ok(OracleVariances {
            var_x1: variance_numeric(&psi, &self.x1)?,
            var_x2: variance_numeric(&psi, &self.x2)?,
            var_x_hat: variance_numeric(&psi, &self.x_hat)?,
            var_p_hat: variance_numeric(&psi, &self.p_hat)?,
        })
    }
}

/// Slopes `∂/∂β` of every [`Quantity`] at `β = params.beta()` for each `τ`.
///
/// Four Hamiltonians are diagonalized once and shared across all `τ`.
pub fn variance_slopes(
    space: FockSpace,
    params: &PhysicalParams,
    amp: &CoherentAmplitude,
    taus: &[f64],
    beta_step: f64,
) -> Result<Vec<[FirstOrderEstimate; 5]>, FockError> {
    let b = params.beta();
    let oracles = [
        b + beta_step,
        b - beta_step,
        b + beta_step / 2.0,
        b - beta_step / 2.0,
    ]
    .map(|beta| Oracle::new(space, params.with_signed_beta(beta)));
    let [plus, minus, plus_half, minus_half] = oracles;
    let (plus, minus, plus_half, minus_half) = (plus?, minus?, plus_half?, minus_half?);
    taus.iter()
        .map(|&tau| {
            let v = [
                plus.variances(amp, tau)?,
                minus.variances(amp, tau)?,
                plus_half.variances(amp, tau)?,
                minus_half.variances(amp, tau)?,
            ];
            Ok(Quantity::ALL.map(|q| {
                FirstOrderEstimate::from_samples(
                    beta_step,
                    v[0].get(q),
                    v[1].get(q),
                    v[2].get(q),
                    v[3].get(q),
                )
            }))
        })
        .collect()
}

/// Outcome of rerunning the variance pipeline at `N` and `2N`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncationReport {
    pub dim: usize,
    pub max_relative_deviation: f64,
    pub truncation_loss: f64,
    /// Set when the audit refused to run.
    pub refusal: Option<String>,
}

impl TruncationReport {
    pub fn passed(&self) -> bool {
        self.refusal.is_none() && self.max_relative_deviation < AUDIT_TOL
    }
}

impl fmt::Display for TruncationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.refusal {
            Some(r) => write!(f, "truncation audit failed at N={}: {r}", self.dim),
            None => write!(
                f,
                "truncation audit at N={} vs {}: max relative deviation {:.3e} ({})",
                self.dim,
                2 * self.dim,
                self.max_relative_deviation,
                if self.passed() { "pass" } else { "fail" }
            ),
        }
    }
}

/// Compares all oracle variances at `N` and `2N` over `τ ∈ [0, τ_max]`
/// in natural units with strength `g`.
pub fn truncation_audit(
    space: FockSpace,
    amp: &CoherentAmplitude,
    g: f64,
    tau_max: f64,
) -> Result<TruncationReport, FockError> {
    let dim = space.dim();
    let loss = CoherentVector::new(*amp, space).truncation_loss();
    let occupation = amp.gamma() * amp.gamma();
    if occupation > dim as f64 / 4.0 {
        return Ok(TruncationReport {
            dim,
            max_relative_deviation: f64::INFINITY,
            truncation_loss: loss,
            refusal: Some(format!(
                "|alpha|^2 = {occupation} exceeds N/4 = {}; use N >= {}",
                dim as f64 / 4.0,
                dimension_heuristic(amp.gamma())
            )),
        });
    }
    let params = PhysicalParams::natural(0.0)
        .expect("natural units")
        .with_signed_beta(g);
    let small = Oracle::new(space, params)?;
    let large = Oracle::new(FockSpace::new(2 * dim)?, params)?;
    let mut worst: f64 = 0.0;
    for k in 0..=4 {
        let tau = tau_max * k as f64 / 4.0;
        let (a, b) = (small.variances(amp, tau)?, large.variances(amp, tau)?);
        for q in Quantity::ALL {
            let (x, y) = (a.get(q), b.get(q));
            worst = worst.max((x - y).abs() / y.abs().max(f64::MIN_POSITIVE));
        }
    }
    Ok(TruncationReport {
        dim,
        max_relative_deviation: worst,
        truncation_loss: loss,
        refusal: None,
    })
}
