use nalgebra::DVector;
use num::complex::Complex64;

use super::space::{FockOperator, FockSpace};
use super::FockError;
use crate::analytic::CoherentAmplitude;

/// Variances below `−NEGATIVE_FLOOR` are reported as errors.
pub const NEGATIVE_FLOOR: f64 = 1e-12;

/// Truncated, renormalized coherent state.
#[derive(Clone, Debug, PartialEq)]
pub struct CoherentVector {
    amplitude: CoherentAmplitude,
    components: DVector<Complex64>,
    truncation_loss: f64,
}

impl CoherentVector {
    pub fn new(amplitude: CoherentAmplitude, space: FockSpace) -> Self {
        let alpha = amplitude.alpha();
        let mut c = Complex64::new((-alpha.norm_sqr() / 2.0).exp(), 0.0);
        let mut components = DVector::<Complex64>::zeros(space.dim());
        for n in 0..space.dim() {
            components[n] = c;
            c *= alpha / ((n + 1) as f64).sqrt();
        }
        let norm_sq = components.norm_squared();
        let truncation_loss = (1.0 - norm_sq).max(0.0);
        components /= Complex64::new(norm_sq.sqrt(), 0.0);
        Self {
            amplitude,
            components,
            truncation_loss,
        }
    }

    pub fn amplitude(&self) -> CoherentAmplitude {
        self.amplitude
    }

    pub fn components(&self) -> &DVector<Complex64> {
        &self.components
    }

    /// `1 − ‖ψ‖²` before renormalization.
    pub fn truncation_loss(&self) -> f64 {
        self.truncation_loss
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    /// `U|ψ⟩`.
    pub fn evolved(&self, propagator: &FockOperator) -> Result<StateVector, FockError> {
        StateVector::from(self).evolved(propagator)
    }
}

/// Plain normalized state vector.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    components: DVector<Complex64>,
}

impl StateVector {
    pub fn new(components: DVector<Complex64>) -> Self {
        Self { components }
    }

    pub fn components(&self) -> &DVector<Complex64> {
        &self.components
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn evolved(&self, propagator: &FockOperator) -> Result<StateVector, FockError> {
        check_dim(self.dim(), propagator)?;
        Ok(StateVector {
            components: propagator.matrix() * &self.components,
        })
    }
}

impl From<&CoherentVector> for StateVector {
    fn from(v: &CoherentVector) -> Self {
        StateVector {
            components: v.components.clone(),
        }
    }
}

pub trait AsState {
    fn state(&self) -> &DVector<Complex64>;
}

impl AsState for CoherentVector {
    fn state(&self) -> &DVector<Complex64> {
        &self.components
    }
}

impl AsState for StateVector {
    fn state(&self) -> &DVector<Complex64> {
        &self.components
    }
}

fn check_dim(dim: usize, o: &FockOperator) -> Result<(), FockError> {
    if dim != o.dim() {
        return Err(FockError::DimensionMismatch {
            expected: o.dim(),
            found: dim,
        });
    }
    Ok(())
}

/// `⟨ψ|O|ψ⟩`.
pub fn expect(state: &impl AsState, o: &FockOperator) -> Result<Complex64, FockError> {
    let psi = state.state();
    check_dim(psi.len(), o)?;
    Ok(psi.dotc(&(o.matrix() * psi)))
}

/// `⟨O²⟩ − ⟨O⟩²` for Hermitian `O`, computed as `‖Oψ‖² − ⟨ψ|Oψ⟩²`.
pub fn variance_numeric(state: &impl AsState, o: &FockOperator) -> Result<f64, FockError> {
    let psi = state.state();
    check_dim(psi.len(), o)?;
    let o_psi = o.matrix() * psi;
    let mean = psi.dotc(&o_psi).re;
    let var = o_psi.norm_squared() - mean * mean;
    if var < -NEGATIVE_FLOOR * (1.0 + mean * mean) {
        return Err(FockError::NegativeVariance(var));
    }
    Ok(var)
}
