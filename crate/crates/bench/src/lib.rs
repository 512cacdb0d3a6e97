//! Shared inputs for the kernel benchmarks.

use std::f64::consts::FRAC_PI_4;

use gupsqueeze::scan::SweepConfig;
use gupsqueeze::CoherentAmplitude;

/// `α = e^{iπ/4}`, the amplitude of the electron preset.
pub fn unit_amplitude() -> CoherentAmplitude {
    CoherentAmplitude::new(1.0, FRAC_PI_4).expect("valid amplitude")
}

/// A `(τ, γ, θ, g)` grid with `n⁴` points inside the validity window.
pub fn sweep_grid(n: usize) -> SweepConfig {
    let text = format!("tau = 0:10:{n}\ngamma = 0:3:{n}\ntheta = 0:2pi:{n}\ng = 0:1e-2:{n}\n");
    SweepConfig::from_kv(&text).expect("valid sweep config")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build() {
        assert_eq!(sweep_grid(3).len(), 81);
        assert_eq!(unit_amplitude().gamma(), 1.0);
    }
}
