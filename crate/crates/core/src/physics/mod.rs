//! Units, natural-unit reduction and the electron cyclotron preset.

pub mod constants;

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_4, TAU};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::analytic::{AnalyticError, CoherentAmplitude, PhysicalParams, VarianceRecord};
use crate::kv::{KvDocument, KvError};
use constants::{
    BETA0_UPPER_BOUND, ELECTRON_EXAMPLE_BETA, ELECTRON_EXAMPLE_FREQUENCY, ELECTRON_MASS, HBAR,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PhysicsError {
    #[error(transparent)]
    Kv(#[from] KvError),
    #[error(transparent)]
    Analytic(#[from] AnalyticError),
}

/// Whether quantities carry SI units or are reduced to `ħ = m = ω = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitSystem {
    Natural,
    Si,
}

impl UnitSystem {
    pub fn of(params: &PhysicalParams) -> Self {
        if params.hbar() == 1.0 && params.mass() == 1.0 && params.omega() == 1.0 {
            UnitSystem::Natural
        } else {
            UnitSystem::Si
        }
    }
}

/// How a quoted frequency `f` turns into `ω`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OmegaConvention {
    /// `ω = f`, the quoted number is already rad/s.
    #[default]
    Angular,
    /// `ω = 2πf`.
    Cyclic,
}

impl OmegaConvention {
    pub fn omega(&self, frequency: f64) -> f64 {
        match self {
            OmegaConvention::Angular => frequency,
            OmegaConvention::Cyclic => TAU * frequency,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            OmegaConvention::Angular => "angular",
            OmegaConvention::Cyclic => "cyclic",
        }
    }
}

impl FromStr for OmegaConvention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "angular" => Ok(OmegaConvention::Angular),
            "cyclic" => Ok(OmegaConvention::Cyclic),
            other => Err(format!("expected 'angular' or 'cyclic', got '{other}'")),
        }
    }
}

impl fmt::Display for OmegaConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Dimensionless strength plus the factors restoring units.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NaturalReduction {
    pub g: f64,
    /// `ħ/mω`
    pub length_sq: f64,
    /// `ħmω`
    pub momentum_sq: f64,
    /// `ħ²`
    pub action_sq: f64,
}

pub fn to_natural(params: &PhysicalParams) -> NaturalReduction {
    NaturalReduction {
        g: params.g(),
        length_sq: params.length_sq_scale(),
        momentum_sq: params.momentum_sq_scale(),
        action_sq: params.hbar() * params.hbar(),
    }
}

/// Restores units on a record computed with `PhysicalParams::natural(g)`.
pub fn from_natural(record: &VarianceRecord, params: &PhysicalParams) -> VarianceRecord {
    let r = to_natural(params);
    VarianceRecord {
        var_x_hat: record.var_x_hat * r.length_sq,
        var_p_hat: record.var_p_hat * r.momentum_sq,
        product: record.product * r.action_sq,
        gup_bound: record.gup_bound * r.action_sq,
        delta_x: record.delta_x * r.length_sq,
        delta_p: record.delta_p * r.momentum_sq,
        delta_product: record.delta_product * r.action_sq,
        ..*record
    }
}

/// Named parameter set with a coherent amplitude.
#[derive(Clone, Debug, PartialEq)]
pub struct Preset {
    pub name: String,
    pub params: PhysicalParams,
    pub amplitude: CoherentAmplitude,
    pub annotations: BTreeMap<String, String>,
}

/// Electron cyclotron motion: `ω_c` of order 10³ GHz, `α = e^{iπ/4}` and the
/// largest deformation compatible with the `β₀` bound. `β` is in
/// (kg·m/s)⁻².
pub fn electron_preset(convention: OmegaConvention) -> Preset {
    let params = PhysicalParams::new(
        ELECTRON_MASS,
        convention.omega(ELECTRON_EXAMPLE_FREQUENCY),
        HBAR,
        ELECTRON_EXAMPLE_BETA,
    )
    .expect("positive constants");
    let amplitude = CoherentAmplitude::new(1.0, FRAC_PI_4).expect("unit amplitude");
    let annotations = BTreeMap::from([
        ("n".to_string(), "2".to_string()),
        (
            "omega_convention".to_string(),
            convention.as_str().to_string(),
        ),
    ]);
    Preset {
        name: "electron".into(),
        params,
        amplitude,
        annotations,
    }
}

const KEYS: [&str; 7] = ["name", "mass", "omega", "hbar", "beta", "gamma", "theta"];

impl Preset {
    pub fn g(&self) -> f64 {
        self.params.g()
    }

    pub fn beta0(&self) -> f64 {
        self.params.beta0()
    }

    pub fn honors_beta0_bound(&self) -> bool {
        self.beta0() < BETA0_UPPER_BOUND
    }

    pub fn min_length(&self) -> f64 {
        self.params.min_length()
    }

    /// Flat document: the seven keys above, `annotation.*`, and read-only
    /// `derived.*` values that are ignored on load.
    pub fn to_kv(&self) -> String {
        let p = &self.params;
        let mut out = String::new();
        out.push_str(&format!("name = {}\n", self.name));
        for (k, v) in [
            ("mass", p.mass()),
            ("omega", p.omega()),
            ("hbar", p.hbar()),
            ("beta", p.beta()),
            ("gamma", self.amplitude.gamma()),
            ("theta", self.amplitude.theta()),
        ] {
            out.push_str(&format!("{k} = {v:e}\n"));
        }
        for (k, v) in &self.annotations {
            out.push_str(&format!("annotation.{k} = {v}\n"));
        }
        for (k, v) in [
            ("g", self.g()),
            ("beta0", self.beta0()),
            ("min_length", self.min_length()),
        ] {
            out.push_str(&format!("derived.{k} = {v:e}\n"));
        }
        out
    }

    pub fn from_kv(text: &str) -> Result<Self, PhysicsError> {
        let mut doc = KvDocument::parse(text)?;
        let name: String = doc.require(KEYS[0])?;
        let mut num = |k: &str| doc.require::<f64>(k);
        let (mass, omega, hbar, beta) = (num("mass")?, num("omega")?, num("hbar")?, num("beta")?);
        let (gamma, theta) = (num("gamma")?, num("theta")?);
        let annotations = doc.take_prefixed("annotation.").into_iter().collect();
        doc.take_prefixed("derived.");
        doc.finish()?;
        Ok(Self {
            name,
            params: PhysicalParams::new(mass, omega, hbar, beta)?,
            amplitude: CoherentAmplitude::new(gamma, theta)?,
            annotations,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::variance_record;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
    }

    #[test]
    fn electron_preset_values() {
        let p = electron_preset(OmegaConvention::Angular);
        assert_eq!(p.amplitude.gamma(), 1.0);
        assert_eq!(p.amplitude.theta(), FRAC_PI_4);
        assert_eq!(p.params.beta(), 2.43478e48);
        assert_eq!(p.annotations["n"], "2");
        let g = p.g();
        assert!(g.is_finite() && g > 0.0);
        assert!(rel(g, 2.3389e-4) < 1e-3, "{g}");
        let cyc = electron_preset(OmegaConvention::Cyclic);
        assert!(rel(cyc.g(), TAU * g) < 1e-14);
    }

    #[test]
    fn natural_reduction() {
        let n = to_natural(&PhysicalParams::natural(0.001).unwrap());
        assert_eq!(n.g, 0.001);
        assert_eq!(
            UnitSystem::of(&PhysicalParams::natural(0.0).unwrap()),
            UnitSystem::Natural
        );
        assert_eq!(
            UnitSystem::of(&electron_preset(OmegaConvention::Angular).params),
            UnitSystem::Si
        );
    }

    #[test]
    fn restoring_units_matches_direct_si() {
        let p = electron_preset(OmegaConvention::Angular);
        for tau in [0.1, 1.0, 5.0] {
            let direct = variance_record(tau, &p.amplitude, &p.params).unwrap();
            let nat = variance_record(tau, &p.amplitude, &PhysicalParams::natural(p.g()).unwrap())
                .unwrap();
            let back = from_natural(&nat, &p.params);
            for (a, b) in [
                (back.var_x_hat, direct.var_x_hat),
                (back.var_p_hat, direct.var_p_hat),
                (back.product, direct.product),
                (back.gup_bound, direct.gup_bound),
                (back.delta_x, direct.delta_x),
                (back.delta_p, direct.delta_p),
                (back.delta_product, direct.delta_product),
            ] {
                assert!(rel(a, b) < 1e-10, "{a} vs {b}");
            }
        }
    }

    #[test]
    fn kv_round_trip() {
        let p = electron_preset(OmegaConvention::Cyclic);
        let text = p.to_kv();
        assert!(text.contains("derived.g = "));
        let back = Preset::from_kv(&text).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn kv_rejects_unknown_keys() {
        let text = electron_preset(OmegaConvention::Angular).to_kv() + "colour = blue\n";
        let err = Preset::from_kv(&text).unwrap_err();
        assert!(err.to_string().contains("colour"));
        let text = electron_preset(OmegaConvention::Angular)
            .to_kv()
            .replace("hbar", "hbar_");
        assert!(Preset::from_kv(&text).is_err());
    }
}
