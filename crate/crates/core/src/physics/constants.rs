//! CODATA 2018 values, SI units.

/// Reduced Planck constant, J·s.
pub const HBAR: f64 = 1.054_571_817e-34;
/// Electron rest mass, kg.
pub const ELECTRON_MASS: f64 = 9.109_383_701_5e-31;
/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
/// Planck mass, kg.
pub const PLANCK_MASS: f64 = 2.176_434e-8;
/// `M_Pl·c`, kg·m/s.
pub const PLANCK_MOMENTUM: f64 = PLANCK_MASS * SPEED_OF_LIGHT;

/// Largest deformation considered in the electron example, (kg·m/s)⁻².
pub const ELECTRON_EXAMPLE_BETA: f64 = 2.434_78e48;
/// Experimental upper bound on the dimensionless `β₀`.
pub const BETA0_UPPER_BOUND: f64 = 1e50;
/// Cyclotron frequency scale of the electron example, 10³ GHz.
pub const ELECTRON_EXAMPLE_FREQUENCY: f64 = 1e12;
