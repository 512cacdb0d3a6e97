//! Coefficient rings for normal-ordered polynomials.
//!
//! Every coefficient is a first-order expansion `c0 + g·c1` in the
//! dimensionless deformation strength `g = ħmωβ`. Products drop the `g²`
//! part, so nothing above first order is ever stored.

use std::fmt;

use num::complex::Complex64;
use num::{BigInt, BigRational, Complex, One, Signed, Zero};

/// Exact complex rational, `re + i·im` with arbitrary-precision parts.
pub type ExactComplex = Complex<BigRational>;

/// Builds the exact rational `num / den`.
///
/// *Panics* if `den == 0`.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Real exact complex `num / den`.
pub fn exact_real(num: i64, den: i64) -> ExactComplex {
    Complex::new(ratio(num, den), BigRational::zero())
}

/// Lossy conversion of an exact complex to `f64` parts.
pub fn exact_to_f64(c: &ExactComplex) -> Complex64 {
    Complex64::new(rational_to_f64(&c.re), rational_to_f64(&c.im))
}

fn rational_to_f64(r: &BigRational) -> f64 {
    use num::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

fn exact_is_zero(c: &ExactComplex) -> bool {
    c.re.is_zero() && c.im.is_zero()
}

/// Order of the deformation strength `g` a coefficient component belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GupOrder {
    Zeroth,
    First,
}

/// Arithmetic a polynomial coefficient must support.
///
/// Multiplication is truncated at first order in `g`.
pub trait Coefficient: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn times_integer(&self, factor: u64) -> Self;
    fn conjugate(&self) -> Self;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
}

/// Exact coefficient `order0 + g·order1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactCoefficient {
    pub order0: ExactComplex,
    pub order1: ExactComplex,
}

impl ExactCoefficient {
    pub fn new(order0: ExactComplex, order1: ExactComplex) -> Self {
        Self { order0, order1 }
    }

    /// Pure `g⁰` coefficient.
    pub fn order0(value: ExactComplex) -> Self {
        Self::new(value, ExactComplex::zero())
    }

    /// Pure `g¹` coefficient.
    pub fn order1(value: ExactComplex) -> Self {
        Self::new(ExactComplex::zero(), value)
    }

    /// Real rational `num / den` at the given order.
    pub fn rational(num: i64, den: i64, order: GupOrder) -> Self {
        match order {
            GupOrder::Zeroth => Self::order0(exact_real(num, den)),
            GupOrder::First => Self::order1(exact_real(num, den)),
        }
    }

    pub fn at(&self, order: GupOrder) -> &ExactComplex {
        match order {
            GupOrder::Zeroth => &self.order0,
            GupOrder::First => &self.order1,
        }
    }

    /// Evaluates the coefficient at a numeric `g`.
    pub fn evaluate(&self, g: f64) -> Complex64 {
        exact_to_f64(&self.order0) + exact_to_f64(&self.order1) * g
    }
}

impl Coefficient for ExactCoefficient {
    fn zero() -> Self {
        Self::new(ExactComplex::zero(), ExactComplex::zero())
    }

    fn one() -> Self {
        Self::order0(ExactComplex::one())
    }

    fn is_zero(&self) -> bool {
        exact_is_zero(&self.order0) && exact_is_zero(&self.order1)
    }

    fn plus(&self, other: &Self) -> Self {
        Self::new(&self.order0 + &other.order0, &self.order1 + &other.order1)
    }

    fn negated(&self) -> Self {
        Self::new(-&self.order0, -&self.order1)
    }

    fn times(&self, other: &Self) -> Self {
        Self::new(
            &self.order0 * &other.order0,
            &self.order0 * &other.order1 + &self.order1 * &other.order0,
        )
    }

    fn times_integer(&self, factor: u64) -> Self {
        let f = Complex::new(
            BigRational::from_integer(BigInt::from(factor)),
            BigRational::zero(),
        );
        Self::new(&self.order0 * &f, &self.order1 * &f)
    }

    fn conjugate(&self) -> Self {
        Self::new(self.order0.conj(), self.order1.conj())
    }
}

fn fmt_exact(c: &ExactComplex, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match (c.re.is_zero(), c.im.is_zero()) {
        (_, true) => write!(f, "{}", c.re),
        (true, false) => write!(f, "{}i", c.im),
        (false, false) => {
            let sign = if c.im.is_negative() { '-' } else { '+' };
            write!(f, "({} {} {}i)", c.re, sign, c.im.abs())
        }
    }
}

impl fmt::Display for ExactCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (exact_is_zero(&self.order0), exact_is_zero(&self.order1)) {
            (true, true) => write!(f, "0"),
            (false, true) => fmt_exact(&self.order0, f),
            (true, false) => {
                write!(f, "g·")?;
                fmt_exact(&self.order1, f)
            }
            (false, false) => {
                fmt_exact(&self.order0, f)?;
                write!(f, " + g·")?;
                fmt_exact(&self.order1, f)
            }
        }
    }
}

impl fmt::Debug for ExactCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Floating-point coefficient `order0 + g·order1`, used for time-dependent
/// operator expansions evaluated at a fixed `τ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumericCoefficient {
    pub order0: Complex64,
    pub order1: Complex64,
}

impl NumericCoefficient {
    pub fn new(order0: Complex64, order1: Complex64) -> Self {
        Self { order0, order1 }
    }

    pub fn order0(value: Complex64) -> Self {
        Self::new(value, Complex64::zero())
    }

    pub fn order1(value: Complex64) -> Self {
        Self::new(Complex64::zero(), value)
    }

    pub fn evaluate(&self, g: f64) -> Complex64 {
        self.order0 + self.order1 * g
    }
}

impl From<&ExactCoefficient> for NumericCoefficient {
    fn from(c: &ExactCoefficient) -> Self {
        Self::new(exact_to_f64(&c.order0), exact_to_f64(&c.order1))
    }
}

impl Coefficient for NumericCoefficient {
    fn zero() -> Self {
        Self::new(Complex64::zero(), Complex64::zero())
    }

    fn one() -> Self {
        Self::order0(Complex64::one())
    }

    fn is_zero(&self) -> bool {
        self.order0.is_zero() && self.order1.is_zero()
    }

    fn plus(&self, other: &Self) -> Self {
        Self::new(self.order0 + other.order0, self.order1 + other.order1)
    }

    fn negated(&self) -> Self {
        Self::new(-self.order0, -self.order1)
    }

    fn times(&self, other: &Self) -> Self {
        Self::new(
            self.order0 * other.order0,
            self.order0 * other.order1 + self.order1 * other.order0,
        )
    }

    fn times_integer(&self, factor: u64) -> Self {
        let f = factor as f64;
        Self::new(self.order0 * f, self.order1 * f)
    }

    fn conjugate(&self) -> Self {
        Self::new(self.order0.conj(), self.order1.conj())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_drops_second_order() {
        let x = ExactCoefficient::new(exact_real(2, 1), exact_real(3, 1));
        let y = ExactCoefficient::new(exact_real(5, 1), exact_real(7, 1));
        let p = x.times(&y);
        assert_eq!(p.order0, exact_real(10, 1));
        // 2·7 + 3·5; the 3·7 g² part is gone
        assert_eq!(p.order1, exact_real(29, 1));
    }

    #[test]
    fn pure_first_order_squares_to_zero() {
        let x = ExactCoefficient::rational(1, 3, GupOrder::First);
        assert!(x.times(&x).is_zero());
    }

    #[test]
    fn display_is_readable() {
        let c = ExactCoefficient::new(exact_real(-1, 1), exact_real(1, 3));
        assert_eq!(c.to_string(), "-1 + g·1/3");
        assert_eq!(ExactCoefficient::zero().to_string(), "0");
    }

    #[test]
    fn numeric_matches_exact_conversion() {
        let c = ExactCoefficient::new(exact_real(1, 2), exact_real(-121, 3));
        let n = NumericCoefficient::from(&c);
        assert_eq!(n.order0, Complex64::new(0.5, 0.0));
        assert!((n.order1.re + 121.0 / 3.0).abs() < 1e-14);
        assert!((c.evaluate(0.25) - n.evaluate(0.25)).norm() < 1e-14);
    }
}
