//! Normal-ordered polynomials in a single bosonic mode.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::coefficient::{Coefficient, ExactCoefficient};

/// The normal-ordered monomial `a†^m a^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub dagger_power: u32,
    pub annihilation_power: u32,
}

impl Monomial {
    pub const IDENTITY: Monomial = Monomial::new(0, 0);
    pub const A: Monomial = Monomial::new(0, 1);
    pub const ADAG: Monomial = Monomial::new(1, 0);
    pub const A3: Monomial = Monomial::new(0, 3);
    pub const ADAG3: Monomial = Monomial::new(3, 0);
    pub const ADAG_A2: Monomial = Monomial::new(1, 2);
    pub const ADAG2_A: Monomial = Monomial::new(2, 1);

    pub const fn new(dagger_power: u32, annihilation_power: u32) -> Self {
        Self {
            dagger_power,
            annihilation_power,
        }
    }

    pub fn adjoint(self) -> Self {
        Self::new(self.annihilation_power, self.dagger_power)
    }

    pub fn degree(self) -> u32 {
        self.dagger_power + self.annihilation_power
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn factor(f: &mut fmt::Formatter<'_>, name: &str, power: u32) -> fmt::Result {
            match power {
                1 => write!(f, "{name}"),
                p => write!(f, "{name}^{p}"),
            }
        }
        let (m, n) = (self.dagger_power, self.annihilation_power);
        if m == 0 && n == 0 {
            return write!(f, "1");
        }
        if m > 0 {
            factor(f, "adag", m)?;
        }
        if m > 0 && n > 0 {
            write!(f, " ")?;
        }
        if n > 0 {
            factor(f, "a", n)?;
        }
        Ok(())
    }
}

fn binomial(n: u32, k: u32) -> u64 {
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * u64::from(n - i) / u64::from(i + 1))
}

fn factorial(n: u32) -> u64 {
    (1..=u64::from(n)).product()
}

/// Integer expansion of `(a†^{m₁} a^{n₁})(a†^{m₂} a^{n₂})` into normal-ordered
/// monomials, via `a^n a†^m = Σ_k C(n,k) C(m,k) k! a†^{m-k} a^{n-k}`.
pub(crate) fn reorder(left: Monomial, right: Monomial) -> Vec<(Monomial, u64)> {
    let (m1, n1) = (left.dagger_power, left.annihilation_power);
    let (m2, n2) = (right.dagger_power, right.annihilation_power);
    (0..=n1.min(m2))
        .map(|k| {
            let weight = binomial(n1, k) * binomial(m2, k) * factorial(k);
            (Monomial::new(m1 + m2 - k, n1 + n2 - k), weight)
        })
        .collect()
}

/// Sum of normal-ordered monomials with coefficients first-order in `g`.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq)]
pub struct OperatorPolynomial<C: Coefficient = ExactCoefficient> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> Default for OperatorPolynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> OperatorPolynomial<C> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(mono: Monomial, coefficient: C) -> Self {
        let mut p = Self::zero();
        p.add_term(mono, coefficient);
        p
    }

    pub fn identity() -> Self {
        Self::monomial(Monomial::IDENTITY, C::one())
    }

    /// The annihilation operator `a`.
    pub fn annihilation() -> Self {
        Self::monomial(Monomial::A, C::one())
    }

    /// The creation operator `a†`.
    pub fn creation() -> Self {
        Self::monomial(Monomial::ADAG, C::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (mono, c) in terms {
            p.add_term(mono, c);
        }
        p
    }

    /// Adds `coefficient · mono`, pruning the entry if it cancels.
    pub fn add_term(&mut self, mono: Monomial, coefficient: C) {
        if coefficient.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(existing) => {
                let sum = existing.plus(&coefficient);
                if sum.is_zero() {
                    self.terms.remove(&mono);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(mono, coefficient);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: Monomial) -> Option<&C> {
        self.terms.get(&mono)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn scaled(&self, factor: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (*m, c.times(factor))))
    }

    pub fn negated(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (*m, c.negated())))
    }

    /// Hermitian adjoint: `a†^m a^n → a†^n a^m` with conjugated coefficients.
    pub fn adjoint(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.adjoint(), c.conjugate())))
    }

    pub fn map_coefficients<D: Coefficient, F: Fn(&C) -> D>(&self, f: F) -> OperatorPolynomial<D> {
        OperatorPolynomial::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.negated());
        }
        out
    }

    /// Normal-ordered product, truncated at first order in `g`.
    pub fn product(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ml, cl) in &self.terms {
            for (mr, cr) in &other.terms {
                let c = cl.times(cr);
                if c.is_zero() {
                    continue;
                }
                for (mono, weight) in reorder(*ml, *mr) {
                    out.add_term(mono, c.times_integer(weight));
                }
            }
        }
        out
    }

    pub fn pow(&self, exponent: u32) -> Self {
        (0..exponent).fold(Self::identity(), |acc, _| acc.product(self))
    }

    /// `PQ − QP`, normal-ordered and truncated at first order in `g`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.product(other).difference(&other.product(self))
    }
}

/// Normal-ordered expansion of `(a†^{m₁} a^{n₁})(a†^{m₂} a^{n₂})`.
pub fn normal_order(left: Monomial, right: Monomial) -> OperatorPolynomial<ExactCoefficient> {
    OperatorPolynomial::from_terms(
        reorder(left, right)
            .into_iter()
            .map(|(m, w)| (m, ExactCoefficient::one().times_integer(w))),
    )
}

/// `[P, Q] = PQ − QP`.
pub fn commutator<C: Coefficient>(
    p: &OperatorPolynomial<C>,
    q: &OperatorPolynomial<C>,
) -> OperatorPolynomial<C> {
    p.commutator(q)
}

impl<C: Coefficient> Add for &OperatorPolynomial<C> {
    type Output = OperatorPolynomial<C>;
    fn add(self, rhs: Self) -> Self::Output {
        self.sum(rhs)
    }
}

impl<C: Coefficient> Sub for &OperatorPolynomial<C> {
    type Output = OperatorPolynomial<C>;
    fn sub(self, rhs: Self) -> Self::Output {
        self.difference(rhs)
    }
}

impl<C: Coefficient> Mul for &OperatorPolynomial<C> {
    type Output = OperatorPolynomial<C>;
    fn mul(self, rhs: Self) -> Self::Output {
        self.product(rhs)
    }
}

impl<C: Coefficient> Neg for &OperatorPolynomial<C> {
    type Output = OperatorPolynomial<C>;
    fn neg(self) -> Self::Output {
        self.negated()
    }
}

impl fmt::Display for OperatorPolynomial<ExactCoefficient> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{c}] {m}")?;
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for OperatorPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boson::coefficient::{exact_real, GupOrder};

    type Poly = OperatorPolynomial<ExactCoefficient>;

    fn c0(num: i64, den: i64) -> ExactCoefficient {
        ExactCoefficient::rational(num, den, GupOrder::Zeroth)
    }

    #[test]
    fn a_times_adag() {
        let p = normal_order(Monomial::A, Monomial::ADAG);
        let expected = Poly::from_terms([
            (Monomial::new(1, 1), c0(1, 1)),
            (Monomial::IDENTITY, c0(1, 1)),
        ]);
        assert_eq!(p, expected);
    }

    #[test]
    fn already_ordered_product_is_single_monomial() {
        let p = normal_order(Monomial::new(1, 1), Monomial::A);
        assert_eq!(p, Poly::monomial(Monomial::ADAG_A2, c0(1, 1)));
    }

    #[test]
    fn a2_adag2() {
        let p = normal_order(Monomial::new(0, 2), Monomial::new(2, 0));
        let expected = Poly::from_terms([
            (Monomial::new(2, 2), c0(1, 1)),
            (Monomial::new(1, 1), c0(4, 1)),
            (Monomial::IDENTITY, c0(2, 1)),
        ]);
        assert_eq!(p, expected);
    }

    #[test]
    fn number_operator_lowers() {
        let n = Poly::monomial(Monomial::new(1, 1), c0(1, 1));
        assert_eq!(
            n.commutator(&Poly::annihilation()),
            Poly::annihilation().negated()
        );
        assert_eq!(n.commutator(&Poly::creation()), Poly::creation());
    }

    #[test]
    fn canonical_commutator() {
        assert_eq!(
            Poly::annihilation().commutator(&Poly::creation()),
            Poly::identity()
        );
    }

    #[test]
    fn cancellation_prunes_entries() {
        let mut p = Poly::monomial(Monomial::A3, c0(1, 3));
        p.add_term(Monomial::A3, c0(-1, 3));
        assert!(p.is_zero());
        assert_eq!(p, Poly::zero());
    }

    #[test]
    fn difference_quartic_expansion() {
        // (a − a†)² = a² + a†² − 2a†a − 1
        let d = &Poly::annihilation() - &Poly::creation();
        let sq = d.pow(2);
        let expected = Poly::from_terms([
            (Monomial::new(0, 2), c0(1, 1)),
            (Monomial::new(2, 0), c0(1, 1)),
            (Monomial::new(1, 1), c0(-2, 1)),
            (Monomial::IDENTITY, c0(-1, 1)),
        ]);
        assert_eq!(sq, expected);
    }

    #[test]
    fn first_order_terms_do_not_square() {
        let p = Poly::monomial(Monomial::A, ExactCoefficient::order1(exact_real(1, 1)));
        assert!(p.product(&p).is_zero());
    }

    #[test]
    fn monomial_display() {
        assert_eq!(Monomial::IDENTITY.to_string(), "1");
        assert_eq!(Monomial::A.to_string(), "a");
        assert_eq!(Monomial::ADAG3.to_string(), "adag^3");
        assert_eq!(Monomial::ADAG2_A.to_string(), "adag^2 a");
        assert_eq!(Monomial::ADAG_A2.to_string(), "adag a^2");
    }
}
