use std::ops::{Add, Mul, Sub};

use nalgebra::DMatrix;
use num::complex::Complex64;
use num::Zero;

use super::FockError;
use crate::analytic::PhysicalParams;

/// Span of `|0⟩ … |N−1⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FockSpace {
    dim: usize,
}

impl FockSpace {
    pub fn new(dim: usize) -> Result<Self, FockError> {
        if dim < 2 {
            return Err(FockError::DimensionTooSmall(dim));
        }
        Ok(Self { dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `⌈N/2⌉`, the block on which truncated operator identities hold.
    pub fn trusted_block(&self) -> usize {
        self.dim.div_ceil(2)
    }
}

/// Dense operator on a [`FockSpace`].
#[derive(Clone, Debug, PartialEq)]
pub struct FockOperator {
    space: FockSpace,
    matrix: DMatrix<Complex64>,
}

impl FockOperator {
    pub fn from_matrix(space: FockSpace, matrix: DMatrix<Complex64>) -> Result<Self, FockError> {
        if matrix.nrows() != space.dim() || matrix.ncols() != space.dim() {
            return Err(FockError::DimensionMismatch {
                expected: space.dim(),
                found: matrix.nrows().max(matrix.ncols()),
            });
        }
        Ok(Self { space, matrix })
    }

    pub(crate) fn wrap(space: FockSpace, matrix: DMatrix<Complex64>) -> Self {
        debug_assert_eq!(matrix.nrows(), space.dim());
        Self { space, matrix }
    }

    pub fn identity(space: FockSpace) -> Self {
        Self::wrap(space, DMatrix::identity(space.dim(), space.dim()))
    }

    pub fn space(&self) -> FockSpace {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.matrix
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.matrix[(row, col)]
    }

    pub fn adjoint(&self) -> Self {
        Self::wrap(self.space, self.matrix.adjoint())
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        Self::wrap(self.space, &self.matrix * factor)
    }

    pub fn scaled_real(&self, factor: f64) -> Self {
        self.scaled(Complex64::new(factor, 0.0))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::identity(self.space);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.matrix.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `max |A_ij − B_ij|` over the leading `block × block` corner.
    pub fn block_deviation(&self, other: &Self, block: usize) -> f64 {
        let k = block.min(self.dim());
        let mut worst: f64 = 0.0;
        for i in 0..k {
            for j in 0..k {
                worst = worst.max((self.matrix[(i, j)] - other.matrix[(i, j)]).norm());
            }
        }
        worst
    }

    pub fn hermiticity_defect(&self) -> f64 {
        (&self.matrix - self.matrix.adjoint())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect() <= tol * self.max_abs().max(1.0)
    }
}

impl<'a> Mul<&'a FockOperator> for &'a FockOperator {
    type Output = FockOperator;
    fn mul(self, rhs: &'a FockOperator) -> FockOperator {
        assert_eq!(self.space, rhs.space, "operators on different spaces");
        FockOperator::wrap(self.space, &self.matrix * &rhs.matrix)
    }
}

impl<'a> Add<&'a FockOperator> for &'a FockOperator {
    type Output = FockOperator;
    fn add(self, rhs: &'a FockOperator) -> FockOperator {
        assert_eq!(self.space, rhs.space, "operators on different spaces");
        FockOperator::wrap(self.space, &self.matrix + &rhs.matrix)
    }
}

impl<'a> Sub<&'a FockOperator> for &'a FockOperator {
    type Output = FockOperator;
    fn sub(self, rhs: &'a FockOperator) -> FockOperator {
        assert_eq!(self.space, rhs.space, "operators on different spaces");
        FockOperator::wrap(self.space, &self.matrix - &rhs.matrix)
    }
}

/// `a|n⟩ = √n|n−1⟩` and its adjoint.
pub fn ladder_ops(space: FockSpace) -> (FockOperator, FockOperator) {
    let n = space.dim();
    let mut a = DMatrix::<Complex64>::zeros(n, n);
    for k in 1..n {
        a[(k - 1, k)] = Complex64::new((k as f64).sqrt(), 0.0);
    }
    let a = FockOperator::wrap(space, a);
    let adag = a.adjoint();
    (a, adag)
}

/// Number operator `a†a`, exact (no truncation artefact).
pub fn number_op(space: FockSpace) -> FockOperator {
    let n = space.dim();
    FockOperator::wrap(
        space,
        DMatrix::from_fn(n, n, |i, j| {
            if i == j {
                Complex64::new(i as f64, 0.0)
            } else {
                Complex64::zero()
            }
        }),
    )
}

/// `x = √(ħ/2mω)(a + a†)`, `p = i√(ħmω/2)(a† − a)`.
pub fn canonical_xp(space: FockSpace, params: &PhysicalParams) -> (FockOperator, FockOperator) {
    let (a, adag) = ladder_ops(space);
    let x = (&a + &adag).scaled_real((params.length_sq_scale() / 2.0).sqrt());
    let p = (&adag - &a).scaled(Complex64::new(
        0.0,
        (params.momentum_sq_scale() / 2.0).sqrt(),
    ));
    (x, p)
}

/// `X₁ = (a + a†)/2`, `X₂ = (a − a†)/2i`.
pub fn quadratures(space: FockSpace) -> (FockOperator, FockOperator) {
    let (a, adag) = ladder_ops(space);
    let x1 = (&a + &adag).scaled_real(0.5);
    let x2 = (&a - &adag).scaled(Complex64::new(0.0, -0.5));
    (x1, x2)
}

/// Darboux map `x̂ = x`, `p̂ = p + (β/3)p³`. `β` may be negative.
pub fn deformed_ops(space: FockSpace, params: &PhysicalParams) -> (FockOperator, FockOperator) {
    let (x, p) = canonical_xp(space, params);
    let p3 = p.pow(3);
    let p_hat = &p + &p3.scaled_real(params.beta() / 3.0);
    (x, p_hat)
}

/// `H = p²/2m + mω²x²/2 + βp⁴/3m`.
pub fn hamiltonian(space: FockSpace, params: &PhysicalParams) -> FockOperator {
    let (x, p) = canonical_xp(space, params);
    let (m, w) = (params.mass(), params.omega());
    let p2 = &p * &p;
    let kinetic = p2.scaled_real(0.5 / m);
    let potential = (&x * &x).scaled_real(0.5 * m * w * w);
    let quartic = (&p2 * &p2).scaled_real(params.beta() / (3.0 * m));
    let h = &(&kinetic + &potential) + &quartic;
    // symmetrize away rounding asymmetry
    let sym = (&h.matrix + h.matrix.adjoint()) * Complex64::new(0.5, 0.0);
    FockOperator::wrap(space, sym)
}
