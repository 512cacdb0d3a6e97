use nalgebra::{DMatrix, DVector};
use num::complex::Complex64;

use super::space::FockOperator;
use super::FockError;

/// Tolerance on `‖U†U − I‖_max`.
pub const UNITARITY_TOL: f64 = 1e-10;
/// Relative tolerance on `‖VΛV† − H‖_max / ‖H‖_max`.
pub const RECONSTRUCTION_TOL: f64 = 1e-10;

/// `H = V Λ V†` for a Hermitian operator.
#[derive(Clone, Debug)]
pub struct HermitianEigensystem {
    operator: FockOperator,
    eigenvalues: DVector<f64>,
    eigenvectors: DMatrix<Complex64>,
    reconstruction_error: f64,
}

impl HermitianEigensystem {
    pub fn new(h: &FockOperator) -> Result<Self, FockError> {
        let scale = h.max_abs().max(f64::MIN_POSITIVE);
        let defect = h.hermiticity_defect();
        if defect > 1e-12 * scale {
            return Err(FockError::NotHermitian { defect });
        }
        let eig = h
            .matrix()
            .clone()
            .try_symmetric_eigen(f64::EPSILON, 0)
            .ok_or(FockError::EigenFailure)?;
        let (vals, vecs) = (eig.eigenvalues, eig.eigenvectors);
        let lambda = DMatrix::from_diagonal(&vals.map(|v| Complex64::new(v, 0.0)));
        let rebuilt = &vecs * lambda * vecs.adjoint();
        let reconstruction_error = (rebuilt - h.matrix())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
            / scale;
        if reconstruction_error > RECONSTRUCTION_TOL {
            return Err(FockError::Reconstruction {
                error: reconstruction_error,
            });
        }
        // ascending order
        let mut order: Vec<usize> = (0..vals.len()).collect();
        order.sort_by(|&i, &j| vals[i].total_cmp(&vals[j]));
        let eigenvalues = DVector::from_iterator(vals.len(), order.iter().map(|&i| vals[i]));
        let eigenvectors = DMatrix::from_columns(
            &order
                .iter()
                .map(|&i| vecs.column(i).into_owned())
                .collect::<Vec<_>>(),
        );
        Ok(Self {
            operator: h.clone(),
            eigenvalues,
            eigenvectors,
            reconstruction_error,
        })
    }

    pub fn eigenvalues(&self) -> &DVector<f64> {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &DMatrix<Complex64> {
        &self.eigenvectors
    }

    pub fn reconstruction_error(&self) -> f64 {
        self.reconstruction_error
    }

    pub fn operator(&self) -> &FockOperator {
        &self.operator
    }

    /// `U = e^{−iHt/ħ}`, checked for unitarity.
    pub fn propagator(&self, t: f64, hbar: f64) -> Result<FockOperator, FockError> {
        let phases = self
            .eigenvalues
            .map(|e| Complex64::new(0.0, -e * t / hbar).exp());
        let mut scaled = self.eigenvectors.clone();
        for (j, mut col) in scaled.column_iter_mut().enumerate() {
            col *= phases[j];
        }
        let u = &scaled * self.eigenvectors.adjoint();
        let defect = unitarity_defect(&u);
        if defect > UNITARITY_TOL {
            return Err(FockError::NonUnitary { defect });
        }
        Ok(FockOperator::wrap(self.operator.space(), u))
    }
}

pub fn unitarity_defect(u: &DMatrix<Complex64>) -> f64 {
    let n = u.nrows();
    (u.adjoint() * u - DMatrix::<Complex64>::identity(n, n))
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
}

/// `U† O U` with `U = e^{−iHt/ħ}`.
pub fn heisenberg_evolve(
    o: &FockOperator,
    h: &FockOperator,
    t: f64,
    hbar: f64,
) -> Result<FockOperator, FockError> {
    let u = HermitianEigensystem::new(h)?.propagator(t, hbar)?;
    Ok(&(&u.adjoint() * o) * &u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::PhysicalParams;
    use crate::fock::space::{canonical_xp, deformed_ops, hamiltonian, ladder_ops};
    use crate::fock::FockSpace;

    fn natural(g: f64) -> PhysicalParams {
        PhysicalParams::natural(g).unwrap()
    }

    #[test]
    fn canonical_spectrum() {
        let s = FockSpace::new(40).unwrap();
        let eig = HermitianEigensystem::new(&hamiltonian(s, &natural(0.0))).unwrap();
        for n in 0..20 {
            assert!(
                (eig.eigenvalues()[n] - (n as f64 + 0.5)).abs() < 1e-9,
                "level {n}"
            );
        }
    }

    #[test]
    fn quartic_term_raises_levels() {
        let s = FockSpace::new(80).unwrap();
        let e0 = HermitianEigensystem::new(&hamiltonian(s, &natural(0.0))).unwrap();
        let e1 = HermitianEigensystem::new(&hamiltonian(s, &natural(1e-3))).unwrap();
        for n in 0..10 {
            assert!(e1.eigenvalues()[n] > e0.eigenvalues()[n]);
        }
        // first-order shift of the ground level: (g/3)⟨0|p⁴|0⟩ = g/4
        assert!(((e1.eigenvalues()[0] - 0.5) / 1e-3 - 0.25).abs() < 1e-3);
    }

    #[test]
    fn rejects_non_hermitian() {
        let s = FockSpace::new(6).unwrap();
        let (a, _) = ladder_ops(s);
        assert!(matches!(
            HermitianEigensystem::new(&a),
            Err(FockError::NotHermitian { .. })
        ));
    }

    #[test]
    fn free_evolution_of_ladder() {
        let s = FockSpace::new(30).unwrap();
        let h = hamiltonian(s, &natural(0.0));
        let (a, _) = ladder_ops(s);
        assert!(
            heisenberg_evolve(&a, &h, 0.0, 1.0)
                .unwrap()
                .block_deviation(&a, 30)
                < 1e-12
        );
        let t = 1.3;
        let evolved = heisenberg_evolve(&a, &h, t, 1.0).unwrap();
        let expected = a.scaled(Complex64::new(0.0, -t).exp());
        assert!(evolved.block_deviation(&expected, s.trusted_block()) < 1e-10);
    }

    #[test]
    fn evolution_preserves_spectrum_and_hermiticity() {
        let s = FockSpace::new(30).unwrap();
        let params = natural(1e-2);
        let h = hamiltonian(s, &params);
        let (_, p_hat) = deformed_ops(s, &params);
        let evolved = heisenberg_evolve(&p_hat, &h, 2.0, 1.0).unwrap();
        assert!(evolved.hermiticity_defect() < 1e-10 * p_hat.max_abs());
        let before = HermitianEigensystem::new(&p_hat).unwrap();
        let sym = FockOperator::wrap(
            s,
            (evolved.matrix() + evolved.matrix().adjoint()) * Complex64::new(0.5, 0.0),
        );
        let after = HermitianEigensystem::new(&sym).unwrap();
        let scale = before.eigenvalues().amax();
        for (x, y) in before.eigenvalues().iter().zip(after.eigenvalues().iter()) {
            assert!((x - y).abs() < 1e-9 * scale.max(1.0));
        }
    }

    #[test]
    fn si_scale_propagator_is_unitary() {
        let params = PhysicalParams::new(9.1e-31, 1e12, 1.05e-34, 2.4e48).unwrap();
        let s = FockSpace::new(20).unwrap();
        let h = hamiltonian(s, &params);
        let u = HermitianEigensystem::new(&h)
            .unwrap()
            .propagator(3e-12, params.hbar())
            .unwrap();
        assert!(unitarity_defect(u.matrix()) < 1e-12);
        let (x, _) = canonical_xp(s, &params);
        assert!(x.is_hermitian(1e-15));
    }
}
