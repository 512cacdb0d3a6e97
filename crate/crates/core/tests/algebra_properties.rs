use gupsqueeze::boson::{
    bch_series, deformed_hamiltonian, exact_real, exact_to_f64, normal_order, Coefficient, ExactCoefficient,
    ExactComplex, Monomial, OperatorPolynomial,
};
use gupsqueeze::fock::{ladder_ops, FockOperator, FockSpace};
use gupsqueeze::Complex64;
use nalgebra::DMatrix;
use num::Zero;
use proptest::prelude::*;

type Poly = OperatorPolynomial<ExactCoefficient>;

fn small_rational() -> impl Strategy<Value = ExactComplex> {
    (-4i64..=4, -4i64..=4, 1i64..=3).prop_map(|(re, im, den)| {
        let mut z = exact_real(re, den);
        z.im = exact_real(im, den).re;
        z
    })
}

fn coefficient(first_order: bool) -> impl Strategy<Value = ExactCoefficient> {
    (small_rational(), small_rational()).prop_map(move |(c0, c1)| {
        if first_order {
            ExactCoefficient::new(c0, c1)
        } else {
            ExactCoefficient::new(c0, ExactComplex::zero())
        }
    })
}

fn polynomial_with(first_order: bool) -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u32..=3, 0u32..=3), coefficient(first_order)), 1..4)
        .prop_map(|terms| Poly::from_terms(terms.into_iter().map(|((m, n), c)| (Monomial::new(m, n), c))))
}

fn polynomial() -> impl Strategy<Value = Poly> {
    polynomial_with(true)
}

fn pure_first_order() -> impl Strategy<Value = Poly> {
    polynomial_with(true).prop_map(|p| {
        p.map_coefficients(|c| ExactCoefficient::new(ExactComplex::zero(), c.order1.clone()))
    })
}

fn scalar() -> impl Strategy<Value = ExactCoefficient> {
    coefficient(true)
}

/// `Σ c · a†^m aⁿ` on a truncated space, `g⁰` parts only.
fn to_matrix(p: &Poly, space: FockSpace) -> DMatrix<Complex64> {
    let (a, adag) = ladder_ops(space);
    let mut out = FockOperator::identity(space).scaled_real(0.0);
    for (m, c) in p.terms() {
        let op = &adag.pow(m.dagger_power) * &a.pow(m.annihilation_power);
        out = &out + &op.scaled(exact_to_f64(&c.order0));
    }
    out.into_matrix()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn commutator_is_antisymmetric(p in polynomial(), q in polynomial()) {
        prop_assert_eq!(p.commutator(&q), q.commutator(&p).negated());
        prop_assert!(p.commutator(&p).is_zero());
    }

    #[test]
    fn commutator_is_bilinear(p in polynomial(), q in polynomial(), r in polynomial(), s in scalar()) {
        let left = p.scaled(&s).sum(&q).commutator(&r);
        let right = p.commutator(&r).scaled(&s).sum(&q.commutator(&r));
        prop_assert_eq!(left, right);
        let left = r.commutator(&p.sum(&q.scaled(&s)));
        let right = r.commutator(&p).sum(&r.commutator(&q).scaled(&s));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn jacobi_identity(p in polynomial_with(false), q in polynomial_with(false), r in polynomial_with(false)) {
        let total = p.commutator(&q.commutator(&r))
            .sum(&q.commutator(&r.commutator(&p)))
            .sum(&r.commutator(&p.commutator(&q)));
        prop_assert!(total.is_zero());
    }

    #[test]
    fn jacobi_identity_with_first_order_parts(p in polynomial(), q in polynomial(), r in polynomial()) {
        let total = p.commutator(&q.commutator(&r))
            .sum(&q.commutator(&r.commutator(&p)))
            .sum(&r.commutator(&p.commutator(&q)));
        prop_assert!(total.is_zero());
    }

    #[test]
    fn products_never_reach_second_order(p in pure_first_order(), q in pure_first_order()) {
        prop_assert!(p.product(&q).is_zero());
    }

    #[test]
    fn product_is_associative(p in polynomial(), q in polynomial(), r in polynomial()) {
        prop_assert_eq!(p.product(&q).product(&r), p.product(&q.product(&r)));
    }

    #[test]
    fn adjoint_reverses_products(p in polynomial(), q in polynomial()) {
        prop_assert_eq!(p.product(&q).adjoint(), q.adjoint().product(&p.adjoint()));
    }

    #[test]
    fn normal_ordering_matches_matrices(l in (0u32..=3, 0u32..=3), r in (0u32..=3, 0u32..=3)) {
        let space = FockSpace::new(20).unwrap();
        let (left, right) = (Monomial::new(l.0, l.1), Monomial::new(r.0, r.1));
        let ordered = to_matrix(&normal_order(left, right), space);
        let direct = to_matrix(&Poly::monomial(left, ExactCoefficient::one()), space)
            * to_matrix(&Poly::monomial(right, ExactCoefficient::one()), space);
        for col in 0..10 {
            for row in 0..20 {
                prop_assert!((ordered[(row, col)] - direct[(row, col)]).norm() < 1e-9,
                    "{left} * {right} at ({row}, {col})");
            }
        }
    }

    #[test]
    fn polynomial_products_match_matrices(p in polynomial_with(false), q in polynomial_with(false)) {
        let space = FockSpace::new(20).unwrap();
        let ordered = to_matrix(&p.product(&q), space);
        let direct = to_matrix(&p, space) * to_matrix(&q, space);
        for col in 0..10 {
            for row in 0..20 {
                prop_assert!((ordered[(row, col)] - direct[(row, col)]).norm() < 1e-8);
            }
        }
    }
}

#[test]
fn hamiltonian_is_hermitian() {
    let h = deformed_hamiltonian();
    assert_eq!(h.adjoint(), h);
}

#[test]
fn hermiticity_shadow_of_nested_commutators() {
    let h = deformed_hamiltonian();
    let from_a = bch_series(6, &h, &Poly::annihilation());
    let from_adag = bch_series(6, &h, &Poly::creation());
    for (ta, td) in from_a.iter().zip(&from_adag) {
        let expected = if ta.index % 2 == 0 { ta.body.adjoint() } else { ta.body.adjoint().negated() };
        assert_eq!(td.body, expected, "term {}", ta.index);
    }
}

#[test]
fn nested_bodies_stay_cubic() {
    let h = deformed_hamiltonian();
    for term in bch_series(8, &h, &Poly::annihilation()) {
        assert!(term.body.max_degree() <= 3, "term {} has degree {}", term.index, term.body.max_degree());
    }
}
