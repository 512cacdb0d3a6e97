use gupsqueeze::analytic::{
    second_moments, deformed_variances, first_order_slopes, momentum_variance_from_moments,
    quadrature_bracket, quadrature_variances, squeezing_deltas, uncertainty_product, variance_record,
};
use gupsqueeze::physics::{from_natural, to_natural};
use gupsqueeze::{CoherentAmplitude, PhysicalParams};
use proptest::prelude::*;

fn amplitude(max_gamma: f64) -> impl Strategy<Value = CoherentAmplitude> {
    (0.0..max_gamma, 0.0..std::f64::consts::TAU).prop_map(|(g, t)| CoherentAmplitude::new(g, t).unwrap())
}

fn si_params() -> impl Strategy<Value = PhysicalParams> {
    (-31.0f64..2.0, 0.0f64..13.0, -34.0f64..1.0, 1e-6f64..1e-2).prop_map(|(lm, lw, lh, g)| {
        let (m, w, h) = (10f64.powf(lm), 10f64.powf(lw), 10f64.powf(lh));
        PhysicalParams::new(m, w, h, g / (h * m * w)).unwrap()
    })
}

fn rel(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn formulas_are_real(tau in 0.0..20.0f64, amp in amplitude(10.0)) {
        let alpha = amp.alpha();
        prop_assert!(quadrature_bracket(tau, alpha).im.abs() < 1e-10);
        let b = second_moments(tau, 1.0, alpha);
        let scale = 1.0 + alpha.norm_sqr().powi(2) * (1.0 + tau);
        for z in [b.var_x1(), b.var_x2(), b.p_hat_sq] {
            prop_assert!(z.im.abs() < 1e-10 * scale, "{z}");
        }
        let params = PhysicalParams::natural(1e-9).unwrap();
        let v = deformed_variances(tau, &amp, &params).unwrap();
        prop_assert!(v.residual_imag < 1e-10);
    }

    #[test]
    fn canonical_limit_is_exact(tau in 0.0..20.0f64, amp in amplitude(5.0), params in si_params()) {
        let p0 = params.with_signed_beta(0.0);
        let v = deformed_variances(tau, &amp, &p0).unwrap();
        prop_assert_eq!(v.var_x_hat, p0.canonical_var_x());
        prop_assert_eq!(v.var_p_hat, p0.canonical_var_p());
        let u = uncertainty_product(tau, &amp, &p0).unwrap();
        prop_assert_eq!(u.product, p0.canonical_product());
        let q = quadrature_variances(tau, 0.0, &amp).unwrap();
        prop_assert_eq!((q.var_x1, q.var_x2), (0.25, 0.25));
    }

    #[test]
    fn product_meets_bound(tau in 0.0..10.0f64, amp in amplitude(3.0), g in 0.0..1e-2f64) {
        let u = uncertainty_product(tau, &amp, &PhysicalParams::natural(g).unwrap()).unwrap();
        prop_assert!((u.product - u.bound).abs() < 1e-12);
    }

    #[test]
    fn product_delta_floor(tau in 0.0..10.0f64, amp in amplitude(3.0), params in si_params()) {
        let d = squeezing_deltas(tau, &amp, &params).unwrap();
        let h = params.hbar();
        let floor = h * h * h * params.mass() * params.omega() * params.beta() / 4.0;
        prop_assert!(d.delta_product >= floor * (1.0 - 1e-12));
    }

    #[test]
    fn deltas_equal_variance_differences(tau in 0.0..10.0f64, amp in amplitude(3.0), g in 1e-6..1e-3f64) {
        let params = PhysicalParams::natural(g).unwrap();
        let r = variance_record(tau, &amp, &params).unwrap();
        prop_assert!((r.delta_x - (r.var_x_hat - 0.5)).abs() < 1e-12);
        prop_assert!((r.delta_p - (r.var_p_hat - 0.5)).abs() < 1e-12);
        prop_assert!((r.delta_product - (r.product - 0.25)).abs() < 1e-12);
    }

    #[test]
    fn position_variance_is_scaled_quadrature(tau in 0.0..10.0f64, amp in amplitude(3.0), params in si_params()) {
        let q = quadrature_variances(tau, params.g(), &amp).unwrap();
        let v = deformed_variances(tau, &amp, &params).unwrap();
        prop_assert!(rel(v.var_x_hat, 2.0 * params.length_sq_scale() * q.var_x1) < 1e-12);
    }

    #[test]
    fn momentum_variance_routes_agree(tau in 0.0..10.0f64, amp in amplitude(3.0), g in 1e-6..1e-3f64) {
        let direct = deformed_variances(tau, &amp, &PhysicalParams::natural(g).unwrap()).unwrap();
        let assembled = momentum_variance_from_moments(tau, g, amp.alpha());
        prop_assert!((direct.var_p_hat - assembled.re).abs() < 1e-12);
    }

    #[test]
    fn quadrature_product_is_second_order(tau in 0.1..6.0f64, amp in amplitude(2.0)) {
        let residual = |g: f64| {
            let q = quadrature_variances(tau, g, &amp).unwrap();
            q.var_x1 * q.var_x2 - 1.0 / 16.0
        };
        let g = 1e-3;
        let (r1, r2) = (residual(g), residual(g / 2.0));
        // exactly −(g B/16)² for the first-order formulas
        let b = quadrature_bracket(tau, amp.alpha()).re;
        prop_assert!((r1 + (g * b / 16.0).powi(2)).abs() < 1e-15);
        if r1.abs() > 1e-14 {
            prop_assert!((r1 / r2).abs().log2() >= 1.9);
        }
    }

    #[test]
    fn scale_covariance(tau in 0.0..10.0f64, amp in amplitude(3.0), params in si_params()) {
        let direct = variance_record(tau, &amp, &params).unwrap();
        let natural = variance_record(tau, &amp, &PhysicalParams::natural(to_natural(&params).g).unwrap()).unwrap();
        let back = from_natural(&natural, &params);
        for (a, b) in [
            (back.var_x_hat, direct.var_x_hat),
            (back.var_p_hat, direct.var_p_hat),
            (back.product, direct.product),
            (back.delta_x, direct.delta_x),
            (back.delta_p, direct.delta_p),
            (back.delta_product, direct.delta_product),
        ] {
            prop_assert!(rel(a, b) < 1e-10, "{a} vs {b}");
        }
    }

    #[test]
    fn slopes_are_first_order_coefficients(tau in 0.0..10.0f64, amp in amplitude(3.0)) {
        let s = first_order_slopes(tau, &amp);
        let g = 1e-4;
        let v = deformed_variances(tau, &amp, &PhysicalParams::natural(g).unwrap()).unwrap();
        prop_assert!((v.var_x_hat - 0.5 - g * s.var_x_hat).abs() < 1e-15);
        prop_assert!((v.var_p_hat - 0.5 - g * s.var_p_hat).abs() < 1e-15);
        prop_assert!((s.var_x1 + s.var_x2).abs() < 1e-15);
    }
}

#[test]
fn alpha_zero_product_is_time_independent() {
    let params = PhysicalParams::new(1.0, 1.0, 1.0, 1e-3).unwrap();
    let expected = 0.25 + 1e-3 / 4.0;
    for tau in [0.0, 1.0, 5.0, 19.0] {
        let u = uncertainty_product(tau, &CoherentAmplitude::vacuum(), &params).unwrap();
        assert!((u.product - expected).abs() < 1e-15);
    }
}
