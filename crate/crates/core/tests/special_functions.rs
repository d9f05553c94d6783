use std::f64::consts::PI;

use hextree::asymptotics::{
    asym_mean_register, complex_gamma, complex_ln_gamma, count_relative_error, fluctuation_bound, fluctuation_psi,
    riemann_zeta, smooth_mean_register, AsymptoticParams, SpecialFunctionError,
};
use hextree::enumerate::count_ub_closed;
use hextree::register::mean_register;
use num_complex::Complex64;
use proptest::prelude::*;

fn close(a: Complex64, b: Complex64, rel: f64) -> bool {
    (a - b).norm() <= rel * b.norm().max(1e-300)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn gamma_reflection(re in -2.9f64..2.9, im in -8.0f64..8.0) {
        prop_assume!(im.abs() > 1e-3 || (re - re.round()).abs() > 1e-3);
        let s = Complex64::new(re, im);
        let lhs = complex_gamma(s).unwrap() * complex_gamma(1.0 - s).unwrap();
        let rhs = PI / (s * PI).sin();
        prop_assert!(close(lhs, rhs, 1e-9), "s={s}: {lhs} vs {rhs}");
    }

    #[test]
    fn ln_gamma_agrees_with_gamma(re in 0.1f64..6.0, im in -5.0f64..5.0) {
        let s = Complex64::new(re, im);
        prop_assert!(close(complex_ln_gamma(s).unwrap().exp(), complex_gamma(s).unwrap(), 1e-10));
    }

    #[test]
    fn zeta_functional_equation(re in -4.0f64..5.0, im in 1.0f64..25.0) {
        // zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s)
        let s = Complex64::new(re, im);
        let rhs = Complex64::new(2.0, 0.0).powc(s)
            * Complex64::new(PI, 0.0).powc(s - 1.0)
            * (s * PI / 2.0).sin()
            * complex_gamma(1.0 - s).unwrap()
            * riemann_zeta(1.0 - s).unwrap();
        prop_assert!(close(riemann_zeta(s).unwrap(), rhs, 1e-8), "s={s}");
    }

    #[test]
    fn psi_is_periodic_and_bounded(x in -3.0f64..3.0, a in 0u64..4) {
        let psi = fluctuation_psi(x, a, 12);
        prop_assert!((psi - fluctuation_psi(x + 1.0, a, 12)).abs() < 1e-12);
        prop_assert!(psi.abs() <= fluctuation_bound(a, 12) + 1e-15);
    }
}

#[test]
fn gamma_known_values() {
    let half = complex_gamma(Complex64::new(0.5, 0.0)).unwrap();
    assert!((half.re - PI.sqrt()).abs() < 1e-13 && half.im.abs() < 1e-15);
    let mut factorial = 1.0;
    for n in 1..=15 {
        let g = complex_gamma(Complex64::new(n as f64, 0.0)).unwrap();
        assert!((g.re / factorial - 1.0).abs() < 1e-12, "Gamma({n})");
        factorial *= n as f64;
    }
    assert!(matches!(complex_gamma(Complex64::new(-3.0, 0.0)), Err(SpecialFunctionError::GammaPole(_))));
}

#[test]
fn gamma_modulus_on_the_imaginary_axis() {
    for k in 1..=4 {
        let chi = AsymptoticParams::chi(k);
        let t = chi.im;
        let expected = (PI / (t * (PI * t).sinh())).sqrt();
        let got = complex_gamma(chi).unwrap().norm();
        assert!((got / expected - 1.0).abs() < 1e-9, "k={k}: {got} vs {expected}");
    }
}

#[test]
fn zeta_known_values() {
    let cases = [
        (2.0, PI * PI / 6.0),
        (4.0, PI.powi(4) / 90.0),
        (0.0, -0.5),
        (-1.0, -1.0 / 12.0),
        (-3.0, 1.0 / 120.0),
        (-2.0, 0.0),
    ];
    for (s, want) in cases {
        let got = riemann_zeta(Complex64::new(s, 0.0)).unwrap();
        assert!((got.re - want).abs() < 1e-12 && got.im.abs() < 1e-12, "zeta({s}) = {got}");
    }
    // first nontrivial zero
    let rho = Complex64::new(0.5, 14.134_725_141_734_693);
    assert!(riemann_zeta(rho).unwrap().norm() < 1e-9);
    assert_eq!(riemann_zeta(Complex64::new(1.0, 0.0)), Err(SpecialFunctionError::ZetaPole));
}

#[test]
fn count_error_shrinks_like_one_over_n() {
    for a in 0..=3u64 {
        let errs: Vec<f64> = [50usize, 100, 200, 400, 800]
            .iter()
            .map(|&n| count_relative_error(n as u64, a, &count_ub_closed(n, a)))
            .collect();
        for pair in errs.windows(2) {
            assert!(pair[1].abs() < pair[0].abs(), "a={a}: {errs:?}");
            // halving, up to lower-order terms
            let ratio = pair[0] / pair[1];
            assert!((1.8..2.2).contains(&ratio), "a={a}: ratio {ratio}");
        }
    }
}

#[test]
fn register_expansion_tracks_exact_means() {
    for a in 0..=3u64 {
        for n in [300usize, 600] {
            let exact = mean_register(n, a).to_f64();
            let err = asym_mean_register(n as u64, a, 20) - exact;
            assert!(err.abs() < 0.02, "a={a} n={n}: {err}");
        }
    }
    // the periodic part is small but not negligible
    let wobble = asym_mean_register(1000, 1, 20) - smooth_mean_register(1000, 1);
    assert!(wobble.abs() > 1e-4 && wobble.abs() < fluctuation_bound(1, 20));
}
