//! Structural invariants of the distribution pairings.

use std::f64::consts::PI;

use proptest::prelude::*;
use tempered_polylog::pairing::quadrature::{integrate, Tolerance};
use tempered_polylog::pairing::{
    pair_direct, pair_eta, pair_gamma_plus, pair_li, profile, profile_order, verify_fourier_gamma,
    verify_functional_equation, Cutoff, EtaSide, TestFunction,
};
use tempered_polylog::{Complex64, Order};

fn probes() -> Vec<TestFunction> {
    vec![
        TestFunction::standard(),
        TestFunction::new(0.3, 0.8, &[1.0, -0.5, 0.25]).unwrap(),
        TestFunction::hermite(-0.4, 1.2, 3).unwrap(),
        TestFunction::new(-1.0, 0.6, &[0.2, 0.0, 1.0, 0.3]).unwrap(),
    ]
}

#[test]
fn cutoff_independence() {
    let wide = Cutoff::default();
    let narrow = Cutoff::new(0.3, 0.8).unwrap();
    for f in probes().iter().take(2) {
        for s in [0.0, 0.5, 1.0, 2.5] {
            let s = Order::real(s);
            let a = pair_li(s, f, wide).unwrap().value;
            let b = pair_li(s, f, narrow).unwrap().value;
            assert!((a - b).norm() < 1e-8, "s={s}: {a} vs {b}");
        }
    }
}

#[test]
fn pairing_is_entire_in_the_order() {
    let f = TestFunction::new(0.2, 0.9, &[1.0, 0.3]).unwrap();
    let chi = Cutoff::default();
    for s0 in [0.0, 1.0, 2.0] {
        let centre = pair_li(Order::real(s0), &f, chi).unwrap().value;
        let mean: Complex64 = (0..16)
            .map(|j| {
                let z = Complex64::new(s0, 0.0)
                    + Complex64::from_polar(0.3, 2.0 * PI * j as f64 / 16.0);
                pair_li(Order::from(z), &f, chi).unwrap().value
            })
            .sum::<Complex64>()
            / 16.0;
        assert!(
            (mean - centre).norm() < 1e-8,
            "s0={s0}: mean {mean} vs {centre}"
        );
    }
}

#[test]
fn profile_decay_class() {
    let f = TestFunction::new(0.5, 1.0, &[1.0, 0.2]).unwrap();
    let grid: Vec<f64> = (0..=20).map(|j| 40f64.powf(j as f64 / 20.0)).collect();
    for s in [
        Order::real(0.5),
        Order::real(-1.5),
        Order::new(2.5, 1.0).unwrap(),
    ] {
        let k = profile_order(s);
        // (1 + t)^8 |F(t)| is bounded and negligible in the tail
        let weighted: Vec<f64> = grid
            .iter()
            .map(|&t| (1.0 + t).powi(8) * profile(s, t, &f, k).unwrap().norm())
            .collect();
        let peak = weighted.iter().cloned().fold(0.0, f64::max);
        for (t, w) in grid.iter().zip(&weighted).filter(|(t, _)| **t >= 20.0) {
            assert!(
                *w <= 1e-8 * peak,
                "s={s} t={t}: weighted {w} vs peak {peak}"
            );
        }
        // |F(−t)| / (1 + t)^{k + Re s} stays bounded
        let growth: Vec<f64> = grid
            .iter()
            .map(|&t| profile(s, -t, &f, k).unwrap().norm() / (1.0 + t).powf(k as f64 + s.re))
            .collect();
        let cap = 10.0 * growth[0].max(1.0);
        for (t, g) in grid.iter().zip(&growth) {
            assert!(*g <= cap, "s={s} t=-{t}: {g} > {cap}");
        }
    }
}

#[test]
fn sokhotski_jump() {
    for f in probes() {
        let plus = pair_eta(Order::real(-1.0), EtaSide::Plus, &f)
            .unwrap()
            .value;
        let minus = pair_eta(Order::real(-1.0), EtaSide::Minus, &f)
            .unwrap()
            .value;
        let want = Complex64::new(0.0, -2.0 * PI) * f.eval(0.0);
        assert!(
            (plus - minus - want).norm() < 1e-9,
            "{} vs {want}",
            plus - minus
        );
    }
}

#[test]
fn eta_matches_epsilon_extrapolated_quadrature() {
    let f = TestFunction::new(-0.3, 1.0, &[1.0, 0.4]).unwrap();
    let a = Complex64::new(-0.5, 0.0);
    let mut br: Vec<f64> = vec![-12.0, -1.0, -0.1, -1e-2, -1e-3, -1e-4, -1e-5, -1e-6];
    br.push(0.0);
    br.extend(br.clone().iter().rev().skip(1).map(|x| -x));
    let tol = Tolerance {
        max_panels: 20000,
        ..Tolerance::new(1e-15, 1e-13)
    };
    let at = |eps: f64| {
        integrate(
            |x| Ok((a * Complex64::new(x, -eps).ln()).exp() * f.eval(x)),
            &br,
            tol,
        )
        .unwrap()
        .value
    };
    // error expansion in powers ε^{1/2}, ε
    let v: Vec<Complex64> = [1e-3, 1e-4, 1e-5].iter().map(|&e| at(e)).collect();
    let r = 10f64.sqrt();
    let l1: Vec<Complex64> = v
        .windows(2)
        .map(|w| (w[1] * r - w[0]) / (r - 1.0))
        .collect();
    let limit = (l1[1] * 10.0 - l1[0]) / 9.0;
    let got = pair_eta(Order::from(a), EtaSide::Minus, &f).unwrap().value;
    assert!((got - limit).norm() < 1e-7, "{got} vs {limit}");
}

#[test]
fn direct_and_distributional_pairings_agree() {
    let chi = Cutoff::default();
    for f in probes() {
        for s in [
            Order::real(0.5),
            Order::real(1.0),
            Order::real(2.0),
            Order::new(1.5, 0.8).unwrap(),
        ] {
            let a = pair_li(s, &f, chi).unwrap().value;
            let b = pair_direct(s, &f).unwrap().value;
            assert!((a - b).norm() < 1e-7, "s={s}: {a} vs {b}");
        }
    }
}

#[test]
fn functional_equation_on_hermite_probes() {
    let chi = Cutoff::default();
    for f in probes() {
        for s in [-1.5, 0.5, 1.0, 2.5] {
            let r = verify_functional_equation(Order::real(s), &f, chi).unwrap();
            assert!(r < 1e-7, "s={s}: residual {r}");
        }
    }
}

#[test]
fn fourier_identity_on_hermite_probes() {
    for f in probes() {
        for s in [-1.5, 0.5, 1.0, 3.0] {
            let r = verify_fourier_gamma(Order::real(s), &f).unwrap();
            assert!(r < 1e-8, "s={s}: residual {r}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn gamma_plus_obeys_the_derivative_rule(re in -2.5f64..3.0, im in -1.0f64..1.0, mu in -1.0f64..1.0) {
        // ⟨γ₊^{s−1}, f⟩ = −⟨γ₊ˢ, f′⟩
        let f = TestFunction::new(mu, 0.9, &[1.0, 0.3]).unwrap();
        let s = Order::new(re, im).unwrap();
        let a = pair_gamma_plus(s.shift(-1.0), &f).unwrap().value;
        let b = pair_gamma_plus(s, &f.derivative().unwrap()).unwrap().value;
        prop_assert!((a + b).norm() < 1e-9 * (1.0 + a.norm()));
    }

    #[test]
    fn profile_does_not_depend_on_the_integration_order(re in -1.5f64..2.5, t in -3.0f64..3.0) {
        let f = TestFunction::new(0.2, 1.1, &[0.5, 1.0]).unwrap();
        let s = Order::real(re);
        let k = profile_order(s);
        let a = profile(s, t, &f, k).unwrap();
        let b = profile(s, t, &f, k + 1).unwrap();
        prop_assert!((a - b).norm() < 1e-10 * a.norm().max(1.0));
    }
}
