use proptest::prelude::*;
use wigwell_core::{AsymmetricWellParams, Level, SymmetricWellParams, WellModel};

/// Largest `|V - ψ''/ψ - E|` over a 401-point scan of `[-L, L]`, restricted to
/// points where `|ψ| > 1e-3` of its peak. `ψ''` from the 5-point stencil.
fn local_energy_residual(model: &WellModel, level: Level) -> f64 {
    let h = 1e-3;
    let l = model.half_width();
    let xs: Vec<f64> = (0..=400).map(|i| -l + 2.0 * l * i as f64 / 400.0).collect();
    let peak = xs
        .iter()
        .fold(0.0f64, |m, &x| m.max(model.psi(level, x).abs()));
    let psi = |x: f64| model.psi(level, x);
    xs.iter()
        .filter(|&&x| psi(x).abs() > 1e-3 * peak)
        .map(|&x| {
            let second = (-psi(x + 2.0 * h) + 16.0 * psi(x + h) - 30.0 * psi(x)
                + 16.0 * psi(x - h)
                - psi(x - 2.0 * h))
                / (12.0 * h * h);
            (model.potential(x) - second / psi(x) - model.energy(level)).abs()
        })
        .fold(0.0, f64::max)
}

fn count_sign_changes(values: &[f64]) -> usize {
    let peak = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let significant: Vec<f64> = values
        .iter()
        .copied()
        .filter(|v| v.abs() > 1e-6 * peak)
        .collect();
    significant
        .windows(2)
        .filter(|w| w[0].signum() != w[1].signum())
        .count()
}

#[test]
fn symmetric_reference_states_solve_schroedinger() {
    let model = WellModel::new(SymmetricWellParams::new(-1.0, -0.9).unwrap()).unwrap();
    for level in Level::BOTH {
        let r = local_energy_residual(&model, level);
        assert!(r < 1e-6, "{level:?}: {r}");
    }
}

#[test]
fn asymmetric_reference_states_solve_schroedinger() {
    let model = WellModel::new(AsymmetricWellParams::new(0.9, 1.0, 0.0, 1.0).unwrap()).unwrap();
    for level in Level::BOTH {
        let r = local_energy_residual(&model, level);
        assert!(r < 1e-6, "{level:?}: {r}");
    }
}

#[test]
fn pointwise_anchors() {
    let sym = WellModel::new(SymmetricWellParams::new(-1.0, -0.9).unwrap()).unwrap();
    assert!((sym.potential(0.0) + 0.2).abs() < 1e-10);
    let asym = WellModel::new(AsymmetricWellParams::new(0.9, 1.0, 0.0, 1.0).unwrap()).unwrap();
    assert!((asym.potential(0.0) - 0.7025).abs() < 1e-10);
    assert!((asym.chi(0.0).unwrap() - 0.45).abs() < 1e-10);
    assert!((asym.node() + 0.9f64.atanh()).abs() < 1e-10);
    assert!(asym.psi1(asym.node()).abs() < 1e-12);
}

#[test]
fn node_counts() {
    for model in [
        WellModel::new(SymmetricWellParams::new(-1.0, -0.5).unwrap()).unwrap(),
        WellModel::new(AsymmetricWellParams::new(-0.4, 1.5, 2.0, 3.0).unwrap()).unwrap(),
    ] {
        let l = model.half_width();
        let xs: Vec<f64> = (0..=2000)
            .map(|i| -l + 2.0 * l * i as f64 / 2000.0)
            .collect();
        let psi0: Vec<f64> = xs.iter().map(|&x| model.psi0(x)).collect();
        let psi1: Vec<f64> = xs.iter().map(|&x| model.psi1(x)).collect();
        assert_eq!(count_sign_changes(&psi0), 0);
        assert_eq!(count_sign_changes(&psi1), 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn symmetric_family_solves_schroedinger(e0 in -3.0f64..-0.2, frac in 0.05f64..0.95) {
        let e1 = e0 * (1.0 - frac);
        let model = WellModel::new(SymmetricWellParams::new(e0, e1).unwrap()).unwrap();
        for level in Level::BOTH {
            let r = local_energy_residual(&model, level);
            prop_assert!(r < 1e-5, "{:?} E0={} E1={}: {}", level, e0, e1, r);
        }
    }

    #[test]
    fn asymmetric_family_solves_schroedinger(
        alpha in -0.95f64..0.95,
        beta in 0.5f64..2.0,
        e0 in -2.0f64..2.0,
        delta_e in 0.2f64..6.0,
    ) {
        let model = WellModel::new(AsymmetricWellParams::new(alpha, beta, e0, delta_e).unwrap()).unwrap();
        for level in Level::BOTH {
            let r = local_energy_residual(&model, level);
            prop_assert!(r < 1e-5 * (1.0 + delta_e), "{:?}: {}", level, r);
        }
    }

    #[test]
    fn states_are_normalized(e0 in -2.0f64..-0.5, frac in 0.1f64..0.9) {
        let model = WellModel::new(SymmetricWellParams::new(e0, e0 * (1.0 - frac)).unwrap()).unwrap();
        let l = model.half_width();
        let n = 20001;
        let dx = 2.0 * l / (n - 1) as f64;
        for level in Level::BOTH {
            let norm: f64 = (0..n).map(|i| model.psi(level, -l + i as f64 * dx).powi(2)).sum::<f64>() * dx;
            prop_assert!((norm - 1.0).abs() < 1e-8, "{}", norm);
        }
        let overlap: f64 = (0..n).map(|i| {
            let x = -l + i as f64 * dx;
            model.psi0(x) * model.psi1(x)
        }).sum::<f64>() * dx;
        prop_assert!(overlap.abs() < 1e-8);
    }
}
