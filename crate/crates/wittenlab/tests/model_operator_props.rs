//! Variational and structural properties of the half-line model operators.

use proptest::prelude::*;
use wittenlab::model_operators::*;
use wittenlab::numerics::rational::{rat, to_f64};
use wittenlab::numerics::Rational;

const GRID: [f64; 5] = [0.0, 0.25, 0.5, 1.0, 2.0];

#[test]
fn unperturbed_forms_are_exactly_diagonal() {
    for &sigma in &GRID {
        for &tau in &GRID {
            for &s in &[1.0, 2.0] {
                let spec = HalfLineOperatorSpec::w(s, 0.5, 0.0, 0.0, sigma, tau, 0.0).unwrap();
                let m = form_matrix(&spec, 20).unwrap();
                let idx = spec.basis_indices(20);
                for i in 0..40 {
                    let varsigma = if idx[i] % 2 == 0 { sigma } else { tau };
                    let expected = (2.0 * idx[i] as f64 + 1.0 + 2.0 * varsigma) * s;
                    assert!((m.get(i, i) - expected).abs() < 1e-10);
                    for j in 0..40 {
                        if i != j {
                            assert!(m.get(i, j).abs() < 1e-10);
                        }
                    }
                }
                let ritz = ritz_spectrum(&spec, 20).unwrap();
                let mut exact = exact_base_spectrum(sigma, tau, s, 40);
                exact.sort_by(f64::total_cmp);
                for (a, b) in ritz.eigenvalues.iter().zip(&exact) {
                    assert!((a - b).abs() < 1e-10);
                }
            }
        }
    }
}

#[test]
fn p_ritz_examples() {
    let spec = HalfLineOperatorSpec::p(1.0, 0.5, 1.0, 1.0).unwrap();
    let m = form_matrix(&spec, 10).unwrap();
    assert!((m.get(0, 0) - (3.0 + std::f64::consts::FRAC_2_SQRT_PI)).abs() < 1e-12);
    let ritz = ritz_spectrum(&spec, 40).unwrap();
    for (i, v) in ritz.eigenvalues.iter().enumerate() {
        assert!(*v > spec.base_value(2 * i));
    }
}

#[test]
fn growth_exponent_examples() {
    let s_list = [1.0, 10.0, 100.0, 1000.0];
    for u in [0.5, 0.7] {
        let spec = HalfLineOperatorSpec::p(1.0, u, 1.0, 1.0).unwrap();
        let slope = growth_exponent(&spec, 0, &s_list, STUDY_BASIS_SIZE).unwrap();
        assert!((slope - u).abs() < 0.05, "u={u}: slope {slope}");
    }
}

#[test]
fn overlap_increases_toward_one() {
    let spec = HalfLineOperatorSpec::p(1.0, 0.5, 1.0, 1.0).unwrap();
    let o: Vec<f64> = [1.0, 1e2, 1e4]
        .iter()
        .map(|&s| overlap_norm(&spec.with_s(s).unwrap(), 0, STUDY_BASIS_SIZE).unwrap())
        .collect();
    assert!(o[0] < o[1] && o[1] < o[2], "{o:?}");
    assert!(o[2] >= 0.99);
}

/// Valid operator specs: P, Q or W with the structural bounds satisfied.
fn spec_strategy() -> impl Strategy<Value = HalfLineOperatorSpec> {
    (0usize..3, 0.2f64..5.0, 0.1f64..0.9, 0.0f64..3.0, -1.0f64..1.0, 0.0f64..2.5, 0.0f64..2.5, 0.0f64..2.0)
        .prop_map(|(kind, s, u, xi, eta, ds, dt, th)| {
            let sigma = u - 0.5 + 0.01 + ds;
            let tau = u - 1.5 + 0.01 + dt;
            let theta = -0.5 + 0.01 + th;
            match kind {
                0 => HalfLineOperatorSpec::p(s, u, xi, sigma).unwrap(),
                1 => HalfLineOperatorSpec::q(s, u, xi, tau).unwrap(),
                _ => HalfLineOperatorSpec::w(s, u, xi, eta, sigma, tau, theta).unwrap(),
            }
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn ritz_values_decrease_with_basis_size(spec in spec_strategy(), size in 4usize..24) {
        let small = ritz_spectrum(&spec, size).unwrap();
        let large = ritz_spectrum(&spec, size + 4).unwrap();
        for (i, v) in small.eigenvalues.iter().enumerate() {
            prop_assert!(large.eigenvalues[i] <= v + 1e-10 * (1.0 + v.abs()), "index {i}");
        }
    }

    #[test]
    fn perturbation_dominates_base(spec in spec_strategy(), size in 4usize..30) {
        let spec = HalfLineOperatorSpec { eta: 0.0, xi: spec.xi.max(0.05), ..spec }.validated().unwrap();
        let ritz = ritz_spectrum(&spec, size).unwrap();
        let mut base: Vec<f64> = spec.basis_indices(size).iter().map(|&k| spec.base_value(k)).collect();
        base.sort_by(f64::total_cmp);
        for (r, b) in ritz.eigenvalues.iter().zip(&base) {
            prop_assert!(r > b);
        }
    }

    #[test]
    fn zero_coupling_decouples(spec in spec_strategy(), size in 4usize..24) {
        let w = HalfLineOperatorSpec::w(spec.s, spec.u, spec.xi, 0.0, spec.u, spec.u - 1.0, 0.0).unwrap();
        let p = HalfLineOperatorSpec::p(w.s, w.u, w.xi, w.sigma).unwrap();
        let q = HalfLineOperatorSpec::q(w.s, w.u, w.xi, w.tau).unwrap();
        let mut union: Vec<f64> = ritz_spectrum(&p, size).unwrap().eigenvalues;
        union.extend(ritz_spectrum(&q, size).unwrap().eigenvalues);
        union.sort_by(f64::total_cmp);
        let ww = ritz_spectrum(&w, size).unwrap().eigenvalues;
        for (a, b) in ww.iter().zip(&union) {
            prop_assert!((a - b).abs() <= 1e-9 * (1.0 + a.abs()));
        }
    }

    #[test]
    fn unperturbed_ritz_is_exact(s in 0.1f64..10.0, sigma in -0.49f64..3.0, tau in -1.49f64..3.0, size in 1usize..30) {
        let w = HalfLineOperatorSpec::w(s, 0.5, 0.0, 0.0, sigma, tau, 0.0).unwrap();
        let mut exact = exact_base_spectrum(sigma, tau, s, 2 * size);
        exact.sort_by(f64::total_cmp);
        let ritz = ritz_spectrum(&w, size).unwrap();
        for (a, b) in ritz.eigenvalues.iter().zip(&exact) {
            prop_assert!((a - b).abs() <= 1e-10 * (1.0 + b.abs()));
        }
    }

    /// Positivity in the coupling configuration of the length-two complex:
    /// `2θ = σ + τ − u`, `ξ = μ²`, `η = −2μu`. (For arbitrary `η` the form
    /// need not be positive: σ=0, τ=1/20, θ=1, u=1/10, ξ=1/10, η=−1.18,
    /// s=1/2 has a negative Ritz value.)
    #[test]
    fn hypotheses_imply_positivity(
        num in (-30i64..60, -60i64..60, 1i64..10),
        mu in 0.1f64..3.0,
        s in 0.5f64..5.0,
    ) {
        let (sn, tn, un) = num;
        let (sigma, tau, u): (Rational, Rational, Rational) = (rat(sn, 20), rat(tn, 20), rat(un, 10));
        let theta = (&sigma + &tau - &u) / rat(2, 1);
        prop_assume!(ww_hypotheses(&sigma, &tau, &theta, &u).holds());
        let uf = to_f64(&u);
        let spec = HalfLineOperatorSpec::w(s, uf, mu * mu, -2.0 * mu * uf, to_f64(&sigma), to_f64(&tau), to_f64(&theta)).unwrap();
        let ritz = ritz_spectrum(&spec, 16).unwrap();
        prop_assert!(ritz.eigenvalues[0] > 0.0, "min Ritz {}", ritz.eigenvalues[0]);
    }
}
