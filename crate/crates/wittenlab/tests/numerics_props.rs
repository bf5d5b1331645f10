//! Property tests for the numerical kernels against independent oracles.

use num::Complex;
use proptest::prelude::*;
use wittenlab::numerics::{gauss_laguerre, half_line_moment, ln_gamma, sym_eigen, SymMatrix};

fn symmetric(order: usize) -> impl Strategy<Value = SymMatrix> {
    prop::collection::vec(-1.0f64..1.0, order * order).prop_map(move |raw| {
        SymMatrix::from_upper_fn(order, |i, j| raw[i * order + j])
    })
}

/// Characteristic polynomial coefficients (monic, highest first) by the
/// Faddeev–LeVerrier recursion.
fn char_poly(m: &SymMatrix) -> Vec<f64> {
    let n = m.order();
    let mul = |a: &Vec<Vec<f64>>, b: &Vec<Vec<f64>>| -> Vec<Vec<f64>> {
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
            .collect()
    };
    let a: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| m.get(i, j)).collect()).collect();
    let mut coeffs = vec![1.0];
    let mut mk = vec![vec![0.0; n]; n];
    for k in 1..=n {
        let mut prev = mk.clone();
        for (i, row) in prev.iter_mut().enumerate() {
            row[i] += coeffs[k - 1];
        }
        mk = mul(&a, &prev);
        let trace: f64 = (0..n).map(|i| mk[i][i]).sum();
        coeffs.push(-trace / k as f64);
    }
    coeffs
}

/// All roots of a monic polynomial by Durand–Kerner iteration.
fn durand_kerner(coeffs: &[f64]) -> Vec<f64> {
    let n = coeffs.len() - 1;
    let eval = |z: Complex<f64>| coeffs.iter().fold(Complex::new(0.0, 0.0), |acc, &c| acc * z + c);
    let seed = Complex::new(0.4, 0.9);
    let mut roots: Vec<Complex<f64>> = (0..n).map(|i| seed.powu(i as u32) * 2.0).collect();
    for _ in 0..2000 {
        for i in 0..n {
            let mut denom = Complex::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
        }
    }
    let mut real: Vec<f64> = roots.iter().map(|z| z.re).collect();
    real.sort_by(f64::total_cmp);
    real
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn eigen_reconstructs_random_symmetric(order in 1usize..=60, seed in any::<u64>()) {
        let m = {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            SymMatrix::from_upper_fn(order, |_, _| rng.gen_range(-1.0..1.0))
        };
        let e = sym_eigen(&m).unwrap();
        prop_assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
        let mut err = 0.0;
        for i in 0..order {
            for j in 0..order {
                let r: f64 = (0..order).map(|k| e.vectors[k][i] * e.values[k] * e.vectors[k][j]).sum();
                err += (r - m.get(i, j)).powi(2);
            }
        }
        prop_assert!(err.sqrt() <= 1e-9 * m.frobenius_norm().max(1e-300));
        for k in 0..order {
            prop_assert!(e.residual(&m, k) <= 1e-10 * (1.0 + e.values[k].abs()) * m.frobenius_norm());
        }
    }

    #[test]
    fn eigen_matches_characteristic_roots(m in (1usize..=4).prop_flat_map(symmetric)) {
        let e = sym_eigen(&m).unwrap();
        let gap = e.values.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
        // Root finding of a polynomial is ill-conditioned near double roots.
        prop_assume!(gap > 1e-3);
        let roots = durand_kerner(&char_poly(&m));
        for (a, b) in e.values.iter().zip(&roots) {
            prop_assert!((a - b).abs() <= 1e-10, "{a} vs {b}");
        }
    }

    #[test]
    fn quadrature_integrates_monomials(alpha in -0.95f64..3.0, n in 1usize..=40, s in 0.1f64..20.0) {
        let rule = gauss_laguerre(alpha, n, s).unwrap();
        prop_assert!(rule.nodes.windows(2).all(|w| w[1] > w[0]));
        for m in 0..=(2 * n - 1) {
            let exact = (ln_gamma(alpha + m as f64 + 1.0) - (alpha + m as f64 + 1.0) * s.ln()).exp();
            let got = rule.integrate(|t| t.powi(m as i32));
            prop_assert!(((got - exact) / exact).abs() < 1e-12, "m={m}: {got} vs {exact}");
        }
    }

    #[test]
    fn half_line_moment_scale_free(beta in -0.99f64..12.0, s in 0.01f64..100.0) {
        let v = half_line_moment(beta, s).unwrap() * 2.0 * s.powf((beta + 1.0) / 2.0);
        let g = ln_gamma((beta + 1.0) / 2.0).exp();
        prop_assert!(((v - g) / g).abs() < 1e-12);
    }
}

#[test]
fn quadrature_monomials_on_fixed_grid() {
    for &alpha in &[-0.5, 0.0, 0.5, 1.5] {
        for &n in &[1usize, 5, 30, 70] {
            let rule = gauss_laguerre(alpha, n, 1.0).unwrap();
            for m in 0..=(2 * n - 1) {
                // Summed in log space: t^m at the outer nodes exceeds f64.
                let ln_exact = ln_gamma(alpha + m as f64 + 1.0);
                let got: f64 = rule
                    .nodes
                    .iter()
                    .zip(&rule.weights)
                    .map(|(t, w)| (w.ln() + m as f64 * t.ln() - ln_exact).exp())
                    .sum();
                assert!((got - 1.0).abs() < 1e-12, "alpha={alpha} n={n} m={m} rel={}", (got - 1.0).abs());
            }
        }
    }
}

#[test]
fn characteristic_roots_of_two_by_two() {
    let m = SymMatrix::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
    let e = sym_eigen(&m).unwrap();
    assert_eq!(durand_kerner(&char_poly(&m)).len(), 2);
    assert!((e.values[0] - 1.0).abs() < 1e-14 && (e.values[1] - 3.0).abs() < 1e-14);
}
