//! Properties of the model elliptic complexes and of the cone assembly.

use proptest::prelude::*;
use wittenlab::elliptic_complexes::complex1::{complex1_eigenvalue, complex1_operator_table, complex1_sign_cell, Complex1Spec};
use wittenlab::elliptic_complexes::complex2::{complex2_operator, shifted_ritz, Complex2Spec};
use wittenlab::elliptic_complexes::cone::{
    cone_harmonic_dims, cone_witten_spectrum, exclusion_lemma_check, kappa, LinkSpectralData,
};
use wittenlab::elliptic_complexes::{Choice, OperatorTag, Sign};
use wittenlab::numerics::rational::{int, rat};
use wittenlab::stratified_spaces::satisfies_goodness;

const VARIANTS: [OperatorTag; 4] = [OperatorTag::A1, OperatorTag::A2, OperatorTag::B1, OperatorTag::B2];

/// Flat `ℝ²` with `f = ρ²/2`: the Witten Laplacian on `r`-forms is the
/// harmonic oscillator shifted by `s(2r − 2)`, with eigenvalues
/// `2s(N + r)` of multiplicity `(N+1)·C(2, r)`.
fn flat_plane(s: f64, degree: usize, bound: f64) -> Vec<f64> {
    let binom = [1, 2, 1][degree];
    let mut out = Vec::new();
    for n in 0.. {
        let value = 2.0 * s * (n + degree) as f64;
        if value > bound {
            break;
        }
        for _ in 0..(n + 1) * binom {
            out.push(value);
        }
    }
    out
}

#[test]
fn cone_over_circle_with_u_one_is_the_flat_plane() {
    let s = 1.5;
    let bound = 2.0 * s * 6.0;
    let link = LinkSpectralData::circle(12);
    for choice in Choice::ALL {
        let c = cone_witten_spectrum(&link, 2, &int(1), s, Sign::Plus, choice, 12).unwrap();
        assert_eq!(c.kernel, vec![1, 0, 0]);
        for degree in 0..=2 {
            let got: Vec<f64> = c.degrees[degree].iter().copied().filter(|&v| v <= bound + 1e-9).collect();
            let want = flat_plane(s, degree, bound);
            assert_eq!(got.len(), want.len(), "degree {degree}, {choice}");
            for (g, w) in got.iter().zip(&want) {
                assert!((g - w).abs() < 1e-9 * s, "degree {degree}: {g} vs {w}");
            }
        }
    }
}

#[test]
fn length_two_complex_decouples_as_mu_vanishes() {
    // ξ = μ² and η = −2μu both vanish; the components become unperturbed
    // oscillators with the constant shifts.
    let (s, mu) = (2.0, 1e-4);
    let spec = Complex2Spec::new(s, rat(1, 4), rat(1, 2), mu, Sign::Plus).unwrap();
    for tag in [OperatorTag::W11, OperatorTag::P1, OperatorTag::Q1] {
        let op = complex2_operator(&spec, tag).unwrap();
        let w = op.operator;
        let mut exact = Vec::new();
        for i in 0..8 {
            if tag != OperatorTag::Q1 {
                exact.push(w.base_value(2 * i) + op.even_shift);
            }
            if tag != OperatorTag::P1 {
                exact.push(w.base_value(2 * i + 1) + op.odd_shift);
            }
        }
        exact.sort_by(f64::total_cmp);
        let ritz = shifted_ritz(&op, 30).unwrap();
        for (r, e) in ritz.iter().zip(&exact).take(6) {
            assert!((r - e).abs() < 1e-3 * s, "{tag}: {r} vs {e}");
        }
    }
}

#[test]
fn complex1_sign_table_is_reproduced() {
    let s = 1.0;
    let mut kappa_q = rat(-5, 2);
    while kappa_q <= rat(5, 2) {
        let table = complex1_operator_table(&kappa_q);
        for variant in VARIANTS {
            if table.parameter(variant).is_none() {
                continue;
            }
            let offset = usize::from(matches!(variant, OperatorTag::B1 | OperatorTag::B2));
            for sign in Sign::ALL {
                let spec = Complex1Spec::new(s, kappa_q.clone(), sign).unwrap();
                for i in 0..8 {
                    let k = 2 * i + offset;
                    let lambda = complex1_eigenvalue(&spec, variant, k).unwrap();
                    let cell = complex1_sign_cell(variant, sign, &kappa_q, k).unwrap();
                    assert!(cell.accepts(lambda, s), "{variant}{sign} κ={kappa_q} k={k}: λ={lambda}, cell {cell:?}");
                }
            }
        }
        kappa_q += rat(1, 20);
    }
}

#[test]
fn harmonic_dims_on_a_point_link() {
    // c(point) = ℝ₊ has κ = 0: one harmonic function for + (max), nothing
    // for − with the max choice, and one 1-form for − with the min choice.
    let u = rat(1, 2);
    assert_eq!(cone_harmonic_dims(&[1], 1, &u, Sign::Plus, Choice::Max).unwrap().dims, vec![1, 0]);
    assert_eq!(cone_harmonic_dims(&[1], 1, &u, Sign::Minus, Choice::Max).unwrap().dims, vec![0, 0]);
    assert_eq!(cone_harmonic_dims(&[1], 1, &u, Sign::Minus, Choice::Min).unwrap().dims, vec![0, 1]);
    assert_eq!(kappa(1, 0, &u), int(0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn exclusion_lemma_holds(n in 1usize..=12, num in 1i64..60, den in 2i64..60) {
        prop_assume!(num < den);
        let u = rat(num, den);
        let r = exclusion_lemma_check(n, &u).unwrap();
        prop_assert!(r.equivalent, "n={n} u={u}: goodness {} hits {:?}", r.goodness, r.hits);
        prop_assert_eq!(r.goodness, satisfies_goodness(n, &u));
    }

    #[test]
    fn harmonic_dims_never_exceed_link_betti(
        betti in proptest::collection::vec(0usize..4, 1..6),
        num in 1i64..24,
        den in 1i64..24,
        plus in any::<bool>(),
        max in any::<bool>(),
    ) {
        prop_assume!(num <= den);
        let n = betti.len();
        let u = rat(num, den);
        let sign = if plus { Sign::Plus } else { Sign::Minus };
        let choice = if max { Choice::Max } else { Choice::Min };
        let d = cone_harmonic_dims(&betti, n, &u, sign, choice).unwrap();
        prop_assert_eq!(d.dims.len(), n + 1);
        prop_assert!(d.total() <= betti.iter().sum::<usize>());
        // The thresholds are nested: for + the max choice keeps at least
        // what min keeps (κ ≥ 1/2 ⇒ κ > −1/2), for − the reverse.
        let other = if max { Choice::Min } else { Choice::Max };
        let e = cone_harmonic_dims(&betti, n, &u, sign, other).unwrap();
        let (larger, smaller) = if max == plus { (&d, &e) } else { (&e, &d) };
        for (a, b) in larger.dims.iter().zip(&smaller.dims) {
            prop_assert!(a >= b);
        }
    }

    #[test]
    fn complex1_eigenvalues_are_affine_in_k(
        num in -60i64..60,
        s in 0.1f64..10.0,
        plus in any::<bool>(),
    ) {
        let kappa_q = rat(num, 20);
        let sign = if plus { Sign::Plus } else { Sign::Minus };
        let spec = Complex1Spec::new(s, kappa_q.clone(), sign).unwrap();
        let table = complex1_operator_table(&kappa_q);
        for variant in VARIANTS {
            if table.parameter(variant).is_none() {
                continue;
            }
            let offset = usize::from(matches!(variant, OperatorTag::B1 | OperatorTag::B2));
            let l0 = complex1_eigenvalue(&spec, variant, offset).unwrap();
            let l1 = complex1_eigenvalue(&spec, variant, offset + 2).unwrap();
            prop_assert!((l1 - l0 - 4.0 * s).abs() < 1e-12 * s.max(1.0) * 10.0);
        }
    }
}
