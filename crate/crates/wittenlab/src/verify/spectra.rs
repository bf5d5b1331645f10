//! Spectral suites: exact unperturbed spectra, χ-orthonormality,
//! positivity, even/odd matching, growth exponents and the overlap limit.

use super::{fmt_float, fmt_list, suite_name, CheckRecord, Report, Tolerances};
use crate::elliptic_complexes::complex2::{complex2_operator, complex2_parameters, ev_odd_match, Complex2Spec};
use crate::elliptic_complexes::{Choice, Sign};
use crate::error::Error;
use crate::hermite_basis::{gram_negative_power, ChiBasis, GenHermiteParams, Parity};
use crate::model_operators::{form_matrix, growth_exponent, overlap_norm, ritz_spectrum, HalfLineOperatorSpec};
use crate::numerics::rational::{int, rat, to_f64};
use crate::numerics::Rational;

const SIGMA_GRID: [f64; 5] = [0.0, 0.25, 0.5, 1.0, 2.0];
const EXACT_SIZE: usize = 20;
const GRAM_SIZE: usize = 30;
const POSITIVITY_SIZE: usize = 40;
const STUDY_SIZE: usize = 60;

/// The `(κ, u, μ, s)` grid shared by the positivity and matching suites.
pub(crate) fn complex2_grid() -> Vec<(Rational, Rational, f64, f64)> {
    let kappas = [rat(-9, 10), rat(-1, 2), rat(-1, 4), int(0), rat(1, 4), rat(1, 2), rat(9, 10)];
    let us = [rat(3, 10), rat(1, 2), rat(9, 10)];
    let mut out = Vec::new();
    for k in &kappas {
        for u in &us {
            for mu in [1.0, 3.0] {
                for s in [1.0, 10.0] {
                    out.push((k.clone(), u.clone(), mu, s));
                }
            }
        }
    }
    out
}

/// Criterion 1: with `ξ = η = 0` the form matrix is
/// `diag((2k+1+2ς_k)s)`, with `ς_k = σ` for even and `τ` for odd `k`.
pub(super) fn exact_spectra(t: &Tolerances) -> Report {
    let mut report = Report::new(suite_name(1), Some(1));
    let citation = "unperturbed spectrum λ_k = (2k+1+2ς_k)s of the even/odd oscillators";
    for &sigma in &SIGMA_GRID {
        for &tau in &SIGMA_GRID {
            for s in [1.0, 2.0] {
                let rec = CheckRecord::new(format!("exact/σ={sigma}/τ={tau}/s={s}"), citation)
                    .float("sigma", sigma)
                    .float("tau", tau)
                    .float("s", s)
                    .input("K", EXACT_SIZE);
                let expected = format!("max deviation ≤ {}", fmt_float(t.exact_spectrum));
                let m = HalfLineOperatorSpec::w(s, 0.5, 0.0, 0.0, sigma, tau, 0.0).and_then(|spec| form_matrix(&spec, EXACT_SIZE));
                let rec = match m {
                    Ok(m) => {
                        let mut diag: f64 = 0.0;
                        let mut off: f64 = 0.0;
                        // Form-matrix order: even indices 0, 2, … then odd 1, 3, ….
                        for i in 0..2 * EXACT_SIZE {
                            let (k, varsigma) = if i < EXACT_SIZE { (2 * i, sigma) } else { (2 * (i - EXACT_SIZE) + 1, tau) };
                            let exact = (2.0 * k as f64 + 1.0 + 2.0 * varsigma) * s;
                            diag = diag.max((m.get(i, i) - exact).abs());
                            for j in i + 1..2 * EXACT_SIZE {
                                off = off.max(m.get(i, j).abs());
                            }
                        }
                        let got = format!("diagonal {}, off-diagonal {}", fmt_float(diag), fmt_float(off));
                        rec.verdict(expected, got, diag <= t.exact_spectrum && off <= t.exact_spectrum)
                    }
                    Err(e) => rec.error(expected, &e),
                };
                report.push(rec);
            }
        }
    }
    report
}

/// Criterion 2: the χ-functions are orthonormal for both parities.
pub(super) fn orthonormality(t: &Tolerances) -> Report {
    let mut report = Report::new(suite_name(2), Some(2));
    let citation = "generalized Hermite functions form an orthonormal basis";
    for &sigma in &SIGMA_GRID {
        for parity in [Parity::Even, Parity::Odd] {
            for s in [1.0, 2.0] {
                let rec = CheckRecord::new(format!("gram/σ={sigma}/{parity:?}/s={s}"), citation)
                    .float("sigma", sigma)
                    .input("parity", format!("{parity:?}").to_lowercase())
                    .float("s", s)
                    .input("K", GRAM_SIZE);
                let expected = format!("max |G − I| < {}", fmt_float(t.orthonormality));
                let dev = GenHermiteParams::new(s, sigma, parity)
                    .and_then(|p| ChiBasis::plain(p, GRAM_SIZE))
                    .and_then(|b| gram_negative_power(&b, 0.0))
                    .map(|g| g.max_deviation_from_identity());
                let rec = match dev {
                    Ok(d) => rec.verdict(expected, fmt_float(d), d < t.orthonormality),
                    Err(e) => rec.error(expected, &e),
                };
                report.push(rec);
            }
        }
    }
    report
}

/// Criterion 3: every table-valid operator of the length-two complex has
/// positive Ritz values.
pub(super) fn positivity() -> Report {
    let mut report = Report::new(suite_name(3), Some(3));
    let citation = "𝒫, 𝒬 and 𝒲 are positive self-adjoint operators";
    for (kappa, u, mu, s) in complex2_grid() {
        for row in complex2_parameters(&kappa, &u) {
            if !row.table_valid {
                continue;
            }
            let rec = CheckRecord::new(format!("positive/{}/κ={kappa}/u={u}/μ={mu}/s={s}", row.tag), citation)
                .input("operator", row.tag)
                .rational("kappa", &kappa)
                .rational("u", &u)
                .float("mu", mu)
                .float("s", s)
                .input("K", POSITIVITY_SIZE);
            let expected = "min Ritz value > 0";
            let min = Complex2Spec::new(s, kappa.clone(), u.clone(), mu, Sign::Plus)
                .and_then(|spec| complex2_operator(&spec, row.tag))
                .and_then(|op| ritz_spectrum(&op.operator, POSITIVITY_SIZE))
                .map(|r| r.eigenvalues.iter().copied().fold(f64::INFINITY, f64::min));
            let rec = match min {
                Ok(m) => rec.verdict(expected, fmt_float(m), m > 0.0),
                Err(e) => rec.error(expected, &e),
            };
            report.push(rec);
        }
    }
    report
}

/// Criterion 4: the lowest eigenvalues of `Δ₀ ⊕ Δ₂` and `Δ₁` agree.
/// Points where a realization falls in a grey table cell are skipped.
pub(super) fn even_odd_matching(t: &Tolerances) -> Report {
    let mut report = Report::new(suite_name(4), Some(4));
    let citation = "Δ_ev and Δ_odd have the same positive eigenvalues with multiplicity";
    let mut grey = 0usize;
    for (kappa, u, mu, s) in complex2_grid() {
        for sign in Sign::ALL {
            for choice in Choice::ALL {
                let expected = format!("relative deviation ≤ {}", fmt_float(t.ev_odd_relative));
                let result = Complex2Spec::new(s, kappa.clone(), u.clone(), mu, sign).and_then(|spec| ev_odd_match(&spec, choice, STUDY_SIZE));
                if matches!(result, Err(Error::UnknownAssignment { .. })) {
                    grey += 1;
                    continue;
                }
                let rec = CheckRecord::new(format!("evodd/κ={kappa}/u={u}/μ={mu}/s={s}/{sign}/{choice}"), citation)
                    .rational("kappa", &kappa)
                    .rational("u", &u)
                    .float("mu", mu)
                    .float("s", s)
                    .input("sign", sign)
                    .input("choice", choice)
                    .input("K", STUDY_SIZE);
                let rec = match result {
                    Ok(r) => rec
                        .input("even", format!("{}⊕{}", r.even_tags[0], r.even_tags[1]))
                        .input("odd", r.odd_tag)
                        .input("even_values", fmt_list(&r.even))
                        .input("odd_values", fmt_list(&r.odd))
                        .verdict(expected, fmt_float(r.max_relative_deviation), r.max_relative_deviation <= t.ev_odd_relative),
                    Err(e) => rec.error(expected, &e),
                };
                report.push(rec);
            }
        }
    }
    report.note(format!("{grey} grid points skipped: a degree falls in a grey cell of the realization tables"));
    report
}

/// Criterion 5: `log(λ_k − base)` grows like `u · log s`.
pub(super) fn growth(t: &Tolerances) -> Report {
    let mut report = Report::new(suite_name(5), Some(5));
    let citation = "the perturbation shifts λ_k by order ξ s^u";
    let s_list = [1.0, 10.0, 100.0, 1000.0];
    for (sigma, u) in [(1.0, rat(2, 5)), (1.0, rat(7, 10)), (1.5, rat(1, 2))] {
        let uf = to_f64(&u);
        for k in [0usize, 2] {
            let rec = CheckRecord::new(format!("growth/σ={sigma}/u={u}/k={k}"), citation)
                .float("sigma", sigma)
                .rational("u", &u)
                .float("xi", 1.0)
                .input("k", k)
                .input("s", fmt_list(&s_list))
                .input("K", STUDY_SIZE);
            let expected = format!("slope in [{}, {}]", fmt_float(uf - t.growth_band), fmt_float(uf + t.growth_band));
            let slope = HalfLineOperatorSpec::p(1.0, uf, 1.0, sigma).and_then(|spec| growth_exponent(&spec, k, &s_list, STUDY_SIZE));
            let rec = match slope {
                Ok(m) => rec.verdict(expected, fmt_float(m), (m - uf).abs() <= t.growth_band),
                Err(e) => rec.error(expected, &e),
            };
            report.push(rec);
        }
    }
    report
}

/// Criterion 6: the ground Ritz vector concentrates on `χ₀` as `s → ∞`.
pub(super) fn overlap(t: &Tolerances) -> Report {
    let mut report = Report::new(suite_name(6), Some(6));
    let citation = "‖χ̂′_k‖ → 1 as s → ∞";
    let at = |s: f64| HalfLineOperatorSpec::p(s, 0.5, 1.0, 1.0).and_then(|spec| overlap_norm(&spec, 0, STUDY_SIZE));
    let base = |id: &str| {
        CheckRecord::new(id, citation)
            .float("sigma", 1.0)
            .float("u", 0.5)
            .float("xi", 1.0)
            .input("k", 0)
            .input("K", STUDY_SIZE)
    };
    match (at(1.0), at(1e4)) {
        (Ok(low), Ok(high)) => {
            report.push(base("overlap/floor").float("s", 1e4).verdict(
                format!("≥ {}", fmt_float(t.overlap_floor)),
                fmt_float(high),
                high >= t.overlap_floor,
            ));
            report.push(base("overlap/increase").input("s", "1 → 10000").verdict(
                format!("> {}", fmt_float(low)),
                fmt_float(high),
                high > low,
            ));
        }
        (Err(e), _) | (_, Err(e)) => report.push(base("overlap").error("overlap computed", &e)),
    }
    report
}
