//! Parameterized versions of the suites, for runs at user-chosen
//! parameters: growth slopes of one operator, the spectra of the length-one
//! complex at one `κ`, even/odd matching at one point, region statements on
//! a custom grid and the Morse inequalities of a document.

use super::{fmt_counts, fmt_float, fmt_list, CheckRecord, Report, Tolerances};
use crate::elliptic_complexes::complex1::{complex1_eigenvalue, complex1_operator_table, complex1_sign_cell, Complex1Spec};
use crate::elliptic_complexes::complex2::{ev_odd_match, Complex2Spec};
use crate::elliptic_complexes::{Choice, OperatorTag, Sign, SignValue, ZERO_TOLERANCE};
use crate::error::{Error, Result};
use crate::model_operators::{growth_exponent, ritz_value, HalfLineOperatorSpec, OperatorKind};
use crate::morse_homology::{analyze_document, BettiFlavor, MorseDocument};
use crate::numerics::rational::{format_rational, to_f64};
use crate::numerics::Rational;

/// Growth slopes of `P` (weight `σ`) or `Q` (weight `τ`) with perturbation
/// `ξρ^{−2u}`: for each `k`, the fitted slope of `log(λ_k − base)` against
/// `log s` must lie within the growth band around `u`.
pub fn growth_study(
    kind: OperatorKind,
    weight: f64,
    u: &Rational,
    xi: f64,
    ks: &[usize],
    s_list: &[f64],
    size: usize,
    t: &Tolerances,
) -> Result<Report> {
    let uf = to_f64(u);
    let spec = match kind {
        OperatorKind::P => HalfLineOperatorSpec::p(1.0, uf, xi, weight)?,
        OperatorKind::Q => HalfLineOperatorSpec::q(1.0, uf, xi, weight)?,
        OperatorKind::W => return Err(Error::invalid("growth studies take a single component (P or Q)")),
    };
    let weight_name = if kind == OperatorKind::P { "sigma" } else { "tau" };
    let mut report = Report::new(format!("growth exponent of {kind:?}"), None);
    let citation = "the perturbation shifts λ_k by order ξ s^u";
    for &k in ks {
        let mut rec = CheckRecord::new(format!("growth/{kind:?}/k={k}"), citation)
            .float(weight_name, weight)
            .rational("u", u)
            .float("xi", xi)
            .input("k", k)
            .input("s", fmt_list(s_list))
            .input("K", size);
        let values: Result<Vec<f64>> = s_list
            .iter()
            .map(|&s| spec.with_s(s).and_then(|at| ritz_value(&at, k, size)))
            .collect();
        if let Ok(v) = &values {
            rec = rec.input("ritz", fmt_list(v));
        }
        let expected = format!("slope in [{}, {}]", fmt_float(uf - t.growth_band), fmt_float(uf + t.growth_band));
        report.push(match growth_exponent(&spec, k, s_list, size) {
            Ok(m) => rec.verdict(expected, fmt_float(m), (m - uf).abs() <= t.growth_band),
            Err(e) => rec.error(expected, &e),
        });
    }
    Ok(report)
}

fn sign_word(value: SignValue) -> &'static str {
    match value {
        SignValue::Negative => "negative",
        SignValue::Zero => "zero",
        SignValue::Positive => "positive",
        SignValue::Unknown => "?",
    }
}

/// The first `count` eigenvalues of every operator defined by the
/// length-one complex at `κ`, checked against the sign table. Zero modes are
/// listed in a note.
pub fn complex1_study(kappa: &Rational, sign: Sign, s_list: &[f64], count: usize) -> Result<Report> {
    let mut report = Report::new(format!("length-one complex at κ={}, {sign}", format_rational(kappa)), None);
    let citation = "eigenvalue signs of 𝒜₁, 𝒜₂, ℬ₁, ℬ₂ agree with the sign table";
    let table = complex1_operator_table(kappa);
    for &s in s_list {
        let spec = Complex1Spec::new(s, kappa.clone(), sign)?;
        let mut zero_modes = Vec::new();
        for variant in [OperatorTag::A1, OperatorTag::A2, OperatorTag::B1, OperatorTag::B2] {
            let Some(parameter) = table.parameter(variant) else {
                continue;
            };
            let offset = usize::from(matches!(variant, OperatorTag::B1 | OperatorTag::B2));
            for i in 0..count {
                let k = 2 * i + offset;
                let rec = CheckRecord::new(format!("{variant}{sign}/s={s}/k={k}"), citation)
                    .input("operator", variant)
                    .rational("parameter", parameter)
                    .rational("kappa", kappa)
                    .input("sign", sign)
                    .float("s", s)
                    .input("k", k);
                let outcome = complex1_sign_cell(variant, sign, kappa, k)
                    .and_then(|cell| Ok((cell, complex1_eigenvalue(&spec, variant, k)?)));
                report.push(match outcome {
                    Ok((cell, lambda)) => {
                        if lambda.abs() <= ZERO_TOLERANCE * s {
                            zero_modes.push(format!("{variant}{sign} at k={k}"));
                        }
                        let expected = if cell.grey { format!("{} (grey)", sign_word(cell.value)) } else { sign_word(cell.value).to_string() };
                        rec.verdict(expected, fmt_float(lambda), cell.accepts(lambda, s))
                    }
                    Err(e) => rec.error("eigenvalue and sign cell", &e),
                });
            }
        }
        if zero_modes.is_empty() {
            report.note(format!("s={s}: no zero modes"));
        } else {
            report.note(format!("s={s}: zero modes {}", zero_modes.join(", ")));
        }
    }
    Ok(report)
}

/// Even/odd matching of the length-two complex at one `(κ, u, μ)` for both
/// signs and both realizations. Grey realizations are noted and skipped.
pub fn evodd_study(kappa: &Rational, u: &Rational, mu: f64, s_list: &[f64], size: usize, t: &Tolerances) -> Result<Report> {
    let mut report = Report::new(
        format!("even/odd matching at κ={}, u={}, μ={}", format_rational(kappa), format_rational(u), fmt_float(mu)),
        None,
    );
    let citation = "Δ_ev and Δ_odd have the same positive eigenvalues with multiplicity";
    for &s in s_list {
        for sign in Sign::ALL {
            for choice in Choice::ALL {
                let spec = Complex2Spec::new(s, kappa.clone(), u.clone(), mu, sign)?;
                let result = ev_odd_match(&spec, choice, size);
                if let Err(Error::UnknownAssignment { detail }) = &result {
                    report.note(format!("s={s}, {sign}, {choice}: skipped ({detail})"));
                    continue;
                }
                let rec = CheckRecord::new(format!("evodd/s={s}/{sign}/{choice}"), citation)
                    .rational("kappa", kappa)
                    .rational("u", u)
                    .float("mu", mu)
                    .float("s", s)
                    .input("sign", sign)
                    .input("choice", choice)
                    .input("K", size);
                let expected = format!("relative deviation ≤ {}", fmt_float(t.ev_odd_relative));
                report.push(match result {
                    Ok(r) => rec
                        .input("even", format!("{}⊕{}", r.even_tags[0], r.even_tags[1]))
                        .input("odd", r.odd_tag)
                        .input("even_values", fmt_list(&r.even))
                        .input("odd_values", fmt_list(&r.odd))
                        .verdict(expected, fmt_float(r.max_relative_deviation), r.max_relative_deviation <= t.ev_odd_relative),
                    Err(e) => rec.error(expected, &e),
                });
            }
        }
    }
    Ok(report)
}

/// `𝒲₂₁`'s combined region against the open interval on a custom grid.
pub fn w21_study(kappas: &[Rational], us: &[Rational]) -> Report {
    let grid: Vec<(Rational, Rational)> = kappas.iter().flat_map(|k| us.iter().map(move |u| (k.clone(), u.clone()))).collect();
    let mut report = Report::new("𝒲₂₁ region", None);
    super::regions::w21_region(&mut report, &grid);
    super::regions::table_validity(&mut report, &grid);
    report
}

/// The exclusion lemma for `1 ≤ n ≤ n_max` and `u ∈ (0, 1)` with
/// denominator at most `max_den`.
pub fn exclusion_study(n_max: usize, max_den: i64) -> Report {
    let mut report = Report::new("exclusion lemma", None);
    super::regions::exclusion_range(&mut report, n_max, max_den);
    report
}

/// The perversity-range statements for `2 ≤ k ≤ k_max`.
pub fn association_study(k_max: usize) -> Report {
    let mut report = Report::new("perversity association", None);
    super::regions::association_range(&mut report, k_max);
    report
}

fn flavor_name(flavor: &BettiFlavor) -> String {
    match flavor {
        BettiFlavor::Max => "max".to_string(),
        BettiFlavor::Min => "min".to_string(),
        BettiFlavor::Perversity { p } => format!("p̄={:?}", p.values()),
    }
}

/// The Morse inequalities and Euler equality of a document, one block of
/// records per evaluated flavor. The per-point Morse numbers are recorded
/// as inputs of the Euler record and listed in the notes.
pub fn morse_document_study(doc: &MorseDocument) -> Result<Report> {
    let checks = analyze_document(doc)?;
    let mut report = Report::new("Morse inequalities", None);
    let c_partial = "Σ_{r≤k} (−1)^{k−r} β^r ≤ Σ_{r≤k} (−1)^{k−r} ν^r";
    let c_euler = "Σ (−1)^r β^r = Σ (−1)^r ν^r";
    for check in &checks {
        let name = flavor_name(&check.flavor);
        let r = &check.report;
        for q in &r.partial {
            report.push(
                CheckRecord::new(format!("{name}/k={}", q.k), c_partial)
                    .input("betti", fmt_counts(&r.betti))
                    .input("nu", fmt_counts(&r.nu))
                    .verdict(format!("Σβ ≤ Σν = {}", q.nu_sum), format!("Σβ = {}", q.betti_sum), q.holds),
            );
        }
        let mut rec = CheckRecord::new(format!("{name}/euler"), c_euler)
            .input("betti", fmt_counts(&r.betti))
            .input("nu", fmt_counts(&r.nu));
        for (i, nu) in check.per_point.iter().enumerate() {
            rec = rec.input(&format!("points[{i}]"), fmt_counts(nu));
            report.note(format!("{name}: ν(points[{i}]) = {}", fmt_counts(nu)));
        }
        report.note(format!("{name}: β = {}, ν = {}", fmt_counts(&r.betti), fmt_counts(&r.nu)));
        report.push(rec.verdict(format!("χ(ν) = {}", r.euler_nu), format!("χ(β) = {}", r.euler_betti), r.euler_holds));
    }
    Ok(report)
}
