//! Exact suites over rational grids: the 𝒲₂₁ region, the validity
//! conditions of the operator table, the exclusion lemma and the ranges of
//! exponents associated to a perversity.
//!
//! Exhaustive grids produce one summary record per statement plus one
//! record per counterexample.

use super::{fmt_counts, suite_name, CheckRecord, Report};
use crate::elliptic_complexes::complex2::complex2_parameters;
use crate::elliptic_complexes::cone::exclusion_lemma_check;
use crate::elliptic_complexes::{Choice, OperatorTag, Sign};
use crate::model_operators::{in_k1, in_k1p, in_k2, in_k2p};
use crate::morse_homology::{nu_local, nu_perversity, CriticalFactor, PerversityConvention, RelCriticalPoint};
use crate::numerics::rational::{format_rational, int, rat, rational_grid, rationals_between};
use crate::numerics::Rational;
use crate::stratified_spaces::{associated_range, good_associated_range, perversity_with_value, satisfies_goodness, SpaceNode};

/// Counterexamples listed per statement before truncation.
const MAX_LISTED: usize = 25;

/// `κ ∈ [−2, 2]` in steps of `1/40`, `u ∈ {1/10, …, 9/10}`.
pub fn region_grid() -> Vec<(Rational, Rational)> {
    let kappas = rational_grid(&int(-2), &int(2), &rat(1, 40)).expect("valid grid");
    let mut out = Vec::with_capacity(kappas.len() * 9);
    for k in &kappas {
        for i in 1..=9 {
            out.push((k.clone(), rat(i, 10)));
        }
    }
    out
}

/// Appends a summary record and the first counterexamples.
fn tally(report: &mut Report, id: &str, citation: &str, checked: usize, failures: Vec<CheckRecord>) {
    let total = failures.len();
    report.push(
        CheckRecord::new(id, citation)
            .input("points", checked)
            .verdict("0 mismatches", format!("{total} mismatches"), total == 0),
    );
    for f in failures.into_iter().take(MAX_LISTED) {
        report.push(f);
    }
    if total > MAX_LISTED {
        report.note(format!("{id}: {} further counterexamples not listed", total - MAX_LISTED));
    }
}

/// Criterion 7: (i) 𝒲₂₁'s combined region is the open interval
/// `−(1+u)/2 < κ < (1−u)/2`; (ii) every printed validity condition matches
/// the existence hypotheses.
pub(super) fn region_equivalences() -> Report {
    let mut report = Report::new(suite_name(7), Some(7));
    let grid = region_grid();
    w21_region(&mut report, &grid);
    table_validity(&mut report, &grid);
    report
}

/// Compares 𝒲₂₁'s combined region with the open interval at every grid point.
pub(super) fn w21_region(report: &mut Report, grid: &[(Rational, Rational)]) {
    let citation = "(σ,τ,θ) of 𝒲₂₁ lies in (𝔎₁∪𝔎₂)∩(𝔎′₁∪𝔎′₂) iff −(1+u)/2 < κ < (1−u)/2";
    let mut failures = Vec::new();
    for (kappa, u) in grid {
        let rows = complex2_parameters(kappa, u);
        let w21 = rows.iter().find(|r| r.tag == OperatorTag::W21).expect("W21 row");
        let (sigma, tau, theta) = (
            w21.sigma.as_ref().expect("σ"),
            w21.tau.as_ref().expect("τ"),
            w21.theta.as_ref().expect("θ"),
        );
        let combined = (in_k1(sigma, tau, theta) || in_k2(sigma, tau, theta)) && (in_k1p(sigma, tau, theta) || in_k2p(sigma, tau, theta));
        let open = kappa > &(-(int(1) + u) / int(2)) && kappa < &((int(1) - u) / int(2));
        if combined != open {
            failures.push(
                CheckRecord::new(format!("w21/κ={kappa}/u={u}"), citation)
                    .rational("kappa", kappa)
                    .rational("u", u)
                    .verdict(format!("interval {open}"), format!("regions {combined}"), false),
            );
        }
    }
    tally(report, "w21 region", citation, grid.len(), failures);
}

/// Compares the printed validity condition of every operator-table row with
/// the existence hypotheses at every grid point.
pub(super) fn table_validity(report: &mut Report, grid: &[(Rational, Rational)]) {
    let citation = "validity conditions of the operator table follow from the existence hypotheses";
    let mut failures = Vec::new();
    let mut rows_checked = 0usize;
    for (kappa, u) in grid {
        for row in complex2_parameters(kappa, u) {
            rows_checked += 1;
            if row.table_valid != row.derived_valid {
                failures.push(
                    CheckRecord::new(format!("table/{}/κ={kappa}/u={u}", row.tag), citation)
                        .input("operator", row.tag)
                        .rational("kappa", kappa)
                        .rational("u", u)
                        .verdict(format!("table {}", row.table_valid), format!("hypotheses {}", row.derived_valid), false),
                );
            }
        }
    }
    tally(report, "operator table", citation, rows_checked, failures);
}

/// Criterion 8: for `n ≤ 8` and `u ∈ (0, 1)` with denominator `≤ 24`,
/// goodness holds iff no `κ(n, r, u)` lies in the excluded set.
pub(super) fn exclusion() -> Report {
    let mut report = Report::new(suite_name(8), Some(8));
    exclusion_range(&mut report, 8, 24);
    report
}

/// The exclusion lemma for `1 ≤ n ≤ n_max` over `u ∈ (0, 1)` with
/// denominator at most `max_den`.
pub(super) fn exclusion_range(report: &mut Report, n_max: usize, max_den: i64) {
    let citation = "goodness ⟺ every κ(n,r,u) avoids (−1/2−u, −(1+u)/2] ∪ [(1−u)/2, 1/2)";
    let us = rationals_between(&int(0), &int(1), max_den);
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for n in 1..=n_max {
        for u in &us {
            checked += 1;
            let rec = CheckRecord::new(format!("exclusion/n={n}/u={u}"), citation).input("n", n).rational("u", u);
            match exclusion_lemma_check(n, u) {
                Ok(r) if r.equivalent => {}
                Ok(r) => failures.push(rec.verdict(
                    format!("goodness {}", r.goodness),
                    format!("excluded degrees {}", fmt_counts(&r.hits)),
                    false,
                )),
                Err(e) => failures.push(rec.error("report", &e)),
            }
        }
    }
    tally(report, "exclusion lemma", citation, checked, failures);
}

/// Single-factor rel-critical points with a cone of codimension `k` over
/// an `(k−1)`-sphere or torus.
fn perversity_points(k: usize, u: &Rational) -> Vec<(String, RelCriticalPoint)> {
    let mut out = Vec::new();
    for (name, link) in [(format!("S^{}", k - 1), SpaceNode::sphere(k - 1)), (format!("T^{}", k - 1), SpaceNode::torus(k - 1))] {
        for side in Sign::ALL {
            for (m_plus, m_minus) in [(0, 0), (1, 1)] {
                out.push((
                    format!("{name}/{side}/m=({m_plus},{m_minus})"),
                    RelCriticalPoint {
                        m_plus,
                        m_minus,
                        factors: vec![CriticalFactor::new(link.clone(), u.clone(), side)],
                    },
                ));
            }
        }
    }
    out
}

/// Criterion 10: for `2 ≤ k ≤ 9` and every admissible `p_k`, the
/// perversity formula for `ν` equals `ν_max` at five good associated
/// exponents, and each of those exponents is associated and good.
pub(super) fn perversity_consistency() -> Report {
    let mut report = Report::new(suite_name(10), Some(10));
    association_range(&mut report, 9);
    report
}

/// The perversity-range statements for `2 ≤ k ≤ k_max`.
pub(super) fn association_range(report: &mut Report, k_max: usize) {
    let c_nu = "ν^p̄ is independent of the choice of good exponent associated to p̄";
    let c_range = "the double condition on u_k is the associated range intersected with goodness";
    for k in 2..=k_max {
        for pk in 0..=((k as i64 - 2) / 2) {
            let p = match perversity_with_value(k, pk) {
                Ok(p) => p,
                Err(e) => {
                    report.push(CheckRecord::new(format!("perversity/k={k}/p={pk}"), c_nu).error("perversity", &e));
                    continue;
                }
            };
            let ranges = good_associated_range(&p, k).and_then(|g| Ok((g, associated_range(&p, k)?)));
            let (good, assoc) = match ranges {
                Ok(r) => r,
                Err(e) => {
                    report.push(CheckRecord::new(format!("range/k={k}/p={pk}"), c_range).error("ranges", &e));
                    continue;
                }
            };
            let samples = good.sample(5, 60);
            for u in &samples {
                let in_assoc = assoc.contains(u);
                let is_good = satisfies_goodness(k, u);
                report.push(
                    CheckRecord::new(format!("range/k={k}/p={pk}/u={u}"), c_range)
                        .input("k", k)
                        .input("p_k", pk)
                        .rational("u", u)
                        .verdict("associated and good", format!("associated {in_assoc}, good {is_good}"), in_assoc && is_good),
                );
                let mut mismatches = Vec::new();
                let points = perversity_points(k, u);
                for (name, point) in &points {
                    let pv = nu_perversity(point, &p, PerversityConvention::PbarMax);
                    let nl = nu_local(point, Choice::Max);
                    match (pv, nl) {
                        (Ok(a), Ok(b)) if a == b => {}
                        (Ok(a), Ok(b)) => mismatches.push(format!("{name}: ν^p̄ {} vs ν_max {}", fmt_counts(&a), fmt_counts(&b))),
                        (Err(e), _) | (_, Err(e)) => mismatches.push(format!("{name}: error: {e}")),
                    }
                }
                let got = if mismatches.is_empty() { "equal".to_string() } else { mismatches.join("; ") };
                report.push(
                    CheckRecord::new(format!("nu/k={k}/p={pk}/u={}", format_rational(u)), c_nu)
                        .input("k", k)
                        .input("p_k", pk)
                        .rational("u", u)
                        .input("points", points.len())
                        .verdict("ν^p̄ = ν_max", got, mismatches.is_empty()),
                );
            }
            if samples.len() < 5 {
                report.note(format!("k={k}, p_k={pk}: the good range holds {} sampled exponent(s)", samples.len()));
            }
        }
    }
}
