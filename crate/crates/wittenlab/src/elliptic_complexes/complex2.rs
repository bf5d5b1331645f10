//! The elliptic complex of length two, with `d_{0,1} = μρ^{−u}`,
//! `d_{0,2} = d/dρ − (κ+u)ρ^{−1} ± sρ`, `d_{1,1} = d/dρ − κρ^{−1} ± sρ` and
//! `d_{1,2} = −μρ^{−u}`.
//!
//! Its Laplacian components are
//!
//! * `Δ₀ = H + (κ+u)(κ+u−1)ρ^{−2} + μ²ρ^{−2u} ∓ s(1+2(κ+u))`, realized by
//!   `𝒫₁` (`σ = κ+u`) or `𝒫₂` (`σ = 1−κ−u`);
//! * `Δ₂ = H + κ(κ+1)ρ^{−2} + μ²ρ^{−2u} ± s(1−2κ)`, realized by `𝒬₁`
//!   (`τ = κ`) or `𝒬₂` (`τ = −1−κ`);
//! * `Δ₁ = U ∓ sV` with `V = diag(1+2κ, −1+2(κ+u))` and `U` a coupled
//!   operator `𝒲ᵢⱼ` with `ξ = μ²`, `η = −2μu` and `2θ = σ+τ−u`.
//!
//! For `u < 1` the components are perturbed model operators and their
//! spectra are computed as Ritz values. For `u = 1` every term of `Δ₀` and
//! `Δ₂` is homogeneous of degree −2, the components are unperturbed model
//! operators with `σ = 1/2 + R`, `τ = −1/2 + R`, `R = √((κ+1/2)² + μ²)`, and
//! the spectrum of `Δ₁` is the union of the spectra of `Δ₀` and `Δ₂`; this
//! case is only used when `R ≥ 1`, where the realization is unique.
//!
//! The realization tables leave some κ-ranges open (grey cells); lookups
//! there return [`OperatorTag::Unknown`].

use super::{Choice, OperatorTag, Sign, SignCell, SignValue};
use crate::error::{Error, Result};
use crate::model_operators::{enriched_ritz, ww_hypotheses, EnrichedBasis, HalfLineOperatorSpec, WwOutcome};
use crate::numerics::rational::{int, rat, to_f64};
use crate::numerics::Rational;
use num::{One, Signed};
use serde::Serialize;

/// Parameters of the length-two complex.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Complex2Spec {
    pub s: f64,
    #[serde(serialize_with = "crate::numerics::rational::serialize_rational")]
    pub kappa: Rational,
    #[serde(serialize_with = "crate::numerics::rational::serialize_rational")]
    pub u: Rational,
    pub mu: f64,
    pub sign: Sign,
}

impl Complex2Spec {
    /// Validates `s > 0`, `μ > 0` and `0 < u ≤ 1`.
    pub fn new(s: f64, kappa: Rational, u: Rational, mu: f64, sign: Sign) -> Result<Self> {
        if !(s.is_finite() && s > 0.0) {
            return Err(Error::domain("complex 2", format!("s={s} must be positive")));
        }
        if !(mu.is_finite() && mu > 0.0) {
            return Err(Error::domain("complex 2", format!("μ={mu} must be positive")));
        }
        if !(u.is_positive() && u <= Rational::one()) {
            return Err(Error::domain("complex 2", format!("u={u} must lie in (0, 1]")));
        }
        Ok(Self {
            s,
            kappa,
            u,
            mu,
            sign,
        })
    }

    /// The same complex at another scale.
    pub fn with_s(&self, s: f64) -> Result<Self> {
        Self::new(s, self.kappa.clone(), self.u.clone(), self.mu, self.sign)
    }
}

/// One row of the table of operators defined by `Δ₀`, `Δ₂`, `Δ₁`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Complex2Row {
    pub tag: OperatorTag,
    #[serde(serialize_with = "crate::numerics::rational::serialize_opt_rational")]
    pub sigma: Option<Rational>,
    #[serde(serialize_with = "crate::numerics::rational::serialize_opt_rational")]
    pub tau: Option<Rational>,
    #[serde(serialize_with = "crate::numerics::rational::serialize_opt_rational")]
    pub theta: Option<Rational>,
    /// The condition printed in the table.
    pub table_valid: bool,
    /// The same condition re-derived from the existence hypotheses of the
    /// model operators (`σ > u−1/2`, `τ > u−3/2`, and [`ww_hypotheses`]).
    pub derived_valid: bool,
    /// Outcome of [`ww_hypotheses`] for the coupled rows.
    pub hypotheses: Option<WwOutcome>,
}

/// The rows `𝒫₁, 𝒫₂, 𝒬₁, 𝒬₂, 𝒲₁₁, 𝒲₂₂, 𝒲₁₂, 𝒲₂₁` at `(κ, u)`.
pub fn complex2_parameters(kappa: &Rational, u: &Rational) -> Vec<Complex2Row> {
    use OperatorTag::*;
    let k = kappa;
    let half = rat(1, 2);
    let p_base = |sigma: &Rational| sigma > &(u - &half);
    let q_base = |tau: &Rational| tau > &(u - rat(3, 2));
    let mut rows = Vec::with_capacity(8);

    let sigma = k + u;
    rows.push(Complex2Row {
        tag: P1,
        table_valid: k > &-half.clone(),
        derived_valid: p_base(&sigma),
        sigma: Some(sigma),
        tau: None,
        theta: None,
        hypotheses: None,
    });
    let sigma = int(1) - k - u;
    rows.push(Complex2Row {
        tag: P2,
        table_valid: k < &(rat(3, 2) - u * int(2)),
        derived_valid: p_base(&sigma),
        sigma: Some(sigma),
        tau: None,
        theta: None,
        hypotheses: None,
    });
    let tau = k.clone();
    rows.push(Complex2Row {
        tag: Q1,
        table_valid: k > &(u - rat(3, 2)),
        derived_valid: q_base(&tau),
        sigma: None,
        tau: Some(tau),
        theta: None,
        hypotheses: None,
    });
    let tau = int(-1) - k;
    rows.push(Complex2Row {
        tag: Q2,
        table_valid: k < &(&half - u),
        derived_valid: q_base(&tau),
        sigma: None,
        tau: Some(tau),
        theta: None,
        hypotheses: None,
    });

    let w_rows = [
        (W11, k.clone(), k + u, k.clone(), k > &(u - &half)),
        (W22, int(1) - k, int(-1) - k - u, -k - u, k < &(&half - u * int(2))),
        (W12, k.clone(), int(-1) - k - u, -&half - u, false),
        (
            W21,
            int(1) - k,
            k + u,
            half.clone(),
            (k > &(-(int(1) + u) / int(2)) && k < &((int(1) - u) / int(2))) || k == &(-&half - u) || k == &half,
        ),
    ];
    for (tag, sigma, tau, theta, table_valid) in w_rows {
        let outcome = ww_hypotheses(&sigma, &tau, &theta, u);
        rows.push(Complex2Row {
            tag,
            derived_valid: outcome.holds(),
            hypotheses: Some(outcome),
            table_valid,
            sigma: Some(sigma),
            tau: Some(tau),
            theta: Some(theta),
        });
    }
    rows
}

fn row_for(kappa: &Rational, u: &Rational, tag: OperatorTag) -> Result<Complex2Row> {
    complex2_parameters(kappa, u)
        .into_iter()
        .find(|r| r.tag == tag)
        .ok_or_else(|| Error::undefined(format!("{tag} is not a component of the length-two complex")))
}

fn check_table_range(u: &Rational) -> Result<()> {
    if !(u.is_positive() && u < &Rational::one()) {
        return Err(Error::domain("realization tables", format!("require 0 < u < 1, got u={u}")));
    }
    Ok(())
}

/// Realization of `Δ_{max/min, degree}` from the description tables.
pub fn complex2_assignment(kappa: &Rational, u: &Rational, choice: Choice, degree: usize) -> Result<OperatorTag> {
    use OperatorTag::*;
    check_table_range(u)?;
    let k = kappa;
    let half = rat(1, 2);
    let tag = match (degree, choice) {
        (0, Choice::Max) => {
            if k > &-half.clone() {
                P1
            } else if k > &(-&half - u) {
                Unknown
            } else {
                P2
            }
        }
        (0, Choice::Min) => {
            if k >= &(&half - u) {
                P1
            } else {
                P2
            }
        }
        (2, Choice::Max) => {
            if k > &-half.clone() {
                Q1
            } else {
                Q2
            }
        }
        (2, Choice::Min) => {
            if k >= &half {
                Q1
            } else if k >= &(&half - u) {
                Unknown
            } else {
                Q2
            }
        }
        (1, Choice::Max) => {
            if k > &(u - &half) {
                W11
            } else if k > &-half.clone() {
                Unknown
            } else if k > &(-(int(1) + u) / int(2)) {
                W21
            } else if k > &(-&half - u) {
                Unknown
            } else {
                W22
            }
        }
        (1, Choice::Min) => {
            if k >= &half {
                W11
            } else if k >= &((int(1) - u) / int(2)) {
                Unknown
            } else if k >= &(&half - u) {
                W21
            } else if k >= &(&half - u * int(2)) {
                Unknown
            } else {
                W22
            }
        }
        _ => return Err(Error::domain("degree", format!("the length-two complex has degrees 0, 1, 2, got {degree}"))),
    };
    Ok(tag)
}

/// Where the spectrum of a group of degrees comes from, per the spectrum
/// tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "tags", rename_all = "snake_case")]
pub enum SpectrumSource {
    /// `σ(𝒫ᵢ ⊕ 𝒬ⱼ)`.
    Sum(OperatorTag, OperatorTag),
    /// `σ(𝒲ᵢⱼ)`.
    Coupled(OperatorTag),
    /// Grey cell.
    Unknown,
}

/// Spectrum of `Δ_{max/min,ev} = Δ₀ ⊕ Δ₂` (`odd = false`) or of
/// `Δ_{max/min,1}` (`odd = true`), from the spectrum tables.
///
/// The row `−1/2−2u ≤ κ < 1/2−u → σ(𝒫₂⊕𝒬₂)` of the `Δ_{min,1}` table
/// overlaps the next row `κ < 1/2−2u → σ(𝒲₂₂)`; it is read as
/// `1/2−2u ≤ κ < 1/2−u`, the grey range of the description table that it
/// fills.
pub fn complex2_spectrum_source(kappa: &Rational, u: &Rational, choice: Choice, odd: bool) -> Result<SpectrumSource> {
    use OperatorTag::*;
    use SpectrumSource::{Coupled, Sum, Unknown as Grey};
    check_table_range(u)?;
    let k = kappa;
    let half = rat(1, 2);
    let lo_mid = -(int(1) + u) / int(2);
    let hi_mid = (int(1) - u) / int(2);
    let source = match (odd, choice) {
        (false, Choice::Max) => {
            if k > &-half.clone() {
                Sum(P1, Q1)
            } else if k > &lo_mid {
                Coupled(W21)
            } else if k > &(-&half - u) {
                Grey
            } else {
                Sum(P2, Q2)
            }
        }
        (false, Choice::Min) => {
            if k >= &half {
                Sum(P1, Q1)
            } else if k >= &hi_mid {
                Grey
            } else if k >= &(&half - u) {
                Coupled(W21)
            } else {
                Sum(P2, Q2)
            }
        }
        (true, Choice::Max) => {
            if k > &(u - &half) {
                Coupled(W11)
            } else if k > &-half.clone() {
                Sum(P1, Q1)
            } else if k > &lo_mid {
                Coupled(W21)
            } else if k > &(-&half - u) {
                Grey
            } else {
                Coupled(W22)
            }
        }
        (true, Choice::Min) => {
            if k >= &half {
                Coupled(W11)
            } else if k >= &hi_mid {
                Grey
            } else if k >= &(&half - u) {
                Coupled(W21)
            } else if k >= &(&half - u * int(2)) {
                Sum(P2, Q2)
            } else {
                Coupled(W22)
            }
        }
    };
    Ok(source)
}

/// A Laplacian component as a model operator plus constant shifts.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Complex2Operator {
    pub tag: OperatorTag,
    pub operator: HalfLineOperatorSpec,
    /// Shift added on the even block (`𝒫` and the first component of `𝒲`).
    pub even_shift: f64,
    /// Shift added on the odd block (`𝒬` and the second component of `𝒲`).
    pub odd_shift: f64,
}

/// Shift coefficients (in units of `s`) of `Δ₀`, `Δ₂` and of the two
/// components of `Δ₁`.
fn shifts(kappa: &Rational, u: &Rational, sign: Sign) -> (Rational, Rational, Rational, Rational) {
    let pm = int(sign.pm());
    let ku = kappa + u;
    let d0 = -&pm * (int(1) + &ku * int(2));
    let d2 = &pm * (int(1) - kappa * int(2));
    let d11 = -&pm * (int(1) + kappa * int(2));
    let d12 = &pm * (int(1) - &ku * int(2));
    (d0, d2, d11, d12)
}

/// The model operator and shifts realizing `tag` for `spec` (`u < 1`).
pub fn complex2_operator(spec: &Complex2Spec, tag: OperatorTag) -> Result<Complex2Operator> {
    check_table_range(&spec.u)?;
    let row = row_for(&spec.kappa, &spec.u, tag)?;
    if !row.table_valid || !row.derived_valid {
        return Err(Error::undefined(format!(
            "{tag} is not defined at κ={}, u={}",
            spec.kappa, spec.u
        )));
    }
    let (s, u, xi) = (spec.s, to_f64(&spec.u), spec.mu * spec.mu);
    let (d0, d2, d11, d12) = shifts(&spec.kappa, &spec.u, spec.sign);
    let f = |q: Option<Rational>| to_f64(&q.expect("row carries the parameter"));
    let (operator, even, odd) = match tag {
        OperatorTag::P1 | OperatorTag::P2 => (HalfLineOperatorSpec::p(s, u, xi, f(row.sigma))?, d0, int(0)),
        OperatorTag::Q1 | OperatorTag::Q2 => (HalfLineOperatorSpec::q(s, u, xi, f(row.tau))?, int(0), d2),
        _ => {
            let eta = -2.0 * spec.mu * u;
            (HalfLineOperatorSpec::w(s, u, xi, eta, f(row.sigma), f(row.tau), f(row.theta))?, d11, d12)
        }
    };
    Ok(Complex2Operator {
        tag,
        operator,
        even_shift: to_f64(&even) * s,
        odd_shift: to_f64(&odd) * s,
    })
}

/// Ascending Ritz values of a shifted component on `size` χ-functions per
/// block, enriched by the fractional-power families of
/// [`crate::model_operators::enriched`].
///
/// The plain χ-basis converges only algebraically for the coupled
/// components (for `𝒲₂₂` at `κ = −1/4`, `u = 3/10` the lowest Ritz value
/// is still 40% high at `K = 140`); the enrichment restores fast
/// convergence.
pub fn shifted_ritz(op: &Complex2Operator, size: usize) -> Result<Vec<f64>> {
    shifted_ritz_with(op, EnrichedBasis::for_size(size))
}

/// [`shifted_ritz`] on an explicit basis; `secondary = 0` gives the plain
/// χ-basis.
pub fn shifted_ritz_with(op: &Complex2Operator, basis: EnrichedBasis) -> Result<Vec<f64>> {
    enriched_ritz(&op.operator, basis, op.even_shift, op.odd_shift)
}

/// Spectra of the three degrees of the length-two complex.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Complex2Spectra {
    pub tags: [OperatorTag; 3],
    /// Ascending values for degrees 0, 1, 2.
    pub degrees: [Vec<f64>; 3],
}

fn expect_kind(tag: OperatorTag, degree: usize) -> Result<()> {
    use OperatorTag::*;
    let ok = match degree {
        0 => matches!(tag, P1 | P2),
        1 => matches!(tag, W11 | W22 | W21),
        _ => matches!(tag, Q1 | Q2),
    };
    if tag == Unknown {
        return Err(Error::UnknownAssignment {
            detail: format!("degree {degree} falls in a grey cell of the realization tables"),
        });
    }
    if !ok {
        return Err(Error::undefined(format!("{tag} does not realize degree {degree}")));
    }
    Ok(())
}

/// Ritz spectra of `Δ₀`, `Δ₁`, `Δ₂` for the given realizations.
pub fn complex2_spectra(spec: &Complex2Spec, assignment: [OperatorTag; 3], size: usize) -> Result<Complex2Spectra> {
    let mut degrees: [Vec<f64>; 3] = Default::default();
    for (degree, &tag) in assignment.iter().enumerate() {
        expect_kind(tag, degree)?;
        degrees[degree] = shifted_ritz(&complex2_operator(spec, tag)?, size)?;
    }
    Ok(Complex2Spectra {
        tags: assignment,
        degrees,
    })
}

/// Spectra of the max/min realization, filling grey description cells from
/// the spectrum tables where possible (`u < 1`), or from the unperturbed
/// model operators when `u = 1`.
pub fn complex2_realized_spectra(spec: &Complex2Spec, choice: Choice, size: usize) -> Result<[Vec<f64>; 3]> {
    if spec.u == Rational::one() {
        return complex2_spectra_u1(spec, size);
    }
    let (k, u) = (&spec.kappa, &spec.u);
    let mut out: [Vec<f64>; 3] = Default::default();
    for degree in [0, 2] {
        let tag = complex2_assignment(k, u, choice, degree)?;
        expect_kind(tag, degree)?;
        out[degree] = shifted_ritz(&complex2_operator(spec, tag)?, size)?;
    }
    let tag = complex2_assignment(k, u, choice, 1)?;
    out[1] = if tag != OperatorTag::Unknown {
        shifted_ritz(&complex2_operator(spec, tag)?, size)?
    } else {
        match complex2_spectrum_source(k, u, choice, true)? {
            SpectrumSource::Sum(p, q) => {
                let mut v = shifted_ritz(&complex2_operator(spec, p)?, size)?;
                v.extend(shifted_ritz(&complex2_operator(spec, q)?, size)?);
                v.sort_by(f64::total_cmp);
                v
            }
            SpectrumSource::Coupled(w) => shifted_ritz(&complex2_operator(spec, w)?, size)?,
            SpectrumSource::Unknown => {
                return Err(Error::UnknownAssignment {
                    detail: format!("Δ_{choice},1 is not described at κ={k}, u={u}"),
                })
            }
        }
    };
    Ok(out)
}

/// The `u = 1` spectra: `𝒫` with `σ = 1/2+R`, `𝒬` with `τ = −1/2+R`, and
/// degree 1 equal to their union.
fn complex2_spectra_u1(spec: &Complex2Spec, size: usize) -> Result<[Vec<f64>; 3]> {
    let k = to_f64(&spec.kappa);
    let r = ((k + 0.5).powi(2) + spec.mu * spec.mu).sqrt();
    if r < 1.0 {
        return Err(Error::undefined(format!(
            "u = 1 with (κ+1/2)² + μ² = {} < 1: the realization is not unique",
            r * r
        )));
    }
    let (d0, d2, _, _) = shifts(&spec.kappa, &spec.u, spec.sign);
    let p = HalfLineOperatorSpec::p(spec.s, 1.0, 0.0, 0.5 + r)?;
    let q = HalfLineOperatorSpec::q(spec.s, 1.0, 0.0, r - 0.5)?;
    let even: Vec<f64> = (0..size).map(|i| p.base_value(2 * i) + to_f64(&d0) * spec.s).collect();
    let odd: Vec<f64> = (0..size).map(|i| q.base_value(2 * i + 1) + to_f64(&d2) * spec.s).collect();
    let mut middle = even.clone();
    middle.extend(odd.iter().copied());
    middle.sort_by(f64::total_cmp);
    Ok([even, middle, odd])
}

/// Exact first term (in units of `s`) of the lower bound for the eigenvalue
/// of index `k` of a component: the unperturbed value `2k+1+2ς` plus the
/// shift of the block containing `k`.
pub fn complex2_first_term(tag: OperatorTag, sign: Sign, kappa: &Rational, u: &Rational, k: usize) -> Result<Rational> {
    let row = row_for(kappa, u, tag)?;
    let (d0, d2, d11, d12) = shifts(kappa, u, sign);
    let even = k % 2 == 0;
    let (varsigma, shift) = match tag {
        OperatorTag::P1 | OperatorTag::P2 if even => (row.sigma, d0),
        OperatorTag::Q1 | OperatorTag::Q2 if !even => (row.tau, d2),
        OperatorTag::W11 | OperatorTag::W22 | OperatorTag::W21 | OperatorTag::W12 => {
            if even {
                (row.sigma, d11)
            } else {
                (row.tau, d12)
            }
        }
        _ => return Err(Error::domain("spectral index", format!("{tag} has no index k={k}"))),
    };
    Ok(int(2 * k as i64 + 1) + varsigma.expect("row carries the parameter") * int(2) + shift)
}

/// The sign-table cell of a component at index `k`, transcribed line by
/// line.
pub fn complex2_sign_cell(tag: OperatorTag, sign: Sign, kappa: &Rational, u: &Rational, k: usize) -> Result<SignCell> {
    use SignValue::{Positive, Unknown};
    let even = k % 2 == 0;
    let kq = int(k as i64);
    let cell = match tag {
        OperatorTag::P1 if even => SignCell::plain(Positive),
        OperatorTag::P2 if even => match sign {
            Sign::Plus if kappa > &(rat(1, 2) - u) => {
                if kq < (kappa + u) * int(2) - int(1) {
                    SignCell::grey(Unknown)
                } else {
                    SignCell::plain(Positive)
                }
            }
            _ => SignCell::plain(Positive),
        },
        OperatorTag::Q1 if !even => match sign {
            Sign::Minus if kappa < &rat(-1, 2) => {
                if kq < -(kappa * int(2)) {
                    SignCell::grey(Unknown)
                } else {
                    SignCell::plain(Positive)
                }
            }
            _ => SignCell::plain(Positive),
        },
        OperatorTag::Q2 if !even => SignCell::plain(Positive),
        OperatorTag::W11 | OperatorTag::W22 | OperatorTag::W21 => SignCell::plain(Positive),
        _ => return Err(Error::domain("sign table", format!("{tag} has no entry for k={k}"))),
    };
    Ok(cell)
}

/// Comparison of the spectra of `Δ_ev = Δ₀ ⊕ Δ₂` and `Δ₁`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvOddReport {
    pub even_tags: [OperatorTag; 2],
    pub odd_tag: OperatorTag,
    /// Lowest values of the even assembly.
    pub even: Vec<f64>,
    /// Lowest values of `Δ₁`.
    pub odd: Vec<f64>,
    /// `max |even_i − odd_i| / |odd_i|` over the compared values.
    pub max_relative_deviation: f64,
}

/// Number of eigenvalues compared by [`ev_odd_match`].
pub const EV_ODD_COUNT: usize = 5;

/// Ritz spectra of `Δ₀ ⊕ Δ₂` and `Δ₁` at the max/min realization and their
/// deviation over the lowest [`EV_ODD_COUNT`] values.
pub fn ev_odd_match(spec: &Complex2Spec, choice: Choice, size: usize) -> Result<EvOddReport> {
    let (k, u) = (&spec.kappa, &spec.u);
    let tags = [
        complex2_assignment(k, u, choice, 0)?,
        complex2_assignment(k, u, choice, 1)?,
        complex2_assignment(k, u, choice, 2)?,
    ];
    let spectra = complex2_spectra(spec, tags, size)?;
    let mut even = spectra.degrees[0].clone();
    even.extend(spectra.degrees[2].iter().copied());
    even.sort_by(f64::total_cmp);
    even.truncate(EV_ODD_COUNT);
    let mut odd = spectra.degrees[1].clone();
    odd.truncate(EV_ODD_COUNT);
    let max_relative_deviation = even
        .iter()
        .zip(&odd)
        .map(|(e, o)| (e - o).abs() / o.abs().max(f64::MIN_POSITIVE))
        .fold(0.0, f64::max);
    Ok(EvOddReport {
        even_tags: [tags[0], tags[2]],
        odd_tag: tags[1],
        even,
        odd,
        max_relative_deviation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use OperatorTag::*;

    fn row(k: &Rational, u: &Rational, tag: OperatorTag) -> Complex2Row {
        row_for(k, u, tag).unwrap()
    }

    #[test]
    fn parameter_examples() {
        let u = rat(1, 2);
        let r = row(&int(0), &u, W21);
        assert!(r.table_valid && r.derived_valid);
        assert_eq!(r.theta, Some(rat(1, 2)));
        let r = row(&rat(3, 10), &u, W21);
        assert!(!r.table_valid && !r.derived_valid);
        for k in [int(-1), int(0), rat(7, 10)] {
            let r = row(&k, &rat(1, 3), W12);
            assert!(!r.table_valid && !r.derived_valid);
        }
    }

    #[test]
    fn assignment_examples() {
        assert_eq!(complex2_assignment(&int(0), &rat(1, 2), Choice::Max, 0).unwrap(), P1);
        assert_eq!(complex2_assignment(&int(0), &rat(3, 10), Choice::Min, 1).unwrap(), Unknown);
        assert_eq!(complex2_assignment(&int(-1), &rat(1, 2), Choice::Max, 2).unwrap(), Q2);
        assert_eq!(complex2_assignment(&rat(-3, 5), &rat(1, 2), Choice::Max, 0).unwrap(), Unknown);
        assert!(complex2_assignment(&int(0), &int(1), Choice::Max, 0).is_err());
        assert!(complex2_assignment(&int(0), &rat(1, 2), Choice::Max, 3).is_err());
    }

    #[test]
    fn first_terms_match_printed_formulas() {
        let (k, u) = (rat(1, 10), rat(3, 10));
        let ku = &k + &u;
        let two = int(2);
        let cases = [
            (P1, Sign::Plus, 4, int(8)),
            (P1, Sign::Minus, 4, &two * (int(5) + &ku * &two)),
            (P2, Sign::Plus, 4, &two * (int(5) - &ku * &two)),
            (P2, Sign::Minus, 4, int(12)),
            (Q1, Sign::Plus, 3, int(8)),
            (Q1, Sign::Minus, 3, &two * (int(3) + &k * &two)),
            (Q2, Sign::Plus, 3, &two * (int(3) - &k * &two)),
            (Q2, Sign::Minus, 3, int(4)),
            (W11, Sign::Plus, 2, int(4)),
            (W11, Sign::Minus, 2, &two * (int(3) + &k * &two)),
            (W11, Sign::Plus, 3, int(8)),
            (W21, Sign::Minus, 3, &two * (int(3) + &ku * &two)),
            (W21, Sign::Plus, 2, &two * (int(3) - &k * &two)),
            (W22, Sign::Minus, 2, int(8)),
            (W22, Sign::Plus, 3, &two * (int(3) - &ku * &two)),
            (W22, Sign::Minus, 3, int(4)),
        ];
        for (tag, sign, idx, expected) in cases {
            assert_eq!(complex2_first_term(tag, sign, &k, &u, idx).unwrap(), expected, "{tag}{sign} k={idx}");
        }
    }

    #[test]
    fn unknown_assignment_is_refused() {
        let spec = Complex2Spec::new(1.0, int(0), rat(3, 10), 1.0, Sign::Plus).unwrap();
        let err = complex2_spectra(&spec, [P1, Unknown, Q1], 8).unwrap_err();
        assert!(matches!(err, Error::UnknownAssignment { .. }));
        assert!(complex2_spectra(&spec, [Q1, W11, Q1], 8).is_err());
    }

    #[test]
    fn spectrum_sources_fill_grey_cells() {
        let u = rat(1, 3);
        // −1/2 < κ ≤ u − 1/2: Δ_max,1 is grey but its spectrum is σ(𝒫₁⊕𝒬₁).
        let k = rat(-1, 6);
        assert_eq!(complex2_assignment(&k, &u, Choice::Max, 1).unwrap(), Unknown);
        assert_eq!(complex2_spectrum_source(&k, &u, Choice::Max, true).unwrap(), SpectrumSource::Sum(P1, Q1));
        assert_eq!(complex2_spectrum_source(&k, &u, Choice::Min, true).unwrap(), SpectrumSource::Sum(P2, Q2));
    }

    #[test]
    fn enrichment_resolves_the_coupled_ground_state() {
        // Δ_min,1 = 𝒲₂₂ while Δ_ev = 𝒫₂ ⊕ 𝒬₂; the lowest values must agree.
        let spec = Complex2Spec::new(10.0, rat(-1, 4), rat(3, 10), 1.0, Sign::Minus).unwrap();
        let report = ev_odd_match(&spec, Choice::Min, 40).unwrap();
        assert_eq!(report.odd_tag, W22);
        assert!(report.max_relative_deviation < 1e-6, "{report:?}");
        let op = complex2_operator(&spec, W22).unwrap();
        let plain = shifted_ritz_with(&op, EnrichedBasis::plain(40)).unwrap();
        assert!((plain[0] - report.even[0]) / report.even[0] > 0.3);
    }
}
