//! The elliptic complex of length one, `d = d/dρ − κρ^{−1} ± sρ` on `ℝ₊`.
//!
//! Its Laplacian components are
//!
//! * `Δ₀ = H + κ(κ−1)ρ^{−2} ∓ s(1+2κ)`, realized by `𝒜₁` (`σ = κ`,
//!   `κ > −1/2`) or `𝒜₂` (`σ = 1−κ`, `κ < 3/2`) on even indices `k`;
//! * `Δ₁ = H + κ(κ+1)ρ^{−2} ± s(1−2κ)`, realized by `ℬ₁` (`τ = κ`,
//!   `κ > −3/2`) or `ℬ₂` (`τ = −1−κ`, `κ < 1/2`) on odd indices `k`.
//!
//! Spectra are derived from these operator definitions: the unperturbed
//! value `(2k+1+2ς)s` of the model operator plus the constant shift. This
//! gives `𝒜₁⁺: 2ks`, `𝒜₁⁻: 2(k+1+2κ)s`, `𝒜₂⁺: 2(k+1−2κ)s`, `𝒜₂⁻: 2(k+2)s`,
//! `ℬ₁⁺: 2(k+1)s`, `ℬ₁⁻: 2(k+2κ)s`, `ℬ₂⁺: 2(k−2κ)s`, `ℬ₂⁻: 2(k−1)s`.
//!
//! The printed closed formulas for `𝒜₁` and `𝒜₂` are textually identical,
//! `(2k+4−(1±1)(1+2κ))s`, which matches `𝒜₂` but not `𝒜₁`; the `𝒜₁` reading
//! above is the one forced by `Δ₀` and by the sign table (`𝒜₁⁺` has a zero
//! eigenvalue at `k = 0`). The sign table also lists `ℬ₂⁻` as "0 if k=0",
//! although `ℬ` only has odd indices; this is read as the lowest odd index
//! `k = 1`, where `2(k−1)s` vanishes.

use super::{Choice, OperatorTag, Sign, SignCell, SignValue};
use crate::error::{Error, Result};
use crate::model_operators::HalfLineOperatorSpec;
use crate::numerics::rational::{int, rat, to_f64};
use crate::numerics::Rational;
use serde::Serialize;

/// Parameters of the length-one complex.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Complex1Spec {
    pub s: f64,
    #[serde(serialize_with = "crate::numerics::rational::serialize_rational")]
    pub kappa: Rational,
    pub sign: Sign,
}

impl Complex1Spec {
    /// Validates `s > 0`.
    pub fn new(s: f64, kappa: Rational, sign: Sign) -> Result<Self> {
        if !(s.is_finite() && s > 0.0) {
            return Err(Error::domain("complex 1", format!("s={s} must be positive")));
        }
        Ok(Self { s, kappa, sign })
    }
}

/// Definedness and parameters of `𝒜₁, 𝒜₂` (`σ`) and `ℬ₁, ℬ₂` (`τ`).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Complex1OperatorTable {
    #[serde(serialize_with = "crate::numerics::rational::serialize_opt_rational")]
    pub a1: Option<Rational>,
    #[serde(serialize_with = "crate::numerics::rational::serialize_opt_rational")]
    pub a2: Option<Rational>,
    #[serde(serialize_with = "crate::numerics::rational::serialize_opt_rational")]
    pub b1: Option<Rational>,
    #[serde(serialize_with = "crate::numerics::rational::serialize_opt_rational")]
    pub b2: Option<Rational>,
    /// `𝒜₁ = 𝒜₂`, which happens just when `κ = 1/2`.
    pub a_equal: bool,
    /// `ℬ₁ = ℬ₂`, which happens just when `κ = −1/2`.
    pub b_equal: bool,
}

impl Complex1OperatorTable {
    /// The parameter `σ` or `τ` of a variant, if it is defined.
    pub fn parameter(&self, tag: OperatorTag) -> Option<&Rational> {
        match tag {
            OperatorTag::A1 => self.a1.as_ref(),
            OperatorTag::A2 => self.a2.as_ref(),
            OperatorTag::B1 => self.b1.as_ref(),
            OperatorTag::B2 => self.b2.as_ref(),
            _ => None,
        }
    }
}

/// The table of self-adjoint operators defined by `Δ₀` and `Δ₁`.
pub fn complex1_operator_table(kappa: &Rational) -> Complex1OperatorTable {
    let k = kappa;
    let a1 = (k > &rat(-1, 2)).then(|| k.clone());
    let a2 = (k < &rat(3, 2)).then(|| int(1) - k);
    let b1 = (k > &rat(-3, 2)).then(|| k.clone());
    let b2 = (k < &rat(1, 2)).then(|| int(-1) - k);
    let a_equal = matches!((&a1, &a2), (Some(x), Some(y)) if x == y);
    let b_equal = matches!((&b1, &b2), (Some(x), Some(y)) if x == y);
    Complex1OperatorTable {
        a1,
        a2,
        b1,
        b2,
        a_equal,
        b_equal,
    }
}

/// Realizations `(Δ_{·,0}, Δ_{·,1})` of the max/min boundary condition.
///
/// The table rows are `κ ≥ 1/2 → (𝒜₁, ℬ₁)`, `|κ| < 1/2 → max (𝒜₁, ℬ₁), min
/// (𝒜₂, ℬ₂)` and `κ ≤ −1/2 → (𝒜₂, ℬ₂)`. The last row is printed with
/// `κ ≤ 1/2`, which would overlap the other two; it is read as `κ ≤ −1/2`.
pub fn complex1_assignment(kappa: &Rational, choice: Choice) -> [OperatorTag; 2] {
    use OperatorTag::*;
    if kappa >= &rat(1, 2) {
        [A1, B1]
    } else if kappa > &rat(-1, 2) {
        match choice {
            Choice::Max => [A1, B1],
            Choice::Min => [A2, B2],
        }
    } else {
        [A2, B2]
    }
}

fn check_variant(kappa: &Rational, variant: OperatorTag) -> Result<Rational> {
    if !matches!(variant, OperatorTag::A1 | OperatorTag::A2 | OperatorTag::B1 | OperatorTag::B2) {
        return Err(Error::undefined(format!("{variant} is not a component of the length-one complex")));
    }
    complex1_operator_table(kappa)
        .parameter(variant)
        .cloned()
        .ok_or_else(|| Error::undefined(format!("{variant} is not defined at κ={kappa}")))
}

fn check_parity(variant: OperatorTag, k: usize) -> Result<()> {
    let odd = matches!(variant, OperatorTag::B1 | OperatorTag::B2);
    if (k % 2 == 1) != odd {
        return Err(Error::domain(
            "spectral index",
            format!("{variant} has {} indices, got k={k}", if odd { "odd" } else { "even" }),
        ));
    }
    Ok(())
}

/// Constant shift of `Δ₀` (`∓(1+2κ)`) or `Δ₁` (`±(1−2κ)`) in units of `s`.
fn shift_coefficient(kappa: &Rational, sign: Sign, variant: OperatorTag) -> Rational {
    let pm = int(sign.pm());
    match variant {
        OperatorTag::A1 | OperatorTag::A2 => -pm * (int(1) + kappa * int(2)),
        _ => pm * (int(1) - kappa * int(2)),
    }
}

/// Exact `λ_k / s` of a variant: `2k + 1 + 2ς` plus the shift coefficient.
pub fn complex1_coefficient(kappa: &Rational, sign: Sign, variant: OperatorTag, k: usize) -> Result<Rational> {
    let varsigma = check_variant(kappa, variant)?;
    check_parity(variant, k)?;
    Ok(int(2 * k as i64 + 1) + varsigma * int(2) + shift_coefficient(kappa, sign, variant))
}

fn model_operator(spec: &Complex1Spec, variant: OperatorTag) -> Result<HalfLineOperatorSpec> {
    let param = to_f64(&check_variant(&spec.kappa, variant)?);
    // The exponent u does not enter an unperturbed operator.
    match variant {
        OperatorTag::A1 | OperatorTag::A2 => HalfLineOperatorSpec::p(spec.s, 1.0, 0.0, param),
        _ => HalfLineOperatorSpec::q(spec.s, 1.0, 0.0, param),
    }
}

/// The eigenvalue of index `k` of a variant: the unperturbed model value
/// plus the constant shift, evaluated exactly and scaled by `s` (so that
/// zero modes are exactly zero).
pub fn complex1_eigenvalue(spec: &Complex1Spec, variant: OperatorTag, k: usize) -> Result<f64> {
    model_operator(spec, variant)?;
    Ok(to_f64(&complex1_coefficient(&spec.kappa, spec.sign, variant, k)?) * spec.s)
}

/// The first `count` eigenvalues of a variant, in index order (`k = 0, 2, …`
/// for `𝒜`, `k = 1, 3, …` for `ℬ`), each of multiplicity one.
pub fn complex1_spectrum(spec: &Complex1Spec, variant: OperatorTag, count: usize) -> Result<Vec<f64>> {
    let offset = usize::from(matches!(variant, OperatorTag::B1 | OperatorTag::B2));
    (0..count).map(|i| complex1_eigenvalue(spec, variant, 2 * i + offset)).collect()
}

/// The sign-table cell of a variant at index `k`, transcribed line by line.
pub fn complex1_sign_cell(variant: OperatorTag, sign: Sign, kappa: &Rational, k: usize) -> Result<SignCell> {
    use SignValue::*;
    check_variant(kappa, variant)?;
    check_parity(variant, k)?;
    let kq = int(k as i64);
    let half = rat(1, 2);
    let cell = match (variant, sign) {
        (OperatorTag::A1, Sign::Plus) => SignCell::plain(if k == 0 { Zero } else { Positive }),
        (OperatorTag::A1, Sign::Minus) => SignCell::plain(Positive),
        (OperatorTag::A2, Sign::Plus) => {
            if kappa > &half {
                let edge = kappa * int(2) - int(1);
                if kq < edge {
                    SignCell::grey(Negative)
                } else if kq == edge {
                    SignCell::plain(Zero)
                } else {
                    SignCell::plain(Positive)
                }
            } else if kappa == &half {
                SignCell::plain(if k == 0 { Zero } else { Positive })
            } else {
                SignCell::plain(Positive)
            }
        }
        (OperatorTag::A2, Sign::Minus) => SignCell::plain(Positive),
        (OperatorTag::B1, Sign::Plus) => SignCell::plain(Positive),
        (OperatorTag::B1, Sign::Minus) => {
            if kappa > &-half.clone() {
                SignCell::plain(Positive)
            } else if kappa == &-half {
                SignCell::plain(if k == 1 { Zero } else { Positive })
            } else {
                let edge = -(kappa * int(2));
                if kq < edge {
                    SignCell::grey(Negative)
                } else if kq == edge {
                    SignCell::plain(Zero)
                } else {
                    SignCell::plain(Positive)
                }
            }
        }
        (OperatorTag::B2, Sign::Plus) => SignCell::plain(Positive),
        (OperatorTag::B2, Sign::Minus) => SignCell::plain(if k == 1 { Zero } else { Positive }),
        _ => unreachable!("variant checked above"),
    };
    Ok(cell)
}

#[cfg(test)]
mod tests {
    use super::*;
    use OperatorTag::*;

    #[test]
    fn operator_table_examples() {
        let t = complex1_operator_table(&int(1));
        assert_eq!((t.a1, t.a2, t.b1, t.b2.is_none()), (Some(int(1)), Some(int(0)), Some(int(1)), true));
        let t = complex1_operator_table(&rat(1, 2));
        assert!(t.a_equal && !t.b_equal);
        let t = complex1_operator_table(&int(-2));
        assert_eq!((t.a1, t.a2, t.b1, t.b2), (None, Some(int(3)), None, Some(int(1))));
        assert!(complex1_operator_table(&rat(-1, 2)).b_equal);
    }

    #[test]
    fn assignment_examples() {
        assert_eq!(complex1_assignment(&int(0), Choice::Max), [A1, B1]);
        assert_eq!(complex1_assignment(&int(0), Choice::Min), [A2, B2]);
        assert_eq!(complex1_assignment(&int(3), Choice::Min), [A1, B1]);
        assert_eq!(complex1_assignment(&int(-1), Choice::Max), [A2, B2]);
    }

    #[test]
    fn spectrum_examples() {
        let spec = Complex1Spec::new(1.0, rat(1, 3), Sign::Plus).unwrap();
        assert_eq!(complex1_eigenvalue(&spec, A1, 0).unwrap(), 0.0);
        let spec = Complex1Spec::new(1.0, rat(-1, 2), Sign::Minus).unwrap();
        assert!(complex1_eigenvalue(&spec, B1, 1).unwrap().abs() < 1e-15);
        let spec = Complex1Spec::new(1.0, rat(1, 5), Sign::Minus).unwrap();
        assert!((complex1_eigenvalue(&spec, A2, 0).unwrap() - 4.0).abs() < 1e-14);
        assert!(complex1_eigenvalue(&spec, A2, 1).is_err());
        let spec = Complex1Spec::new(1.0, int(1), Sign::Minus).unwrap();
        assert!(complex1_eigenvalue(&spec, B2, 1).is_err());
    }

    #[test]
    fn exact_values_match_model_operators() {
        for kappa in [rat(-1, 3), int(0), rat(1, 4), rat(1, 2), rat(6, 5)] {
            let table = complex1_operator_table(&kappa);
            for sign in Sign::ALL {
                let spec = Complex1Spec::new(2.0, kappa.clone(), sign).unwrap();
                for tag in [A1, A2, B1, B2] {
                    if table.parameter(tag).is_none() {
                        continue;
                    }
                    let op = model_operator(&spec, tag).unwrap();
                    let offset = usize::from(matches!(tag, B1 | B2));
                    for k in (offset..12).step_by(2) {
                        let via_op = op.base_value(k) + to_f64(&shift_coefficient(&kappa, sign, tag)) * spec.s;
                        assert!((complex1_eigenvalue(&spec, tag, k).unwrap() - via_op).abs() < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn closed_forms() {
        let kappa = rat(1, 4);
        let cases = [
            (A1, Sign::Plus, 2, int(4)),
            (A1, Sign::Minus, 2, int(2) * (int(3) + &kappa * int(2))),
            (A2, Sign::Plus, 2, int(2) * (int(3) - &kappa * int(2))),
            (A2, Sign::Minus, 2, int(8)),
            (B1, Sign::Plus, 3, int(8)),
            (B1, Sign::Minus, 3, int(2) * (int(3) + &kappa * int(2))),
            (B2, Sign::Plus, 3, int(2) * (int(3) - &kappa * int(2))),
            (B2, Sign::Minus, 3, int(4)),
        ];
        for (variant, sign, k, expected) in cases {
            assert_eq!(complex1_coefficient(&kappa, sign, variant, k).unwrap(), expected, "{variant}{sign}");
        }
    }

    #[test]
    fn sign_cells_examples() {
        let c = complex1_sign_cell(B2, Sign::Minus, &int(0), 1).unwrap();
        assert_eq!(c, SignCell::plain(SignValue::Zero));
        let c = complex1_sign_cell(A2, Sign::Plus, &int(1), 0).unwrap();
        assert!(c.grey && c.value == SignValue::Negative);
        let c = complex1_sign_cell(A2, Sign::Plus, &int(1), 1);
        assert!(c.is_err());
    }
}
