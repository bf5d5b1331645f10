//! Generalized Hermite polynomials and the χ-bases of the half-line models.
//!
//! For `s > 0` and an exponent `σ`, `p_k = p_{s,σ,k}` denotes the orthonormal
//! polynomials of the even measure `|x|^{2σ} e^{−sx²} dx` on `ℝ`, and
//! `φ_k = p_k e^{−sx²/2}`. Restricted to the half line, the functions
//! `χ_k = √2 ρ^a φ_k` are orthonormal in `L²(ℝ₊, ρ^{2c₁} dρ)` whenever
//! `σ = a + c₁`; they are the eigenfunctions of the unperturbed operators.
//!
//! # Weight convention
//!
//! The measure is sometimes printed as `|x|^{σ/2} e^{−sx²} dx`. That exponent
//! is incompatible with the orthonormality of `χ_k` in `L²_{c₁,+}`, which
//! requires `|x|^{2σ}`. This module uses `|x|^{2σ}` throughout; the closed-form
//! recurrence below is validated against an independent moment computation.
//!
//! # Evaluation
//!
//! Even and odd polynomials reduce to Laguerre polynomials in `t = x²`:
//! `p_{2j}(x) = c·L_j^{(σ−1/2)}(sx²)` and `p_{2j+1}(x) = c′·x·L_j^{(σ+1/2)}(sx²)`.
//! They are evaluated with the orthonormal Laguerre three-term recurrence,
//! never through explicit coefficients. The parity split also covers the odd
//! range `−3/2 < σ ≤ −1/2`, where `|x|^{2σ}` is not integrable but
//! `x²|x|^{2σ}` is.

use crate::error::{Error, Result};
use crate::numerics::ddouble::DoubleDouble;
use crate::numerics::{gauss_laguerre, ln_gamma, SymMatrix};

/// Largest recurrence length accepted before evaluations at quadrature nodes
/// risk overflowing double precision.
pub const MAX_BASIS_FUNCTIONS: usize = 140;

/// Extra quadrature nodes beyond the basis size. Every Gram entry is a
/// polynomial of degree at most `2K − 2` in `t`, so `K` nodes already suffice.
pub const EXTRA_NODES: usize = 10;

/// Parity of a family of generalized Hermite functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// `0` for even, `1` for odd.
    pub fn offset(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

/// Scale, exponent and parity of a family `p_{s,σ,k}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenHermiteParams {
    pub s: f64,
    pub sigma: f64,
    pub parity: Parity,
}

impl GenHermiteParams {
    /// Validates `s > 0` and `σ > −1/2` (even) or `σ > −3/2` (odd).
    pub fn new(s: f64, sigma: f64, parity: Parity) -> Result<Self> {
        if !(s > 0.0) || !s.is_finite() {
            return Err(Error::domain("generalized Hermite scale", format!("s={s} must be positive")));
        }
        let bound = match parity {
            Parity::Even => -0.5,
            Parity::Odd => -1.5,
        };
        if !(sigma > bound) || !sigma.is_finite() {
            return Err(Error::Divergent {
                exponent: sigma,
                bound,
                context: format!("{parity:?} generalized Hermite weight |x|^(2σ)"),
            });
        }
        Ok(GenHermiteParams { s, sigma, parity })
    }

    /// Laguerre exponent of the reduced polynomial in `t = x²`.
    fn laguerre_alpha(&self) -> f64 {
        match self.parity {
            Parity::Even => self.sigma - 0.5,
            Parity::Odd => self.sigma + 0.5,
        }
    }

    /// `ln` of the factor turning probability-normalised Laguerre polynomials
    /// in `st` into orthonormal ones for `t^α e^{−st}`.
    fn ln_norm(&self) -> f64 {
        let alpha = self.laguerre_alpha();
        0.5 * ((alpha + 1.0) * self.s.ln() - ln_gamma(alpha + 1.0))
    }
}

/// Closed-form coefficients `β₁, …, β_K` of the recurrence
/// `x p_{k−1} = √β_k p_k + √β_{k−1} p_{k−2}` for `|x|^{2σ} e^{−sx²}`:
/// `β_{2j} = j/s`, `β_{2j+1} = (j + σ + 1/2)/s`.
///
/// Requires `σ > −1/2` (the full two-parity recurrence starts at `p₀`).
pub fn recurrence_coefficients(params: &GenHermiteParams, k_max: usize) -> Result<Vec<f64>> {
    if k_max > 2 * MAX_BASIS_FUNCTIONS {
        return Err(Error::Precision {
            detail: format!("{k_max} recurrence coefficients exceed the budget of {}", 2 * MAX_BASIS_FUNCTIONS),
        });
    }
    if !(params.sigma > -0.5) {
        return Err(Error::Divergent {
            exponent: params.sigma,
            bound: -0.5,
            context: "full recurrence requires an integrable weight |x|^(2σ)".into(),
        });
    }
    Ok((1..=k_max)
        .map(|k| {
            let j = (k / 2) as f64;
            if k % 2 == 0 {
                j / params.s
            } else {
                (j + params.sigma + 0.5) / params.s
            }
        })
        .collect())
}

/// Values `P_0(t), …, P_{m−1}(t)` of the reduced polynomials of the given
/// parity, where `p_{2j+ε}(x) = x^ε P_j(x²)`.
fn reduced_values(params: &GenHermiteParams, m: usize, t: f64) -> Vec<f64> {
    let alpha = params.laguerre_alpha();
    let norm = params.ln_norm().exp();
    let y = params.s * t;
    let mut out = Vec::with_capacity(m);
    let (mut prev, mut cur) = (0.0, 1.0);
    for j in 0..m {
        out.push(norm * cur);
        let a = 2.0 * j as f64 + alpha + 1.0;
        let b_next = (((j + 1) as f64) * ((j + 1) as f64 + alpha)).sqrt();
        let b = ((j as f64) * (j as f64 + alpha)).sqrt();
        let next = ((y - a) * cur - b * prev) / b_next;
        prev = cur;
        cur = next;
    }
    out
}

/// `φ_k(x) = p_k(x) e^{−sx²/2}` for the family `params`.
///
/// The parity of `k` selects the reduced recurrence; for an odd family with
/// `σ ≤ −1/2` only odd `k` are defined. Values whose logarithm falls below the
/// double-precision range are returned as zero (logged once per call).
pub fn eval_phi(params: &GenHermiteParams, k: usize, x: f64) -> Result<f64> {
    let parity = if k % 2 == 0 { Parity::Even } else { Parity::Odd };
    let fam = GenHermiteParams::new(params.s, params.sigma, parity)?;
    if k / 2 >= 4 * MAX_BASIS_FUNCTIONS {
        return Err(Error::Precision {
            detail: format!("index {k} exceeds the evaluation budget"),
        });
    }
    let alpha = fam.laguerre_alpha();
    let y = fam.s * x * x;
    // Recurrence with running rescaling to survive large arguments.
    let (mut prev, mut cur, mut ln_scale) = (0.0f64, 1.0f64, 0.0f64);
    for j in 0..k / 2 {
        let a = 2.0 * j as f64 + alpha + 1.0;
        let b_next = (((j + 1) as f64) * ((j + 1) as f64 + alpha)).sqrt();
        let b = ((j as f64) * (j as f64 + alpha)).sqrt();
        let next = ((y - a) * cur - b * prev) / b_next;
        prev = cur;
        cur = next;
        if cur.abs() > 1e200 {
            prev *= 1e-200;
            cur *= 1e-200;
            ln_scale += 200.0 * std::f64::consts::LN_10;
        }
    }
    if cur == 0.0 || (parity == Parity::Odd && x == 0.0) {
        return Ok(0.0);
    }
    let mut ln_abs = cur.abs().ln() + ln_scale + fam.ln_norm() - 0.5 * fam.s * x * x;
    if parity == Parity::Odd {
        ln_abs += x.abs().ln();
    }
    if ln_abs < -745.0 {
        log::warn!("φ_{k}({x}) underflows double precision; returning 0");
        return Ok(0.0);
    }
    if ln_abs > 709.0 {
        return Err(Error::Precision {
            detail: format!("φ_{k}({x}) overflows double precision"),
        });
    }
    let sign = cur.signum() * if parity == Parity::Odd { x.signum() } else { 1.0 };
    Ok(sign * ln_abs.exp())
}

/// A truncated χ-basis `χ_k = √2 ρ^a φ_{s,σ,k}` with `K` functions of one
/// parity (`k = ε, ε+2, …, ε+2K−2`), orthonormal in `L²(ℝ₊, ρ^{2c} dρ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiBasis {
    pub params: GenHermiteParams,
    /// The power `a` (even families) or `b` (odd families).
    pub a_or_b: f64,
    /// The weight exponent `c₁` (even) or `d₁` (odd).
    pub c1_or_d1: f64,
    /// Number of basis functions.
    pub size: usize,
}

impl ChiBasis {
    /// Builds a basis, checking `a + c = σ` up to rounding.
    pub fn new(params: GenHermiteParams, a_or_b: f64, c1_or_d1: f64, size: usize) -> Result<Self> {
        let tol = 1e-12 * (1.0 + params.sigma.abs());
        if ((a_or_b + c1_or_d1) - params.sigma).abs() > tol {
            return Err(Error::domain(
                "χ-basis",
                format!("a + c = {} differs from σ = {}", a_or_b + c1_or_d1, params.sigma),
            ));
        }
        if size == 0 || size > MAX_BASIS_FUNCTIONS {
            return Err(Error::Precision {
                detail: format!("basis size {size} outside 1..={MAX_BASIS_FUNCTIONS}"),
            });
        }
        Ok(ChiBasis {
            params,
            a_or_b,
            c1_or_d1,
            size,
        })
    }

    /// Basis with `c = 0`, i.e. `a = σ` (the plain measure `dρ`).
    pub fn plain(params: GenHermiteParams, size: usize) -> Result<Self> {
        Self::new(params, params.sigma, 0.0, size)
    }

    /// Polynomial index `k` of the `i`-th basis function.
    pub fn index(&self, i: usize) -> usize {
        2 * i + self.params.parity.offset()
    }
}

/// `M_{jk} = ⟨ρ^{−w} χ_j, ρ^{−w} χ_k⟩_{c}`, computed exactly (up to rounding)
/// by Gauss–Laguerre quadrature in `t = ρ²`.
///
/// The integrand is `t^{σ−w∓1/2}` times a polynomial, so the integral exists
/// iff `σ − w > −1/2` (even) or `σ − w > −3/2` (odd).
pub fn gram_negative_power(basis: &ChiBasis, w: f64) -> Result<SymMatrix> {
    let p = &basis.params;
    let alpha = match p.parity {
        Parity::Even => p.sigma - w - 0.5,
        Parity::Odd => p.sigma - w + 0.5,
    };
    if !(alpha > -1.0) {
        return Err(Error::Divergent {
            exponent: 2.0 * (p.sigma - w),
            bound: match p.parity {
                Parity::Even => -1.0,
                Parity::Odd => -3.0,
            },
            context: format!("Gram matrix of ρ^(-{w}) χ_k at the origin"),
        });
    }
    let k = basis.size;
    let rule = gauss_laguerre(alpha, k + EXTRA_NODES, p.s)?;
    let values: Vec<Vec<f64>> = rule.nodes.iter().map(|&t| reduced_values(p, k, t)).collect();
    Ok(SymMatrix::from_upper_fn(k, |i, j| {
        let mut acc = DoubleDouble::default();
        for (q, wq) in rule.weights.iter().enumerate() {
            acc.add_product(wq * values[q][i], values[q][j]);
        }
        acc.value()
    }))
}

/// `C_{jk} = 2 ∫₀^∞ ρ^{2θ−1} p_{σ,2j}(ρ) p_{τ,2k+1}(ρ) e^{−sρ²} dρ`, the
/// coupling between an even and an odd χ-basis through
/// `⟨ρ^{−a−b−1} ρ^b φ_odd, ρ^a φ_even⟩_θ`.
///
/// Rows index the even basis, columns the odd basis. The integral exists iff
/// `θ > −1/2`.
pub fn cross_gram(even: &ChiBasis, odd: &ChiBasis, theta: f64) -> Result<Vec<Vec<f64>>> {
    if even.params.parity != Parity::Even || odd.params.parity != Parity::Odd {
        return Err(Error::domain("cross Gram", "expects an even basis and an odd basis"));
    }
    if even.params.s != odd.params.s {
        return Err(Error::domain("cross Gram", "bases must share the scale s"));
    }
    let alpha = theta - 0.5;
    if !(alpha > -1.0) {
        return Err(Error::Divergent {
            exponent: 2.0 * theta - 1.0,
            bound: -2.0,
            context: "coupling ρ^(2θ-1)·odd·even at the origin".into(),
        });
    }
    let n = even.size.max(odd.size) + EXTRA_NODES;
    cross_gram_with_nodes(even, odd, theta, n)
}

/// [`cross_gram`] with an explicit node count (used to confirm quadrature
/// convergence).
pub fn cross_gram_with_nodes(even: &ChiBasis, odd: &ChiBasis, theta: f64, nodes: usize) -> Result<Vec<Vec<f64>>> {
    let rule = gauss_laguerre(theta - 0.5, nodes, even.params.s)?;
    let ev: Vec<Vec<f64>> = rule.nodes.iter().map(|&t| reduced_values(&even.params, even.size, t)).collect();
    let od: Vec<Vec<f64>> = rule.nodes.iter().map(|&t| reduced_values(&odd.params, odd.size, t)).collect();
    Ok((0..even.size)
        .map(|i| {
            (0..odd.size)
                .map(|j| {
                    let mut acc = DoubleDouble::default();
                    for (q, wq) in rule.weights.iter().enumerate() {
                        acc.add_product(wq * ev[q][i], od[q][j]);
                    }
                    acc.value()
                })
                .collect()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn even(s: f64, sigma: f64) -> GenHermiteParams {
        GenHermiteParams::new(s, sigma, Parity::Even).unwrap()
    }

    #[test]
    fn classical_hermite_coefficients() {
        let b = recurrence_coefficients(&even(1.0, 0.0), 3).unwrap();
        assert_eq!(b, vec![0.5, 1.0, 1.5]);
        let b = recurrence_coefficients(&even(1.0, 1.0), 1).unwrap();
        assert_eq!(b, vec![1.5]);
    }

    #[test]
    fn coefficients_scale_inversely_with_s() {
        let b1 = recurrence_coefficients(&even(1.0, 0.25), 10).unwrap();
        let b4 = recurrence_coefficients(&even(4.0, 0.25), 10).unwrap();
        for (x, y) in b1.iter().zip(&b4) {
            assert!((x / 4.0 - y).abs() < 1e-15);
        }
    }

    #[test]
    fn ground_state_and_values_at_origin() {
        let p = even(1.0, 0.0);
        for &x in &[0.0, 0.3, 1.7] {
            let expected = PI.powf(-0.25) * (-x * x / 2.0f64).exp();
            assert!((eval_phi(&p, 0, x).unwrap() - expected).abs() < 1e-15);
        }
        assert_eq!(eval_phi(&p, 1, 0.0).unwrap(), 0.0);
        let expected = -PI.powf(-0.25) / 2f64.sqrt();
        assert!((eval_phi(&p, 2, 0.0).unwrap() - expected).abs() < 1e-15);
    }

    #[test]
    fn far_tail_saturates_to_zero() {
        let p = even(1.0, 0.5);
        assert_eq!(eval_phi(&p, 4, 60.0).unwrap(), 0.0);
    }

    #[test]
    fn invalid_exponents_are_rejected() {
        assert!(GenHermiteParams::new(1.0, -0.5, Parity::Even).is_err());
        assert!(GenHermiteParams::new(1.0, -1.0, Parity::Odd).is_ok());
        assert!(GenHermiteParams::new(0.0, 1.0, Parity::Odd).is_err());
    }

    #[test]
    fn gram_unit_at_zero_power() {
        let b = ChiBasis::plain(even(1.0, 1.0), 12).unwrap();
        assert!(gram_negative_power(&b, 0.0).unwrap().max_deviation_from_identity() < 1e-13);
    }

    #[test]
    fn gram_ground_entry_gamma_ratio() {
        // Γ(σ+1/2−w) s^w / Γ(σ+1/2) with σ=1, w=1/2.
        let closed = (ln_gamma(1.0) - ln_gamma(1.5)).exp();
        let b = ChiBasis::plain(even(1.0, 1.0), 4).unwrap();
        let m = gram_negative_power(&b, 0.5).unwrap();
        assert!((m.get(0, 0) - closed).abs() < 1e-13);
        let b4 = ChiBasis::plain(even(4.0, 1.0), 4).unwrap();
        let m4 = gram_negative_power(&b4, 0.5).unwrap();
        assert!((m4.get(0, 0) - 2.0 * closed).abs() < 1e-13);
    }

    #[test]
    fn gram_rejects_divergent_power() {
        let b = ChiBasis::plain(even(1.0, 0.25), 4).unwrap();
        assert!(matches!(gram_negative_power(&b, 0.75), Err(Error::Divergent { .. })));
    }

    #[test]
    fn basis_relation_is_checked() {
        assert!(ChiBasis::new(even(1.0, 1.0), 0.5, 0.25, 4).is_err());
        assert!(ChiBasis::new(even(1.0, 1.0), 0.5, 0.5, 4).is_ok());
    }
}
