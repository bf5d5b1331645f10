//! Half-line model operators.
//!
//! On `ℝ₊` with the harmonic oscillator `H = −d²/dρ² + s²ρ²`:
//!
//! * `P₀ = H − 2c₁ρ^{−1} d/dρ + c₂ρ^{−2}` on `ρ^a 𝒮_ev,+` in `L²(ρ^{2c₁}dρ)`,
//! * `Q₀ = H − 2d₁ d/dρ ρ^{−1} + d₂ρ^{−2}` on `ρ^b 𝒮_odd,+` in `L²(ρ^{2d₁}dρ)`,
//!
//! with `a² + (2c₁−1)a − c₂ = 0`, `b² + (2d₁+1)b − d₂ = 0`, `σ = a + c₁`,
//! `τ = b + d₁`. Their spectra are `λ_k = (2k + 1 + 2ς_k)s` with `ς_k = σ`
//! for even `k` and `ς_k = τ` for odd `k`, with eigenfunctions the χ-bases of
//! [`crate::hermite_basis`].
//!
//! The perturbations `𝒫`, `𝒬` add `ξρ^{−2u}`, and `𝒲` couples an even and an
//! odd component through `η ρ^{−a−b−1}` in the `θ`-weighted product. They are
//! defined by their quadratic forms; this module assembles those forms on a
//! truncated χ-basis and diagonalises them. By the min–max principle the
//! resulting Ritz values are upper bounds of the true eigenvalues and
//! decrease as the basis grows.
//!
//! The region predicates and the existence hypotheses of `𝒲` live in
//! [`regions`] and use exact rational arithmetic only.

pub mod enriched;
pub mod regions;

pub use enriched::{enriched_ritz, EnrichedBasis};
pub use regions::{in_j1, in_j2, in_k1, in_k1p, in_k2, in_k2p, ww_hypotheses, WwClause, WwOutcome};

use crate::error::{Error, Result};
use crate::hermite_basis::{cross_gram, gram_negative_power, ChiBasis, GenHermiteParams, Parity};
use crate::numerics::{sym_eigen, SymMatrix};
use serde::Serialize;

/// Default basis size for spectra.
pub const DEFAULT_BASIS_SIZE: usize = 40;
/// Default basis size for growth-exponent and overlap studies.
pub const STUDY_BASIS_SIZE: usize = 60;
/// Relative eigenvalue separation (in units of `s`) below which Ritz values
/// are treated as one cluster.
pub const CLUSTER_TOLERANCE: f64 = 1e-8;

/// Which model operator a parameter record describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum OperatorKind {
    /// Even component only (`P₀`, `𝒫`).
    P,
    /// Odd component only (`Q₀`, `𝒬`).
    Q,
    /// Coupled even ⊕ odd operator `𝒲`.
    W,
}

/// Full parameter record of one half-line model operator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HalfLineOperatorSpec {
    pub kind: OperatorKind,
    pub s: f64,
    pub u: f64,
    pub xi: f64,
    pub eta: f64,
    pub a: f64,
    pub b: f64,
    pub c1: f64,
    pub c2: f64,
    pub d1: f64,
    pub d2: f64,
    pub sigma: f64,
    pub tau: f64,
    pub theta: f64,
}

impl HalfLineOperatorSpec {
    /// `𝒫` acting in `L²₊` (`c₁ = 0`, `a = σ`, `c₂ = σ(σ − 1)`).
    pub fn p(s: f64, u: f64, xi: f64, sigma: f64) -> Result<Self> {
        Self {
            kind: OperatorKind::P,
            s,
            u,
            xi,
            eta: 0.0,
            a: sigma,
            b: 0.0,
            c1: 0.0,
            c2: sigma * (sigma - 1.0),
            d1: 0.0,
            d2: 0.0,
            sigma,
            tau: 0.0,
            theta: 0.0,
        }
        .validated()
    }

    /// `𝒬` acting in `L²₊` (`d₁ = 0`, `b = τ`, `d₂ = τ(τ + 1)`).
    pub fn q(s: f64, u: f64, xi: f64, tau: f64) -> Result<Self> {
        Self {
            kind: OperatorKind::Q,
            s,
            u,
            xi,
            eta: 0.0,
            a: 0.0,
            b: tau,
            c1: 0.0,
            c2: 0.0,
            d1: 0.0,
            d2: tau * (tau + 1.0),
            sigma: 0.0,
            tau,
            theta: 0.0,
        }
        .validated()
    }

    /// `𝒲` acting in `L²₊ ⊕ L²₊` (`c₁ = d₁ = 0`).
    pub fn w(s: f64, u: f64, xi: f64, eta: f64, sigma: f64, tau: f64, theta: f64) -> Result<Self> {
        Self {
            kind: OperatorKind::W,
            s,
            u,
            xi,
            eta,
            a: sigma,
            b: tau,
            c1: 0.0,
            c2: sigma * (sigma - 1.0),
            d1: 0.0,
            d2: tau * (tau + 1.0),
            sigma,
            tau,
            theta,
        }
        .validated()
    }

    /// `v = σ + τ − 2θ`.
    pub fn v(&self) -> f64 {
        self.sigma + self.tau - 2.0 * self.theta
    }

    fn has_even(&self) -> bool {
        matches!(self.kind, OperatorKind::P | OperatorKind::W)
    }

    fn has_odd(&self) -> bool {
        matches!(self.kind, OperatorKind::Q | OperatorKind::W)
    }

    /// Checks the structural invariants of the record.
    pub fn validated(self) -> Result<Self> {
        let finite = [
            self.s, self.u, self.xi, self.eta, self.a, self.b, self.c1, self.c2, self.d1, self.d2, self.sigma,
            self.tau, self.theta,
        ];
        if finite.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                what: "operator parameters".into(),
            });
        }
        if !(self.s > 0.0) {
            return Err(Error::domain("operator", format!("s={} must be positive", self.s)));
        }
        // The exponent only enters through the perturbations; an unperturbed
        // operator (used by the u = 1 cone path) may carry u = 1.
        let perturbed = self.xi != 0.0 || self.eta != 0.0;
        if perturbed && !(self.u > 0.0 && self.u < 1.0) {
            return Err(Error::domain("operator", format!("u={} must lie in (0, 1)", self.u)));
        }
        if !perturbed && !(self.u > 0.0 && self.u <= 1.0) {
            return Err(Error::domain("operator", format!("u={} must lie in (0, 1]", self.u)));
        }
        if self.xi < 0.0 {
            return Err(Error::domain("operator", format!("ξ={} must be non-negative", self.xi)));
        }
        let close = |x: f64, scale: f64| x.abs() <= 1e-12 * (1.0 + scale);
        if self.has_even() {
            let lhs = self.a * self.a + (2.0 * self.c1 - 1.0) * self.a - self.c2;
            if !close(lhs, self.a * self.a + self.c2.abs()) {
                return Err(Error::domain("operator", "a² + (2c₁−1)a − c₂ ≠ 0"));
            }
            if !close(self.a + self.c1 - self.sigma, self.sigma.abs()) {
                return Err(Error::domain("operator", "σ ≠ a + c₁"));
            }
            let bound = if self.xi > 0.0 { self.u - 0.5 } else { -0.5 };
            if !(self.sigma > bound) {
                return Err(Error::domain("operator", format!("σ={} must exceed {bound}", self.sigma)));
            }
        }
        if self.has_odd() {
            let lhs = self.b * self.b + (2.0 * self.d1 + 1.0) * self.b - self.d2;
            if !close(lhs, self.b * self.b + self.d2.abs()) {
                return Err(Error::domain("operator", "b² + (2d₁+1)b − d₂ ≠ 0"));
            }
            if !close(self.b + self.d1 - self.tau, self.tau.abs()) {
                return Err(Error::domain("operator", "τ ≠ b + d₁"));
            }
            let bound = if self.xi > 0.0 { self.u - 1.5 } else { -1.5 };
            if !(self.tau > bound) {
                return Err(Error::domain("operator", format!("τ={} must exceed {bound}", self.tau)));
            }
        }
        if self.kind == OperatorKind::W && self.eta != 0.0 && !(self.theta > -0.5) {
            return Err(Error::domain("operator", format!("θ={} must exceed −1/2", self.theta)));
        }
        if self.kind != OperatorKind::W && self.eta != 0.0 {
            return Err(Error::domain("operator", "η couples components and requires kind W"));
        }
        Ok(self)
    }

    /// The same operator at another scale `s`.
    pub fn with_s(&self, s: f64) -> Result<Self> {
        Self { s, ..*self }.validated()
    }

    /// Indices `k` of the basis functions in form-matrix order: the even
    /// block `0, 2, …` followed by the odd block `1, 3, …`.
    pub fn basis_indices(&self, size: usize) -> Vec<usize> {
        let mut out = Vec::new();
        if self.has_even() {
            out.extend((0..size).map(|i| 2 * i));
        }
        if self.has_odd() {
            out.extend((0..size).map(|i| 2 * i + 1));
        }
        out
    }

    /// Unperturbed eigenvalue `(2k + 1 + 2ς_k)s` attached to index `k`.
    pub fn base_value(&self, k: usize) -> f64 {
        let varsigma = if k % 2 == 0 { self.sigma } else { self.tau };
        (2.0 * k as f64 + 1.0 + 2.0 * varsigma) * self.s
    }

    fn even_basis(&self, size: usize) -> Result<ChiBasis> {
        ChiBasis::new(GenHermiteParams::new(self.s, self.sigma, Parity::Even)?, self.a, self.c1, size)
    }

    fn odd_basis(&self, size: usize) -> Result<ChiBasis> {
        ChiBasis::new(GenHermiteParams::new(self.s, self.tau, Parity::Odd)?, self.b, self.d1, size)
    }
}

/// Real roots of `a² + (2c₁ − 1)a − c₂ = 0`, ascending.
pub fn solve_a(c1: f64, c2: f64) -> Result<(f64, f64)> {
    let p = 2.0 * c1 - 1.0;
    let disc = p * p + 4.0 * c2;
    if disc < 0.0 {
        return Err(Error::domain("a² + (2c₁−1)a − c₂ = 0", format!("no real root (discriminant {disc})")));
    }
    let root = disc.sqrt();
    // Stable quadratic formula.
    let q = -0.5 * (p + p.signum() * root);
    if q == 0.0 {
        return Ok((0.0, -p));
    }
    let (x, y) = (q, -c2 / q);
    Ok(if x <= y { (x, y) } else { (y, x) })
}

/// `λ_k = (2k + 1 + 2ς_k)s` for `k = 0, …, K−1`.
pub fn exact_base_spectrum(sigma: f64, tau: f64, s: f64, count: usize) -> Vec<f64> {
    (0..count)
        .map(|k| {
            let varsigma = if k % 2 == 0 { sigma } else { tau };
            (2.0 * k as f64 + 1.0 + 2.0 * varsigma) * s
        })
        .collect()
}

/// Galerkin matrix of the quadratic form of `spec` on `size` basis functions
/// per component (`2·size` in total for `𝒲`).
pub fn form_matrix(spec: &HalfLineOperatorSpec, size: usize) -> Result<SymMatrix> {
    let spec = spec.validated()?;
    let indices = spec.basis_indices(size);
    let n = indices.len();
    let mut m = SymMatrix::diagonal(&indices.iter().map(|&k| spec.base_value(k)).collect::<Vec<_>>());
    let mut blocks = Vec::new();
    if spec.has_even() {
        blocks.push((0, spec.even_basis(size)?));
    }
    if spec.has_odd() {
        let offset = if spec.has_even() { size } else { 0 };
        blocks.push((offset, spec.odd_basis(size)?));
    }
    if spec.xi != 0.0 {
        for (offset, basis) in &blocks {
            let g = gram_negative_power(basis, spec.u)?;
            for i in 0..size {
                for j in i..size {
                    m.add_to(offset + i, offset + j, spec.xi * g.get(i, j));
                }
            }
        }
    }
    if spec.kind == OperatorKind::W && spec.eta != 0.0 {
        let c = cross_gram(&blocks[0].1, &blocks[1].1, spec.theta)?;
        for (i, row) in c.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m.set(i, size + j, spec.eta * v);
            }
        }
    }
    debug_assert_eq!(m.order(), n);
    Ok(m)
}

/// Ritz approximation of the spectrum of one operator.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RitzResult {
    /// Ascending Ritz values.
    pub eigenvalues: Vec<f64>,
    /// `vectors[i]` holds the χ-coordinates of the `i`-th Ritz vector, in
    /// form-matrix order (see [`HalfLineOperatorSpec::basis_indices`]).
    pub vectors: Vec<Vec<f64>>,
    /// Basis functions per component.
    pub size: usize,
}

/// Rayleigh–Ritz eigenvalues and vectors of the form of `spec`.
pub fn ritz_spectrum(spec: &HalfLineOperatorSpec, size: usize) -> Result<RitzResult> {
    let m = form_matrix(spec, size)?;
    let e = sym_eigen(&m)?;
    if e.values.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite {
            what: "Ritz values".into(),
        });
    }
    Ok(RitzResult {
        eigenvalues: e.values,
        vectors: e.vectors,
        size,
    })
}

/// Position of the index `k` in the ascending order of unperturbed values;
/// this is the Ritz value that approximates `λ_k`.
fn spectral_rank(spec: &HalfLineOperatorSpec, k: usize, size: usize) -> Result<(usize, usize)> {
    let indices = spec.basis_indices(size);
    let position = indices
        .iter()
        .position(|&i| i == k)
        .ok_or_else(|| Error::domain("spectral index", format!("k={k} is not represented in this basis")))?;
    let mut order: Vec<usize> = (0..indices.len()).collect();
    order.sort_by(|&x, &y| {
        spec.base_value(indices[x])
            .total_cmp(&spec.base_value(indices[y]))
            .then(indices[x].cmp(&indices[y]))
    });
    let rank = order.iter().position(|&p| p == position).expect("position is in range");
    Ok((position, rank))
}

/// The Ritz value approximating `λ_k` of `spec`.
pub fn ritz_value(spec: &HalfLineOperatorSpec, k: usize, size: usize) -> Result<f64> {
    let (_, rank) = spectral_rank(spec, k, size)?;
    Ok(ritz_spectrum(spec, size)?.eigenvalues[rank])
}

/// Least-squares slope of `log(λ_k^{Ritz}(s) − (2k+1+2ς_k)s)` against `log s`.
///
/// The perturbation `ξρ^{−2u}` scales like `s^u`, so the fitted slope should
/// approach `u` for a converged basis.
pub fn growth_exponent(spec: &HalfLineOperatorSpec, k: usize, s_list: &[f64], size: usize) -> Result<f64> {
    if !(spec.xi > 0.0) {
        return Err(Error::undefined("growth exponent needs ξ > 0 (the gap vanishes identically)"));
    }
    if spec.eta != 0.0 {
        return Err(Error::domain("growth exponent", "requires η = 0"));
    }
    if s_list.len() < 4 {
        return Err(Error::domain("growth exponent", "needs at least four scales"));
    }
    let mut points = Vec::with_capacity(s_list.len());
    for &s in s_list {
        let at = spec.with_s(s)?;
        let gap = ritz_value(&at, k, size)? - at.base_value(k);
        if !(gap > 0.0) {
            return Err(Error::Precision {
                detail: format!("non-positive spectral gap {gap} at s={s}"),
            });
        }
        points.push((s.ln(), gap.ln()));
    }
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    Ok(sxy / sxx)
}

/// Norm of the orthogonal projection of the Ritz vector approximating `λ_k`
/// onto `χ_k`, i.e. `‖χ̂′_k‖`.
///
/// When neighbouring Ritz values lie within `1e−8·s`, the individual vectors
/// are not determined; the overlap is then taken over the whole cluster's
/// invariant subspace and a warning is logged.
pub fn overlap_norm(spec: &HalfLineOperatorSpec, k: usize, size: usize) -> Result<f64> {
    let (position, rank) = spectral_rank(spec, k, size)?;
    let ritz = ritz_spectrum(spec, size)?;
    let target = ritz.eigenvalues[rank];
    let tol = CLUSTER_TOLERANCE * spec.s;
    let cluster: Vec<usize> = (0..ritz.eigenvalues.len())
        .filter(|&i| (ritz.eigenvalues[i] - target).abs() < tol)
        .collect();
    if cluster.len() > 1 {
        log::warn!(
            "Ritz value {target} at k={k} is clustered with multiplicity {}; using the invariant subspace",
            cluster.len()
        );
    }
    let sq: f64 = cluster.iter().map(|&i| ritz.vectors[i][position].powi(2)).sum();
    Ok(sq.sqrt().min(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_a_special_cases() {
        let (x, y) = solve_a(0.3, 0.0).unwrap();
        assert!((x - 0.0).abs() < 1e-15 && (y - 0.4).abs() < 1e-15);
        let (x, y) = solve_a(0.3, 0.6).unwrap();
        assert!((x + 0.6).abs() < 1e-15 && (y - 1.0).abs() < 1e-15);
        assert!(solve_a(0.5, -1.0).is_err());
    }

    #[test]
    fn base_spectrum_examples() {
        assert_eq!(exact_base_spectrum(0.0, 0.0, 1.0, 3), vec![1.0, 3.0, 5.0]);
        assert_eq!(exact_base_spectrum(0.5, 0.0, 2.0, 2)[1], 6.0);
    }

    #[test]
    fn unperturbed_form_is_diagonal() {
        let spec = HalfLineOperatorSpec::w(1.5, 0.5, 0.0, 0.0, 0.25, -0.75, 0.0).unwrap();
        let m = form_matrix(&spec, 6).unwrap();
        for i in 0..12 {
            for j in 0..12 {
                if i != j {
                    assert_eq!(m.get(i, j), 0.0);
                }
            }
        }
        assert_eq!(m.get(6, 6), spec.base_value(1));
    }

    #[test]
    fn p_form_ground_entry() {
        let spec = HalfLineOperatorSpec::p(1.0, 0.5, 1.0, 1.0).unwrap();
        let m = form_matrix(&spec, 4).unwrap();
        assert!((m.get(0, 0) - (3.0 + std::f64::consts::FRAC_2_SQRT_PI)).abs() < 1e-13);
    }

    #[test]
    fn invalid_specs_are_refused() {
        assert!(HalfLineOperatorSpec::p(1.0, 0.5, 1.0, -0.1).is_err());
        assert!(HalfLineOperatorSpec::p(1.0, 1.0, 1.0, 1.0).is_err());
        assert!(HalfLineOperatorSpec::w(1.0, 0.5, 1.0, 1.0, 1.0, 1.0, -0.5).is_err());
    }

    #[test]
    fn growth_requires_perturbation() {
        let spec = HalfLineOperatorSpec::p(1.0, 0.5, 0.0, 1.0).unwrap();
        assert!(growth_exponent(&spec, 0, &[1.0, 10.0, 100.0, 1000.0], 10).is_err());
    }

    #[test]
    fn unperturbed_overlap_is_one() {
        let spec = HalfLineOperatorSpec::q(2.0, 0.5, 0.0, 0.3).unwrap();
        assert_eq!(overlap_norm(&spec, 3, 8).unwrap(), 1.0);
    }
}
