//! Ritz spectra on χ-bases enriched by fractional-power families.
//!
//! The perturbations `ξρ^{−2u}` and `ηρ^{v}`, `v = 2θ − 1 − σ − τ`, map a
//! component behaving like `ρ^β` at the origin to terms of order
//! `ρ^{β+2−2u}` (same component) and `ρ^{β+v+2}` (other component). The true
//! eigenfunctions therefore carry these fractional exponents, which the
//! polynomial-in-`ρ²` χ-basis only reaches at an algebraic rate; the coupled
//! operators `𝒲` are affected most, since the second exponent can lie below
//! the exponent of the basis of the component it lands in.
//!
//! This module adds, to each component with ground exponent `γ` (`γ = σ` for
//! the even component, `γ = τ + 1` for the odd one), the families
//!
//! `f_{β,n} = √2 s^{(α+1)/2} ρ^β ℓ_n^{(α)}(sρ²) e^{−sρ²/2}`, `α = β − 1/2`,
//!
//! for the exponents `β` generated from `γ` by these shifts, keeping only
//! `β > 1/2` (the form is finite) and dropping exponents that differ from an
//! existing family by an even integer. Every function lies in the form domain
//! of the realization fixed by the primary χ-basis, so the Ritz values remain
//! upper bounds. The forms are written through the ground-state
//! factorisation `H_γ = A^*A + (1+2γ)s`, `A = d/dρ − γ/ρ + sρ`, which gives
//! every matrix entry as a Laguerre-weighted integral of polynomials; each is
//! evaluated exactly by a Gauss–Laguerre rule matched to its exponent. The
//! resulting generalized eigenproblem is reduced by canonical
//! orthogonalisation of the Gram matrix.
//!
//! With no secondary family the assembled matrix coincides with
//! [`super::form_matrix`].

use super::{HalfLineOperatorSpec, OperatorKind};
use crate::error::{Error, Result};
use crate::numerics::{gauss_laguerre, ln_gamma, sym_eigen, sym_eigenvalues, SymMatrix};
use serde::Serialize;

/// Relative threshold below which Gram eigenvalues are treated as linear
/// dependence and discarded.
pub const GRAM_CUTOFF: f64 = 1e-11;

/// Sizes of an enriched basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EnrichedBasis {
    /// χ-functions per component (the `K` of the plain basis).
    pub primary: usize,
    /// Functions per secondary family.
    pub secondary: usize,
    /// Number of shift steps used to generate secondary exponents.
    pub generations: usize,
}

impl EnrichedBasis {
    /// The default enrichment for `K` primary functions: four generations
    /// of families with `min(6, K)` functions each.
    pub fn for_size(primary: usize) -> Self {
        Self {
            primary,
            secondary: primary.min(6),
            generations: 4,
        }
    }

    /// The plain χ-basis with `K` functions per component.
    pub fn plain(primary: usize) -> Self {
        Self {
            primary,
            secondary: 0,
            generations: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Family {
    odd: bool,
    gamma: f64,
    beta: f64,
    size: usize,
}

impl Family {
    fn alpha(&self) -> f64 {
        self.beta - 0.5
    }

    fn primary(&self) -> bool {
        self.beta == self.gamma
    }
}

fn same_span(a: f64, b: f64) -> bool {
    let d = (a - b) / 2.0;
    (d - d.round()).abs() < 1e-9
}

/// Exponents `β` of the families of each component, primary first.
///
/// Secondary exponents whose difference from an existing family is an even
/// integer are merged into the lower of the two.
pub fn family_exponents(spec: &HalfLineOperatorSpec, generations: usize) -> (Vec<f64>, Vec<f64>) {
    let has_even = matches!(spec.kind, OperatorKind::P | OperatorKind::W);
    let has_odd = matches!(spec.kind, OperatorKind::Q | OperatorKind::W);
    let mut even: Vec<f64> = if has_even { vec![spec.sigma] } else { Vec::new() };
    let mut odd: Vec<f64> = if has_odd { vec![spec.tau + 1.0] } else { Vec::new() };
    let coupled = spec.kind == OperatorKind::W && spec.eta != 0.0;
    let potential_step = 2.0 - 2.0 * spec.u;
    let coupling_step = 2.0 * spec.theta + 1.0 - spec.sigma - spec.tau;
    let mut frontier: Vec<(bool, f64)> = even.iter().map(|&b| (false, b)).chain(odd.iter().map(|&b| (true, b))).collect();
    for _ in 0..generations {
        let mut next = Vec::new();
        for &(is_odd, beta) in &frontier {
            let mut candidates = Vec::new();
            if spec.xi != 0.0 {
                candidates.push((is_odd, beta + potential_step));
            }
            if coupled {
                candidates.push((!is_odd, beta + coupling_step));
            }
            for (c_odd, c_beta) in candidates {
                let list = if c_odd { &mut odd } else { &mut even };
                if c_beta <= 0.5 {
                    continue;
                }
                // A lower exponent spans every family above it by an even
                // integer; it replaces such a secondary family.
                match list.iter().position(|&b| same_span(b, c_beta)) {
                    Some(i) if i > 0 && c_beta < list[i] - 1e-9 => {
                        list[i] = c_beta;
                        next.push((c_odd, c_beta));
                    }
                    Some(_) => {}
                    None => {
                        list.push(c_beta);
                        next.push((c_odd, c_beta));
                    }
                }
            }
        }
        frontier = next;
    }
    (even, odd)
}

/// Orthonormal Laguerre values `ℓ_0(x), …, ℓ_{m−1}(x)` for `x^α e^{−x}`.
fn laguerre(alpha: f64, m: usize, x: f64) -> Vec<f64> {
    let norm = (-0.5 * ln_gamma(alpha + 1.0)).exp();
    let mut out = Vec::with_capacity(m);
    let (mut prev, mut cur) = (0.0, 1.0);
    for j in 0..m {
        out.push(norm * cur);
        let a = 2.0 * j as f64 + alpha + 1.0;
        let b_next = (((j + 1) as f64) * ((j + 1) as f64 + alpha)).sqrt();
        let b = ((j as f64) * (j as f64 + alpha)).sqrt();
        let next = ((x - a) * cur - b * prev) / b_next;
        prev = cur;
        cur = next;
    }
    out
}

/// Values at `x` of the polynomial part of `f` or, with `kinetic`, of its
/// kinetic factor `(β−γ)ℓ_n + 2xℓ_n′`. The recurrence normalises `ℓ_n` with a
/// positive leading coefficient, so `xℓ_n′ = nℓ_n + √(n(n+α))ℓ_{n−1}` and
/// `ℓ_n′ = √n ℓ^{(α+1)}_{n−1}`; for the primary family the factor `x` is
/// moved into the quadrature weight.
fn family_values(f: &Family, x: f64, kinetic: bool) -> Vec<f64> {
    let alpha = f.alpha();
    if !kinetic {
        return laguerre(alpha, f.size, x);
    }
    if f.primary() {
        let l = laguerre(alpha + 1.0, f.size, x);
        (0..f.size)
            .map(|n| if n == 0 { 0.0 } else { 2.0 * (n as f64).sqrt() * l[n - 1] })
            .collect()
    } else {
        let l = laguerre(alpha, f.size, x);
        let delta = f.beta - f.gamma;
        (0..f.size)
            .map(|n| {
                let nf = n as f64;
                let prev = if n == 0 { 0.0 } else { 2.0 * (nf * (nf + alpha)).sqrt() * l[n - 1] };
                (delta + 2.0 * nf) * l[n] + prev
            })
            .collect()
    }
}

/// `∫₀^∞ x^{exponent} g₁(x) g₂(x) e^{−x} dx` for all pairs of (kinetic or
/// plain) family values, exact for the polynomial degrees involved.
fn pair_integrals(f1: &Family, k1: bool, f2: &Family, k2: bool, exponent: f64) -> Result<Vec<Vec<f64>>> {
    if !(exponent > -1.0) {
        return Err(Error::Divergent {
            exponent,
            bound: -1.0,
            context: format!("enriched-basis integral between exponents {} and {}", f1.beta, f2.beta),
        });
    }
    // The integrand is a polynomial of degree at most size₁ + size₂ − 2.
    let nodes = (f1.size + f2.size) / 2 + 2;
    let rule = gauss_laguerre(exponent, nodes, 1.0)?;
    let v1: Vec<Vec<f64>> = rule.nodes.iter().map(|&x| family_values(f1, x, k1)).collect();
    let v2: Vec<Vec<f64>> = rule.nodes.iter().map(|&x| family_values(f2, x, k2)).collect();
    let mut out = vec![vec![0.0; f2.size]; f1.size];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let mut acc = crate::numerics::ddouble::DoubleDouble::default();
            for (q, w) in rule.weights.iter().enumerate() {
                acc.add_product(w * v1[q][i], v2[q][j]);
            }
            *cell = acc.value();
        }
    }
    Ok(out)
}

fn families(spec: &HalfLineOperatorSpec, basis: EnrichedBasis) -> Vec<Family> {
    let (even, odd) = family_exponents(spec, basis.generations);
    let mut out = Vec::new();
    for (list, is_odd, gamma) in [(&even, false, spec.sigma), (&odd, true, spec.tau + 1.0)] {
        for &beta in list {
            let size = if beta == gamma { basis.primary } else { basis.secondary };
            if size > 0 {
                out.push(Family {
                    odd: is_odd,
                    gamma,
                    beta,
                    size,
                });
            }
        }
    }
    out
}

/// Matrix indices of the primary and of the secondary functions.
fn primary_split(spec: &HalfLineOperatorSpec, basis: EnrichedBasis) -> (Vec<usize>, Vec<usize>) {
    let (mut primary, mut secondary) = (Vec::new(), Vec::new());
    let mut offset = 0;
    for f in families(spec, basis) {
        let target = if f.primary() { &mut primary } else { &mut secondary };
        target.extend(offset..offset + f.size);
        offset += f.size;
    }
    (primary, secondary)
}

/// Form and Gram matrices of `spec` (plus constant shifts on the even and
/// odd components) on the enriched basis.
pub fn enriched_matrices(
    spec: &HalfLineOperatorSpec,
    basis: EnrichedBasis,
    even_shift: f64,
    odd_shift: f64,
) -> Result<(SymMatrix, SymMatrix)> {
    let spec = spec.validated()?;
    if spec.c1 != 0.0 || spec.d1 != 0.0 {
        return Err(Error::domain("enriched basis", "requires the plain measure (c₁ = d₁ = 0)"));
    }
    if basis.primary == 0 {
        return Err(Error::domain("enriched basis", "needs at least one primary function"));
    }
    let families = families(&spec, basis);
    let offsets: Vec<usize> = families
        .iter()
        .scan(0, |acc, f| {
            let o = *acc;
            *acc += f.size;
            Some(o)
        })
        .collect();
    let order: usize = families.iter().map(|f| f.size).sum();
    let mut form = SymMatrix::zeros(order);
    let mut gram = SymMatrix::zeros(order);
    let s = spec.s;
    let coupling_power = 2.0 * spec.theta - 1.0 - spec.sigma - spec.tau;
    for a in 0..families.len() {
        for b in a..families.len() {
            let (f1, f2) = (&families[a], &families[b]);
            let mean = 0.5 * (f1.alpha() + f2.alpha());
            let add = |entries: &Vec<Vec<f64>>, scale: f64, target: &mut SymMatrix| {
                for (i, row) in entries.iter().enumerate() {
                    for (j, &v) in row.iter().enumerate() {
                        let (p, q) = (offsets[a] + i, offsets[b] + j);
                        if a == b && q < p {
                            continue;
                        }
                        target.add_to(p.min(q), p.max(q), scale * v);
                    }
                }
            };
            if f1.odd == f2.odd {
                let g = if a == b {
                    (0..f1.size)
                        .map(|i| (0..f1.size).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
                        .collect()
                } else {
                    pair_integrals(f1, false, f2, false, mean)?
                };
                let gamma = f1.gamma;
                let shift = if f1.odd { odd_shift } else { even_shift };
                add(&g, 1.0, &mut gram);
                add(&g, (1.0 + 2.0 * gamma) * s + shift, &mut form);
                let lift = f64::from(u8::from(f1.primary())) + f64::from(u8::from(f2.primary()));
                let kin = pair_integrals(f1, true, f2, true, mean - 1.0 + lift)?;
                add(&kin, s, &mut form);
                if spec.xi != 0.0 {
                    let pot = pair_integrals(f1, false, f2, false, mean - spec.u)?;
                    add(&pot, spec.xi * s.powf(spec.u), &mut form);
                }
            } else if spec.eta != 0.0 {
                let c = pair_integrals(f1, false, f2, false, mean + 0.5 * coupling_power)?;
                add(&c, spec.eta * s.powf(-0.5 * coupling_power), &mut form);
            }
        }
    }
    Ok((form, gram))
}

/// Lower Cholesky factor of a dense symmetric positive definite matrix.
fn cholesky(a: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
    let n = a.len();
    let mut l = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let sum: f64 = a[i][j] - (0..j).map(|k| l[i][k] * l[j][k]).sum::<f64>();
            if i == j {
                if !(sum > 0.0) {
                    return Err(Error::domain("enriched basis", "primary block of the energy form is not positive definite"));
                }
                l[i][i] = sum.sqrt();
            } else {
                l[i][j] = sum / l[j][j];
            }
        }
    }
    Ok(l)
}

/// Solves `L y = b` (forward) or `Lᵀ y = b` (backward) in place.
fn triangular_solve(l: &[Vec<f64>], b: &mut [f64], transpose: bool) {
    let n = l.len();
    if !transpose {
        for i in 0..n {
            let sum: f64 = (0..i).map(|k| l[i][k] * b[k]).sum();
            b[i] = (b[i] - sum) / l[i][i];
        }
    } else {
        for i in (0..n).rev() {
            let sum: f64 = (i + 1..n).map(|k| l[k][i] * b[k]).sum();
            b[i] = (b[i] - sum) / l[i][i];
        }
    }
}

/// Ascending Ritz values of the generalized eigenproblem `F x = λ G x` on
/// the enriched basis, with shifts added to the even and odd components.
///
/// The secondary families are nearly dependent on the primary one in `L²`
/// (the χ-basis is complete there) but much less so in the form norm. The
/// pencil is therefore normalised in the energy inner product
/// `A = F + cG`, `c = s`: the primary block is factored by Cholesky, the
/// secondary functions are `A`-orthogonalised against it, and directions
/// whose Schur-complement energy falls below [`GRAM_CUTOFF`] relative to
/// the largest secondary energy are discarded. The Ritz values are
/// `1/μ − c` for the eigenvalues `μ` of `G` in that basis.
pub fn enriched_ritz(spec: &HalfLineOperatorSpec, basis: EnrichedBasis, even_shift: f64, odd_shift: f64) -> Result<Vec<f64>> {
    let (form, gram) = enriched_matrices(spec, basis, even_shift, odd_shift)?;
    let (primary, secondary) = primary_split(spec, basis);
    let n = form.order();
    let c = spec.s;
    let a = |i: usize, j: usize| form.get(i, j) + c * gram.get(i, j);
    let app: Vec<Vec<f64>> = primary.iter().map(|&i| primary.iter().map(|&j| a(i, j)).collect()).collect();
    let l = cholesky(&app)?;
    // W = A_PP^{-1} A_PS, one column per secondary function.
    let w: Vec<Vec<f64>> = secondary
        .iter()
        .map(|&j| {
            let mut col: Vec<f64> = primary.iter().map(|&i| a(i, j)).collect();
            triangular_solve(&l, &mut col, false);
            triangular_solve(&l, &mut col, true);
            col
        })
        .collect();
    let schur = SymMatrix::from_upper_fn(secondary.len(), |x, y| {
        a(secondary[x], secondary[y]) - primary.iter().enumerate().map(|(p, &i)| a(i, secondary[y]) * w[x][p]).sum::<f64>()
    });
    let scale = secondary.iter().map(|&j| a(j, j)).fold(0.0, f64::max);
    let mut columns: Vec<Vec<f64>> = Vec::with_capacity(n);
    for p in 0..primary.len() {
        let mut e = vec![0.0; primary.len()];
        e[p] = 1.0;
        triangular_solve(&l, &mut e, true);
        let mut x = vec![0.0; n];
        for (q, &i) in primary.iter().enumerate() {
            x[i] = e[q];
        }
        columns.push(x);
    }
    if !secondary.is_empty() {
        let se = sym_eigen(&schur)?;
        for (k, &lambda) in se.values.iter().enumerate() {
            if !(lambda > GRAM_CUTOFF * scale) {
                continue;
            }
            let z = &se.vectors[k];
            let norm = lambda.sqrt();
            let mut x = vec![0.0; n];
            for (q, &j) in secondary.iter().enumerate() {
                x[j] = z[q] / norm;
            }
            for (p, &i) in primary.iter().enumerate() {
                x[i] = -(0..secondary.len()).map(|q| w[q][p] * z[q]).sum::<f64>() / norm;
            }
            columns.push(x);
        }
    }
    let gx: Vec<Vec<f64>> = columns.iter().map(|x| gram.mul_vec(x)).collect();
    let reduced = SymMatrix::from_upper_fn(columns.len(), |i, j| (0..n).map(|p| columns[i][p] * gx[j][p]).sum());
    let mu = sym_eigenvalues(&reduced)?;
    let mut values: Vec<f64> = mu.iter().filter(|&&m| m > 0.0).map(|m| 1.0 / m - c).collect();
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite {
            what: "enriched Ritz values".into(),
        });
    }
    values.sort_by(f64::total_cmp);
    Ok(values)
}
