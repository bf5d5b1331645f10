//! Random finite-dimensional Hilbert complexes.
//!
//! For a complex `C⁰ → C¹ → ⋯` of Euclidean spaces with `d² = 0`, the
//! positive spectra of `Δ_ev = ⊕_{even} Δ_r` and `Δ_odd = ⊕_{odd} Δ_r`
//! coincide with multiplicity: `d` maps the `λ`-eigenspace of `d^*d` in
//! degree `r` isomorphically onto the `λ`-eigenspace of `dd^*` in degree
//! `r+1`. This module generates such complexes from random orthonormal
//! frames and checks the statement numerically, independently of the model
//! operators.

use crate::error::{Error, Result};
use crate::numerics::{sym_eigen, SymMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Absolute threshold separating zero from positive eigenvalues in the
/// generated complexes (their positive eigenvalues lie in `[1/4, 4]`).
pub const ORACLE_ZERO_THRESHOLD: f64 = 1e-6;

/// A finite graded complex; `differentials[r]` is the matrix of
/// `d_r : C^r → C^{r+1}` (`dims[r+1]` rows, `dims[r]` columns).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FiniteComplex {
    pub dims: Vec<usize>,
    pub differentials: Vec<Vec<Vec<f64>>>,
}

type Mat = Vec<Vec<f64>>;

fn zeros(rows: usize, cols: usize) -> Mat {
    vec![vec![0.0; cols]; rows]
}

fn mul(a: &Mat, b: &Mat, inner: usize) -> Mat {
    let cols = b.first().map_or(0, Vec::len);
    let mut out = zeros(a.len(), cols);
    for (i, row) in a.iter().enumerate() {
        for (l, &x) in row.iter().enumerate().take(inner) {
            for j in 0..cols {
                out[i][j] += x * b[l][j];
            }
        }
    }
    out
}

fn transpose(a: &Mat, rows: usize, cols: usize) -> Mat {
    let mut out = zeros(cols, rows);
    for i in 0..rows {
        for j in 0..cols {
            out[j][i] = a[i][j];
        }
    }
    out
}

impl FiniteComplex {
    /// Validates shapes and `d_{r+1} d_r = 0` (to `1e−10` relative).
    pub fn new(dims: Vec<usize>, differentials: Vec<Vec<Vec<f64>>>) -> Result<Self> {
        if differentials.len() + 1 != dims.len() {
            return Err(Error::LengthMismatch {
                left: differentials.len() + 1,
                right: dims.len(),
            });
        }
        for (r, d) in differentials.iter().enumerate() {
            if d.len() != dims[r + 1] || d.iter().any(|row| row.len() != dims[r]) {
                return Err(Error::invalid(format!("d_{r} must be a {}×{} matrix", dims[r + 1], dims[r])));
            }
        }
        for r in 0..differentials.len().saturating_sub(1) {
            let dd = mul(&differentials[r + 1], &differentials[r], dims[r + 1]);
            let scale = 1.0 + differentials[r].iter().flatten().chain(differentials[r + 1].iter().flatten()).map(|x| x.abs()).fold(0.0, f64::max);
            if dd.iter().flatten().any(|x| x.abs() > 1e-10 * scale * scale) {
                return Err(Error::invalid(format!("d_{} d_{r} ≠ 0", r + 1)));
            }
        }
        Ok(Self { dims, differentials })
    }

    /// The Laplacian `Δ_r = d_r^* d_r + d_{r−1} d_{r−1}^*`.
    pub fn laplacian(&self, r: usize) -> SymMatrix {
        let n = self.dims[r];
        let mut m = zeros(n, n);
        if r < self.differentials.len() {
            let d = &self.differentials[r];
            let dt = transpose(d, self.dims[r + 1], n);
            let p = mul(&dt, d, self.dims[r + 1]);
            for i in 0..n {
                for j in 0..n {
                    m[i][j] += p[i][j];
                }
            }
        }
        if r > 0 {
            let d = &self.differentials[r - 1];
            let dt = transpose(d, n, self.dims[r - 1]);
            let p = mul(d, &dt, self.dims[r - 1]);
            for i in 0..n {
                for j in 0..n {
                    m[i][j] += p[i][j];
                }
            }
        }
        SymMatrix::from_upper_fn(n, |i, j| 0.5 * (m[i][j] + m[j][i]))
    }

    /// Ascending eigenvalues of `Δ_ev` and `Δ_odd`.
    pub fn even_odd_spectra(&self) -> Result<(Vec<f64>, Vec<f64>)> {
        let (mut ev, mut odd) = (Vec::new(), Vec::new());
        for r in 0..self.dims.len() {
            if self.dims[r] == 0 {
                continue;
            }
            let values = sym_eigen(&self.laplacian(r))?.values;
            if r % 2 == 0 {
                ev.extend(values);
            } else {
                odd.extend(values);
            }
        }
        ev.sort_by(f64::total_cmp);
        odd.sort_by(f64::total_cmp);
        Ok((ev, odd))
    }

    /// A random complex with `2..=4` degrees of dimension `1..=max_dim`,
    /// built from random orthonormal frames: in each degree the first
    /// columns span the image of the previous differential, the next ones the
    /// coimage of the current one, and the rest are harmonic. The restricted
    /// maps have singular values in `[1/2, 2]`.
    pub fn random(rng: &mut impl Rng, max_dim: usize) -> Self {
        let max_dim = max_dim.max(1);
        let len = rng.gen_range(2..=4usize);
        let dims: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=max_dim)).collect();
        let frames: Vec<Mat> = dims.iter().map(|&n| random_orthonormal(rng, n)).collect();
        let mut ranks = Vec::with_capacity(len - 1);
        let mut prev = 0usize;
        for r in 0..len - 1 {
            let cap = (dims[r] - prev).min(dims[r + 1]);
            let rank = rng.gen_range(0..=cap);
            ranks.push(rank);
            prev = rank;
        }
        let mut differentials = Vec::with_capacity(len - 1);
        let mut image_start = 0usize;
        for r in 0..len - 1 {
            let rank = ranks[r];
            // Coimage columns [image_start, image_start+rank) of frame r map to
            // image columns [0, rank) of frame r+1 through U·diag(σ)·Vᵀ.
            let u = random_orthonormal(rng, rank);
            let v = random_orthonormal(rng, rank);
            let sv: Vec<f64> = (0..rank).map(|_| rng.gen_range(0.5..=2.0)).collect();
            let mut core = zeros(rank, rank);
            for i in 0..rank {
                for j in 0..rank {
                    core[i][j] = (0..rank).map(|l| u[i][l] * sv[l] * v[j][l]).sum();
                }
            }
            let mut d = zeros(dims[r + 1], dims[r]);
            let (src, dst) = (&frames[r], &frames[r + 1]);
            for row in 0..dims[r + 1] {
                for col in 0..dims[r] {
                    let mut acc = 0.0;
                    for a in 0..rank {
                        for b in 0..rank {
                            acc += dst[row][a] * core[a][b] * src[col][image_start + b];
                        }
                    }
                    d[row][col] = acc;
                }
            }
            differentials.push(d);
            image_start = rank;
        }
        Self::new(dims, differentials).expect("constructed with d² = 0")
    }
}

/// Columns of a random orthogonal `n × n` matrix (Gram–Schmidt of uniform
/// entries, repeated until well conditioned), stored row-major.
fn random_orthonormal(rng: &mut impl Rng, n: usize) -> Mat {
    let mut cols: Vec<Vec<f64>> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        for _ in 0..2 {
            for c in &cols {
                let dot: f64 = v.iter().zip(c).map(|(a, b)| a * b).sum();
                for (x, y) in v.iter_mut().zip(c) {
                    *x -= dot * y;
                }
            }
        }
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-3 {
            cols.push(v.into_iter().map(|x| x / norm).collect());
        }
    }
    let mut m = zeros(n, n);
    for (j, c) in cols.iter().enumerate() {
        for i in 0..n {
            m[i][j] = c[i];
        }
    }
    m
}

/// Compares the positive parts (values above `threshold`) of two ascending
/// spectra; returns `None` if their sizes differ and otherwise the maximal
/// absolute deviation.
pub fn match_positive_spectra(a: &[f64], b: &[f64], threshold: f64) -> Option<f64> {
    let pa: Vec<f64> = a.iter().copied().filter(|&x| x > threshold).collect();
    let pb: Vec<f64> = b.iter().copied().filter(|&x| x > threshold).collect();
    if pa.len() != pb.len() {
        return None;
    }
    Some(pa.iter().zip(&pb).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max))
}

/// Summary of [`finite_complex_oracle`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleReport {
    pub seed: u64,
    pub complexes: usize,
    /// Indices of complexes whose positive spectra differ in size or by more
    /// than the tolerance.
    pub failures: Vec<usize>,
    pub max_deviation: f64,
    pub tolerance: f64,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Generates `count` random complexes from `seed` and compares the positive
/// spectra of `Δ_ev` and `Δ_odd` to `tolerance`.
pub fn finite_complex_oracle(seed: u64, count: usize, max_dim: usize, tolerance: f64) -> Result<OracleReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut max_deviation: f64 = 0.0;
    for i in 0..count {
        let c = FiniteComplex::random(&mut rng, max_dim);
        let (ev, odd) = c.even_odd_spectra()?;
        match match_positive_spectra(&ev, &odd, ORACLE_ZERO_THRESHOLD) {
            Some(dev) => {
                max_deviation = max_deviation.max(dev);
                if dev > tolerance {
                    failures.push(i);
                }
            }
            None => failures.push(i),
        }
    }
    Ok(OracleReport {
        seed,
        complexes: count,
        failures,
        max_deviation,
        tolerance,
    })
}
