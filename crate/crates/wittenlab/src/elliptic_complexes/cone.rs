//! Witten spectra on a cone `c(L)` with metric `ρ^{2u}g̃ + (dρ)²`, assembled
//! from spectral data of the link.
//!
//! The Witten complex of `f = ±ρ²/2` splits into
//!
//! * one length-one complex in degrees `(r, r+1)` for every harmonic form
//!   `γ` of degree `r` of the link, with `κ = (n−2r−1)u/2`;
//! * one length-two complex in degrees `(r−1, r, r+1)` for every pair
//!   `α + β` with `d̃β = μα`, `α` of degree `r`, with the same `κ`.
//!
//! The harmonic part is purely combinatorial ([`cone_harmonic_dims`]); the
//! positive spectrum comes from the two model complexes.

use super::complex1::{complex1_assignment, complex1_spectrum, Complex1Spec};
use super::complex2::{complex2_realized_spectra, Complex2Spec};
use super::{Choice, Sign, ZERO_TOLERANCE};
use crate::error::{Error, Result};
use crate::numerics::rational::{int, rat};
use crate::numerics::Rational;
use crate::stratified_spaces::satisfies_goodness;
use num::{One, Signed};
use serde::Serialize;

/// `κ = (n − 2r − 1)u/2`.
pub fn kappa(n: usize, r: usize, u: &Rational) -> Rational {
    (int(n as i64) - int(2 * r as i64) - int(1)) * u / int(2)
}

/// Whether `κ ∈ (−1/2−u, −(1+u)/2] ∪ [(1−u)/2, 1/2)`.
pub fn in_excluded_set(kappa: &Rational, u: &Rational) -> bool {
    let half = rat(1, 2);
    let left = kappa > &(-&half - u) && kappa <= &(-(int(1) + u) / int(2));
    let right = kappa >= &((int(1) - u) / int(2)) && kappa < &half;
    left || right
}

/// Result of [`exclusion_lemma_check`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExclusionReport {
    pub n: usize,
    #[serde(serialize_with = "crate::numerics::rational::serialize_rational")]
    pub u: Rational,
    /// Whether the lemma applies (`u < 1`).
    pub applies: bool,
    /// The goodness congruence `1/u ∈ 2ℤ+n+(0,1]` when `1/n ≤ u < 1`.
    pub goodness: bool,
    /// Degrees `r` whose `κ(n,r,u)` lies in the excluded set.
    pub hits: Vec<usize>,
    /// `goodness ⟺ hits is empty` (vacuously true when the lemma does not
    /// apply).
    pub equivalent: bool,
}

/// Exact check that the goodness congruence at dimension `n` holds if and
/// only if no `κ(n, r, u)`, `0 ≤ r ≤ n`, lies in the excluded set.
pub fn exclusion_lemma_check(n: usize, u: &Rational) -> Result<ExclusionReport> {
    if n == 0 || !u.is_positive() || u > &Rational::one() {
        return Err(Error::domain("exclusion lemma", format!("need n ≥ 1 and 0 < u ≤ 1, got n={n}, u={u}")));
    }
    let applies = u < &Rational::one();
    let goodness = satisfies_goodness(n, u);
    let hits: Vec<usize> = (0..=n).filter(|&r| in_excluded_set(&kappa(n, r, u), u)).collect();
    let equivalent = !applies || goodness == hits.is_empty();
    Ok(ExclusionReport {
        n,
        u: u.clone(),
        applies,
        goodness,
        hits,
        equivalent,
    })
}

/// A positive eigenvalue `μ` of the link operator `D̃` on pairs `α + β`
/// with `α` of degree `degree`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LinkPair {
    pub degree: usize,
    pub mu: f64,
    pub multiplicity: usize,
}

/// Harmonic dimensions and (truncated) positive spectrum of a compact link.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LinkSpectralData {
    pub name: String,
    pub dim: usize,
    /// `dim ℋ̃^r`, `r = 0, …, dim`.
    pub harmonic: Vec<usize>,
    pub pairs: Vec<LinkPair>,
}

impl LinkSpectralData {
    /// Validates the degrees and eigenvalues.
    pub fn new(name: impl Into<String>, dim: usize, harmonic: Vec<usize>, pairs: Vec<LinkPair>) -> Result<Self> {
        if harmonic.len() != dim + 1 {
            return Err(Error::LengthMismatch {
                left: harmonic.len(),
                right: dim + 1,
            });
        }
        for p in &pairs {
            if p.degree == 0 || p.degree > dim {
                return Err(Error::domain("link pair", format!("degree {} outside 1..={dim}", p.degree)));
            }
            if !(p.mu.is_finite() && p.mu > 0.0) {
                return Err(Error::domain("link pair", format!("μ={} must be positive", p.mu)));
            }
        }
        Ok(Self {
            name: name.into(),
            dim,
            harmonic,
            pairs,
        })
    }

    /// A point: one harmonic function, no positive spectrum.
    pub fn point() -> Self {
        Self::new("point", 0, vec![1], Vec::new()).expect("valid built-in")
    }

    /// The circle `ℝ/2πℤ`. The Laplacian on functions has eigenvalues `k²`
    /// with eigenfunctions `cos kθ`, `sin kθ`; each gives a pair
    /// `β = f`, `α = df/k` with `μ = k` and `α` of degree 1. Modes
    /// `k = 1, …, max_mode` are kept.
    pub fn circle(max_mode: usize) -> Self {
        let pairs = (1..=max_mode)
            .map(|k| LinkPair {
                degree: 1,
                mu: k as f64,
                multiplicity: 2,
            })
            .collect();
        Self::new("circle", 1, vec![1, 1], pairs).expect("valid built-in")
    }

    /// The flat torus `ℝ²/(2πℤ)²`. Fourier modes `e^{im·x}`, `m ∈ ℤ²∖0`,
    /// give eigenvalue `|m|²`; each real mode yields one pair with `α` of
    /// degree 1 (`β = f`) and one with `α` of degree 2 (`α = f·vol`), both
    /// with `μ = |m|`. Modes with `|m|² ≤ max_norm_sq` are kept.
    pub fn torus(max_norm_sq: usize) -> Self {
        let bound = (max_norm_sq as f64).sqrt() as i64 + 1;
        let mut counts = std::collections::BTreeMap::new();
        for a in -bound..=bound {
            for b in -bound..=bound {
                let q = (a * a + b * b) as usize;
                if q > 0 && q <= max_norm_sq {
                    *counts.entry(q).or_insert(0usize) += 1;
                }
            }
        }
        let mut pairs = Vec::new();
        for (&q, &count) in &counts {
            for degree in [1, 2] {
                pairs.push(LinkPair {
                    degree,
                    mu: (q as f64).sqrt(),
                    multiplicity: count,
                });
            }
        }
        Self::new("torus", 2, vec![1, 2, 1], pairs).expect("valid built-in")
    }
}

/// Harmonic dimensions per degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HarmonicDims {
    pub dims: Vec<usize>,
}

impl HarmonicDims {
    /// Total dimension.
    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }
}

/// Dimensions of `ℋ^{±,*}_{max/min}` on a cone of dimension `n` whose link
/// has Betti numbers `link_betti` (`n` entries, for the same choice).
///
/// * `+`, max: `β^r` in degree `r` if `κ > −1/2`;
/// * `+`, min: `β^r` in degree `r` if `κ ≥ 1/2`;
/// * `−`, max: `β^r` in degree `r+1` if `κ ≤ −1/2`;
/// * `−`, min: `β^r` in degree `r+1` if `κ < 1/2`.
pub fn cone_harmonic_dims(link_betti: &[usize], n: usize, u: &Rational, sign: Sign, choice: Choice) -> Result<HarmonicDims> {
    if link_betti.len() != n {
        return Err(Error::LengthMismatch {
            left: link_betti.len(),
            right: n,
        });
    }
    let half = rat(1, 2);
    let mut dims = vec![0usize; n + 1];
    for (r, &b) in link_betti.iter().enumerate() {
        let k = kappa(n, r, u);
        match (sign, choice) {
            (Sign::Plus, Choice::Max) if k > -half.clone() => dims[r] += b,
            (Sign::Plus, Choice::Min) if k >= half => dims[r] += b,
            (Sign::Minus, Choice::Max) if k <= -half.clone() => dims[r + 1] += b,
            (Sign::Minus, Choice::Min) if k < half => dims[r + 1] += b,
            _ => {}
        }
    }
    Ok(HarmonicDims { dims })
}

/// Assembled spectrum of the cone Witten Laplacian, truncated.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConeSpectrum {
    /// Ascending values per degree `0, …, n`.
    pub degrees: Vec<Vec<f64>>,
    /// Number of values per degree within `1e−8·s` of zero.
    pub kernel: Vec<usize>,
    /// Number of eigenvalues contributed by the subcomplexes, which equals
    /// the total size of `degrees`.
    pub contributions: usize,
}

/// Witten spectrum of `c(L)` of dimension `n = dim L + 1`, with `size`
/// eigenvalues per model component and block.
pub fn cone_witten_spectrum(
    link: &LinkSpectralData,
    n: usize,
    u: &Rational,
    s: f64,
    sign: Sign,
    choice: Choice,
    size: usize,
) -> Result<ConeSpectrum> {
    if link.dim + 1 != n {
        return Err(Error::domain("cone", format!("link of dimension {} needs n={}, got {n}", link.dim, link.dim + 1)));
    }
    if !u.is_positive() || u > &Rational::one() {
        return Err(Error::domain("cone", format!("u={u} must lie in (0, 1]")));
    }
    let mut degrees: Vec<Vec<f64>> = vec![Vec::new(); n + 1];
    let mut contributions = 0;
    for (r, &h) in link.harmonic.iter().enumerate() {
        if h == 0 {
            continue;
        }
        let k = kappa(n, r, u);
        let [t0, t1] = complex1_assignment(&k, choice);
        let spec = Complex1Spec::new(s, k, sign)?;
        let low = complex1_spectrum(&spec, t0, size)?;
        let high = complex1_spectrum(&spec, t1, size)?;
        for _ in 0..h {
            contributions += low.len() + high.len();
            degrees[r].extend(&low);
            degrees[r + 1].extend(&high);
        }
    }
    for pair in &link.pairs {
        let spec = Complex2Spec::new(s, kappa(n, pair.degree, u), u.clone(), pair.mu, sign)?;
        let parts = complex2_realized_spectra(&spec, choice, size)?;
        for _ in 0..pair.multiplicity {
            for (offset, part) in parts.iter().enumerate() {
                contributions += part.len();
                degrees[pair.degree + offset - 1].extend(part);
            }
        }
    }
    for d in &mut degrees {
        d.sort_by(f64::total_cmp);
    }
    let tol = ZERO_TOLERANCE * s;
    let kernel = degrees.iter().map(|d| d.iter().filter(|v| v.abs() <= tol).count()).collect();
    Ok(ConeSpectrum {
        degrees,
        kernel,
        contributions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kappa_examples() {
        assert_eq!(kappa(3, 1, &int(1)), int(0));
        assert_eq!(kappa(5, 1, &int(1)), int(1));
        assert_eq!(kappa(2, 1, &rat(1, 2)), rat(-1, 4));
    }

    #[test]
    fn exclusion_examples() {
        let r = exclusion_lemma_check(3, &rat(1, 2)).unwrap();
        assert!(r.goodness && r.hits.is_empty() && r.equivalent);
        let r = exclusion_lemma_check(2, &rat(1, 2)).unwrap();
        assert!(!r.goodness && r.hits.contains(&0) && r.equivalent);
        let r = exclusion_lemma_check(4, &int(1)).unwrap();
        assert!(!r.applies && r.equivalent);
    }

    #[test]
    fn harmonic_dims_examples() {
        let u = int(1);
        let d = |sign, choice| cone_harmonic_dims(&[1, 1], 2, &u, sign, choice).unwrap().dims;
        assert_eq!(d(Sign::Plus, Choice::Max), vec![1, 0, 0]);
        assert_eq!(d(Sign::Plus, Choice::Min), vec![1, 0, 0]);
        assert_eq!(d(Sign::Minus, Choice::Max), vec![0, 0, 1]);
        assert!(cone_harmonic_dims(&[1], 2, &u, Sign::Plus, Choice::Max).is_err());
    }

    #[test]
    fn point_link() {
        let c = cone_witten_spectrum(&LinkSpectralData::point(), 1, &rat(1, 2), 1.0, Sign::Plus, Choice::Max, 4).unwrap();
        assert_eq!(c.kernel, vec![1, 0]);
        assert_eq!(c.degrees[0], vec![0.0, 4.0, 8.0, 12.0]);
        assert_eq!(c.contributions, 8);
    }

    #[test]
    fn torus_mode_counts() {
        let t = LinkSpectralData::torus(2);
        // |m|² = 1: four modes; |m|² = 2: four modes; each in degrees 1 and 2.
        assert_eq!(t.pairs.len(), 4);
        assert!(t.pairs.iter().all(|p| p.multiplicity == 4));
    }
}
