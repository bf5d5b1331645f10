//! Local Morse numbers of rel-critical points, Witten Betti numbers of the
//! local models, and the Morse inequalities.
//!
//! Around a rel-critical point the model is
//! `ℝ^{m₊} × ∏_{i∈I₊} c(L_i) × ℝ^{m₋} × ∏_{j∈I₋} c(L_j)` with
//! `f = ½(ρ₊² − ρ₋²)`. Its contribution in degree `r` is
//!
//! `ν^r = Σ ∏_i βʳⁱ(L_i)`, summed over `r = m₋ + Σ r_i + |I₋|` with
//!
//! | choice | `i ∈ I₊` | `i ∈ I₋` |
//! |---|---|---|
//! | max | `r_i < (k_i−1)/2 + 1/(2u_i)` | `r_i ≥ (k_i−1)/2 + 1/(2u_i)` |
//! | min | `r_i ≤ (k_i−1)/2 − 1/(2u_i)` | `r_i > (k_i−1)/2 − 1/(2u_i)` |
//!
//! where `k_i = dim L_i + 1`. The thresholds are encoded once, in
//! [`admits_degree`]. All arithmetic is exact.
//!
//! The intersection-homology oracle lives in [`ih_oracle`] and is never
//! consulted by the ν computations.

pub mod ih_oracle;

pub use ih_oracle::ih_betti_oracle;

use crate::elliptic_complexes::{cone_harmonic_dims, Choice, Sign};
use crate::error::{Error, Result};
use crate::numerics::rational::{deserialize_rational, int, serialize_rational};
use crate::numerics::Rational;
use crate::stratified_spaces::{convolve, Perversity, SpaceNode};
use serde::{Deserialize, Serialize};

/// The side of a cone factor: `+` if `f` increases along `ρ` (the factor
/// belongs to `I₊`), `−` otherwise.
pub type Side = Sign;

/// One cone factor `c(L_i)` of a rel-critical point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalFactor {
    pub link: SpaceNode,
    #[serde(serialize_with = "serialize_rational", deserialize_with = "deserialize_rational")]
    pub u: Rational,
    pub side: Side,
    /// `β_max/min` of the link's dense stratum, when the link is singular.
    /// For manifold links the de Rham Betti numbers are used.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub betti: Option<Vec<usize>>,
}

impl CriticalFactor {
    pub fn new(link: SpaceNode, u: Rational, side: Side) -> Self {
        Self {
            link,
            u,
            side,
            betti: None,
        }
    }

    /// `k_i = dim L_i + 1`.
    pub fn k(&self) -> usize {
        self.link.dim() + 1
    }

    /// Betti numbers of the link (`k_i` entries).
    pub fn link_betti(&self) -> Result<Vec<usize>> {
        let betti = match &self.betti {
            Some(b) => b.clone(),
            None => self.link.manifold_betti()?,
        };
        if betti.len() != self.k() {
            return Err(Error::LengthMismatch {
                left: betti.len(),
                right: self.k(),
            });
        }
        Ok(betti)
    }
}

/// A rel-critical point: Euclidean dimensions `m₊`, `m₋` and cone factors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelCriticalPoint {
    pub m_plus: usize,
    pub m_minus: usize,
    #[serde(default)]
    pub factors: Vec<CriticalFactor>,
}

impl RelCriticalPoint {
    /// A point of a smooth stratum with Morse index `index`.
    pub fn smooth(dim: usize, index: usize) -> Self {
        Self {
            m_plus: dim - index,
            m_minus: index,
            factors: Vec::new(),
        }
    }

    /// Dimension of the local model.
    pub fn dim(&self) -> usize {
        self.m_plus + self.m_minus + self.factors.iter().map(CriticalFactor::k).sum::<usize>()
    }

    fn minus_count(&self) -> usize {
        self.factors.iter().filter(|f| f.side == Sign::Minus).count()
    }
}

/// The threshold predicate: whether link degree `r` of a factor with
/// `k = dim L + 1`, exponent `u` and the given side contributes to `ν_max`
/// or `ν_min`.
pub fn admits_degree(r: usize, k: usize, u: &Rational, side: Side, choice: Choice) -> bool {
    let half_inv = u.recip() / int(2);
    let base = Rational::new((k as i64 - 1).into(), 2.into());
    let r = int(r as i64);
    match choice {
        Choice::Max => {
            let t = base + half_inv;
            match side {
                Sign::Plus => r < t,
                Sign::Minus => r >= t,
            }
        }
        Choice::Min => {
            let t = base - half_inv;
            match side {
                Sign::Plus => r <= t,
                Sign::Minus => r > t,
            }
        }
    }
}

fn delta(len: usize, at: usize) -> Vec<usize> {
    let mut v = vec![0; len];
    v[at] = 1;
    v
}

fn shift(v: &[usize], by: usize) -> Vec<usize> {
    let mut out = vec![0; by];
    out.extend_from_slice(v);
    out
}

fn pad(mut v: Vec<usize>, len: usize) -> Vec<usize> {
    v.resize(len, 0);
    v
}

/// `ν^r_{x,max/min}`, `r = 0, …, dim`.
pub fn nu_local(point: &RelCriticalPoint, choice: Choice) -> Result<Vec<usize>> {
    let mut acc = vec![1usize];
    for f in &point.factors {
        let betti = f.link_betti()?;
        let k = f.k();
        let allowed: Vec<usize> = betti
            .iter()
            .enumerate()
            .map(|(r, &b)| if admits_degree(r, k, &f.u, f.side, choice) { b } else { 0 })
            .collect();
        acc = convolve(&acc, &allowed);
    }
    let acc = shift(&acc, point.m_minus + point.minus_count());
    Ok(pad(acc, point.dim() + 1))
}

/// The same numbers obtained from the harmonic spaces of the model: the
/// Künneth product of `ℝ^{m₊}` (concentrated in degree 0), `ℝ^{m₋}`
/// (degree `m₋`) and the cone harmonic dimensions of every factor at the
/// sign of its side.
pub fn nu_via_harmonics(point: &RelCriticalPoint, choice: Choice) -> Result<Vec<usize>> {
    let mut acc = delta(point.m_plus + 1, 0);
    acc = convolve(&acc, &delta(point.m_minus + 1, point.m_minus));
    for f in &point.factors {
        let k = f.k();
        let dims = cone_harmonic_dims(&f.link_betti()?, k, &f.u, f.side, choice)?;
        acc = convolve(&acc, &dims.dims);
    }
    Ok(acc)
}

/// Which perversity formulas to use in [`nu_perversity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PerversityConvention {
    /// `ν^p̄`, equal to `ν_max` for `p̄ ≤ m̄`.
    PbarMax,
    /// `ν^q̄`, equal to `ν_min` for `q̄ ≥ n̄`.
    QbarMin,
}

/// `ν^p̄_{x,r}` (or `ν^q̄_{x,r}`) for a point with at most one cone factor
/// per side, using the perversity's own Betti numbers of the links.
///
/// * no factor: `δ_{r,m₋}`;
/// * one `+` factor: `r = m₋ + r₊`, `r₊ ≤ k − 2 − p_k`;
/// * one `−` factor: `r = m₋ + r₋ + 1`, `r₋ ≥ k − 1 − p_k`;
/// * one factor on each side (only if `2p_k = k − 2`, `k = k₊ + k₋`):
///   `r = m₋ + r₊ + r₋ + 1` with `r₊ < k₊/2`, `r₋ ≥ k₋/2` for `p̄`, and
///   `r₊ ≤ k₊/2 − 1`, `r₋ > k₋/2 − 1` for `q̄`.
pub fn nu_perversity(point: &RelCriticalPoint, p: &Perversity, convention: PerversityConvention) -> Result<Vec<usize>> {
    let len = point.dim() + 1;
    let plus: Vec<&CriticalFactor> = point.factors.iter().filter(|f| f.side == Sign::Plus).collect();
    let minus: Vec<&CriticalFactor> = point.factors.iter().filter(|f| f.side == Sign::Minus).collect();
    if plus.len() > 1 || minus.len() > 1 {
        return Err(Error::invalid("perversity form needs at most one cone factor per side"));
    }
    let pk = |k: usize| -> Result<i64> {
        if k < 2 {
            return Err(Error::invalid(format!("cone factor with k = {k} has a codimension-one stratum")));
        }
        p.get(k)
            .ok_or_else(|| Error::domain("perversity", format!("p_{k} is not defined (max k = {})", p.max_k())))
    };
    let m = point.m_minus;
    let mut nu = vec![0usize; len];
    match (plus.first(), minus.first()) {
        (None, None) => nu[m] = 1,
        (Some(f), None) => {
            let k = f.k();
            let bound = k as i64 - 2 - pk(k)?;
            for (r, &b) in f.link_betti()?.iter().enumerate() {
                if (r as i64) <= bound {
                    nu[m + r] += b;
                }
            }
        }
        (None, Some(f)) => {
            let k = f.k();
            let bound = k as i64 - 1 - pk(k)?;
            for (r, &b) in f.link_betti()?.iter().enumerate() {
                if (r as i64) >= bound {
                    nu[m + r + 1] += b;
                }
            }
        }
        (Some(fp), Some(fm)) => {
            let (kp, km) = (fp.k(), fm.k());
            let k = kp + km;
            if 2 * pk(k)? != k as i64 - 2 {
                return Err(Error::invalid(format!(
                    "cone factors on both sides need 2p_k = k − 2 (k = {k}, p_k = {})",
                    pk(k)?
                )));
            }
            let (bp, bm) = (fp.link_betti()?, fm.link_betti()?);
            for (rp, &x) in bp.iter().enumerate() {
                for (rm, &y) in bm.iter().enumerate() {
                    let ok = match convention {
                        PerversityConvention::PbarMax => 2 * rp < kp && 2 * rm >= km,
                        PerversityConvention::QbarMin => 2 * rp + 2 <= kp && 2 * rm + 2 > km,
                    };
                    if ok {
                        nu[m + rp + rm + 1] += x * y;
                    }
                }
            }
        }
    }
    Ok(nu)
}

/// Which Betti numbers a vector records.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "flavor", rename_all = "lowercase")]
pub enum BettiFlavor {
    Max,
    Min,
    Perversity { p: Perversity },
}

/// Per-degree Betti numbers with their flavor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiVector {
    pub values: Vec<usize>,
    #[serde(flatten)]
    pub flavor: BettiFlavor,
}

impl BettiVector {
    /// `Σ (−1)^r βʳ`.
    pub fn euler(&self) -> i64 {
        alternating(&self.values)
    }
}

fn alternating(v: &[usize]) -> i64 {
    v.iter().enumerate().map(|(r, &b)| if r % 2 == 0 { b as i64 } else { -(b as i64) }).sum()
}

fn choice_flavor(choice: Choice) -> BettiFlavor {
    match choice {
        Choice::Max => BettiFlavor::Max,
        Choice::Min => BettiFlavor::Min,
    }
}

/// Dimensions of the Witten harmonic space `ℋ^{±,*}_{max/min}` of a local
/// model, for `f = ±ρ²/2`:
///
/// * manifolds: their Betti numbers;
/// * `ℝ^m`: degree `0` for `+`, degree `m` for `−`;
/// * `c(L)` with a manifold link: [`cone_harmonic_dims`];
/// * products: Künneth convolution of the factors.
///
/// Suspensions are compact global spaces, not local models, and are refused.
pub fn betti_witten(space: &SpaceNode, sign: Sign, choice: Choice) -> Result<BettiVector> {
    fn go(space: &SpaceNode, sign: Sign, choice: Choice) -> Result<Vec<usize>> {
        match space {
            SpaceNode::Manifold { betti, .. } => Ok(betti.clone()),
            SpaceNode::Euclidean { dim } => Ok(delta(dim + 1, if sign == Sign::Plus { 0 } else { *dim })),
            SpaceNode::Cone { link, u } => {
                let n = link.dim() + 1;
                Ok(cone_harmonic_dims(&link.manifold_betti()?, n, u, sign, choice)?.dims)
            }
            SpaceNode::Product { factors } => {
                let mut acc = vec![1usize];
                for f in factors {
                    acc = convolve(&acc, &go(f, sign, choice)?);
                }
                Ok(acc)
            }
            SpaceNode::Suspension { .. } => Err(Error::invalid(
                "a suspension is not a local model; use the intersection-homology oracle",
            )),
        }
    }
    Ok(BettiVector {
        values: go(space, sign, choice)?,
        flavor: choice_flavor(choice),
    })
}

/// One partial alternating inequality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartialInequality {
    pub k: usize,
    pub betti_sum: i64,
    pub nu_sum: i64,
    pub holds: bool,
}

/// Result of [`morse_inequalities`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MorseReport {
    pub betti: Vec<usize>,
    pub nu: Vec<usize>,
    /// `Σ_{r≤k} (−1)^{k−r} βʳ ≤ Σ_{r≤k} (−1)^{k−r} νʳ` for `0 ≤ k < n`.
    pub partial: Vec<PartialInequality>,
    pub euler_betti: i64,
    pub euler_nu: i64,
    pub euler_holds: bool,
}

impl MorseReport {
    /// All partial inequalities and the Euler equality hold.
    pub fn all_hold(&self) -> bool {
        self.euler_holds && self.partial.iter().all(|p| p.holds)
    }
}

/// Evaluates the Morse inequalities exactly.
pub fn morse_inequalities(betti: &[usize], nu: &[usize]) -> Result<MorseReport> {
    if betti.len() != nu.len() {
        return Err(Error::LengthMismatch {
            left: betti.len(),
            right: nu.len(),
        });
    }
    if betti.is_empty() {
        return Err(Error::invalid("empty Betti vector"));
    }
    let n = betti.len() - 1;
    let partial = (0..n)
        .map(|k| {
            let sum = |v: &[usize]| -> i64 {
                (0..=k).map(|r| if (k - r) % 2 == 0 { v[r] as i64 } else { -(v[r] as i64) }).sum()
            };
            let (b, v) = (sum(betti), sum(nu));
            PartialInequality {
                k,
                betti_sum: b,
                nu_sum: v,
                holds: b <= v,
            }
        })
        .collect();
    let (eb, en) = (alternating(betti), alternating(nu));
    Ok(MorseReport {
        betti: betti.to_vec(),
        nu: nu.to_vec(),
        partial,
        euler_betti: eb,
        euler_nu: en,
        euler_holds: eb == en,
    })
}

/// Sums per-point vectors, which must all have the same length.
pub fn total_nu(per_point: &[Vec<usize>]) -> Result<Vec<usize>> {
    let len = per_point.first().map_or(0, Vec::len);
    let mut out = vec![0usize; len];
    for v in per_point {
        if v.len() != len {
            return Err(Error::LengthMismatch { left: v.len(), right: len });
        }
        for (o, x) in out.iter_mut().zip(v) {
            *o += x;
        }
    }
    Ok(out)
}

/// `Σ_x ν_{x,max/min}` over a set of critical points.
pub fn nu_total(points: &[RelCriticalPoint], choice: Choice) -> Result<Vec<usize>> {
    total_nu(&points.iter().map(|p| nu_local(p, choice)).collect::<Result<Vec<_>>>()?)
}

/// `Σ_x ν^p̄_x` over a set of critical points.
pub fn nu_perversity_total(points: &[RelCriticalPoint], p: &Perversity, convention: PerversityConvention) -> Result<Vec<usize>> {
    total_nu(&points.iter().map(|x| nu_perversity(x, p, convention)).collect::<Result<Vec<_>>>()?)
}

/// Whether two critical-point data sets on the same space give the same
/// alternating sum `Σ (−1)^r νʳ`.
pub fn euler_invariance(f1: &[RelCriticalPoint], f2: &[RelCriticalPoint], choice: Choice) -> Result<bool> {
    Ok(alternating(&nu_total(f1, choice)?) == alternating(&nu_total(f2, choice)?))
}

/// The height function on `ΣL`: a minimum at the south vertex (link on the
/// `+` side) and a maximum at the north vertex (link on the `−` side).
pub fn suspension_morse_data(link: &SpaceNode, u: &Rational) -> Vec<RelCriticalPoint> {
    [Sign::Plus, Sign::Minus]
        .into_iter()
        .map(|side| RelCriticalPoint {
            m_plus: 0,
            m_minus: 0,
            factors: vec![CriticalFactor::new(link.clone(), u.clone(), side)],
        })
        .collect()
}

/// A Morse data document: a compact space and the rel-critical points of a
/// function on it, optionally with perversities to evaluate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorseDocument {
    pub space: SpaceNode,
    pub points: Vec<RelCriticalPoint>,
    #[serde(default)]
    pub perversities: Vec<Perversity>,
}

/// Morse inequalities for one flavor of a document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DocumentCheck {
    pub flavor: BettiFlavor,
    pub per_point: Vec<Vec<usize>>,
    pub report: MorseReport,
}

/// Evaluates a document. Smooth spaces use their Betti numbers and
/// `ν_max`; singular spaces are evaluated for every listed perversity (or
/// every `p̄ ≤ m̄` if none is listed), with `ν^p̄` and the oracle's `β^p̄`.
pub fn analyze_document(doc: &MorseDocument) -> Result<Vec<DocumentCheck>> {
    let space = doc.space.clone().validated()?;
    if !space.is_compact() {
        return Err(Error::invalid("the space of a Morse document must be compact"));
    }
    let n = space.dim();
    for (i, p) in doc.points.iter().enumerate() {
        if p.dim() != n {
            return Err(Error::invalid(format!("points[{i}] has a local model of dimension {}, expected {n}", p.dim())));
        }
    }
    if space.is_smooth() {
        let betti = space.manifold_betti()?;
        let per_point = doc.points.iter().map(|p| nu_local(p, Choice::Max)).collect::<Result<Vec<_>>>()?;
        let report = morse_inequalities(&betti, &total_nu(&per_point)?)?;
        return Ok(vec![DocumentCheck {
            flavor: BettiFlavor::Max,
            per_point,
            report,
        }]);
    }
    let perversities = if doc.perversities.is_empty() {
        let m = Perversity::lower_middle(n)?;
        Perversity::all(n).into_iter().filter(|p| p.le(&m)).collect()
    } else {
        doc.perversities.clone()
    };
    perversities
        .iter()
        .map(|p| {
            let betti = ih_betti_oracle(&space, p)?;
            let per_point = doc
                .points
                .iter()
                .map(|x| nu_perversity(x, p, PerversityConvention::PbarMax))
                .collect::<Result<Vec<_>>>()?;
            let report = morse_inequalities(&betti.values, &total_nu(&per_point)?)?;
            Ok(DocumentCheck {
                flavor: BettiFlavor::Perversity { p: p.clone() },
                per_point,
                report,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rational::rat;

    fn circle_point(side: Side) -> RelCriticalPoint {
        RelCriticalPoint {
            m_plus: 0,
            m_minus: 0,
            factors: vec![CriticalFactor::new(SpaceNode::sphere(1), int(1), side)],
        }
    }

    #[test]
    fn threshold_table() {
        // k = 2, u = 1: max threshold 1, min threshold 0.
        let u = int(1);
        assert!(admits_degree(0, 2, &u, Sign::Plus, Choice::Max));
        assert!(!admits_degree(1, 2, &u, Sign::Plus, Choice::Max));
        assert!(admits_degree(1, 2, &u, Sign::Minus, Choice::Max));
        assert!(admits_degree(0, 2, &u, Sign::Plus, Choice::Min));
        assert!(!admits_degree(0, 2, &u, Sign::Minus, Choice::Min));
        assert!(admits_degree(1, 2, &u, Sign::Minus, Choice::Min));
        // k = 3, u = 1/2: max threshold 2, min threshold 0.
        let u = rat(1, 2);
        assert!(admits_degree(1, 3, &u, Sign::Plus, Choice::Max));
        assert!(!admits_degree(2, 3, &u, Sign::Plus, Choice::Max));
        assert!(admits_degree(2, 3, &u, Sign::Minus, Choice::Max));
        assert!(admits_degree(0, 3, &u, Sign::Plus, Choice::Min));
        assert!(!admits_degree(0, 3, &u, Sign::Minus, Choice::Min));
    }

    #[test]
    fn nu_examples() {
        assert_eq!(nu_local(&RelCriticalPoint::smooth(3, 1), Choice::Max).unwrap(), vec![0, 1, 0, 0]);
        assert_eq!(nu_local(&circle_point(Sign::Plus), Choice::Max).unwrap(), vec![1, 0, 0]);
        assert_eq!(nu_local(&circle_point(Sign::Minus), Choice::Max).unwrap(), vec![0, 0, 1]);
        for side in Sign::ALL {
            for choice in Choice::ALL {
                let p = circle_point(side);
                assert_eq!(nu_local(&p, choice).unwrap(), nu_via_harmonics(&p, choice).unwrap());
            }
        }
    }

    #[test]
    fn perversity_examples() {
        let p = Perversity::zero(3).unwrap();
        let s2 = |side| RelCriticalPoint {
            m_plus: 0,
            m_minus: 0,
            factors: vec![CriticalFactor::new(SpaceNode::sphere(2), rat(1, 2), side)],
        };
        assert_eq!(nu_perversity(&s2(Sign::Plus), &p, PerversityConvention::PbarMax).unwrap(), vec![1, 0, 0, 0]);
        assert_eq!(nu_perversity(&s2(Sign::Minus), &p, PerversityConvention::PbarMax).unwrap(), vec![0, 0, 0, 1]);
        let smooth = RelCriticalPoint::smooth(2, 1);
        assert_eq!(nu_perversity(&smooth, &p, PerversityConvention::PbarMax).unwrap(), vec![0, 1, 0]);
        let both = RelCriticalPoint {
            m_plus: 0,
            m_minus: 0,
            factors: vec![
                CriticalFactor::new(SpaceNode::sphere(2), int(1), Sign::Plus),
                CriticalFactor::new(SpaceNode::sphere(2), int(1), Sign::Minus),
            ],
        };
        // k = 6 with 2p₆ = 0 ≠ 4.
        assert!(nu_perversity(&both, &Perversity::zero(6).unwrap(), PerversityConvention::PbarMax).is_err());
        let m = Perversity::lower_middle(6).unwrap();
        let nu = nu_perversity(&both, &m, PerversityConvention::PbarMax).unwrap();
        assert_eq!(nu, nu_local(&both, Choice::Max).unwrap());
    }

    #[test]
    fn betti_witten_examples() {
        let e = betti_witten(&SpaceNode::Euclidean { dim: 3 }, Sign::Plus, Choice::Max).unwrap();
        assert_eq!(e.values, vec![1, 0, 0, 0]);
        let c = SpaceNode::cone(SpaceNode::sphere(1), int(1)).unwrap();
        assert_eq!(betti_witten(&c, Sign::Plus, Choice::Max).unwrap().values, vec![1, 0, 0]);
        let sq = SpaceNode::product(vec![c.clone(), c]).unwrap();
        assert_eq!(betti_witten(&sq, Sign::Plus, Choice::Max).unwrap().values, vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn inequality_examples() {
        let r = morse_inequalities(&[1, 0, 1], &[1, 0, 1]).unwrap();
        assert!(r.all_hold());
        assert!(r.partial.iter().all(|p| p.betti_sum == p.nu_sum));
        let r = morse_inequalities(&[1, 2, 1], &[1, 0, 1]).unwrap();
        assert!(!r.all_hold());
        assert!(morse_inequalities(&[1], &[1, 0]).is_err());
    }

    #[test]
    fn torus_euler_invariance() {
        let four: Vec<_> = [0, 1, 1, 2].iter().map(|&i| RelCriticalPoint::smooth(2, i)).collect();
        // Two minima, three saddles and one maximum.
        let six: Vec<_> = [0, 0, 1, 1, 1, 2].iter().map(|&i| RelCriticalPoint::smooth(2, i)).collect();
        assert!(euler_invariance(&four, &four, Choice::Max).unwrap());
        assert!(euler_invariance(&four, &six, Choice::Max).unwrap());
        let sphere_like: Vec<_> = [0, 2].iter().map(|&i| RelCriticalPoint::smooth(2, i)).collect();
        assert!(!euler_invariance(&four, &sphere_like, Choice::Max).unwrap());
    }
}
