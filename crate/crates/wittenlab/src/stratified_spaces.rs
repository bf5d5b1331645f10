//! Stratified spaces built from manifolds, cones, suspensions and products;
//! general types, goodness and perversities.
//!
//! A [`SpaceNode`] is an immutable tree. Metric exponents live on cone and
//! suspension nodes only: a cone `c(L)` with exponent `u` carries the metric
//! `ρ^{2u}g̃ + (dρ)²`, and a suspension carries the same exponent at both
//! vertices. Products carry no exponent of their own.
//!
//! A metric is *good* when every exponent satisfies `u ≤ 1` and
//! `1/u ∈ 2ℤ + k + (0,1]` whenever `1/k ≤ u < 1`, where `k = dim L + 1`.
//! Everything here is exact rational arithmetic.

use crate::error::{Error, Result};
use crate::numerics::rational::{deserialize_rational, int, rat, serialize_rational};
use crate::numerics::Rational;
use num::{Integer, One, Signed};
use serde::{Deserialize, Serialize};

/// A node of a stratified-space description.
///
/// Serialized as a tree tagged by `kind`; exponents are `"num/den"` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SpaceNode {
    /// A closed manifold with given Betti numbers (`dim + 1` entries).
    Manifold { dim: usize, betti: Vec<usize> },
    /// The open cone `c(L)` over a compact link.
    Cone {
        link: Box<SpaceNode>,
        #[serde(serialize_with = "serialize_rational", deserialize_with = "deserialize_rational")]
        u: Rational,
    },
    /// The suspension `ΣL`: two cones over a compact link glued along
    /// `L × ℝ`, with the same exponent at both vertices.
    Suspension {
        link: Box<SpaceNode>,
        #[serde(serialize_with = "serialize_rational", deserialize_with = "deserialize_rational")]
        u: Rational,
    },
    /// Euclidean space `ℝ^dim` (non-compact unless `dim = 0`).
    Euclidean { dim: usize },
    /// A finite product.
    Product { factors: Vec<SpaceNode> },
}

impl SpaceNode {
    /// A point.
    pub fn point() -> Self {
        Self::Manifold { dim: 0, betti: vec![1] }
    }

    /// The sphere `Sⁿ` (`n ≥ 1`; `S⁰` has `β₀ = 2`).
    pub fn sphere(n: usize) -> Self {
        let mut betti = vec![0; n + 1];
        if n == 0 {
            betti[0] = 2;
        } else {
            betti[0] = 1;
            betti[n] = 1;
        }
        Self::Manifold { dim: n, betti }
    }

    /// The torus `Tⁿ`, with `βʳ = C(n, r)`.
    pub fn torus(n: usize) -> Self {
        let mut betti = vec![1usize; n + 1];
        for r in 1..=n {
            betti[r] = betti[r - 1] * (n - r + 1) / r;
        }
        Self::Manifold { dim: n, betti }
    }

    /// `c(L)` with exponent `u`.
    pub fn cone(link: SpaceNode, u: Rational) -> Result<Self> {
        Self::Cone { link: Box::new(link), u }.validated()
    }

    /// `ΣL` with exponent `u` at both vertices.
    pub fn suspension(link: SpaceNode, u: Rational) -> Result<Self> {
        Self::Suspension { link: Box::new(link), u }.validated()
    }

    /// A product of factors.
    pub fn product(factors: Vec<SpaceNode>) -> Result<Self> {
        Self::Product { factors }.validated()
    }

    /// Checks the structural invariants recursively: Betti vectors of length
    /// `dim + 1`, compact links and exponents in `(0, 1]`.
    pub fn validated(self) -> Result<Self> {
        self.validate()?;
        Ok(self)
    }

    fn validate(&self) -> Result<()> {
        match self {
            Self::Manifold { dim, betti } => {
                if betti.len() != dim + 1 {
                    return Err(Error::invalid(format!(
                        "manifold of dimension {dim} needs {} Betti numbers, got {}",
                        dim + 1,
                        betti.len()
                    )));
                }
                Ok(())
            }
            Self::Cone { link, u } | Self::Suspension { link, u } => {
                link.validate()?;
                if !link.is_compact() {
                    return Err(Error::invalid("a cone link must be compact"));
                }
                if !u.is_positive() || u > &Rational::one() {
                    return Err(Error::invalid(format!("exponent u={u} must lie in (0, 1]")));
                }
                Ok(())
            }
            Self::Euclidean { .. } => Ok(()),
            Self::Product { factors } => {
                if factors.is_empty() {
                    return Err(Error::invalid("a product needs at least one factor"));
                }
                factors.iter().try_for_each(Self::validate)
            }
        }
    }

    /// Dimension: `dim c(L) = dim ΣL = dim L + 1`, products add.
    pub fn dim(&self) -> usize {
        match self {
            Self::Manifold { dim, .. } | Self::Euclidean { dim } => *dim,
            Self::Cone { link, .. } | Self::Suspension { link, .. } => link.dim() + 1,
            Self::Product { factors } => factors.iter().map(Self::dim).sum(),
        }
    }

    /// Whether the described space is compact.
    pub fn is_compact(&self) -> bool {
        match self {
            Self::Manifold { .. } | Self::Suspension { .. } => true,
            Self::Cone { .. } => false,
            Self::Euclidean { dim } => *dim == 0,
            Self::Product { factors } => factors.iter().all(Self::is_compact),
        }
    }

    /// Whether the space has no singular strata.
    pub fn is_smooth(&self) -> bool {
        match self {
            Self::Manifold { .. } | Self::Euclidean { .. } => true,
            Self::Cone { .. } | Self::Suspension { .. } => false,
            Self::Product { factors } => factors.iter().all(Self::is_smooth),
        }
    }

    /// Betti numbers of a smooth compact space (Künneth for products).
    pub fn manifold_betti(&self) -> Result<Vec<usize>> {
        match self {
            Self::Manifold { betti, .. } => Ok(betti.clone()),
            Self::Euclidean { dim: 0 } => Ok(vec![1]),
            Self::Product { factors } => {
                let mut acc = vec![1usize];
                for f in factors {
                    acc = convolve(&acc, &f.manifold_betti()?);
                }
                Ok(acc)
            }
            _ => Err(Error::invalid(
                "Betti numbers of a singular or non-compact link must be supplied explicitly",
            )),
        }
    }
}

/// Künneth convolution of two Betti vectors.
pub fn convolve(a: &[usize], b: &[usize]) -> Vec<usize> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0usize; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// The goodness condition at a cone point with `k = dim L + 1`:
/// `0 < u ≤ 1` and, if `1/k ≤ u < 1`, `1/u ∈ 2ℤ + k + (0,1]`.
///
/// `x ∈ 2ℤ + (0,1]` is equivalent to `⌈x⌉` being odd.
pub fn satisfies_goodness(k: usize, u: &Rational) -> bool {
    if !u.is_positive() || u > &Rational::one() {
        return false;
    }
    let one = Rational::one();
    if u == &one || k == 0 || u < &rat(1, k as i64) {
        return true;
    }
    let x = u.recip() - int(k as i64);
    x.ceil().to_integer().is_odd()
}

/// Goodness verdict at one cone point of a description.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoodnessDiagnostic {
    /// Location in the tree, e.g. `product[1]/cone`.
    pub path: String,
    pub k: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub u: Rational,
    pub good: bool,
}

/// Result of [`is_good`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoodnessReport {
    pub good: bool,
    pub diagnostics: Vec<GoodnessDiagnostic>,
}

/// Checks goodness recursively at every cone and suspension node.
pub fn is_good(node: &SpaceNode) -> GoodnessReport {
    fn walk(node: &SpaceNode, path: String, out: &mut Vec<GoodnessDiagnostic>) {
        match node {
            SpaceNode::Manifold { .. } | SpaceNode::Euclidean { .. } => {}
            SpaceNode::Cone { link, u } | SpaceNode::Suspension { link, u } => {
                let name = if matches!(node, SpaceNode::Cone { .. }) { "cone" } else { "suspension" };
                let here = if path.is_empty() { name.to_string() } else { format!("{path}/{name}") };
                let k = link.dim() + 1;
                out.push(GoodnessDiagnostic {
                    path: here.clone(),
                    k,
                    u: u.clone(),
                    good: satisfies_goodness(k, u),
                });
                walk(link, here, out);
            }
            SpaceNode::Product { factors } => {
                for (i, f) in factors.iter().enumerate() {
                    let here = if path.is_empty() { format!("product[{i}]") } else { format!("{path}/product[{i}]") };
                    walk(f, here, out);
                }
            }
        }
    }
    let mut diagnostics = Vec::new();
    walk(node, String::new(), &mut diagnostics);
    GoodnessReport {
        good: diagnostics.iter().all(|d| d.good),
        diagnostics,
    }
}

/// A perversity `p̄ = (p₂, …, p_n)` with `p₂ = 0` and
/// `p_k ≤ p_{k+1} ≤ p_k + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Perversity {
    values: Vec<i64>,
}

impl TryFrom<Vec<i64>> for Perversity {
    type Error = Error;
    fn try_from(values: Vec<i64>) -> Result<Self> {
        Perversity::new(values)
    }
}

impl From<Perversity> for Vec<i64> {
    fn from(p: Perversity) -> Self {
        p.values
    }
}

impl Perversity {
    /// `values[i] = p_{i+2}`; validates the growth constraints.
    pub fn new(values: Vec<i64>) -> Result<Self> {
        match values.first() {
            None => return Err(Error::invalid("a perversity needs at least p₂")),
            Some(&p2) if p2 != 0 => return Err(Error::invalid(format!("p₂ must be 0, got {p2}"))),
            _ => {}
        }
        for (i, w) in values.windows(2).enumerate() {
            if w[1] < w[0] || w[1] > w[0] + 1 {
                return Err(Error::invalid(format!(
                    "p_{} = {} and p_{} = {} violate p_k ≤ p_(k+1) ≤ p_k + 1",
                    i + 2,
                    w[0],
                    i + 3,
                    w[1]
                )));
            }
        }
        Ok(Self { values })
    }

    fn from_fn(n: usize, f: impl Fn(i64) -> i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain("perversity", format!("need n ≥ 2, got {n}")));
        }
        Self::new((2..=n as i64).map(f).collect())
    }

    /// Largest `k` covered.
    pub fn max_k(&self) -> usize {
        self.values.len() + 1
    }

    /// `p_k` for `2 ≤ k ≤ max_k`.
    pub fn get(&self, k: usize) -> Option<i64> {
        k.checked_sub(2).and_then(|i| self.values.get(i)).copied()
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `0̄`.
    pub fn zero(n: usize) -> Result<Self> {
        Self::from_fn(n, |_| 0)
    }

    /// `t̄`, `t_k = k − 2`.
    pub fn top(n: usize) -> Result<Self> {
        Self::from_fn(n, |k| k - 2)
    }

    /// `m̄`, `m_k = ⌊k/2⌋ − 1`.
    pub fn lower_middle(n: usize) -> Result<Self> {
        Self::from_fn(n, |k| k.div_euclid(2) - 1)
    }

    /// `n̄`, `n_k = ⌈k/2⌉ − 1`.
    pub fn upper_middle(n: usize) -> Result<Self> {
        Self::from_fn(n, |k| (k + 1).div_euclid(2) - 1)
    }

    /// Elementwise `≤` on the common range.
    pub fn le(&self, other: &Perversity) -> bool {
        self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }

    /// Every perversity on `k = 2, …, n`.
    pub fn all(n: usize) -> Vec<Perversity> {
        let mut out = vec![vec![0i64]];
        for _ in 3..=n {
            out = out
                .into_iter()
                .flat_map(|v| {
                    let last = *v.last().expect("non-empty");
                    [last, last + 1].into_iter().map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        if n < 2 {
            return Vec::new();
        }
        out.into_iter().map(|values| Perversity { values }).collect()
    }
}

/// The four standard perversities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StandardPerversities {
    pub zero: Perversity,
    pub top: Perversity,
    pub lower_middle: Perversity,
    pub upper_middle: Perversity,
}

/// `0̄`, `t̄`, `m̄` and `n̄` on `k = 2, …, n`.
pub fn standard_perversities(n: usize) -> Result<StandardPerversities> {
    Ok(StandardPerversities {
        zero: Perversity::zero(n)?,
        top: Perversity::top(n)?,
        lower_middle: Perversity::lower_middle(n)?,
        upper_middle: Perversity::upper_middle(n)?,
    })
}

/// The complementary perversity `q̄ = t̄ − p̄`.
pub fn complement(p: &Perversity) -> Result<Perversity> {
    Perversity::new(p.values.iter().enumerate().map(|(i, &v)| i as i64 - v).collect())
}

/// An interval of exponents with exact endpoints; `upper = None` is `+∞`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RationalInterval {
    #[serde(serialize_with = "serialize_rational")]
    pub lower: Rational,
    pub lower_closed: bool,
    #[serde(serialize_with = "crate::numerics::rational::serialize_opt_rational")]
    pub upper: Option<Rational>,
    pub upper_closed: bool,
}

impl RationalInterval {
    pub fn contains(&self, x: &Rational) -> bool {
        let lower_ok = if self.lower_closed { x >= &self.lower } else { x > &self.lower };
        let upper_ok = match &self.upper {
            None => true,
            Some(b) if self.upper_closed => x <= b,
            Some(b) => x < b,
        };
        lower_ok && upper_ok
    }

    /// Whether every point of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &RationalInterval) -> bool {
        let lower_ok = self.lower > other.lower || (self.lower == other.lower && (other.lower_closed || !self.lower_closed));
        let upper_ok = match (&self.upper, &other.upper) {
            (_, None) => true,
            (None, Some(_)) => false,
            (Some(a), Some(b)) => a < b || (a == b && (other.upper_closed || !self.upper_closed)),
        };
        lower_ok && upper_ok
    }

    /// Up to `count` distinct rationals of the interval (for sampling),
    /// with denominators at most `max_den`; the interval is truncated at
    /// `1` above.
    pub fn sample(&self, count: usize, max_den: i64) -> Vec<Rational> {
        let hi = self.upper.clone().unwrap_or_else(|| int(1)).min(int(1));
        let mut pts: Vec<Rational> = Vec::new();
        if self.contains(&self.lower) {
            pts.push(self.lower.clone());
        }
        pts.extend(
            crate::numerics::rational::rationals_between(&self.lower, &hi, max_den)
                .into_iter()
                .filter(|x| self.contains(x)),
        );
        if self.contains(&hi) && !pts.contains(&hi) {
            pts.push(hi);
        }
        if pts.len() <= count {
            return pts;
        }
        let step = (pts.len() - 1) as f64 / (count.max(2) - 1) as f64;
        let mut out: Vec<Rational> = (0..count).map(|i| pts[(i as f64 * step).round() as usize].clone()).collect();
        out.dedup();
        out
    }
}

fn p_at(p: &Perversity, k: usize) -> Result<i64> {
    p.get(k)
        .ok_or_else(|| Error::domain("perversity", format!("p_{k} is not defined (max k = {})", p.max_k())))
}

/// Exponents `u_k` associated to `p̄` at codimension `k`:
/// `[1/(k−1−2p_k), 1/(k−3−2p_k))` if `2p_k ≤ k−3` (the upper end is `∞`
/// when `2p_k = k−3`), and `[1, ∞)` if `2p_k = k−2`.
pub fn associated_range(p: &Perversity, k: usize) -> Result<RationalInterval> {
    let pk = p_at(p, k)?;
    let k = k as i64;
    if 2 * pk <= k - 3 {
        let upper = if 2 * pk == k - 3 { None } else { Some(rat(1, k - 3 - 2 * pk)) };
        Ok(RationalInterval {
            lower: rat(1, k - 1 - 2 * pk),
            lower_closed: true,
            upper,
            upper_closed: false,
        })
    } else if 2 * pk == k - 2 {
        Ok(RationalInterval {
            lower: int(1),
            lower_closed: true,
            upper: None,
            upper_closed: false,
        })
    } else {
        Err(Error::domain("associated range", format!("2p_{k} = {} exceeds k − 2 = {}", 2 * pk, k - 2)))
    }
}

/// The associated exponents that are also good:
/// `[1/(k−1−2p_k), 1/(k−2−2p_k))` if `2p_k ≤ k−3`, and `{1}` if
/// `2p_k = k−2`.
pub fn good_associated_range(p: &Perversity, k: usize) -> Result<RationalInterval> {
    let pk = p_at(p, k)?;
    let k = k as i64;
    if 2 * pk <= k - 3 {
        Ok(RationalInterval {
            lower: rat(1, k - 1 - 2 * pk),
            lower_closed: true,
            upper: Some(rat(1, k - 2 - 2 * pk)),
            upper_closed: false,
        })
    } else if 2 * pk == k - 2 {
        Ok(RationalInterval {
            lower: int(1),
            lower_closed: true,
            upper: Some(int(1)),
            upper_closed: true,
        })
    } else {
        Err(Error::domain("associated range", format!("2p_{k} = {} exceeds k − 2 = {}", 2 * pk, k - 2)))
    }
}

/// A perversity on `2, …, k` taking the value `pk` at `k` (the smallest such).
pub fn perversity_with_value(k: usize, pk: i64) -> Result<Perversity> {
    Perversity::new((2..=k as i64).map(|j| (pk - (k as i64 - j)).max(0)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn goodness_examples() {
        assert!(satisfies_goodness(3, &rat(1, 2)));
        assert!(!satisfies_goodness(2, &rat(1, 2)));
        assert!(satisfies_goodness(5, &int(1)));
        assert!(satisfies_goodness(4, &rat(1, 5)));
        assert!(!satisfies_goodness(4, &rat(3, 2)));
    }

    #[test]
    fn is_good_recursive() {
        let all_one = SpaceNode::cone(SpaceNode::suspension(SpaceNode::sphere(2), int(1)).unwrap(), int(1)).unwrap();
        assert!(is_good(&all_one).good);
        let good = SpaceNode::cone(SpaceNode::sphere(2), rat(1, 2)).unwrap();
        assert!(is_good(&good).good);
        let bad = SpaceNode::cone(SpaceNode::sphere(1), rat(1, 2)).unwrap();
        let report = is_good(&bad);
        assert!(!report.good);
        assert_eq!(report.diagnostics[0].k, 2);
    }

    #[test]
    fn structure_checks() {
        assert!(SpaceNode::cone(SpaceNode::Euclidean { dim: 1 }, int(1)).is_err());
        assert!(SpaceNode::Manifold { dim: 2, betti: vec![1, 0] }.validated().is_err());
        assert!(SpaceNode::cone(SpaceNode::point(), rat(3, 2)).is_err());
        let x = SpaceNode::product(vec![SpaceNode::torus(2), SpaceNode::cone(SpaceNode::sphere(1), int(1)).unwrap()]).unwrap();
        assert_eq!(x.dim(), 4);
        assert!(!x.is_compact());
        assert_eq!(SpaceNode::torus(3).manifold_betti().unwrap(), vec![1, 3, 3, 1]);
    }

    #[test]
    fn document_round_trip() {
        let x = SpaceNode::suspension(SpaceNode::torus(2), rat(1, 3)).unwrap();
        let text = serde_json::to_string(&x).unwrap();
        assert!(text.contains("\"kind\":\"suspension\"") && text.contains("\"1/3\""));
        let back: SpaceNode = serde_json::from_str(&text).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn standard_examples() {
        let s = standard_perversities(4).unwrap();
        assert_eq!(s.lower_middle.values(), &[0, 0, 1]);
        assert_eq!(s.top.values(), &[0, 1, 2]);
        assert_eq!(s.upper_middle.values(), &[0, 1, 1]);
        for n in 2..10 {
            let s = standard_perversities(n).unwrap();
            let sum: Vec<i64> = s.lower_middle.values().iter().zip(s.upper_middle.values()).map(|(a, b)| a + b).collect();
            assert_eq!(sum, s.top.values());
        }
    }

    #[test]
    fn complement_examples() {
        let s = standard_perversities(6).unwrap();
        assert_eq!(complement(&s.lower_middle).unwrap(), s.upper_middle);
        assert_eq!(complement(&s.zero).unwrap(), s.top);
        assert_eq!(complement(&s.top).unwrap(), s.zero);
        assert!(Perversity::new(vec![1]).is_err());
        assert!(Perversity::new(vec![0, 2]).is_err());
    }

    #[test]
    fn enumerate_perversities() {
        assert_eq!(Perversity::all(2).len(), 1);
        assert_eq!(Perversity::all(5).len(), 8);
    }

    #[test]
    fn range_examples() {
        let p = perversity_with_value(4, 0).unwrap();
        let a = associated_range(&p, 4).unwrap();
        assert_eq!((a.lower.clone(), a.upper.clone()), (rat(1, 3), Some(int(1))));
        let g = good_associated_range(&p, 4).unwrap();
        assert_eq!((g.lower.clone(), g.upper.clone()), (rat(1, 3), Some(rat(1, 2))));
        assert!(g.is_subset_of(&a));
        let p = perversity_with_value(4, 1).unwrap();
        let g = good_associated_range(&p, 4).unwrap();
        assert!(g.contains(&int(1)) && !g.contains(&rat(99, 100)));
        let z = Perversity::zero(2).unwrap();
        assert!(good_associated_range(&z, 2).unwrap().contains(&int(1)));
    }

    #[test]
    fn sampling_stays_inside() {
        let p = perversity_with_value(7, 1).unwrap();
        let g = good_associated_range(&p, 7).unwrap();
        let pts = g.sample(5, 60);
        assert_eq!(pts.len(), 5);
        assert!(pts.iter().all(|u| g.contains(u)));
    }
}
