//! Intersection-homology Betti numbers from the cone formula.
//!
//! This is an external-mathematics oracle, independent of the rest of the
//! crate: it only reads the shape of a [`SpaceNode`] and a perversity. For
//! an `n`-dimensional open cone on a compact `(n−1)`-dimensional link,
//!
//! `I^p̄H_i(c(L)) = I^p̄H_i(L)` if `i < n − 1 − p_n`, and `0` otherwise.
//!
//! A Mayer–Vietoris argument over the two cones of a suspension, whose
//! intersection is `L × ℝ`, then gives, with `c = n − 1 − p_n`,
//!
//! `I^p̄H_i(ΣL) = I^p̄H_i(L)` for `i < c`, `0` for `i = c`, and
//! `I^p̄H_{i−1}(L)` for `i > c`.
//!
//! Products are accepted when at most one factor is singular; the Künneth
//! formula with a manifold factor holds for every perversity. Codimension-one
//! strata (cones and suspensions over 0-dimensional links) are refused.

use super::{BettiFlavor, BettiVector};
use crate::error::{Error, Result};
use crate::stratified_spaces::{convolve, Perversity, SpaceNode};

fn vertex_perversity(p: &Perversity, n: usize) -> Result<i64> {
    if n < 2 {
        return Err(Error::invalid(
            "not a pseudomanifold: a cone over a 0-dimensional link has a codimension-one stratum",
        ));
    }
    p.get(n)
        .ok_or_else(|| Error::domain("perversity", format!("p_{n} is not defined (max k = {})", p.max_k())))
}

fn ih(space: &SpaceNode, p: &Perversity) -> Result<Vec<usize>> {
    match space {
        SpaceNode::Manifold { betti, .. } => Ok(betti.clone()),
        SpaceNode::Euclidean { dim } => {
            let mut v = vec![0; dim + 1];
            v[0] = 1;
            Ok(v)
        }
        SpaceNode::Cone { link, .. } => {
            let n = link.dim() + 1;
            let c = n as i64 - 1 - vertex_perversity(p, n)?;
            let lower = ih(link, p)?;
            let mut out = vec![0; n + 1];
            for (i, &b) in lower.iter().enumerate() {
                if (i as i64) < c {
                    out[i] = b;
                }
            }
            Ok(out)
        }
        SpaceNode::Suspension { link, .. } => {
            let n = link.dim() + 1;
            let c = n as i64 - 1 - vertex_perversity(p, n)?;
            let lower = ih(link, p)?;
            let mut out = vec![0; n + 1];
            for i in 0..=n {
                let ii = i as i64;
                out[i] = if ii < c {
                    lower[i]
                } else if ii == c {
                    0
                } else {
                    lower[i - 1]
                };
            }
            Ok(out)
        }
        SpaceNode::Product { factors } => {
            let singular = factors.iter().filter(|f| !f.is_smooth()).count();
            if singular > 1 {
                return Err(Error::invalid(
                    "intersection homology of a product with several singular factors is not computed",
                ));
            }
            let mut acc = vec![1usize];
            for f in factors {
                acc = convolve(&acc, &ih(f, p)?);
            }
            Ok(acc)
        }
    }
}

/// `β^p̄_r`, `r = 0, …, dim`, of a space built from manifolds by cones,
/// suspensions and products.
pub fn ih_betti_oracle(space: &SpaceNode, p: &Perversity) -> Result<BettiVector> {
    let space = space.clone().validated()?;
    Ok(BettiVector {
        values: ih(&space, p)?,
        flavor: BettiFlavor::Perversity { p: p.clone() },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rational::int;
    use crate::stratified_spaces::complement;

    fn sigma(link: SpaceNode) -> SpaceNode {
        SpaceNode::suspension(link, int(1)).unwrap()
    }

    #[test]
    fn manifold_is_ordinary() {
        let t = SpaceNode::torus(2);
        for p in Perversity::all(2) {
            assert_eq!(ih_betti_oracle(&t, &p).unwrap().values, vec![1, 2, 1]);
        }
    }

    #[test]
    fn suspension_of_sphere() {
        let p = Perversity::zero(3).unwrap();
        assert_eq!(ih_betti_oracle(&sigma(SpaceNode::sphere(2)), &p).unwrap().values, vec![1, 0, 0, 1]);
    }

    #[test]
    fn suspension_of_torus_duality() {
        let x = sigma(SpaceNode::torus(2));
        for p in Perversity::all(3) {
            let q = complement(&p).unwrap();
            let bp = ih_betti_oracle(&x, &p).unwrap().values;
            let bq = ih_betti_oracle(&x, &q).unwrap().values;
            for r in 0..=3 {
                assert_eq!(bq[r], bp[3 - r]);
            }
        }
        // ST² with 0̄: (1, 2, 0, 1); with t̄: (1, 0, 2, 1).
        assert_eq!(ih_betti_oracle(&x, &Perversity::zero(3).unwrap()).unwrap().values, vec![1, 2, 0, 1]);
        assert_eq!(ih_betti_oracle(&x, &Perversity::top(3).unwrap()).unwrap().values, vec![1, 0, 2, 1]);
    }

    #[test]
    fn refuses_codimension_one() {
        let p = Perversity::zero(3).unwrap();
        assert!(ih_betti_oracle(&sigma(SpaceNode::sphere(0)), &p).is_err());
        let two = SpaceNode::product(vec![sigma(SpaceNode::sphere(2)), sigma(SpaceNode::sphere(2))]).unwrap();
        assert!(ih_betti_oracle(&two, &Perversity::zero(6).unwrap()).is_err());
    }
}
