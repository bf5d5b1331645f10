//! Generalized Gauss–Laguerre quadrature for `t^α e^{−st}` on `(0, ∞)`.
//!
//! Nodes come from the Golub–Welsch eigenproblem of the Laguerre Jacobi
//! matrix (solved with [`sym_eigen`]) and are refined by Newton steps on the
//! orthonormal Laguerre polynomial. Weights are computed from the Christoffel
//! function `1/Σⱼ qⱼ(tᵢ)²` rather than from eigenvector components, which keeps
//! the tiny weights of the outermost nodes accurate in the relative sense.

use super::eigen::{sym_eigen, SymMatrix};
use super::moments::ln_gamma;
use crate::error::{Error, Result};

/// Largest node count supported before the orthonormal polynomial values at
/// the outermost nodes approach the double-precision overflow threshold.
pub const MAX_NODES: usize = 160;

/// A quadrature rule `∫₀^∞ g(t) t^α e^{−st} dt ≈ Σ wᵢ g(tᵢ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub alpha: f64,
    pub scale: f64,
}

impl QuadratureRule {
    /// Applies the rule to `g`.
    pub fn integrate(&self, mut g: impl FnMut(f64) -> f64) -> f64 {
        let mut acc = super::ddouble::DoubleDouble::default();
        for (t, w) in self.nodes.iter().zip(&self.weights) {
            acc.add_product(*w, g(*t));
        }
        acc.value()
    }
}

/// Orthonormal Laguerre values `q₀(t), …, q_{m}(t)` for the probability
/// measure proportional to `t^α e^{−t}`, together with `q_m'(t)`.
fn orthonormal_laguerre(alpha: f64, m: usize, t: f64) -> (Vec<f64>, f64) {
    let mut q = Vec::with_capacity(m + 1);
    let mut dq = Vec::with_capacity(m + 1);
    q.push(1.0);
    dq.push(0.0);
    // t q_j = b_{j+1} q_{j+1} + a_j q_j + b_j q_{j-1}
    for j in 0..m {
        let a = 2.0 * j as f64 + alpha + 1.0;
        let b_next = (((j + 1) as f64) * ((j + 1) as f64 + alpha)).sqrt();
        let b = ((j as f64) * (j as f64 + alpha)).sqrt();
        let (qm1, dqm1) = if j == 0 { (0.0, 0.0) } else { (q[j - 1], dq[j - 1]) };
        let next = ((t - a) * q[j] - b * qm1) / b_next;
        let dnext = (q[j] + (t - a) * dq[j] - b * dqm1) / b_next;
        q.push(next);
        dq.push(dnext);
    }
    let d = dq[m];
    (q, d)
}

/// Gauss rule with `n` nodes for the weight `t^α e^{−st}`; exact for
/// polynomials of degree `≤ 2n − 1`.
pub fn gauss_laguerre(alpha: f64, n: usize, s: f64) -> Result<QuadratureRule> {
    if !(alpha > -1.0) {
        return Err(Error::Divergent {
            exponent: alpha,
            bound: -1.0,
            context: "Gauss–Laguerre weight t^α".into(),
        });
    }
    if n == 0 {
        return Err(Error::domain("gauss_laguerre", "node count must be at least 1"));
    }
    if n > MAX_NODES {
        return Err(Error::Precision {
            detail: format!("{n} Gauss–Laguerre nodes exceed the budget of {MAX_NODES}"),
        });
    }
    if !(s > 0.0) || !s.is_finite() {
        return Err(Error::domain("gauss_laguerre", format!("scale s={s} must be positive")));
    }
    let jacobi = SymMatrix::from_upper_fn(n, |i, j| {
        if i == j {
            2.0 * i as f64 + alpha + 1.0
        } else if j == i + 1 {
            ((j as f64) * (j as f64 + alpha)).sqrt()
        } else {
            0.0
        }
    });
    let eig = sym_eigen(&jacobi)?;
    let log_mass = ln_gamma(alpha + 1.0);
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for &x0 in &eig.values {
        let mut x = x0;
        for _ in 0..3 {
            let (q, dq) = orthonormal_laguerre(alpha, n, x);
            if dq == 0.0 || !dq.is_finite() {
                break;
            }
            let step = q[n] / dq;
            if !step.is_finite() || step.abs() > 1e-6 * (1.0 + x.abs()) {
                break;
            }
            x -= step;
        }
        let (q, _) = orthonormal_laguerre(alpha, n - 1, x);
        let christoffel: f64 = q.iter().map(|v| v * v).sum();
        if !christoffel.is_finite() {
            return Err(Error::Precision {
                detail: format!("Christoffel sum overflowed at node {x}"),
            });
        }
        let w = (log_mass - christoffel.ln()).exp();
        nodes.push(x / s);
        weights.push(w / s.powf(alpha + 1.0));
    }
    for i in 1..n {
        if !(nodes[i] > nodes[i - 1]) {
            return Err(Error::Precision {
                detail: format!("Gauss–Laguerre nodes not separated at index {i}"),
            });
        }
    }
    Ok(QuadratureRule {
        nodes,
        weights,
        alpha,
        scale: s,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn total_mass() {
        let r = gauss_laguerre(0.0, 1, 1.0).unwrap();
        assert!((r.integrate(|_| 1.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn first_moment() {
        let r = gauss_laguerre(0.0, 2, 1.0).unwrap();
        assert!((r.integrate(|t| t) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn half_integer_mass() {
        let r = gauss_laguerre(0.5, 2, 1.0).unwrap();
        assert!((r.integrate(|_| 1.0) - PI.sqrt() / 2.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_non_integrable_weight() {
        assert!(gauss_laguerre(-1.0, 3, 1.0).is_err());
    }

    #[test]
    fn nodes_are_positive_and_increasing() {
        let r = gauss_laguerre(-0.7, 70, 3.0).unwrap();
        assert!(r.nodes[0] > 0.0);
        assert!(r.nodes.windows(2).all(|w| w[1] > w[0]));
        assert!(r.weights.iter().all(|&w| w > 0.0));
    }
}
