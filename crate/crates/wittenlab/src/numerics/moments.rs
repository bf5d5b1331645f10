//! Closed-form half-line Gaussian moments.

use crate::error::{Error, Result};

/// Natural logarithm of the Gamma function for positive arguments.
pub fn ln_gamma(x: f64) -> f64 {
    libm::lgamma(x)
}

/// `∫₀^∞ ρ^β e^{−sρ²} dρ = Γ((β+1)/2) / (2 s^{(β+1)/2})`.
///
/// Evaluated through `ln Γ` so that large `β` does not overflow prematurely.
pub fn half_line_moment(beta: f64, s: f64) -> Result<f64> {
    if !(beta > -1.0) {
        return Err(Error::Divergent {
            exponent: beta,
            bound: -1.0,
            context: "half-line moment ∫ρ^β e^{-sρ²}dρ".into(),
        });
    }
    if !(s > 0.0) {
        return Err(Error::domain("half-line moment", format!("scale s={s} must be positive")));
    }
    let h = 0.5 * (beta + 1.0);
    Ok((ln_gamma(h) - h * s.ln()).exp() / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn gaussian_integrals() {
        assert!((half_line_moment(0.0, 1.0).unwrap() - PI.sqrt() / 2.0).abs() < 1e-15);
        assert!((half_line_moment(1.0, 1.0).unwrap() - 0.5).abs() < 1e-15);
        assert!((half_line_moment(2.0, 1.0).unwrap() - PI.sqrt() / 4.0).abs() < 1e-15);
    }

    #[test]
    fn divergent_exponent_is_rejected() {
        assert!(matches!(half_line_moment(-1.0, 1.0), Err(Error::Divergent { .. })));
        assert!(half_line_moment(-0.999, 1.0).is_ok());
    }
}
