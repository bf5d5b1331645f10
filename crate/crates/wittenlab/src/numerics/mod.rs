//! Deterministic numerical kernels.
//!
//! * [`sym_eigen`]: cyclic Jacobi eigensolver for dense symmetric matrices.
//! * [`gauss_laguerre`]: generalized Gauss–Laguerre rules via Golub–Welsch.
//! * [`half_line_moment`]: closed-form `∫₀^∞ ρ^β e^{−sρ²} dρ`.
//! * [`stieltjes_recurrence`]: recurrence coefficients from raw moments,
//!   generic over `f64` and exact rationals.
//! * [`rational`]: exact rational helpers used by every region predicate.
//!
//! # Precision
//!
//! Gram matrices are accumulated with double-double compensated sums
//! ([`ddouble`]); quadrature weights are obtained from the Christoffel
//! function so that exponentially small weights keep full relative accuracy.
//! The moment recurrence, which is catastrophically ill-conditioned in
//! floating point, is run in exact rational arithmetic whenever it is used as
//! an oracle.

pub mod ddouble;
pub mod eigen;
pub mod moments;
pub mod quadrature;
pub mod rational;
pub mod stieltjes;

pub use eigen::{sym_eigen, sym_eigenvalues, SymEigen, SymMatrix};
pub use moments::{half_line_moment, ln_gamma};
pub use quadrature::{gauss_laguerre, QuadratureRule};
pub use rational::Rational;
pub use stieltjes::{stieltjes_recurrence, MomentScalar};
