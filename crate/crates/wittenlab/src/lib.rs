//! Numerical laboratory for Witten deformations on spaces with cone-like
//! singularities.
//!
//! The crate is organised bottom-up:
//!
//! * [`numerics`]: eigensolver, Gauss–Laguerre quadrature, exact rationals.
//! * [`hermite_basis`]: generalized Hermite polynomials and χ-bases.
//! * [`model_operators`]: the perturbed harmonic oscillators `P`, `Q`, `W` on
//!   the half line, their self-adjoint realizations and Ritz spectra.
//! * [`elliptic_complexes`]: the two model elliptic complexes and the
//!   assembly of cone spectra from link data.
//! * [`stratified_spaces`]: stratified spaces, goodness and perversities.
//! * [`morse_homology`]: Morse numbers, Witten Betti numbers and the Morse
//!   inequalities.
//! * [`verify`]: the reproducible check suites shared by the CLI and the
//!   acceptance tests.

pub mod elliptic_complexes;
pub mod error;
pub mod hermite_basis;
pub mod model_operators;
pub mod morse_homology;
pub mod numerics;
pub mod stratified_spaces;
pub mod verify;

pub use error::{Error, Result};
