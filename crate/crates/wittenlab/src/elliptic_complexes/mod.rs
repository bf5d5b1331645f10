//! The two model elliptic complexes on the half line and the assembly of
//! Witten spectra on a cone from link data.
//!
//! * [`complex1`]: the length-one complex `d = d/dρ − κρ^{−1} ± sρ`, its
//!   Laplacian components `𝒜ᵢ`, `ℬᵢ`, their closed-form spectra, sign
//!   table and max/min realization table.
//! * [`complex2`]: the length-two complex with `d_{0,1} = μρ^{−u}`, its
//!   components `𝒫ᵢ`, `𝒬ⱼ`, `𝒲ᵢⱼ`, the realization and spectrum tables,
//!   Ritz spectra and the even/odd spectral matching.
//! * [`cone`]: the exponent `κ = (n−2r−1)u/2`, the exclusion lemma, link
//!   spectral data and the splitting of the cone Witten complex.
//! * [`finite_oracle`]: random finite-dimensional Hilbert complexes, used as
//!   an independent check of the even/odd spectral matching principle.
//!
//! Every table lookup works on exact rationals; only spectra are floating
//! point. Grey cells of the tables (realizations the theory leaves open) are
//! represented by [`OperatorTag::Unknown`] and [`SignCell::Unknown`] and are
//! never guessed.

pub mod complex1;
pub mod complex2;
pub mod cone;
pub mod finite_oracle;

pub use complex1::{
    complex1_assignment, complex1_eigenvalue, complex1_operator_table, complex1_sign_cell, complex1_spectrum,
    Complex1OperatorTable, Complex1Spec,
};
pub use complex2::{
    complex2_assignment, complex2_first_term, complex2_operator, complex2_parameters, complex2_sign_cell,
    complex2_spectra, complex2_spectrum_source, ev_odd_match, Complex2Operator, Complex2Row, Complex2Spec,
    Complex2Spectra, EvOddReport, SpectrumSource,
};
pub use cone::{
    cone_harmonic_dims, cone_witten_spectrum, exclusion_lemma_check, kappa, ConeSpectrum, ExclusionReport,
    HarmonicDims, LinkPair, LinkSpectralData,
};
pub use finite_oracle::{finite_complex_oracle, match_positive_spectra, FiniteComplex, OracleReport};

use serde::{Deserialize, Serialize};
use std::fmt;

/// Zero-mode detection threshold in units of `s`.
pub const ZERO_TOLERANCE: f64 = 1e-8;

/// The sign of the Morse function `f = ±ρ²/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-", alias = "−")]
    Minus,
}

impl Sign {
    /// `+1` for `Plus`, `−1` for `Minus`: the value of `±`.
    pub fn pm(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// Both signs, `+` first.
    pub const ALL: [Sign; 2] = [Sign::Plus, Sign::Minus];
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl std::str::FromStr for Sign {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        match s.trim() {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "−" | "minus" => Ok(Sign::Minus),
            other => Err(crate::Error::invalid(format!("`{other}` is not a sign (+ or -)"))),
        }
    }
}

/// Maximum or minimum ideal boundary condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Choice {
    Max,
    Min,
}

impl Choice {
    /// Both choices, `max` first.
    pub const ALL: [Choice; 2] = [Choice::Max, Choice::Min];
}

impl fmt::Display for Choice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Choice::Max => "max",
            Choice::Min => "min",
        })
    }
}

impl std::str::FromStr for Choice {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        match s.trim() {
            "max" => Ok(Choice::Max),
            "min" => Ok(Choice::Min),
            other => Err(crate::Error::invalid(format!("`{other}` is not a boundary choice (max or min)"))),
        }
    }
}

/// The self-adjoint operator realizing one Laplacian component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OperatorTag {
    A1,
    A2,
    B1,
    B2,
    P1,
    P2,
    Q1,
    Q2,
    W11,
    W22,
    W21,
    /// The row `σ = κ`, `τ = −1−κ−u`; it never defines an operator.
    W12,
    /// A grey table cell: the realization is not described.
    Unknown,
}

impl fmt::Display for OperatorTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Sign of one eigenvalue as recorded in a sign table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SignValue {
    Negative,
    Zero,
    Positive,
    /// Printed as `?`.
    Unknown,
}

/// One cell of a sign table: the recorded sign and whether the cell is
/// printed in grey (disregarded later in the theory).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignCell {
    pub value: SignValue,
    pub grey: bool,
}

impl SignCell {
    pub(crate) fn plain(value: SignValue) -> Self {
        Self { value, grey: false }
    }

    pub(crate) fn grey(value: SignValue) -> Self {
        Self { value, grey: true }
    }

    /// Whether a computed eigenvalue `lambda` (at scale `s`) is consistent
    /// with the cell. Grey and unknown cells accept everything.
    pub fn accepts(&self, lambda: f64, s: f64) -> bool {
        if self.grey {
            return true;
        }
        let tol = ZERO_TOLERANCE * s;
        match self.value {
            SignValue::Negative => lambda < -tol,
            SignValue::Zero => lambda.abs() <= tol,
            SignValue::Positive => lambda > tol,
            SignValue::Unknown => true,
        }
    }
}
