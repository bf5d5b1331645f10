//! Reproducible check suites shared by the command-line front end and the
//! acceptance tests.
//!
//! Each of the twelve acceptance criteria is one suite. A suite produces a
//! [`Report`]: a list of [`CheckRecord`]s with stringified inputs, expected
//! and obtained values, a verdict and a short description of the statement
//! being checked. Records are emitted in a fixed order and floats are always
//! printed with 17 significant digits, so identical configurations produce
//! byte-identical reports.
//!
//! The `*_study` functions run the same statements at caller-chosen
//! parameters; the command-line front end is built on them.

mod morse;
mod oracle;
mod regions;
mod spectra;
mod studies;

pub use studies::{association_study, complex1_study, evodd_study, exclusion_study, growth_study, morse_document_study, w21_study};

use crate::error::{Error, Result};
use crate::numerics::rational::format_rational;
use crate::numerics::Rational;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

/// Default seed of the randomized suites.
pub const DEFAULT_SEED: u64 = 20_240_917;

/// Numerical tolerances of the spectral suites. The exact suites (regions,
/// Morse numbers) compare integers and rationals and have none.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    /// Absolute deviation of the unperturbed form matrices from
    /// `diag((2k+1+2ς_k)s)`.
    pub exact_spectrum: f64,
    /// Maximal entry of `G − I` for the χ-Gram matrices.
    pub orthonormality: f64,
    /// Relative deviation between the even and odd assemblies.
    pub ev_odd_relative: f64,
    /// Half-width of the accepted band `[u − w, u + w]` for growth slopes.
    pub growth_band: f64,
    /// Lower bound for `‖χ̂′_0‖` at `s = 10⁴`.
    pub overlap_floor: f64,
    /// Absolute deviation between positive spectra of random complexes.
    pub finite_oracle: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            exact_spectrum: 1e-10,
            orthonormality: 1e-10,
            ev_odd_relative: 1e-2,
            growth_band: 0.15,
            overlap_floor: 0.99,
            finite_oracle: 1e-9,
        }
    }
}

/// Parameters of a verification run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyConfig {
    pub tolerances: Tolerances,
    /// Seed of the random critical points and random finite complexes.
    pub seed: u64,
    /// Number of random rel-critical points in the ν cross-check.
    pub random_points: usize,
    /// Number of random finite complexes.
    pub oracle_complexes: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            tolerances: Tolerances::default(),
            seed: DEFAULT_SEED,
            random_points: 200,
            oracle_complexes: 50,
        }
    }
}

/// Families of suites selectable with `--only`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    /// Model-operator and complex spectra (criteria 1–6).
    Spectra,
    /// Exact region, exclusion and perversity-range equivalences (7, 8, 10).
    Regions,
    /// Morse numbers and inequalities (9–11).
    Morse,
    /// The finite Hilbert-complex oracle (12).
    Oracle,
}

impl Group {
    pub const ALL: [Group; 4] = [Group::Spectra, Group::Regions, Group::Morse, Group::Oracle];
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::Spectra => "spectra",
            Group::Regions => "regions",
            Group::Morse => "morse",
            Group::Oracle => "oracle",
        })
    }
}

impl FromStr for Group {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Group::ALL
            .into_iter()
            .find(|g| g.to_string() == s.trim())
            .ok_or_else(|| Error::invalid(format!("unknown suite group '{s}' (expected spectra, regions, morse or oracle)")))
    }
}

/// One acceptance criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Criterion {
    pub id: u8,
    pub name: &'static str,
    pub group: Group,
}

/// The twelve criteria, in order.
pub const CRITERIA: [Criterion; 12] = [
    Criterion { id: 1, name: "exact unperturbed spectra", group: Group::Spectra },
    Criterion { id: 2, name: "chi-orthonormality", group: Group::Spectra },
    Criterion { id: 3, name: "positivity of P, Q, W", group: Group::Spectra },
    Criterion { id: 4, name: "even/odd spectral matching", group: Group::Spectra },
    Criterion { id: 5, name: "growth exponent", group: Group::Spectra },
    Criterion { id: 6, name: "overlap limit", group: Group::Spectra },
    Criterion { id: 7, name: "region equivalences", group: Group::Regions },
    Criterion { id: 8, name: "exclusion lemma", group: Group::Regions },
    Criterion { id: 9, name: "nu cross-check", group: Group::Morse },
    Criterion { id: 10, name: "perversity consistency", group: Group::Regions },
    Criterion { id: 11, name: "Morse/Euler on suspensions", group: Group::Morse },
    Criterion { id: 12, name: "finite Hilbert-complex oracle", group: Group::Oracle },
];

/// Floats in reports: 17 significant digits.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

fn fmt_list(v: &[f64]) -> String {
    let items: Vec<String> = v.iter().map(|&x| fmt_float(x)).collect();
    format!("[{}]", items.join(", "))
}

fn fmt_counts(v: &[usize]) -> String {
    format!("{v:?}")
}

/// A single check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub inputs: BTreeMap<String, String>,
    pub expected: String,
    pub got: String,
    pub pass: bool,
    /// The statement being checked, in words.
    pub citation: String,
}

impl CheckRecord {
    pub fn new(id: impl Into<String>, citation: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            inputs: BTreeMap::new(),
            expected: String::new(),
            got: String::new(),
            pass: false,
            citation: citation.into(),
        }
    }

    pub fn input(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    pub fn rational(self, key: &str, value: &Rational) -> Self {
        self.input(key, format_rational(value))
    }

    pub fn float(self, key: &str, value: f64) -> Self {
        self.input(key, fmt_float(value))
    }

    pub fn verdict(mut self, expected: impl Into<String>, got: impl Into<String>, pass: bool) -> Self {
        self.expected = expected.into();
        self.got = got.into();
        self.pass = pass;
        self
    }

    /// Marks the check failed with an unexpected error.
    pub fn error(self, expected: impl Into<String>, err: &Error) -> Self {
        self.verdict(expected, format!("error: {err}"), false)
    }
}

/// Record tallies.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

/// The records of one suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub criterion: Option<u8>,
    records: Vec<CheckRecord>,
    /// Remarks that are not checks (e.g. skipped grid points).
    pub notes: Vec<String>,
    summary: Summary,
}

impl Report {
    pub fn new(suite: impl Into<String>, criterion: Option<u8>) -> Self {
        Self {
            suite: suite.into(),
            criterion,
            records: Vec::new(),
            notes: Vec::new(),
            summary: Summary::default(),
        }
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.summary.total += 1;
        if record.pass {
            self.summary.passed += 1;
        } else {
            self.summary.failed += 1;
        }
        self.records.push(record);
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn records(&self) -> &[CheckRecord] {
        &self.records
    }

    pub fn summary(&self) -> Summary {
        self.summary
    }

    /// A suite passes if it ran at least one check and none failed.
    pub fn passed(&self) -> bool {
        self.summary.total > 0 && self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.pass)
    }
}

/// Several suites with an overall tally; the JSON form of a run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub command: String,
    pub reports: Vec<Report>,
    pub summary: Summary,
}

impl RunReport {
    pub fn new(command: impl Into<String>, reports: Vec<Report>) -> Self {
        let mut summary = Summary::default();
        for r in &reports {
            summary.total += r.summary.total;
            summary.passed += r.summary.passed;
            summary.failed += r.summary.failed;
        }
        Self {
            schema: SCHEMA_VERSION,
            command: command.into(),
            reports,
            summary,
        }
    }

    pub fn passed(&self) -> bool {
        !self.reports.is_empty() && self.reports.iter().all(Report::passed)
    }
}

/// Runs criterion `id` (1–12).
pub fn run_criterion(id: u8, config: &VerifyConfig) -> Result<Report> {
    let t = &config.tolerances;
    let report = match id {
        1 => spectra::exact_spectra(t),
        2 => spectra::orthonormality(t),
        3 => spectra::positivity(),
        4 => spectra::even_odd_matching(t),
        5 => spectra::growth(t),
        6 => spectra::overlap(t),
        7 => regions::region_equivalences(),
        8 => regions::exclusion(),
        9 => morse::nu_cross_check(config.seed, config.random_points),
        10 => regions::perversity_consistency(),
        11 => morse::suspensions(),
        12 => oracle::finite_complexes(config.seed, config.oracle_complexes, t),
        _ => return Err(Error::invalid(format!("no criterion {id} (expected 1–12)"))),
    };
    Ok(report)
}

/// Runs every criterion of the selected groups, in order.
pub fn run_groups(groups: &[Group], config: &VerifyConfig) -> Result<Vec<Report>> {
    CRITERIA
        .iter()
        .filter(|c| groups.contains(&c.group))
        .map(|c| run_criterion(c.id, config))
        .collect()
}

/// Suite name of a criterion report.
fn suite_name(id: u8) -> String {
    let c = CRITERIA[usize::from(id) - 1];
    format!("criterion {id}: {}", c.name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_format_has_17_digits() {
        assert_eq!(fmt_float(0.1), "1.0000000000000001e-1");
        assert_eq!(fmt_float(-2.0), "-2.0000000000000000e0");
    }

    #[test]
    fn summary_tracks_records() {
        let mut r = Report::new("demo", None);
        assert!(!r.passed());
        r.push(CheckRecord::new("a", "first").verdict("1", "1", true));
        r.push(CheckRecord::new("b", "second").verdict("1", "2", false));
        let s = r.summary();
        assert_eq!((s.total, s.passed, s.failed), (2, 1, 1));
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
        let run = RunReport::new("verify", vec![r]);
        assert_eq!(run.summary.total, 2);
        assert_eq!(run.schema, 1);
    }

    #[test]
    fn group_names_round_trip() {
        for g in Group::ALL {
            assert_eq!(g.to_string().parse::<Group>().unwrap(), g);
        }
        assert!("everything".parse::<Group>().is_err());
        assert!(run_criterion(13, &VerifyConfig::default()).is_err());
    }

    #[test]
    fn criteria_are_numbered_in_order() {
        for (i, c) in CRITERIA.iter().enumerate() {
            assert_eq!(usize::from(c.id), i + 1);
        }
    }
}
