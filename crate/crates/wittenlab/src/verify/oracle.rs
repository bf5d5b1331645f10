//! The finite Hilbert-complex suite.

use super::{fmt_float, suite_name, CheckRecord, Report, Tolerances};
use crate::elliptic_complexes::finite_oracle::{finite_complex_oracle, FiniteComplex, ORACLE_ZERO_THRESHOLD};
use crate::elliptic_complexes::finite_oracle::match_positive_spectra;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Largest dimension of a degree in the random complexes.
const MAX_DIM: usize = 6;

/// Criterion 12: positive spectra of `Δ_ev` and `Δ_odd` agree with
/// multiplicity on seeded random complexes.
pub(super) fn finite_complexes(seed: u64, count: usize, t: &Tolerances) -> Report {
    let mut report = Report::new(suite_name(12), Some(12));
    let citation = "the positive spectra of Δ_ev and Δ_odd coincide with multiplicity";
    let expected = format!("same multiplicities, deviation ≤ {}", fmt_float(t.finite_oracle));
    // Per-complex records, generated from the same stream as the oracle.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..count {
        let c = FiniteComplex::random(&mut rng, MAX_DIM);
        let rec = CheckRecord::new(format!("complex/{i}"), citation)
            .input("seed", seed)
            .input("dims", format!("{:?}", c.dims));
        report.push(match c.even_odd_spectra() {
            Ok((ev, odd)) => match match_positive_spectra(&ev, &odd, ORACLE_ZERO_THRESHOLD) {
                Some(dev) => rec.verdict(expected.clone(), fmt_float(dev), dev <= t.finite_oracle),
                None => rec.verdict(expected.clone(), "different numbers of positive eigenvalues", false),
            },
            Err(e) => rec.error(expected.clone(), &e),
        });
    }
    let rec = CheckRecord::new("summary", citation).input("seed", seed).input("complexes", count);
    report.push(match finite_complex_oracle(seed, count, MAX_DIM, t.finite_oracle) {
        Ok(r) => rec.verdict(
            "no failures",
            format!("{} failures, max deviation {}", r.failures.len(), fmt_float(r.max_deviation)),
            r.passed(),
        ),
        Err(e) => rec.error("no failures", &e),
    });
    report
}
