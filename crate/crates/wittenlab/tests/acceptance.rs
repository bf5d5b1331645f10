//! Acceptance run: executes the twelve criteria with pinned tolerances and
//! prints one PASS/FAIL line per criterion. Exits non-zero if any fails.

use std::process::ExitCode;
use std::time::Instant;
use wittenlab::verify::{run_criterion, Tolerances, VerifyConfig, CRITERIA};

/// Pinned tolerances; the library defaults must agree with them.
const EXACT_SPECTRUM: f64 = 1e-10;
const ORTHONORMALITY: f64 = 1e-10;
const EV_ODD_RELATIVE: f64 = 1e-2;
const GROWTH_BAND: f64 = 0.15;
const OVERLAP_FLOOR: f64 = 0.99;
const FINITE_ORACLE: f64 = 1e-9;
const SEED: u64 = 20_240_917;
const RANDOM_POINTS: usize = 200;
const ORACLE_COMPLEXES: usize = 50;

/// Counterexamples printed per failing criterion.
const SHOWN_FAILURES: usize = 5;

fn main() -> ExitCode {
    let tolerances = Tolerances {
        exact_spectrum: EXACT_SPECTRUM,
        orthonormality: ORTHONORMALITY,
        ev_odd_relative: EV_ODD_RELATIVE,
        growth_band: GROWTH_BAND,
        overlap_floor: OVERLAP_FLOOR,
        finite_oracle: FINITE_ORACLE,
    };
    let config = VerifyConfig {
        tolerances,
        seed: SEED,
        random_points: RANDOM_POINTS,
        oracle_complexes: ORACLE_COMPLEXES,
    };
    let mut ok = true;
    if VerifyConfig::default() != config {
        println!("FAIL defaults: library tolerances differ from the pinned acceptance values");
        ok = false;
    }
    for c in CRITERIA {
        let start = Instant::now();
        match run_criterion(c.id, &config) {
            Ok(report) => {
                let s = report.summary();
                let verdict = if report.passed() { "PASS" } else { "FAIL" };
                println!(
                    "{verdict} criterion {}: {} ({}/{} checks, {:.1} s)",
                    c.id,
                    c.name,
                    s.passed,
                    s.total,
                    start.elapsed().as_secs_f64()
                );
                for note in &report.notes {
                    println!("    note: {note}");
                }
                for f in report.failures().take(SHOWN_FAILURES) {
                    println!("    {}: expected {}, got {}", f.id, f.expected, f.got);
                }
                ok &= report.passed();
            }
            Err(e) => {
                println!("FAIL criterion {}: {} ({e})", c.id, c.name);
                ok = false;
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
