//! Morse-number suites: the ν cross-check against cone harmonic spaces and
//! the Morse inequalities on suspensions.

use super::{fmt_counts, suite_name, CheckRecord, Report};
use crate::elliptic_complexes::{Choice, Sign};
use crate::morse_homology::{
    ih_betti_oracle, morse_inequalities, nu_local, nu_perversity_total, nu_total, nu_via_harmonics, suspension_morse_data,
    CriticalFactor, PerversityConvention, RelCriticalPoint,
};
use crate::numerics::rational::{format_rational, int, rationals_between};
use crate::numerics::Rational;
use crate::stratified_spaces::{complement, good_associated_range, satisfies_goodness, Perversity, SpaceNode};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A random rel-critical point with at most three cone factors over a
/// point, `S¹`, `S²` or `T²`, each with a good exponent.
pub fn random_critical_point(rng: &mut impl Rng) -> RelCriticalPoint {
    let links = [SpaceNode::point(), SpaceNode::sphere(1), SpaceNode::sphere(2), SpaceNode::torus(2)];
    let mut exponents: Vec<Rational> = rationals_between(&int(0), &int(1), 12);
    exponents.push(int(1));
    let count = rng.gen_range(0..=3usize);
    let factors = (0..count)
        .map(|_| {
            let link = links.choose(rng).expect("non-empty").clone();
            let k = link.dim() + 1;
            let good: Vec<&Rational> = exponents.iter().filter(|u| satisfies_goodness(k, u)).collect();
            let u = (*good.choose(rng).expect("u = 1 is always good")).clone();
            let side = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
            CriticalFactor::new(link, u, side)
        })
        .collect();
    RelCriticalPoint {
        m_plus: rng.gen_range(0..=2),
        m_minus: rng.gen_range(0..=2),
        factors,
    }
}

fn describe(point: &RelCriticalPoint) -> String {
    let factors: Vec<String> = point
        .factors
        .iter()
        .map(|f| {
            let link = match f.link.dim() {
                0 => "pt".to_string(),
                d => match f.link.manifold_betti() {
                    Ok(b) if b.iter().sum::<usize>() == 2 => format!("S^{d}"),
                    _ => format!("T^{d}"),
                },
            };
            format!("c({link}, u={}, {})", format_rational(&f.u), f.side)
        })
        .collect();
    format!("m+={} m-={} [{}]", point.m_plus, point.m_minus, factors.join(", "))
}

/// Criterion 9: `ν_{max/min}` from the threshold formula equals the Künneth
/// assembly of the cone harmonic dimensions.
pub(super) fn nu_cross_check(seed: u64, count: usize) -> Report {
    let mut report = Report::new(suite_name(9), Some(9));
    let citation = "ν^r_{x,max/min} counts the harmonic forms of the local model in degree r";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..count {
        let point = random_critical_point(&mut rng);
        let mut got = Vec::new();
        let mut pass = true;
        for choice in Choice::ALL {
            match (nu_local(&point, choice), nu_via_harmonics(&point, choice)) {
                (Ok(a), Ok(b)) => {
                    pass &= a == b;
                    got.push(format!("{choice}: {} vs {}", fmt_counts(&a), fmt_counts(&b)));
                }
                (Err(e), _) | (_, Err(e)) => {
                    pass = false;
                    got.push(format!("{choice}: error: {e}"));
                }
            }
        }
        report.push(
            CheckRecord::new(format!("nu/{i}"), citation)
                .input("seed", seed)
                .input("point", describe(&point))
                .verdict("threshold counts = harmonic dimensions", got.join("; "), pass),
        );
    }
    report
}

/// Critical data and perversities of the suspension checks: the two cone
/// points of `ΣL` with a good exponent associated to `p̄`.
fn suspension_points(link: &SpaceNode, p: &Perversity) -> crate::Result<(Rational, Vec<RelCriticalPoint>)> {
    let n = link.dim() + 1;
    let u = good_associated_range(p, n)?.lower;
    let points = suspension_morse_data(link, &u);
    Ok((u, points))
}

/// Criterion 11: Morse inequalities and Euler characteristics on `ΣS²`,
/// `ΣT²` and `ΣT³` for every `p̄ ≤ m̄`, and duality of the oracle.
pub(super) fn suspensions() -> Report {
    let mut report = Report::new(suite_name(11), Some(11));
    let c_morse = "Morse inequalities and χ^p̄ = Σ(−1)^r ν^p̄_r for intersection homology";
    let c_max = "ν^p̄ equals ν_max for a good exponent associated to p̄";
    let c_dual = "β^q̄_r = β^p̄_{n−r} for complementary perversities";
    for (name, link) in [("ΣS²", SpaceNode::sphere(2)), ("ΣT²", SpaceNode::torus(2)), ("ΣT³", SpaceNode::torus(3))] {
        let n = link.dim() + 1;
        let space = match SpaceNode::suspension(link.clone(), int(1)) {
            Ok(s) => s,
            Err(e) => {
                report.push(CheckRecord::new(format!("{name}/space"), c_morse).error("space", &e));
                continue;
            }
        };
        let m = match Perversity::lower_middle(n) {
            Ok(m) => m,
            Err(e) => {
                report.push(CheckRecord::new(format!("{name}/perversities"), c_morse).error("perversities", &e));
                continue;
            }
        };
        for p in Perversity::all(n).into_iter().filter(|p| p.le(&m)) {
            let base = |id: &str, citation: &str| {
                CheckRecord::new(format!("{name}/p̄={:?}/{id}", p.values()), citation)
                    .input("space", name)
                    .input("perversity", format!("{:?}", p.values()))
            };
            let data = suspension_points(&link, &p).and_then(|(u, points)| {
                let nu = nu_perversity_total(&points, &p, PerversityConvention::PbarMax)?;
                let betti = ih_betti_oracle(&space, &p)?;
                let max = nu_total(&points, Choice::Max)?;
                Ok((u, nu, betti, max))
            });
            let (u, nu, betti, max) = match data {
                Ok(d) => d,
                Err(e) => {
                    report.push(base("data", c_morse).error("ν^p̄ and β^p̄", &e));
                    continue;
                }
            };
            let rec = base("inequalities", c_morse)
                .rational("u", &u)
                .input("betti", fmt_counts(&betti.values))
                .input("nu", fmt_counts(&nu));
            report.push(match morse_inequalities(&betti.values, &nu) {
                Ok(r) => {
                    let partial: Vec<String> = r.partial.iter().map(|q| format!("{}≤{}", q.betti_sum, q.nu_sum)).collect();
                    let got = format!("partial [{}], χ {} vs {}", partial.join(", "), r.euler_betti, r.euler_nu);
                    rec.verdict("all partial inequalities hold and χ^p̄ = Σ(−1)^r ν^p̄_r", got, r.all_hold())
                }
                Err(e) => rec.error("inequalities", &e),
            });
            report.push(base("nu_max", c_max).rational("u", &u).verdict(
                fmt_counts(&max),
                fmt_counts(&nu),
                max == nu,
            ));
            let rec = base("duality", c_dual);
            report.push(match complement(&p).and_then(|q| Ok((q.clone(), ih_betti_oracle(&space, &q)?))) {
                Ok((q, bq)) => {
                    let reversed: Vec<usize> = betti.values.iter().rev().copied().collect();
                    rec.input("complement", format!("{:?}", q.values()))
                        .verdict(fmt_counts(&reversed), fmt_counts(&bq.values), bq.values == reversed)
                }
                Err(e) => rec.error("complementary Betti numbers", &e),
            });
        }
    }
    report
}
