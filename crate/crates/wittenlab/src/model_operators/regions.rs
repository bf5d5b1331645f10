//! Exact region predicates `𝔍₁, 𝔍₂, 𝔎₁, 𝔎′₁, 𝔎₂, 𝔎′₂` and the hypotheses
//! under which the coupled operator `𝒲` exists.
//!
//! Every set is defined by a list of guarded implications; a point belongs to
//! the set iff every implication whose guard holds has a true conclusion.
//! Conditions written with commas (`τ < ½, σ`) are conjunctions (`τ < ½` and
//! `τ < σ`). All comparisons are exact rational comparisons.

use crate::numerics::rational::{in_neg_naturals, int, rat};
use crate::numerics::Rational;
use serde::Serialize;

fn implies(guard: bool, conclusion: impl FnOnce() -> bool) -> bool {
    !guard || conclusion()
}

/// Membership in `𝔍₁ ⊂ ℝ²`.
pub fn in_j1(sigma: &Rational, tau: &Rational) -> bool {
    let (s, t) = (sigma, tau);
    let half = rat(1, 2);
    let upper = s / int(2) + rat(1, 4);
    implies(&half <= t && t < s, || &(s - int(1)) < t && t < &upper)
        && implies(&half <= t && s <= t, || t < &upper && t < &(s + int(1)))
        && implies(t < &half && t < s, || &(s / int(3)) < t && &(s - int(1)) < t && t < &upper)
        && implies(s <= t && t < &half, || &(-s) < t && t < &upper && t < &(s + int(1)))
}

/// Membership in `𝔍₂ ⊂ ℝ²`.
pub fn in_j2(sigma: &Rational, tau: &Rational) -> bool {
    let (s, t) = (sigma, tau);
    let half = rat(1, 2);
    let zero = int(0);
    let s_half = s - &half;
    let upper = s / int(2) + rat(1, 4);
    let lower_alt = s / int(2) - rat(1, 4);
    let sm1 = s - int(1);
    implies(&half <= t && t < &s_half, || &sm1 < t && t < &upper)
        && implies(&half <= t && &s_half <= t, || t < &upper && t < s)
        && implies(&zero < t && t < &half && t < &s_half, || {
            (&(-s / int(3)) < t && &sm1 < t && t < &upper) || (&sm1 < t && t < &lower_alt)
        })
        && implies(&zero < t && t < &half && &s_half <= t, || {
            (&(int(1) - s) < t && t < &upper && t < s) || (t < &lower_alt && t < s)
        })
        && implies(t == &zero && t < &s_half, || &half < s && s < &int(1))
        && implies(&s_half <= t && t == &zero, || &half < s)
        && implies(t < &zero && t < &s_half, || {
            &(rat(1, 4) - s / int(2)) < t && &((s - int(1)) / int(3)) < t && &sm1 < t
        })
        && implies(&s_half <= t && t < &zero, || &(rat(1, 4) - s / int(2)) < t && &(-s) < t && t < s)
}

/// Membership in `𝔎₁ ⊂ ℝ³`.
pub fn in_k1(sigma: &Rational, tau: &Rational, theta: &Rational) -> bool {
    let (s, t, th) = (sigma, tau, theta);
    let sm1 = s - int(1);
    let tp1 = t + int(1);
    let a = s / int(2) - rat(3, 4);
    let sum4 = (s + t) / int(4);
    let b = (s - t) / int(2) - int(1);
    let c = (t - s) / int(2) + int(1);
    let zero = int(0);
    implies(th <= &sm1 && th < &tp1, || th > &a && th > &sum4)
        && implies(&tp1 <= th && th <= &sm1, || th > &a && th > &b)
        && implies(&sm1 < th && th < &tp1, || th > &a && th > &c && th > &sum4)
        && implies(&sm1 < th && &tp1 <= th, || th > &a && th > &b && (s + t) > zero)
}

/// Membership in `𝔎′₁ ⊂ ℝ³`.
pub fn in_k1p(sigma: &Rational, tau: &Rational, theta: &Rational) -> bool {
    let (s, t, th) = (sigma, tau, theta);
    let a = t / int(2) - rat(1, 4);
    let sum4 = (s + t) / int(4);
    let ts = (t - s) / int(2);
    let st = (s - t) / int(2);
    let zero = int(0);
    implies(th < s && th <= t, || th > &a && th > &sum4)
        && implies(s <= th && th <= t, || th > &a && th > &ts)
        && implies(t < th && th < s, || th > &a && th > &st && th > &sum4)
        && implies(s <= th && t < th, || th > &a && th > &ts && (s + t) > zero)
}

/// Membership in `𝔎₂ ⊂ ℝ³`.
pub fn in_k2(sigma: &Rational, tau: &Rational, theta: &Rational) -> bool {
    let (s, t, th) = (sigma, tau, theta);
    let half = rat(1, 2);
    let sm1 = s - int(1);
    let s_half = s - &half;
    let t_half = t + &half;
    let a = s / int(2) - rat(3, 4);
    let a_alt = s / int(2) - rat(1, 4);
    let sum4 = (s + t) / int(4);
    let b = (s - t - int(1)) / int(2);
    let c = (t - s) / int(2) + int(1);
    let d = (t - s + int(1)) / int(2);
    let (zero, one) = (int(0), int(1));
    implies(th <= &sm1 && th < &t_half, || th > &a && th > &sum4)
        && implies(&t_half <= th && th <= &sm1, || th > &a && th > &b)
        && implies(&sm1 < th && th < &s_half && th < &t_half, || {
            (th > &a && th > &c && th > &sum4) || (th > &a_alt && th > &sum4)
        })
        && implies(&sm1 < th && th < &s_half && &t_half <= th, || {
            (th > &a && th > &b && (s + t) > one) || (th > &a_alt && th > &b)
        })
        && implies(&s_half == th && th < &t_half, || s > &half && s > &((t + int(2)) / int(3)))
        && implies(&t_half <= th && th == &s_half, || s > &half && s > &(-t))
        && implies(&s_half < th && th < &t_half, || th > &a_alt && th > &d && th > &sum4)
        && implies(&s_half < th && &t_half <= th, || th > &a_alt && th > &b && (s + t) > zero)
}

/// Membership in `𝔎′₂ ⊂ ℝ³`.
pub fn in_k2p(sigma: &Rational, tau: &Rational, theta: &Rational) -> bool {
    let (s, t, th) = (sigma, tau, theta);
    let half = rat(1, 2);
    let s_half = s - &half;
    let t_half = t + &half;
    let a = t / int(2) - rat(1, 4);
    let a_alt = t / int(2) + rat(1, 4);
    let sum4 = (s + t) / int(4);
    let st = (s - t) / int(2);
    let d = (t - s + int(1)) / int(2);
    let b = (s - t - int(1)) / int(2);
    let (zero, one) = (int(0), int(1));
    implies(th <= &s_half && th < t, || th > &a && th > &sum4)
        && implies(&s_half <= th && th <= t, || th > &a && th > &d)
        && implies(t < th && th < &s_half && th < &t_half, || {
            (th > &a && th > &st && th > &sum4) || (th > &a_alt && th > &sum4)
        })
        && implies(&s_half <= th && t < th && th < &t_half, || {
            (th > &a && th > &d && (s + t) > one) || (th > &a_alt && th > &d)
        })
        && implies(&t_half == th && th < &s_half, || t > &(-&half) && t > &((s - int(2)) / int(3)))
        && implies(&s_half <= th && th == &t_half, || t > &(-&half) && t > &(-s))
        && implies(&t_half < th && th < &s_half, || th > &a_alt && th > &b && th > &sum4)
        && implies(&s_half <= th && &t_half < th, || th > &a_alt && th > &d && (s + t) > zero)
}

/// The clauses of the existence hypotheses for `𝒲`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WwClause {
    /// `σ > u − 1/2`, `τ > u − 3/2`, `θ > −1/2`.
    Base,
    /// `σ = θ ≠ τ`: `σ − 1 < τ < σ + 1, 2σ + 1/2`.
    A,
    /// `σ ≠ θ = τ`: `(σ, τ) ∈ 𝔍₁ ∪ 𝔍₂`.
    B,
    /// `σ ≠ θ = τ + 1`: `τ < 3σ/2 − 9/4, σ − 5/3`.
    C,
    /// `σ ≠ θ ≠ τ`: `(σ, τ, θ) ∈ (𝔎₁ ∪ 𝔎₂) ∩ (𝔎′₁ ∪ 𝔎′₂)`.
    D,
}

/// Outcome of [`ww_hypotheses`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "status", content = "clause", rename_all = "snake_case")]
pub enum WwOutcome {
    /// The base conditions hold and the one applicable clause is satisfied.
    Satisfied(WwClause),
    /// A base condition or the applicable clause fails.
    Violated(WwClause),
    /// The base conditions hold and no clause applies (the hypotheses are
    /// vacuous, so `𝒲` exists).
    NotApplicable,
}

impl WwOutcome {
    /// Whether the existence hypotheses hold.
    pub fn holds(&self) -> bool {
        !matches!(self, WwOutcome::Violated(_))
    }
}

/// Evaluates the hypotheses for `𝒲` at `(σ, τ, θ)` and exponent `u`.
///
/// The four case patterns are mutually exclusive: patterns (c) and (d) would
/// both see `θ ≠ τ` when `θ = τ + 1`, but then `τ − θ = −1 ∈ −ℕ` switches
/// (d) off.
pub fn ww_hypotheses(sigma: &Rational, tau: &Rational, theta: &Rational, u: &Rational) -> WwOutcome {
    let (s, t, th) = (sigma, tau, theta);
    if !(s > &(u - rat(1, 2)) && t > &(u - rat(3, 2)) && th > &rat(-1, 2)) {
        return WwOutcome::Violated(WwClause::Base);
    }
    let verdict = |clause, ok: bool| {
        if ok {
            WwOutcome::Satisfied(clause)
        } else {
            WwOutcome::Violated(clause)
        }
    };
    if s == th && th != t && !in_neg_naturals(&(t - s)) {
        let ok = &(s - int(1)) < t && t < &(s + int(1)) && t < &(s * int(2) + rat(1, 2));
        return verdict(WwClause::A, ok);
    }
    if s != th && th == t && !in_neg_naturals(&(s - t)) {
        return verdict(WwClause::B, in_j1(s, t) || in_j2(s, t));
    }
    if s != th && th == &(t + int(1)) && !in_neg_naturals(&(s - t - int(1))) {
        let ok = t < &(s * rat(3, 2) - rat(9, 4)) && t < &(s - rat(5, 3));
        return verdict(WwClause::C, ok);
    }
    if s != th && th != t && !in_neg_naturals(&(s - th)) && !in_neg_naturals(&(t - th)) {
        let ok = (in_k1(s, t, th) || in_k2(s, t, th)) && (in_k1p(s, t, th) || in_k2p(s, t, th));
        return verdict(WwClause::D, ok);
    }
    WwOutcome::NotApplicable
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j1_examples() {
        let u = rat(2, 5);
        assert!(in_j1(&(rat(1, 2) + &u), &rat(1, 2)));
        assert!(!in_j1(&int(0), &int(5)));
    }

    #[test]
    fn w21_at_kappa_zero() {
        let (u, k) = (rat(1, 2), int(0));
        let (s, t, th) = (int(1) - &k, &k + &u, rat(1, 2));
        assert!((in_k1(&s, &t, &th) || in_k2(&s, &t, &th)) && (in_k1p(&s, &t, &th) || in_k2p(&s, &t, &th)));
        // Here κ = 1/2 − u, so θ = τ and clause (b) is the applicable one.
        assert_eq!(ww_hypotheses(&s, &t, &th, &u), WwOutcome::Satisfied(WwClause::B));
    }

    #[test]
    fn w12_is_impossible() {
        let (u, k) = (rat(1, 3), int(0));
        let out = ww_hypotheses(&k, &(int(-1) - &k - &u), &(rat(-1, 2) - &u), &u);
        assert_eq!(out, WwOutcome::Violated(WwClause::Base));
    }

    #[test]
    fn w11_uses_clause_a() {
        let u = rat(1, 2);
        let k = rat(1, 4);
        assert_eq!(ww_hypotheses(&k, &(&k + &u), &k, &u), WwOutcome::Satisfied(WwClause::A));
    }

    #[test]
    fn w22_uses_clause_c() {
        let u = rat(1, 5);
        let k = int(-1);
        let out = ww_hypotheses(&(int(1) - &k), &(int(-1) - &k - &u), &(-&k - &u), &u);
        assert_eq!(out, WwOutcome::Satisfied(WwClause::C));
    }
}
