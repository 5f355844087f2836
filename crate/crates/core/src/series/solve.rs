//! Root finding, root comparison and the largest-root expansion.

use serde::{Deserialize, Serialize};

use super::CharacteristicEquation;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Target width of a bisection bracket, relative to the root.
const BISECTION_WIDTH: f64 = 1e-13;

/// Points at which monotonicity is checked across a bracket.
const MONOTONE_SAMPLES: usize = 64;

/// Grid density for the gap check in [`compare_roots`].
const COMPARE_SAMPLES: usize = 4096;

/// Root of the truncated equation and an interval that holds the root of
/// the full equation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootEnclosure {
    /// Root of `λ² = truncated R(λ)`.
    pub root: f64,
    pub lo: f64,
    pub hi: f64,
    pub bracket: (f64, f64),
    /// `λ² − R` increases across the bracket, tail slope included.
    pub monotone: bool,
    /// Tail bound at the truncated root.
    pub tail: f64,
}

impl RootEnclosure {
    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    // invariant: f(lo) <= 0 < f(hi)
    for _ in 0..2000 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi || hi - lo <= BISECTION_WIDTH * hi.abs().max(1.0) {
            break;
        }
        if f(mid) <= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn monotone_on<E: CharacteristicEquation + ?Sized>(e: &E, lo: f64, hi: f64) -> bool {
    (0..=MONOTONE_SAMPLES).all(|k| {
        let l = lo + (hi - lo) * k as f64 / MONOTONE_SAMPLES as f64;
        2.0 * l - e.rhs_derivative(l) - e.tail_derivative(l) > 0.0
    })
}

/// Solves `λ² = R(λ)` on the bracket by bisection, then widens the root by
/// the tail: the true root lies where `λ² − R_m − τ ≤ 0 ≤ λ² − R_m + τ`.
pub fn solve_char_equation<E: CharacteristicEquation + ?Sized>(e: &E) -> Result<RootEnclosure> {
    if e.leading() <= 0.0 || !e.leading().is_finite() {
        return Err(Error::NonPositiveLeading);
    }
    let (blo, bhi) = e.bracket();
    let h = |l: f64| l * l - e.rhs(l);
    if !(h(blo) <= 0.0 && h(bhi) > 0.0) {
        return Err(Error::NoSignChange { lo: blo, hi: bhi });
    }
    let root = bisect(h, blo, bhi);
    let sigma = e.sigma();
    let tail = e.tail(root);

    let hi = if tail == 0.0 {
        root
    } else if !tail.is_finite() {
        f64::INFINITY
    } else {
        let upper = |l: f64| h(l) - e.tail(l);
        let mut step = 1e-12 * root.max(1.0);
        let mut top = root + step;
        while upper(top) <= 0.0 && top.is_finite() {
            step *= 2.0;
            top = root + step;
        }
        if top.is_finite() {
            bisect(upper, root, top)
        } else {
            f64::INFINITY
        }
    };

    let mut monotone = monotone_on(e, blo.max(sigma * (1.0 + 1e-9)), bhi);
    let lo = if tail == 0.0 {
        root
    } else if !tail.is_finite() {
        sigma
    } else {
        let lower = |l: f64| h(l) + e.tail(l);
        let mut step = 1e-12 * root.max(1.0);
        let mut bottom = root - step;
        while bottom > sigma && lower(bottom) >= 0.0 {
            step *= 2.0;
            bottom = root - step;
        }
        if bottom <= sigma {
            sigma
        } else {
            monotone &= monotone_on(e, bottom, root);
            bisect(|l| -lower(l), bottom, root)
        }
    };
    Ok(RootEnclosure { root, lo, hi, bracket: (blo, bhi), monotone, tail })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// `λ_f > λ_g`.
    FirstLarger,
    /// `λ_f < λ_g`.
    SecondLarger,
    Undecided,
}

/// Evidence for an ordering of two roots.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootCertificate {
    pub verdict: Verdict,
    /// Common interval `I`.
    pub interval: (f64, f64),
    /// Least of `f − g − (τ_f + τ_g)` over the grid on `I`.
    pub min_gap: f64,
    /// Least of `g − f − (τ_f + τ_g)` over the grid on `I`.
    pub min_reverse_gap: f64,
    pub f: RootEnclosure,
    pub g: RootEnclosure,
    /// Why no verdict was reached.
    pub note: Option<String>,
}

/// Orders the roots of `λ² = f` and `λ² = g`.
///
/// A verdict needs both enclosures inside `I`, both equations monotone
/// there, a strictly positive gap `f − g − τ_f − τ_g` (or the reverse) on
/// every grid point of `I`, and disjoint enclosures in the same order.
pub fn compare_roots<F, G>(f: &F, g: &G) -> Result<RootCertificate>
where
    F: CharacteristicEquation + ?Sized,
    G: CharacteristicEquation + ?Sized,
{
    let (flo, fhi) = f.interval();
    let (glo, ghi) = g.interval();
    let interval = (flo.max(glo), fhi.min(ghi));
    if interval.0 >= interval.1 {
        return Err(Error::DisjointIntervals);
    }
    let ef = solve_char_equation(f)?;
    let eg = solve_char_equation(g)?;
    let (lo, hi) = interval;
    let mut min_gap = f64::INFINITY;
    let mut min_reverse = f64::INFINITY;
    for k in 0..=COMPARE_SAMPLES {
        let l = lo + (hi - lo) * k as f64 / COMPARE_SAMPLES as f64;
        let diff = f.rhs(l) - g.rhs(l);
        let slack = f.tail(l) + g.tail(l);
        min_gap = min_gap.min(diff - slack);
        min_reverse = min_reverse.min(-diff - slack);
    }
    let inside = |e: &RootEnclosure| lo <= e.lo && e.hi <= hi;
    let mut note = None;
    let verdict = if !inside(&ef) || !inside(&eg) {
        note = Some("a root enclosure leaves the interval; widen I or raise the order".to_string());
        Verdict::Undecided
    } else if !ef.monotone || !eg.monotone {
        note = Some("monotonicity check failed".to_string());
        Verdict::Undecided
    } else if min_gap > 0.0 && ef.lo > eg.hi {
        Verdict::FirstLarger
    } else if min_reverse > 0.0 && eg.lo > ef.hi {
        Verdict::SecondLarger
    } else {
        note = Some("tail bounds exceed the gap between the equations".to_string());
        Verdict::Undecided
    };
    Ok(RootCertificate { verdict, interval, min_gap, min_reverse_gap: min_reverse, f: ef, g: eg, note })
}

/// `λ1 ≈ √a0 + c1 + c2/√a0 + c3/a0 + c4/a0^{3/2}`.
#[derive(Clone, Debug, PartialEq)]
pub struct RootExpansion<T> {
    pub a: [T; 5],
    pub c1: T,
    pub c2: T,
    pub c3: T,
    pub c4: T,
    pub predicted: f64,
}

/// Expansion of the largest root of `λ² = Σ a_i λ^{-i}` in `√a0`; missing
/// coefficients count as zero.
pub fn expand_largest_root<T: Scalar>(coefficients: &[T]) -> Result<RootExpansion<T>> {
    let get = |i: usize| coefficients.get(i).cloned().unwrap_or_else(T::zero);
    let a = [get(0), get(1), get(2), get(3), get(4)];
    if !a[0].is_positive() {
        return Err(Error::NonPositiveLeading);
    }
    let q = |num: i64, den: i64| T::from_int(num) / T::from_int(den);
    let r1 = a[1].clone() / a[0].clone();
    let r2 = a[2].clone() / a[0].clone();
    let r3 = a[3].clone() / a[0].clone();
    let r4 = a[4].clone() / a[0].clone();
    let c1 = r1.clone() * q(1, 2);
    let c2 = q(-3, 8) * r1.clone() * r1.clone() + q(1, 2) * r2.clone();
    let c3 = q(1, 2) * r1.clone() * r1.clone() * r1.clone() - r1.clone() * r2.clone() + q(1, 2) * r3.clone();
    let r1sq = r1.clone() * r1.clone();
    let c4 = q(-105, 128) * r1sq.clone() * r1sq.clone() + q(35, 16) * r1sq * r2.clone()
        - q(5, 8) * r2.clone() * r2
        - q(5, 4) * r1 * r3
        + q(1, 2) * r4;
    let s = a[0].as_f64().sqrt();
    let predicted = s + c1.as_f64() + c2.as_f64() / s + c3.as_f64() / (s * s) + c4.as_f64() / (s * s * s);
    Ok(RootExpansion { a, c1, c2, c3, c4, predicted })
}
