//! Two-hub characteristic series.
//!
//! Deleting hubs `u1, u2` from `G` leaves `P`. For an eigenpair
//! `(λ, x)` with `λ > λ1(P)` and `ρ = x_{u2}/x_{u1}`, the restriction of `x`
//! to `P` is `x_{u1} (λ − A_P)^{-1} β` with `β = 1_{N1} + ρ 1_{N2}`, and
//! `λ² = Σ_i a_i / λ^i` with `a_i = ½ γᵀ A_P^i β`, `γ = 1_{N1} + ρ^{-1} 1_{N2}`.
//! Keeping the hub equations apart gives `λ² = F1 + ρD = F2 + D/ρ`.

mod formal;
mod solve;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::eigen::eigenpair;
use crate::error::{Error, Result};
use crate::graph::canon::swaps_vertices;
use crate::graph::{bilinear_walk_moment, walk_moments, Graph, VertexSet};
use crate::scalar::Scalar;

pub use formal::Formal;
pub use solve::{
    compare_roots, expand_largest_root, solve_char_equation, RootCertificate, RootEnclosure, RootExpansion, Verdict,
};

/// Truncation order used when none is given.
pub const DEFAULT_ORDER: usize = 6;

/// Largest truncation order accepted.
pub const MAX_SERIES_ORDER: usize = 10;

/// Tolerance on `|ρ + 1|` accepted as numeric evidence of hub symmetry.
pub const SYMMETRY_TOLERANCE: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HubMode {
    /// `ρ = −1`, justified by a hub-swapping automorphism or numerically.
    Symmetric,
    /// `ρ` read from the `λ2` eigenvector.
    Exact,
    /// `ρ + 1/ρ` replaced by its upper bound `−2`; coefficients are upper
    /// bounds, not eigenvalue data.
    Bound,
    /// No ratio: the three moment families `F1`, `F2`, `D`.
    Split,
}

impl fmt::Display for HubMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Symmetric => "symmetric",
            Self::Exact => "exact",
            Self::Bound => "bound",
            Self::Split => "split",
        })
    }
}

impl FromStr for HubMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "symmetric" => Ok(Self::Symmetric),
            "exact" => Ok(Self::Exact),
            "bound" => Ok(Self::Bound),
            "split" => Ok(Self::Split),
            other => Err(Error::Config(format!("unknown hub mode `{other}`"))),
        }
    }
}

/// Why symmetric mode accepted `ρ = −1`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SymmetryEvidence {
    Automorphism,
    NumericRatio(f64),
}

/// A graph split at two hubs, with the hub weight vectors on `P`.
#[derive(Clone, Debug)]
pub struct HubDecomposition {
    pub g: Graph,
    pub u1: usize,
    pub u2: usize,
    /// `G − {u1, u2}`.
    pub p: Graph,
    /// `keep[i]` is the label in `G` of vertex `i` of `P`.
    pub keep: Vec<usize>,
    pub mode: HubMode,
    /// `x_{u2}/x_{u1}`; `None` in split mode.
    pub ratio: Option<f64>,
    pub symmetry: Option<SymmetryEvidence>,
    /// The hubs are adjacent. The series then omits the direct hub term.
    pub hubs_adjacent: bool,
    /// `N(u1) ∖ {u2}` and `N(u2) ∖ {u1}` in `P` labels.
    pub n1: VertexSet,
    pub n2: VertexSet,
    pub beta1: Vec<f64>,
    pub beta2: Vec<f64>,
    pub gamma1: Vec<f64>,
    pub gamma2: Vec<f64>,
    /// Certified upper bound on `λ1(A_P)`.
    pub sigma: f64,
}

impl HubDecomposition {
    pub fn beta(&self) -> Vec<f64> {
        self.beta1.iter().zip(&self.beta2).map(|(a, b)| a + b).collect()
    }

    pub fn gamma(&self) -> Vec<f64> {
        self.gamma1.iter().zip(&self.gamma2).map(|(a, b)| a + b).collect()
    }

    /// `ρ` in the scalar type: exactly `−1` outside exact mode.
    fn ratio_scalar<T: Scalar>(&self) -> Option<T> {
        match self.mode {
            HubMode::Symmetric | HubMode::Bound => Some(-T::one()),
            HubMode::Exact => self.ratio.and_then(T::from_f64),
            HubMode::Split => None,
        }
    }

    /// `β` and `γ` in the scalar type.
    pub fn weights<T: Scalar>(&self) -> Result<(Vec<T>, Vec<T>)> {
        let rho: T = self.ratio_scalar().ok_or_else(|| Error::InvalidParameters {
            family: "series",
            reason: "split mode carries no ratio".into(),
        })?;
        let inv = T::one() / rho.clone();
        let n = self.p.n();
        let ind = |s: &VertexSet, v: usize| if s.contains(v) { T::one() } else { T::zero() };
        let beta = (0..n).map(|v| ind(&self.n1, v) + rho.clone() * ind(&self.n2, v)).collect();
        let gamma = (0..n).map(|v| ind(&self.n1, v) + inv.clone() * ind(&self.n2, v)).collect();
        Ok((beta, gamma))
    }
}

fn hub_ratio_of(g: &Graph, u1: usize, u2: usize) -> Result<f64> {
    let pair = eigenpair::<f64>(g, 2)?;
    let (x1, x2) = (pair.vector[u1], pair.vector[u2]);
    if x1.abs() < 1e-12 {
        return Err(Error::DegenerateRatio(x1));
    }
    if x2.abs() < 1e-12 {
        return Err(Error::DegenerateRatio(x2));
    }
    Ok(x2 / x1)
}

/// Upper bound on `λ1(A)`: the least of the maximum degree, the largest
/// `√(d_u d_v)` over edges, and Collatz–Wielandt quotients of power
/// iterates of `A + I` started from the all-ones vector.
pub fn spectral_radius_bound(p: &Graph) -> f64 {
    let n = p.n();
    if p.edge_count() == 0 {
        return 0.0;
    }
    let deg = p.degrees();
    let delta = p.max_degree() as f64;
    let edge = p.edges().map(|(u, v)| ((deg[u] * deg[v]) as f64).sqrt()).fold(0.0, f64::max);
    let mut best = delta.min(edge);
    let lists = p.adjacency_lists();
    let mut x = vec![1.0f64; n];
    for _ in 0..400 {
        let ax: Vec<f64> = lists.iter().map(|nb| nb.iter().map(|&v| x[v]).sum()).collect();
        let cw = ax.iter().zip(&x).map(|(a, b)| a / b).fold(0.0, f64::max);
        best = best.min(cw * (1.0 + 1e-12));
        let next: Vec<f64> = ax.iter().zip(&x).map(|(a, b)| a + b).collect();
        let norm = next.iter().cloned().fold(0.0, f64::max);
        x = next.into_iter().map(|v| v / norm).collect();
        if x.iter().any(|&v| v < 1e-280) {
            break;
        }
    }
    best
}

/// Splits `g` at hubs `u1, u2`.
pub fn decompose(g: &Graph, u1: usize, u2: usize, mode: HubMode) -> Result<HubDecomposition> {
    let n = g.n();
    for u in [u1, u2] {
        if u >= n {
            return Err(Error::VertexOutOfRange { vertex: u, n });
        }
    }
    if u1 == u2 {
        return Err(Error::InvalidParameters { family: "series", reason: "hubs must differ".into() });
    }
    if n < 3 {
        return Err(Error::VertexCount(n));
    }
    let removed = VertexSet::from_vertices(n, [u1, u2])?;
    let (p, keep) = g.delete_vertices(&removed)?;
    let local = |v: usize| keep.binary_search(&v).expect("kept vertex");
    let m = p.n();
    let n1 = VertexSet::from_vertices(m, g.neighbors(u1).filter(|&v| v != u2).map(local))?;
    let n2 = VertexSet::from_vertices(m, g.neighbors(u2).filter(|&v| v != u1).map(local))?;

    let (ratio, symmetry) = match mode {
        HubMode::Symmetric => {
            if swaps_vertices(g, u1, u2) {
                (Some(-1.0), Some(SymmetryEvidence::Automorphism))
            } else {
                match hub_ratio_of(g, u1, u2) {
                    Ok(r) if (r + 1.0).abs() <= SYMMETRY_TOLERANCE => {
                        (Some(-1.0), Some(SymmetryEvidence::NumericRatio(r)))
                    }
                    _ => return Err(Error::AsymmetricHubs(u1, u2)),
                }
            }
        }
        HubMode::Exact => (Some(hub_ratio_of(g, u1, u2)?), None),
        HubMode::Bound => (Some(-1.0), None),
        HubMode::Split => (None, None),
    };
    let rho = ratio.unwrap_or(1.0);
    let ind = |s: &VertexSet, w: f64| (0..m).map(|v| if s.contains(v) { w } else { 0.0 }).collect::<Vec<_>>();
    Ok(HubDecomposition {
        g: g.clone(),
        u1,
        u2,
        sigma: spectral_radius_bound(&p),
        p,
        keep,
        mode,
        ratio,
        symmetry,
        hubs_adjacent: g.has_edge(u1, u2),
        beta1: ind(&n1, 1.0),
        beta2: ind(&n2, rho),
        gamma1: ind(&n1, 1.0),
        gamma2: ind(&n2, 1.0 / rho),
        n1,
        n2,
    })
}

/// How the validity interval `I` of an equation is chosen.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum IntervalSpec {
    /// The root bracket `[√a0, √a0 + a1/a0 + 2]`.
    #[default]
    Bracket,
    /// `[√a0 + c1 − d1/√a0, √a0 + c1 + d2/√a0]` with `c1 = a1/(2 a0)`.
    Centred { d1: f64, d2: f64 },
}

/// `λ² = Σ_{i ≤ m} a_i λ^{-i} + tail` with `|tail| ≤ U σ^{m+1} / (λ^m (λ − σ))`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesEquation<T> {
    pub coefficients: Vec<T>,
    /// `σ ≥ λ1(A_P)`.
    pub sigma: f64,
    /// `U` with `|coefficient_i| ≤ U σ^i` for every `i`.
    pub weight: f64,
    pub interval: (f64, f64),
    values: Vec<f64>,
}

impl<T: Scalar> SeriesEquation<T> {
    pub fn new(coefficients: Vec<T>, sigma: f64, weight: f64) -> Self {
        let values: Vec<f64> = coefficients.iter().map(Scalar::as_f64).collect();
        let mut s = Self { coefficients, sigma, weight, interval: (0.0, 0.0), values };
        s.interval = s.interval_for(IntervalSpec::Bracket);
        s
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    fn interval_for(&self, spec: IntervalSpec) -> (f64, f64) {
        let a0 = self.values[0].max(0.0);
        let a1 = self.values.get(1).copied().unwrap_or(0.0);
        let r = a0.sqrt();
        match spec {
            IntervalSpec::Bracket => (r, r + a1.max(0.0) / a0.max(f64::MIN_POSITIVE) + 2.0),
            IntervalSpec::Centred { d1, d2 } => {
                let c1 = a1 / (2.0 * a0);
                (r + c1 - d1 / r, r + c1 + d2 / r)
            }
        }
    }

    pub fn with_interval(mut self, spec: IntervalSpec) -> Self {
        self.interval = self.interval_for(spec);
        self
    }

    /// Same equation with the order reduced to `m`.
    pub fn truncate(&self, m: usize) -> Self {
        let mut s = Self::new(self.coefficients[..=m.min(self.order())].to_vec(), self.sigma, self.weight);
        s.interval = self.interval;
        s
    }

    pub fn to_f64(&self) -> SeriesEquation<f64> {
        SeriesEquation {
            coefficients: self.values.clone(),
            sigma: self.sigma,
            weight: self.weight,
            interval: self.interval,
            values: self.values.clone(),
        }
    }

    pub fn formal(&self) -> Formal<T> {
        Formal::new(self.coefficients.clone())
    }

    /// Coefficient-wise difference; tails add.
    pub fn minus(&self, other: &Self) -> Self {
        let k = self.order().min(other.order());
        let c = (0..=k).map(|i| self.coefficients[i].clone() - other.coefficients[i].clone()).collect();
        let mut s = Self::new(c, self.sigma.max(other.sigma), self.weight + other.weight);
        s.interval = self.interval;
        s
    }
}

/// Geometric tail `U Σ_{i>m} (σ/λ)^i` and its derivative bound.
fn geometric_tail(weight: f64, sigma: f64, m: usize, lambda: f64) -> f64 {
    if weight == 0.0 || sigma == 0.0 {
        return 0.0;
    }
    if lambda <= sigma {
        return f64::INFINITY;
    }
    let x = sigma / lambda;
    weight * x.powi(m as i32 + 1) / (1.0 - x)
}

fn geometric_tail_slope(weight: f64, sigma: f64, m: usize, lambda: f64) -> f64 {
    if weight == 0.0 || sigma == 0.0 {
        return 0.0;
    }
    if lambda <= sigma {
        return f64::INFINITY;
    }
    let x = sigma / lambda;
    let m = m as f64;
    weight / lambda * x.powf(m + 1.0) * ((m + 1.0) - m * x) / ((1.0 - x) * (1.0 - x))
}

/// The right-hand side `R` of an equation `λ² = R(λ)` known up to a tail.
pub trait CharacteristicEquation {
    /// Truncated right-hand side.
    fn rhs(&self, lambda: f64) -> f64;
    fn rhs_derivative(&self, lambda: f64) -> f64;
    /// Bound on `|R − truncated R|`.
    fn tail(&self, lambda: f64) -> f64;
    /// Bound on `|R' − truncated R'|`.
    fn tail_derivative(&self, lambda: f64) -> f64;
    /// Constant term of the right-hand side.
    fn leading(&self) -> f64;
    /// Bracket searched for the root of the truncated equation.
    fn bracket(&self) -> (f64, f64);
    fn interval(&self) -> (f64, f64);
    /// Below this the tail bound is void.
    fn sigma(&self) -> f64;
}

impl<T: Scalar> CharacteristicEquation for SeriesEquation<T> {
    fn rhs(&self, lambda: f64) -> f64 {
        let x = 1.0 / lambda;
        self.values.iter().rev().fold(0.0, |acc, &a| acc * x + a)
    }

    fn rhs_derivative(&self, lambda: f64) -> f64 {
        let x = 1.0 / lambda;
        -self.values.iter().enumerate().skip(1).map(|(i, &a)| i as f64 * a * x.powi(i as i32 + 1)).sum::<f64>()
    }

    fn tail(&self, lambda: f64) -> f64 {
        geometric_tail(self.weight, self.sigma, self.order(), lambda)
    }

    fn tail_derivative(&self, lambda: f64) -> f64 {
        geometric_tail_slope(self.weight, self.sigma, self.order(), lambda)
    }

    fn leading(&self) -> f64 {
        self.values[0]
    }

    fn bracket(&self) -> (f64, f64) {
        self.interval_for(IntervalSpec::Bracket)
    }

    fn interval(&self) -> (f64, f64) {
        self.interval
    }

    fn sigma(&self) -> f64 {
        self.sigma
    }
}

/// The three moment series of split mode.
#[derive(Clone, Debug, PartialEq)]
pub struct SplitSeries<T> {
    /// `Σ M_i(N1, N1) / λ^i`.
    pub f1: SeriesEquation<T>,
    /// `Σ M_i(N2, N2) / λ^i`.
    pub f2: SeriesEquation<T>,
    /// `Σ M_i(N1, N2) / λ^i`.
    pub d: SeriesEquation<T>,
}

/// Output of [`series_coefficients`].
#[derive(Clone, Debug, PartialEq)]
pub enum SeriesSet<T> {
    Combined(SeriesEquation<T>),
    Split(SplitSeries<T>),
}

impl<T> SeriesSet<T> {
    pub fn combined(self) -> Option<SeriesEquation<T>> {
        match self {
            Self::Combined(s) => Some(s),
            Self::Split(_) => None,
        }
    }

    pub fn split(self) -> Option<SplitSeries<T>> {
        match self {
            Self::Split(s) => Some(s),
            Self::Combined(_) => None,
        }
    }
}

fn check_series_order(m: usize) -> Result<()> {
    if m > MAX_SERIES_ORDER {
        Err(Error::OrderTooLarge { got: m, max: MAX_SERIES_ORDER })
    } else {
        Ok(())
    }
}

struct Moments {
    m11: Vec<i64>,
    m22: Vec<i64>,
    m12: Vec<i64>,
}

fn moments(d: &HubDecomposition, m: usize) -> Result<Moments> {
    Ok(Moments {
        m11: walk_moments(&d.p, &d.n1, &d.n1, m)?.moments,
        m22: walk_moments(&d.p, &d.n2, &d.n2, m)?.moments,
        m12: walk_moments(&d.p, &d.n1, &d.n2, m)?.moments,
    })
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Series of order `m` for a decomposition.
///
/// Combined modes give `a_i = ½ (M11 + M22 + (ρ + 1/ρ) M12)`, exact in `T`
/// when `ρ` is. Split mode gives `F1`, `F2`, `D`.
pub fn series_coefficients<T: Scalar>(d: &HubDecomposition, m: usize) -> Result<SeriesSet<T>> {
    check_series_order(m)?;
    let mo = moments(d, m)?;
    let int = |v: i64| T::from_int(v);
    if d.mode == HubMode::Split {
        let (s1, s2) = (d.n1.len() as f64, d.n2.len() as f64);
        let mk = |v: &[i64], w: f64| SeriesEquation::new(v.iter().map(|&x| int(x)).collect(), d.sigma, w);
        return Ok(SeriesSet::Split(SplitSeries {
            f1: mk(&mo.m11, s1),
            f2: mk(&mo.m22, s2),
            d: mk(&mo.m12, (s1 * s2).sqrt()),
        }));
    }
    let rho: T = d.ratio_scalar().expect("combined modes carry a ratio");
    let s = rho.clone() + T::one() / rho;
    let half = T::one() / int(2);
    let coefficients =
        (0..=m).map(|i| half.clone() * (int(mo.m11[i]) + int(mo.m22[i]) + s.clone() * int(mo.m12[i]))).collect();
    let weight = 0.5 * norm(&d.beta()) * norm(&d.gamma());
    Ok(SeriesSet::Combined(SeriesEquation::new(coefficients, d.sigma, weight)))
}

/// `λ² = Σ M_i(N(u), N(u)) / λ^i` on `P = G − u`, the one-hub equation
/// for an eigenvalue above `λ1(P)` whose eigenvector is non-zero at `u`.
pub fn single_hub_series<T: Scalar>(g: &Graph, u: usize, m: usize) -> Result<SeriesEquation<T>> {
    check_series_order(m)?;
    if u >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: u, n: g.n() });
    }
    if g.n() < 2 {
        return Err(Error::VertexCount(g.n()));
    }
    let (p, keep) = g.delete_vertices(&VertexSet::from_vertices(g.n(), [u])?)?;
    let local = |v: usize| keep.binary_search(&v).expect("kept vertex");
    let nb = VertexSet::from_vertices(p.n(), g.neighbors(u).map(local))?;
    let moments = walk_moments(&p, &nb, &nb, m)?.moments;
    Ok(SeriesEquation::new(
        moments.iter().map(|&x| T::from_int(x)).collect(),
        spectral_radius_bound(&p),
        nb.len() as f64,
    ))
}

/// `a_i` from the weight vectors directly: `½ γᵀ A_P^i β`.
pub fn coefficient_from_weights<T: Scalar>(d: &HubDecomposition, i: usize) -> Result<T> {
    let (beta, gamma) = d.weights::<T>()?;
    Ok(bilinear_walk_moment(&d.p, &gamma, &beta, i)? / T::from_int(2))
}

/// `F2 − D` for hub-symmetric graphs, where `F1 = F2` and `ρ = −1`.
pub fn combined_even<T: Scalar>(d: &HubDecomposition, m: usize) -> Result<SeriesEquation<T>> {
    if !swaps_vertices(&d.g, d.u1, d.u2) {
        return Err(Error::AsymmetricHubs(d.u1, d.u2));
    }
    let split = match d.mode {
        HubMode::Split => d.clone(),
        _ => HubDecomposition { mode: HubMode::Split, ratio: None, ..d.clone() },
    };
    let s = series_coefficients::<T>(&split, m)?.split().expect("split mode");
    Ok(s.f2.minus(&s.d))
}

/// `λ² = ½ (F1 + F2 − √((F1 − F2)² + 4 D²))`, the hub ratio eliminated.
#[derive(Clone, Debug, PartialEq)]
pub struct EliminatedEquation<T> {
    pub split: SplitSeries<T>,
    /// Formal expansion of the right-hand side in `1/λ`.
    pub combined: Formal<T>,
    pub interval: (f64, f64),
}

/// Result of [`eliminate_ratio`].
#[derive(Clone, Debug, PartialEq)]
pub struct Elimination<T> {
    pub equation: EliminatedEquation<T>,
    pub root: RootEnclosure,
}

impl<T: Scalar> EliminatedEquation<T> {
    pub fn new(split: SplitSeries<T>) -> Result<Self> {
        let (f1, f2, d) = (split.f1.formal(), split.f2.formal(), split.d.formal());
        let diff = f1.sub(&f2);
        let four = T::from_int(4);
        let disc = diff.mul(&diff).add(&d.mul(&d).scale(&four));
        let root = disc.sqrt()?;
        let half = T::one() / T::from_int(2);
        let combined = f1.add(&f2).sub(&root).scale(&half);
        let c = combined.to_f64().coefficients;
        if c[0] <= 0.0 {
            return Err(Error::NonPositiveLeading);
        }
        let r = c[0].sqrt();
        let c1 = c.get(1).copied().unwrap_or(0.0);
        let interval = (r, r + c1.max(0.0) / c[0] + 2.0);
        Ok(Self { split, combined, interval })
    }

    pub fn with_interval(mut self, interval: (f64, f64)) -> Self {
        self.interval = interval;
        self
    }

    fn parts(&self, lambda: f64) -> [(f64, f64, f64, f64); 3] {
        let e = |s: &SeriesEquation<T>| {
            (s.rhs(lambda), s.rhs_derivative(lambda), s.tail(lambda), s.tail_derivative(lambda))
        };
        [e(&self.split.f1), e(&self.split.f2), e(&self.split.d)]
    }
}

impl<T: Scalar> CharacteristicEquation for EliminatedEquation<T> {
    fn rhs(&self, lambda: f64) -> f64 {
        let [(f1, ..), (f2, ..), (d, ..)] = self.parts(lambda);
        0.5 * (f1 + f2 - ((f1 - f2).powi(2) + 4.0 * d * d).sqrt())
    }

    fn rhs_derivative(&self, lambda: f64) -> f64 {
        let [(f1, f1p, ..), (f2, f2p, ..), (d, dp, ..)] = self.parts(lambda);
        let r = ((f1 - f2).powi(2) + 4.0 * d * d).sqrt();
        if r == 0.0 {
            return 0.5 * (f1p + f2p);
        }
        0.5 * (f1p + f2p - ((f1 - f2) * (f1p - f2p) + 4.0 * d * dp) / r)
    }

    /// Every partial derivative of the elimination map has modulus at most
    /// one, so the tails add.
    fn tail(&self, lambda: f64) -> f64 {
        self.parts(lambda).iter().map(|p| p.2).sum()
    }

    /// First-order terms plus the change of the partial derivatives, whose
    /// gradient is bounded by `2/R` along the perturbation.
    fn tail_derivative(&self, lambda: f64) -> f64 {
        let [(f1, f1p, t1, t1p), (f2, f2p, t2, t2p), (d, dp, td, tdp)] = self.parts(lambda);
        let r = ((f1 - f2).powi(2) + 4.0 * d * d).sqrt();
        let shift = t1 + t2 + td;
        let r_min = r - 2.0 * shift;
        if r_min <= 0.0 {
            return f64::INFINITY;
        }
        let first = t1p + t2p + tdp;
        let slopes = f1p.abs() + f2p.abs() + dp.abs() + first;
        first + 2.0 * shift / r_min * slopes
    }

    fn leading(&self) -> f64 {
        self.combined.coefficients[0].as_f64()
    }

    fn bracket(&self) -> (f64, f64) {
        let c = self.combined.to_f64().coefficients;
        let r = c[0].max(0.0).sqrt();
        let c1 = c.get(1).copied().unwrap_or(0.0);
        (r, r + c1.max(0.0) / c[0].max(f64::MIN_POSITIVE) + 2.0)
    }

    fn interval(&self) -> (f64, f64) {
        self.interval
    }

    fn sigma(&self) -> f64 {
        self.split.f1.sigma.max(self.split.f2.sigma).max(self.split.d.sigma)
    }
}

/// Solves the eliminated equation and expands it formally.
pub fn eliminate_ratio<T: Scalar>(split: SplitSeries<T>) -> Result<Elimination<T>> {
    let equation = EliminatedEquation::new(split)?;
    let root = solve_char_equation(&equation)?;
    Ok(Elimination { equation, root })
}
