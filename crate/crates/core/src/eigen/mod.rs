//! Dense symmetric eigensolver and the eigenvector identities built on it.

mod tridiag;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{walk_counts_from, Graph, VertexSet};
use crate::scalar::Real;

pub use tridiag::Tridiagonal;

/// Gap below which two eigenvalues are treated as equal.
pub const SIMPLICITY_GAP: f64 = 1e-8;

/// Maximum QL sweeps per eigenvalue.
pub const MAX_QL_ITERATIONS: usize = 60;

const INVERSE_ITERATIONS: usize = 3;

/// Row-major symmetric matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Real> SymMatrix<T> {
    /// Rejects entries whose transposes differ by more than `n · eps`
    /// relative to the largest entry.
    pub fn new(n: usize, data: Vec<T>) -> Result<Self> {
        if n == 0 || data.len() != n * n {
            return Err(Error::VertexCount(n));
        }
        let scale = data.iter().fold(0.0f64, |m, x| m.max(x.as_f64().abs())).max(1.0);
        let tol = n as f64 * T::epsilon_f64() * scale;
        for i in 0..n {
            for j in i + 1..n {
                let diff = (data[i * n + j].as_f64() - data[j * n + i].as_f64()).abs();
                if diff > tol || diff.is_nan() {
                    return Err(Error::NotSymmetric { row: i, col: j, diff });
                }
            }
        }
        Ok(Self { n, data })
    }

    pub fn adjacency(g: &Graph) -> Self {
        Self { n: g.n(), data: g.adjacency_matrix() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.n + j]
    }

    pub fn mul_vec(&self, x: &[T]) -> Vec<T> {
        self.data.chunks_exact(self.n).map(|row| row.iter().zip(x).fold(T::zero(), |s, (&a, &b)| s + a * b)).collect()
    }

    pub fn trace(&self) -> T {
        (0..self.n).fold(T::zero(), |s, i| s + self.get(i, i))
    }

    /// `trace(A^2)`, the sum of squared entries.
    pub fn frobenius_sq(&self) -> T {
        self.data.iter().fold(T::zero(), |s, &x| s + x * x)
    }
}

/// Eigenvalues `λ1 ≥ … ≥ λn` with any computed eigenpairs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum<T> {
    pub values: Vec<T>,
    pub pairs: Vec<EigenPair<T>>,
    /// Largest `‖Av − λv‖₂` over `pairs` (zero when there are none).
    pub residual: f64,
    /// `|Σλ − trace(A)|`.
    pub trace_error: f64,
    /// `|Σλ² − trace(A²)|`.
    pub square_error: f64,
}

impl<T: Real> Spectrum<T> {
    /// `λ_k`, 1-based.
    pub fn lambda(&self, k: usize) -> T {
        self.values[k - 1]
    }

    /// `λ_k − λ_{k+1}`, 1-based; infinite for `k = n`.
    pub fn gap(&self, k: usize) -> f64 {
        if k >= self.values.len() {
            f64::INFINITY
        } else {
            (self.values[k - 1] - self.values[k]).as_f64()
        }
    }

    /// Whether `λ_k` is separated from both neighbours by the simplicity gap.
    pub fn is_simple(&self, k: usize) -> bool {
        self.neighbour_gap(k) > SIMPLICITY_GAP
    }

    fn neighbour_gap(&self, k: usize) -> f64 {
        let below = self.gap(k);
        let above = if k > 1 { self.gap(k - 1) } else { f64::INFINITY };
        below.min(above)
    }
}

/// One eigenpair, the vector normalised to unit length with its
/// largest-magnitude entry positive.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenPair<T> {
    pub k: usize,
    pub value: T,
    pub vector: Vec<T>,
    pub residual: f64,
    pub simple: bool,
}

/// Solver output before any vectors are extracted.
pub struct Decomposition<T> {
    matrix: SymMatrix<T>,
    tri: Tridiagonal<T>,
    pub values: Vec<T>,
}

impl<T: Real> Decomposition<T> {
    pub fn new(matrix: SymMatrix<T>) -> Result<Self> {
        let tri = Tridiagonal::reduce(matrix.data.clone(), matrix.n);
        let values = tri.eigenvalues(MAX_QL_ITERATIONS)?;
        Ok(Self { matrix, tri, values })
    }

    /// Eigenpair `k` (1-based); fails when `λ_k` is not simple.
    pub fn pair(&self, k: usize) -> Result<EigenPair<T>> {
        let n = self.matrix.n;
        if k == 0 || k > n {
            return Err(Error::VertexOutOfRange { vertex: k, n });
        }
        let value = self.values[k - 1];
        let below = if k < n { (value - self.values[k]).as_f64() } else { f64::INFINITY };
        let above = if k > 1 { (self.values[k - 2] - value).as_f64() } else { f64::INFINITY };
        let gap = below.min(above);
        if gap <= SIMPLICITY_GAP {
            return Err(Error::NotSimple { k, gap });
        }
        let mut x = self.tri.inverse_iteration(value, INVERSE_ITERATIONS);
        self.tri.back_transform(&mut x);
        normalise(&mut x);
        let residual = residual(&self.matrix, value, &x);
        Ok(EigenPair { k, value, vector: x, residual, simple: true })
    }

    pub fn into_spectrum(self, pairs: Vec<EigenPair<T>>) -> Spectrum<T> {
        let residual = pairs.iter().fold(0.0f64, |m, p| m.max(p.residual));
        let sum = self.values.iter().fold(0.0, |s, v| s + v.as_f64());
        let sq = self.values.iter().fold(0.0, |s, v| s + v.as_f64() * v.as_f64());
        Spectrum {
            trace_error: (sum - self.matrix.trace().as_f64()).abs(),
            square_error: (sq - self.matrix.frobenius_sq().as_f64()).abs(),
            values: self.values,
            pairs,
            residual,
        }
    }
}

fn normalise<T: Real>(x: &mut [T]) {
    let norm = x.iter().fold(T::zero(), |s, &v| s + v * v).sqrt();
    let mut big = T::zero();
    for &v in x.iter() {
        if v.abs() > big.abs() {
            big = v;
        }
    }
    let scale = if big < T::zero() { -norm } else { norm };
    for v in x.iter_mut() {
        *v = *v / scale;
    }
}

fn residual<T: Real>(a: &SymMatrix<T>, value: T, x: &[T]) -> f64 {
    let ax = a.mul_vec(x);
    ax.iter()
        .zip(x)
        .fold(0.0f64, |s, (&y, &v)| {
            let r = (y - value * v).as_f64();
            s + r * r
        })
        .sqrt()
}

/// All eigenvalues of a symmetric matrix.
pub fn spectrum<T: Real>(m: &SymMatrix<T>) -> Result<Spectrum<T>> {
    Ok(Decomposition::new(m.clone())?.into_spectrum(Vec::new()))
}

/// All eigenvalues of the adjacency matrix of `g`.
pub fn graph_spectrum<T: Real>(g: &Graph) -> Result<Spectrum<T>> {
    Ok(Decomposition::new(SymMatrix::adjacency(g))?.into_spectrum(Vec::new()))
}

/// All eigenvalues plus the eigenpairs listed in `ks` (1-based).
pub fn spectrum_with_pairs<T: Real>(g: &Graph, ks: &[usize]) -> Result<Spectrum<T>> {
    let dec = Decomposition::new(SymMatrix::adjacency(g))?;
    let pairs = ks.iter().map(|&k| dec.pair(k)).collect::<Result<Vec<_>>>()?;
    Ok(dec.into_spectrum(pairs))
}

/// `λ_k` of `g` with a unit eigenvector.
pub fn eigenpair<T: Real>(g: &Graph, k: usize) -> Result<EigenPair<T>> {
    Decomposition::new(SymMatrix::adjacency(g))?.pair(k)
}

/// Outcome of an interlacing check.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Interlacing {
    pub holds: bool,
    pub max_violation: f64,
}

/// Checks `λ_i(G) ≥ λ_i(H) ≥ λ_{i+d}(G)` for `H = G − deleted`.
pub fn check_interlacing(g: &Graph, deleted: &VertexSet) -> Result<Interlacing> {
    const TOL: f64 = 1e-9;
    let d = deleted.len();
    if d == 0 || d >= g.n() {
        return Err(Error::InvalidParameters {
            family: "interlacing",
            reason: format!("deleting {d} of {} vertices", g.n()),
        });
    }
    let (h, _) = g.delete_vertices(deleted)?;
    let lg = graph_spectrum::<f64>(g)?.values;
    let lh = graph_spectrum::<f64>(&h)?.values;
    let mut worst = 0.0f64;
    for (i, &mu) in lh.iter().enumerate() {
        worst = worst.max(mu - lg[i]).max(lg[i + d] - mu);
    }
    Ok(Interlacing { holds: worst <= TOL, max_violation: worst.max(0.0) })
}

/// `|Σ_w x_w · w_i(u, w) − λ_k^i · x_u|` for the unit eigenvector of `λ_k`.
pub fn moment_identity_residual(g: &Graph, k: usize, i: usize, u: usize) -> Result<f64> {
    if i > 6 {
        return Err(Error::OrderTooLarge { got: i, max: 6 });
    }
    let pair = eigenpair::<f64>(g, k)?;
    moment_residual_for(g, &pair, i, u)
}

/// Same as [`moment_identity_residual`] with a precomputed pair.
pub fn moment_residual_for(g: &Graph, pair: &EigenPair<f64>, i: usize, u: usize) -> Result<f64> {
    if i == 0 {
        return Ok(0.0);
    }
    let walks = walk_counts_from(g, u, i)?;
    let lhs: f64 = walks.iter().zip(&pair.vector).map(|(&w, &x)| w as f64 * x).sum();
    Ok((lhs - pair.value.powi(i as i32) * pair.vector[u]).abs())
}

/// The `λ2` eigenvector ratio `x_{u2} / x_{u1}` and, when the hub
/// neighbourhoods are joined by `c > 0` edges, its deviation from `−λ/c`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HubRatio {
    pub u1: usize,
    pub u2: usize,
    pub lambda: f64,
    pub ratio: f64,
    pub crossing_edges: usize,
    pub predicted: Option<f64>,
    pub relative_deviation: Option<f64>,
}

/// Edges between `N(u1) \ N(u2)` and `N(u2) \ N(u1)`, hubs excluded.
pub fn crossing_edges(g: &Graph, u1: usize, u2: usize) -> usize {
    let n1 = g.neighborhood(u1);
    let n2 = g.neighborhood(u2);
    let mut count = 0;
    for a in n1.iter().filter(|&a| a != u2 && !n2.contains(a)) {
        count += g.neighbors(a).filter(|&b| b != u1 && n2.contains(b) && !n1.contains(b)).count();
    }
    count
}

pub fn hub_ratio(g: &Graph, u1: usize, u2: usize) -> Result<HubRatio> {
    for u in [u1, u2] {
        if u >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: u, n: g.n() });
        }
    }
    let pair = eigenpair::<f64>(g, 2)?;
    let x1 = pair.vector[u1];
    if x1.abs() < 1e-12 {
        return Err(Error::DegenerateRatio(x1));
    }
    let ratio = pair.vector[u2] / x1;
    let c = crossing_edges(g, u1, u2);
    let predicted = (c > 0).then(|| -pair.value / c as f64);
    let relative_deviation = predicted.map(|p| ((ratio - p) / p).abs());
    Ok(HubRatio { u1, u2, lambda: pair.value, ratio, crossing_edges: c, predicted, relative_deviation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{bridged_double_fan, fan};
    use std::f64::consts::PI;

    #[test]
    fn small_spectra() {
        let p3 = graph_spectrum::<f64>(&Graph::path(3).unwrap()).unwrap();
        let s2 = 2f64.sqrt();
        for (a, b) in p3.values.iter().zip([s2, 0.0, -s2]) {
            assert!((a - b).abs() < 1e-12);
        }
        let k3 = graph_spectrum::<f64>(&Graph::complete(3).unwrap()).unwrap();
        for (a, b) in k3.values.iter().zip([2.0, -1.0, -1.0]) {
            assert!((a - b).abs() < 1e-12);
        }
        assert!(!k3.is_simple(2));
        assert!(k3.is_simple(1));
        let single = graph_spectrum::<f64>(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(single.values, vec![0.0]);
    }

    #[test]
    fn path_spectrum_closed_form() {
        let n = 40;
        let s = graph_spectrum::<f64>(&Graph::path(n).unwrap()).unwrap();
        for k in 1..=n {
            let exact = 2.0 * (k as f64 * PI / (n as f64 + 1.0)).cos();
            assert!((s.lambda(k) - exact).abs() < 1e-12);
        }
        assert!(s.trace_error < 1e-10);
        assert!(s.square_error < 1e-10);
    }

    #[test]
    fn single_precision_is_close() {
        let g = fan(30).unwrap();
        let s64 = graph_spectrum::<f64>(&g).unwrap();
        let s32 = graph_spectrum::<f32>(&g).unwrap();
        for (a, b) in s64.values.iter().zip(&s32.values) {
            assert!((a - *b as f64).abs() < 1e-4);
        }
    }

    #[test]
    fn perron_vector_positive_and_unit() {
        let p = eigenpair::<f64>(&fan(20).unwrap(), 1).unwrap();
        assert!(p.vector.iter().all(|&x| x > 0.0));
        let norm: f64 = p.vector.iter().map(|x| x * x).sum();
        assert!((norm - 1.0).abs() < 1e-12);
        assert!(p.residual < 1e-9);
    }

    #[test]
    fn bridged_hubs_are_antisymmetric() {
        let g = bridged_double_fan(50).unwrap();
        let p = eigenpair::<f64>(&g, 2).unwrap();
        assert!((p.vector[0] + p.vector[1]).abs() < 1e-8);
        let s = graph_spectrum::<f64>(&g).unwrap();
        assert!(s.lambda(3) < 2.0);
        let r = hub_ratio(&g, 0, 1).unwrap();
        assert!((r.ratio + 1.0).abs() < 1e-8);
    }

    #[test]
    fn multiplicity_is_reported() {
        let err = eigenpair::<f64>(&Graph::complete(4).unwrap(), 2).unwrap_err();
        assert!(matches!(err, Error::NotSimple { k: 2, .. }));
    }

    #[test]
    fn asymmetric_matrix_rejected() {
        let m = SymMatrix::new(2, vec![0.0f64, 1.0, 2.0, 0.0]);
        assert!(matches!(m, Err(Error::NotSymmetric { .. })));
    }

    #[test]
    fn moment_identity() {
        let g = fan(30).unwrap();
        assert_eq!(moment_identity_residual(&g, 1, 0, 0).unwrap(), 0.0);
        assert!(moment_identity_residual(&g, 1, 1, 0).unwrap() < 1e-9);
        assert!(moment_identity_residual(&g, 1, 3, 0).unwrap() < 1e-7);
        assert!(moment_identity_residual(&g, 2, 6, 4).unwrap() < 1e-7);
    }

    #[test]
    fn interlacing_on_hub_deletion() {
        let g = bridged_double_fan(12).unwrap();
        let del = VertexSet::from_vertices(g.n(), [0]).unwrap();
        let r = check_interlacing(&g, &del).unwrap();
        assert!(r.holds, "{r:?}");
    }
}
