//! Dense symmetric kernels: Householder reduction to tridiagonal form,
//! implicit QL on the tridiagonal, inverse iteration for single vectors.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Householder reduction of a row-major symmetric matrix.
///
/// On return `d` is the diagonal and `e[i]` the entry `T[i][i-1]`
/// (`e[0] = 0`). The reflectors stay in the lower rows of `a` with their
/// scale in `h`, for [`Tridiagonal::back_transform`].
pub struct Tridiagonal<T> {
    pub n: usize,
    pub d: Vec<T>,
    pub e: Vec<T>,
    reflectors: Vec<T>,
    h: Vec<T>,
}

impl<T: Real> Tridiagonal<T> {
    pub fn reduce(mut a: Vec<T>, n: usize) -> Self {
        let zero = T::zero();
        let mut d = vec![zero; n];
        let mut e = vec![zero; n];
        let mut hs = vec![zero; n];
        let mut q = vec![zero; n];
        for i in (1..n).rev() {
            let l = i - 1;
            let row_i = i * n;
            if l == 0 {
                e[i] = a[row_i];
                continue;
            }
            let scale = (0..=l).fold(zero, |s, k| s + a[row_i + k].abs());
            if scale == zero {
                e[i] = a[row_i + l];
                continue;
            }
            let mut h = zero;
            for k in 0..=l {
                a[row_i + k] = a[row_i + k] / scale;
                h = h + a[row_i + k] * a[row_i + k];
            }
            let f = a[row_i + l];
            let g = if f >= zero { -h.sqrt() } else { h.sqrt() };
            e[i] = scale * g;
            h = h - f * g;
            a[row_i + l] = f - g;
            hs[i] = h;
            // q = A u / h on the leading block, then q -= K u
            let (head, tail) = a.split_at_mut(row_i);
            let u = &tail[..=l];
            let mut ff = zero;
            for j in 0..=l {
                let row = &head[j * n..j * n + l + 1];
                let s = row.iter().zip(u).fold(zero, |s, (&x, &y)| s + x * y);
                q[j] = s / h;
                ff = ff + q[j] * u[j];
            }
            let hh = ff / (h + h);
            for j in 0..=l {
                q[j] = q[j] - hh * u[j];
            }
            for j in 0..=l {
                let (fj, gj) = (u[j], q[j]);
                let row = &mut head[j * n..j * n + l + 1];
                for ((x, &uk), &qk) in row.iter_mut().zip(u).zip(&q[..=l]) {
                    *x = *x - (fj * qk + gj * uk);
                }
            }
        }
        for i in 0..n {
            d[i] = a[i * n + i];
        }
        Self { n, d, e, reflectors: a, h: hs }
    }

    /// Maps an eigenvector of the tridiagonal back to the original basis.
    pub fn back_transform(&self, z: &mut [T]) {
        let n = self.n;
        for i in 2..n {
            let h = self.h[i];
            if h == T::zero() {
                continue;
            }
            let u = &self.reflectors[i * n..i * n + i];
            let s = u.iter().zip(z.iter()).fold(T::zero(), |s, (&a, &b)| s + a * b) / h;
            for (zk, &uk) in z.iter_mut().zip(u) {
                *zk = *zk - s * uk;
            }
        }
    }

    /// Eigenvalues by implicit QL, sorted non-increasing.
    pub fn eigenvalues(&self, max_iter: usize) -> Result<Vec<T>> {
        let n = self.n;
        let mut d = self.d.clone();
        let mut e = vec![T::zero(); n];
        e[..n.saturating_sub(1)].copy_from_slice(&self.e[1..]);
        ql_implicit(&mut d, &mut e, max_iter)?;
        d.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
        Ok(d)
    }

    /// Eigenvector of the tridiagonal for a computed eigenvalue `mu`.
    pub fn inverse_iteration(&self, mu: T, iterations: usize) -> Vec<T> {
        let n = self.n;
        let eps = T::epsilon();
        let norm = (0..n).fold(T::zero(), |m, i| {
            let off = if i + 1 < n { self.e[i + 1].abs() } else { T::zero() };
            m.max(self.d[i].abs() + self.e[i].abs() + off)
        });
        let tiny = eps * norm.max(T::one());
        // LU with partial pivoting of T - mu I: rows keep up to three entries
        let mut u0 = vec![T::zero(); n];
        let mut u1 = vec![T::zero(); n];
        let mut u2 = vec![T::zero(); n];
        let mut mult = vec![T::zero(); n];
        let mut swapped = vec![false; n];
        let mut diag = self.d[0] - mu;
        let mut sup = if n > 1 { self.e[1] } else { T::zero() };
        for i in 0..n {
            if i + 1 == n {
                u0[i] = if diag.abs() < tiny { tiny } else { diag };
                break;
            }
            let below = self.e[i + 1];
            let next_diag = self.d[i + 1] - mu;
            let next_sup = if i + 2 < n { self.e[i + 2] } else { T::zero() };
            if below.abs() > diag.abs() {
                swapped[i] = true;
                u0[i] = below;
                u1[i] = next_diag;
                u2[i] = next_sup;
                let m = diag / below;
                mult[i] = m;
                diag = sup - m * next_diag;
                sup = -m * next_sup;
            } else {
                let piv = if diag.abs() < tiny { tiny } else { diag };
                u0[i] = piv;
                u1[i] = sup;
                u2[i] = T::zero();
                let m = below / piv;
                mult[i] = m;
                diag = next_diag - m * sup;
                sup = next_sup;
            }
        }
        let mut x: Vec<T> = (0..n).map(|i| T::one() + T::cast(0.1 * ((i as f64) * 0.7548776662).sin())).collect();
        for _ in 0..iterations {
            // forward: apply row swaps and multipliers
            for i in 0..n.saturating_sub(1) {
                if swapped[i] {
                    x.swap(i, i + 1);
                }
                x[i + 1] = x[i + 1] - mult[i] * x[i];
            }
            for i in (0..n).rev() {
                let mut s = x[i];
                if i + 1 < n {
                    s = s - u1[i] * x[i + 1];
                }
                if i + 2 < n {
                    s = s - u2[i] * x[i + 2];
                }
                x[i] = s / u0[i];
            }
            let norm = x.iter().fold(T::zero(), |s, &v| s + v * v).sqrt();
            for v in &mut x {
                *v = *v / norm;
            }
        }
        x
    }
}

/// Implicit QL with Wilkinson-type shifts on diagonal `d` and
/// subdiagonal `e` (`e[i]` couples `i` and `i+1`).
fn ql_implicit<T: Real>(d: &mut [T], e: &mut [T], max_iter: usize) -> Result<()> {
    let n = d.len();
    let zero = T::zero();
    let one = T::one();
    let two = one + one;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= T::epsilon() * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > max_iter {
                return Err(Error::NoConvergence(max_iter));
            }
            let mut g = (d[l + 1] - d[l]) / (two * e[l]);
            let mut r = g.hypot(one);
            g = d[m] - d[l] + e[l] / (g + if g >= zero { r.abs() } else { -r.abs() });
            let (mut s, mut c, mut p) = (one, one, zero);
            let mut underflow = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == zero {
                    d[i + 1] = d[i + 1] - p;
                    e[m] = zero;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + two * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] = d[l] - p;
            e[l] = g;
            e[m] = zero;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let t = Tridiagonal::reduce(vec![2.0f64, 1.0, 1.0, 2.0], 2);
        let v = t.eigenvalues(50).unwrap();
        assert!((v[0] - 3.0).abs() < 1e-14 && (v[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn dense_matrix_values_and_vector() {
        // two 2x2 blocks: spectra {3, 2} and 2.5 ± sqrt(1.25)
        #[rustfmt::skip]
        let a = vec![
            2.5, -0.5, 0.0, 0.0,
            -0.5, 2.5, 0.0, 0.0,
            0.0, 0.0, 3.5, 0.5,
            0.0, 0.0, 0.5, 1.5,
        ];
        let t = Tridiagonal::reduce(a.clone(), 4);
        let v = t.eigenvalues(50).unwrap();
        assert!((v[0] - (2.5 + 1.25f64.sqrt())).abs() < 1e-12, "{v:?}");
        assert!((v[1] - 3.0).abs() < 1e-12 && (v[2] - 2.0).abs() < 1e-12);
        let mut z = t.inverse_iteration(v[0], 3);
        t.back_transform(&mut z);
        let ax: Vec<f64> = (0..4).map(|i| (0..4).map(|j| a[i * 4 + j] * z[j]).sum()).collect();
        for i in 0..4 {
            assert!((ax[i] - v[0] * z[i]).abs() < 1e-12);
        }
    }
}
