//! Hermitian eigensolver (cyclic complex Jacobi) and tolerance-aware rank.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // shadowed by inherent methods whenever std is linked
use num_traits::Float;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// Default relative threshold used by [`rank_with_tolerance`].
pub const RANK_TOL: f64 = 1e-9;

const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone)]
pub struct EigenSystem {
    /// Ascending.
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors stored as columns, aligned with `values`.
    pub vectors: ComplexMatrix,
}

impl EigenSystem {
    pub fn min(&self) -> f64 {
        self.values[0]
    }

    pub fn max(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    /// `V diag(values) V'`
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.values.len();
        ComplexMatrix::from_fn(n, n, |i, j| {
            (0..n)
                .map(|k| self.vectors.get(i, k) * self.values[k] * self.vectors.get(j, k).conj())
                .sum()
        })
    }
}

/// Eigen-decomposes a Hermitian matrix.
///
/// Fails with [`Error::NotHermitian`] when `||h - h'||_F > tol * max(1, ||h||_F)`.
/// The Hermitian part of `h` is what actually gets diagonalized.
pub fn hermitian_eigensystem(h: &ComplexMatrix, tol: f64) -> Result<EigenSystem> {
    let n = h.require_square()?;
    let defect = h.hermiticity_defect();
    if defect > tol {
        return Err(Error::NotHermitian { defect, tol });
    }
    let mut a = h.hermitian_part()?;
    let mut v = ComplexMatrix::identity(n);

    let scale = a.frobenius_norm();
    if scale > 0.0 {
        for _ in 0..MAX_SWEEPS {
            let off: f64 = (0..n)
                .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
                .map(|(i, j)| a.get(i, j).norm_sqr())
                .sum::<f64>()
                .sqrt();
            if off <= f64::EPSILON * scale {
                break;
            }
            for p in 0..n {
                for q in p + 1..n {
                    rotate(&mut a, &mut v, p, q);
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();
    order.sort_by(|&i, &j| diag[i].total_cmp(&diag[j]));
    let values = order.iter().map(|&i| diag[i]).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, k| v.get(i, order[k]));
    Ok(EigenSystem { values, vectors })
}

/// One Jacobi rotation zeroing `a[p][q]`.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a.get(p, q);
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let n = a.rows();
    let app = a.get(p, p).re;
    let aqq = a.get(q, q).re;
    // Phase making the pivot real, then a real symmetric rotation.
    let phase = apq.conj() / mag;
    let tau = (aqq - app) / (2.0 * mag);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    // U restricted to (p, q): [[c, s], [-s*phase, c*phase]]
    let u_pp = Complex64::new(c, 0.0);
    let u_pq = Complex64::new(s, 0.0);
    let u_qp = phase * (-s);
    let u_qq = phase * c;

    // A <- A U
    for k in 0..n {
        let akp = a.get(k, p);
        let akq = a.get(k, q);
        a.set(k, p, akp * u_pp + akq * u_qp);
        a.set(k, q, akp * u_pq + akq * u_qq);
    }
    // A <- U' A
    for k in 0..n {
        let apk = a.get(p, k);
        let aqk = a.get(q, k);
        a.set(p, k, u_pp.conj() * apk + u_qp.conj() * aqk);
        a.set(q, k, u_pq.conj() * apk + u_qq.conj() * aqk);
    }
    a.set(p, q, Complex64::new(0.0, 0.0));
    a.set(q, p, Complex64::new(0.0, 0.0));
    let dp = a.get(p, p).re;
    let dq = a.get(q, q).re;
    a.set(p, p, Complex64::new(dp, 0.0));
    a.set(q, q, Complex64::new(dq, 0.0));

    for k in 0..n {
        let vkp = v.get(k, p);
        let vkq = v.get(k, q);
        v.set(k, p, vkp * u_pp + vkq * u_qp);
        v.set(k, q, vkp * u_pq + vkq * u_qq);
    }
}

/// Number of eigenvalues above `tol * max(1, largest eigenvalue)`.
pub fn rank_with_tolerance(g: &ComplexMatrix, tol: f64) -> Result<usize> {
    let eig = hermitian_eigensystem(g, crate::matrix::HERMITIAN_TOL)?;
    let cutoff = tol * eig.max().max(1.0);
    Ok(eig.values.iter().filter(|&&x| x > cutoff).count())
}
