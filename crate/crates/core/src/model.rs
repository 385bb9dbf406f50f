//! Validated states and operators, plus constructors for the concrete systems
//! used throughout: spin-j, qubit ladder operators, truncated bosonic modes and
//! matrix-unit bases.

use alloc::format;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // shadowed by inherent methods whenever std is linked
use num_traits::Float;

use crate::eigen::{hermitian_eigensystem, RANK_TOL};
use crate::error::{Error, Result};
use crate::matrix::{vector_norm, ComplexMatrix, HERMITIAN_TOL};

/// Default Fock-space truncation for bosonic modes.
pub const DEFAULT_CUTOFF: usize = 8;

/// A square operator, Hermitian or not.
#[derive(Debug, Clone, PartialEq)]
pub struct Operator {
    matrix: ComplexMatrix,
    hermitian: bool,
}

impl Operator {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        Self::with_tolerance(matrix, HERMITIAN_TOL)
    }

    pub fn with_tolerance(matrix: ComplexMatrix, tol: f64) -> Result<Self> {
        matrix.require_square()?;
        let hermitian = matrix.is_hermitian(tol);
        Ok(Self { matrix, hermitian })
    }

    /// Wraps a matrix already known to be square.
    pub(crate) fn from_square(matrix: ComplexMatrix) -> Self {
        debug_assert!(matrix.is_square());
        let hermitian = matrix.is_hermitian(HERMITIAN_TOL);
        Self { matrix, hermitian }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_square(ComplexMatrix::identity(dim))
    }

    pub fn zero(dim: usize) -> Self {
        Self::from_square(ComplexMatrix::zeros(dim, dim))
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian
    }

    pub fn adjoint(&self) -> Self {
        Self {
            matrix: self.matrix.adjoint(),
            hermitian: self.hermitian,
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::from_square(self.matrix.scale(s))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self::from_square(self.matrix.add(&other.matrix)?))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Ok(Self::from_square(self.matrix.sub(&other.matrix)?))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(Self::from_square(self.matrix.mat_mul(&other.matrix)?))
    }

    /// `sum_k c_k O_k`; all operators must share a dimension.
    pub fn linear_combination(terms: &[(Complex64, &Operator)]) -> Result<Self> {
        let (first, rest) = terms
            .split_first()
            .ok_or_else(|| Error::InvalidParameters("empty linear combination".into()))?;
        let mut acc = first.1.matrix.scale(first.0);
        for (c, op) in rest {
            acc = acc.add(&op.matrix.scale(*c))?;
        }
        Ok(Self::from_square(acc))
    }
}

/// A validated density matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityState {
    rho: ComplexMatrix,
    rank: usize,
}

impl DensityState {
    /// Validates Hermiticity, positivity and unit trace at the default tolerance.
    pub fn new(rho: ComplexMatrix) -> Result<Self> {
        Self::with_tolerance(rho, HERMITIAN_TOL)
    }

    pub fn with_tolerance(rho: ComplexMatrix, tol: f64) -> Result<Self> {
        let d = rho.require_square()?;
        if d < 1 {
            return Err(Error::InvalidState("empty matrix".into()));
        }
        let defect = rho.hermiticity_defect();
        if defect > tol {
            return Err(Error::InvalidState(format!(
                "not Hermitian (relative defect {defect:e} > {tol:e})"
            )));
        }
        let tr = rho.trace()?;
        if (tr.re - 1.0).abs() > tol || tr.im.abs() > tol {
            return Err(Error::InvalidState(format!(
                "trace is {} {:+}i, expected 1",
                tr.re, tr.im
            )));
        }
        let eig = hermitian_eigensystem(&rho, tol)?;
        if eig.min() < -tol {
            return Err(Error::InvalidState(format!(
                "not positive semidefinite (min eigenvalue {:e})",
                eig.min()
            )));
        }
        let cutoff = RANK_TOL * eig.max().max(1.0);
        let rank = eig.values.iter().filter(|&&x| x > cutoff).count();
        Ok(Self { rho, rank })
    }

    /// `|psi><psi| / <psi|psi>`
    pub fn pure(amplitudes: &[Complex64]) -> Result<Self> {
        if amplitudes.len() < 2 {
            return Err(Error::InvalidParameters(format!(
                "state vector needs length >= 2, got {}",
                amplitudes.len()
            )));
        }
        let norm = vector_norm(amplitudes);
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::ZeroVector);
        }
        let psi: Vec<Complex64> = amplitudes.iter().map(|z| z / norm).collect();
        let rho = ComplexMatrix::outer(&psi, &psi);
        Ok(Self { rho, rank: 1 })
    }

    /// Pure state from real amplitudes.
    pub fn pure_real(amplitudes: &[f64]) -> Result<Self> {
        let v: Vec<Complex64> = amplitudes.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::pure(&v)
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        let rho = ComplexMatrix::identity(dim).scale(Complex64::new(1.0 / dim as f64, 0.0));
        Self { rho, rank: dim }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.rho
    }

    pub fn dim(&self) -> usize {
        self.rho.rows()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_pure(&self) -> bool {
        self.rank == 1
    }

    pub(crate) fn require_dim(&self, op: &Operator) -> Result<()> {
        if op.dim() == self.dim() {
            Ok(())
        } else {
            Err(Error::shape((self.dim(), self.dim()), (op.dim(), op.dim())))
        }
    }
}

/// `J_x, J_y, J_z` for spin `j = two_j / 2` with hbar = 1, basis ordered
/// `m = j, j-1, ..., -j`.
pub fn spin_operators(two_j: usize) -> Result<(Operator, Operator, Operator)> {
    if two_j < 1 {
        return Err(Error::InvalidSpin(two_j));
    }
    let d = two_j + 1;
    let j = two_j as f64 / 2.0;
    let m = |k: usize| j - k as f64;
    // <m+1|J+|m> = sqrt(j(j+1) - m(m+1)); row k-1 holds m(k)+1.
    let jplus = ComplexMatrix::from_fn(d, d, |r, c| {
        if c == r + 1 {
            let mc = m(c);
            Complex64::new((j * (j + 1.0) - mc * (mc + 1.0)).sqrt(), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let jminus = jplus.adjoint();
    let jx = jplus.add(&jminus)?.scale(Complex64::new(0.5, 0.0));
    let jy = jplus.sub(&jminus)?.scale(Complex64::new(0.0, -0.5));
    let jz = ComplexMatrix::from_diag(&(0..d).map(m).collect::<Vec<_>>());
    Ok((
        Operator::from_square(jx),
        Operator::from_square(jy),
        Operator::from_square(jz),
    ))
}

/// Qubit raising/lowering operators in the basis `(e, g)`:
/// `sigma+ = |e><g|`, `sigma- = |g><e|`.
pub fn ladder_operators() -> (Operator, Operator) {
    let plus = ComplexMatrix::from_fn(2, 2, |i, j| {
        Complex64::new(if i == 0 && j == 1 { 1.0 } else { 0.0 }, 0.0)
    });
    let minus = plus.adjoint();
    (Operator::from_square(plus), Operator::from_square(minus))
}

/// Pauli matrices in the basis `(e, g)` = `(|0>, |1>)`.
pub fn pauli() -> (Operator, Operator, Operator) {
    let z0 = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    let mk = |a, b, c, d| Operator::from_square(ComplexMatrix::new(2, 2, alloc::vec![a, b, c, d]).unwrap());
    (mk(z0, one, one, z0), mk(z0, -i, i, z0), mk(one, z0, z0, -one))
}

/// Annihilation operator on the Fock space truncated to levels `0..cutoff`.
///
/// Only the retained subspace is represented, so `[a, a'] = I` fails in the
/// last diagonal entry (it equals `1 - cutoff` there).
pub fn boson_annihilator(cutoff: usize) -> Result<Operator> {
    if cutoff < 2 {
        return Err(Error::InvalidCutoff(cutoff));
    }
    Ok(Operator::from_square(ComplexMatrix::from_fn(cutoff, cutoff, |r, c| {
        if c == r + 1 {
            Complex64::new((c as f64).sqrt(), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })))
}

/// Kronecker product, left factor outer.
pub fn tensor_product(a: &Operator, b: &Operator) -> Operator {
    Operator::from_square(a.matrix.kron(&b.matrix))
}

/// The `d^2` matrix units `E_ij = |i><j|` in row-major order.
pub fn matrix_units(dim: usize) -> Vec<Operator> {
    let mut out = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            out.push(Operator::from_square(ComplexMatrix::from_fn(dim, dim, |r, c| {
                Complex64::new(if r == i && c == j { 1.0 } else { 0.0 }, 0.0)
            })));
        }
    }
    out
}

/// Computational basis vector.
pub fn basis_vector(dim: usize, k: usize) -> Vec<Complex64> {
    (0..dim)
        .map(|i| Complex64::new(if i == k { 1.0 } else { 0.0 }, 0.0))
        .collect()
}
