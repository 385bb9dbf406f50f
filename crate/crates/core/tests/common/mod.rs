//! Reference computations on nalgebra matrices, written directly from the
//! definitions and shared by the integration tests.
#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex64;
use ur_core::random::{ginibre, gue, mixed_with_rank, rng_from_seed};
use ur_core::{ComplexMatrix, DensityState, Operator};

pub type M = DMatrix<Complex64>;

pub fn to_na(m: &ComplexMatrix) -> M {
    M::from_row_slice(m.rows(), m.cols(), m.data())
}

pub fn op(o: &Operator) -> M {
    to_na(o.matrix())
}

pub fn state(s: &DensityState) -> M {
    to_na(s.matrix())
}

/// `Tr(rho A'B)`
pub fn form(rho: &M, a: &M, b: &M) -> Complex64 {
    (rho * a.adjoint() * b).trace()
}

pub fn checked(rho: &M, a: &M) -> M {
    let mean = (rho * a).trace();
    a - M::identity(a.nrows(), a.ncols()) * mean
}

pub fn variance(rho: &M, a: &M) -> f64 {
    let c = checked(rho, a);
    form(rho, &c, &c).re
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn eigenvalues(h: &M) -> Vec<f64> {
    let mut v: Vec<f64> = h.clone().symmetric_eigenvalues().iter().copied().collect();
    v.sort_by(f64::total_cmp);
    v
}

pub struct Draw {
    pub rho: DensityState,
    pub a: Operator,
    pub b: Operator,
    pub o: Operator,
    pub obs: Vec<Operator>,
}

/// Mixed state of random rank, two Ginibre operators, a Ginibre information
/// operator and `n_obs` GUE observables.
pub fn draw(seed: u64, dim: usize, n_obs: usize) -> Draw {
    use rand::Rng;
    let mut rng = rng_from_seed(seed);
    let rank = rng.random_range(1..=dim);
    Draw {
        rho: mixed_with_rank(&mut rng, dim, rank).unwrap(),
        a: ginibre(&mut rng, dim),
        b: ginibre(&mut rng, dim),
        o: ginibre(&mut rng, dim),
        obs: (0..n_obs).map(|_| gue(&mut rng, dim)).collect(),
    }
}
