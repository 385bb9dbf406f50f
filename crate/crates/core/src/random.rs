//! Seeded random ensembles of states and operators.
//!
//! Every draw is a pure function of a 64-bit seed. Repeated trials derive
//! their own seeds through [`substream_seed`], so trials can run in any order
//! (or in parallel) without sharing generator state.

use alloc::vec::Vec;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::model::{DensityState, Operator};

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// Seed for trial `k` of a run started from `seed`.
pub fn substream_seed(seed: u64, k: u64) -> u64 {
    seed ^ (k.wrapping_add(1)).wrapping_mul(GOLDEN_GAMMA)
}

/// Generator used for all seeded draws.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ensemble {
    HaarPure,
    HsMixed,
    GinibreOperator,
    HermitianGue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomSpec {
    pub seed: u64,
    pub dim: usize,
    pub ensemble: Ensemble,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Sample {
    State(DensityState),
    Operator(Operator),
}

impl Sample {
    pub fn into_state(self) -> Option<DensityState> {
        match self {
            Sample::State(s) => Some(s),
            Sample::Operator(_) => None,
        }
    }

    pub fn into_operator(self) -> Option<Operator> {
        match self {
            Sample::Operator(o) => Some(o),
            Sample::State(_) => None,
        }
    }
}

pub fn sample(spec: &RandomSpec) -> Result<Sample> {
    if spec.dim < 2 {
        return Err(Error::InvalidSpec(alloc::format!("dim must be >= 2, got {}", spec.dim)));
    }
    let mut rng = rng_from_seed(spec.seed);
    let d = spec.dim;
    Ok(match spec.ensemble {
        Ensemble::HaarPure => Sample::State(haar_pure(&mut rng, d)?),
        Ensemble::HsMixed => Sample::State(hs_mixed(&mut rng, d)?),
        Ensemble::GinibreOperator => Sample::Operator(ginibre(&mut rng, d)),
        Ensemble::HermitianGue => Sample::Operator(gue(&mut rng, d)),
    })
}

/// Complex Gaussian with independent N(0,1) parts.
pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im)
}

pub fn gaussian_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| complex_gaussian(rng))
}

pub fn haar_pure<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Result<DensityState> {
    let v: Vec<Complex64> = (0..dim).map(|_| complex_gaussian(rng)).collect();
    DensityState::pure(&v)
}

/// Hilbert-Schmidt mixed state `G G' / Tr(G G')`.
pub fn hs_mixed<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Result<DensityState> {
    mixed_with_rank(rng, dim, dim)
}

/// `G G' / Tr(G G')` with `G` of shape `dim x rank`; the result has rank
/// `min(dim, rank)` almost surely.
pub fn mixed_with_rank<R: Rng + ?Sized>(rng: &mut R, dim: usize, rank: usize) -> Result<DensityState> {
    if rank == 0 || dim == 0 {
        return Err(Error::InvalidSpec("rank and dim must be positive".into()));
    }
    let g = gaussian_matrix(rng, dim, rank);
    let w = g.mat_mul(&g.adjoint())?;
    let tr = w.trace()?.re;
    let rho = w.scale(Complex64::new(1.0 / tr, 0.0)).hermitian_part()?;
    DensityState::new(rho)
}

pub fn ginibre<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Operator {
    Operator::from_square(gaussian_matrix(rng, dim, dim))
}

/// `(G + G') / 2`
pub fn gue<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Operator {
    let g = gaussian_matrix(rng, dim, dim);
    Operator::from_square(g.hermitian_part().expect("square by construction"))
}
