//! Numerics for variance-based uncertainty relations of Hermitian and
//! non-Hermitian operators.
//!
//! The crate is `no_std` (it needs `alloc`). Layers, bottom up:
//!
//! * [`matrix`], [`eigen`]: dense complex matrices and a Hermitian eigensolver.
//! * [`model`], [`random`]: validated states and operators, spin/ladder/boson
//!   constructors, seeded random ensembles.
//! * [`moments`]: expectations, variances, the state-weighted form
//!   `Tr(rho A'B)` and generalized brackets `A'B -/+ B'A`.
//! * [`bounds`]: scalar relations evaluated into [`BoundReport`]s.
//! * [`gram`]: Gram matrices, information matrices, operator Gram-Schmidt and
//!   the decomposition `D = sum_k V_k`.
//! * [`experiments`]: the spin-1 sweeps and the property audit.
#![no_std]

extern crate alloc;

pub mod bounds;
pub mod eigen;
pub mod error;
pub mod experiments;
pub mod gram;
pub mod matrix;
pub mod model;
pub mod moments;
pub mod random;

pub use bounds::{BoundOptions, BoundReport, Component, Sign};
pub use eigen::{hermitian_eigensystem, rank_with_tolerance, EigenSystem};
pub use error::{Error, Result};
pub use gram::{GramDecomposition, GramMatrix, OrthoOperatorSet, PhaseSearch, Phases};
pub use matrix::ComplexMatrix;
pub use model::{DensityState, Operator};
pub use num_complex::Complex64;
pub use random::{Ensemble, RandomSpec};
