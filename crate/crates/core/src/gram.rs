//! Matrix-level structure: the Gram matrix `D` of checked observables, the
//! information matrices `V`, Gram-Schmidt orthogonalization of operator sets
//! under the state-weighted form, and the decomposition `D = sum_k V_k`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;

use crate::bounds::{BoundOptions, BoundReport};
use crate::eigen::{hermitian_eigensystem, rank_with_tolerance, RANK_TOL};
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::model::{matrix_units, DensityState, Operator};
use crate::moments::{checked, form, second_origin_moment};
use crate::random::rng_from_seed;

/// Default drop threshold for orthogonalization, relative to the largest
/// basis norm.
pub const DEFAULT_DROP: f64 = 1e-10;

/// Projection coefficients above this trigger a second orthogonalization pass.
const REORTH_COEFF: f64 = 10.0;

/// A second pass also runs when a candidate loses more than this fraction of
/// its norm to projections.
const REORTH_CANCELLATION: f64 = 1e-2;

#[derive(Debug, Clone)]
pub struct GramMatrix {
    pub d_matrix: ComplexMatrix,
    /// Mean-subtracted observables, in input order.
    pub observables: Vec<Operator>,
}

impl GramMatrix {
    pub fn min_eigenvalue(&self) -> Result<f64> {
        Ok(hermitian_eigensystem(&self.d_matrix, 1e-10)?.min())
    }
}

/// Matrix of form values `M(m, n) = form(rho, ops[m], ops[n])`, Hermitian by
/// construction.
pub fn metric_matrix(rho: &DensityState, ops: &[Operator]) -> Result<ComplexMatrix> {
    let n = ops.len();
    let mut m = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        m.set(i, i, Complex64::new(second_origin_moment(rho, &ops[i])?, 0.0));
        for j in i + 1..n {
            let z = form(rho, &ops[i], &ops[j])?;
            m.set(i, j, z);
            m.set(j, i, z.conj());
        }
    }
    Ok(m)
}

/// `D(m, n) = <A~_m' A~_n>`.
pub fn gram_matrix(rho: &DensityState, observables: &[Operator]) -> Result<GramMatrix> {
    if observables.is_empty() {
        return Err(Error::InvalidParameters("need at least one observable".into()));
    }
    let checked_obs = observables
        .iter()
        .map(|a| checked(rho, a))
        .collect::<Result<Vec<_>>>()?;
    let d_matrix = metric_matrix(rho, &checked_obs)?;
    Ok(GramMatrix {
        d_matrix,
        observables: checked_obs,
    })
}

/// `V(m, n) = <A~_m' O><O' A~_n> / <O'O>` for already-checked observables.
fn v_from_checked(rho: &DensityState, checked_obs: &[Operator], o: &Operator, norm: f64) -> Result<ComplexMatrix> {
    // w_m = <A~_m' O>
    let w = checked_obs
        .iter()
        .map(|a| form(rho, a, o))
        .collect::<Result<Vec<_>>>()?;
    let n = w.len();
    Ok(ComplexMatrix::from_fn(n, n, |i, j| w[i] * w[j].conj() / norm))
}

pub fn v_matrix(
    rho: &DensityState,
    observables: &[Operator],
    o: &Operator,
    degeneracy_tol: f64,
) -> Result<ComplexMatrix> {
    let norm = second_origin_moment(rho, o)?;
    if norm <= degeneracy_tol {
        return Err(Error::DegenerateInformationOperator {
            norm,
            tol: degeneracy_tol,
        });
    }
    let checked_obs = observables
        .iter()
        .map(|a| checked(rho, a))
        .collect::<Result<Vec<_>>>()?;
    v_from_checked(rho, &checked_obs, o, norm)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsdOrder {
    pub holds: bool,
    pub min_eigenvalue: f64,
}

/// Whether `d - v` is positive semidefinite: its smallest eigenvalue must be
/// at least `-tol * max(1, max |eig(d)|)`.
pub fn psd_order_check(d: &ComplexMatrix, v: &ComplexMatrix, tol: f64) -> Result<PsdOrder> {
    if d.rows() != v.rows() || d.cols() != v.cols() {
        return Err(Error::shape((d.rows(), d.cols()), (v.rows(), v.cols())));
    }
    let d_eig = hermitian_eigensystem(d, tol)?;
    if !v.is_hermitian(tol) {
        return Err(Error::NotHermitian {
            defect: v.hermiticity_defect(),
            tol,
        });
    }
    let diff = hermitian_eigensystem(&d.sub(v)?, tol)?;
    let scale = d_eig.min().abs().max(d_eig.max().abs()).max(1.0);
    let min_eigenvalue = diff.min();
    Ok(PsdOrder {
        holds: min_eigenvalue >= -tol * scale,
        min_eigenvalue,
    })
}

/// Operators that are pairwise orthogonal under `form(rho, ., .)`, each with
/// nonzero norm.
#[derive(Debug, Clone)]
pub struct OrthoOperatorSet {
    pub operators: Vec<Operator>,
    /// `<O_k' O_k>`
    pub norms: Vec<f64>,
    pub r: usize,
    pub source: String,
    /// Absolute norm threshold below which candidates were dropped.
    pub drop_threshold: f64,
}

/// Classical Gram-Schmidt of `basis` under `form(rho, ., .)`.
///
/// Candidates whose norm falls to `rel_drop * max basis norm` or below are
/// discarded. A second projection pass runs when a coefficient exceeds 10 in
/// magnitude or when most of the candidate's norm cancels. The number of
/// retained operators is checked against the rank of the basis metric matrix.
pub fn schmidt_orthogonalize(rho: &DensityState, basis: &[Operator], rel_drop: f64) -> Result<OrthoOperatorSet> {
    orthogonalize(rho, basis, rel_drop, format!("custom basis ({} operators)", basis.len()))
}

/// [`schmidt_orthogonalize`] over the `d^2` matrix units with the default
/// drop threshold.
pub fn orthogonalize_matrix_units(rho: &DensityState) -> Result<OrthoOperatorSet> {
    let d = rho.dim();
    orthogonalize(rho, &matrix_units(d), DEFAULT_DROP, format!("matrix units (d = {d})"))
}

fn orthogonalize(rho: &DensityState, basis: &[Operator], rel_drop: f64, source: String) -> Result<OrthoOperatorSet> {
    if basis.is_empty() {
        return Err(Error::EmptyBasis);
    }
    let metric = metric_matrix(rho, basis)?;
    let max_norm = (0..basis.len()).map(|i| metric.get(i, i).re).fold(0.0, f64::max);
    let drop_threshold = rel_drop * max_norm;

    let mut operators: Vec<Operator> = Vec::new();
    let mut norms: Vec<f64> = Vec::new();
    for (k, v) in basis.iter().enumerate() {
        let v_norm = metric.get(k, k).re;
        if v_norm <= drop_threshold {
            continue;
        }
        let (mut cand, max_coef) = project_out(rho, v, &operators, &norms)?;
        let mut cand_norm = second_origin_moment(rho, &cand)?;
        if max_coef > REORTH_COEFF || cand_norm < REORTH_CANCELLATION * v_norm {
            cand = project_out(rho, &cand, &operators, &norms)?.0;
            cand_norm = second_origin_moment(rho, &cand)?;
        }
        if cand_norm > drop_threshold {
            operators.push(cand);
            norms.push(cand_norm);
        }
    }

    let r = operators.len();
    let rank = rank_with_tolerance(&metric, RANK_TOL)?;
    if rank != r {
        return Err(Error::NumericalInconsistency(format!(
            "orthogonalization kept {r} operators but the basis metric has rank {rank}"
        )));
    }
    Ok(OrthoOperatorSet {
        operators,
        norms,
        r,
        source,
        drop_threshold,
    })
}

/// `v - sum_j (form(O_j, v) / norm_j) O_j`, with all coefficients taken from
/// the input `v`. Returns the largest coefficient magnitude as well.
fn project_out(rho: &DensityState, v: &Operator, ortho: &[Operator], norms: &[f64]) -> Result<(Operator, f64)> {
    let mut acc = v.matrix().clone();
    let mut max_coef = 0.0f64;
    for (o, &n) in ortho.iter().zip(norms) {
        let coef = form(rho, o, v)? / n;
        max_coef = max_coef.max(coef.norm());
        acc = acc.sub(&o.matrix().scale(coef))?;
    }
    Ok((Operator::new(acc)?, max_coef))
}

#[derive(Debug, Clone)]
pub struct GramDecomposition {
    pub d_matrix: ComplexMatrix,
    pub v_matrices: Vec<ComplexMatrix>,
    /// `||D - sum_k V_k||_F`
    pub closure_residual: f64,
}

impl GramDecomposition {
    /// `sum_{j < k} V_j`
    pub fn partial_sum(&self, k: usize) -> ComplexMatrix {
        let n = self.d_matrix.rows();
        self.v_matrices
            .iter()
            .take(k)
            .fold(ComplexMatrix::zeros(n, n), |acc, v| acc.add(v).expect("same shape"))
    }
}

/// `D = sum_k V_k` over the information operators of `theta`.
pub fn uncertainty_equality(
    rho: &DensityState,
    observables: &[Operator],
    theta: &OrthoOperatorSet,
) -> Result<GramDecomposition> {
    let gram = gram_matrix(rho, observables)?;
    let v_matrices = theta
        .operators
        .iter()
        .zip(&theta.norms)
        .map(|(o, &n)| v_from_checked(rho, &gram.observables, o, n))
        .collect::<Result<Vec<_>>>()?;
    let mut decomposition = GramDecomposition {
        d_matrix: gram.d_matrix,
        v_matrices,
        closure_residual: 0.0,
    };
    decomposition.closure_residual = decomposition
        .d_matrix
        .sub(&decomposition.partial_sum(theta.r))?
        .frobenius_norm();
    Ok(decomposition)
}

#[derive(Debug, Clone, PartialEq)]
pub struct PhaseSearch {
    /// Random starting points in addition to all-zero phases and `warm_starts`.
    pub restarts: usize,
    pub seed: u64,
    pub warm_starts: Vec<Vec<f64>>,
}

impl Default for PhaseSearch {
    fn default() -> Self {
        Self {
            restarts: 8,
            seed: 0,
            warm_starts: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Phases {
    Fixed(Vec<f64>),
    Optimize(PhaseSearch),
}

/// Sum of variances against the `k`-term bound
/// `X'(sum_{j<=k} V_j)X - sum_{m<n} 2 Re(e^{i(theta_n - theta_m)} D(m, n))`
/// with `X_m = e^{i theta_m}`.
///
/// Chosen phases are reported as components `theta_1 .. theta_N`.
pub fn lbk_bound(
    rho: &DensityState,
    observables: &[Operator],
    theta: &OrthoOperatorSet,
    k: usize,
    phases: &Phases,
    opts: &BoundOptions,
) -> Result<BoundReport> {
    if k > theta.r {
        return Err(Error::IndexOutOfRange { index: k, max: theta.r });
    }
    let gram = gram_matrix(rho, observables)?;
    let n = observables.len();
    let mut partial = ComplexMatrix::zeros(n, n);
    for (o, &norm) in theta.operators.iter().zip(&theta.norms).take(k) {
        partial = partial.add(&v_from_checked(rho, &gram.observables, o, norm)?)?;
    }
    let objective = PhaseObjective::new(&partial, &gram.d_matrix)?;
    let chosen = match phases {
        Phases::Fixed(p) => {
            if p.len() != n {
                return Err(Error::InvalidParameters(format!(
                    "expected {n} phases, got {}",
                    p.len()
                )));
            }
            p.clone()
        }
        Phases::Optimize(search) => objective.maximize(search),
    };
    let rhs = objective.value(&chosen);
    let mut report = BoundReport::inequality(objective.trace_d, rhs, opts.tol).with_real("k", k as f64);
    for (m, t) in chosen.iter().enumerate() {
        report = report.with_real(&format!("theta_{}", m + 1), *t);
    }
    Ok(report)
}

/// `f(theta) = Re(X' M X) + Tr(D)` with `M = S - D`.
struct PhaseObjective {
    m: ComplexMatrix,
    trace_d: f64,
}

impl PhaseObjective {
    fn new(partial: &ComplexMatrix, d: &ComplexMatrix) -> Result<Self> {
        Ok(Self {
            m: partial.sub(d)?,
            trace_d: d.trace()?.re,
        })
    }

    fn value(&self, phases: &[f64]) -> f64 {
        let x: Vec<Complex64> = phases.iter().map(|&t| Complex64::from_polar(1.0, t)).collect();
        self.value_at(&x)
    }

    fn value_at(&self, x: &[Complex64]) -> f64 {
        let n = x.len();
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..n {
            for j in 0..n {
                acc += x[i].conj() * self.m.get(i, j) * x[j];
            }
        }
        acc.re + self.trace_d
    }

    /// Coordinate ascent with exact single-phase maximization; the first
    /// phase is pinned to zero.
    fn ascend(&self, start: &[f64]) -> (Vec<Complex64>, f64) {
        let n = start.len();
        let mut x: Vec<Complex64> = start.iter().map(|&t| Complex64::from_polar(1.0, t)).collect();
        if n > 0 {
            x[0] = Complex64::new(1.0, 0.0);
        }
        let mut value = self.value_at(&x);
        for _ in 0..10_000 {
            for p in 1..n {
                let y: Complex64 = (0..n).filter(|&q| q != p).map(|q| self.m.get(p, q) * x[q]).sum();
                if y.norm() > 0.0 {
                    x[p] = y / y.norm();
                }
            }
            let next = self.value_at(&x);
            let gain = next - value;
            value = next;
            if gain < 1e-12 {
                break;
            }
        }
        (x, value)
    }

    fn maximize(&self, search: &PhaseSearch) -> Vec<f64> {
        let n = self.m.rows();
        let mut starts: Vec<Vec<f64>> = search.warm_starts.iter().filter(|w| w.len() == n).cloned().collect();
        starts.push(vec![0.0; n]);
        let mut rng = rng_from_seed(search.seed);
        for _ in 0..search.restarts {
            let mut s = vec![0.0; n];
            for t in s.iter_mut().skip(1) {
                *t = rng.random_range(0.0..2.0 * PI);
            }
            starts.push(s);
        }
        let mut best: Option<(Vec<Complex64>, f64)> = None;
        for s in &starts {
            let (x, v) = self.ascend(s);
            if best.as_ref().is_none_or(|(_, bv)| v > *bv) {
                best = Some((x, v));
            }
        }
        let (x, _) = best.expect("at least one start");
        x.iter()
            .map(|z| {
                let t = z.arg();
                if t < 0.0 {
                    t + 2.0 * PI
                } else {
                    t
                }
            })
            .collect()
    }
}
