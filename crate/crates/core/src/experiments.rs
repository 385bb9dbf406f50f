//! Parameter sweeps for the two spin-1 experiments and the randomized
//! property audit. Everything here is a deterministic function of its inputs;
//! formatting and file output live in the companion crate.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)] // shadowed by inherent methods whenever std is linked
use num_traits::Float;
use rand::Rng;

use crate::bounds::{
    combined_information_operator, eq8_bound, info_operator_bound, maccone_pati_bound, sur_bound,
    unified_equality, BoundOptions, Sign,
};
use crate::error::{Error, Result};
use crate::gram::{
    gram_matrix, lbk_bound, orthogonalize_matrix_units, psd_order_check, uncertainty_equality, v_matrix,
    PhaseSearch, Phases,
};
use crate::matrix::ComplexMatrix;
use crate::model::{basis_vector, spin_operators, DensityState, Operator};
use crate::moments::variance;
use crate::random::{ginibre, gue, mixed_with_rank, rng_from_seed, substream_seed};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Per-row tolerances checked by the figure sweeps.
pub mod row_tol {
    /// `LB_SUR` must stay below this.
    pub const SUR_TRIVIAL: f64 = 1e-12;
    /// `|LB_op - (1/2 + sin^2 2 alpha)|`.
    pub const FIG1_EXACT: f64 = 1e-9;
    /// Slack allowed on every alpha-sweep lower bound against the sum of variances.
    pub const FIG1_BOUND: f64 = 1e-9;
    /// Slack for the beta-sweep chain and `|LB_3 - (1 + sin^2 2 beta)|`.
    pub const FIG2: f64 = 1e-8;
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepMetadata {
    pub experiment: String,
    pub seed: u64,
    pub steps: usize,
    pub random_trials: usize,
    pub restarts: usize,
    pub tolerances: Vec<(String, f64)>,
    pub version: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub parameter_name: String,
    pub grid: Vec<f64>,
    /// Curve label and one value per grid point, in column order.
    pub curves: Vec<(String, Vec<f64>)>,
    /// Per-row self-check.
    pub verdicts: Vec<bool>,
    pub metadata: SweepMetadata,
}

impl SweepResult {
    pub fn curve(&self, label: &str) -> Option<&[f64]> {
        self.curves.iter().find(|(l, _)| l == label).map(|(_, v)| v.as_slice())
    }

    pub fn all_rows_pass(&self) -> bool {
        self.verdicts.iter().all(|&v| v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatterPoint {
    pub alpha: f64,
    pub value: f64,
    pub sum_variances: f64,
    pub trial: usize,
    pub seed: u64,
}

impl ScatterPoint {
    pub fn passes(&self) -> bool {
        self.value <= self.sum_variances + row_tol::FIG1_BOUND
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fig1Result {
    pub sweep: SweepResult,
    pub scatter: Vec<ScatterPoint>,
}

impl Fig1Result {
    pub fn all_pass(&self) -> bool {
        self.sweep.all_rows_pass() && self.scatter.iter().all(ScatterPoint::passes)
    }
}

/// `cos^2(alpha)|1><1| + sin^2(alpha)|-1><-1|` in the spin-1 basis `(1, 0, -1)`.
pub fn diagonal_spin1_state(alpha: f64) -> Result<DensityState> {
    DensityState::new(ComplexMatrix::from_diag(&[alpha.cos().powi(2), 0.0, alpha.sin().powi(2)]))
}

/// `cos(beta)|1> + sin(beta)|-1>`.
pub fn superposition_spin1_state(beta: f64) -> Result<DensityState> {
    DensityState::pure_real(&[beta.cos(), 0.0, beta.sin()])
}

fn uniform_grid(steps: usize) -> Vec<f64> {
    (0..steps).map(|i| PI * i as f64 / (steps - 1) as f64).collect()
}

/// Spin-1 sweep over `alpha` in `[0, pi]` with `A = J_x`, `B = J_z`.
///
/// Curves: `sum_variances`, `LB_SUR`, `LB_ort` (orthogonal vector `|0>`),
/// `LB_op` (information operator `A~ + B~`). Each random trial draws `alpha`
/// and two Ginibre information operators from its own substream.
pub fn run_fig1(steps: usize, random_trials: usize, seed: u64, opts: &BoundOptions) -> Result<Fig1Result> {
    if steps < 2 {
        return Err(Error::InvalidParameters(format!("steps must be >= 2, got {steps}")));
    }
    let (jx, _, jz) = spin_operators(2)?;
    let zero_state = basis_vector(3, 1);
    let one = Complex64::new(1.0, 0.0);
    let grid = uniform_grid(steps);

    let mut sum = Vec::with_capacity(steps);
    let mut sur = Vec::with_capacity(steps);
    let mut ort = Vec::with_capacity(steps);
    let mut op = Vec::with_capacity(steps);
    let mut verdicts = Vec::with_capacity(steps);
    for &alpha in &grid {
        let rho = diagonal_spin1_state(alpha)?;
        let s = variance(&rho, &jx)? + variance(&rho, &jz)?;
        let lb_sur = sur_bound(&rho, &jx, &jz, opts)?.rhs;
        let lb_ort = maccone_pati_bound(&rho, &jx, &jz, &zero_state, Sign::Best, opts)?.rhs;
        let preset = combined_information_operator(&rho, &jx, &jz, one, one)?;
        let lb_op = eq8_bound(&rho, &jx, &jz, &[("R", &preset)], opts)?.rhs;
        let exact = 0.5 + (2.0 * alpha).sin().powi(2);
        verdicts.push(
            lb_sur <= row_tol::SUR_TRIVIAL
                && (lb_op - exact).abs() <= row_tol::FIG1_EXACT
                && lb_ort <= s + row_tol::FIG1_BOUND
                && lb_op <= s + row_tol::FIG1_BOUND,
        );
        sum.push(s);
        sur.push(lb_sur);
        ort.push(lb_ort);
        op.push(lb_op);
    }

    let mut scatter = Vec::with_capacity(random_trials);
    for trial in 0..random_trials {
        let trial_seed = substream_seed(seed, trial as u64);
        let mut rng = rng_from_seed(trial_seed);
        let alpha = rng.random_range(0.0..=PI);
        let r = ginibre(&mut rng, 3);
        let s_op = ginibre(&mut rng, 3);
        let rho = diagonal_spin1_state(alpha)?;
        let report = eq8_bound(&rho, &jx, &jz, &[("R", &r), ("S", &s_op)], opts)?;
        scatter.push(ScatterPoint {
            alpha,
            value: report.rhs,
            sum_variances: report.lhs,
            trial,
            seed: trial_seed,
        });
    }

    Ok(Fig1Result {
        sweep: SweepResult {
            parameter_name: "alpha".into(),
            grid,
            curves: vec![
                ("sum_variances".into(), sum),
                ("LB_SUR".into(), sur),
                ("LB_ort".into(), ort),
                ("LB_op".into(), op),
            ],
            verdicts,
            metadata: SweepMetadata {
                experiment: "fig1".into(),
                seed,
                steps,
                random_trials,
                restarts: 0,
                tolerances: vec![
                    ("sur_trivial".into(), row_tol::SUR_TRIVIAL),
                    ("op_exact".into(), row_tol::FIG1_EXACT),
                    ("bound_slack".into(), row_tol::FIG1_BOUND),
                    ("satisfied".into(), opts.tol),
                ],
                version: VERSION.into(),
            },
        },
        scatter,
    })
}

/// Spin-1 pure-state sweep over `beta` in `[0, pi]` with observables
/// `J_x, J_y, J_z` and information operators from the matrix-unit basis.
///
/// `LB_k` for `k = 0..=3` uses optimized phases; each `LB_k` search is
/// warm-started from the `LB_{k-1}` optimum, which keeps the chain monotone.
pub fn run_fig2(steps: usize, restarts: usize, seed: u64, opts: &BoundOptions) -> Result<SweepResult> {
    if steps < 2 {
        return Err(Error::InvalidParameters(format!("steps must be >= 2, got {steps}")));
    }
    let (jx, jy, jz) = spin_operators(2)?;
    let observables = [jx, jy, jz];
    let grid = uniform_grid(steps);
    let mut lbs: Vec<Vec<f64>> = vec![Vec::with_capacity(steps); 4];
    let mut sum = Vec::with_capacity(steps);
    let mut verdicts = Vec::with_capacity(steps);

    for (i, &beta) in grid.iter().enumerate() {
        let rho = superposition_spin1_state(beta)?;
        let theta = orthogonalize_matrix_units(&rho)?;
        let mut warm: Vec<Vec<f64>> = Vec::new();
        let mut row = [0.0; 4];
        let mut lhs = 0.0;
        for (k, slot) in row.iter_mut().enumerate() {
            let search = PhaseSearch {
                restarts,
                seed: substream_seed(seed, i as u64),
                warm_starts: warm.clone(),
            };
            let report = lbk_bound(&rho, &observables, &theta, k.min(theta.r), &Phases::Optimize(search), opts)?;
            *slot = report.rhs;
            lhs = report.lhs;
            let phases: Vec<f64> = (1..=observables.len())
                .map(|m| report.real(&format!("theta_{m}")).unwrap_or(0.0))
                .collect();
            warm = vec![phases];
        }
        let exact = 1.0 + (2.0 * beta).sin().powi(2);
        verdicts.push(
            row[0] <= row[1]
                && row[1] <= row[2]
                && row[2] <= row[3]
                && row[3] <= lhs + row_tol::FIG2
                && (row[3] - exact).abs() <= row_tol::FIG2,
        );
        for (k, v) in row.iter().enumerate() {
            lbs[k].push(*v);
        }
        sum.push(lhs);
    }

    let mut curves = vec![("sum_variances".to_string(), sum)];
    for (k, v) in lbs.into_iter().enumerate() {
        curves.push((format!("LB_{k}"), v));
    }
    Ok(SweepResult {
        parameter_name: "beta".into(),
        grid,
        curves,
        verdicts,
        metadata: SweepMetadata {
            experiment: "fig2".into(),
            seed,
            steps,
            random_trials: 0,
            restarts,
            tolerances: vec![("row_slack".into(), row_tol::FIG2), ("satisfied".into(), opts.tol)],
            version: VERSION.into(),
        },
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct AuditReport {
    pub property: String,
    pub trials: usize,
    pub failures: usize,
    /// Largest observed defect for the property (0 when none).
    pub worst_violation: f64,
    pub failing_seeds: Vec<u64>,
}

impl AuditReport {
    fn new(property: &str) -> Self {
        Self {
            property: property.into(),
            trials: 0,
            failures: 0,
            worst_violation: 0.0,
            failing_seeds: Vec::new(),
        }
    }

    /// Records one trial: `Ok((defect, passed))` or an evaluation error,
    /// which counts as a failure.
    fn record(&mut self, seed: u64, outcome: Result<(f64, bool)>) {
        self.trials += 1;
        let (defect, passed) = outcome.unwrap_or((f64::INFINITY, false));
        if defect > self.worst_violation || defect.is_nan() {
            self.worst_violation = defect;
        }
        if !passed {
            self.failures += 1;
            self.failing_seeds.push(seed);
        }
    }
}

pub const AUDIT_PROPERTIES: [&str; 6] = [
    "unified_equality",
    "info_operator_bound",
    "gram_psd",
    "gram_minus_v_psd",
    "parseval_closure",
    "schmidt_rank",
];

/// Seeded property audit of the framework's identities and inequalities.
///
/// Each trial draws a mixed state of random rank (unless `state` is given),
/// Ginibre operators and GUE observables from its own substream seed.
pub fn run_audit(dim: usize, trials: usize, seed: u64, state: Option<&DensityState>) -> Result<Vec<AuditReport>> {
    if !(2..=8).contains(&dim) {
        return Err(Error::InvalidParameters(format!("dim must be in 2..=8, got {dim}")));
    }
    if trials < 1 {
        return Err(Error::InvalidParameters("trials must be >= 1".into()));
    }
    if let Some(s) = state {
        if s.dim() != dim {
            return Err(Error::InvalidParameters(format!(
                "state has dimension {}, audit dimension is {dim}",
                s.dim()
            )));
        }
    }
    let opts = BoundOptions::default();
    let mut reports: Vec<AuditReport> = AUDIT_PROPERTIES.iter().map(|p| AuditReport::new(p)).collect();

    for t in 0..trials {
        let trial_seed = substream_seed(seed, t as u64);
        let mut rng = rng_from_seed(trial_seed);
        let rank = rng.random_range(1..=dim);
        let rho = match state {
            Some(s) => s.clone(),
            None => mixed_with_rank(&mut rng, dim, rank)?,
        };
        let a = ginibre(&mut rng, dim);
        let b = ginibre(&mut rng, dim);
        let info = ginibre(&mut rng, dim);
        let n_obs = rng.random_range(2..=3);
        let observables: Vec<Operator> = (0..n_obs).map(|_| gue(&mut rng, dim)).collect();

        reports[0].record(trial_seed, audit_unified(&rho, &a, &b, &opts));
        reports[1].record(trial_seed, audit_info(&rho, &a, &info, &opts));
        reports[2].record(trial_seed, audit_gram_psd(&rho, &observables));
        reports[3].record(trial_seed, audit_gram_minus_v(&rho, &observables, &info));
        reports[4].record(trial_seed, audit_closure(&rho, &observables));
        reports[5].record(trial_seed, audit_rank(&rho));
    }
    Ok(reports)
}

fn audit_unified(rho: &DensityState, a: &Operator, b: &Operator, opts: &BoundOptions) -> Result<(f64, bool)> {
    let r = unified_equality(rho, a, b, opts)?;
    let rel = r.real("relative_residual").unwrap_or(f64::INFINITY);
    Ok((rel, rel <= 1e-9))
}

fn audit_info(rho: &DensityState, f: &Operator, o: &Operator, opts: &BoundOptions) -> Result<(f64, bool)> {
    let r = info_operator_bound(rho, f, o, opts)?;
    let defect = (r.rhs - r.lhs).max(-r.rhs).max(0.0);
    Ok((defect, defect <= 1e-10))
}

fn audit_gram_psd(rho: &DensityState, observables: &[Operator]) -> Result<(f64, bool)> {
    let g = gram_matrix(rho, observables)?;
    let eig = crate::eigen::hermitian_eigensystem(&g.d_matrix, 1e-10)?;
    let defect = (-eig.min() / eig.max().max(1.0)).max(0.0);
    Ok((defect, defect <= 1e-10))
}

fn audit_gram_minus_v(rho: &DensityState, observables: &[Operator], info: &Operator) -> Result<(f64, bool)> {
    let g = gram_matrix(rho, observables)?;
    let v = v_matrix(rho, observables, info, 1e-12)?;
    let order = psd_order_check(&g.d_matrix, &v, 1e-10)?;
    Ok(((-order.min_eigenvalue).max(0.0), order.holds))
}

fn audit_closure(rho: &DensityState, observables: &[Operator]) -> Result<(f64, bool)> {
    let theta = orthogonalize_matrix_units(rho)?;
    let dec = uncertainty_equality(rho, observables, &theta)?;
    let rel = dec.closure_residual / dec.d_matrix.frobenius_norm().max(1.0);
    Ok((rel, rel <= 1e-9))
}

fn audit_rank(rho: &DensityState) -> Result<(f64, bool)> {
    let theta = orthogonalize_matrix_units(rho)?;
    let expected = rho.dim() * rho.rank();
    let defect = (theta.r as f64 - expected as f64).abs();
    Ok((defect, theta.r == expected))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_sweep_small_grid() {
        let r = run_fig1(11, 20, 3, &BoundOptions::default()).unwrap();
        assert!(r.all_pass());
        assert_eq!(r.sweep.grid.len(), 11);
        assert_eq!(r.scatter.len(), 20);
        for (_, c) in &r.sweep.curves {
            assert_eq!(c.len(), 11);
        }
    }

    #[test]
    fn beta_sweep_small_grid() {
        let r = run_fig2(9, 4, 1, &BoundOptions::default()).unwrap();
        assert!(r.all_rows_pass(), "{:?}", r.verdicts);
    }

    #[test]
    fn invalid_parameters() {
        assert!(run_fig1(1, 0, 0, &BoundOptions::default()).is_err());
        assert!(run_fig2(1, 0, 0, &BoundOptions::default()).is_err());
        assert!(run_audit(1, 1, 0, None).is_err());
        assert!(run_audit(3, 0, 0, None).is_err());
    }

    #[test]
    fn audit_single_trial() {
        let reports = run_audit(3, 1, 0, None).unwrap();
        assert_eq!(reports.len(), AUDIT_PROPERTIES.len());
        for r in &reports {
            assert_eq!(r.trials, 1);
            assert_eq!(r.failures, r.failing_seeds.len());
            assert_eq!(r.failures, 0, "{}", r.property);
        }
    }

    #[test]
    fn audit_with_fixed_state() {
        let rho = DensityState::maximally_mixed(3);
        let reports = run_audit(3, 5, 2, Some(&rho)).unwrap();
        assert!(reports.iter().all(|r| r.failures == 0));
        assert!(run_audit(4, 5, 2, Some(&rho)).is_err());
    }
}
