//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.
//!
//! Reference values are computed here with nalgebra directly from the
//! definitions, independently of the library code paths under test.

use std::f64::consts::PI;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use nalgebra::DMatrix;
use rand::Rng;
use ur_core::bounds::{
    combined_information_operator, demo_nonhermitian, eq8_bound, eq8_phase_profile, info_operator_bound,
    maccone_pati_bound, unified_equality,
};
use ur_core::experiments::{run_fig1, run_fig2};
use ur_core::gram::{gram_matrix, orthogonalize_matrix_units, psd_order_check, uncertainty_equality, v_matrix};
use ur_core::model::{ladder_operators, pauli};
use ur_core::moments::{checked, generalized_brackets, ordinary_brackets, variance};
use ur_core::random::{ginibre, gue, haar_pure, hs_mixed, mixed_with_rank, rng_from_seed, substream_seed};
use ur_core::{BoundOptions, Complex64, ComplexMatrix, DensityState, Operator, Sign};

type M = DMatrix<Complex64>;

const SEED: u64 = 7;

fn na(m: &ComplexMatrix) -> M {
    M::from_row_slice(m.rows(), m.cols(), m.data())
}

fn nop(o: &Operator) -> M {
    na(o.matrix())
}

fn form(rho: &M, a: &M, b: &M) -> Complex64 {
    (rho * a.adjoint() * b).trace()
}

fn centered(rho: &M, a: &M) -> M {
    let mean = (rho * a).trace();
    a - M::identity(a.nrows(), a.ncols()) * mean
}

fn var(rho: &M, a: &M) -> f64 {
    let c = centered(rho, a);
    form(rho, &c, &c).re
}

fn min_eig(h: &M) -> f64 {
    h.clone().symmetric_eigenvalues().iter().copied().fold(f64::INFINITY, f64::min)
}

fn sin2(x: f64) -> f64 {
    x.sin().powi(2)
}

type Outcome = Result<String, String>;

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let opts = BoundOptions::default();
    let mut worst = 0.0f64;
    for d in 2..=6 {
        for t in 0..1000u64 {
            let mut rng = rng_from_seed(substream_seed(SEED + d as u64, t));
            let rho = hs_mixed(&mut rng, d).map_err(|e| e.to_string())?;
            let a = ginibre(&mut rng, d);
            let b = ginibre(&mut rng, d);
            let r = unified_equality(&rho, &a, &b, &opts).map_err(|e| e.to_string())?;
            let rel = r.real("relative_residual").unwrap();
            check(rel <= 1e-9, || format!("d={d} trial {t}: library residual {rel:e}"))?;

            let (p, an, bn) = (na(rho.matrix()), nop(&a), nop(&b));
            let aa = form(&p, &an, &an).re;
            let bb = form(&p, &bn, &bn).re;
            let lhs = aa * bb;
            let comm = form(&p, &an, &bn) - form(&p, &bn, &an);
            let anti = form(&p, &an, &bn) + form(&p, &bn, &an);
            let c = &an - &bn * (form(&p, &bn, &an) / bb);
            let rhs = comm.norm_sqr() / 4.0 + anti.norm_sqr() / 4.0 + form(&p, &c, &c).re * bb;
            let oracle_rel = (lhs - rhs).abs() / lhs.abs().max(1.0);
            let agree = (r.lhs - lhs).abs() / lhs.abs().max(1.0);
            check(oracle_rel <= 1e-9 && agree <= 1e-9, || {
                format!("d={d} trial {t}: reference residual {oracle_rel:e}, lhs mismatch {agree:e}")
            })?;
            worst = worst.max(rel).max(oracle_rel);
        }
    }
    Ok(format!("5000 draws, worst relative residual {worst:.2e}"))
}

fn criterion_2() -> Outcome {
    let opts = BoundOptions::default();
    let mut worst = 0.0f64;
    for t in 0..500u64 {
        let mut rng = rng_from_seed(substream_seed(SEED ^ 0x2, t));
        let d = rng.random_range(2..=6);
        let rho = hs_mixed(&mut rng, d).map_err(|e| e.to_string())?;
        let a = gue(&mut rng, d);
        let b = gue(&mut rng, d);
        let ac = checked(&rho, &a).map_err(|e| e.to_string())?;
        let bc = checked(&rho, &b).map_err(|e| e.to_string())?;
        let u = unified_equality(&rho, &ac, &bc, &opts).map_err(|e| e.to_string())?;
        let terms = u.real("commutator_term").unwrap() + u.real("anticommutator_term").unwrap();

        let (p, an, bn) = (na(rho.matrix()), nop(&a), nop(&b));
        let comm = (&p * (&an * &bn - &bn * &an)).trace();
        let (acn, bcn) = (centered(&p, &an), centered(&p, &bn));
        let anti = (&p * (&acn * &bcn + &bcn * &acn)).trace();
        let sur_rhs = comm.norm_sqr() / 4.0 + anti.norm_sqr() / 4.0;
        let product = var(&p, &an) * var(&p, &bn);
        let e1 = (terms - sur_rhs).abs();
        let e2 = (u.lhs - product).abs();
        check(e1 <= 1e-12 && e2 <= 1e-12, || format!("trial {t}: terms off by {e1:e}, product off by {e2:e}"))?;
        worst = worst.max(e1).max(e2);
    }
    Ok(format!("500 pairs, worst deviation {worst:.2e}"))
}

fn criterion_3() -> Outcome {
    let opts = BoundOptions::default();
    let mut worst = 0.0f64;
    let i = Complex64::new(0.0, 1.0);
    for t in 0..500u64 {
        let mut rng = rng_from_seed(substream_seed(SEED ^ 0x3, t));
        let d = rng.random_range(2..=6);
        let rho = haar_pure(&mut rng, d).map_err(|e| e.to_string())?;
        let a = gue(&mut rng, d);
        let b = gue(&mut rng, d);
        let p = na(rho.matrix());
        let eig = p.clone().symmetric_eigen();
        let top = eig.eigenvalues.imax();
        let psi = eig.eigenvectors.column(top).into_owned();
        let perp = eig.eigenvectors.column((top + 1) % d).into_owned();
        let perp_vec: Vec<Complex64> = perp.iter().copied().collect();
        let mp = maccone_pati_bound(&rho, &a, &b, &perp_vec, Sign::Best, &opts).map_err(|e| e.to_string())?;

        let comm = ordinary_brackets(&rho, &a, &b).map_err(|e| e.to_string())?.commutator;
        let sum = variance(&rho, &a).map_err(|e| e.to_string())? + variance(&rho, &b).map_err(|e| e.to_string())?;
        let (an, bn) = (nop(&a), nop(&b));
        let ac = checked(&rho, &a).map_err(|e| e.to_string())?;
        let bc = checked(&rho, &b).map_err(|e| e.to_string())?;
        let o = Operator::new(ComplexMatrix::outer(&perp_vec, &psi.iter().copied().collect::<Vec<_>>()))
            .map_err(|e| e.to_string())?;
        for (s, key) in [(1.0, "rhs_plus"), (-1.0, "rhs_minus")] {
            let si = i * s;
            let m = Operator::linear_combination(&[(Complex64::new(1.0, 0.0), &a), (si, &b)]).map_err(|e| e.to_string())?;
            let var_m = variance(&rho, &m).map_err(|e| e.to_string())?;
            let shift = si * comm;
            let e_id = (var_m - (sum + shift.re)).abs();
            check(e_id <= 1e-10 && shift.im.abs() <= 1e-10, || {
                format!("trial {t}: identity off by {e_id:e}, leakage {:e}", shift.im)
            })?;

            // information-operator route with F = A~ - s i B~ and O = |psi_perp><psi|
            let f = Operator::linear_combination(&[(Complex64::new(1.0, 0.0), &ac), (-si, &bc)])
                .map_err(|e| e.to_string())?;
            let info = info_operator_bound(&rho, &f, &o, &opts).map_err(|e| e.to_string())?;
            let via_info = info.rhs + shift.re;
            let rhs = mp.real(key).unwrap();
            // reference: |<psi|A + s i B|psi_perp>|^2 + s i<[A,B]>
            let mn = &an + &bn * si;
            let amp = (psi.adjoint() * &mn * &perp)[(0, 0)];
            let reference = amp.norm_sqr() + (si * (&p * (&an * &bn - &bn * &an)).trace()).re;
            let e1 = (rhs - via_info).abs();
            let e2 = (rhs - reference).abs();
            check(e1 <= 1e-10 && e2 <= 1e-10, || {
                format!("trial {t} {key}: info route off by {e1:e}, reference off by {e2:e}")
            })?;
            worst = worst.max(e_id).max(e1).max(e2);
        }
    }
    Ok(format!("500 pure states, worst deviation {worst:.2e}"))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let r = run_fig1(201, 200, SEED, &BoundOptions::default()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let s = &r.sweep;
    let (sur, ort, op) = (s.curve("LB_SUR").unwrap(), s.curve("LB_ort").unwrap(), s.curve("LB_op").unwrap());
    check(s.grid.len() == 201 && r.scatter.len() == 200, || "wrong sizes".into())?;
    check((s.grid[200] - PI).abs() < 1e-15, || "grid does not end at pi".into())?;
    for (k, &alpha) in s.grid.iter().enumerate() {
        let sum = 0.5 + sin2(2.0 * alpha);
        check(sur[k] <= 1e-12, || format!("LB_SUR = {:e} at alpha = {alpha}", sur[k]))?;
        check((op[k] - sum).abs() <= 1e-9, || format!("LB_op = {} vs {sum} at alpha = {alpha}", op[k]))?;
        check(ort[k] <= sum + 1e-9, || format!("LB_ort = {} > {sum} at alpha = {alpha}", ort[k]))?;
    }
    for p in &r.scatter {
        let sum = 0.5 + sin2(2.0 * p.alpha);
        check(p.value <= sum + 1e-9, || format!("scatter trial {} value {} > {sum}", p.trial, p.value))?;
    }
    check(elapsed < Duration::from_secs(20), || format!("took {elapsed:?}"))?;
    Ok(format!("201 rows, 200 scatter points in {elapsed:.2?}"))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let r = run_fig2(201, 8, SEED, &BoundOptions::default()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let lb: Vec<&[f64]> = (0..4).map(|k| r.curve(&format!("LB_{k}")).unwrap()).collect();
    for (i, &beta) in r.grid.iter().enumerate() {
        check(lb[0][i] <= lb[1][i] && lb[1][i] <= lb[2][i] && lb[2][i] <= lb[3][i], || {
            format!(
                "chain broken at beta = {beta}: {} {} {} {}",
                lb[0][i], lb[1][i], lb[2][i], lb[3][i]
            )
        })?;
        let exact = 1.0 + sin2(2.0 * beta);
        check((lb[3][i] - exact).abs() <= 1e-8, || format!("LB_3 = {} vs {exact} at beta = {beta}", lb[3][i]))?;
    }
    for (i, target) in [(50, PI / 4.0), (150, 3.0 * PI / 4.0)] {
        check((r.grid[i] - target).abs() < 1e-12, || format!("grid point {i} is not {target}"))?;
        check(lb[0][i] <= 1e-8, || format!("LB_0 = {:e} at beta = {target}", lb[0][i]))?;
    }
    check(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"))?;
    Ok(format!("201 rows in {elapsed:.2?}, LB_0(pi/4) = {:.1e}", lb[0][50]))
}

fn criterion_6() -> Outcome {
    let mut worst = f64::INFINITY;
    for t in 0..10_000u64 {
        let mut rng = rng_from_seed(substream_seed(SEED ^ 0x6, t));
        let d = rng.random_range(2..=4);
        let n = rng.random_range(2..=3);
        let rank = rng.random_range(1..=d);
        let rho = mixed_with_rank(&mut rng, d, rank).map_err(|e| e.to_string())?;
        let obs: Vec<Operator> = (0..n).map(|_| gue(&mut rng, d)).collect();
        let o = ginibre(&mut rng, d);

        let p = na(rho.matrix());
        let checked_obs: Vec<M> = obs.iter().map(|a| centered(&p, &nop(a))).collect();
        let dref = M::from_fn(n, n, |i, j| form(&p, &checked_obs[i], &checked_obs[j]));
        let on = nop(&o);
        let w: Vec<Complex64> = checked_obs.iter().map(|a| form(&p, a, &on)).collect();
        let norm = form(&p, &on, &on).re;
        let vref = M::from_fn(n, n, |i, j| w[i] * w[j].conj() / norm);
        let (m1, m2) = (min_eig(&dref), min_eig(&(&dref - &vref)));

        let g = gram_matrix(&rho, &obs).map_err(|e| e.to_string())?;
        let v = v_matrix(&rho, &obs, &o, 1e-12).map_err(|e| e.to_string())?;
        let lib_d = g.min_eigenvalue().map_err(|e| e.to_string())?;
        let lib_dv = psd_order_check(&g.d_matrix, &v, 1e-10).map_err(|e| e.to_string())?;
        let agree = (na(&g.d_matrix) - &dref).norm() + (na(&v) - &vref).norm();
        check(m1 >= -1e-10 && m2 >= -1e-10 && lib_d >= -1e-10 && lib_dv.min_eigenvalue >= -1e-10, || {
            format!("trial {t}: min eigenvalues D {m1:e}/{lib_d:e}, D - V {m2:e}/{:e}", lib_dv.min_eigenvalue)
        })?;
        check(agree <= 1e-9, || format!("trial {t}: library matrices differ by {agree:e}"))?;
        worst = worst.min(m1).min(m2).min(lib_d).min(lib_dv.min_eigenvalue);
    }
    Ok(format!("10000 draws, smallest eigenvalue {worst:.2e}"))
}

fn criterion_7() -> Outcome {
    let mut worst = 0.0f64;
    for t in 0..1000u64 {
        let mut rng = rng_from_seed(substream_seed(SEED ^ 0x7, t));
        let d = rng.random_range(2..=4);
        let rank = rng.random_range(1..=d);
        let rho = mixed_with_rank(&mut rng, d, rank).map_err(|e| e.to_string())?;
        let obs: Vec<Operator> = (0..3).map(|_| gue(&mut rng, d)).collect();
        let theta = orthogonalize_matrix_units(&rho).map_err(|e| e.to_string())?;
        check(theta.r == d * rank, || format!("trial {t}: r = {} for d = {d}, rank = {rank}", theta.r))?;

        let dec = uncertainty_equality(&rho, &obs, &theta).map_err(|e| e.to_string())?;
        let p = na(rho.matrix());
        let checked_obs: Vec<M> = obs.iter().map(|a| centered(&p, &nop(a))).collect();
        let dref = M::from_fn(3, 3, |i, j| form(&p, &checked_obs[i], &checked_obs[j]));
        let mut sum = M::zeros(3, 3);
        for o in &theta.operators {
            let on = nop(o);
            let w: Vec<Complex64> = checked_obs.iter().map(|a| form(&p, a, &on)).collect();
            let norm = form(&p, &on, &on).re;
            sum += M::from_fn(3, 3, |i, j| w[i] * w[j].conj() / norm);
        }
        let scale = dref.norm().max(1.0);
        let reference = (&dref - &sum).norm() / scale;
        let library = dec.closure_residual / scale;
        check(reference <= 1e-9 && library <= 1e-9, || {
            format!("trial {t}: closure {reference:e} (reference), {library:e} (library)")
        })?;
        worst = worst.max(reference).max(library);
    }

    // d = 2 worked example
    let rho = DensityState::pure_real(&[1.0, 0.0]).map_err(|e| e.to_string())?;
    let (sx, sy, _) = pauli();
    let theta = orthogonalize_matrix_units(&rho).map_err(|e| e.to_string())?;
    let e11 = M::from_row_slice(2, 2, &[1.0, 0.0, 0.0, 0.0].map(|x| Complex64::new(x, 0.0)));
    let e21 = M::from_row_slice(2, 2, &[0.0, 0.0, 1.0, 0.0].map(|x| Complex64::new(x, 0.0)));
    check(theta.r == 2, || format!("worked example: r = {}", theta.r))?;
    check(
        (nop(&theta.operators[0]) - &e11).norm() <= 1e-12 && (nop(&theta.operators[1]) - &e21).norm() <= 1e-12,
        || "worked example: basis is not {E11, E21}".into(),
    )?;
    let dec = uncertainty_equality(&rho, &[sx, sy], &theta).map_err(|e| e.to_string())?;
    let i = Complex64::new(0.0, 1.0);
    let one = Complex64::new(1.0, 0.0);
    let dhand = M::from_row_slice(2, 2, &[one, i, -i, one]);
    check((na(&dec.d_matrix) - &dhand).norm() <= 1e-12, || "worked example: D".into())?;
    check(na(&dec.v_matrices[0]).norm() <= 1e-12, || "worked example: V_1 != 0".into())?;
    check((na(&dec.v_matrices[1]) - &dhand).norm() <= 1e-12, || "worked example: V_2 != D".into())?;
    Ok(format!("1000 states, worst closure {worst:.2e}; worked example reproduced"))
}

/// Brute-force two-observable bound at a fixed phase, from the definition
/// `|<O'(A~ + e^{it} B~)>|^2 / <O'O> - <{A~, e^{it} B~}_G>`.
struct TwoObservableReference {
    ac: M,
    bc: M,
    /// `(rho O')^T`, so that `Tr(rho O' F)` is an elementwise product sum
    rho_odag_t: M,
    norm: f64,
    p: M,
}

impl TwoObservableReference {
    fn new(p: &M, a: &M, b: &M, o: &M) -> Self {
        Self {
            ac: centered(p, a),
            bc: centered(p, b),
            rho_odag_t: (p * o.adjoint()).transpose(),
            norm: form(p, o, o).re,
            p: p.clone(),
        }
    }

    fn value(&self, theta: f64) -> f64 {
        let e = Complex64::from_polar(1.0, theta);
        let eb = &self.bc * e;
        let f = &self.ac + &eb;
        let proj = self.rho_odag_t.component_mul(&f).sum();
        let anti = form(&self.p, &self.ac, &eb) + form(&self.p, &eb, &self.ac);
        proj.norm_sqr() / self.norm - anti.re
    }
}

fn criterion_8() -> Outcome {
    let opts = BoundOptions::default();
    let mut worst_gap = f64::NEG_INFINITY;
    for t in 0..1000u64 {
        let mut rng = rng_from_seed(substream_seed(SEED ^ 0x8, t));
        let d = rng.random_range(2..=4);
        let rho = hs_mixed(&mut rng, d).map_err(|e| e.to_string())?;
        let a = gue(&mut rng, d);
        let b = gue(&mut rng, d);
        let o = ginibre(&mut rng, d);
        let profile = eq8_phase_profile(&rho, &a, &b, &o, opts.degeneracy_tol)
            .map_err(|e| e.to_string())?
            .ok_or("unexpected degenerate information operator")?;
        let reference = TwoObservableReference::new(&na(rho.matrix()), &nop(&a), &nop(&b), &nop(&o));
        let grid = (0..4096)
            .map(|k| reference.value(2.0 * PI * k as f64 / 4096.0))
            .fold(f64::NEG_INFINITY, f64::max);
        let at_best = reference.value(profile.best_phase());
        check(at_best >= grid - 1e-9, || format!("trial {t}: closed form {at_best} below grid {grid}"))?;
        check((profile.max() - at_best).abs() <= 1e-9, || {
            format!("trial {t}: reported max {} vs reference {at_best}", profile.max())
        })?;
        worst_gap = worst_gap.max(grid - at_best);
    }
    let mut worst_slack = 0.0f64;
    for t in 0..100u64 {
        let mut rng = rng_from_seed(substream_seed(SEED ^ 0x88, t));
        let d = rng.random_range(2..=4);
        let rho = hs_mixed(&mut rng, d).map_err(|e| e.to_string())?;
        let a = gue(&mut rng, d);
        let b = gue(&mut rng, d);
        let m = rng.random_range(0.1..5.0);
        let l1 = Complex64::from_polar(m, rng.random_range(0.0..2.0 * PI));
        let l2 = Complex64::from_polar(m, rng.random_range(0.0..2.0 * PI));
        let r_op = combined_information_operator(&rho, &a, &b, l1, l2).map_err(|e| e.to_string())?;
        let r = eq8_bound(&rho, &a, &b, &[("R", &r_op)], &opts).map_err(|e| e.to_string())?;
        check(r.slack.abs() <= 1e-9, || format!("phase pair {t}: slack {:e}", r.slack))?;
        worst_slack = worst_slack.max(r.slack.abs());
    }
    Ok(format!(
        "grid never beats closed form by more than {worst_gap:.2e}; equality slack {worst_slack:.2e}"
    ))
}

fn criterion_9() -> Outcome {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let plus = DensityState::pure_real(&[h, h]).map_err(|e| e.to_string())?;
    let r = demo_nonhermitian(&plus, &BoundOptions::default()).map_err(|e| e.to_string())?;
    let naive = r.real("naive_commutator_term").is_some() && r.real("naive_anticommutator_term").is_some();
    check(naive, || "naive SUR-form terms missing".into())?;
    let residual = r.real("unified_residual").ok_or("unified residual missing")?;
    check(residual <= 1e-10, || format!("unified residual {residual:e}"))?;

    let (sp, sm) = ladder_operators();
    let (spn, smn) = (nop(&sp), nop(&sm));
    let gc = spn.adjoint() * &smn - smn.adjoint() * &spn;
    let ga = spn.adjoint() * &smn + smn.adjoint() * &spn;
    check(gc.norm() == 0.0 && ga.norm() == 0.0, || "generalized brackets are not zero matrices".into())?;
    let br = generalized_brackets(&plus, &sp, &sm).map_err(|e| e.to_string())?;
    check(br.commutator.norm() <= 1e-15 && br.anticommutator.norm() <= 1e-15, || {
        format!("bracket expectations {} {}", br.commutator, br.anticommutator)
    })?;
    Ok(format!(
        "naive check {} (slack {:.1e}), unified residual {residual:.1e}",
        if r.satisfied { "holds" } else { "fails" },
        r.slack
    ))
}

fn run_cli(args: &[&str]) -> Result<(), String> {
    let status = Command::new(env!("CARGO_BIN_EXE_ur-kit"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    check(status.status.success(), || {
        format!("{args:?} exited with {:?}: {}", status.status.code(), String::from_utf8_lossy(&status.stderr))
    })
}

fn read(p: &Path) -> Result<Vec<u8>, String> {
    std::fs::read(p).map_err(|e| format!("{}: {e}", p.display()))
}

fn criterion_10() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let runs = [dir.path().join("a"), dir.path().join("b")];
    for run in &runs {
        std::fs::create_dir(run).map_err(|e| e.to_string())?;
        let p = |name: &str| run.join(name).to_string_lossy().into_owned();
        run_cli(&["fig1", "--steps", "201", "--random-trials", "200", "--seed", "11", "--out", &p("fig1.csv")])?;
        run_cli(&["fig2", "--steps", "201", "--restarts", "8", "--seed", "11", "--out", &p("fig2.csv")])?;
        run_cli(&["audit", "--dim", "3", "--trials", "300", "--seed", "11", "--json", &p("audit.json")])?;
    }
    let files = ["fig1.csv", "fig1_scatter.csv", "fig1_meta.json", "fig2.csv", "fig2_meta.json", "audit.json"];
    for f in files {
        let (x, y) = (read(&runs[0].join(f))?, read(&runs[1].join(f))?);
        check(!x.is_empty() && x == y, || format!("{f} differs between runs"))?;
    }
    Ok(format!("{} artifacts byte-identical across two runs", files.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("unified equality", criterion_1),
        ("SUR recovery", criterion_2),
        ("orthogonal-state recovery", criterion_3),
        ("spin-1 alpha sweep", criterion_4),
        ("spin-1 beta sweep", criterion_5),
        ("PSD structure", criterion_6),
        ("uncertainty equality", criterion_7),
        ("two-observable optimizer", criterion_8),
        ("non-Hermitian demo", criterion_9),
        ("determinism", criterion_10),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{t:.2?}]", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{t:.2?}]", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
