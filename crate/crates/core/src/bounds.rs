//! Scalar uncertainty relations, each evaluated into a [`BoundReport`].
//!
//! * [`sur_bound`]: product form for two observables.
//! * [`maccone_pati_bound`]: sum form built on a vector orthogonal to the state.
//! * [`unified_equality`]: `<A'A><B'B>` split into generalized commutator,
//!   anti-commutator and remainder terms; holds for any pair of operators.
//! * [`info_operator_bound`]: lower bound on `<F'F>` from an information operator.
//! * [`eq8_bound`]: sum of variances bounded through information operators,
//!   with the relative phase maximized in closed form.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::vector_norm;
use crate::model::{boson_annihilator, ladder_operators, tensor_product, DensityState, Operator};
use crate::moments::{
    checked, form, generalized_brackets, ordinary_brackets, real_part_checked, second_origin_moment,
    variance,
};

#[derive(Debug, Clone, PartialEq)]
pub enum Component {
    Real(f64),
    Complex(Complex64),
    Label(String),
}

/// One evaluated relation `lhs >= rhs` (or `lhs == rhs` for equalities).
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub satisfied: bool,
    pub tol: f64,
    pub components: BTreeMap<String, Component>,
}

impl BoundReport {
    /// Inequality report: satisfied iff `lhs - rhs >= -tol`.
    pub fn inequality(lhs: f64, rhs: f64, tol: f64) -> Self {
        let slack = lhs - rhs;
        Self {
            lhs,
            rhs,
            slack,
            satisfied: slack >= -tol,
            tol,
            components: BTreeMap::new(),
        }
    }

    pub fn with_real(mut self, key: &str, value: f64) -> Self {
        self.components.insert(key.to_string(), Component::Real(value));
        self
    }

    pub fn with_complex(mut self, key: &str, value: Complex64) -> Self {
        self.components.insert(key.to_string(), Component::Complex(value));
        self
    }

    pub fn with_label(mut self, key: &str, value: &str) -> Self {
        self.components.insert(key.to_string(), Component::Label(value.to_string()));
        self
    }

    pub fn real(&self, key: &str) -> Option<f64> {
        match self.components.get(key)? {
            Component::Real(x) => Some(*x),
            _ => None,
        }
    }

    pub fn complex(&self, key: &str) -> Option<Complex64> {
        match self.components.get(key)? {
            Component::Complex(z) => Some(*z),
            _ => None,
        }
    }

    pub fn label(&self, key: &str) -> Option<&str> {
        match self.components.get(key)? {
            Component::Label(s) => Some(s),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundOptions {
    /// Absolute tolerance on slack for inequalities.
    pub tol: f64,
    /// `<O'O>` at or below this marks an operator as carrying no information.
    pub degeneracy_tol: f64,
    /// Relative residual accepted for equalities.
    pub equality_tol: f64,
    /// Largest accepted `||rho psi_perp||`.
    pub orthogonality_tol: f64,
}

impl Default for BoundOptions {
    fn default() -> Self {
        Self {
            tol: 1e-9,
            degeneracy_tol: 1e-12,
            equality_tol: 1e-9,
            orthogonality_tol: 1e-8,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
    Best,
}

fn require_hermitian(op: &Operator) -> Result<()> {
    if op.is_hermitian() {
        Ok(())
    } else {
        Err(Error::NotHermitian {
            defect: op.matrix().hermiticity_defect(),
            tol: crate::matrix::HERMITIAN_TOL,
        })
    }
}

/// `dA^2 dB^2 >= |<[A,B]>|^2/4 + |<{A~,B~}>|^2/4` for observables.
pub fn sur_bound(rho: &DensityState, a: &Operator, b: &Operator, opts: &BoundOptions) -> Result<BoundReport> {
    require_hermitian(a)?;
    require_hermitian(b)?;
    let lhs = variance(rho, a)? * variance(rho, b)?;
    let comm = ordinary_brackets(rho, a, b)?.commutator;
    let anti = ordinary_brackets(rho, &checked(rho, a)?, &checked(rho, b)?)?.anticommutator;
    let commutator_term = comm.norm_sqr() / 4.0;
    let anticommutator_term = anti.norm_sqr() / 4.0;
    Ok(BoundReport::inequality(lhs, commutator_term + anticommutator_term, opts.tol)
        .with_real("commutator_term", commutator_term)
        .with_real("anticommutator_term", anticommutator_term))
}

/// Sum-form bound `dA^2 + dB^2 >= <(A + s iB) P (A - s iB)> + s i<[A,B]>` with
/// `P = |psi_perp><psi_perp|`.
///
/// For a pure state this is `|<psi|A + s iB|psi_perp>|^2 + s i<[A,B]>`. Mixed
/// states are accepted when `psi_perp` is orthogonal to the whole support of
/// `rho`. `psi_perp` is normalized internally.
pub fn maccone_pati_bound(
    rho: &DensityState,
    a: &Operator,
    b: &Operator,
    psi_perp: &[Complex64],
    sign: Sign,
    opts: &BoundOptions,
) -> Result<BoundReport> {
    require_hermitian(a)?;
    require_hermitian(b)?;
    rho.require_dim(a)?;
    rho.require_dim(b)?;
    if psi_perp.len() != rho.dim() {
        return Err(Error::DimensionMismatch {
            expected: alloc::format!("vector of length {}", rho.dim()),
            found: alloc::format!("length {}", psi_perp.len()),
        });
    }
    let norm = vector_norm(psi_perp);
    if norm == 0.0 {
        return Err(Error::ZeroVector);
    }
    let perp: Vec<Complex64> = psi_perp.iter().map(|z| z / norm).collect();
    let residual = vector_norm(&rho.matrix().apply(&perp)?);
    if residual > opts.orthogonality_tol {
        return Err(Error::NotOrthogonal {
            residual,
            tol: opts.orthogonality_tol,
        });
    }

    let comm = ordinary_brackets(rho, a, b)?.commutator;
    let branch = |s: f64| -> Result<f64> {
        let m = Operator::linear_combination(&[
            (Complex64::new(1.0, 0.0), a),
            (Complex64::new(0.0, s), b),
        ])?;
        // <(A + s iB) P (A - s iB)> = <x|rho|x> with x = (A + s iB) psi_perp
        let x = m.matrix().apply(&perp)?;
        let rx = rho.matrix().apply(&x)?;
        let proj = real_part_checked(crate::matrix::inner(&x, &rx), "projected moment")?;
        let shift = real_part_checked(Complex64::new(0.0, s) * comm, "i<[A,B]>")?;
        Ok(proj + shift)
    };
    let plus = branch(1.0)?;
    let minus = branch(-1.0)?;
    let (rhs, chosen) = match sign {
        Sign::Plus => (plus, "plus"),
        Sign::Minus => (minus, "minus"),
        Sign::Best if plus >= minus => (plus, "plus"),
        Sign::Best => (minus, "minus"),
    };
    let lhs = variance(rho, a)? + variance(rho, b)?;
    Ok(BoundReport::inequality(lhs, rhs, opts.tol)
        .with_real("rhs_plus", plus)
        .with_real("rhs_minus", minus)
        .with_label("sign", chosen)
        .with_real("orthogonality_residual", residual))
}

/// `<A'A><B'B> = |<[A,B]_G>|^2/4 + |<{A,B}_G>|^2/4 + <C'C><B'B>` with
/// `C = A - <B'A> B / <B'B>`.
///
/// Both sides are evaluated independently; `satisfied` means the relative
/// residual `|lhs - rhs| / max(1, |lhs|)` is within `equality_tol`.
pub fn unified_equality(rho: &DensityState, a: &Operator, b: &Operator, opts: &BoundOptions) -> Result<BoundReport> {
    let bb = second_origin_moment(rho, b)?;
    if bb <= opts.degeneracy_tol {
        return Err(Error::DegenerateInformationOperator {
            norm: bb,
            tol: opts.degeneracy_tol,
        });
    }
    let aa = second_origin_moment(rho, a)?;
    let lhs = aa * bb;
    let br = generalized_brackets(rho, a, b)?;
    let coef = form(rho, b, a)? / bb;
    let c = a.sub(&b.scale(coef))?;
    let remainder_term = second_origin_moment(rho, &c)? * bb;
    let commutator_term = br.commutator.norm_sqr() / 4.0;
    let anticommutator_term = br.anticommutator.norm_sqr() / 4.0;
    let rhs = commutator_term + anticommutator_term + remainder_term;
    let residual = (lhs - rhs).abs();
    let relative_residual = residual / lhs.abs().max(1.0);
    let mut report = BoundReport::inequality(lhs, rhs, opts.tol)
        .with_real("commutator_term", commutator_term)
        .with_real("anticommutator_term", anticommutator_term)
        .with_real("remainder_term", remainder_term)
        .with_real("residual", residual)
        .with_real("relative_residual", relative_residual)
        .with_complex("generalized_commutator", br.commutator)
        .with_complex("generalized_anticommutator", br.anticommutator);
    report.tol = opts.equality_tol;
    report.satisfied = relative_residual <= opts.equality_tol;
    Ok(report)
}

/// `<F'F> >= (|<i[F,O]_G>|^2 + |<{F,O}_G>|^2) / (4 <O'O>)`.
pub fn info_operator_bound(rho: &DensityState, f: &Operator, o: &Operator, opts: &BoundOptions) -> Result<BoundReport> {
    let oo = second_origin_moment(rho, o)?;
    if oo <= opts.degeneracy_tol {
        return Err(Error::DegenerateInformationOperator {
            norm: oo,
            tol: opts.degeneracy_tol,
        });
    }
    let lhs = second_origin_moment(rho, f)?;
    let br = generalized_brackets(rho, f, o)?;
    let i_comm = Complex64::new(0.0, 1.0) * br.commutator;
    let rhs = (i_comm.norm_sqr() + br.anticommutator.norm_sqr()) / (4.0 * oo);
    let projection = form(rho, o, f)?.norm_sqr() / oo;
    if (rhs - projection).abs() > 1e-12 * rhs.abs().max(1.0) {
        return Err(Error::NumericalInconsistency(alloc::format!(
            "bracket route {rhs:e} disagrees with projection route {projection:e}"
        )));
    }
    Ok(BoundReport::inequality(lhs, rhs, opts.tol)
        .with_real("information_norm", oo)
        .with_real("projection_term", projection)
        .with_complex("generalized_commutator", br.commutator)
        .with_complex("generalized_anticommutator", br.anticommutator))
}

/// Phase dependence of the two-observable bound for one information operator:
/// `LB(theta) = c0 + 2 Re(e^{i theta} z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseProfile {
    pub c0: f64,
    pub z: Complex64,
}

impl PhaseProfile {
    pub fn value(&self, theta: f64) -> f64 {
        self.c0 + 2.0 * (Complex64::from_polar(1.0, theta) * self.z).re
    }

    /// Maximizer in `[0, 2 pi)`.
    pub fn best_phase(&self) -> f64 {
        if self.z.norm() == 0.0 {
            return 0.0;
        }
        let t = -self.z.arg();
        if t < 0.0 {
            t + 2.0 * PI
        } else {
            t
        }
    }

    pub fn max(&self) -> f64 {
        self.c0 + 2.0 * self.z.norm()
    }
}

/// Phase profile of information operator `o` against observables `a`, `b`,
/// or `None` when `<O'O>` is at or below `degeneracy_tol`.
pub fn eq8_phase_profile(
    rho: &DensityState,
    a: &Operator,
    b: &Operator,
    o: &Operator,
    degeneracy_tol: f64,
) -> Result<Option<PhaseProfile>> {
    let oo = second_origin_moment(rho, o)?;
    if oo <= degeneracy_tol {
        return Ok(None);
    }
    let ac = checked(rho, a)?;
    let bc = checked(rho, b)?;
    let u = form(rho, o, &ac)?;
    let v = form(rho, o, &bc)?;
    let w0 = form(rho, &ac, &bc)?;
    Ok(Some(PhaseProfile {
        c0: (u.norm_sqr() + v.norm_sqr()) / oo,
        z: v * u.conj() / oo - w0,
    }))
}

/// `dA^2 + dB^2 >= max_O |<O'(A~ + e^{i theta} B~)>|^2 / <O'O> - <{A~, e^{i theta} B~}_G>`,
/// maximized over `theta` and over the admissible candidates.
///
/// Candidates with `<O'O> <= degeneracy_tol` are skipped; if none remain the
/// call fails with [`Error::DegenerateInformationOperator`].
pub fn eq8_bound(
    rho: &DensityState,
    a: &Operator,
    b: &Operator,
    candidates: &[(&str, &Operator)],
    opts: &BoundOptions,
) -> Result<BoundReport> {
    require_hermitian(a)?;
    require_hermitian(b)?;
    let lhs = variance(rho, a)? + variance(rho, b)?;
    let mut best: Option<(f64, f64, &str)> = None;
    let mut values = Vec::with_capacity(candidates.len());
    let mut largest_norm = 0.0f64;
    for &(label, o) in candidates {
        largest_norm = largest_norm.max(second_origin_moment(rho, o)?);
        let Some(profile) = eq8_phase_profile(rho, a, b, o, opts.degeneracy_tol)? else {
            continue;
        };
        let value = profile.max();
        values.push((label, value));
        if best.is_none_or(|(v, _, _)| value > v) {
            best = Some((value, profile.best_phase(), label));
        }
    }
    let (rhs, theta, label) = best.ok_or(Error::DegenerateInformationOperator {
        norm: largest_norm,
        tol: opts.degeneracy_tol,
    })?;
    let mut report = BoundReport::inequality(lhs, rhs, opts.tol)
        .with_real("theta", theta)
        .with_label("info_operator", label);
    for (l, v) in values {
        report = report.with_real(&alloc::format!("candidate_{l}"), v);
    }
    Ok(report)
}

/// `lambda1 A~ + lambda2 B~`; with `|lambda1| = |lambda2| != 0` it saturates
/// [`eq8_bound`].
pub fn combined_information_operator(
    rho: &DensityState,
    a: &Operator,
    b: &Operator,
    lambda1: Complex64,
    lambda2: Complex64,
) -> Result<Operator> {
    let ac = checked(rho, a)?;
    let bc = checked(rho, b)?;
    Operator::linear_combination(&[(lambda1, &ac), (lambda2, &bc)])
}

/// Product-form relation applied naively to the qubit ladder operators, with
/// ordinary brackets, alongside the unified equality for the same pair.
///
/// `satisfied` reports whether the naive relation holds; it can be false.
pub fn demo_nonhermitian(rho: &DensityState, opts: &BoundOptions) -> Result<BoundReport> {
    let (sp, sm) = ladder_operators();
    rho.require_dim(&sp)?;
    let lhs = variance(rho, &sp)? * variance(rho, &sm)?;
    let comm = ordinary_brackets(rho, &sp, &sm)?.commutator;
    let anti = ordinary_brackets(rho, &checked(rho, &sp)?, &checked(rho, &sm)?)?.anticommutator;
    let naive_commutator_term = comm.norm_sqr() / 4.0;
    let naive_anticommutator_term = anti.norm_sqr() / 4.0;
    let gen = generalized_brackets(rho, &sp, &sm)?;
    let mut report = BoundReport::inequality(lhs, naive_commutator_term + naive_anticommutator_term, opts.tol)
        .with_real("naive_commutator_term", naive_commutator_term)
        .with_real("naive_anticommutator_term", naive_anticommutator_term)
        .with_complex("generalized_commutator", gen.commutator)
        .with_complex("generalized_anticommutator", gen.anticommutator);
    match unified_equality(rho, &sp, &sm, opts) {
        Ok(u) => {
            report = report
                .with_real("unified_lhs", u.lhs)
                .with_real("unified_rhs", u.rhs)
                .with_real("unified_remainder_term", u.real("remainder_term").unwrap_or(0.0))
                .with_real("unified_residual", u.real("residual").unwrap_or(f64::NAN))
                .with_label("unified_status", if u.satisfied { "identity holds" } else { "identity FAILED" });
        }
        Err(Error::DegenerateInformationOperator { .. }) => {
            report = report.with_label("unified_status", "not admissible (<B'B> = 0)");
        }
        Err(e) => return Err(e),
    }
    Ok(report)
}

/// Two truncated bosonic modes `a1 = a (x) I`, `a2 = I (x) a`:
/// `<n1><n2> >= |<[a1,a2]_G>|^2/4 + |<{a1,a2}_G>|^2/4`.
pub fn demo_boson(rho: &DensityState, cutoff: usize, opts: &BoundOptions) -> Result<BoundReport> {
    let a = boson_annihilator(cutoff)?;
    let id = Operator::identity(cutoff);
    let a1 = tensor_product(&a, &id);
    let a2 = tensor_product(&id, &a);
    rho.require_dim(&a1)?;
    let n1 = second_origin_moment(rho, &a1)?;
    let n2 = second_origin_moment(rho, &a2)?;
    let br = generalized_brackets(rho, &a1, &a2)?;
    let commutator_term = br.commutator.norm_sqr() / 4.0;
    let anticommutator_term = br.anticommutator.norm_sqr() / 4.0;
    let mut report = BoundReport::inequality(n1 * n2, commutator_term + anticommutator_term, opts.tol)
        .with_real("n1", n1)
        .with_real("n2", n2)
        .with_real("commutator_term", commutator_term)
        .with_real("anticommutator_term", anticommutator_term);
    if n2 > opts.degeneracy_tol {
        let u = unified_equality(rho, &a1, &a2, opts)?;
        report = report
            .with_real("remainder_term", u.real("remainder_term").unwrap_or(0.0))
            .with_real("unified_residual", u.real("residual").unwrap_or(f64::NAN));
    }
    Ok(report)
}
