//! Scalar functionals of a state and operators.
//!
//! The variance of a non-Hermitian `Q` is `<Q'Q> - |<Q>|^2`, i.e. the second
//! origin moment of the checked operator `Q - <Q>`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::model::{DensityState, Operator};

/// Largest imaginary part tolerated on quantities that are real in exact
/// arithmetic.
pub const IMAG_LEAK_TOL: f64 = 1e-10;

/// Negative round-off on second moments that is silently clamped to zero.
const NEGATIVE_CLAMP: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentReport {
    pub expectation: Complex64,
    pub second_origin_moment: f64,
    pub variance: f64,
}

/// `(<[A,B]_G>, <{A,B}_G>)` with `[A,B]_G = A'B - B'A`, `{A,B}_G = A'B + B'A`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Brackets {
    pub commutator: Complex64,
    pub anticommutator: Complex64,
}

/// `Tr(rho Q)`
pub fn expectation(rho: &DensityState, q: &Operator) -> Result<Complex64> {
    rho.require_dim(q)?;
    rho.matrix().trace_of_product(q.matrix())
}

/// `Q - <Q> I`, using the full complex mean.
pub fn checked(rho: &DensityState, q: &Operator) -> Result<Operator> {
    let mean = expectation(rho, q)?;
    Ok(Operator::from_square(q.matrix().shift_diagonal(-mean)?))
}

/// `Tr(rho A'B)`: the state-weighted sesquilinear form.
pub fn form(rho: &DensityState, a: &Operator, b: &Operator) -> Result<Complex64> {
    rho.require_dim(a)?;
    rho.require_dim(b)?;
    let ab = a.matrix().adjoint().mat_mul(b.matrix())?;
    rho.matrix().trace_of_product(&ab)
}

/// `Tr(rho Q'Q)` as a real number.
pub fn second_origin_moment(rho: &DensityState, q: &Operator) -> Result<f64> {
    real_nonnegative(form(rho, q, q)?, "second origin moment")
}

pub fn variance(rho: &DensityState, q: &Operator) -> Result<f64> {
    second_origin_moment(rho, &checked(rho, q)?)
}

pub fn moments(rho: &DensityState, q: &Operator) -> Result<MomentReport> {
    let expectation = expectation(rho, q)?;
    let second_origin_moment = second_origin_moment(rho, q)?;
    let variance = variance(rho, q)?;
    Ok(MomentReport {
        expectation,
        second_origin_moment,
        variance,
    })
}

pub fn generalized_brackets(rho: &DensityState, a: &Operator, b: &Operator) -> Result<Brackets> {
    let ab = form(rho, a, b)?;
    let ba = form(rho, b, a)?;
    Ok(Brackets {
        commutator: ab - ba,
        anticommutator: ab + ba,
    })
}

/// Ordinary `<AB - BA>` and `<AB + BA>`.
pub fn ordinary_brackets(rho: &DensityState, a: &Operator, b: &Operator) -> Result<Brackets> {
    let ab = expectation(rho, &a.mul(b)?)?;
    let ba = expectation(rho, &b.mul(a)?)?;
    Ok(Brackets {
        commutator: ab - ba,
        anticommutator: ab + ba,
    })
}

/// Real part of a quantity that must be real, failing on imaginary leakage.
pub fn real_part_checked(z: Complex64, what: &str) -> Result<f64> {
    if z.im.abs() > IMAG_LEAK_TOL {
        return Err(Error::NumericalInconsistency(alloc::format!(
            "{what} has imaginary part {:e}",
            z.im
        )));
    }
    Ok(z.re)
}

fn real_nonnegative(z: Complex64, what: &str) -> Result<f64> {
    let re = real_part_checked(z, what)?;
    if re >= 0.0 {
        Ok(re)
    } else if re >= -NEGATIVE_CLAMP {
        Ok(0.0)
    } else {
        Err(Error::NumericalInconsistency(alloc::format!("{what} is negative ({re:e})")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ComplexMatrix;
    use crate::model::{boson_annihilator, ladder_operators, pauli, spin_operators};
    use core::f64::consts::FRAC_1_SQRT_2;

    fn diagonal_spin1_state(alpha: f64) -> DensityState {
        DensityState::new(ComplexMatrix::from_diag(&[alpha.cos().powi(2), 0.0, alpha.sin().powi(2)])).unwrap()
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    #[test]
    fn expectations_on_diagonal_spin1_family() {
        let (jx, _, jz) = spin_operators(2).unwrap();
        for &a in &[0.0, 0.3, 1.1, 2.5] {
            let rho = diagonal_spin1_state(a);
            assert!((expectation(&rho, &jz).unwrap() - (2.0 * a).cos()).norm() < 1e-12);
            assert!(expectation(&rho, &jx).unwrap().norm() < 1e-15);
            assert!((expectation(&rho, &Operator::identity(3)).unwrap() - 1.0).norm() < 1e-15);
            assert!(close(variance(&rho, &jx).unwrap(), 0.5));
            assert!(close(variance(&rho, &jz).unwrap(), (2.0 * a).sin().powi(2)));
            assert!(close(
                second_origin_moment(&rho, &checked(&rho, &jz).unwrap()).unwrap(),
                (2.0 * a).sin().powi(2)
            ));
        }
    }

    #[test]
    fn checked_subtracts_mean() {
        let rho = DensityState::new(ComplexMatrix::from_diag(&[1.0, 0.0])).unwrap();
        let q = Operator::new(ComplexMatrix::from_diag(&[2.0, 0.0])).unwrap();
        let qc = checked(&rho, &q).unwrap();
        assert_eq!(qc.matrix(), &ComplexMatrix::from_diag(&[0.0, -2.0]));
        assert!(expectation(&rho, &qc).unwrap().norm() < 1e-12);

        let (sx, _, _) = pauli();
        assert_eq!(checked(&rho, &sx).unwrap(), sx);
    }

    #[test]
    fn annihilated_states_have_zero_moment() {
        let (sp, _) = ladder_operators();
        let excited = DensityState::pure_real(&[1.0, 0.0]).unwrap();
        assert_eq!(second_origin_moment(&excited, &sp).unwrap(), 0.0);
        let a = boson_annihilator(4).unwrap();
        let vacuum = DensityState::pure_real(&[1.0, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!(second_origin_moment(&vacuum, &a).unwrap(), 0.0);
    }

    #[test]
    fn eigenstate_has_zero_variance() {
        let (_, _, jz) = spin_operators(2).unwrap();
        let rho = DensityState::pure_real(&[1.0, 0.0, 0.0]).unwrap();
        assert_eq!(variance(&rho, &jz).unwrap(), 0.0);
    }

    #[test]
    fn superposition_jz_variance() {
        let (_, _, jz) = spin_operators(2).unwrap();
        for &b in &[0.2, 0.7, 1.3] {
            let rho = DensityState::pure_real(&[f64::cos(b), 0.0, f64::sin(b)]).unwrap();
            assert!(close(variance(&rho, &jz).unwrap(), (2.0 * b).sin().powi(2)));
        }
    }

    #[test]
    fn form_examples() {
        let rho = DensityState::pure_real(&[1.0, 0.0]).unwrap();
        let (sx, sy, _) = pauli();
        let e21 = Operator::new(ComplexMatrix::from_real_rows(&[&[0.0, 0.0], &[1.0, 0.0]]).unwrap()).unwrap();
        assert!((form(&rho, &e21, &sx).unwrap() - 1.0).norm() < 1e-15);
        assert!((form(&rho, &e21, &sy).unwrap() - Complex64::new(0.0, 1.0)).norm() < 1e-15);
        assert!((form(&rho, &sx, &sx).unwrap().re - second_origin_moment(&rho, &sx).unwrap()).abs() < 1e-12);
        assert_eq!(form(&rho, &Operator::identity(2), &sy).unwrap(), expectation(&rho, &sy).unwrap());
    }

    #[test]
    fn brackets() {
        let rho = DensityState::pure_real(&[1.0, 0.0]).unwrap();
        let (sx, sy, _) = pauli();
        let b = generalized_brackets(&rho, &sx, &sy).unwrap();
        assert!((b.commutator - Complex64::new(0.0, 2.0)).norm() < 1e-15);
        assert_eq!(generalized_brackets(&rho, &sx, &sx).unwrap().commutator, Complex64::new(0.0, 0.0));

        let (sp, sm) = ladder_operators();
        let plus = DensityState::pure_real(&[FRAC_1_SQRT_2, FRAC_1_SQRT_2]).unwrap();
        let b = generalized_brackets(&plus, &sp, &sm).unwrap();
        assert_eq!(b.commutator.norm(), 0.0);
        assert_eq!(b.anticommutator.norm(), 0.0);
    }

    #[test]
    fn dimension_mismatch() {
        let rho = DensityState::pure_real(&[1.0, 0.0]).unwrap();
        let (jx, _, _) = spin_operators(2).unwrap();
        assert!(matches!(expectation(&rho, &jx), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(variance(&rho, &jx), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn imaginary_leak_is_reported() {
        assert!(real_part_checked(Complex64::new(1.0, 1e-6), "x").is_err());
        assert_eq!(real_part_checked(Complex64::new(1.0, 1e-12), "x").unwrap(), 1.0);
    }
}
