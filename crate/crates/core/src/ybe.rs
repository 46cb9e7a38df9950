//! Exact verification of the constant and multiplicative-parametric
//! Yang–Baxter equations for matrices over [`ParamScalar`].
//!
//! The parametric equation `R12(μ) R13(μν) R23(ν) = R23(ν) R13(μν) R12(μ)` is
//! checked as a polynomial identity: the substitutions are exponent-vector
//! maps `μ^k -> μ^k ν^k` and `μ^k -> ν^k`, never numerical evaluation.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::matrix::ParamMatrix;
use crate::scalar::{Monomial, ParamScalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum YbeError {
    #[error("matrix dimension {0} is not a perfect square")]
    NotSquare(usize),
    #[error("constant check on a matrix with spectral-parameter dependence (entry ({0}, {1}))")]
    ParameterDependent(usize, usize),
    #[error("entry ({0}, {1}) depends on nu; R(mu) must be a function of mu alone")]
    NotSingleParameter(usize, usize),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Equation {
    Constant,
    Parametric,
    Braid,
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Equation::Constant => "constant YBE",
            Equation::Parametric => "parametric YBE",
            Equation::Braid => "braid relation",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct YbeReport {
    pub equation: Equation,
    /// Local dimension `d`; the residual lives on `V^{⊗3}` of dimension `d^3`.
    pub local_dim: usize,
    pub residual: ParamMatrix,
    pub passed: bool,
    /// Largest nonzero residual entry (by term count), 1-based.
    pub worst: Option<(usize, usize, ParamScalar)>,
}

impl YbeReport {
    fn new(equation: Equation, local_dim: usize, residual: ParamMatrix) -> Self {
        let worst = residual
            .entries()
            .max_by(|a, b| a.2.len().cmp(&b.2.len()).then(b.0.cmp(&a.0)).then(b.1.cmp(&a.1)))
            .map(|(r, c, x)| (r + 1, c + 1, x.clone()));
        YbeReport { equation, local_dim, passed: residual.is_zero(), residual, worst }
    }
}

impl fmt::Display for YbeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} on V^(x3), dim V = {}: {}",
            self.equation,
            self.local_dim,
            if self.passed { "pass" } else { "FAIL" }
        )?;
        if let Some((r, c, x)) = &self.worst {
            write!(f, " ({} nonzero residual entries; worst at ({}, {}): {})", self.residual.nnz(), r, c, x)?;
        }
        Ok(())
    }
}

/// Operator `R` acting on legs `legs` of `V^{⊗3}`.
pub fn embed_legs(r: &ParamMatrix, d: usize, legs: (usize, usize)) -> ParamMatrix {
    let mut out = ParamMatrix::zeros(d * d * d);
    let idx = |a: usize, b: usize, c: usize| (a * d + b) * d + c;
    for (row, col, x) in r.entries() {
        let (rp, rq) = (row / d, row % d);
        let (cp, cq) = (col / d, col % d);
        for other in 0..d {
            let (ri, ci) = match legs {
                (1, 2) => (idx(rp, rq, other), idx(cp, cq, other)),
                (1, 3) => (idx(rp, other, rq), idx(cp, other, cq)),
                (2, 3) => (idx(other, rp, rq), idx(other, cp, cq)),
                _ => panic!("invalid leg pair {:?}", legs),
            };
            out.set(ri, ci, x.clone());
        }
    }
    out
}

fn local_dim(r: &ParamMatrix) -> Result<usize, YbeError> {
    r.local_dim().ok_or(YbeError::NotSquare(r.dim()))
}

/// Both sides `(R12 R13 R23, R23 R13 R12)` of the Yang–Baxter equation. With
/// `parametric`, the three factors carry the arguments `μ`, `μν` and `ν`.
pub fn ybe_sides(r: &ParamMatrix, parametric: bool) -> Result<(ParamMatrix, ParamMatrix), YbeError> {
    let d = local_dim(r)?;
    let (r12, r13, r23) = if parametric {
        for (row, col, x) in r.entries() {
            if x.terms().any(|(m, _)| m.nu != 0) {
                return Err(YbeError::NotSingleParameter(row + 1, col + 1));
            }
        }
        (
            embed_legs(r, d, (1, 2)),
            embed_legs(&r.map_monomials(|m| Monomial::new(m.mu, m.mu)), d, (1, 3)),
            embed_legs(&r.map_monomials(|m| Monomial::new(0, m.mu)), d, (2, 3)),
        )
    } else {
        (embed_legs(r, d, (1, 2)), embed_legs(r, d, (1, 3)), embed_legs(r, d, (2, 3)))
    };
    let lhs = r12.mul(&r13).mul(&r23);
    let rhs = r23.mul(&r13).mul(&r12);
    Ok((lhs, rhs))
}

/// `R12 R13 R23 = R23 R13 R12` for a parameter-free `R`.
pub fn check_constant_ybe(r: &ParamMatrix) -> Result<YbeReport, YbeError> {
    for (row, col, x) in r.entries() {
        if !x.is_constant() {
            return Err(YbeError::ParameterDependent(row + 1, col + 1));
        }
    }
    let d = local_dim(r)?;
    let (lhs, rhs) = ybe_sides(r, false)?;
    Ok(YbeReport::new(Equation::Constant, d, lhs.sub(&rhs)))
}

/// `R12(μ) R13(μν) R23(ν) = R23(ν) R13(μν) R12(μ)` as a Laurent-polynomial
/// identity in `μ, ν`.
pub fn check_parametric_ybe(r: &ParamMatrix) -> Result<YbeReport, YbeError> {
    let d = local_dim(r)?;
    let (lhs, rhs) = ybe_sides(r, true)?;
    Ok(YbeReport::new(Equation::Parametric, d, lhs.sub(&rhs)))
}

/// Braid form `Ř12 Ř23 Ř12 = Ř23 Ř12 Ř23` with `Ř = P R`.
pub fn braid_check(r: &ParamMatrix) -> Result<YbeReport, YbeError> {
    for (row, col, x) in r.entries() {
        if !x.is_constant() {
            return Err(YbeError::ParameterDependent(row + 1, col + 1));
        }
    }
    let d = local_dim(r)?;
    let braid = ParamMatrix::flip(d).mul(r);
    let b12 = embed_legs(&braid, d, (1, 2));
    let b23 = embed_legs(&braid, d, (2, 3));
    let lhs = b12.mul(&b23).mul(&b12);
    let rhs = b23.mul(&b12).mul(&b23);
    Ok(YbeReport::new(Equation::Braid, d, lhs.sub(&rhs)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn flip_scaled(d: usize) -> ParamMatrix {
        ParamMatrix::flip(d).scale(&ParamScalar::constant(Scalar::int(3)))
    }

    #[test]
    fn identity_and_flip_pass() {
        for d in 1..=3 {
            let id = ParamMatrix::identity(d * d);
            assert!(check_constant_ybe(&id).unwrap().passed);
            assert!(check_parametric_ybe(&id).unwrap().passed);
            assert!(braid_check(&id).unwrap().passed);
            assert!(check_constant_ybe(&flip_scaled(d)).unwrap().passed);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(check_constant_ybe(&ParamMatrix::identity(5)).unwrap_err(), YbeError::NotSquare(5));
        let mut m = ParamMatrix::identity(4);
        m.set(0, 1, ParamScalar::mu_pow(1));
        assert!(matches!(check_constant_ybe(&m), Err(YbeError::ParameterDependent(1, 2))));
        m.set(0, 1, ParamScalar::term(Scalar::one(), Monomial::new(0, 1)));
        assert!(matches!(check_parametric_ybe(&m), Err(YbeError::NotSingleParameter(1, 2))));
    }

    #[test]
    fn embedding_matches_kronecker() {
        use crate::matrix::Matrix;
        let q = Scalar::q();
        let r = Matrix::from_rows(vec![
            vec![q.clone(), Scalar::zero(), Scalar::zero(), Scalar::one()],
            vec![Scalar::zero(), Scalar::one(), Scalar::int(2), Scalar::zero()],
            vec![Scalar::zero(), Scalar::zero(), Scalar::one(), Scalar::zero()],
            vec![Scalar::int(5), Scalar::zero(), Scalar::zero(), q],
        ]);
        let id = Matrix::identity(2);
        let pr = ParamMatrix::from_dense(&r);
        assert_eq!(embed_legs(&pr, 2, (1, 2)), ParamMatrix::from_dense(&r.kron(&id)));
        assert_eq!(embed_legs(&pr, 2, (2, 3)), ParamMatrix::from_dense(&id.kron(&r)));
        let p23 = ParamMatrix::from_dense(&Matrix::identity(2).kron(&Matrix::from_rows(vec![
            vec![Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::zero()],
            vec![Scalar::zero(), Scalar::zero(), Scalar::one(), Scalar::zero()],
            vec![Scalar::zero(), Scalar::one(), Scalar::zero(), Scalar::zero()],
            vec![Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::one()],
        ])));
        let r13 = p23.mul(&embed_legs(&pr, 2, (1, 2))).mul(&p23);
        assert_eq!(embed_legs(&pr, 2, (1, 3)), r13);
    }
}
