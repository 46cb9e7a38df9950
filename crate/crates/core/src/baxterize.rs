//! Baxterization of graded constant Yang–Baxter solutions.
//!
//! A constant `R = Σ_p R_p` with `R_p ∈ A^p ⊗ B^p` becomes
//! `R(μ) = Σ_p μ^p R_p`. For `Z^n` degrees the exponent is `τ(p)` for an
//! additive `τ: Z^n -> Z`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::{Algebra, Tensor};
use crate::hopf::Grading;
use crate::matrix::ParamMatrix;
use crate::scalar::{Monomial, ParamScalar, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BaxterError {
    #[error("term {left} ⊗ {right} is not diagonally graded: degrees {left_degree:?} vs {right_degree:?}")]
    NotDiagonallyGraded { left: String, right: String, left_degree: Vec<i32>, right_degree: Vec<i32> },
    #[error("grading ranks differ: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("expected an element of A ⊗ B, got arity {0}")]
    Arity(usize),
    #[error("plain baxterization needs a Z-grading; use a homomorphism for rank {0}")]
    NeedsHomomorphism(usize),
    #[error("tau is not additive: tau({p:?}) + tau({q:?}) != tau(p + q)")]
    NotAdditive { p: Vec<i32>, q: Vec<i32> },
    #[error("tau(0) = {0}, expected 0")]
    NonzeroAtOrigin(i32),
    #[error("matrix dimension {0} is not a square")]
    NotSquare(usize),
}

/// A constant `R` split into homogeneous components `R_p ∈ A^p ⊗ B^p`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedR {
    rank: usize,
    components: BTreeMap<Vec<i32>, Tensor<Scalar>>,
}

/// One leg of `A ⊗ B`: the algebra (for labels) and its grading.
pub type Leg<'a> = (&'a Algebra, &'a Grading);

/// Splits `R` by degree, requiring `d_A(left) = d_B(right)` on every term.
pub fn decompose_graded(r: &Tensor<Scalar>, left: Leg<'_>, right: Leg<'_>) -> Result<GradedR, BaxterError> {
    let (a, d_a) = left;
    let (b, d_b) = right;
    if r.arity() != 2 {
        return Err(BaxterError::Arity(r.arity()));
    }
    if d_a.rank() != d_b.rank() {
        return Err(BaxterError::RankMismatch(d_a.rank(), d_b.rank()));
    }
    let mut components: BTreeMap<Vec<i32>, Tensor<Scalar>> = BTreeMap::new();
    for (key, c) in r.terms() {
        let (p, q) = (d_a.degree(key[0]), d_b.degree(key[1]));
        if p != q {
            return Err(BaxterError::NotDiagonallyGraded {
                left: a.label(key[0]).to_string(),
                right: b.label(key[1]).to_string(),
                left_degree: p.to_vec(),
                right_degree: q.to_vec(),
            });
        }
        components.entry(p.to_vec()).or_insert_with(|| Tensor::zero(2)).add_term(key.clone(), c);
    }
    Ok(GradedR { rank: d_a.rank(), components })
}

impl GradedR {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn components(&self) -> impl Iterator<Item = (&Vec<i32>, &Tensor<Scalar>)> {
        self.components.iter()
    }

    pub fn component(&self, degree: &[i32]) -> Option<&Tensor<Scalar>> {
        self.components.get(degree)
    }

    /// `Σ_p R_p`, which reproduces the input.
    pub fn total(&self) -> Tensor<Scalar> {
        let mut out = Tensor::zero(2);
        for t in self.components.values() {
            out.add_assign(t);
        }
        out
    }

    /// The degree-zero component, i.e. `R(μ)` truncated at `μ -> 0` when all
    /// degrees are nonnegative.
    pub fn degree_zero(&self) -> Tensor<Scalar> {
        self.components.get(&vec![0; self.rank]).cloned().unwrap_or_else(|| Tensor::zero(2))
    }

    /// `R(μ) = Σ_p μ^p R_p` for a Z-grading.
    pub fn baxterize(&self) -> Result<Tensor<ParamScalar>, BaxterError> {
        if self.rank != 1 {
            return Err(BaxterError::NeedsHomomorphism(self.rank));
        }
        Ok(self.with_exponents(|p| p[0]))
    }

    /// `R(μ) = Σ_p μ^{τ(p)} R_p`. Additivity of `τ` is spot-checked on all
    /// pairs of component degrees.
    pub fn baxterize_zn(&self, tau: impl Fn(&[i32]) -> i32) -> Result<Tensor<ParamScalar>, BaxterError> {
        let zero = vec![0; self.rank];
        let t0 = tau(&zero);
        if t0 != 0 {
            return Err(BaxterError::NonzeroAtOrigin(t0));
        }
        for p in self.components.keys() {
            for q in self.components.keys() {
                let sum: Vec<i32> = p.iter().zip(q).map(|(x, y)| x + y).collect();
                if tau(p) + tau(q) != tau(&sum) {
                    return Err(BaxterError::NotAdditive { p: p.clone(), q: q.clone() });
                }
            }
        }
        Ok(self.with_exponents(tau))
    }

    fn with_exponents(&self, tau: impl Fn(&[i32]) -> i32) -> Tensor<ParamScalar> {
        let mut out = Tensor::zero(2);
        for (p, t) in &self.components {
            let m = Monomial::mu(tau(p));
            out.add_assign(&t.map_coeffs(|c| ParamScalar::term(c.clone(), m)));
        }
        out
    }
}

/// Sets `μ = ν = 1`.
pub fn at_mu_one(t: &Tensor<ParamScalar>) -> Tensor<Scalar> {
    t.map_coeffs(|c| c.at_one())
}

/// Keeps only the parameter-free part.
pub fn truncate_mu_zero(t: &Tensor<ParamScalar>) -> Tensor<Scalar> {
    t.map_coeffs(|c| c.constant_part())
}

/// Reads a `d^2 × d^2` matrix as an element of `End(V) ⊗ End(V)` in the
/// matrix-unit basis of [`Algebra::matrix_units`].
pub fn matrix_to_tensor(m: &ParamMatrix) -> Result<Tensor<ParamScalar>, BaxterError> {
    let d = m.local_dim().ok_or(BaxterError::NotSquare(m.dim()))?;
    let mut t = Tensor::zero(2);
    for (row, col, x) in m.entries() {
        let (r1, r2) = (row / d, row % d);
        let (c1, c2) = (col / d, col % d);
        t.add_term(vec![r1 * d + c1, r2 * d + c2], x);
    }
    Ok(t)
}

/// Inverse of [`matrix_to_tensor`].
pub fn tensor_to_matrix(t: &Tensor<ParamScalar>, d: usize) -> ParamMatrix {
    let mut m = ParamMatrix::zeros(d * d);
    for (key, x) in t.terms() {
        let (r1, c1) = (key[0] / d, key[0] % d);
        let (r2, c2) = (key[1] / d, key[1] % d);
        m.add_at(r1 * d + r2, c1 * d + c2, x);
    }
    m
}

/// Grading of `End(V)` with `e_{rc}` (0-based) in degree `f(r, c)`.
pub fn matrix_unit_grading(d: usize, f: impl Fn(usize, usize) -> i32) -> Grading {
    Grading::integer((0..d * d).map(|k| f(k / d, k % d)).collect())
}

/// Baxterizes a constant `d^2 × d^2` matrix through gradings of the two
/// `End(V)` legs.
pub fn baxterize_matrix(m: &ParamMatrix, left: &Grading, right: &Grading) -> Result<ParamMatrix, BaxterError> {
    let d = m.local_dim().ok_or(BaxterError::NotSquare(m.dim()))?;
    let t = matrix_to_tensor(m)?.map_coeffs(ParamScalar::at_one);
    let end = Algebra::matrix_units(d);
    let graded = decompose_graded(&t, (&end, left), (&end, right))?;
    Ok(tensor_to_matrix(&graded.baxterize()?, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Label;

    fn tiny() -> (Algebra, Grading) {
        let a = Algebra::matrix_units(2);
        let g = matrix_unit_grading(2, |r, c| c as i32 - r as i32);
        (a, g)
    }

    #[test]
    fn decomposition_round_trip_and_errors() {
        let (a, g) = tiny();
        let mut r = Tensor::zero(2);
        r.add_term(vec![0, 0], &Scalar::one());
        r.add_term(vec![1, 1], &Scalar::int(3));
        r.add_term(vec![3, 3], &Scalar::q());
        let graded = decompose_graded(&r, (&a, &g), (&a, &g)).unwrap();
        assert_eq!(graded.total(), r);
        assert_eq!(graded.components().count(), 2);
        let bax = graded.baxterize().unwrap();
        assert_eq!(at_mu_one(&bax), r);
        assert_eq!(truncate_mu_zero(&bax), graded.degree_zero());

        r.add_term(vec![1, 0], &Scalar::one());
        let err = decompose_graded(&r, (&a, &g), (&a, &g)).unwrap_err();
        assert!(
            matches!(err, BaxterError::NotDiagonallyGraded { ref left, .. } if left == &Label::MatrixUnit { row: 1, col: 2 }.to_string())
        );
    }

    #[test]
    fn tau_must_be_additive() {
        let a = Algebra::matrix_units(2);
        let g = Grading::lattice(2, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![0, 0]]);
        let mut r = Tensor::zero(2);
        for k in 0..4 {
            r.add_term(vec![k, k], &Scalar::one());
        }
        let graded = decompose_graded(&r, (&a, &g), (&a, &g)).unwrap();
        assert!(graded.baxterize().is_err());
        assert!(graded.baxterize_zn(|p| p[0] + 2 * p[1]).is_ok());
        assert!(matches!(graded.baxterize_zn(|p| p[0] * p[0] + p[1]), Err(BaxterError::NotAdditive { .. })));
        assert_eq!(graded.baxterize_zn(|_| 0).unwrap(), r.promote());
    }

    #[test]
    fn matrix_tensor_round_trip() {
        let mut m = ParamMatrix::zeros(9);
        m.set(2, 6, ParamScalar::mu_pow(2));
        m.set(1, 3, ParamScalar::constant(Scalar::int(-2)));
        m.set(8, 8, ParamScalar::one());
        assert_eq!(tensor_to_matrix(&matrix_to_tensor(&m).unwrap(), 3), m);
    }
}
