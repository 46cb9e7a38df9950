//! Finite-dimensional representations of `U_q[sl(2)]` over `Q(s)`, `s^2 = q`,
//! and the universal R-matrix evaluated in them.
//!
//! ```text
//! R(μ) = Σ_n μ^n q^{n(n+1)/2} (1 - q^{-2})^n / [n]_q! · q^{(h ⊗ h)/2} · e^n ⊗ f^n
//! ```
//!
//! `e` and `f` are stored as `c · E`, `c · F` with `c^2` kept exactly, so the
//! square root in the spin-1 normalization never has to be adjoined: the
//! `n`-th term only involves `c^{2n}`.

use std::fmt;

use crate::algebra::{Algebra, Tensor};
use crate::baxterize::{matrix_to_tensor, matrix_unit_grading};
use crate::hopf::{check_grading, Grading, GradingCheck, GradingReport, Violation};
use crate::matrix::{Matrix, ParamMatrix};
use crate::scalar::{q_number, q_number_factorial, Monomial, ParamScalar, Scalar};

/// A weight representation: `h` is diagonal with integer weights, `e = c E`,
/// `f = c F` with `c^2 = scale_sq`.
#[derive(Clone, Debug)]
pub struct WeightedRep {
    name: String,
    weights: Vec<i32>,
    e: Matrix,
    f: Matrix,
    scale_sq: Scalar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Spin {
    Half,
    One,
}

impl std::str::FromStr for Spin {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "1/2" | "half" | "0.5" => Ok(Spin::Half),
            "1" | "one" => Ok(Spin::One),
            _ => Err(format!("unsupported spin `{}` (expected 1/2 or 1)", s)),
        }
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Spin::Half => "1/2",
            Spin::One => "1",
        })
    }
}

fn shift_matrix(d: usize, up: bool) -> Matrix {
    let mut m = Matrix::zeros(d, d);
    for k in 0..d - 1 {
        if up {
            m.set(k, k + 1, Scalar::one());
        } else {
            m.set(k + 1, k, Scalar::one());
        }
    }
    m
}

/// `e = E_{12}`, `f = E_{21}`, `h = diag(1, -1)`.
pub fn spin_half() -> WeightedRep {
    WeightedRep {
        name: "spin-1/2".into(),
        weights: vec![1, -1],
        e: shift_matrix(2, true),
        f: shift_matrix(2, false),
        scale_sq: Scalar::one(),
    }
}

/// `e = √(q + q^{-1}) (E_{12} + E_{23})`, `f = √(q + q^{-1}) (E_{21} + E_{32})`,
/// `h = diag(2, 0, -2)`.
pub fn spin_one() -> WeightedRep {
    let q = Scalar::q();
    WeightedRep {
        name: "spin-1".into(),
        weights: vec![2, 0, -2],
        e: shift_matrix(3, true),
        f: shift_matrix(3, false),
        scale_sq: &q + &q.inv().expect("q is invertible"),
    }
}

pub fn spin(s: Spin) -> WeightedRep {
    match s {
        Spin::Half => spin_half(),
        Spin::One => spin_one(),
    }
}

impl WeightedRep {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[i32] {
        &self.weights
    }

    pub fn h(&self) -> Matrix {
        Matrix::diagonal(self.weights.iter().map(|&w| Scalar::int(w as i64)).collect())
    }

    /// `e` without its scale factor.
    pub fn e_unscaled(&self) -> &Matrix {
        &self.e
    }

    pub fn f_unscaled(&self) -> &Matrix {
        &self.f
    }

    /// Square of the common scale factor of `e` and `f`.
    pub fn scale_sq(&self) -> &Scalar {
        &self.scale_sq
    }

    /// `q^{t h / 2} = diag(s^{t w})`.
    pub fn k_half_pow(&self, t: i64) -> Matrix {
        Matrix::diagonal(self.weights.iter().map(|&w| Scalar::s_pow(t * w as i64)).collect())
    }

    /// `K = q^h`.
    pub fn k(&self) -> Matrix {
        self.k_half_pow(2)
    }

    /// Checks the defining relations and nilpotency; returns the names of the
    /// failing ones.
    pub fn relation_failures(&self) -> Vec<&'static str> {
        let mut failures = Vec::new();
        let h = self.h();
        // [h, cE] = 2 cE reduces to [h, E] = 2E.
        if h.commutator(&self.e) != self.e.scale(&Scalar::int(2)) {
            failures.push("[h,e] = 2e");
        }
        if h.commutator(&self.f) != self.f.scale(&Scalar::int(-2)) {
            failures.push("[h,f] = -2f");
        }
        let q = Scalar::q();
        let qk: Vec<Scalar> = self.weights.iter().map(|&w| q_number(w as i64, &q).expect("q invertible")).collect();
        if self.e.commutator(&self.f).scale(&self.scale_sq) != Matrix::diagonal(qk) {
            failures.push("[e,f] = (q^h - q^-h)/(q - q^-1)");
        }
        let d = self.dim() as u32;
        if !self.e.pow(d).is_zero() || !self.f.pow(d).is_zero() {
            failures.push("e^d = f^d = 0");
        }
        failures
    }

    /// `q^{(h ⊗ h)/2}` on `V ⊗ V`.
    pub fn cartan_factor(&self) -> Matrix {
        Matrix::diagonal(
            self.weights
                .iter()
                .flat_map(|&a| self.weights.iter().map(move |&b| Scalar::s_pow(a as i64 * b as i64)))
                .collect(),
        )
    }

    /// The degree `(w_r - w_c)/2` of `e_{rc}` on the `e`-leg.
    pub fn e_leg_grading(&self) -> Grading {
        let w = self.weights.clone();
        matrix_unit_grading(self.dim(), move |r, c| (w[r] - w[c]) / 2)
    }

    /// The degree `(w_c - w_r)/2` of `e_{rc}` on the `f`-leg.
    pub fn f_leg_grading(&self) -> Grading {
        let w = self.weights.clone();
        matrix_unit_grading(self.dim(), move |r, c| (w[c] - w[r]) / 2)
    }
}

/// The `n`-th series term without `μ`:
/// `q^{n(n+1)/2} (1 - q^{-2})^n / [n]_q! · c^{2n} · q^{(h⊗h)/2} (E^n ⊗ F^n)`.
pub fn series_term(rep: &WeightedRep, n: u32) -> Matrix {
    let q = Scalar::q();
    let one_minus = &Scalar::one() - &q.pow(-2);
    let coeff = Scalar::s_pow((n * (n + 1)) as i64)
        * one_minus.pow(n as i64)
        * rep.scale_sq.pow(n as i64)
        * q_number_factorial(n, &q).expect("generic q").inv().expect("[n]_q! is nonzero at generic q");
    let legs = rep.e.pow(n).kron(&rep.f.pow(n));
    rep.cartan_factor().mul(&legs).scale(&coeff)
}

/// The series terms `n = 0, 1, ...` up to the nilpotency bound `d - 1`.
pub fn series_terms(rep: &WeightedRep) -> Vec<(u32, Matrix)> {
    (0..rep.dim() as u32).map(|n| (n, series_term(rep, n))).collect()
}

/// `R(μ)` (or `R(1)` when not `parametric`) in `V ⊗ V`.
pub fn uqsl2_r_matrix(rep: &WeightedRep, parametric: bool) -> ParamMatrix {
    let mut out = ParamMatrix::zeros(rep.dim() * rep.dim());
    for (n, term) in series_terms(rep) {
        let m = Monomial::mu(if parametric { n as i32 } else { 0 });
        for (r, c, x) in term.nonzeros() {
            out.add_at(r, c, &ParamScalar::term(x.clone(), m));
        }
    }
    out
}

/// Coproduct on generators: `Δ(e) = e ⊗ K + 1 ⊗ e`, `Δ(f) = f ⊗ 1 + K^{-1} ⊗ f`,
/// `Δ(K) = K ⊗ K`, as matrices on `V ⊗ V`. The common scale of `e`, `f` is
/// omitted (it is a scalar and does not affect degrees or intertwining).
pub fn coproduct_images(rep: &WeightedRep) -> [(&'static str, Matrix); 3] {
    let id = Matrix::identity(rep.dim());
    let k = rep.k();
    let k_inv = rep.k_half_pow(-2);
    [("e", rep.e.kron(&k).add(&id.kron(&rep.e))), ("f", rep.f.kron(&id).add(&k_inv.kron(&rep.f))), ("K", k.kron(&k))]
}

/// Generator images on `V` matching [`coproduct_images`].
pub fn generator_images(rep: &WeightedRep) -> [(&'static str, Matrix); 3] {
    [("e", rep.e.clone()), ("f", rep.f.clone()), ("K", rep.k())]
}

/// Grading checks for the `A^k = H e^k`, `B^k = H f^k` gradings, realized on
/// `End(V)` by matrix-unit degrees: multiplicativity on each leg, and the
/// coproduct condition on `Δ(e^k K^m)` and `Δ(f^k K^m)`.
pub fn grading_reports(rep: &WeightedRep) -> Vec<GradingReport> {
    let d = rep.dim();
    let end = Algebra::matrix_units(d);
    let (ge, gf) = (rep.e_leg_grading(), rep.f_leg_grading());
    let mut reports = vec![check_grading(&end, &ge), check_grading(&end, &gf)];

    let [(_, de), (_, df), (_, dk)] = coproduct_images(rep);
    let dk_inv = rep.k_half_pow(-2).kron(&rep.k_half_pow(-2));
    for (name, gen, grading) in [("e", &de, &ge), ("f", &df, &gf)] {
        let mut violations = Vec::new();
        for k in 0..d as u32 {
            for m in -2i32..=2 {
                let kpow = if m >= 0 { dk.pow(m as u32) } else { dk_inv.pow((-m) as u32) };
                let image = gen.pow(k).mul(&kpow);
                let t = matrix_to_tensor(&ParamMatrix::from_dense(&image)).expect("square");
                for (key, _) in t.terms() {
                    let found = grading.int_degree(key[0]) + grading.int_degree(key[1]);
                    if found != k as i32 {
                        violations.push(Violation {
                            basis: vec![
                                format!("{}^{} K^{}", name, k, m),
                                end.label(key[0]).to_string(),
                                end.label(key[1]).to_string(),
                            ],
                            expected: vec![k as i32],
                            found: vec![found],
                        });
                        break;
                    }
                }
            }
        }
        reports.push(GradingReport {
            check: GradingCheck::Coproduct,
            passed: violations.is_empty(),
            nontrivial: grading.is_nontrivial(),
            violations,
        });
    }
    reports
}

/// `R Δ(x) = Δ^op(x) R` for the generators; returns the failing ones.
pub fn intertwining_failures(rep: &WeightedRep) -> Vec<&'static str> {
    let d = rep.dim();
    let r = uqsl2_r_matrix(rep, false);
    let flip = ParamMatrix::flip(d);
    coproduct_images(rep)
        .into_iter()
        .filter(|(_, delta)| {
            let x = ParamMatrix::from_dense(delta);
            r.mul(&x) != flip.mul(&x).mul(&flip).mul(&r)
        })
        .map(|(name, _)| name)
        .collect()
}

/// The series as an element of `End(V) ⊗ End(V)` with each term tagged by `n`.
pub fn series_tensors(rep: &WeightedRep) -> Vec<(u32, Tensor<ParamScalar>)> {
    series_terms(rep)
        .into_iter()
        .map(|(n, m)| (n, matrix_to_tensor(&ParamMatrix::from_dense(&m)).expect("square")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_hold() {
        for rep in [spin_half(), spin_one()] {
            assert!(rep.relation_failures().is_empty(), "{}: {:?}", rep.name(), rep.relation_failures());
        }
    }

    #[test]
    fn weights_match_h() {
        assert_eq!(spin_half().h(), Matrix::diagonal(vec![Scalar::int(1), Scalar::int(-1)]));
        assert_eq!(spin_one().weights(), &[2, 0, -2]);
    }

    #[test]
    fn truncation() {
        for rep in [spin_half(), spin_one()] {
            let d = rep.dim() as u32;
            for n in d..d + 2 {
                assert!(series_term(&rep, n).is_zero());
            }
        }
    }

    #[test]
    fn spin_half_commutator() {
        let rep = spin_half();
        let ef = rep.e_unscaled().commutator(rep.f_unscaled());
        assert_eq!(ef, Matrix::diagonal(vec![Scalar::one(), Scalar::int(-1)]));
    }
}
