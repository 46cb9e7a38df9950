//! Taft algebras `T_{N,q} = <a, x | a^N = e, x^N = 0, xa = q ax>` with their
//! Hopf structure and x-degree grading, and representations of the double.
//!
//! The basis element `a^i x^j` sits at index `i * N + j`. `q` is `ζ_N^k` for a
//! unit `k` modulo `N`.

use num_integer::Integer;
use thiserror::Error;

use crate::algebra::{Algebra, Element, Label, Tensor};
use crate::baxterize::{decompose_graded, BaxterError};
use crate::double::{canonical_element, Representation};
use crate::hopf::{dual, dual_grading, Grading, HopfAlgebra};
use crate::matrix::{Matrix, ParamMatrix};
use crate::scalar::{gauss_binomial, q_bracket, q_bracket_factorial};
use crate::scalar::{ParamScalar, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TaftError {
    #[error("Taft algebras need N >= 2, got {0}")]
    OrderTooSmall(u32),
    #[error("q = zeta_{order}^{power} is not a primitive {order}-th root of unity")]
    NotPrimitive { order: u32, power: u32 },
    #[error("{name} = {value} is outside 1..={order}")]
    Label { name: &'static str, value: u32, order: u32 },
    #[error("grading check failed: {0}")]
    Grading(String),
    #[error(transparent)]
    Baxter(#[from] BaxterError),
    #[error("cannot normalize: corner entry is {0}")]
    Normalization(String),
}

/// `T_{N,q}` with its dual and grading.
#[derive(Clone, Debug)]
pub struct Taft {
    order: u32,
    q_power: u32,
    q: Scalar,
    hopf: HopfAlgebra,
    dual: HopfAlgebra,
    grading: Grading,
}

/// `ζ_N^k`.
pub fn root_of_unity(order: u32, k: i64) -> Scalar {
    Scalar::zeta_pow(order, k)
}

pub fn build_taft(order: u32, q_power: u32) -> Result<Taft, TaftError> {
    if order < 2 {
        return Err(TaftError::OrderTooSmall(order));
    }
    if q_power == 0 || q_power >= order || q_power.gcd(&order) != 1 {
        return Err(TaftError::NotPrimitive { order, power: q_power });
    }
    let n = order as usize;
    let q = root_of_unity(order, q_power as i64);
    let idx = |i: usize, j: usize| (i % n) * n + j;

    let labels = (0..n * n).map(|b| Label::Taft { a: (b / n) as u32, x: (b % n) as u32 }).collect();
    let mut table = Vec::with_capacity(n.pow(4));
    for b1 in 0..n * n {
        let (i, j) = (b1 / n, b1 % n);
        for b2 in 0..n * n {
            let (k, l) = (b2 / n, b2 % n);
            table.push(if j + l >= n {
                Element::zero()
            } else {
                Element::term(idx(i + k, j + l), q.pow((j * k) as i64))
            });
        }
    }
    let algebra = Algebra::new(format!("T({},q^{})", order, q_power), labels, table, Element::basis(0));

    let mut coproduct = Vec::with_capacity(n * n);
    let mut counit = Vec::with_capacity(n * n);
    for b in 0..n * n {
        let (i, j) = (b / n, b % n);
        let mut t = Tensor::zero(2);
        for k in 0..=j {
            let c = gauss_binomial(j as u32, k as u32, &q).expect("j < N keeps q-factorials invertible");
            t.add_term(vec![idx(j - k + i, k), idx(i, j - k)], &c);
        }
        coproduct.push(t);
        counit.push(if j == 0 { Scalar::one() } else { Scalar::zero() });
    }

    // S(a^i x^j) = S(x)^j S(a)^i with S(a) = a^{N-1}, S(x) = -a^{N-1} x.
    let s_a = Element::basis(idx(n - 1, 0));
    let s_x = Element::term(idx(n - 1, 1), Scalar::int(-1));
    let antipode = (0..n * n)
        .map(|b| {
            let (i, j) = (b / n, b % n);
            let mut acc = Element::basis(0);
            for _ in 0..j {
                acc = algebra.mul(&acc, &s_x);
            }
            for _ in 0..i {
                acc = algebra.mul(&acc, &s_a);
            }
            acc
        })
        .collect();

    let hopf = HopfAlgebra::new(algebra, coproduct, counit, antipode);
    let grading = Grading::integer((0..n * n).map(|b| (b % n) as i32).collect());
    let dual = dual(&hopf);
    Ok(Taft { order, q_power, q, hopf, dual, grading })
}

impl Taft {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn q_power(&self) -> u32 {
        self.q_power
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    /// `q^k`, for any integer `k`.
    pub fn q_pow(&self, k: i64) -> Scalar {
        self.q.pow(k)
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn dual(&self) -> &HopfAlgebra {
        &self.dual
    }

    /// `d(a^i x^j) = j`.
    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn index(&self, i: u32, j: u32) -> usize {
        ((i % self.order) * self.order + j) as usize
    }

    fn check_label(&self, name: &'static str, value: u32) -> Result<(), TaftError> {
        if value == 0 || value > self.order {
            return Err(TaftError::Label { name, value, order: self.order });
        }
        Ok(())
    }

    fn bracket_factorial(&self, n: u32) -> Scalar {
        q_bracket_factorial(n, &self.q)
    }

    /// `(m)_q! / (k)_q!` for `k <= m < N`.
    fn factorial_ratio(&self, m: u32, k: u32) -> Scalar {
        &self.bracket_factorial(m) / &self.bracket_factorial(k)
    }

    /// Dual action shared by all representations: `(a^m x^j)^*` acts as
    /// `e_{i+j,i} / (j)_q!` with `i ≡ m - l + 1 (mod N)` taken in `1..=N`,
    /// and as zero unless `1 <= i <= n - j`.
    fn dual_images(&self, n: u32, l: u32) -> Vec<Matrix> {
        let big_n = self.order as i64;
        let dim = n as usize;
        (0..self.order * self.order)
            .map(|b| {
                let (m, j) = (b / self.order, b % self.order);
                let i = (m as i64 - l as i64 + 1).rem_euclid(big_n);
                let i = if i == 0 { big_n } else { i } as u32;
                let mut out = Matrix::zeros(dim, dim);
                if i + j <= n {
                    let c = self.bracket_factorial(j).inv().expect("(j)_q! is nonzero for j < N");
                    out.set((i + j - 1) as usize, (i - 1) as usize, c);
                }
                out
            })
            .collect()
    }
}

/// The `n`-dimensional representation `π_{n,l}`:
///
/// ```text
/// π(a^i x^j) = Σ_{k=1}^{n-j} q^{(k-l-n)i} ((k+j-1)_q! / (k-1)_q!) Π_{p=0}^{j-1} (1 - q^{p+k-n}) e_{k,k+j}
/// ```
pub fn rep_irreducible(t: &Taft, n: u32, l: u32) -> Result<Representation, TaftError> {
    t.check_label("n", n)?;
    t.check_label("l", l)?;
    let dim = n as usize;
    let (nn, ll) = (n as i64, l as i64);
    let h_images = (0..t.order * t.order)
        .map(|b| {
            let (i, j) = ((b / t.order) as i64, b % t.order);
            let mut out = Matrix::zeros(dim, dim);
            for k in 1..=n.saturating_sub(j) {
                let kk = k as i64;
                let prod: Scalar = (0..j as i64).map(|p| &Scalar::one() - &t.q_pow(p + kk - nn)).product();
                let c = &(&t.q_pow((kk - ll - nn) * i) * &t.factorial_ratio(k + j - 1, k - 1)) * &prod;
                out.set((k - 1) as usize, (k + j - 1) as usize, c);
            }
            out
        })
        .collect();
    Ok(Representation::new(format!("pi_({},{})", n, l), dim, h_images, t.dual_images(n, l)))
}

/// The `N`-dimensional indecomposable `π_α` (labelled additionally by `l`):
///
/// ```text
/// π(a^i) = q^{-il} e_{1,1} + Σ_{k=2}^{N} q^{i(k-1-l)} e_{k,k}
/// π(a^i x^j) = α q^{-i(j+l)} ((N-2)_q! / (N-j-1)_q!) Π_{p=1}^{j-1} (1 - q^{-p}) e_{N+1-j,1}
///            + Σ_{k=2}^{N-j} q^{i(k-1-l)} ((k+j-2)_q! / (k-2)_q!) Π_{p=0}^{j-1} (1 - q^{k+p}) e_{k,k+j}     (j >= 1)
/// ```
///
/// with the dual action of `π_{N,l}`.
pub fn rep_indecomposable(t: &Taft, alpha: &Scalar, l: u32) -> Result<Representation, TaftError> {
    t.check_label("l", l)?;
    let big_n = t.order;
    let dim = big_n as usize;
    let ll = l as i64;
    let h_images = (0..big_n * big_n)
        .map(|b| {
            let (i, j) = ((b / big_n) as i64, b % big_n);
            let mut out = Matrix::zeros(dim, dim);
            if j == 0 {
                out.set(0, 0, t.q_pow(-i * ll));
            } else {
                let prod: Scalar = (1..j as i64).map(|p| &Scalar::one() - &t.q_pow(-p)).product();
                let c = alpha * &t.q_pow(-i * (j as i64 + ll)) * t.factorial_ratio(big_n - 2, big_n - j - 1) * prod;
                out.set((big_n - j) as usize, 0, c);
            }
            for k in 2..=big_n.saturating_sub(j) {
                let kk = k as i64;
                let prod: Scalar = (0..j as i64).map(|p| &Scalar::one() - &t.q_pow(kk + p)).product();
                let c = &t.q_pow(i * (kk - 1 - ll)) * &t.factorial_ratio(k + j - 2, k - 2) * prod;
                out.set((k - 1) as usize, (k + j - 1) as usize, c);
            }
            out
        })
        .collect();
    Ok(Representation::new(format!("pi_alpha(l={})", l), dim, h_images, t.dual_images(big_n, l)))
}

/// Generator images of `π_α`: `a ↦ diag(q^{k-1-l})`,
/// `x ↦ α e_{N,1} + Σ_{k=2}^{N-1} (k-1)_q (1 - q^k) e_{k,k+1}`.
pub fn indecomposable_generators(t: &Taft, alpha: &Scalar, l: u32) -> (Matrix, Matrix) {
    let big_n = t.order as usize;
    let a = Matrix::diagonal((1..=big_n).map(|k| t.q_pow(k as i64 - 1 - l as i64)).collect());
    let mut x = Matrix::zeros(big_n, big_n);
    x.add_at(big_n - 1, 0, alpha);
    for k in 2..big_n {
        let c = &q_bracket(k as u32 - 1, t.q()) * &(&Scalar::one() - &t.q_pow(k as i64));
        x.set(k - 1, k, c);
    }
    (a, x)
}

/// Overall scaling applied to a Taft R-matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// `Σ μ^j π(a^i x^j) ⊗ π((a^i x^j)^*)` as is.
    Raw,
    /// Divided by its `(1,1)` entry.
    UnitCorner,
}

impl std::str::FromStr for Normalization {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "raw" => Ok(Normalization::Raw),
            "unit-corner" => Ok(Normalization::UnitCorner),
            _ => Err(format!("unknown normalization `{}` (expected raw or unit-corner)", s)),
        }
    }
}

/// The Baxterized canonical element `Σ μ^j a^i x^j ⊗ (a^i x^j)^*` in
/// `T ⊗ T*`, obtained by grading the canonical element with the x-degree and
/// its dual grading.
pub fn baxterized_canonical(t: &Taft) -> Result<Tensor<ParamScalar>, TaftError> {
    let dual_deg = dual_grading(t.hopf(), t.grading()).map_err(|e| TaftError::Grading(e.to_string()))?;
    let graded = decompose_graded(
        &canonical_element(t.hopf()),
        (t.hopf().algebra(), t.grading()),
        (t.dual().algebra(), &dual_deg),
    )?;
    Ok(graded.baxterize()?)
}

/// `R(μ)` in `rep ⊗ rep` (or `R(1)` when not `parametric`).
pub fn taft_r_matrix(
    t: &Taft,
    rep: &Representation,
    parametric: bool,
    normalization: Normalization,
) -> Result<ParamMatrix, TaftError> {
    let mut r = baxterized_canonical(t)?;
    if !parametric {
        r = r.map_coeffs(|c| ParamScalar::constant(c.at_one()));
    }
    let m = rep.r_matrix(&r);
    match normalization {
        Normalization::Raw => Ok(m),
        Normalization::UnitCorner => {
            let corner = m.get(0, 0);
            let inv = corner
                .as_constant()
                .and_then(|c| c.inv())
                .ok_or_else(|| TaftError::Normalization(corner.to_string()))?;
            Ok(m.scale(&ParamScalar::constant(inv)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(build_taft(1, 1).unwrap_err(), TaftError::OrderTooSmall(1));
        assert_eq!(build_taft(4, 2).unwrap_err(), TaftError::NotPrimitive { order: 4, power: 2 });
        assert!(build_taft(6, 5).is_ok());
        let t = build_taft(3, 1).unwrap();
        assert!(matches!(rep_irreducible(&t, 4, 1), Err(TaftError::Label { name: "n", .. })));
        assert!(matches!(rep_irreducible(&t, 2, 0), Err(TaftError::Label { name: "l", .. })));
    }

    #[test]
    fn generator_relations() {
        let t = build_taft(4, 1).unwrap();
        let alg = t.hopf().algebra();
        let (a, x) = (Element::basis(t.index(1, 0)), Element::basis(t.index(0, 1)));
        // xa = q ax
        assert_eq!(alg.mul(&x, &a), Element::term(t.index(1, 1), t.q().clone()));
        let x3 = Element::basis(t.index(0, 3));
        assert!(alg.mul(&x3, &x).is_zero());
        // Δ(a) = a ⊗ a
        assert_eq!(t.hopf().coproduct(t.index(1, 0)), &crate::algebra::tensor_of(&[&a, &a]));
        // S(x) = -a^{N-1} x
        assert_eq!(t.hopf().antipode(t.index(0, 1)), &Element::term(t.index(3, 1), Scalar::int(-1)));
    }

    #[test]
    fn irreducible_corner_cases() {
        let t = build_taft(4, 1).unwrap();
        for n in 1..=4 {
            for l in 1..=4 {
                let rep = rep_irreducible(&t, n, l).unwrap();
                assert_eq!(rep.h_image(0), &Matrix::identity(n as usize));
                for j in n..4 {
                    assert!(rep.h_image(t.index(1, j)).is_zero());
                }
            }
        }
        let rep = rep_irreducible(&t, 3, 2).unwrap();
        let x = rep.h_image(t.index(0, 1));
        let support: Vec<_> = x.nonzeros().map(|(r, c, _)| (r, c)).collect();
        assert_eq!(support, vec![(0, 1), (1, 2)]);
    }
}
