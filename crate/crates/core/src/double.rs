//! Drinfeld double `D(H) = H ⋈ H^{*cop}` of a finite-dimensional Hopf algebra,
//! its canonical R-element, and representations of the double given by a
//! pair of compatible actions of `H` and `H*`.
//!
//! Basis elements are normal-ordered products `h f` with `h` from the basis of
//! `H` and `f` from the dual basis; `h f` sits at index `h * dim H + f`. The
//! reordering rule is
//!
//! ```text
//! f h = Σ_(h) Σ_k <f, h_(3) a_k S^{-1}(h_(1))> h_(2) a_k^*
//! ```
//!
//! with `Δ²(h) = h_(1) ⊗ h_(2) ⊗ h_(3)`. The coproduct is
//! `Δ(h f) = Σ h_(1) f_(2) ⊗ h_(2) f_(1)` and the counit `ε(h) f(e)`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::algebra::{embed, tensor_multiply, Algebra, Coeff, Element, Label, Tensor};
use crate::hopf::{dual, HopfAlgebra};
use crate::matrix::{Matrix, ParamMatrix};
use crate::scalar::{Monomial, ParamScalar, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DoubleError {
    #[error("the antipode of {0} is not invertible")]
    NonInvertibleAntipode(String),
    #[error("{part} does not embed as a subalgebra: product of {left} and {right} differs")]
    NotEmbedded { part: &'static str, left: String, right: String },
}

/// The reordering rule `f h = Σ c h' a_k^*`, tabulated on basis pairs.
#[derive(Clone, Debug)]
pub struct CrossRelation {
    dim: usize,
    /// `table[f * dim + h]` lists `(h', k, c)`.
    table: Vec<Vec<(usize, usize, Scalar)>>,
}

impl CrossRelation {
    pub fn new(h: &HopfAlgebra) -> Result<Self, DoubleError> {
        let n = h.dim();
        let alg = h.algebra();
        let s_inv = h.antipode_inverse().ok_or_else(|| DoubleError::NonInvertibleAntipode(alg.name().to_string()))?;
        let mut acc: Vec<BTreeMap<(usize, usize), Scalar>> = vec![BTreeMap::new(); n * n];
        for hb in 0..n {
            for (key, c) in h.coproduct2(hb).terms() {
                let (h1, h2, h3) = (key[0], key[1], key[2]);
                for k in 0..n {
                    let el = alg.mul(alg.product(h3, k), &s_inv[h1]);
                    for (f, x) in el.terms() {
                        *acc[f * n + hb].entry((h2, k)).or_default() += &(c * x);
                    }
                }
            }
        }
        let table = acc
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, c)| !c.is_zero()).map(|((a, b), c)| (a, b, c)).collect())
            .collect();
        Ok(CrossRelation { dim: n, table })
    }

    /// Terms `(h', k, c)` of `f h = Σ c h' a_k^*`.
    pub fn terms(&self, f: usize, h: usize) -> &[(usize, usize, Scalar)] {
        &self.table[f * self.dim + h]
    }
}

/// `D(H)` with its algebra, coalgebra and embedding maps.
#[derive(Clone, Debug)]
pub struct DoubleAlgebra {
    h: HopfAlgebra,
    dual: HopfAlgebra,
    cross: CrossRelation,
    algebra: Algebra,
    coproduct: Vec<Tensor<Scalar>>,
    counit: Vec<Scalar>,
}

/// Builds `D(H)` and verifies that `H` and `H*` embed as subalgebras.
pub fn build_double(h: &HopfAlgebra) -> Result<DoubleAlgebra, DoubleError> {
    let n = h.dim();
    let hs = dual(h);
    let cross = CrossRelation::new(h)?;
    let ha = h.algebra();
    let da = hs.algebra();

    let labels: Vec<Label> =
        (0..n * n).map(|i| Label::Pair(Box::new(ha.label(i / n).clone()), Box::new(da.label(i % n).clone()))).collect();
    let mut table = Vec::with_capacity(n.pow(4));
    for left in 0..n * n {
        let (hl, fl) = (left / n, left % n);
        for right in 0..n * n {
            let (hr, fr) = (right / n, right % n);
            let mut out = Element::zero();
            for (h2, k, c) in cross.terms(fl, hr) {
                for (x, cx) in ha.product(hl, *h2).terms() {
                    let cc = c * cx;
                    for (y, cy) in da.product(*k, fr).terms() {
                        out.add_term(x * n + y, &(&cc * cy));
                    }
                }
            }
            table.push(out);
        }
    }
    let unit = pair_product(ha.unit(), da.unit(), n);
    let name = format!("D({})", ha.name());
    let algebra = Algebra::new(name, labels, table, unit);

    let mut coproduct = Vec::with_capacity(n * n);
    let mut counit = Vec::with_capacity(n * n);
    for i in 0..n * n {
        let (hb, fb) = (i / n, i % n);
        let mut t = Tensor::zero(2);
        for (hk, hc) in h.coproduct(hb).terms() {
            for (fk, fc) in hs.coproduct(fb).terms() {
                t.add_term(vec![hk[0] * n + fk[1], hk[1] * n + fk[0]], &(hc * fc));
            }
        }
        coproduct.push(t);
        counit.push(h.counit(hb) * hs.counit(fb));
    }

    let d = DoubleAlgebra { h: h.clone(), dual: hs, cross, algebra, coproduct, counit };
    d.check_embeddings()?;
    Ok(d)
}

/// `Σ x_i y_j (a_i a_j^*)` for `x` in `H` and `y` in `H*`.
fn pair_product(x: &Element, y: &Element, n: usize) -> Element {
    let mut out = Element::zero();
    for (i, a) in x.terms() {
        for (j, b) in y.terms() {
            out.add_term(i * n + j, &(a * b));
        }
    }
    out
}

impl DoubleAlgebra {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.h
    }

    pub fn dual(&self) -> &HopfAlgebra {
        &self.dual
    }

    pub fn cross(&self) -> &CrossRelation {
        &self.cross
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Dimension of `H`.
    pub fn base_dim(&self) -> usize {
        self.h.dim()
    }

    pub fn index(&self, h: usize, f: usize) -> usize {
        h * self.base_dim() + f
    }

    /// `h ↦ h ε`.
    pub fn iota_h(&self, x: &Element) -> Element {
        pair_product(x, self.dual.algebra().unit(), self.base_dim())
    }

    /// `f ↦ e f`.
    pub fn iota_dual(&self, y: &Element) -> Element {
        pair_product(self.h.algebra().unit(), y, self.base_dim())
    }

    pub fn coproduct(&self, i: usize) -> &Tensor<Scalar> {
        &self.coproduct[i]
    }

    pub fn counit(&self, i: usize) -> &Scalar {
        &self.counit[i]
    }

    pub fn coproduct_of(&self, x: &Element) -> Tensor<Scalar> {
        let mut out = Tensor::zero(2);
        for (i, c) in x.terms() {
            out.add_assign(&self.coproduct[i].scale(c));
        }
        out
    }

    fn check_embeddings(&self) -> Result<(), DoubleError> {
        let n = self.base_dim();
        for (part, alg, iota) in [
            ("H", self.h.algebra(), Self::iota_h as fn(&Self, &Element) -> Element),
            ("H*", self.dual.algebra(), Self::iota_dual),
        ] {
            for i in 0..n {
                let xi = iota(self, &Element::basis(i));
                for j in 0..n {
                    let xj = iota(self, &Element::basis(j));
                    if self.algebra.mul(&xi, &xj) != iota(self, alg.product(i, j)) {
                        return Err(DoubleError::NotEmbedded {
                            part,
                            left: alg.label(i).to_string(),
                            right: alg.label(j).to_string(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// First basis pair on which `Δ` or `ε` fails to be multiplicative.
    pub fn coalgebra_counterexample(&self) -> Option<(usize, usize)> {
        let slots = [&self.algebra, &self.algebra];
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let prod = self.algebra.product(i, j);
                let left = self.coproduct_of(prod);
                let right = tensor_multiply(&self.coproduct[i], &self.coproduct[j], &slots).expect("arity 2");
                let eps: Scalar = prod.terms().map(|(k, c)| c * &self.counit[k]).sum();
                if left != right || eps != &self.counit[i] * &self.counit[j] {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// First basis element `x` with `R Δ(x) != Δ^op(x) R`.
    pub fn quasitriangular_counterexample(&self, r: &Tensor<Scalar>) -> Option<usize> {
        let slots = [&self.algebra, &self.algebra];
        (0..self.dim()).find(|&i| {
            let delta = &self.coproduct[i];
            let left = tensor_multiply(r, delta, &slots).expect("arity 2");
            let right = tensor_multiply(&delta.permute(&[1, 0]), r, &slots).expect("arity 2");
            left != right
        })
    }

    /// Places an `H ⊗ H*` tensor into `D ⊗ D`.
    pub fn embed_tensor<C: Coeff>(&self, t: &Tensor<C>) -> Tensor<C> {
        t.replace_slot(0, 1, |i| Tensor::from_element(&self.iota_h(&Element::basis(i))))
            .replace_slot(1, 1, |j| Tensor::from_element(&self.iota_dual(&Element::basis(j))))
    }
}

/// `Σ_i a_i ⊗ a_i^*` in `H ⊗ H*`, one term per basis element.
pub fn canonical_element(h: &HopfAlgebra) -> Tensor<Scalar> {
    let mut t = Tensor::zero(2);
    for i in 0..h.dim() {
        t.add_term(vec![i, i], &Scalar::one());
    }
    t
}

/// The canonical R-element of `D(H)` in `D ⊗ D`, using `a_i ↦ a_i ε` and
/// `a_i^* ↦ e a_i^*`.
pub fn canonical_r(d: &DoubleAlgebra) -> Tensor<Scalar> {
    d.embed_tensor(&canonical_element(d.hopf()))
}

#[derive(Clone, Debug)]
pub struct AlgebraicYbeReport<C: Coeff> {
    pub passed: bool,
    /// `R12 R13 R23 - R23 R13 R12` in `D^{⊗3}`.
    pub residual: Tensor<C>,
    pub lhs_terms: usize,
}

impl<C: Coeff> fmt::Display for AlgebraicYbeReport<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "algebraic YBE in D^(x3): {} ({} terms on the left, {} residual terms)",
            if self.passed { "pass" } else { "FAIL" },
            self.lhs_terms,
            self.residual.len()
        )
    }
}

fn algebraic_ybe<C: Coeff>(
    d: &DoubleAlgebra,
    r12: &Tensor<C>,
    r13: &Tensor<C>,
    r23: &Tensor<C>,
) -> AlgebraicYbeReport<C> {
    let a = &d.algebra;
    let slots = [a, a, a];
    let lhs = tensor_multiply(&tensor_multiply(r12, r13, &slots).expect("arity 3"), r23, &slots).expect("arity 3");
    let rhs = tensor_multiply(&tensor_multiply(r23, r13, &slots).expect("arity 3"), r12, &slots).expect("arity 3");
    let residual = lhs.sub(&rhs);
    AlgebraicYbeReport { passed: residual.is_zero(), lhs_terms: lhs.len(), residual }
}

/// `R12 R13 R23 = R23 R13 R12` evaluated symbolically in `D^{⊗3}`.
pub fn check_constant_ybe_algebraic(d: &DoubleAlgebra, r: &Tensor<Scalar>) -> AlgebraicYbeReport<Scalar> {
    let unit = d.algebra.unit();
    let e = |legs| embed(r, legs, 3, unit).expect("arity 2 element");
    algebraic_ybe(d, &e((1, 2)), &e((1, 3)), &e((2, 3)))
}

/// `R12(μ) R13(μν) R23(ν) = R23(ν) R13(μν) R12(μ)` in `D^{⊗3}` with Laurent
/// coefficients in `μ, ν`.
pub fn check_parametric_ybe_algebraic(d: &DoubleAlgebra, r: &Tensor<ParamScalar>) -> AlgebraicYbeReport<ParamScalar> {
    let unit = d.algebra.unit();
    let sub = |f: fn(Monomial) -> Monomial| r.map_coeffs(|c| c.map_monomials(f));
    let r12 = embed(r, (1, 2), 3, unit).expect("arity 2 element");
    let r13 = embed(&sub(|m| Monomial::new(m.mu, m.mu)), (1, 3), 3, unit).expect("arity 2 element");
    let r23 = embed(&sub(|m| Monomial::new(0, m.mu)), (2, 3), 3, unit).expect("arity 2 element");
    algebraic_ybe(d, &r12, &r13, &r23)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("{part}: the unit does not act as the identity")]
    Unit { part: &'static str },
    #[error("{part}: image of the product of {left} and {right} is not the product of images")]
    Product { part: &'static str, left: String, right: String },
}

/// A representation of `D(H)` given by matrices for the bases of `H` and
/// `H*`; `h f` acts as `π(h) π(f)`.
#[derive(Clone, Debug)]
pub struct Representation {
    name: String,
    dim: usize,
    h_images: Vec<Matrix>,
    dual_images: Vec<Matrix>,
}

impl Representation {
    pub fn new(name: impl Into<String>, dim: usize, h_images: Vec<Matrix>, dual_images: Vec<Matrix>) -> Self {
        assert_eq!(h_images.len(), dual_images.len());
        assert!(h_images.iter().chain(&dual_images).all(|m| m.rows() == dim && m.cols() == dim));
        Representation { name: name.into(), dim, h_images, dual_images }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn h_image(&self, i: usize) -> &Matrix {
        &self.h_images[i]
    }

    pub fn dual_image(&self, i: usize) -> &Matrix {
        &self.dual_images[i]
    }

    fn combine(images: &[Matrix], x: &Element, dim: usize) -> Matrix {
        let mut out = Matrix::zeros(dim, dim);
        for (i, c) in x.terms() {
            out = out.add(&images[i].scale(c));
        }
        out
    }

    pub fn image_h(&self, x: &Element) -> Matrix {
        Self::combine(&self.h_images, x, self.dim)
    }

    pub fn image_dual(&self, y: &Element) -> Matrix {
        Self::combine(&self.dual_images, y, self.dim)
    }

    /// Image of an element of `D(H)`.
    pub fn image_double(&self, x: &Element) -> Matrix {
        let n = self.h_images.len();
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (i, c) in x.terms() {
            out = out.add(&self.h_images[i / n].mul(&self.dual_images[i % n]).scale(c));
        }
        out
    }

    fn check_part(part: &'static str, images: &[Matrix], alg: &Algebra, dim: usize) -> Result<(), RepError> {
        if Self::combine(images, alg.unit(), dim) != Matrix::identity(dim) {
            return Err(RepError::Unit { part });
        }
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                if images[i].mul(&images[j]) != Self::combine(images, alg.product(i, j), dim) {
                    return Err(RepError::Product {
                        part,
                        left: alg.label(i).to_string(),
                        right: alg.label(j).to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Algebra-map property on `H`.
    pub fn check_h(&self, h: &HopfAlgebra) -> Result<(), RepError> {
        Self::check_part("H", &self.h_images, h.algebra(), self.dim)
    }

    /// Algebra-map property on `H*`.
    pub fn check_dual(&self, dual: &HopfAlgebra) -> Result<(), RepError> {
        Self::check_part("H*", &self.dual_images, dual.algebra(), self.dim)
    }

    /// `π(f) π(h) = π(f h)` for every basis pair, with `f h` reordered by the
    /// cross relation. Together with [`check_h`](Self::check_h) and
    /// [`check_dual`](Self::check_dual) this makes `π` an algebra map on `D(H)`.
    pub fn check_cross(&self, cross: &CrossRelation, h: &HopfAlgebra, dual: &HopfAlgebra) -> Result<(), RepError> {
        let n = self.h_images.len();
        for f in 0..n {
            for hb in 0..n {
                let mut rhs = Matrix::zeros(self.dim, self.dim);
                for (h2, k, c) in cross.terms(f, hb) {
                    rhs = rhs.add(&self.h_images[*h2].mul(&self.dual_images[*k]).scale(c));
                }
                if self.dual_images[f].mul(&self.h_images[hb]) != rhs {
                    return Err(RepError::Product {
                        part: "D(H) cross relation",
                        left: dual.algebra().label(f).to_string(),
                        right: h.algebra().label(hb).to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Exhaustive algebra-map check over all basis pairs of `D(H)`.
    pub fn check_double(&self, d: &DoubleAlgebra) -> Result<(), RepError> {
        let alg = d.algebra();
        let images: Vec<Matrix> = (0..alg.dim()).map(|i| self.image_double(&Element::basis(i))).collect();
        Self::check_part("D(H)", &images, alg, self.dim)
    }

    /// `Σ c π(x) ⊗ π(y)` for a tensor with `x` in `H` and `y` in `H*`.
    pub fn r_matrix(&self, t: &Tensor<ParamScalar>) -> ParamMatrix {
        let mut out = ParamMatrix::zeros(self.dim * self.dim);
        for (key, c) in t.terms() {
            let k = self.h_images[key[0]].kron(&self.dual_images[key[1]]);
            for (r, col, x) in k.nonzeros() {
                out.add_at(r, col, &(c * x));
            }
        }
        out
    }

    /// Same as [`r_matrix`](Self::r_matrix) for a tensor in `D ⊗ D`.
    pub fn r_matrix_double(&self, t: &Tensor<ParamScalar>) -> ParamMatrix {
        let mut out = ParamMatrix::zeros(self.dim * self.dim);
        for (key, c) in t.terms() {
            let k = self.image_double(&Element::basis(key[0])).kron(&self.image_double(&Element::basis(key[1])));
            for (r, col, x) in k.nonzeros() {
                out.add_at(r, col, &(c * x));
            }
        }
        out
    }
}
