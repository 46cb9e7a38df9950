//! Finite-dimensional Hopf algebras given by structure tables, the dual Hopf
//! algebra induced by the evaluation pairing, and gradings.

mod grading;

use std::fmt;

use serde::Serialize;

use crate::algebra::{tensor_of, Algebra, Element, Label, Tensor};
use crate::scalar::Scalar;

pub use grading::{
    check_coproduct_grading, check_grading, dual_grading, Grading, GradingCheck, GradingError, GradingReport, Violation,
};

/// Algebra plus coproduct, counit and antipode tables on the basis.
#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    algebra: Algebra,
    coproduct: Vec<Tensor<Scalar>>,
    counit: Vec<Scalar>,
    antipode: Vec<Element>,
}

impl HopfAlgebra {
    pub fn new(algebra: Algebra, coproduct: Vec<Tensor<Scalar>>, counit: Vec<Scalar>, antipode: Vec<Element>) -> Self {
        let n = algebra.dim();
        assert!(coproduct.len() == n && counit.len() == n && antipode.len() == n, "incomplete structure tables");
        assert!(coproduct.iter().all(|t| t.arity() == 2), "coproduct images must have arity 2");
        HopfAlgebra { algebra, coproduct, counit, antipode }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn label(&self, i: usize) -> &Label {
        self.algebra.label(i)
    }

    pub fn coproduct(&self, i: usize) -> &Tensor<Scalar> {
        &self.coproduct[i]
    }

    pub fn counit(&self, i: usize) -> &Scalar {
        &self.counit[i]
    }

    pub fn antipode(&self, i: usize) -> &Element {
        &self.antipode[i]
    }

    pub fn coproduct_of(&self, x: &Element) -> Tensor<Scalar> {
        let mut out = Tensor::zero(2);
        for (i, c) in x.terms() {
            out.add_assign(&self.coproduct[i].scale(c));
        }
        out
    }

    pub fn counit_of(&self, x: &Element) -> Scalar {
        x.terms().map(|(i, c)| c * &self.counit[i]).sum()
    }

    pub fn antipode_of(&self, x: &Element) -> Element {
        let mut out = Element::zero();
        for (i, c) in x.terms() {
            out.add_scaled(&self.antipode[i], c);
        }
        out
    }

    /// Copy with the coproduct of one basis element replaced; used to build
    /// deliberately broken structures.
    pub fn with_coproduct(&self, i: usize, image: Tensor<Scalar>) -> Self {
        let mut out = self.clone();
        out.coproduct[i] = image;
        out
    }

    /// Twice-iterated coproduct `(Δ ⊗ id)Δ` of a basis element.
    pub fn coproduct2(&self, i: usize) -> Tensor<Scalar> {
        self.coproduct[i].replace_slot(0, 2, |k| self.coproduct[k].clone())
    }

    /// Matrix of the antipode in the basis, inverted; `None` when the antipode
    /// is not bijective.
    pub fn antipode_inverse(&self) -> Option<Vec<Element>> {
        let n = self.dim();
        // Gauss-Jordan on [S | I] with S stored column-wise per basis element.
        let mut rows: Vec<Vec<Scalar>> = (0..n)
            .map(|r| {
                let mut row: Vec<Scalar> = (0..n).map(|c| self.antipode[c].coeff(r)).collect();
                row.extend((0..n).map(|c| if c == r { Scalar::one() } else { Scalar::zero() }));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !rows[r][col].is_zero())?;
            rows.swap(col, pivot);
            let inv = rows[col][col].inv()?;
            for x in rows[col].iter_mut() {
                *x = &*x * &inv;
            }
            for r in 0..n {
                if r != col && !rows[r][col].is_zero() {
                    let factor = rows[r][col].clone();
                    let pivot_row = rows[col].clone();
                    for (x, p) in rows[r].iter_mut().zip(pivot_row.iter()) {
                        *x = &*x - &(&factor * p);
                    }
                }
            }
        }
        Some((0..n).map(|c| Element::from_terms((0..n).map(|r| (r, rows[r][n + c].clone())))).collect())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Axiom {
    /// Associativity and the two unit laws.
    AlgebraLaws,
    Coassociativity,
    Counit,
    /// Δ and ε are unital algebra maps.
    Bialgebra,
    Antipode,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::AlgebraLaws => "associativity and unit",
            Axiom::Coassociativity => "coassociativity",
            Axiom::Counit => "counit",
            Axiom::Bialgebra => "bialgebra compatibility",
            Axiom::Antipode => "antipode",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomResult {
    pub axiom: Axiom,
    pub passed: bool,
    /// First offending basis tuple, as labels.
    pub counterexample: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub algebra: String,
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn result(&self, axiom: Axiom) -> &AxiomResult {
        self.results.iter().find(|r| r.axiom == axiom).expect("every axiom is reported")
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Hopf axioms for {}", self.algebra)?;
        for r in &self.results {
            write!(f, "  {:<24} {}", r.axiom.to_string(), if r.passed { "pass" } else { "FAIL" })?;
            if let Some(cx) = &r.counterexample {
                write!(f, " at ({})", cx.join(", "))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Exhaustively evaluates every Hopf axiom on basis tuples.
pub fn check_hopf_axioms(h: &HopfAlgebra) -> AxiomReport {
    let labels = |idx: &[usize]| -> Vec<String> { idx.iter().map(|&i| h.label(i).to_string()).collect() };
    let n = h.dim();
    let alg = h.algebra();
    let unit = alg.unit();
    let mut results = Vec::new();

    let algebra_cx = (|| {
        for i in 0..n {
            let b = Element::basis(i);
            if alg.mul(unit, &b) != b || alg.mul(&b, unit) != b {
                return Some(vec![i]);
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = alg.product(i, j);
                for k in 0..n {
                    let left = alg.mul(ij, &Element::basis(k));
                    let right = alg.mul(&Element::basis(i), alg.product(j, k));
                    if left != right {
                        return Some(vec![i, j, k]);
                    }
                }
            }
        }
        None
    })();
    results.push((Axiom::AlgebraLaws, algebra_cx));

    let coassoc_cx = (0..n).find(|&i| {
        let left = h.coproduct2(i);
        let right = h.coproduct(i).replace_slot(1, 2, |k| h.coproduct(k).clone());
        left != right
    });
    results.push((Axiom::Coassociativity, coassoc_cx.map(|i| vec![i])));

    let counit_cx = (0..n).find(|&i| {
        let b = Element::basis(i);
        let left = h.coproduct(i).replace_slot(0, 0, |k| Tensor::scalar(h.counit(k).clone()));
        let right = h.coproduct(i).replace_slot(1, 0, |k| Tensor::scalar(h.counit(k).clone()));
        left.to_element() != b || right.to_element() != b
    });
    results.push((Axiom::Counit, counit_cx.map(|i| vec![i])));

    let bialgebra_cx = (|| {
        if h.coproduct_of(unit) != tensor_of(&[unit, unit]) || !h.counit_of(unit).is_one() {
            return Some(Vec::new());
        }
        let slots = [alg, alg];
        for i in 0..n {
            for j in 0..n {
                let prod = alg.product(i, j);
                let left = h.coproduct_of(prod);
                let right =
                    crate::algebra::tensor_multiply(h.coproduct(i), h.coproduct(j), &slots).expect("arity 2 tensors");
                if left != right || h.counit_of(prod) != h.counit(i) * h.counit(j) {
                    return Some(vec![i, j]);
                }
            }
        }
        None
    })();
    results.push((Axiom::Bialgebra, bialgebra_cx));

    let antipode_cx = (0..n).find(|&i| {
        let expected = unit.scale(h.counit(i));
        let left = h.coproduct(i).map_slot(0, |k| h.antipode(k).clone()).merge_slots(0, alg).to_element();
        let right = h.coproduct(i).map_slot(1, |k| h.antipode(k).clone()).merge_slots(0, alg).to_element();
        left != expected || right != expected
    });
    results.push((Axiom::Antipode, antipode_cx.map(|i| vec![i])));

    AxiomReport {
        algebra: alg.name().to_string(),
        results: results
            .into_iter()
            .map(|(axiom, cx)| AxiomResult {
                axiom,
                passed: cx.is_none(),
                counterexample: cx.map(|idx| if idx.is_empty() { vec!["unit".to_string()] } else { labels(&idx) }),
            })
            .collect(),
    }
}

/// The dual Hopf algebra on the dual basis `{a_i^*}` with `<a_i^*, a_j> = δ_ij`.
///
/// Products transpose the coproduct, the coproduct transposes the product,
/// the unit is the counit functional, the counit is evaluation at the unit,
/// and the antipode is the transpose of the antipode.
pub fn dual(h: &HopfAlgebra) -> HopfAlgebra {
    let n = h.dim();
    let alg = h.algebra();
    let labels: Vec<Label> = alg.labels().iter().map(Label::dual).collect();

    let mut table = vec![Element::zero(); n * n];
    for k in 0..n {
        for (key, c) in h.coproduct(k).terms() {
            table[key[0] * n + key[1]].add_term(k, c);
        }
    }
    let unit = Element::from_terms((0..n).map(|i| (i, h.counit(i).clone())));

    let mut coproduct = vec![Tensor::zero(2); n];
    for i in 0..n {
        for j in 0..n {
            for (k, c) in alg.product(i, j).terms() {
                coproduct[k].add_term(vec![i, j], c);
            }
        }
    }
    let counit = (0..n).map(|i| alg.unit().coeff(i)).collect();
    let mut antipode = vec![Element::zero(); n];
    for j in 0..n {
        for (i, c) in h.antipode(j).terms() {
            antipode[i].add_term(j, c);
        }
    }
    let dual_alg = Algebra::new(format!("({})*", alg.name()), labels, table, unit);
    HopfAlgebra::new(dual_alg, coproduct, counit, antipode)
}

/// Compares two Hopf algebras table by table under the identity map on basis
/// indices.
pub fn same_tables(a: &HopfAlgebra, b: &HopfAlgebra) -> bool {
    let n = a.dim();
    n == b.dim()
        && a.algebra().unit() == b.algebra().unit()
        && (0..n).all(|i| {
            a.coproduct(i) == b.coproduct(i)
                && a.counit(i) == b.counit(i)
                && a.antipode(i) == b.antipode(i)
                && (0..n).all(|j| a.algebra().product(i, j) == b.algebra().product(i, j))
        })
}
