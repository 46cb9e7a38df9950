use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::Algebra;

use super::HopfAlgebra;

/// Degree assignment on a homogeneous basis, valued in Z^rank.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Grading {
    rank: usize,
    degrees: Vec<Vec<i32>>,
}

impl Grading {
    /// A Z-grading.
    pub fn integer(degrees: Vec<i32>) -> Self {
        Grading { rank: 1, degrees: degrees.into_iter().map(|d| vec![d]).collect() }
    }

    /// A Z^rank-grading.
    pub fn lattice(rank: usize, degrees: Vec<Vec<i32>>) -> Self {
        assert!(degrees.iter().all(|d| d.len() == rank), "degree vectors must have the grading's rank");
        Grading { rank, degrees }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn degree(&self, i: usize) -> &[i32] {
        &self.degrees[i]
    }

    /// Degree of a Z-grading.
    pub fn int_degree(&self, i: usize) -> i32 {
        assert_eq!(self.rank, 1, "int_degree on a Z^n grading");
        self.degrees[i][0]
    }

    /// Some basis element has nonzero degree.
    pub fn is_nontrivial(&self) -> bool {
        self.degrees.iter().any(|d| d.iter().any(|&x| x != 0))
    }

    fn sum(&self, a: &[i32], b: &[i32]) -> Vec<i32> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum GradingCheck {
    /// `m: A^p ⊗ A^q -> A^(p+q)`
    Multiplicative,
    /// `Δ: A^p -> ⊕_q A^q ⊗ A^(p-q)`
    Coproduct,
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub basis: Vec<String>,
    pub expected: Vec<i32>,
    pub found: Vec<i32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GradingReport {
    pub check: GradingCheck,
    pub passed: bool,
    pub nontrivial: bool,
    pub violations: Vec<Violation>,
}

const MAX_VIOLATIONS: usize = 16;

impl fmt::Display for GradingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?} grading check: {}{}",
            self.check,
            if self.passed { "pass" } else { "FAIL" },
            if self.nontrivial { "" } else { " (trivial grading)" }
        )?;
        for v in &self.violations {
            write!(f, "\n  ({}) expected degree {:?}, found {:?}", v.basis.join(", "), v.expected, v.found)?;
        }
        Ok(())
    }
}

/// Multiplicative homogeneity on every pair of basis elements.
pub fn check_grading(alg: &Algebra, d: &Grading) -> GradingReport {
    assert_eq!(alg.dim(), d.len(), "grading must cover the basis");
    let mut violations = Vec::new();
    'outer: for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let expected = d.sum(d.degree(i), d.degree(j));
            for (k, _) in alg.product(i, j).terms() {
                if d.degree(k) != expected.as_slice() {
                    violations.push(Violation {
                        basis: vec![alg.label(i).to_string(), alg.label(j).to_string()],
                        expected: expected.clone(),
                        found: d.degree(k).to_vec(),
                    });
                    if violations.len() >= MAX_VIOLATIONS {
                        break 'outer;
                    }
                    break;
                }
            }
        }
    }
    GradingReport {
        check: GradingCheck::Multiplicative,
        passed: violations.is_empty(),
        nontrivial: d.is_nontrivial(),
        violations,
    }
}

/// Every term `u ⊗ v` of `Δ(b)` satisfies `deg u + deg v = deg b`.
pub fn check_coproduct_grading(h: &HopfAlgebra, d: &Grading) -> GradingReport {
    assert_eq!(h.dim(), d.len(), "grading must cover the basis");
    let mut violations = Vec::new();
    for i in 0..h.dim() {
        for (key, _) in h.coproduct(i).terms() {
            let found = d.sum(d.degree(key[0]), d.degree(key[1]));
            if found != d.degree(i) {
                violations.push(Violation {
                    basis: vec![h.label(i).to_string(), h.label(key[0]).to_string(), h.label(key[1]).to_string()],
                    expected: d.degree(i).to_vec(),
                    found,
                });
                break;
            }
        }
        if violations.len() >= MAX_VIOLATIONS {
            break;
        }
    }
    GradingReport {
        check: GradingCheck::Coproduct,
        passed: violations.is_empty(),
        nontrivial: d.is_nontrivial(),
        violations,
    }
}

#[derive(Debug, Error)]
pub enum GradingError {
    #[error("grading precondition violated: {0}")]
    Precondition(Box<GradingReport>),
}

/// Grading of the dual basis: `(a_i^p)^*` gets degree `p`.
///
/// Requires both the multiplicative and the coproduct condition on `h`; the
/// coproduct condition is what makes the dual product homogeneous.
pub fn dual_grading(h: &HopfAlgebra, d: &Grading) -> Result<Grading, GradingError> {
    for report in [check_grading(h.algebra(), d), check_coproduct_grading(h, d)] {
        if !report.passed {
            return Err(GradingError::Precondition(Box::new(report)));
        }
    }
    Ok(d.clone())
}
