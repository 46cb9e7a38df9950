//! Dense scalar matrices for representations and sparse parametric matrices
//! for R-matrices.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::{Monomial, ParamScalar, Scalar};

/// Dense matrix over [`Scalar`], row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Elementary matrix `e_{r,c}` with 1-based indices.
    pub fn unit(n: usize, r: usize, c: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m.set(r - 1, c - 1, Scalar::one());
        m
    }

    pub fn diagonal(entries: Vec<Scalar>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in entries.into_iter().enumerate() {
            m.set(i, i, x);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Scalar) {
        self.data[r * self.cols + c] = x;
    }

    pub fn add_at(&mut self, r: usize, c: usize, x: &Scalar) {
        self.data[r * self.cols + c] += x;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.data.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k / self.cols, k % self.cols, x))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for (r, k, a) in self.nonzeros() {
            for c in 0..other.cols {
                let b = other.get(k, c);
                if !b.is_zero() {
                    out.add_at(r, c, &(a * b));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.scale(&Scalar::int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn pow(&self, k: u32) -> Matrix {
        (0..k).fold(Matrix::identity(self.rows), |acc, _| acc.mul(self))
    }

    /// Kronecker product; row index of `A ⊗ B` is `i * B.rows + k`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for (i, j, a) in self.nonzeros() {
            for (k, l, b) in other.nonzeros() {
                out.set(i * other.rows + k, j * other.cols + l, a * b);
            }
        }
        out
    }

    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Sparse square matrix over [`ParamScalar`]; indices are 0-based.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParamMatrix {
    dim: usize,
    entries: BTreeMap<(usize, usize), ParamScalar>,
}

impl ParamMatrix {
    pub fn zeros(dim: usize) -> Self {
        ParamMatrix { dim, entries: BTreeMap::new() }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, ParamScalar::one());
        }
        m
    }

    pub fn from_dense(m: &Matrix) -> Self {
        assert_eq!(m.rows(), m.cols(), "parametric matrices are square");
        let mut out = Self::zeros(m.rows());
        for (r, c, x) in m.nonzeros() {
            out.set(r, c, ParamScalar::constant(x.clone()));
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> ParamScalar {
        self.entries.get(&(r, c)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, r: usize, c: usize, x: ParamScalar) {
        assert!(r < self.dim && c < self.dim, "index out of range");
        if x.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), x);
        }
    }

    pub fn add_at(&mut self, r: usize, c: usize, x: &ParamScalar) {
        let slot = self.entries.entry((r, c)).or_default();
        slot.add_assign_ref(x);
        if slot.is_zero() {
            self.entries.remove(&(r, c));
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &ParamScalar)> {
        self.entries.iter().map(|((r, c), x)| (*r, *c, x))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.entries.values().all(ParamScalar::is_constant)
    }

    pub fn mul(&self, other: &ParamMatrix) -> ParamMatrix {
        assert_eq!(self.dim, other.dim, "matrix dimension mismatch");
        // Row index of `other` for fast lookup.
        let mut by_row: Vec<Vec<(usize, &ParamScalar)>> = vec![Vec::new(); other.dim];
        for ((r, c), x) in &other.entries {
            by_row[*r].push((*c, x));
        }
        let mut out = ParamMatrix::zeros(self.dim);
        let mut acc: BTreeMap<usize, ParamScalar> = BTreeMap::new();
        let mut current = None;
        let flush = |row: usize, acc: &mut BTreeMap<usize, ParamScalar>, out: &mut ParamMatrix| {
            for (c, x) in std::mem::take(acc) {
                if !x.is_zero() {
                    out.entries.insert((row, c), x);
                }
            }
        };
        for ((r, k), a) in &self.entries {
            if current != Some(*r) {
                if let Some(prev) = current {
                    flush(prev, &mut acc, &mut out);
                }
                current = Some(*r);
            }
            for (c, b) in &by_row[*k] {
                acc.entry(*c).or_default().add_product(a, b);
            }
        }
        if let Some(prev) = current {
            flush(prev, &mut acc, &mut out);
        }
        out
    }

    pub fn sub(&self, other: &ParamMatrix) -> ParamMatrix {
        let mut out = self.clone();
        for ((r, c), x) in &other.entries {
            out.add_at(*r, *c, &-x);
        }
        out
    }

    pub fn add(&self, other: &ParamMatrix) -> ParamMatrix {
        let mut out = self.clone();
        for ((r, c), x) in &other.entries {
            out.add_at(*r, *c, x);
        }
        out
    }

    pub fn scale(&self, c: &ParamScalar) -> ParamMatrix {
        let mut out = ParamMatrix::zeros(self.dim);
        for ((r, col), x) in &self.entries {
            out.set(*r, *col, x * c);
        }
        out
    }

    pub fn map_entries(&self, f: impl Fn(&ParamScalar) -> ParamScalar) -> ParamMatrix {
        let mut out = ParamMatrix::zeros(self.dim);
        for ((r, c), x) in &self.entries {
            out.set(*r, *c, f(x));
        }
        out
    }

    pub fn map_monomials(&self, f: impl Fn(Monomial) -> Monomial + Copy) -> ParamMatrix {
        self.map_entries(|x| x.map_monomials(f))
    }

    /// Sets every spectral parameter to 1.
    pub fn at_one(&self) -> ParamMatrix {
        self.map_entries(|x| ParamScalar::constant(x.at_one()))
    }

    /// Tensor-leg flip `P` on `V ⊗ V` with `dim V = d`.
    pub fn flip(d: usize) -> ParamMatrix {
        let mut p = ParamMatrix::zeros(d * d);
        for i in 0..d {
            for j in 0..d {
                p.set(i * d + j, j * d + i, ParamScalar::one());
            }
        }
        p
    }

    /// Local dimension `d` with `dim = d^2`, if the dimension is a square.
    pub fn local_dim(&self) -> Option<usize> {
        let d = (self.dim as f64).sqrt().round() as usize;
        (d * d == self.dim).then_some(d)
    }

    /// Finds `c` and an invertible diagonal `D` with `self = c D other D^{-1}`.
    /// `D` is normalized to 1 at the smallest index of each connected block.
    pub fn diagonal_equivalence(&self, other: &ParamMatrix) -> Option<(Scalar, Vec<Scalar>)> {
        if self.dim != other.dim || self.entries.keys().ne(other.entries.keys()) {
            return None;
        }
        let c = (0..self.dim).find_map(|i| ratio(self.entries.get(&(i, i))?, other.entries.get(&(i, i))?))?;
        let mut adj: Vec<Vec<(usize, Scalar, bool)>> = vec![Vec::new(); self.dim];
        for ((r, col), a) in &self.entries {
            let k = ratio(a, &other.entries[&(*r, *col)])?.checked_div(&c).ok()?;
            if r == col {
                if !k.is_one() {
                    return None;
                }
                continue;
            }
            // d_r / d_col = k
            adj[*r].push((*col, k.clone(), false));
            adj[*col].push((*r, k, true));
        }
        let mut d: Vec<Option<Scalar>> = vec![None; self.dim];
        for root in 0..self.dim {
            if d[root].is_some() {
                continue;
            }
            d[root] = Some(Scalar::one());
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                let du = d[u].clone().expect("visited");
                for (v, k, reversed) in &adj[u] {
                    // edge u -> v: d_u / d_v = k, or d_v / d_u = k when reversed
                    let dv = if *reversed { &du * k } else { du.checked_div(k).ok()? };
                    match &d[*v] {
                        Some(existing) if *existing != dv => return None,
                        Some(_) => {}
                        None => {
                            d[*v] = Some(dv);
                            stack.push(*v);
                        }
                    }
                }
            }
        }
        Some((c, d.into_iter().map(|x| x.expect("all visited")).collect()))
    }
}

/// `k` with `a = k b`, if it exists.
fn ratio(a: &ParamScalar, b: &ParamScalar) -> Option<Scalar> {
    let (m, bc) = b.terms().next()?;
    let k = a.coeff(*m).checked_div(bc).ok()?;
    (&b.scale(&k) == a).then_some(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_index_convention() {
        let a = Matrix::unit(2, 1, 2);
        let b = Matrix::unit(3, 3, 1);
        let k = a.kron(&b);
        // (v1 ⊗ v3) <- (v2 ⊗ v1): row 0*3+2, col 1*3+0
        assert!(k.get(2, 3).is_one());
        assert_eq!(k.nonzeros().count(), 1);
    }

    #[test]
    fn sparse_product_matches_dense() {
        let q = Scalar::q();
        let a = Matrix::from_rows(vec![
            vec![q.clone(), Scalar::one(), Scalar::zero()],
            vec![Scalar::zero(), Scalar::int(2), q.pow(-1)],
            vec![Scalar::one(), Scalar::zero(), Scalar::zero()],
        ]);
        let b = a.mul(&a).add(&Matrix::identity(3));
        let sa = ParamMatrix::from_dense(&a);
        let sb = ParamMatrix::from_dense(&b);
        assert_eq!(sa.mul(&sb), ParamMatrix::from_dense(&a.mul(&b)));
        assert_eq!(ParamMatrix::flip(2).mul(&ParamMatrix::flip(2)), ParamMatrix::identity(4));
    }

    #[test]
    fn diagonal_equivalence_recovers_conjugation() {
        let q = Scalar::q();
        let mut b = ParamMatrix::identity(3);
        b.set(0, 1, ParamScalar::term(q.clone(), Monomial::mu(1)));
        b.set(1, 2, ParamScalar::term(Scalar::int(2), Monomial::mu(1)));
        let d = [Scalar::one(), Scalar::int(3), q.pow(2)];
        let c = Scalar::int(-5);
        let mut a = ParamMatrix::zeros(3);
        for (r, col, x) in b.entries() {
            a.set(r, col, x.scale(&(&c * &d[r] / &d[col])));
        }
        let (c2, d2) = a.diagonal_equivalence(&b).unwrap();
        assert_eq!(c2, c);
        assert_eq!(d2, d.to_vec());
        a.set(2, 2, ParamScalar::constant(Scalar::int(7)));
        assert!(a.diagonal_equivalence(&b).is_none());
    }
}
