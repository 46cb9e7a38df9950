//! Sparse elements of finite-dimensional algebras and their tensor powers.
//!
//! An [`Algebra`] is a basis with a dense table of basis products. Elements and
//! tensors refer to basis elements by index; the basis order of an algebra is
//! its canonical term order.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::scalar::{ParamScalar, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("basis index {index} is outside the {dim}-dimensional algebra `{algebra}`")]
    ForeignElement { algebra: String, index: usize, dim: usize },
    #[error("tensor arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("invalid slot pair ({0}, {1}) for arity {2}")]
    InvalidSlots(usize, usize, usize),
}

/// Symbolic name of a basis element.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Label {
    /// `a^a x^x` in a Taft algebra.
    Taft {
        a: u32,
        x: u32,
    },
    /// Matrix unit `e_{row,col}` (1-based).
    MatrixUnit {
        row: u32,
        col: u32,
    },
    Named(String),
    /// Dual basis functional.
    Dual(Box<Label>),
    /// The product `h f` in a Drinfeld double, `h` from H and `f` from H*.
    Pair(Box<Label>, Box<Label>),
}

impl Label {
    pub fn dual(&self) -> Label {
        Label::Dual(Box::new(self.clone()))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Taft { a: 0, x: 0 } => f.write_str("e"),
            Label::Taft { a, x } => {
                match a {
                    0 => {}
                    1 => f.write_str("a")?,
                    _ => write!(f, "a^{}", a)?,
                }
                match x {
                    0 => Ok(()),
                    1 => f.write_str("x"),
                    _ => write!(f, "x^{}", x),
                }
            }
            Label::MatrixUnit { row, col } => write!(f, "e_{}{}", row, col),
            Label::Named(s) => f.write_str(s),
            Label::Dual(inner) => write!(f, "({})*", inner),
            Label::Pair(h, g) => write!(f, "{}.{}", h, g),
        }
    }
}

/// Coefficient ring for tensors: plain scalars or spectral-parameter
/// polynomials.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign(&mut self, other: &Self);
    fn mul(&self, other: &Self) -> Self;
    fn mul_scalar(&self, s: &Scalar) -> Self;
    fn neg(&self) -> Self;
}

impl Coeff for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn mul_scalar(&self, s: &Scalar) -> Self {
        self * s
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Coeff for ParamScalar {
    fn zero() -> Self {
        ParamScalar::zero()
    }
    fn is_zero(&self) -> bool {
        ParamScalar::is_zero(self)
    }
    fn add_assign(&mut self, other: &Self) {
        self.add_assign_ref(other);
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn mul_scalar(&self, s: &Scalar) -> Self {
        self.scale(s)
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Sparse linear combination of basis elements.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Element {
    terms: BTreeMap<usize, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn basis(index: usize) -> Self {
        Self::term(index, Scalar::one())
    }

    pub fn term(index: usize, c: Scalar) -> Self {
        let mut e = Element::zero();
        e.add_term(index, &c);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut e = Element::zero();
        for (i, c) in terms {
            e.add_term(i, &c);
        }
        e
    }

    pub fn add_term(&mut self, index: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(index).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&index);
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &Scalar) {
        for (i, x) in &other.terms {
            self.add_term(*i, &(x * c));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.terms.iter().map(|(i, c)| (*i, c))
    }

    pub fn coeff(&self, index: usize) -> Scalar {
        self.terms.get(&index).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        let mut out = Element::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::int(-1));
        out
    }

    pub fn max_index(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }
}

/// Sparse element of a k-fold tensor power.
#[derive(Clone, PartialEq, Debug)]
pub struct Tensor<C = ParamScalar> {
    arity: usize,
    terms: BTreeMap<Vec<usize>, C>,
}

impl<C: Coeff> Tensor<C> {
    pub fn zero(arity: usize) -> Self {
        Tensor { arity, terms: BTreeMap::new() }
    }

    pub fn simple(key: Vec<usize>, c: C) -> Self {
        let mut t = Self::zero(key.len());
        t.add_term(key, &c);
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn add_term(&mut self, key: Vec<usize>, c: &C) {
        debug_assert_eq!(key.len(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(slot) => {
                slot.add_assign(c);
                if slot.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    pub fn add_assign(&mut self, other: &Tensor<C>) {
        assert_eq!(self.arity, other.arity, "tensor arity mismatch");
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c);
        }
    }

    pub fn sub(&self, other: &Tensor<C>) -> Tensor<C> {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), &c.neg());
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &[usize]) -> C {
        self.terms.get(key).cloned().unwrap_or_else(C::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Scalar) -> Tensor<C> {
        let mut out = Tensor::zero(self.arity);
        for (k, x) in &self.terms {
            out.add_term(k.clone(), &x.mul_scalar(c));
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Tensor<D> {
        let mut out = Tensor::zero(self.arity);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), &f(c));
        }
        out
    }

    /// Replaces the basis element in `slot` by an arbitrary tensor of arity
    /// `width`, producing a tensor of arity `arity - 1 + width`. A width of
    /// zero (images are bare scalars) contracts the slot away.
    pub fn replace_slot(&self, slot: usize, width: usize, image: impl Fn(usize) -> Tensor<Scalar>) -> Tensor<C> {
        assert!(slot < self.arity);
        let mut out = Tensor::zero(self.arity - 1 + width);
        for (key, c) in &self.terms {
            let img = image(key[slot]);
            assert_eq!(img.arity, width);
            for (ikey, ic) in &img.terms {
                let mut k = Vec::with_capacity(out.arity);
                k.extend_from_slice(&key[..slot]);
                k.extend_from_slice(ikey);
                k.extend_from_slice(&key[slot + 1..]);
                out.add_term(k, &c.mul_scalar(ic));
            }
        }
        out
    }

    /// Applies a linear map to one slot.
    pub fn map_slot(&self, slot: usize, f: impl Fn(usize) -> Element) -> Tensor<C> {
        self.replace_slot(slot, 1, |i| Tensor::from_element(&f(i)))
    }

    /// Multiplies slots `slot` and `slot + 1` together in `algebra`.
    pub fn merge_slots(&self, slot: usize, algebra: &Algebra) -> Tensor<C> {
        assert!(slot + 1 < self.arity);
        let mut out = Tensor::zero(self.arity - 1);
        for (key, c) in &self.terms {
            for (p, pc) in algebra.product(key[slot], key[slot + 1]).terms() {
                let mut k = Vec::with_capacity(out.arity);
                k.extend_from_slice(&key[..slot]);
                k.push(p);
                k.extend_from_slice(&key[slot + 2..]);
                out.add_term(k, &c.mul_scalar(pc));
            }
        }
        out
    }

    /// Swaps two slots.
    pub fn permute(&self, perm: &[usize]) -> Tensor<C> {
        assert_eq!(perm.len(), self.arity);
        let mut out = Tensor::zero(self.arity);
        for (key, c) in &self.terms {
            out.add_term(perm.iter().map(|&p| key[p]).collect(), c);
        }
        out
    }
}

impl Tensor<Scalar> {
    pub fn from_element(e: &Element) -> Self {
        let mut t = Tensor::zero(1);
        for (i, c) in e.terms() {
            t.add_term(vec![i], c);
        }
        t
    }

    /// Scalar image used when contracting a slot.
    pub fn scalar(c: Scalar) -> Self {
        Tensor::simple(Vec::new(), c)
    }

    /// Collapses an arity-1 tensor back into an element.
    pub fn to_element(&self) -> Element {
        assert_eq!(self.arity, 1);
        Element::from_terms(self.terms.iter().map(|(k, c)| (k[0], c.clone())))
    }

    pub fn promote(&self) -> Tensor<ParamScalar> {
        self.map_coeffs(|c| ParamScalar::constant(c.clone()))
    }
}

/// Tensor product of elements, one per slot.
pub fn tensor_of(elements: &[&Element]) -> Tensor<Scalar> {
    let mut out = Tensor::simple(Vec::new(), Scalar::one());
    for e in elements {
        let mut next = Tensor::zero(out.arity + 1);
        for (key, c) in &out.terms {
            for (i, x) in e.terms() {
                let mut k = key.clone();
                k.push(i);
                next.add_term(k, &(c * x));
            }
        }
        out = next;
    }
    out
}

/// Finite-dimensional unital algebra given by structure constants.
#[derive(Clone, Debug)]
pub struct Algebra {
    name: String,
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
    table: Vec<Element>,
    unit: Element,
}

impl Algebra {
    /// `table[i * dim + j]` is the product of basis elements `i` and `j`.
    pub fn new(name: impl Into<String>, labels: Vec<Label>, table: Vec<Element>, unit: Element) -> Self {
        let dim = labels.len();
        assert_eq!(table.len(), dim * dim, "structure table must be dim x dim");
        let index = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        Algebra { name: name.into(), labels, index, table, unit }
    }

    /// The full matrix algebra on `d`-dimensional space with matrix-unit basis
    /// `e_{rc}` at index `r * d + c` (0-based).
    pub fn matrix_units(d: usize) -> Self {
        let labels = (0..d)
            .flat_map(|r| (0..d).map(move |c| Label::MatrixUnit { row: r as u32 + 1, col: c as u32 + 1 }))
            .collect();
        let mut table = Vec::with_capacity(d.pow(4));
        for r in 0..d {
            for c in 0..d {
                for r2 in 0..d {
                    for c2 in 0..d {
                        table.push(if c == r2 { Element::basis(r * d + c2) } else { Element::zero() });
                    }
                }
            }
        }
        let unit = Element::from_terms((0..d).map(|k| (k * d + k, Scalar::one())));
        Algebra::new(format!("End(k^{d})"), labels, table, unit)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &Label {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &Label) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn unit(&self) -> &Element {
        &self.unit
    }

    pub fn product(&self, i: usize, j: usize) -> &Element {
        &self.table[i * self.dim() + j]
    }

    fn check(&self, e: &Element) -> Result<(), AlgebraError> {
        match e.max_index() {
            Some(i) if i >= self.dim() => {
                Err(AlgebraError::ForeignElement { algebra: self.name.clone(), index: i, dim: self.dim() })
            }
            _ => Ok(()),
        }
    }

    /// Bilinear extension of the basis product table.
    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul(x, y))
    }

    pub(crate) fn mul(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::zero();
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                out.add_scaled(self.product(i, j), &(a * b));
            }
        }
        out
    }

    pub fn format_element(&self, e: &Element) -> String {
        if e.is_zero() {
            return "0".to_string();
        }
        e.terms().map(|(i, c)| format_term(c, &self.labels[i].to_string())).collect::<Vec<_>>().join(" + ")
    }
}

pub(crate) fn format_term(c: &impl fmt::Display, label: &str) -> String {
    let cs = c.to_string();
    match cs.as_str() {
        "1" => label.to_string(),
        "-1" => format!("-{}", label),
        _ if cs.contains(' ') => format!("({})*{}", cs, label),
        _ => format!("{}*{}", cs, label),
    }
}

/// Slot-wise product in `A_1 ⊗ ... ⊗ A_k`, one algebra per slot.
pub fn tensor_multiply<C: Coeff>(u: &Tensor<C>, v: &Tensor<C>, slots: &[&Algebra]) -> Result<Tensor<C>, AlgebraError> {
    if u.arity != v.arity {
        return Err(AlgebraError::ArityMismatch(u.arity, v.arity));
    }
    if slots.len() != u.arity {
        return Err(AlgebraError::ArityMismatch(slots.len(), u.arity));
    }
    let mut out = Tensor::zero(u.arity);
    for (ku, cu) in &u.terms {
        for (kv, cv) in &v.terms {
            let c = cu.mul(cv);
            // Expand the per-slot products into all combinations.
            let mut partial: Vec<(Vec<usize>, Scalar)> = vec![(Vec::with_capacity(u.arity), Scalar::one())];
            for (s, alg) in slots.iter().enumerate() {
                let prod = alg.product(ku[s], kv[s]);
                if prod.is_zero() {
                    partial.clear();
                    break;
                }
                let mut next = Vec::with_capacity(partial.len() * prod.len());
                for (k, x) in &partial {
                    for (p, pc) in prod.terms() {
                        let mut k2 = k.clone();
                        k2.push(p);
                        next.push((k2, x * pc));
                    }
                }
                partial = next;
            }
            for (k, x) in partial {
                out.add_term(k, &c.mul_scalar(&x));
            }
        }
    }
    Ok(out)
}

/// Places an arity-2 tensor into legs `p < q` (1-based) of an arity-`arity`
/// tensor, filling every other slot with `filler` (normally the unit).
pub fn embed<C: Coeff>(
    r: &Tensor<C>,
    legs: (usize, usize),
    arity: usize,
    filler: &Element,
) -> Result<Tensor<C>, AlgebraError> {
    let (p, q) = legs;
    if r.arity != 2 {
        return Err(AlgebraError::ArityMismatch(r.arity, 2));
    }
    if !(1 <= p && p < q && q <= arity) {
        return Err(AlgebraError::InvalidSlots(p, q, arity));
    }
    let others = arity - 2;
    let fill = tensor_of(&vec![filler; others]);
    let mut out = Tensor::zero(arity);
    for (key, c) in &r.terms {
        for (fk, fc) in fill.terms() {
            let mut rest = fk.iter();
            let k: Vec<usize> = (1..=arity)
                .map(|s| {
                    if s == p {
                        key[0]
                    } else if s == q {
                        key[1]
                    } else {
                        *rest.next().expect("filler slot")
                    }
                })
                .collect();
            out.add_term(k, &c.mul_scalar(fc));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rk(n: i64) -> ParamScalar {
        ParamScalar::constant(Scalar::int(n))
    }

    #[test]
    fn embed_places_legs() {
        let alg = Algebra::matrix_units(2);
        let unit = alg.unit().clone();
        let r = Tensor::simple(vec![1, 2], rk(1));
        let r13 = embed(&r, (1, 3), 3, &Element::basis(7)).unwrap();
        assert_eq!(r13, Tensor::simple(vec![1, 7, 2], rk(1)));
        let r12 = embed(&r, (1, 2), 3, &Element::basis(0)).unwrap();
        assert_eq!(r12, Tensor::simple(vec![1, 2, 0], rk(1)));
        let mut sum = Tensor::zero(2);
        sum.add_term(vec![0, 1], &rk(2));
        sum.add_term(vec![3, 2], &rk(5));
        let r23 = embed(&sum, (2, 3), 3, &unit).unwrap();
        // the identity of End(k^2) has two terms
        assert_eq!(r23.len(), 4);
        assert_eq!(r23.coeff(&[3, 0, 1]), rk(2));
        assert!(embed(&r, (2, 2), 3, &unit).is_err());
        assert!(embed(&r, (1, 4), 3, &unit).is_err());
    }

    #[test]
    fn tensor_multiply_by_unit_and_zero() {
        let alg = Algebra::matrix_units(2);
        let unit = tensor_of(&[alg.unit(), alg.unit()]).promote();
        let mut u = Tensor::zero(2);
        u.add_term(vec![1, 2], &rk(3));
        u.add_term(vec![0, 0], &rk(-1));
        let slots = [&alg, &alg];
        assert_eq!(tensor_multiply(&unit, &u, &slots).unwrap(), u);
        assert!(tensor_multiply(&u, &Tensor::zero(2), &slots).unwrap().is_zero());
        assert!(tensor_multiply(&u, &Tensor::zero(3), &slots).is_err());
    }

    #[test]
    fn foreign_elements_rejected() {
        let alg = Algebra::matrix_units(2);
        let err = alg.multiply(&Element::basis(9), alg.unit()).unwrap_err();
        assert!(matches!(err, AlgebraError::ForeignElement { index: 9, .. }));
    }

    #[test]
    fn labels_display() {
        assert_eq!(Label::Taft { a: 0, x: 0 }.to_string(), "e");
        assert_eq!(Label::Taft { a: 2, x: 1 }.to_string(), "a^2x");
        assert_eq!(Label::Taft { a: 1, x: 0 }.dual().to_string(), "(a)*");
    }
}
