//! Elements of the cyclotomic field Q(zeta_N), stored as polynomials in zeta
//! reduced modulo the N-th cyclotomic polynomial.

use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex};

use num_rational::BigRational;
use num_traits::One;
use once_cell::sync::Lazy;

use super::poly::QPoly;

#[derive(Debug)]
pub struct CyclotomicField {
    order: u32,
    modulus: QPoly,
}

static FIELDS: Lazy<Mutex<HashMap<u32, Arc<CyclotomicField>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

impl CyclotomicField {
    /// Shared handle for Q(zeta_order); the cyclotomic polynomial is computed once.
    pub fn get(order: u32) -> Arc<CyclotomicField> {
        assert!(order >= 1, "cyclotomic order must be positive");
        let mut fields = FIELDS.lock().expect("cyclotomic field cache poisoned");
        fields
            .entry(order)
            .or_insert_with(|| Arc::new(CyclotomicField { order, modulus: QPoly::cyclotomic(order) }))
            .clone()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn modulus(&self) -> &QPoly {
        &self.modulus
    }

    /// Euler phi of the order.
    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }
}

#[derive(Clone, Debug)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    value: QPoly,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.value == other.value
    }
}

impl Eq for Cyclotomic {}

impl Hash for Cyclotomic {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.order.hash(state);
        self.value.hash(state);
    }
}

impl Cyclotomic {
    pub fn new(order: u32, value: QPoly) -> Self {
        let field = CyclotomicField::get(order);
        let value = value.rem(&field.modulus);
        Cyclotomic { field, value }
    }

    /// `zeta_order^k`, with `k` taken modulo the order.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let k = k.rem_euclid(order as i64) as usize;
        Self::new(order, QPoly::monomial(BigRational::one(), k))
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn value(&self) -> &QPoly {
        &self.value
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(
            self.field.order, other.field.order,
            "mixing Q(zeta_{}) with Q(zeta_{})",
            self.field.order, other.field.order
        );
    }

    fn wrap(&self, value: QPoly) -> Self {
        Cyclotomic { field: self.field.clone(), value }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same(other);
        self.wrap(self.value.add(&other.value))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_same(other);
        self.wrap(self.value.sub(&other.value))
    }

    pub fn neg(&self) -> Self {
        self.wrap(self.value.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_same(other);
        self.wrap(self.value.mul(&other.value).rem(&self.field.modulus))
    }

    pub fn add_rational(&self, c: &BigRational) -> Self {
        self.wrap(self.value.add(&QPoly::constant(c.clone())))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        self.wrap(self.value.scale(c))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.value.is_zero() {
            return None;
        }
        // The modulus is irreducible, so any nonzero residue is invertible.
        self.value.inverse_mod(&self.field.modulus).map(|v| self.wrap(v))
    }

    /// Image under Q(zeta_N) -> Q(zeta_M), zeta_N -> zeta_M^(M/N). Requires N | M.
    pub fn embed(&self, target: u32) -> Self {
        let n = self.field.order;
        assert!(target.is_multiple_of(n), "cannot embed Q(zeta_{n}) into Q(zeta_{target})");
        let step = (target / n) as usize;
        let mut coeffs = vec![BigRational::default(); self.value.coeffs().len().saturating_sub(1) * step + 1];
        for (k, c) in self.value.coeffs().iter().enumerate() {
            coeffs[k * step] = c.clone();
        }
        Cyclotomic::new(target, QPoly::from_coeffs(coeffs))
    }
}
