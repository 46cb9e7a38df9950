//! Laurent polynomials in the spectral parameters `mu`, `nu` with [`Scalar`]
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::Scalar;

/// Exponent vector `mu^mu * nu^nu`; exponents may be negative.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize, Deserialize)]
pub struct Monomial {
    pub mu: i32,
    pub nu: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { mu: 0, nu: 0 };

    pub fn new(mu: i32, nu: i32) -> Self {
        Monomial { mu, nu }
    }

    pub fn mu(k: i32) -> Self {
        Monomial { mu: k, nu: 0 }
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }
}

impl Add for Monomial {
    type Output = Monomial;
    fn add(self, rhs: Monomial) -> Monomial {
        Monomial { mu: self.mu + rhs.mu, nu: self.nu + rhs.nu }
    }
}

/// Sparse map from monomials to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ParamScalar {
    terms: BTreeMap<Monomial, Scalar>,
}

impl ParamScalar {
    pub fn zero() -> Self {
        ParamScalar { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn term(c: Scalar, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        ParamScalar { terms }
    }

    /// `mu^k`
    pub fn mu_pow(k: i32) -> Self {
        Self::term(Scalar::one(), Monomial::mu(k))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(Scalar::is_one)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Monomial) -> Scalar {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    /// The value as a plain scalar, if it has no parameter dependence.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    /// The single term, if there is exactly one.
    pub fn as_single_term(&self) -> Option<(Monomial, &Scalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (*m, c))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &ParamScalar) {
        for (m, c) in &other.terms {
            self.add_term(*m, c);
        }
    }

    /// Adds `a * b` into `self` without materialising the product.
    pub fn add_product(&mut self, a: &ParamScalar, b: &ParamScalar) {
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                self.add_term(*ma + *mb, &(ca * cb));
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> ParamScalar {
        if c.is_zero() {
            return Self::zero();
        }
        ParamScalar { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    /// Applies a monomial substitution; used for `mu -> mu*nu` and friends.
    pub fn map_monomials(&self, f: impl Fn(Monomial) -> Monomial) -> ParamScalar {
        let mut out = ParamScalar::zero();
        for (m, c) in &self.terms {
            out.add_term(f(*m), c);
        }
        out
    }

    /// Sets both parameters to 1.
    pub fn at_one(&self) -> Scalar {
        self.terms.values().cloned().sum()
    }

    /// Keeps only the terms whose monomial is 1 (the `mu -> 0` truncation for
    /// polynomial entries).
    pub fn constant_part(&self) -> Scalar {
        self.coeff(Monomial::ONE)
    }

    /// Multiplicative inverse, defined only for a single nonzero term.
    pub fn inv(&self) -> Option<ParamScalar> {
        let (m, c) = self.as_single_term()?;
        Some(ParamScalar::term(c.inv()?, Monomial::new(-m.mu, -m.nu)))
    }

    /// Maps every coefficient through `f`.
    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> ParamScalar {
        let mut out = ParamScalar::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, &f(c));
        }
        out
    }

    pub fn max_mu_degree(&self) -> Option<i32> {
        self.terms.keys().map(|m| m.mu).max()
    }
}

impl From<Scalar> for ParamScalar {
    fn from(c: Scalar) -> Self {
        ParamScalar::constant(c)
    }
}

impl Add for &ParamScalar {
    type Output = ParamScalar;
    fn add(self, rhs: &ParamScalar) -> ParamScalar {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Neg for &ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        ParamScalar { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Sub for &ParamScalar {
    type Output = ParamScalar;
    fn sub(self, rhs: &ParamScalar) -> ParamScalar {
        self + &(-rhs)
    }
}

impl Mul for &ParamScalar {
    type Output = ParamScalar;
    fn mul(self, rhs: &ParamScalar) -> ParamScalar {
        let mut out = ParamScalar::zero();
        out.add_product(self, rhs);
        out
    }
}

impl Mul<&Scalar> for &ParamScalar {
    type Output = ParamScalar;
    fn mul(self, rhs: &Scalar) -> ParamScalar {
        self.scale(rhs)
    }
}

impl fmt::Display for ParamScalar {
    /// Canonical form: terms in ascending `(mu, nu)` order, each written as
    /// `coeff*mu^a*nu^b`, with compound coefficients parenthesised.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative_term();
            let mag = if negative { -c } else { c.clone() };
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.is_one() {
                if mag.is_compound() {
                    factors.push(format!("({})", mag));
                } else {
                    factors.push(mag.to_string());
                }
            }
            for (name, e) in [("mu", m.mu), ("nu", m.nu)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{}^{}", name, e)),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_param() -> impl Strategy<Value = ParamScalar> {
        prop::collection::vec(((-3i32..=3, -3i32..=3), -4i64..=4, 0i64..=2), 0..5).prop_map(|ts| {
            let mut p = ParamScalar::zero();
            for ((mu, nu), c, k) in ts {
                p.add_term(Monomial::new(mu, nu), &(Scalar::int(c) * Scalar::s().pow(k)));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn commutative_and_associative(a in arb_param(), b in arb_param(), c in arb_param()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn no_stored_zeros(a in arb_param(), b in arb_param()) {
            let p = &(&a * &b) - &(&b * &a);
            prop_assert_eq!(p.len(), 0);
        }
    }

    #[test]
    fn negative_exponents_close() {
        let p = &ParamScalar::mu_pow(3) * &ParamScalar::mu_pow(-3);
        assert!(p.is_one());
        let inv = ParamScalar::term(Scalar::int(2), Monomial::new(-1, 2)).inv().unwrap();
        assert_eq!(inv, ParamScalar::term(Scalar::rational(1, 2), Monomial::new(1, -2)));
    }

    #[test]
    fn display() {
        let mut p = ParamScalar::zero();
        p.add_term(Monomial::ONE, &Scalar::s());
        p.add_term(Monomial::mu(1), &(Scalar::s() - Scalar::s().pow(-1)));
        p.add_term(Monomial::new(2, 1), &Scalar::int(-1));
        assert_eq!(p.to_string(), "s + (-s^-1 + s)*mu - mu^2*nu");
    }
}
