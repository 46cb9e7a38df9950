//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored in ascending order and trailing zeros are always
//! trimmed, so the zero polynomial is the empty vector and structural equality
//! is polynomial equality.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// True when the polynomial is `x^k` for some `k`.
    pub fn is_monic_monomial(&self) -> bool {
        match self.valuation() {
            Some(v) => v + 1 == self.coeffs.len() && self.coeffs[v].is_one(),
            None => false,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn neg(&self) -> Self {
        QPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(out)
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    /// Divide by `x^k`; the caller guarantees divisibility.
    pub fn unshift(&self, k: usize) -> Self {
        debug_assert!(self.valuation().is_none_or(|v| v >= k));
        Self::from_coeffs(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.coeffs.len() - 1;
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * b;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lead = self.leading();
        self.scale(&lead.recip())
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Inverse of `self` modulo `modulus`, if the two are coprime.
    pub fn inverse_mod(&self, modulus: &Self) -> Option<Self> {
        // Extended Euclid tracking only the coefficient of `self`.
        let (mut r0, mut r1) = (modulus.clone(), self.rem(modulus));
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (quot, rem) = r0.div_rem(&r1);
            let t2 = t0.sub(&quot.mul(&t1));
            r0 = r1;
            r1 = rem;
            t0 = t1;
            t1 = t2;
        }
        if !r0.is_constant() {
            return None;
        }
        let c = r0.leading().recip();
        Some(t0.scale(&c).rem(modulus))
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Integer content made primitive: returns `self` scaled so that all
    /// coefficients are coprime integers with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lcm_den = self.coeffs.iter().fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * &lcm_den).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| num_integer::gcd(acc, c.clone()));
        let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
        Self::from_coeffs(ints.into_iter().map(|c| BigRational::from_integer(&c / &g * &sign)).collect())
    }

    /// Writes the polynomial in the variable `var` with ascending exponents,
    /// offset by `shift` (so negative exponents can be printed).
    pub fn write_terms(&self, f: &mut impl fmt::Write, var: &str, shift: i64) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let exp = k as i64 + shift;
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            if exp == 0 {
                write!(f, "{}", mag)?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{}*", mag)?;
            }
            if exp == 1 {
                write!(f, "{}", var)?;
            } else {
                write!(f, "{}^{}", var, exp)?;
            }
        }
        Ok(())
    }

    /// The `n`-th cyclotomic polynomial.
    pub fn cyclotomic(n: u32) -> Self {
        assert!(n >= 1);
        // x^n - 1 divided by every Phi_d with d a proper divisor of n.
        let mut p = Self::monomial(BigRational::one(), n as usize).sub(&Self::one());
        for d in 1..n {
            if n.is_multiple_of(d) {
                p = p.div_rem(&Self::cyclotomic(d)).0;
            }
        }
        p
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_terms(f, "x", 0)
    }
}
