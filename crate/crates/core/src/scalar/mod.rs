//! Exact coefficient arithmetic.
//!
//! A [`Scalar`] lives in one of three domains: the rationals, a cyclotomic
//! field Q(zeta_N), or the rational-function field Q(s) where `s` plays the
//! role of q^(1/2). Values are kept in canonical form, and any value that
//! happens to be rational is stored as [`Scalar::Rat`], so structural equality
//! is field equality and rationals mix freely with either extension.

mod cyclotomic;
mod param;
mod parse;
pub mod poly;
mod qnum;
mod ratfunc;

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use cyclotomic::{Cyclotomic, CyclotomicField};
pub use param::{Monomial, ParamScalar};
pub use parse::{parse_param, parse_scalar, Field, ParseError};
pub use poly::QPoly;
pub use qnum::{gauss_binomial, q_bracket, q_bracket_factorial, q_number, q_number_factorial};
pub use ratfunc::RatFunc;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DomainError {
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("{0} is not a primitive {1}-th root of unity")]
    NotPrimitive(String, u32),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Rat(BigRational),
    Cyc(Cyclotomic),
    Fn(RatFunc),
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(BigRational::one())
    }

    pub fn int(n: i64) -> Self {
        Scalar::Rat(BigRational::from_integer(n.into()))
    }

    pub fn rational(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::Rat(BigRational::new(num.into(), den.into()))
    }

    /// The generator zeta of Q(zeta_order).
    pub fn zeta(order: u32) -> Self {
        Self::zeta_pow(order, 1)
    }

    pub fn zeta_pow(order: u32, k: i64) -> Self {
        Scalar::Cyc(Cyclotomic::zeta_pow(order, k)).normalized()
    }

    pub fn from_cyclotomic(order: u32, value: QPoly) -> Self {
        Scalar::Cyc(Cyclotomic::new(order, value)).normalized()
    }

    /// `s = q^(1/2)`, the generator of Q(s).
    pub fn s() -> Self {
        Self::s_pow(1)
    }

    pub fn s_pow(k: i64) -> Self {
        if k == 0 {
            return Self::one();
        }
        Scalar::Fn(RatFunc::s_pow(k))
    }

    /// The generic deformation parameter `q = s^2`.
    pub fn q() -> Self {
        Self::s_pow(2)
    }

    pub fn from_ratfunc(f: RatFunc) -> Self {
        Scalar::Fn(f).normalized()
    }

    fn normalized(self) -> Self {
        match self {
            Scalar::Cyc(c) if c.value().is_constant() => Scalar::Rat(c.value().coeff(0)),
            Scalar::Fn(f) if f.is_constant() => Scalar::Rat(f.num().coeff(0) / f.den().coeff(0)),
            other => other,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Cyc(c) => Field::Cyclotomic(c.order()),
            Scalar::Fn(_) => Field::RationalFunction,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            _ => None,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(r) if r.is_zero() => None,
            Scalar::Rat(r) => Some(Scalar::Rat(r.recip())),
            Scalar::Cyc(c) => c.inv().map(|v| Scalar::Cyc(v).normalized()),
            Scalar::Fn(f) => f.inv().map(|v| Scalar::Fn(v).normalized()),
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, DomainError> {
        let inv = other.inv().ok_or_else(|| DomainError::DivisionByZero(self.to_string()))?;
        Ok(self * &inv)
    }

    /// Integer power; negative exponents panic on zero.
    pub fn pow(&self, k: i64) -> Scalar {
        let (base, mut e) = if k < 0 {
            (self.inv().expect("negative power of zero"), k.unsigned_abs())
        } else {
            (self.clone(), k as u64)
        };
        let mut acc = Scalar::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    /// Image under Q(zeta_N) -> Q(zeta_M); rationals are fixed.
    pub fn embed_cyclotomic(&self, target: u32) -> Scalar {
        match self {
            Scalar::Rat(_) => self.clone(),
            Scalar::Cyc(c) => Scalar::Cyc(c.embed(target)).normalized(),
            Scalar::Fn(_) => panic!("cannot embed a rational function into a cyclotomic field"),
        }
    }

    /// Substitutes `s := at` into an element of Q(s).
    pub fn eval_s(&self, at: &Scalar) -> Result<Scalar, DomainError> {
        match self {
            Scalar::Rat(_) => Ok(self.clone()),
            Scalar::Fn(f) => {
                let num = eval_poly(f.num(), at);
                let den = eval_poly(f.den(), at);
                num.checked_div(&den)
            }
            Scalar::Cyc(_) => panic!("eval_s on a cyclotomic element"),
        }
    }

    /// True if the canonical string has more than one additive term.
    pub(crate) fn is_compound(&self) -> bool {
        match self {
            Scalar::Rat(_) => false,
            Scalar::Cyc(c) => c.value().coeffs().iter().filter(|x| !x.is_zero()).count() > 1,
            Scalar::Fn(f) => {
                f.laurent_shift().is_none() || f.num().coeffs().iter().filter(|x| !x.is_zero()).count() > 1
            }
        }
    }

    pub(crate) fn is_negative_term(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_negative(),
            _ => !self.is_compound() && self.to_string().starts_with('-'),
        }
    }
}

fn eval_poly(p: &QPoly, at: &Scalar) -> Scalar {
    p.coeffs().iter().rev().fold(Scalar::zero(), |acc, c| &(&acc * at) + &Scalar::Rat(c.clone()))
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Rat(r)
    }
}

impl From<BigInt> for Scalar {
    fn from(n: BigInt) -> Self {
        Scalar::Rat(BigRational::from_integer(n))
    }
}

fn mixed(a: &Scalar, b: &Scalar) -> ! {
    panic!("mixed scalar domains: {} and {}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        use Scalar::*;
        match (self, rhs) {
            (Rat(a), Rat(b)) => Rat(a + b),
            (Rat(a), Cyc(c)) | (Cyc(c), Rat(a)) => Cyc(c.add_rational(a)).normalized(),
            (Rat(a), Fn(f)) | (Fn(f), Rat(a)) => {
                Fn(f.add(&RatFunc::from_poly(QPoly::constant(a.clone())))).normalized()
            }
            (Cyc(a), Cyc(b)) => Cyc(a.add(b)).normalized(),
            (Fn(a), Fn(b)) => Fn(a.add(b)).normalized(),
            _ => mixed(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Cyc(c) => Scalar::Cyc(c.neg()),
            Scalar::Fn(f) => Scalar::Fn(f.neg()),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        use Scalar::*;
        match (self, rhs) {
            (Rat(a), Rat(b)) => Rat(a * b),
            (Rat(a), _) if a.is_zero() => Scalar::zero(),
            (_, Rat(b)) if b.is_zero() => Scalar::zero(),
            (Rat(a), Cyc(c)) | (Cyc(c), Rat(a)) => Cyc(c.scale(a)),
            (Rat(a), Fn(f)) | (Fn(f), Rat(a)) => Fn(f.scale(a)),
            (Cyc(a), Cyc(b)) => Cyc(a.mul(b)).normalized(),
            (Fn(a), Fn(b)) => Fn(a.mul(b)).normalized(),
            _ => mixed(self, rhs),
        }
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("scalar division by zero")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |acc, x| acc * x)
    }
}

impl fmt::Display for Scalar {
    /// Canonical string form. Cyclotomic elements are written in `q` (= zeta_N)
    /// with exponents below phi(N); elements of Q(s) are written as Laurent
    /// polynomials in `s` when the denominator is a power of `s`, and as
    /// `(num)/(den)` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{}", r),
            Scalar::Cyc(c) => c.value().write_terms(f, "q", 0),
            Scalar::Fn(rf) => match rf.laurent_shift() {
                Some(shift) => rf.num().write_terms(f, "s", -(shift as i64)),
                None => {
                    f.write_str("(")?;
                    rf.num().write_terms(f, "s", 0)?;
                    f.write_str(")/(")?;
                    rf.den().write_terms(f, "s", 0)?;
                    f.write_str(")")
                }
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn phi_at_zeta(n: u32) -> Scalar {
        let z = Scalar::zeta(n);
        QPoly::cyclotomic(n).coeffs().iter().enumerate().map(|(k, c)| Scalar::Rat(c.clone()) * z.pow(k as i64)).sum()
    }

    #[test]
    fn cyclotomic_reduction() {
        for n in 2..=12 {
            assert!(Scalar::zeta(n).pow(n as i64).is_one(), "zeta_{n}^{n}");
            assert!(phi_at_zeta(n).is_zero(), "Phi_{n}(zeta_{n})");
            for k in 1..n {
                assert!(!Scalar::zeta(n).pow(k as i64).is_one());
            }
        }
    }

    #[test]
    fn rational_collapse_is_canonical() {
        // zeta_3 + zeta_3^2 = -1
        let z = Scalar::zeta(3);
        let sum = &z + &z.pow(2);
        assert_eq!(sum, Scalar::int(-1));
        assert_eq!(Scalar::zeta(2), Scalar::int(-1));
        let q = Scalar::q();
        assert_eq!(&q / &q, Scalar::one());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::rational(-3, 6).to_string(), "-1/2");
        assert_eq!(Scalar::zeta_pow(4, 3).to_string(), "-q");
        let s = Scalar::s();
        let x = &s.pow(-1) - &s.pow(3);
        assert_eq!(x.to_string(), "s^-1 - s^3");
        let y = Scalar::one() / (Scalar::one() + Scalar::q());
        assert_eq!(y.to_string(), "(1)/(1 + s^2)");
    }

    #[test]
    fn embedding_and_evaluation() {
        let z4 = Scalar::zeta(4);
        assert_eq!(z4.embed_cyclotomic(8), Scalar::zeta(8).pow(2));
        let f = Scalar::s().pow(3) - Scalar::s().pow(-1);
        let at = Scalar::zeta(8);
        assert_eq!(f.eval_s(&at).unwrap(), at.pow(3) - at.pow(-1));
        let g = Scalar::one() / (Scalar::q() + Scalar::one());
        assert!(g.eval_s(&Scalar::zeta(4)).is_err()); // i^2 + 1 = 0
    }

    fn arb_cyc(n: u32) -> impl Strategy<Value = Scalar> {
        prop::collection::vec(-5i64..=5, 1..8).prop_map(move |cs| Scalar::from_cyclotomic(n, QPoly::from_ints(&cs)))
    }

    fn arb_fn() -> impl Strategy<Value = Scalar> {
        (prop::collection::vec(-4i64..=4, 1..4), prop::collection::vec(-3i64..=3, 1..3), 0i64..3).prop_filter_map(
            "nonzero denominator",
            |(n, d, sh)| {
                let den = QPoly::from_ints(&d);
                if den.is_zero() {
                    return None;
                }
                let f = RatFunc::new(QPoly::from_ints(&n), den.shift(sh as usize));
                Some(Scalar::from_ratfunc(f))
            },
        )
    }

    fn field_axioms(a: &Scalar, b: &Scalar, c: &Scalar) {
        assert_eq!(&(a + b) + c, a + &(b + c));
        assert_eq!(&(a * b) * c, a * &(b * c));
        assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        assert_eq!(a * b, b * a);
        assert_eq!(&(a + b) - b, a.clone());
        if let Some(inv) = a.inv() {
            assert_eq!(a * &inv, Scalar::one());
        } else {
            assert!(a.is_zero());
        }
    }

    proptest! {
        #[test]
        fn cyclotomic_field_axioms(
            (a, b, c) in (3u32..=12).prop_flat_map(|n| (arb_cyc(n), arb_cyc(n), arb_cyc(n)))
        ) {
            field_axioms(&a, &b, &c);
        }

        #[test]
        fn ratfunc_field_axioms(a in arb_fn(), b in arb_fn(), c in arb_fn()) {
            field_axioms(&a, &b, &c);
        }

        #[test]
        fn canonical_string_round_trips(a in arb_fn()) {
            let parsed = parse_scalar(&a.to_string(), Field::RationalFunction).unwrap();
            prop_assert_eq!(parsed, a);
        }
    }
}
