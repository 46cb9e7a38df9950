//! Rational functions in a single formal generator `s` (read as q^(1/2)).

use num_rational::BigRational;

use super::poly::QPoly;

/// `num / den` with `den` monic and `gcd(num, den) = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
}

impl RatFunc {
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc { num, den: QPoly::one() };
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading().recip();
        RatFunc { num: num.scale(&lead), den: den.scale(&lead) }
    }

    pub fn from_poly(p: QPoly) -> Self {
        RatFunc { num: p, den: QPoly::one() }
    }

    /// `s^k` for any integer `k`.
    pub fn s_pow(k: i64) -> Self {
        let one = BigRational::from_integer(1.into());
        if k >= 0 {
            Self::from_poly(QPoly::monomial(one, k as usize))
        } else {
            RatFunc { num: QPoly::one(), den: QPoly::monomial(one, (-k) as usize) }
        }
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// Returns `Some(shift)` when the denominator is `s^shift`, i.e. the value
    /// is a Laurent polynomial `num * s^-shift`.
    pub fn laurent_shift(&self) -> Option<usize> {
        if self.den.is_monic_monomial() {
            self.den.degree()
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(self.num.add(&other.num), self.den.clone());
        }
        Self::new(self.num.mul(&other.den).add(&other.num.mul(&self.den)), self.den.mul(&other.den))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.num.scale(c), self.den.clone())
    }

    pub fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()))
        }
    }
}
