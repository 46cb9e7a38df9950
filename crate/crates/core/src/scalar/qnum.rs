//! q-integers, q-factorials and Gaussian binomials.
//!
//! Two families appear: the one-sided bracket `(n)_q = 1 + q + ... + q^(n-1)`
//! used for Taft algebras, and the balanced `[n]_q = (q^n - q^-n)/(q - q^-1)`
//! used for U_q[sl(2)].

use super::{DomainError, Scalar};

/// `(n)_q = 1 + q + ... + q^(n-1)`; zero for `n = 0`.
pub fn q_bracket(n: u32, q: &Scalar) -> Scalar {
    let mut acc = Scalar::zero();
    let mut power = Scalar::one();
    for _ in 0..n {
        acc += &power;
        power *= q;
    }
    acc
}

/// `(n)_q! = (n)_q (n-1)_q ... (1)_q`, with `(0)_q! = 1`.
pub fn q_bracket_factorial(n: u32, q: &Scalar) -> Scalar {
    (1..=n).map(|k| q_bracket(k, q)).product()
}

/// `(n choose m)_q = (n)_q! / ((m)_q! (n-m)_q!)`.
///
/// Fails when a denominator factor vanishes, e.g. `(N)_q = 0` at a primitive
/// N-th root of unity.
pub fn gauss_binomial(n: u32, m: u32, q: &Scalar) -> Result<Scalar, DomainError> {
    assert!(m <= n, "gauss_binomial requires m <= n");
    let den = &q_bracket_factorial(m, q) * &q_bracket_factorial(n - m, q);
    q_bracket_factorial(n, q).checked_div(&den)
}

/// Balanced q-integer `[n]_q = q^(n-1) + q^(n-3) + ... + q^(1-n)`, extended by
/// `[-n]_q = -[n]_q`. Only requires `q` to be invertible.
pub fn q_number(n: i64, q: &Scalar) -> Result<Scalar, DomainError> {
    if q.is_zero() {
        return Err(DomainError::DivisionByZero("q".to_string()));
    }
    let m = n.abs();
    let value: Scalar = (0..m).map(|k| q.pow(m - 1 - 2 * k)).sum();
    Ok(if n < 0 { -value } else { value })
}

/// `[n]_q! = [n]_q [n-1]_q ... [1]_q`.
pub fn q_number_factorial(n: u32, q: &Scalar) -> Result<Scalar, DomainError> {
    let mut acc = Scalar::one();
    for k in 1..=n as i64 {
        acc *= &q_number(k, q)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Scalar {
        Scalar::q()
    }

    #[test]
    fn bracket_examples() {
        assert!(q_bracket(0, &q()).is_zero());
        assert!(q_bracket(1, &q()).is_one());
        // direct summation oracle
        let q = q();
        assert_eq!(q_bracket(3, &q), Scalar::one() + q.clone() + &q * &q);
    }

    #[test]
    fn binomial_examples() {
        let q = q();
        assert_eq!(gauss_binomial(2, 1, &q).unwrap(), Scalar::one() + q.clone());
        assert!(gauss_binomial(2, 0, &q).unwrap().is_one());
        let expected = (Scalar::one() + q.pow(2)) * (Scalar::one() + q.clone() + q.pow(2));
        assert_eq!(gauss_binomial(4, 2, &q).unwrap(), expected);
    }

    #[test]
    fn binomial_matches_q_pascal() {
        // (n choose m) = (n-1 choose m-1) + q^m (n-1 choose m), an independent recurrence.
        let q = q();
        let mut table = vec![vec![Scalar::one()]];
        for n in 1..=8usize {
            let prev = &table[n - 1];
            let row: Vec<Scalar> = (0..=n)
                .map(|m| {
                    let left = if m >= 1 { prev[m - 1].clone() } else { Scalar::zero() };
                    let right = prev.get(m).cloned().unwrap_or_default();
                    left + q.pow(m as i64) * right
                })
                .collect();
            table.push(row);
        }
        for n in 0..=8u32 {
            for m in 0..=n {
                let b = gauss_binomial(n, m, &q).unwrap();
                assert_eq!(b, table[n as usize][m as usize]);
                let lhs = &b * &(q_bracket_factorial(m, &q) * q_bracket_factorial(n - m, &q));
                assert_eq!(lhs, q_bracket_factorial(n, &q));
            }
        }
    }

    #[test]
    fn binomial_at_root_of_unity() {
        let z = Scalar::zeta(4);
        assert!(q_bracket(4, &z).is_zero());
        assert!(gauss_binomial(3, 1, &z).is_ok());
        // (5 choose 1) needs (4)_q! in the denominator, which vanishes
        assert!(gauss_binomial(5, 1, &z).is_err());
    }

    #[test]
    fn balanced_numbers() {
        let q = q();
        assert!(q_number(1, &q).unwrap().is_one());
        assert!(q_number(0, &q).unwrap().is_zero());
        assert_eq!(q_number(2, &q).unwrap(), q.clone() + q.pow(-1));
        let diff = &q - &q.pow(-1);
        for n in -8..=8 {
            let lhs = q_number(n, &q).unwrap() * diff.clone();
            assert_eq!(lhs, q.pow(n) - q.pow(-n), "n = {n}");
        }
        assert_eq!(q_number_factorial(3, &q).unwrap(), q_number(3, &q).unwrap() * q_number(2, &q).unwrap());
    }
}
