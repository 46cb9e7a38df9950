//! Reference R-matrices, written as entry strings in the scalar grammar.
//!
//! Over `Q(s)` the symbol `q` means `s^2`; over `Q(ζ_N)` it means `ζ_N`.

use crate::matrix::ParamMatrix;
use crate::scalar::{parse_param, Field, ParseError};

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub field: Field,
    pub dim: usize,
    /// `(row, col, value)`, 1-based; all other entries are zero.
    pub entries: Vec<(usize, usize, String)>,
}

impl Fixture {
    pub fn matrix(&self) -> Result<ParamMatrix, ParseError> {
        let mut m = ParamMatrix::zeros(self.dim);
        for (r, c, text) in &self.entries {
            m.set(r - 1, c - 1, parse_param(text, self.field)?);
        }
        Ok(m)
    }
}

fn fixture(name: &str, field: Field, dim: usize, entries: &[(usize, usize, &str)]) -> Fixture {
    Fixture {
        name: name.to_string(),
        field,
        dim,
        entries: entries.iter().map(|(r, c, v)| (*r, *c, v.to_string())).collect(),
    }
}

/// Spin-1/2 `R(μ)` of `U_q[sl(2)]`.
pub fn spin_half() -> Fixture {
    fixture(
        "U_q[sl(2)] spin-1/2",
        Field::RationalFunction,
        4,
        &[(1, 1, "s"), (2, 2, "s^-1"), (2, 3, "mu*s^-1*(q - q^-1)"), (3, 3, "s^-1"), (4, 4, "s")],
    )
}

/// Spin-1 `R(μ)` of `U_q[sl(2)]`.
pub fn spin_one() -> Fixture {
    fixture(
        "U_q[sl(2)] spin-1",
        Field::RationalFunction,
        9,
        &[
            (1, 1, "q^2"),
            (2, 2, "1"),
            (2, 4, "mu*(q^2 - q^-2)"),
            (3, 3, "q^-2"),
            (3, 5, "mu*q^-2*(q^2 - q^-2)"),
            (3, 7, "mu^2*q^-1*(q - q^-1)^2*(q + q^-1)"),
            (4, 4, "1"),
            (5, 5, "1"),
            (5, 7, "mu*(q^2 - q^-2)"),
            (6, 6, "1"),
            (6, 8, "mu*(q^2 - q^-2)"),
            (7, 7, "q^-2"),
            (8, 8, "1"),
            (9, 9, "q^2"),
        ],
    )
}

/// The 9×9 `R(μ)` on `Ṽ_{3,l} ⊗ Ṽ_{3,l}` for `T_{N,q}` with `q = ζ_N^k`.
pub fn taft_nine(order: u32, q_power: u32, l: u32) -> Fixture {
    let l = l as i64;
    let entries: Vec<(usize, usize, String)> = vec![
        (1, 1, "1".to_string()),
        (2, 2, format!("q^{}", -l - 2)),
        (2, 4, "(1 - q^-2)*mu".to_string()),
        (3, 3, format!("q^{}", -2 * (l + 2))),
        (3, 5, format!("q^{}*(q^2 - 1)*mu", -l - 4)),
        (3, 7, "(1 - q^-1)*(1 - q^-2)*mu^2".to_string()),
        (4, 4, format!("q^{}", l)),
        (5, 5, "q^-1".to_string()),
        (5, 7, format!("q^{}*(1 - q^-2)*mu", l + 1)),
        (6, 6, format!("q^{}", -l - 2)),
        (6, 8, "(1 - q^-2)*mu".to_string()),
        (7, 7, format!("q^{}", 2 * l)),
        (8, 8, format!("q^{}", l)),
        (9, 9, "1".to_string()),
    ];
    let sub = format!("(q^{})", q_power);
    Fixture {
        name: format!("Taft N={} l={}", order, l),
        field: Field::Cyclotomic(order),
        dim: 9,
        entries: entries.into_iter().map(|(r, c, v)| (r, c, v.replace('q', &sub))).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_parse() {
        assert_eq!(spin_half().matrix().unwrap().nnz(), 5);
        assert_eq!(spin_one().matrix().unwrap().nnz(), 14);
        for l in 1..=4 {
            assert_eq!(taft_nine(4, 1, l).matrix().unwrap().nnz(), 14);
            assert_eq!(taft_nine(5, 2, l).matrix().unwrap().nnz(), 14);
        }
    }
}
