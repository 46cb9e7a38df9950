//! Parser for the canonical string forms of [`Scalar`] and [`ParamScalar`].
//!
//! Grammar (whitespace is ignored):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' '-'? integer)?
//! atom   := integer | 'q' | 's' | 'mu' | 'nu' | '(' expr ')'
//! ```
//!
//! `q` is zeta_N in Q(zeta_N) and `s^2` in Q(s); `s` is only meaningful in
//! Q(s). Division and negative powers require a single-term divisor.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Monomial, ParamScalar, Scalar};

/// Coefficient domain tag.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Cyclotomic(u32),
    RationalFunction,
}

impl Field {
    /// The field generated by both inputs, if they are compatible.
    pub fn join(self, other: Field) -> Option<Field> {
        match (self, other) {
            (Field::Rational, f) | (f, Field::Rational) => Some(f),
            (a, b) if a == b => Some(a),
            _ => None,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => f.write_str("Q"),
            Field::Cyclotomic(n) => write!(f, "Q(zeta_{})", n),
            Field::RationalFunction => f.write_str("Q(s)"),
        }
    }
}

impl FromStr for Field {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        let t = text.trim();
        match t {
            "Q" => return Ok(Field::Rational),
            "Q(s)" => return Ok(Field::RationalFunction),
            _ => {}
        }
        t.strip_prefix("Q(zeta_")
            .and_then(|rest| rest.strip_suffix(')'))
            .and_then(|n| n.parse::<u32>().ok())
            .filter(|&n| n >= 1)
            .map(Field::Cyclotomic)
            .ok_or_else(|| ParseError::UnknownField(t.to_string()))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected {found} at offset {pos}")]
    Unexpected { pos: usize, found: String },
    #[error("symbol `{0}` is not available in {1}")]
    UnknownSymbol(String, Field),
    #[error("`{0}` is not invertible")]
    NotInvertible(String),
    #[error("expected a constant but found `{0}`")]
    NotConstant(String),
    #[error("unknown field `{0}`")]
    UnknownField(String),
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((start, Token::Int(digits.parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((start, Token::Ident(chars[start..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Token::Sym(c)));
            i += 1;
        } else {
            return Err(ParseError::Unexpected { pos: i, found: format!("`{}`", c) });
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    field: Field,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn unexpected(&self) -> ParseError {
        let found = match self.peek() {
            Some(Token::Int(n)) => format!("`{}`", n),
            Some(Token::Ident(s)) => format!("`{}`", s),
            Some(Token::Sym(c)) => format!("`{}`", c),
            None => "end of input".to_string(),
        };
        ParseError::Unexpected { pos: self.offset(), found }
    }

    fn eat(&mut self, sym: char) -> bool {
        if self.peek() == Some(&Token::Sym(sym)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<ParamScalar, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<ParamScalar, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let divisor = self.unary()?;
                let inv = divisor.inv().ok_or_else(|| ParseError::NotInvertible(divisor.to_string()))?;
                acc = &acc * &inv;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<ParamScalar, ParseError> {
        if self.eat('-') {
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<ParamScalar, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        let exp = match self.peek() {
            Some(Token::Int(n)) => i64::try_from(n.clone()).map_err(|_| self.unexpected())?,
            _ => return Err(self.unexpected()),
        };
        self.pos += 1;
        let (base, exp) = if negative {
            (base.inv().ok_or_else(|| ParseError::NotInvertible(base.to_string()))?, exp)
        } else {
            (base, exp)
        };
        let mut acc = ParamScalar::one();
        for _ in 0..exp {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<ParamScalar, ParseError> {
        let tok = self.peek().cloned().ok_or_else(|| self.unexpected())?;
        match tok {
            Token::Int(n) => {
                self.pos += 1;
                Ok(ParamScalar::constant(Scalar::Rat(BigRational::from_integer(n))))
            }
            Token::Ident(name) => {
                self.pos += 1;
                self.symbol(&name)
            }
            Token::Sym('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.unexpected());
                }
                Ok(inner)
            }
            Token::Sym(_) => Err(self.unexpected()),
        }
    }

    fn symbol(&self, name: &str) -> Result<ParamScalar, ParseError> {
        let value = match (name, self.field) {
            ("mu", _) => return Ok(ParamScalar::mu_pow(1)),
            ("nu", _) => return Ok(ParamScalar::term(Scalar::one(), Monomial::new(0, 1))),
            ("q", Field::Cyclotomic(n)) => Scalar::zeta(n),
            ("q", Field::RationalFunction) => Scalar::q(),
            ("s", Field::RationalFunction) => Scalar::s(),
            _ => return Err(ParseError::UnknownSymbol(name.to_string(), self.field)),
        };
        Ok(ParamScalar::constant(value))
    }
}

/// Parses a parameter-dependent expression over `field`.
pub fn parse_param(text: &str, field: Field) -> Result<ParamScalar, ParseError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser { tokens, pos: 0, field, end: text.len() };
    let value = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.unexpected());
    }
    Ok(value)
}

/// Parses a parameter-free scalar over `field`.
pub fn parse_scalar(text: &str, field: Field) -> Result<Scalar, ParseError> {
    let value = parse_param(text, field)?;
    value.as_constant().ok_or_else(|| ParseError::NotConstant(text.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_printed_entries() {
        let f = Field::RationalFunction;
        let a = parse_param("mu*q^-1*(q - q^-1)^2*(q + q^-1)", f).unwrap();
        let q = Scalar::q();
        let qi = q.inv().unwrap();
        let expected = &(&q - &qi).pow(2) * &(&q + &qi) * qi;
        assert_eq!(a, ParamScalar::term(expected, Monomial::mu(1)));
        assert_eq!(parse_scalar("s^2", f).unwrap(), q);
        assert_eq!(parse_scalar("-3/6", Field::Rational).unwrap(), Scalar::rational(-1, 2));
    }

    #[test]
    fn cyclotomic_symbol() {
        let v = parse_scalar("q^4", Field::Cyclotomic(4)).unwrap();
        assert!(v.is_one());
        assert!(parse_scalar("s", Field::Cyclotomic(4)).is_err());
        assert!(parse_scalar("q", Field::Rational).is_err());
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_param("1 +", Field::Rational), Err(ParseError::Unexpected { .. })));
        assert!(matches!(parse_param("1/(1 + mu)", Field::Rational), Err(ParseError::NotInvertible(_))));
        assert!(matches!(parse_param("1/0", Field::Rational), Err(ParseError::NotInvertible(_))));
        assert!(matches!(parse_scalar("mu", Field::Rational), Err(ParseError::NotConstant(_))));
        assert!(parse_param("2 $", Field::Rational).is_err());
    }

    #[test]
    fn field_tags_round_trip() {
        for f in [Field::Rational, Field::Cyclotomic(12), Field::RationalFunction] {
            assert_eq!(f.to_string().parse::<Field>().unwrap(), f);
        }
        assert!("Q(zeta_0)".parse::<Field>().is_err());
    }
}
