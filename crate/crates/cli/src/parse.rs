//! Polynomial expressions in the single variable `x`.
//!
//! ```text
//! expr := ws [sign] term (sign term)* ws
//! term := int ['*'] 'x' ['^' int] | 'x' ['^' int] | int
//! ```
//!
//! Whitespace may appear anywhere between tokens. Repeated degrees are
//! summed. A nonzero constant term is rejected.

use std::collections::BTreeMap;

use monogenic::poly::IntPoly;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exponents above this are refused rather than allocated.
pub const MAX_DEGREE: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("only the variable x is allowed, found `{found}` at position {position}")]
    UnknownVariable { position: usize, found: char },
    #[error("constant term {constant} is not allowed: relators and ring elements have zero constant term")]
    ConstantTermForbidden { constant: BigInt },
}

/// A parsed polynomial as `(coefficient, degree)` terms, descending by
/// degree, with distinct degrees and no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyExpr {
    terms: Vec<(BigInt, usize)>,
}

impl PolyExpr {
    pub fn terms(&self) -> &[(BigInt, usize)] {
        &self.terms
    }

    /// True when the input had terms that cancelled to zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_poly(&self) -> IntPoly {
        let n = self.terms.first().map_or(0, |t| t.1 + 1);
        let mut coeffs = vec![BigInt::zero(); n];
        for (c, d) in &self.terms {
            coeffs[*d] = c.clone();
        }
        IntPoly::new(coeffs)
    }

    pub fn from_poly(p: &IntPoly) -> Self {
        let terms = p
            .coeffs()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| (c.clone(), d))
            .collect();
        Self { terms }
    }
}

struct Lexer<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        Self { chars, pos: 0, src }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.src.len(), |&(i, _)| i)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            position: self.offset(),
            message: message.into(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| {
            self.chars[start..self.pos]
                .iter()
                .map(|&(_, c)| c)
                .collect()
        })
    }

    fn variable(&mut self) -> Result<bool, ParseError> {
        match self.peek() {
            Some('x') => {
                self.pos += 1;
                Ok(true)
            }
            Some(c) if c.is_alphabetic() => Err(ParseError::UnknownVariable {
                position: self.offset(),
                found: c,
            }),
            _ => Ok(false),
        }
    }

    fn term(&mut self) -> Result<(BigInt, usize), ParseError> {
        let coeff = self
            .digits()
            .map(|s| s.parse::<BigInt>().expect("ascii digits"));
        let star = coeff.is_some() && self.eat('*');
        let has_x = self.variable()?;
        if star && !has_x {
            return Err(self.error("expected `x` after `*`"));
        }
        if !has_x {
            return coeff
                .map(|c| (c, 0))
                .ok_or_else(|| self.error("expected a coefficient or `x`"));
        }
        let degree = if self.eat('^') {
            let at = self.offset();
            let s = self
                .digits()
                .ok_or_else(|| self.error("expected an exponent"))?;
            match s.parse::<usize>() {
                Ok(d) if d <= MAX_DEGREE => d,
                _ => {
                    return Err(ParseError::Syntax {
                        position: at,
                        message: format!("exponent exceeds {MAX_DEGREE}"),
                    })
                }
            }
        } else {
            1
        };
        Ok((coeff.unwrap_or_else(BigInt::one), degree))
    }
}

pub fn parse_poly(text: &str) -> Result<PolyExpr, ParseError> {
    parse_terms(text, false)
}

/// As [`parse_poly`] but keeps a constant term. Only certificate cofactors,
/// which multiply relators, may have one.
pub fn parse_cofactor(text: &str) -> Result<IntPoly, ParseError> {
    parse_terms(text, true).map(|e| e.to_poly())
}

fn parse_terms(text: &str, allow_constant: bool) -> Result<PolyExpr, ParseError> {
    let mut lx = Lexer::new(text);
    if lx.peek().is_none() {
        return Err(lx.error("empty expression"));
    }
    let mut merged: BTreeMap<usize, BigInt> = BTreeMap::new();
    let mut first = true;
    while lx.peek().is_some() {
        let negative = lx.eat('-');
        if !negative && !lx.eat('+') && !first {
            return Err(lx.error("expected `+` or `-`"));
        }
        first = false;
        let (c, d) = lx.term()?;
        let entry = merged.entry(d).or_insert_with(BigInt::zero);
        if negative {
            *entry -= c;
        } else {
            *entry += c;
        }
    }
    if !allow_constant {
        if let Some(constant) = merged.remove(&0).filter(|c| !c.is_zero()) {
            return Err(ParseError::ConstantTermForbidden { constant });
        }
    }
    let terms = merged
        .into_iter()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(d, c)| (c, d))
        .collect();
    Ok(PolyExpr { terms })
}

pub fn parse_int_poly(text: &str) -> Result<IntPoly, ParseError> {
    parse_poly(text).map(|e| e.to_poly())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn terms(s: &str) -> Vec<(i64, usize)> {
        parse_poly(s)
            .unwrap()
            .terms()
            .iter()
            .map(|(c, d)| (i64::try_from(c).unwrap(), *d))
            .collect()
    }

    #[test]
    fn examples() {
        assert_eq!(terms("2x^3 - 4x"), vec![(2, 3), (-4, 1)]);
        assert_eq!(terms("x^2 - x"), vec![(1, 2), (-1, 1)]);
        assert_eq!(terms(" - 3 * x ^ 2+x"), vec![(-3, 2), (1, 1)]);
        assert_eq!(terms("x + x + x^2"), vec![(1, 2), (2, 1)]);
        assert_eq!(terms("x - x"), vec![]);
        assert_eq!(terms("0"), vec![]);
        assert_eq!(terms("x^2 + 1 - 1"), vec![(1, 2)]);
        assert_eq!(
            parse_cofactor("2x - 3").unwrap(),
            IntPoly::from_i64s(&[-3, 2])
        );
        assert!(matches!(
            parse_poly("x^2 + 1"),
            Err(ParseError::ConstantTermForbidden { .. })
        ));
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_poly(""),
            Err(ParseError::Syntax { position: 0, .. })
        ));
        assert!(matches!(
            parse_poly("x^"),
            Err(ParseError::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse_poly("2x x"),
            Err(ParseError::Syntax { position: 3, .. })
        ));
        assert!(matches!(parse_poly("2*"), Err(ParseError::Syntax { .. })));
        assert!(matches!(
            parse_poly("x^99999999"),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_poly("y^2"),
            Err(ParseError::UnknownVariable {
                position: 0,
                found: 'y'
            })
        ));
        assert!(matches!(parse_poly("x +"), Err(ParseError::Syntax { .. })));
    }
}
