//! Recursive-descent reader for polynomial expressions.
//!
//! ```text
//! expr     := ('+'|'-')? term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' natural)?
//! base     := rational | variable | '(' expr ')'
//! rational := integer ('/' positive-integer)?
//! ```
//!
//! Whitespace is ignored. There is no implicit multiplication.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{PolyError, Polynomial, Ring};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, PolyError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((start, Tok::Int(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            other => {
                return Err(PolyError::Syntax {
                    pos: i,
                    msg: format!("unexpected character '{other}'"),
                })
            }
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    ring: &'a Ring,
    len: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.len)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Syntax {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Minus) => {
                negate = true;
                self.pos += 1;
            }
            Some(Tok::Plus) => self.pos += 1,
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.base()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let e: u32 = n.try_into().map_err(|_| PolyError::Syntax {
                        pos: self.offset(),
                        msg: "exponent too large".into(),
                    })?;
                    Ok(base.pow(e))
                }
                Some(Tok::Minus) => Err(PolyError::NegativeExponent),
                _ => {
                    self.pos -= 1;
                    self.err("expected natural exponent after '^'")
                }
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Polynomial, PolyError> {
        match self.bump() {
            Some(Tok::Int(n)) => {
                let mut value = BigRational::from_integer(n);
                if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    match self.bump() {
                        Some(Tok::Int(d)) if !d.is_zero() => {
                            value /= BigRational::from_integer(d);
                        }
                        _ => {
                            self.pos -= 1;
                            return self.err("expected positive integer denominator");
                        }
                    }
                }
                let c = self
                    .ring
                    .field()
                    .normalize(value)
                    .map_err(|_| PolyError::CoefficientNotRepresentable)?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Some(Tok::Ident(name)) => match self.ring.var_index(&name) {
                Some(i) => Ok(Polynomial::var(self.ring, i)),
                None => Err(PolyError::UnknownIdentifier(name)),
            },
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(e),
                    _ => {
                        self.pos -= 1;
                        self.err("expected ')'")
                    }
                }
            }
            None => self.err("unexpected end of input"),
            Some(t) => {
                self.pos -= 1;
                self.err(format!("unexpected token {t:?}"))
            }
        }
    }
}

/// Parses `text` as a polynomial in `ring`.
pub fn parse(text: &str, ring: &Ring) -> Result<Polynomial, PolyError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        ring,
        len: text.len(),
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{CoefficientField, MonomialOrder, PolyRing};

    fn qxy() -> Ring {
        PolyRing::rational(&["x", "y"]).unwrap()
    }

    #[test]
    fn reads_cusp() {
        let r = qxy();
        let p = parse("y^2 - x^3", &r).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.to_string(), "-x^3 + y^2");
    }

    #[test]
    fn zero_is_empty() {
        assert!(parse("0", &qxy()).unwrap().is_zero());
        assert!(parse("x - x", &qxy()).unwrap().is_zero());
    }

    #[test]
    fn binomial_square() {
        let r = qxy();
        assert_eq!(
            parse("(x+y)^2", &r).unwrap(),
            parse("x^2 + 2*x*y + y^2", &r).unwrap()
        );
    }

    #[test]
    fn rationals() {
        let r = qxy();
        let p = parse("1/2*x + 3/6", &r).unwrap();
        assert_eq!(p.to_string(), "1/2*x + 1/2");
    }

    #[test]
    fn errors() {
        let r = qxy();
        assert!(matches!(
            parse("x + z", &r),
            Err(PolyError::UnknownIdentifier(_))
        ));
        assert!(matches!(parse("x^-1", &r), Err(PolyError::NegativeExponent)));
        assert!(matches!(parse("2x", &r), Err(PolyError::Syntax { .. })));
        assert!(matches!(parse("(x+y", &r), Err(PolyError::Syntax { .. })));
        assert!(matches!(parse("x +", &r), Err(PolyError::Syntax { .. })));
        assert!(matches!(parse("x/2", &r), Err(PolyError::Syntax { .. })));
        assert!(matches!(parse("1/0", &r), Err(PolyError::Syntax { .. })));
    }

    #[test]
    fn prime_field_parsing() {
        let r = PolyRing::new(
            CoefficientField::PrimeField(2),
            &["x", "y"],
            MonomialOrder::DegRevLex,
        )
        .unwrap();
        assert_eq!(
            parse("(x+y)^2", &r).unwrap(),
            parse("x^2 + y^2", &r).unwrap()
        );
        assert!(parse("1/2", &r).is_err());
    }
}
