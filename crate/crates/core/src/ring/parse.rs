//! Recursive-descent parser for the expression grammar.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' exponent)?
//! exponent := '-'? INT | '(' '-'? INT ')'
//! atom   := INT | 'cw' | 'cxw' | 'cwm2' | 'cxwm2' | 'e' | 'xi' | 'kappa' | '(' expr ')'
//! ```
//!
//! Negative exponents are accepted on `cwm2` and `cxwm2` only. Whether the
//! resulting divisible class makes sense is decided later, by the normalizer.

use crate::error::{Error, Result};
use crate::scalar::{Coeff, Scalar};

use super::element::RawExpr;
use super::monomial::Monomial;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let (pos, ch) = chars[k];
        let single = match ch {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            out.push((pos, tok));
            k += 1;
        } else if ch.is_whitespace() {
            k += 1;
        } else if ch.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].1.is_ascii_digit() {
                k += 1;
            }
            out.push((pos, Tok::Int(chars[start..k].iter().map(|c| c.1).collect())));
        } else if ch.is_ascii_alphabetic() {
            let start = k;
            while k < chars.len() && chars[k].1.is_ascii_alphanumeric() {
                k += 1;
            }
            out.push((pos, Tok::Ident(chars[start..k].iter().map(|c| c.1).collect())));
        } else {
            return Err(Error::Parse { pos, message: format!("unexpected character `{ch}`") });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

enum Atom<T: Coeff> {
    /// A generator that may carry a negative exponent.
    Divisor(Monomial),
    Expr(RawExpr<T>),
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn fail<X>(&self, message: impl Into<String>) -> Result<X> {
        Err(Error::Parse { pos: self.pos(), message: message.into() })
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr<T: Coeff>(&mut self) -> Result<RawExpr<T>> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                acc = acc.add(&self.term()?);
            } else if self.eat(&Tok::Minus) {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<T: Coeff>(&mut self) -> Result<RawExpr<T>> {
        let mut acc = self.unary()?;
        while self.eat(&Tok::Star) {
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary<T: Coeff>(&mut self) -> Result<RawExpr<T>> {
        if self.eat(&Tok::Minus) {
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn exponent(&mut self) -> Result<i64> {
        let parens = self.eat(&Tok::LParen);
        let negative = self.eat(&Tok::Minus);
        let value = match self.peek().cloned() {
            Some(Tok::Int(digits)) => {
                self.at += 1;
                digits.parse::<i64>().or_else(|_| self.fail("exponent too large"))?
            }
            _ => return self.fail("expected an integer exponent"),
        };
        if parens && !self.eat(&Tok::RParen) {
            return self.fail("expected `)`");
        }
        Ok(if negative { -value } else { value })
    }

    fn power<T: Coeff>(&mut self) -> Result<RawExpr<T>> {
        let start = self.pos();
        let atom = self.atom::<T>()?;
        let k = if self.eat(&Tok::Caret) { Some(self.exponent()?) } else { None };
        match (atom, k) {
            (Atom::Divisor(m), None) => Ok(RawExpr::monomial(m)),
            (Atom::Divisor(m), Some(k)) => Ok(RawExpr::monomial(Monomial::new(m.a * k, m.b * k, 0, 0))),
            (Atom::Expr(x), None) => Ok(x),
            (Atom::Expr(_), Some(k)) if k < 0 => Err(Error::Parse {
                pos: start,
                message: "negative exponents are only allowed on cwm2 and cxwm2".into(),
            }),
            (Atom::Expr(x), Some(k)) => {
                let k = u32::try_from(k).or_else(|_| self.fail("exponent too large"))?;
                Ok(x.pow(k))
            }
        }
    }

    fn atom<T: Coeff>(&mut self) -> Result<Atom<T>> {
        let tok = match self.peek().cloned() {
            Some(t) => t,
            None => return self.fail("unexpected end of expression"),
        };
        self.at += 1;
        Ok(match tok {
            Tok::Int(digits) => {
                let value = T::from_str_radix(&digits, 10).or_else(|_| {
                    self.at -= 1;
                    self.fail("integer literal out of range")
                })?;
                Atom::Expr(RawExpr::scalar(Scalar::from_int(value)))
            }
            Tok::Ident(name) => match name.as_str() {
                "cwm2" => Atom::Divisor(Monomial::C_OMEGA_MINUS_2),
                "cxwm2" => Atom::Divisor(Monomial::C_CHI_OMEGA_MINUS_2),
                "cw" => Atom::Expr(RawExpr::monomial(Monomial::C_OMEGA)),
                "cxw" => Atom::Expr(RawExpr::monomial(Monomial::C_CHI_OMEGA)),
                "e" => Atom::Expr(RawExpr::scalar(Scalar::e_pow(1))),
                "xi" => Atom::Expr(RawExpr::scalar(Scalar::xi_pow(1))),
                "kappa" => Atom::Expr(RawExpr::scalar(Scalar::kappa())),
                other => {
                    self.at -= 1;
                    return self.fail(format!("unknown symbol `{other}`"));
                }
            },
            Tok::LParen => {
                let inner = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return self.fail("expected `)`");
                }
                Atom::Expr(inner)
            }
            other => {
                self.at -= 1;
                return self.fail(format!("unexpected token {other:?}"));
            }
        })
    }
}

/// Parses an expression into a formal combination of exponent vectors.
pub fn parse_expr<T: Coeff>(text: &str) -> Result<RawExpr<T>> {
    let mut parser = Parser { toks: lex(text)?, at: 0, end: text.len() };
    if parser.toks.is_empty() {
        return parser.fail("empty expression");
    }
    let out = parser.expr()?;
    if parser.at != parser.toks.len() {
        return parser.fail("unexpected trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{normalize, RingParams};

    type R = RawExpr<i64>;

    #[test]
    fn token_mapping() {
        assert_eq!(parse_expr::<i64>("cxwm2*cw").unwrap(), R::monomial(Monomial::new(0, 1, 1, 0)));
        assert_eq!(parse_expr::<i64>("cxwm2^-1 * cw^2").unwrap(), R::monomial(Monomial::new(0, -1, 2, 0)));
        assert_eq!(parse_expr::<i64>("cwm2^(-2)").unwrap(), R::monomial(Monomial::new(-2, 0, 0, 0)));
        assert_eq!(parse_expr::<i64>("2*e^2 - xi").unwrap(), R::scalar(Scalar::term(2, 0, 2).sub(&Scalar::xi_pow(1))));
        assert_eq!(parse_expr::<i64>("(cw + cxw)^2").unwrap(), parse_expr("cw^2 + 2*cw*cxw + cxw^2").unwrap());
        assert_eq!(parse_expr::<i64>("--cw").unwrap(), R::monomial(Monomial::C_OMEGA));
    }

    #[test]
    fn relation_two_text() {
        let params = RingParams::finite(2, 2).unwrap();
        let lhs = normalize(&parse_expr::<i64>("e^2*1 + (1-kappa)*cxwm2*cw").unwrap(), &params).unwrap();
        let rhs = normalize(&parse_expr::<i64>("cwm2*cxw").unwrap(), &params).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn relation_one_text() {
        let params = RingParams::finite(2, 3).unwrap();
        assert!(normalize(&parse_expr::<i64>("cw^2*cxw^3").unwrap(), &params).unwrap().is_zero());
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_expr::<i64>("cw + foo").unwrap_err(),
            Error::Parse { pos: 5, message: "unknown symbol `foo`".into() }
        );
        assert!(matches!(parse_expr::<i64>("cw^-1"), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_expr::<i64>("(cw"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse_expr::<i64>("cw $"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse_expr::<i64>(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_expr::<i64>("cw cw"), Err(Error::Parse { pos: 3, .. })));
    }
}
