//! Textual polynomial input and output.
//!
//! Grammar (whitespace is ignored between tokens):
//!
//! ```text
//! poly  := ['-'] term (('+' | '-') term)*
//! term  := coef ['*' xpart] | xpart
//! xpart := 'x' ['^' nat]
//! coef  := int | '(' ypoly ')'
//! ```
//!
//! `ypoly` follows the same grammar in the variable `y` with integer coefficients only.
//! Outside parentheses a coefficient may also be a bare `y` power, optionally preceded
//! by `int*`, so `(y+1)*x - y` and `3*y^2*x` are accepted.
//! [`format_poly`] produces text in this grammar, so printing then parsing is the identity.

use num_bigint::BigInt;
use thiserror::Error;

use crate::poly::Poly;
use crate::ring::{Integer, Ring, YPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("ring mismatch at position {pos}: coefficient involves y but the ring is Z")]
    RingMismatch { pos: usize },
}

/// Coefficient rings that can be read from text.
pub trait TextCoeff: Ring {
    /// Converts a parsed coefficient polynomial in `y`; `None` if it does not belong to the ring.
    fn from_ypoly(p: Poly<Integer>) -> Option<Self>;
}

impl TextCoeff for Integer {
    fn from_ypoly(p: Poly<Integer>) -> Option<Self> {
        match p.degree() {
            None => Some(Integer::zero()),
            Some(0) => Some(p.coeff(0)),
            Some(_) => None,
        }
    }
}

impl TextCoeff for YPoly {
    fn from_ypoly(p: Poly<Integer>) -> Option<Self> {
        Some(YPoly(p))
    }
}

/// Parses a polynomial in `x` over the coefficient ring `R`.
pub fn parse_poly<R: TextCoeff>(text: &str) -> Result<Poly<R>, ParseError> {
    let mut parser = Parser::new(text);
    let terms = parser.sum('x', true)?;
    parser.skip_ws();
    if parser.pos < parser.chars.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    let mut coeffs: Vec<R> = Vec::new();
    for (pos, exp, coef) in terms {
        let c = R::from_ypoly(coef).ok_or(ParseError::RingMismatch { pos })?;
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, R::zero());
        }
        let prev = std::mem::replace(&mut coeffs[exp], R::zero());
        coeffs[exp] = prev + &c;
    }
    Ok(Poly::new(coeffs))
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

type Term = (usize, usize, Poly<Integer>);

impl Parser {
    fn new(text: &str) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn error(&self, message: &str) -> ParseError {
        ParseError::Syntax {
            pos: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    /// Next non-whitespace character after skipping `n` of them.
    fn peek_at(&mut self, n: usize) -> Option<char> {
        self.skip_ws();
        self.chars[self.pos..]
            .iter()
            .filter(|c| !c.is_whitespace())
            .nth(n)
            .copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self, var: char, allow_paren: bool) -> Result<Vec<Term>, ParseError> {
        let mut terms = Vec::new();
        let mut negative = self.eat('-');
        loop {
            let (pos, exp, coef) = self.term(var, allow_paren)?;
            terms.push((pos, exp, if negative { -coef } else { coef }));
            negative = match self.peek() {
                Some('+') => false,
                Some('-') => true,
                _ => break,
            };
            self.pos += 1;
        }
        Ok(terms)
    }

    fn term(&mut self, var: char, allow_paren: bool) -> Result<Term, ParseError> {
        let start = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            Some(c) if c == var => {
                let exp = self.xpart(var)?;
                Ok((start, exp, Poly::one()))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.nat()?;
                let coef = Poly::constant(Integer(n));
                if allow_paren && self.peek() == Some('*') && self.peek_at(1) == Some('y') {
                    self.pos += 1;
                    let e = self.xpart('y')?;
                    return Ok((start, self.optional_xpart(var)?, coef.shift(e)));
                }
                Ok((start, self.optional_xpart(var)?, coef))
            }
            Some('y') if allow_paren => {
                let e = self.xpart('y')?;
                Ok((start, self.optional_xpart(var)?, Poly::one().shift(e)))
            }
            Some('(') if allow_paren => {
                self.pos += 1;
                let inner = self.sum('y', false)?;
                if !self.eat(')') {
                    return Err(self.error("expected `)`"));
                }
                let mut coef = Poly::zero();
                for (_, exp, c) in inner {
                    coef = coef + &c.shift(exp);
                }
                Ok((start, self.optional_xpart(var)?, coef))
            }
            Some(c) => Err(self.error(&format!("unexpected `{c}`"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn optional_xpart(&mut self, var: char) -> Result<usize, ParseError> {
        if self.eat('*') {
            if self.peek() != Some(var) {
                return Err(self.error(&format!("expected `{var}` after `*`")));
            }
            self.xpart(var)
        } else {
            Ok(0)
        }
    }

    fn xpart(&mut self, var: char) -> Result<usize, ParseError> {
        if !self.eat(var) {
            return Err(self.error(&format!("expected `{var}`")));
        }
        if self.eat('^') {
            let n = self.nat()?;
            usize::try_from(n).map_err(|_| self.error("exponent too large"))
        } else {
            Ok(1)
        }
    }

    fn nat(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|_| self.error("malformed number"))
    }
}

fn is_plain_number(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_digit())
}

/// Prints `p` in the variable `var`, highest power first, e.g. `x^2-(y+1)*x+3`.
pub fn format_poly<R: Ring>(p: &Poly<R>, var: char) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let magnitude = if negative { -c.clone() } else { c.clone() };
        let s = magnitude.to_string();
        let coef = if is_plain_number(&s) {
            s
        } else {
            format!("({s})")
        };
        let body = match i {
            0 => coef,
            _ => {
                let xpart = if i == 1 {
                    var.to_string()
                } else {
                    format!("{var}^{i}")
                };
                if coef == "1" {
                    xpart
                } else {
                    format!("{coef}*{xpart}")
                }
            }
        };
        if negative {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        out.push_str(&body);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64]) -> Poly<Integer> {
        Poly::from_i64s(c)
    }

    fn y(c: &[i64]) -> YPoly {
        YPoly::from_coeffs(c.iter().copied())
    }

    #[test]
    fn parses_integer_polys() {
        assert_eq!(parse_poly::<Integer>("x^2+3*x+2"), Ok(z(&[2, 3, 1])));
        assert_eq!(parse_poly::<Integer>("x + x"), Ok(z(&[0, 2])));
        assert_eq!(parse_poly::<Integer>("-x^2 - 1"), Ok(z(&[-1, 0, -1])));
        assert_eq!(parse_poly::<Integer>("x - x"), Ok(Poly::zero()));
        assert_eq!(parse_poly::<Integer>("(5)*x"), Ok(z(&[0, 5])));
    }

    #[test]
    fn parses_zy_polys() {
        let p = parse_poly::<YPoly>("(y+1)*x - y").unwrap();
        assert_eq!(p, Poly::new(vec![y(&[0, -1]), y(&[1, 1])]));
        assert_eq!(
            parse_poly::<YPoly>("3*y^2*x + y"),
            Ok(Poly::new(vec![y(&[0, 1]), y(&[0, 0, 3])]))
        );
        let q = parse_poly::<YPoly>("-(y^2-3)*x^2 + 4").unwrap();
        assert_eq!(q, Poly::new(vec![y(&[4]), y(&[]), y(&[3, 0, -1])]));
    }

    #[test]
    fn reports_errors() {
        assert!(matches!(
            parse_poly::<Integer>("(y+1)*x"),
            Err(ParseError::RingMismatch { pos: 0 })
        ));
        assert!(matches!(
            parse_poly::<Integer>("x^2 +"),
            Err(ParseError::Syntax { pos: 5, .. })
        ));
        assert!(parse_poly::<Integer>("2x").is_err());
        assert!(parse_poly::<Integer>("x^").is_err());
        assert!(parse_poly::<YPoly>("((y))").is_err());
        assert!(parse_poly::<Integer>("").is_err());
    }

    #[test]
    fn formats() {
        assert_eq!(format_poly(&z(&[2, 3, 1]), 'x'), "x^2+3*x+2");
        assert_eq!(format_poly(&z(&[-1, 0, -1]), 'x'), "-x^2-1");
        assert_eq!(format_poly(&Poly::<Integer>::zero(), 'x'), "0");
        let p = Poly::new(vec![y(&[0, -1]), y(&[1, 1])]);
        assert_eq!(p.to_string(), "(y+1)*x-(y)");
        let q = Poly::new(vec![y(&[3]), y(&[1, -1])]);
        assert_eq!(q.to_string(), "-(y-1)*x+3");
        assert_eq!(y(&[-1, 0, 2]).to_string(), "2*y^2-1");
    }
}
