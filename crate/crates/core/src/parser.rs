//! Surface syntax for algebra elements.
//!
//! ```text
//! expr     := term (("+" | "-") term)*
//! term     := factor ("*" factor)*
//! factor   := atom ("^" nat)?
//! atom     := "a" | "b" | "i" | rational | "(" expr ")"
//! rational := int ("/" nat)?
//! ```
//!
//! There is no unary minus; an integer literal may carry a leading `-`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::coeff::Coeff;
use crate::element::{AlgebraElement, Ordering};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    A,
    B,
    I,
    Rational(BigRational),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at offset {}: expected {} but found {}", self.offset, self.expected.join(" or "), self.found)
    }
}

impl std::error::Error for ParseError {}

const ATOM: &[&str] = &["'a'", "'b'", "'i'", "number", "'('"];

struct Parser<'s> {
    src: &'s str,
    pos: usize,
}

impl<'s> Parser<'s> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(|c: char| c.is_whitespace()) {
            self.pos += self.src[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn error(&mut self, expected: &[&'static str]) -> ParseError {
        let found = match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        };
        ParseError { offset: self.pos, expected: expected.to_vec(), found }
    }

    fn digits(&mut self) -> Option<&'s str> {
        let start = self.pos;
        let len = self.src[start..].bytes().take_while(u8::is_ascii_digit).count();
        self.pos += len;
        (len > 0).then(|| &self.src[start..start + len])
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some('-') => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let at = self.pos;
        let Some(d) = self.digits() else {
            return Err(self.error(&["exponent"]));
        };
        let e = u32::from_str(d).map_err(|_| ParseError { offset: at, expected: vec!["exponent below 2^32"], found: d.to_string() })?;
        Ok(Expr::Pow(Box::new(base), e))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some('a') => {
                self.pos += 1;
                Ok(Expr::A)
            }
            Some('b') => {
                self.pos += 1;
                Ok(Expr::B)
            }
            Some('i') => {
                self.pos += 1;
                Ok(Expr::I)
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error(&["'+'", "'-'", "'*'", "'^'", "')'"]));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() || c == '-' => self.rational(),
            _ => Err(self.error(ATOM)),
        }
    }

    fn rational(&mut self) -> Result<Expr, ParseError> {
        let start = self.pos;
        let negative = self.src[self.pos..].starts_with('-');
        if negative {
            self.pos += 1;
        }
        let Some(num) = self.digits() else {
            self.pos = start + usize::from(negative);
            return Err(self.error(&["digit"]));
        };
        let mut n = BigInt::from_str(num).expect("digits");
        if negative {
            n = -n;
        }
        let mut d = BigInt::from(1);
        if self.src[self.pos..].starts_with('/') {
            self.pos += 1;
            let at = self.pos;
            let Some(den) = self.digits() else {
                return Err(self.error(&["digit"]));
            };
            d = BigInt::from_str(den).expect("digits");
            if d.is_zero() {
                return Err(ParseError { offset: at, expected: vec!["nonzero denominator"], found: den.to_string() });
            }
        }
        Ok(Expr::Rational(BigRational::new(n, d)))
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.error(&["'+'", "'-'", "'*'", "'^'", "end of input"]));
    }
    Ok(e)
}

/// Evaluates in the algebra truncated at `order`; the result is in left normal form.
pub fn elaborate(e: &Expr, order: u32) -> AlgebraElement {
    match e {
        Expr::A => AlgebraElement::a(order),
        Expr::B => AlgebraElement::b(order),
        Expr::I => AlgebraElement::scalar(Coeff::i(), order),
        Expr::Rational(r) => AlgebraElement::scalar(Coeff::real(r.clone()), order),
        Expr::Add(x, y) => &elaborate(x, order) + &elaborate(y, order),
        Expr::Sub(x, y) => &elaborate(x, order) - &elaborate(y, order),
        Expr::Mul(x, y) => &elaborate(x, order) * &elaborate(y, order),
        Expr::Pow(x, n) => match **x {
            Expr::A if *n <= order => AlgebraElement::monomial(*n, 0, Coeff::from(1), order, Ordering::Left),
            Expr::B if *n <= order => AlgebraElement::monomial(0, *n, Coeff::from(1), order, Ordering::Left),
            _ => power(&elaborate(x, order), *n),
        },
    }
}

fn power(x: &AlgebraElement, n: u32) -> AlgebraElement {
    let order = x.order();
    let mut acc = AlgebraElement::one(order);
    let mut base = x.clone();
    let mut n = n;
    while n > 0 {
        if n & 1 == 1 {
            acc = &acc * &base;
        }
        n >>= 1;
        if n > 0 {
            base = &base * &base;
        }
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// `parse` followed by `elaborate`.
pub fn parse_element(text: &str, order: u32) -> Result<AlgebraElement, ParseError> {
    Ok(elaborate(&parse(text)?, order))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_elaborates_to_zero() {
        assert!(parse_element("a*b - b*a - b^2", 6).unwrap().is_zero());
    }

    #[test]
    fn precedence() {
        let e = parse("1 + a*b^2").unwrap();
        let expect = Expr::Add(
            Box::new(Expr::Rational(BigRational::from_integer(1.into()))),
            Box::new(Expr::Mul(Box::new(Expr::A), Box::new(Expr::Pow(Box::new(Expr::B), 2)))),
        );
        assert_eq!(e, expect);
        assert!(parse("(a - 1/2*b)^3").is_ok());
        assert_eq!(parse_element("2^3", 2).unwrap(), AlgebraElement::scalar(Coeff::from(8), 2));
        assert_eq!(parse_element("a^5", 3).unwrap(), AlgebraElement::zero(3));
    }

    #[test]
    fn errors() {
        let err = parse("a**b").unwrap_err();
        assert_eq!(err.offset, 2);
        assert_eq!(err.found, "'*'");
        assert_eq!(parse("a b").unwrap_err().offset, 2);
        assert_eq!(parse("(a").unwrap_err().offset, 2);
        assert_eq!(parse("").unwrap_err().found, "end of input");
        assert_eq!(parse("1/0").unwrap_err().offset, 2);
        assert_eq!(parse("a^").unwrap_err().offset, 2);
        assert!(parse("-a").is_err());
        assert!(parse("ab").is_err());
    }

    #[test]
    fn pretty_output_reparses() {
        let x = parse_element("-1*a + (3 - 2*i)*a*b - 1/3*b^2 + i*a^2", 5).unwrap();
        for form in [Ordering::Left, Ordering::Right] {
            let y = x.to_ordering(form);
            let back = parse_element(&y.to_string(), 5).unwrap();
            assert!(back.same_value(&x).unwrap(), "{y}");
        }
    }
}
