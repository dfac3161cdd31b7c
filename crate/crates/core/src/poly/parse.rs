//! Tokenizer and polynomial expression grammar shared by every text front end.
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := power (['*' | '/'] power)*        -- '*' may be omitted
//! power  := atom ['^' integer]
//! atom   := integer | variable | '(' expr ')'
//! ```
//!
//! Division is only allowed by nonzero constants. `#` and `//` start line comments.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::polynomial::{Polynomial, RingRef};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Ident(String),
    Int(BigInt),
    Sym(char),
    Eof,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub offset: usize,
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    pub fn at(token: &Token, message: impl Into<String>) -> Self {
        ParseError { line: token.line, col: token.col, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

const SYMBOLS: &str = "+-*/^()[],;=<>:.{}";

pub fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let (mut line, mut col) = (1usize, 1usize);
    let mut k = 0;
    while k < chars.len() {
        let (offset, c) = chars[k];
        let start = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            k += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            k += 1;
            continue;
        }
        let comment = c == '#' || (c == '/' && chars.get(k + 1).map(|p| p.1) == Some('/'));
        if comment {
            while k < chars.len() && chars[k].1 != '\n' {
                k += 1;
            }
            continue;
        }
        let kind = if c.is_ascii_digit() {
            let begin = k;
            while k < chars.len() && chars[k].1.is_ascii_digit() {
                k += 1;
            }
            let text: String = chars[begin..k].iter().map(|p| p.1).collect();
            col += k - begin;
            TokenKind::Int(text.parse().expect("digits"))
        } else if c.is_alphabetic() || c == '_' {
            let begin = k;
            while k < chars.len() && (chars[k].1.is_alphanumeric() || chars[k].1 == '_') {
                k += 1;
            }
            col += k - begin;
            TokenKind::Ident(chars[begin..k].iter().map(|p| p.1).collect())
        } else if SYMBOLS.contains(c) {
            k += 1;
            col += 1;
            TokenKind::Sym(c)
        } else {
            return Err(ParseError { line, col, message: format!("unexpected character '{c}'") });
        };
        tokens.push(Token { kind, offset, line: start.0, col: start.1 });
    }
    tokens.push(Token { kind: TokenKind::Eof, offset: src.len(), line, col });
    Ok(tokens)
}

/// Cursor over a token list.
pub struct TokenStream {
    tokens: Vec<Token>,
    pos: usize,
}

impl TokenStream {
    pub fn new(src: &str) -> Result<Self, ParseError> {
        Ok(TokenStream { tokens: tokenize(src)?, pos: 0 })
    }

    pub fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    pub fn peek_at(&self, ahead: usize) -> &Token {
        let k = (self.pos + ahead).min(self.tokens.len() - 1);
        &self.tokens[k]
    }

    pub fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    pub fn at_eof(&self) -> bool {
        self.peek().kind == TokenKind::Eof
    }

    pub fn is_sym(&self, c: char) -> bool {
        self.peek().kind == TokenKind::Sym(c)
    }

    pub fn is_ident(&self, word: &str) -> bool {
        matches!(&self.peek().kind, TokenKind::Ident(s) if s == word)
    }

    pub fn eat_sym(&mut self, c: char) -> bool {
        if self.is_sym(c) {
            self.next();
            true
        } else {
            false
        }
    }

    pub fn expect_sym(&mut self, c: char) -> Result<Token, ParseError> {
        if self.is_sym(c) {
            Ok(self.next())
        } else {
            Err(ParseError::at(self.peek(), format!("expected '{c}', found {}", describe(self.peek()))))
        }
    }

    pub fn expect_ident(&mut self) -> Result<(String, Token), ParseError> {
        match &self.peek().kind {
            TokenKind::Ident(s) => {
                let s = s.clone();
                Ok((s, self.next()))
            }
            _ => Err(ParseError::at(self.peek(), format!("expected a name, found {}", describe(self.peek())))),
        }
    }

    pub fn expect_keyword(&mut self, word: &str) -> Result<Token, ParseError> {
        if self.is_ident(word) {
            Ok(self.next())
        } else {
            Err(ParseError::at(self.peek(), format!("expected '{word}', found {}", describe(self.peek()))))
        }
    }

    pub fn expect_int(&mut self) -> Result<(BigInt, Token), ParseError> {
        match &self.peek().kind {
            TokenKind::Int(n) => {
                let n = n.clone();
                Ok((n, self.next()))
            }
            _ => Err(ParseError::at(self.peek(), format!("expected an integer, found {}", describe(self.peek())))),
        }
    }

    pub fn expect_u32(&mut self) -> Result<u32, ParseError> {
        let (n, tok) = self.expect_int()?;
        n.to_u32().ok_or_else(|| ParseError::at(&tok, "integer out of range"))
    }
}

pub fn describe(t: &Token) -> String {
    match &t.kind {
        TokenKind::Ident(s) => format!("'{s}'"),
        TokenKind::Int(n) => format!("'{n}'"),
        TokenKind::Sym(c) => format!("'{c}'"),
        TokenKind::Eof => "end of input".to_string(),
    }
}

fn starts_atom(ts: &TokenStream) -> bool {
    matches!(ts.peek().kind, TokenKind::Int(_) | TokenKind::Ident(_) | TokenKind::Sym('('))
}

pub fn parse_expr(ts: &mut TokenStream, ring: &RingRef) -> Result<Polynomial, ParseError> {
    let negate = if ts.eat_sym('-') {
        true
    } else {
        ts.eat_sym('+');
        false
    };
    let mut acc = parse_term(ts, ring)?;
    if negate {
        acc = -&acc;
    }
    loop {
        if ts.eat_sym('+') {
            acc = &acc + &parse_term(ts, ring)?;
        } else if ts.eat_sym('-') {
            acc = &acc - &parse_term(ts, ring)?;
        } else {
            return Ok(acc);
        }
    }
}

fn parse_term(ts: &mut TokenStream, ring: &RingRef) -> Result<Polynomial, ParseError> {
    let mut acc = parse_power(ts, ring)?;
    loop {
        if ts.eat_sym('*') {
            acc = &acc * &parse_power(ts, ring)?;
        } else if ts.is_sym('/') {
            let slash = ts.next();
            let d = parse_power(ts, ring)?;
            if !d.is_constant() || d.is_zero() {
                return Err(ParseError::at(&slash, "division is only allowed by a nonzero constant"));
            }
            let inv = ring
                .field
                .inv(d.leading_coeff().unwrap())
                .map_err(|_| ParseError::at(&slash, "constant is not invertible in the coefficient field"))?;
            acc = acc.scale(&inv);
        } else if starts_atom(ts) {
            acc = &acc * &parse_power(ts, ring)?;
        } else {
            return Ok(acc);
        }
    }
}

fn parse_power(ts: &mut TokenStream, ring: &RingRef) -> Result<Polynomial, ParseError> {
    let base = parse_atom(ts, ring)?;
    if ts.eat_sym('^') {
        let e = ts.expect_u32()?;
        Ok(base.pow(e))
    } else {
        Ok(base)
    }
}

fn parse_atom(ts: &mut TokenStream, ring: &RingRef) -> Result<Polynomial, ParseError> {
    let tok = ts.peek().clone();
    match &tok.kind {
        TokenKind::Int(n) => {
            ts.next();
            let c = ring
                .field
                .from_rational(&BigRational::from_integer(n.clone()))
                .map_err(|e| ParseError::at(&tok, e.to_string()))?;
            Ok(Polynomial::constant(ring, c))
        }
        TokenKind::Ident(name) => match ring.var_index(name) {
            Some(i) => {
                ts.next();
                Ok(Polynomial::var(ring, i))
            }
            None => Err(ParseError::at(&tok, format!("unknown variable '{name}'"))),
        },
        TokenKind::Sym('(') => {
            ts.next();
            let inner = parse_expr(ts, ring)?;
            ts.expect_sym(')')?;
            Ok(inner)
        }
        _ => Err(ParseError::at(&tok, format!("expected a polynomial term, found {}", describe(&tok)))),
    }
}

/// Parses a complete string as one polynomial.
pub fn parse_polynomial(ring: &RingRef, src: &str) -> Result<Polynomial, ParseError> {
    let mut ts = TokenStream::new(src)?;
    let p = parse_expr(&mut ts, ring)?;
    if !ts.at_eof() {
        return Err(ParseError::at(ts.peek(), format!("unexpected {}", describe(ts.peek()))));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::field::Field;
    use crate::poly::polynomial::PolyRing;
    use proptest::prelude::*;

    fn ring() -> RingRef {
        PolyRing::with_vars(Field::Prime(32003), &["x", "y", "z"])
    }

    #[test]
    fn parses_rendered_form() {
        let r = ring();
        let p = parse_polynomial(&r, "x^2*y - 3*y^3").unwrap();
        assert_eq!(p.render(), "x^2*y - 3*y^3");
        assert_eq!(parse_polynomial(&r, "3x^2y").unwrap(), parse_polynomial(&r, "3*x^2*y").unwrap());
        assert_eq!(parse_polynomial(&r, "(x+y)^2").unwrap().render(), "x^2 + 2*x*y + y^2");
    }

    #[test]
    fn rational_coefficients() {
        let r = PolyRing::with_vars(Field::Rational, &["x"]);
        assert_eq!(parse_polynomial(&r, "x/2 - 1/3").unwrap().render(), "1/2*x - 1/3");
    }

    #[test]
    fn dangling_operator_reports_position() {
        let r = ring();
        let err = parse_polynomial(&r, "x+").unwrap_err();
        assert_eq!((err.line, err.col), (1, 3));
        let err = parse_polynomial(&r, "w").unwrap_err();
        assert!(err.message.contains("unknown variable"));
    }

    #[test]
    fn division_by_polynomial_is_rejected() {
        assert!(parse_polynomial(&ring(), "x/y").is_err());
        assert!(parse_polynomial(&ring(), "x/0").is_err());
    }

    proptest! {
        #[test]
        fn render_then_parse_is_identity(
            terms in prop::collection::vec((prop::collection::vec(0u32..4, 3), -20i64..20), 0..6)
        ) {
            let r = ring();
            let p = Polynomial::from_terms(
                &r,
                terms.into_iter().map(|(e, c)| (crate::poly::Monomial::new(e), r.field.from_i64(c))).collect(),
            );
            prop_assert_eq!(parse_polynomial(&r, &p.render()).unwrap(), p);
        }
    }
}
