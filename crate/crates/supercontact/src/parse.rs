//! Parser for the superfunction expression grammar.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := '-' factor | power
//! power    := atom ('^' nat)?
//! atom     := rational | variable | '(' expr ')'
//! rational := nat ('/' nat)?
//! variable := 'z' | 'x'<k> | 'y'<k> | 'th'<j>
//! ```
//!
//! `^` binds tightest and its exponent must be a nonnegative integer
//! literal; `/` occurs only inside rational literals. Whitespace is
//! insignificant. Raising an odd variable to a power `>= 2` yields the zero
//! superfunction rather than an error, matching `th^2 = 0`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::dims::{CoordId, Dims};
use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::superfn::Superfunction;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Nat(BigInt),
    Ident(String),
    Eof,
}

struct Lexer<'a> {
    src: &'a str,
    /// Byte offset of the next unread char.
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    /// Next token and its starting byte offset.
    fn next(&mut self) -> Result<(Tok, usize)> {
        self.skip_ws();
        let start = self.pos;
        let Some(c) = self.src[self.pos..].chars().next() else {
            return Ok((Tok::Eof, start));
        };
        let simple = |t| Ok((t, start));
        match c {
            '+' => {
                self.pos += 1;
                simple(Tok::Plus)
            }
            '-' => {
                self.pos += 1;
                simple(Tok::Minus)
            }
            '*' => {
                self.pos += 1;
                simple(Tok::Star)
            }
            '^' => {
                self.pos += 1;
                simple(Tok::Caret)
            }
            '/' => {
                self.pos += 1;
                simple(Tok::Slash)
            }
            '(' => {
                self.pos += 1;
                simple(Tok::LParen)
            }
            ')' => {
                self.pos += 1;
                simple(Tok::RParen)
            }
            '0'..='9' => {
                let digits = self.take_while(|c| c.is_ascii_digit());
                let value = digits.parse::<BigInt>().expect("digit run parses");
                Ok((Tok::Nat(value), start))
            }
            c if c.is_ascii_alphabetic() => {
                let mut name = self.take_while(|c| c.is_ascii_alphabetic());
                name.push_str(&self.take_while(|c| c.is_ascii_digit()));
                Ok((Tok::Ident(name), start))
            }
            other => Err(Error::Parse {
                pos: start,
                msg: format!("unexpected character {other:?}"),
            }),
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> String {
        let start = self.pos;
        while let Some(c) = self.src[self.pos..].chars().next() {
            if pred(c) {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        self.src[start..self.pos].to_string()
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    tok: Tok,
    tok_pos: usize,
    dims: Dims,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, dims: Dims) -> Result<Self> {
        let mut lexer = Lexer::new(src);
        let (tok, tok_pos) = lexer.next()?;
        Ok(Parser {
            lexer,
            tok,
            tok_pos,
            dims,
        })
    }

    fn advance(&mut self) -> Result<()> {
        let (tok, pos) = self.lexer.next()?;
        self.tok = tok;
        self.tok_pos = pos;
        Ok(())
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.tok_pos,
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Superfunction> {
        let mut acc = self.term()?;
        loop {
            match self.tok {
                Tok::Plus => {
                    self.advance()?;
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.advance()?;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Superfunction> {
        let mut acc = self.factor()?;
        while self.tok == Tok::Star {
            self.advance()?;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Superfunction> {
        if self.tok == Tok::Minus {
            self.advance()?;
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if self.tok == Tok::Caret {
            self.advance()?;
            let Tok::Nat(ref exp) = self.tok else {
                return self.err("exponent must be a nonnegative integer literal");
            };
            let exp: u32 = exp.try_into().map_err(|_| Error::Parse {
                pos: self.tok_pos,
                msg: "exponent too large".to_string(),
            })?;
            self.advance()?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Superfunction> {
        match self.tok.clone() {
            Tok::Nat(p) => {
                self.advance()?;
                // a following '/' continues the rational literal
                let q = if self.tok == Tok::Slash {
                    self.advance()?;
                    let Tok::Nat(q) = self.tok.clone() else {
                        return self.err("expected denominator after '/'");
                    };
                    if q.is_zero() {
                        return self.err("zero denominator");
                    }
                    self.advance()?;
                    q
                } else {
                    BigInt::from(1)
                };
                Ok(Superfunction::constant(Rat::from_bigints(p, q), self.dims))
            }
            Tok::Ident(name) => {
                let coord = self.variable(&name)?;
                self.advance()?;
                Ok(Superfunction::var(coord, self.dims))
            }
            Tok::LParen => {
                self.advance()?;
                let inner = self.expr()?;
                if self.tok != Tok::RParen {
                    return self.err("expected ')'");
                }
                self.advance()?;
                Ok(inner)
            }
            Tok::Eof => self.err("unexpected end of input"),
            other => self.err(format!("unexpected token {other:?}")),
        }
    }

    fn variable(&self, name: &str) -> Result<CoordId> {
        let split = name
            .find(|c: char| c.is_ascii_digit())
            .unwrap_or(name.len());
        let (head, digits) = name.split_at(split);
        let index: Option<usize> = if digits.is_empty() {
            None
        } else {
            digits.parse().ok()
        };
        let coord = match (head, index) {
            ("z", None) => Some(CoordId::Z),
            ("x", Some(k)) if k >= 1 => Some(CoordId::X(k)),
            ("y", Some(k)) if k >= 1 => Some(CoordId::Y(k)),
            ("th", Some(j)) if j >= 1 => Some(CoordId::Theta(j)),
            _ => None,
        };
        match coord {
            Some(c) if c.in_range(self.dims) => Ok(c),
            _ => self.err(format!(
                "unknown variable {name:?} on {} (expected z, x1..x{}, y1..y{}, th1..th{})",
                self.dims, self.dims.l, self.dims.l, self.dims.n
            )),
        }
    }
}

/// Parses `src` into a canonical [`Superfunction`] on `R^{2l+1|n}`.
pub fn parse_expr(src: &str, dims: Dims) -> Result<Superfunction> {
    let mut parser = Parser::new(src, dims)?;
    let value = parser.expr()?;
    if parser.tok != Tok::Eof {
        return parser.err("trailing input");
    }
    Ok(value)
}
