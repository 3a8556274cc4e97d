//! Text form of polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | base ('^' nat)?
//! base   := int ('/' int)? | var | '(' expr ')'
//! ```
//!
//! Printing emits the same grammar: terms in descending grevlex order,
//! explicit `*`, rational coefficients as `a/b`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Monomial, MultiPoly, Rational, Var};
use crate::error::{Error, Result};

/// Variables accepted in user input.
pub const USER_VARS: &[Var] = &[Var::T, Var::X, Var::Y, Var::Z];

const MAX_EXPONENT: u64 = 4096;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((Tok::Int(s.parse().expect("digits")), col));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if "+-*^()/".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(Error::Syntax {
                column: col,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

impl Lexer {
    fn peek(&self) -> &(Tok, usize) {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek().0 == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }
}

struct Parser<'a> {
    lex: Lexer,
    ring: &'a [Var],
}

impl Parser<'_> {
    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        loop {
            if self.lex.eat('+') {
                acc = acc + self.term()?;
            } else if self.lex.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        while self.lex.eat('*') {
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        if self.lex.eat('-') {
            return Ok(-self.factor()?);
        }
        let base = self.base()?;
        if self.lex.eat('^') {
            let (tok, col) = self.lex.bump();
            let e = match tok {
                Tok::Int(n) => n.to_u64().filter(|&e| e <= MAX_EXPONENT),
                _ => None,
            };
            let e = e.ok_or(Error::BadExponent { column: col })?;
            // `x^2.5` and `x^2/3` are not exponents either.
            if let (Tok::Sym('/'), c) = self.lex.peek() {
                return Err(Error::BadExponent { column: *c });
            }
            return Ok(base.pow(e as u32));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<MultiPoly> {
        let (tok, col) = self.lex.bump();
        match tok {
            Tok::Int(n) => {
                if self.lex.eat('/') {
                    let (den, dcol) = self.lex.bump();
                    match den {
                        Tok::Int(d) if !d.is_zero() => Ok(MultiPoly::constant(Rational::new(n, d))),
                        Tok::Int(_) => Err(Error::Syntax {
                            column: dcol,
                            message: "zero denominator".into(),
                        }),
                        _ => Err(Error::Syntax {
                            column: dcol,
                            message: "expected integer denominator".into(),
                        }),
                    }
                } else {
                    Ok(MultiPoly::constant(Rational::from_integer(n)))
                }
            }
            Tok::Ident(name) => match Var::from_name(&name) {
                Some(v) if self.ring.contains(&v) => Ok(MultiPoly::var(v)),
                _ => Err(Error::UnknownVariable { name, column: col }),
            },
            Tok::Sym('(') => {
                let inner = self.expr()?;
                let (close, ccol) = self.lex.bump();
                if close != Tok::Sym(')') {
                    return Err(Error::Syntax {
                        column: ccol,
                        message: "expected `)`".into(),
                    });
                }
                Ok(inner)
            }
            Tok::End => Err(Error::Syntax {
                column: col,
                message: "unexpected end of input".into(),
            }),
            Tok::Sym(c) => Err(Error::Syntax {
                column: col,
                message: format!("unexpected `{c}`"),
            }),
        }
    }
}

/// Parses `text` as a polynomial in the variables of `ring`.
pub fn parse_poly(text: &str, ring: &[Var]) -> Result<MultiPoly> {
    let toks = lex(text)?;
    let mut p = Parser {
        lex: Lexer { toks, pos: 0 },
        ring,
    };
    let poly = p.expr()?;
    match p.lex.peek() {
        (Tok::End, _) => Ok(poly),
        (_, col) => Err(Error::Syntax {
            column: *col,
            message: "expected operator or end of input".into(),
        }),
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.denom().is_one() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().rev().enumerate() {
            let abs = c.abs();
            if c.is_negative() {
                f.write_str(if i == 0 { "-" } else { " - " })?;
            } else if i > 0 {
                f.write_str(" + ")?;
            }
            if *m == Monomial::one() {
                write_rational(f, &abs)?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write_rational(f, &abs)?;
                write!(f, "*{m}")?;
            }
        }
        Ok(())
    }
}
