//! Recursive-descent parser for polynomial expressions in `x` and `y`.
//!
//! ```text
//! expr     := term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := ['-'] atom ['^' uint]
//! atom     := 'x' | 'y' | rational | '(' expr ')'
//! rational := int ['/' uint]
//! ```

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::arith::Rational;
use crate::bipoly::BiPoly;

const MAX_EXPONENT: u32 = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

/// Expression tree produced by the parser.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// Signed summands; `true` marks subtraction.
    Sum(Vec<(bool, Expr)>),
    Product(Vec<Expr>),
    Neg(Box<Expr>),
    Power(Box<Expr>, u32),
    Var(Var),
    Lit(Rational),
}

impl Expr {
    pub fn lower(&self) -> BiPoly {
        match self {
            Expr::Sum(ts) => ts.iter().fold(BiPoly::zero(), |acc, (neg, e)| {
                let p = e.lower();
                if *neg {
                    &acc - &p
                } else {
                    &acc + &p
                }
            }),
            Expr::Product(fs) => fs.iter().fold(BiPoly::one(), |acc, e| &acc * &e.lower()),
            Expr::Neg(e) => -&e.lower(),
            Expr::Power(b, k) => b.lower().pow(*k),
            Expr::Var(Var::X) => BiPoly::x(),
            Expr::Var(Var::Y) => BiPoly::y(),
            Expr::Lit(q) => BiPoly::constant(q.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(Var),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, column, message: message.into() })
}

fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (1usize, 1usize);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            out.push(Token { tok: Tok::Int(s.parse().unwrap()), line: tl, column: tc });
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            let tok = match s.as_str() {
                "x" => Tok::Var(Var::X),
                "y" => Tok::Var(Var::Y),
                _ => {
                    let hint = if s.chars().all(|ch| ch == 'x' || ch == 'y') {
                        " (implicit multiplication is not allowed; write x*y)"
                    } else {
                        " (only x and y are allowed)"
                    };
                    return err(tl, tc, format!("unknown identifier '{s}'{hint}"));
                }
            };
            out.push(Token { tok, line: tl, column: tc });
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
            _ => return err(tl, tc, format!("unexpected character '{c}'")),
        };
        out.push(Token { tok, line: tl, column: tc });
        col += 1;
        i += 1;
    }
    out.push(Token { tok: Tok::End, line, column: col });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut terms = vec![(false, self.term()?)];
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    terms.push((false, self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    terms.push((true, self.term()?));
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 && !terms[0].0 { terms.pop().unwrap().1 } else { Expr::Sum(terms) })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut fs = vec![self.factor()?];
        while self.peek().tok == Tok::Star {
            self.bump();
            fs.push(self.factor()?);
        }
        Ok(if fs.len() == 1 { fs.pop().unwrap() } else { Expr::Product(fs) })
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let neg = if self.peek().tok == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let mut e = self.atom()?;
        if self.peek().tok == Tok::Caret {
            self.bump();
            let t = self.bump();
            match t.tok {
                Tok::Int(n) => {
                    let k = n.to_u32().filter(|&k| k <= MAX_EXPONENT);
                    match k {
                        Some(k) => e = Expr::Power(Box::new(e), k),
                        None => return err(t.line, t.column, format!("exponent {n} is too large")),
                    }
                }
                _ => {
                    return err(t.line, t.column, "exponent must be a nonnegative integer literal");
                }
            }
        }
        Ok(if neg { Expr::Neg(Box::new(e)) } else { e })
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let t = self.bump();
        match t.tok {
            Tok::Var(v) => Ok(Expr::Var(v)),
            Tok::Int(n) => {
                if self.peek().tok == Tok::Slash {
                    self.bump();
                    let d = self.bump();
                    match d.tok {
                        Tok::Int(den) if !den.is_zero() => Ok(Expr::Lit(Rational::new(n, den))),
                        Tok::Int(_) => err(d.line, d.column, "zero denominator"),
                        _ => err(d.line, d.column, "expected an unsigned integer denominator"),
                    }
                } else {
                    Ok(Expr::Lit(Rational::from_integer(n)))
                }
            }
            Tok::LParen => {
                let e = self.expr()?;
                let close = self.bump();
                if close.tok != Tok::RParen {
                    return err(close.line, close.column, "expected ')'");
                }
                Ok(e)
            }
            Tok::End => err(t.line, t.column, "unexpected end of input"),
            other => err(t.line, t.column, format!("unexpected token {}", describe(&other))),
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Int(_) => "number",
        Tok::Var(_) => "variable",
        Tok::Plus => "'+'",
        Tok::Minus => "'-'",
        Tok::Star => "'*'",
        Tok::Slash => "'/'",
        Tok::Caret => "'^'",
        Tok::LParen => "'('",
        Tok::RParen => "')'",
        Tok::End => "end of input",
    }
}

/// Parse an expression into its syntax tree.
pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    let t = p.peek().clone();
    match t.tok {
        Tok::End => Ok(e),
        Tok::Var(_) | Tok::LParen | Tok::Int(_) => err(t.line, t.column, "implicit multiplication is not allowed; use '*'"),
        Tok::Slash => err(t.line, t.column, "division is only allowed inside rational literals p/q"),
        Tok::Caret => err(t.line, t.column, "exponent must apply to an atom; use parentheses"),
        other => err(t.line, t.column, format!("unexpected token {}", describe(&other))),
    }
}

/// Parse and lower to a polynomial.
pub fn parse_poly(src: &str) -> Result<BiPoly, ParseError> {
    parse_expr(src).map(|e| e.lower())
}
