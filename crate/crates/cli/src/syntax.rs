//! Expression syntax: a small lexer and a recursive-descent parser.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary ('*' unary)*
//! unary := '-' unary | atom
//! atom  := dyadic | ordinal | '"' signs '"' | name | name '(' args ')'
//!        | '{' list? '|' list? '}' | '(' expr ')' | '_'
//! ```
//!
//! An ordinal literal starts with `w` and runs without spaces, so `w+1` is
//! the ordinal and `w + 1` is a field sum.

use std::fmt;

use surreal_core::{Dyadic, Ordinal, Surreal};

use crate::error::CliError;

#[derive(Clone, Debug)]
pub struct Expr {
    /// Byte offset of the expression in the source line.
    pub pos: usize,
    pub kind: Kind,
}

/// Positions are ignored, so a printed and reparsed expression compares
/// equal to the original.
impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
}

impl BinOp {
    fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Kind {
    Dyadic(Dyadic),
    Ordinal(Ordinal),
    Signs(Surreal),
    Name(String),
    /// The empty bound `_`.
    Empty,
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Call(String, Vec<Expr>),
    Bracket(Vec<Expr>, Vec<Expr>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Dyadic(Dyadic),
    Ordinal(Ordinal),
    Signs(Surreal),
    Name(String),
    Punct(char),
    End,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, CliError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let name_char = |b: u8| b.is_ascii_alphanumeric() || b == b'_' || b == b'?';
        if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i + 1 < bytes.len() && bytes[i] == b'/' && bytes[i + 1].is_ascii_digit() {
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
            }
            let d = src[start..i]
                .parse()
                .map_err(|_| CliError::parse(start, format!("`{}` is not dyadic", &src[start..i])))?;
            out.push((start, Tok::Dyadic(d)));
        } else if c == b'w' && !bytes.get(i + 1).is_some_and(|b| name_char(*b)) {
            let (o, used) = Ordinal::parse_prefix(&src[i..]).map_err(|e| CliError::parse(start, e.to_string()))?;
            i += used;
            out.push((start, Tok::Ordinal(o)));
        } else if c.is_ascii_alphabetic() || c == b'_' {
            while i < bytes.len() && name_char(bytes[i]) {
                i += 1;
            }
            out.push((start, Tok::Name(src[start..i].to_string())));
        } else if c == b'"' {
            let close = src[i + 1..].find('"').ok_or_else(|| CliError::parse(start, "unterminated sign string"))?;
            let body = &src[i + 1..i + 1 + close];
            let x = body.parse().map_err(|e: surreal_core::Error| CliError::parse(start, e.to_string()))?;
            i += close + 2;
            out.push((start, Tok::Signs(x)));
        } else if "+-*(){}|,".contains(c as char) {
            i += 1;
            out.push((start, Tok::Punct(c as char)));
        } else {
            return Err(CliError::parse(start, format!("unexpected `{}`", src[start..].chars().next().unwrap())));
        }
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.at].clone();
        if t.1 != Tok::End {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Punct(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), CliError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(CliError::parse(self.pos(), format!("expected `{c}`")))
        }
    }

    fn expr(&mut self) -> Result<Expr, CliError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Punct('+') => BinOp::Add,
                Tok::Punct('-') => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.at += 1;
            let rhs = self.term()?;
            lhs = Expr { pos: lhs.pos, kind: Kind::Bin(op, Box::new(lhs), Box::new(rhs)) };
        }
    }

    fn term(&mut self) -> Result<Expr, CliError> {
        let mut lhs = self.unary()?;
        while self.eat('*') {
            let rhs = self.unary()?;
            lhs = Expr { pos: lhs.pos, kind: Kind::Bin(BinOp::Mul, Box::new(lhs), Box::new(rhs)) };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, CliError> {
        let pos = self.pos();
        if self.eat('-') {
            let inner = self.unary()?;
            return Ok(Expr { pos, kind: Kind::Neg(Box::new(inner)) });
        }
        self.atom()
    }

    fn list(&mut self, stop: char) -> Result<Vec<Expr>, CliError> {
        let mut items = Vec::new();
        if *self.peek() == Tok::Punct(stop) {
            return Ok(items);
        }
        loop {
            items.push(self.expr()?);
            if !self.eat(',') {
                return Ok(items);
            }
        }
    }

    fn atom(&mut self) -> Result<Expr, CliError> {
        let (pos, tok) = self.bump();
        let kind = match tok {
            Tok::Dyadic(d) => Kind::Dyadic(d),
            Tok::Ordinal(o) => Kind::Ordinal(o),
            Tok::Signs(x) => Kind::Signs(x),
            Tok::Name(n) if n == "_" => Kind::Empty,
            Tok::Name(n) => {
                if self.eat('(') {
                    let args = self.list(')')?;
                    self.expect(')')?;
                    Kind::Call(n, args)
                } else {
                    Kind::Name(n)
                }
            }
            Tok::Punct('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                return Ok(e);
            }
            Tok::Punct('{') => {
                let lower = self.list('|')?;
                self.expect('|')?;
                let upper = self.list('}')?;
                self.expect('}')?;
                Kind::Bracket(lower, upper)
            }
            Tok::End => return Err(CliError::parse(pos, "unexpected end of input")),
            Tok::Punct(c) => return Err(CliError::parse(pos, format!("unexpected `{c}`"))),
        };
        Ok(Expr { pos, kind })
    }
}

pub fn parse(src: &str) -> Result<Expr, CliError> {
    let mut p = Parser { toks: lex(src)?, at: 0 };
    let e = p.expr()?;
    match p.peek() {
        Tok::End => Ok(e),
        _ => Err(CliError::parse(p.pos(), "unexpected input after expression")),
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, items: &[Expr]) -> fmt::Result {
    for (i, e) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{e}")?;
    }
    Ok(())
}

/// Prints canonical syntax. Operands of operators are parenthesized
/// whenever they are themselves operator expressions.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrapped = |e: &Expr| match e.kind {
            Kind::Bin(..) | Kind::Neg(_) => format!("({e})"),
            _ => e.to_string(),
        };
        match &self.kind {
            Kind::Dyadic(d) => write!(f, "{d}"),
            Kind::Ordinal(o) => write!(f, "{o}"),
            Kind::Signs(x) => write!(f, "\"{x}\""),
            Kind::Name(n) => f.write_str(n),
            Kind::Empty => f.write_str("_"),
            Kind::Neg(e) => write!(f, "-{}", wrapped(e)),
            Kind::Bin(op, a, b) => write!(f, "{} {} {}", wrapped(a), op.symbol(), wrapped(b)),
            Kind::Call(n, args) => {
                write!(f, "{n}(")?;
                write_list(f, args)?;
                f.write_str(")")
            }
            Kind::Bracket(l, r) => {
                f.write_str("{")?;
                write_list(f, l)?;
                f.write_str(if l.is_empty() { "|" } else { " |" })?;
                if !r.is_empty() {
                    f.write_str(" ")?;
                }
                write_list(f, r)?;
                f.write_str("}")
            }
        }
    }
}
