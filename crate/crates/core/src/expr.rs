//! A small arithmetic-expression parser shared by polynomial and
//! function-algebra inputs.
//!
//! Grammar: `expr := term (('+'|'-') term)*`, `term := unary ('*' unary)*`,
//! `unary := '-' unary | power`, `power := atom ('^' nat)?`,
//! `atom := integer | identifier | '(' expr ')'`.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { pos: usize, name: String },
    #[error("malformed exponent at position {pos}")]
    MalformedExponent { pos: usize },
    #[error("unexpected character `{ch}` at position {pos}")]
    UnexpectedChar { pos: usize, ch: char },
    #[error("unexpected end of input at position {pos}")]
    UnexpectedEnd { pos: usize },
    #[error("unexpected token at position {pos}")]
    UnexpectedToken { pos: usize },
    #[error("empty input")]
    Empty,
}

impl ParseError {
    pub fn position(&self) -> Option<usize> {
        match self {
            ParseError::UnknownVariable { pos, .. }
            | ParseError::MalformedExponent { pos }
            | ParseError::UnexpectedChar { pos, .. }
            | ParseError::UnexpectedEnd { pos }
            | ParseError::UnexpectedToken { pos } => Some(*pos),
            ParseError::Empty => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    /// Decimal literal, kept as text so the consumer can reduce it.
    Int(String),
    Ident {
        name: String,
        pos: usize,
    },
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u64),
}

/// Target of expression evaluation.
pub trait ExprRing: Sized {
    fn literal(&self, digits: &str) -> Self;
    fn atom(&self, name: &str, pos: usize) -> Result<Self, ParseError>;
    fn add(a: Self, b: Self) -> Self;
    fn sub(a: Self, b: Self) -> Self;
    fn mul(a: Self, b: Self) -> Self;
    fn neg(a: Self) -> Self;
    fn pow(a: Self, k: u64) -> Self;
}

/// Evaluates `e` using `ctx` to build literals and atoms.
pub fn eval<R: ExprRing>(e: &Expr, ctx: &R) -> Result<R, ParseError> {
    Ok(match e {
        Expr::Int(d) => ctx.literal(d),
        Expr::Ident { name, pos } => ctx.atom(name, *pos)?,
        Expr::Add(a, b) => R::add(eval(a, ctx)?, eval(b, ctx)?),
        Expr::Sub(a, b) => R::sub(eval(a, ctx)?, eval(b, ctx)?),
        Expr::Mul(a, b) => R::mul(eval(a, ctx)?, eval(b, ctx)?),
        Expr::Neg(a) => R::neg(eval(a, ctx)?),
        Expr::Pow(a, k) => R::pow(eval(a, ctx)?, *k),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
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

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Int(chars[start..i].iter().collect()), start));
            continue;
        }
        if c.is_ascii_alphabetic() {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), start));
            continue;
        }
        let t = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return Err(ParseError::UnexpectedChar { pos: start, ch: c }),
        };
        out.push((t, start));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.at += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.at += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.at += 1;
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if let Some(Tok::Minus) = self.peek() {
            self.at += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            let caret_pos = self.pos();
            self.at += 1;
            return match self.toks.get(self.at) {
                Some((Tok::Int(d), p)) => {
                    let k: u64 = d
                        .parse()
                        .map_err(|_| ParseError::MalformedExponent { pos: *p })?;
                    self.at += 1;
                    if let Some(Tok::Caret) = self.peek() {
                        return Err(ParseError::MalformedExponent { pos: self.pos() });
                    }
                    Ok(Expr::Pow(Box::new(base), k))
                }
                Some((_, p)) => Err(ParseError::MalformedExponent { pos: *p }),
                None => Err(ParseError::MalformedExponent { pos: caret_pos + 1 }),
            };
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        match self.toks.get(self.at).cloned() {
            Some((Tok::Int(d), _)) => {
                self.at += 1;
                Ok(Expr::Int(d))
            }
            Some((Tok::Ident(name), p)) => {
                self.at += 1;
                Ok(Expr::Ident { name, pos: p })
            }
            Some((Tok::LParen, _)) => {
                self.at += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.at += 1;
                        Ok(inner)
                    }
                    Some(_) => Err(ParseError::UnexpectedToken { pos: self.pos() }),
                    None => Err(ParseError::UnexpectedEnd { pos: self.end }),
                }
            }
            Some(_) => Err(ParseError::UnexpectedToken { pos }),
            None => Err(ParseError::UnexpectedEnd { pos: self.end }),
        }
    }
}

/// Parses `text` into an expression tree. Positions are character offsets.
pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(ParseError::Empty);
    }
    let mut p = Parser {
        toks,
        at: 0,
        end: text.chars().count(),
    };
    let e = p.expr()?;
    if p.at != p.toks.len() {
        return Err(ParseError::UnexpectedToken { pos: p.pos() });
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let e = parse_expr("1 + 2*3^2").unwrap();
        match e {
            Expr::Add(_, r) => assert!(matches!(*r, Expr::Mul(_, _))),
            _ => panic!("bad tree"),
        }
    }

    #[test]
    fn unary_minus_binds_looser_than_power() {
        let e = parse_expr("-x1^2").unwrap();
        assert!(matches!(e, Expr::Neg(inner) if matches!(*inner, Expr::Pow(_, 2))));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_expr("x1^").unwrap_err(),
            ParseError::MalformedExponent { pos: 3 }
        );
        assert_eq!(
            parse_expr("x1^y").unwrap_err(),
            ParseError::MalformedExponent { pos: 3 }
        );
        assert_eq!(
            parse_expr("x1 # 2").unwrap_err(),
            ParseError::UnexpectedChar { pos: 3, ch: '#' }
        );
        assert_eq!(
            parse_expr("(x1").unwrap_err(),
            ParseError::UnexpectedEnd { pos: 3 }
        );
        assert_eq!(parse_expr("  ").unwrap_err(), ParseError::Empty);
    }
}
