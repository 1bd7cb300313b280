use num::BigRational;

use super::lexer::{lex, Tok, Token};
use super::ParseError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Wedge,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Ident { name: String, offset: usize },
    Num(BigRational),
    Neg(Box<Expr>),
    Bin { op: BinOp, lhs: Box<Expr>, rhs: Box<Expr>, offset: usize },
    Pow { base: Box<Expr>, exp: u32, offset: usize },
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.offset)
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Some(Tok::Plus) => BinOp::Add,
                Some(Tok::Minus) => BinOp::Sub,
                _ => return Ok(lhs),
            };
            let offset = self.offset();
            self.pos += 1;
            let rhs = self.term()?;
            lhs = Expr::Bin { op, lhs: Box::new(lhs), rhs: Box::new(rhs), offset };
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Some(Tok::Star) => BinOp::Mul,
                Some(Tok::Wedge) => BinOp::Wedge,
                _ => return Ok(lhs),
            };
            let offset = self.offset();
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = Expr::Bin { op, lhs: Box::new(lhs), rhs: Box::new(rhs), offset };
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        let offset = self.offset();
        self.pos += 1;
        match self.peek() {
            Some(Tok::Num(n)) if n.is_integer() => {
                let exp: u32 = n.numer().try_into().map_err(|_| ParseError::Syntax {
                    offset: self.offset(),
                    message: "exponent must be a small natural number".into(),
                })?;
                self.pos += 1;
                Ok(Expr::Pow { base: Box::new(base), exp, offset })
            }
            _ => Err(ParseError::Syntax { offset: self.offset(), message: "expected natural exponent after '^'".into() }),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let offset = self.offset();
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(Expr::Ident { name, offset })
            }
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(n))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(ParseError::Syntax { offset: self.offset(), message: "expected ')'".into() });
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => Err(ParseError::Syntax { offset, message: "expected identifier, number or '('".into() }),
            None => Err(ParseError::Syntax { offset, message: "unexpected end of input".into() }),
        }
    }
}

/// Parses `src` into an expression tree.
pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, end: src.len() };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(ParseError::Syntax { offset: p.offset(), message: "unexpected trailing input".into() });
    }
    Ok(e)
}
