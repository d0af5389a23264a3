use super::lexer::{lex, Tok, Token};
use super::ScriptError;
use crate::exact::{Fuel, Rational};
use crate::kernel::Scalar;

/// Arithmetic over rationals with square roots, for the `approx` command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Rational),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Sqrt(Box<Expr>),
}

impl Expr {
    /// Exact when the value is a surd sum the exact layer can form, otherwise
    /// a regular-sequence real.
    pub fn eval(&self, fuel: &Fuel) -> Result<Scalar, ScriptError> {
        Ok(match self {
            Expr::Num(q) => Scalar::rational(q.clone()),
            Expr::Neg(a) => a.eval(fuel)?.neg(),
            Expr::Add(a, b) => a.eval(fuel)?.add(&b.eval(fuel)?),
            Expr::Sub(a, b) => a.eval(fuel)?.sub(&b.eval(fuel)?),
            Expr::Mul(a, b) => a.eval(fuel)?.mul(&b.eval(fuel)?),
            Expr::Div(a, b) => a.eval(fuel)?.div(&b.eval(fuel)?, fuel)?,
            Expr::Sqrt(a) => a.eval(fuel)?.sqrt(fuel)?,
        })
    }
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].tok
    }

    fn bump(&mut self) {
        self.at += 1;
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T, ScriptError> {
        let t = &self.toks[self.at];
        Err(ScriptError::syntax(t.pos, expected, &t.tok.describe()))
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ScriptError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.fail(&[&tok.describe()])
        }
    }

    fn sum(&mut self) -> Result<Expr, ScriptError> {
        let mut e = self.product()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => Expr::Add,
                Tok::Minus => Expr::Sub,
                _ => return Ok(e),
            };
            self.bump();
            e = op(Box::new(e), Box::new(self.product()?));
        }
    }

    fn product(&mut self) -> Result<Expr, ScriptError> {
        let mut e = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Star => Expr::Mul,
                Tok::Slash => Expr::Div,
                _ => return Ok(e),
            };
            self.bump();
            e = op(Box::new(e), Box::new(self.unary()?));
        }
    }

    fn unary(&mut self) -> Result<Expr, ScriptError> {
        match self.peek().clone() {
            Tok::Minus => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Num(Rational::from_integer(n)))
            }
            Tok::LParen => {
                self.bump();
                let e = self.sum()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(s) if s == "sqrt" => {
                self.bump();
                self.expect(Tok::LParen)?;
                let e = self.sum()?;
                self.expect(Tok::RParen)?;
                Ok(Expr::Sqrt(Box::new(e)))
            }
            _ => self.fail(&["integer", "`(`", "`sqrt`", "`-`"]),
        }
    }
}

/// Parses integer literals, `+ - * /`, `sqrt(…)` and parentheses.
pub fn parse_expr(text: &str) -> Result<Expr, ScriptError> {
    let mut p = Parser { toks: lex(text)?, at: 0 };
    let e = p.sum()?;
    if *p.peek() != Tok::Eof {
        return p.fail(&["operator", "end of input"]);
    }
    Ok(e)
}
