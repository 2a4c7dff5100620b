//! Arithmetic-expression parser shared by the scalar types.
//!
//! Accepts integers, single-letter variables, `+ - * / ^`, parentheses, and
//! implicit multiplication by juxtaposition (`2u`, `uAB`, `(u+1)A^2`).

use num_bigint::BigInt;

use super::Field;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    /// Evaluates in any field, resolving variables through `var`.
    pub fn eval<F: Field>(&self, var: &dyn Fn(&str) -> Result<F>) -> Result<F> {
        self.eval_with(var, &|a: F, b: F| a.checked_div(&b))
    }

    /// Evaluates in any ring with a partial division.
    pub fn eval_with<T>(
        &self,
        var: &dyn Fn(&str) -> Result<T>,
        div: &dyn Fn(T, T) -> Result<T>,
    ) -> Result<T>
    where
        T: Clone
            + num_traits::One
            + std::ops::Add<Output = T>
            + std::ops::Sub<Output = T>
            + std::ops::Mul<Output = T>
            + std::ops::Neg<Output = T>
            + FromBigInt,
    {
        Ok(match self {
            Expr::Int(c) => T::from_bigint(c),
            Expr::Var(name) => var(name)?,
            Expr::Neg(a) => -a.eval_with(var, div)?,
            Expr::Add(a, b) => a.eval_with(var, div)? + b.eval_with(var, div)?,
            Expr::Sub(a, b) => a.eval_with(var, div)? - b.eval_with(var, div)?,
            Expr::Mul(a, b) => a.eval_with(var, div)? * b.eval_with(var, div)?,
            Expr::Div(a, b) => div(a.eval_with(var, div)?, b.eval_with(var, div)?)?,
            Expr::Pow(a, e) => {
                let base = a.eval_with(var, div)?;
                let mut acc = T::one();
                for _ in 0..*e {
                    acc = acc * base.clone();
                }
                acc
            }
        })
    }
}

/// Integer embedding used by [`Expr::eval_with`].
pub trait FromBigInt {
    fn from_bigint(c: &BigInt) -> Self;
}

impl<F: Field> FromBigInt for F {
    fn from_bigint(c: &BigInt) -> Self {
        F::from_rational(&num_rational::BigRational::from_integer(c.clone()))
            .expect("integers embed in every field used here")
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Var(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => {}
            '+' => tokens.push(Token::Plus),
            '-' | '\u{2212}' => tokens.push(Token::Minus),
            '*' | '\u{00b7}' => tokens.push(Token::Star),
            '/' => tokens.push(Token::Slash),
            '^' => tokens.push(Token::Caret),
            '(' => tokens.push(Token::LParen),
            ')' => tokens.push(Token::RParen),
            d if d.is_ascii_digit() => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                tokens.push(Token::Int(digits.parse().expect("digits")));
            }
            a if a.is_ascii_alphabetic() => tokens.push(Token::Var(a.to_string())),
            other => return Err(Error::Parse(format!("unexpected character {other:?} in {text:?}"))),
        }
        i += 1;
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Token::Int(_) | Token::Var(_) | Token::LParen) => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            match self.next() {
                Some(Token::Int(e)) => {
                    let e = u32::try_from(e).map_err(|_| Error::Parse("exponent too large".into()))?;
                    return Ok(Expr::Pow(Box::new(base), e));
                }
                other => return Err(Error::Parse(format!("expected integer exponent, found {other:?}"))),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.next() {
            Some(Token::Int(c)) => Ok(Expr::Int(c)),
            Some(Token::Var(v)) => Ok(Expr::Var(v)),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(inner),
                    other => Err(Error::Parse(format!("expected ')', found {other:?}"))),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Expr> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut parser = Parser { tokens, pos: 0 };
    let expr = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse(format!("trailing input in {text:?}")));
    }
    Ok(expr)
}
