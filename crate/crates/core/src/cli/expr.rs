//! The expression language of `ncsf expand`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := RATIONAL | '-' factor | BASIS '[' INT (',' INT)* ']' | '(' expr ')'
//! ```
//!
//! `RATIONAL` is `INT` or `INT/INT`; `BASIS` is one of `S R L Psi T U`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{expand_in_basis, BasisId, Element};
use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::format;
use crate::limits;
use crate::quotients::{t_product, u_product, Quotient};

pub const MAX_INPUT: usize = 64 * 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AtomBasis {
    Ambient(BasisId),
    Quotient(Quotient),
}

impl AtomBasis {
    pub fn name(self) -> &'static str {
        match self {
            AtomBasis::Ambient(b) => b.name(),
            AtomBasis::Quotient(q) => q.name(),
        }
    }

    fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "S" => AtomBasis::Ambient(BasisId::Sproduct),
            "R" => AtomBasis::Ambient(BasisId::R),
            "L" => AtomBasis::Ambient(BasisId::L),
            "Psi" => AtomBasis::Ambient(BasisId::PsiMonomial),
            "T" => AtomBasis::Quotient(Quotient::T),
            "U" => AtomBasis::Quotient(Quotient::U),
            _ => return None,
        })
    }
}

impl std::str::FromStr for AtomBasis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        AtomBasis::from_name(s).ok_or_else(|| Error::UnsupportedBasis(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Number(BigRational),
    Atom(AtomBasis, Composition),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
}

impl fmt::Display for Expr {
    /// Fully parenthesized, so that printing and reparsing gives the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Number(q) => f.write_str(&format::rational(q)),
            Expr::Atom(b, c) => write!(f, "{}{}", b.name(), c),
            Expr::Neg(e) => write!(f, "-({e})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Punct(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
                column += 1;
            }
            Tok::Int(s.parse().unwrap())
        } else if c.is_ascii_alphabetic() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_alphanumeric()) {
                s.push(d);
                chars.next();
                column += 1;
            }
            Tok::Name(s)
        } else if "+-*/()[],".contains(c) {
            chars.next();
            column += 1;
            Tok::Punct(c)
        } else {
            return Err(Error::Syntax {
                line: l,
                column: col,
                message: format!("unexpected character {c:?}"),
            });
        };
        out.push(Token {
            tok,
            line: l,
            column: col,
        });
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, token: &Token, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            line: token.line,
            column: token.column,
            message: message.into(),
        })
    }

    fn describe(t: &Tok) -> String {
        match t {
            Tok::Int(n) => format!("number {n}"),
            Tok::Name(s) => format!("name {s:?}"),
            Tok::Punct(c) => format!("{c:?}"),
            Tok::End => "end of input".to_string(),
        }
    }

    fn expect(&mut self, c: char) -> Result<Token> {
        let t = self.bump();
        if t.tok == Tok::Punct(c) {
            Ok(t)
        } else {
            self.error(
                &t,
                format!("expected {c:?}, found {}", Self::describe(&t.tok)),
            )
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut left = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Punct('+') => {
                    self.bump();
                    left = Expr::Add(Box::new(left), Box::new(self.term()?));
                }
                Tok::Punct('-') => {
                    self.bump();
                    left = Expr::Sub(Box::new(left), Box::new(self.term()?));
                }
                _ => return Ok(left),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut left = self.factor()?;
        while self.peek().tok == Tok::Punct('*') {
            self.bump();
            left = Expr::Mul(Box::new(left), Box::new(self.factor()?));
        }
        Ok(left)
    }

    fn factor(&mut self) -> Result<Expr> {
        let t = self.bump();
        match t.tok.clone() {
            Tok::Int(n) => {
                if self.peek().tok != Tok::Punct('/') {
                    return Ok(Expr::Number(BigRational::from_integer(n)));
                }
                self.bump();
                let d = self.bump();
                match &d.tok {
                    Tok::Int(d_val) if !d_val.is_zero() => {
                        Ok(Expr::Number(BigRational::new(n, d_val.clone())))
                    }
                    Tok::Int(_) => self.error(&d, "zero denominator"),
                    other => self.error(
                        &d,
                        format!("expected denominator, found {}", Self::describe(other)),
                    ),
                }
            }
            Tok::Punct('-') => Ok(Expr::Neg(Box::new(self.factor()?))),
            Tok::Punct('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Name(name) => {
                let basis = match AtomBasis::from_name(&name) {
                    Some(b) => b,
                    None => return self.error(&t, format!("unknown basis {name:?}")),
                };
                self.expect('[')?;
                let mut parts = Vec::new();
                loop {
                    let p = self.bump();
                    match &p.tok {
                        Tok::Int(n) => {
                            if n.is_zero() {
                                return Err(Error::Semantic(format!(
                                    "line {}, column {}: composition parts must be positive",
                                    p.line, p.column
                                )));
                            }
                            match usize::try_from(n) {
                                Ok(v) => parts.push(v),
                                Err(_) => return self.error(&p, "part too large"),
                            }
                        }
                        other => {
                            return self.error(
                                &p,
                                format!("expected a part, found {}", Self::describe(other)),
                            );
                        }
                    }
                    let sep = self.bump();
                    match &sep.tok {
                        Tok::Punct(',') => continue,
                        Tok::Punct(']') => break,
                        other => {
                            return self.error(
                                &sep,
                                format!("expected ',' or ']', found {}", Self::describe(other)),
                            );
                        }
                    }
                }
                Ok(Expr::Atom(basis, Composition::new(parts)?))
            }
            other => self.error(&t, format!("unexpected {}", Self::describe(&other))),
        }
    }
}

/// Which algebra an expression lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    /// Only numbers.
    Scalar,
    Ambient,
    Quotient(Quotient),
}

fn join(a: Kind, b: Kind) -> Result<Kind> {
    match (a, b) {
        (Kind::Scalar, k) | (k, Kind::Scalar) => Ok(k),
        (x, y) if x == y => Ok(x),
        (Kind::Quotient(p), Kind::Quotient(q)) => Err(Error::Semantic(format!(
            "{} and {} atoms live in different quotients and cannot be mixed",
            p.name(),
            q.name()
        ))),
        _ => Err(Error::Semantic(
            "T/U atoms live in quotient algebras and cannot be mixed with S, R, L or Psi atoms"
                .to_string(),
        )),
    }
}

impl Expr {
    pub fn kind(&self) -> Result<Kind> {
        match self {
            Expr::Number(_) => Ok(Kind::Scalar),
            Expr::Atom(AtomBasis::Ambient(_), _) => Ok(Kind::Ambient),
            Expr::Atom(AtomBasis::Quotient(q), _) => Ok(Kind::Quotient(*q)),
            Expr::Neg(e) => e.kind(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => join(a.kind()?, b.kind()?),
        }
    }
}

/// Parses and type-checks an expression.
pub fn parse(text: &str) -> Result<Expr> {
    if text.len() > MAX_INPUT {
        return Err(Error::Semantic(format!(
            "expression is {} bytes, the limit is {MAX_INPUT}",
            text.len()
        )));
    }
    let mut p = Parser {
        tokens: tokenize(text)?,
        pos: 0,
    };
    let e = p.expr()?;
    let t = p.peek().clone();
    if t.tok != Tok::End {
        return p.error(&t, format!("unexpected {}", Parser::describe(&t.tok)));
    }
    e.kind()?;
    Ok(e)
}

type Coords = BTreeMap<Composition, BigRational>;

fn max_degree(c: &Coords) -> usize {
    c.keys().map(Composition::weight).max().unwrap_or(0)
}

fn combine(a: &Coords, b: &Coords, sign: i32) -> Coords {
    let mut out = a.clone();
    for (k, v) in b {
        let e = out.entry(k.clone()).or_insert_with(BigRational::zero);
        if sign > 0 {
            *e += v;
        } else {
            *e -= v;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn eval_quotient(e: &Expr, q: Quotient) -> Result<Coords> {
    Ok(match e {
        Expr::Number(x) => [(Composition::empty(), x.clone())]
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .collect(),
        Expr::Atom(_, c) => {
            limits::check(c.weight())?;
            [(c.clone(), BigRational::one())].into_iter().collect()
        }
        Expr::Neg(a) => eval_quotient(a, q)?
            .into_iter()
            .map(|(k, v)| (k, -v))
            .collect(),
        Expr::Add(a, b) => combine(&eval_quotient(a, q)?, &eval_quotient(b, q)?, 1),
        Expr::Sub(a, b) => combine(&eval_quotient(a, q)?, &eval_quotient(b, q)?, -1),
        Expr::Mul(a, b) => {
            let (x, y) = (eval_quotient(a, q)?, eval_quotient(b, q)?);
            limits::check(max_degree(&x) + max_degree(&y))?;
            let mut out = Coords::new();
            for (i, ci) in &x {
                for (j, cj) in &y {
                    let coeff = ci * cj;
                    let product = match (i.is_empty(), j.is_empty()) {
                        (true, _) => [(j.clone(), 1u64)].into_iter().collect(),
                        (_, true) => [(i.clone(), 1u64)].into_iter().collect(),
                        _ => match q {
                            Quotient::T => t_product(i, j)?.terms,
                            Quotient::U => u_product(i, j)?.terms,
                        },
                    };
                    for (k, c) in product {
                        *out.entry(k).or_insert_with(BigRational::zero) +=
                            &coeff * BigRational::from_integer(c.into());
                    }
                }
            }
            out.retain(|_, v| !v.is_zero());
            out
        }
    })
}

fn eval_ambient(e: &Expr) -> Result<Element> {
    Ok(match e {
        Expr::Number(x) => Element::scalar(x.clone()),
        Expr::Atom(AtomBasis::Ambient(b), c) => {
            limits::check(c.weight())?;
            b.element(c)
        }
        Expr::Atom(AtomBasis::Quotient(_), _) => unreachable!("rejected by the kind check"),
        Expr::Neg(a) => -&eval_ambient(a)?,
        Expr::Add(a, b) => &eval_ambient(a)? + &eval_ambient(b)?,
        Expr::Sub(a, b) => &eval_ambient(a)? - &eval_ambient(b)?,
        Expr::Mul(a, b) => {
            let (x, y) = (eval_ambient(a)?, eval_ambient(b)?);
            let dx = x.degrees().into_iter().max().unwrap_or(0);
            let dy = y.degrees().into_iter().max().unwrap_or(0);
            limits::check(dx + dy)?;
            x.multiply(&y)
        }
    })
}

/// Target of an expansion: one of the ambient bases or a quotient basis.
pub type Target = AtomBasis;

/// An evaluated expression: exact coordinates in the target basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub target: Target,
    pub coordinates: Coords,
}

#[derive(Serialize)]
struct TermRecord {
    composition: Vec<usize>,
    coefficient: String,
}

#[derive(Serialize)]
struct ExpansionRecord<'a> {
    basis: &'a str,
    terms: Vec<TermRecord>,
    text: String,
}

impl Expansion {
    /// Terms in descending lexicographic order of their compositions.
    pub fn to_text(&self) -> String {
        format::linear_combination(
            self.target.name(),
            self.coordinates.iter().rev().map(|(k, v)| (k, v.clone())),
        )
    }

    pub fn to_json(&self) -> String {
        let record = ExpansionRecord {
            basis: self.target.name(),
            terms: self
                .coordinates
                .iter()
                .rev()
                .map(|(k, v)| TermRecord {
                    composition: k.parts().to_vec(),
                    coefficient: format::rational(v),
                })
                .collect(),
            text: self.to_text(),
        };
        serde_json::to_string_pretty(&record).expect("expansion records serialize")
    }
}

/// Evaluates `e` exactly and expands it in `target`. Ambient expressions are
/// split into homogeneous components, each expanded separately.
pub fn evaluate(e: &Expr, target: Target) -> Result<Expansion> {
    let coordinates = match (e.kind()?, target) {
        (Kind::Quotient(q), AtomBasis::Quotient(t)) if q == t => eval_quotient(e, q)?,
        (Kind::Scalar, AtomBasis::Quotient(t)) => eval_quotient(e, t)?,
        (Kind::Ambient | Kind::Scalar, AtomBasis::Ambient(b)) => {
            let x = eval_ambient(e)?;
            let mut out = Coords::new();
            for d in x.degrees() {
                out.extend(expand_in_basis(&x.homogeneous_component(d), b)?);
            }
            out.retain(|_, v| !v.is_zero());
            out
        }
        (Kind::Ambient, AtomBasis::Quotient(q)) => {
            return Err(Error::Semantic(format!(
                "an expression in S, R, L, Psi cannot be expanded in the quotient basis {}",
                q.name()
            )))
        }
        (Kind::Quotient(q), t) => {
            return Err(Error::Semantic(format!(
                "a {} expression can only be expanded in {}, not {}",
                q.name(),
                q.name(),
                t.name()
            )))
        }
    };
    Ok(Expansion {
        target,
        coordinates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::comp;

    fn eval(text: &str, target: &str) -> String {
        evaluate(&parse(text).unwrap(), target.parse().unwrap())
            .unwrap()
            .to_text()
    }

    #[test]
    fn atoms() {
        assert_eq!(
            parse("R[2,1]").unwrap(),
            Expr::Atom(AtomBasis::Ambient(BasisId::R), comp(&[2, 1]))
        );
        assert_eq!(
            parse(" Psi [ 3 ] ").unwrap(),
            Expr::Atom(AtomBasis::Ambient(BasisId::PsiMonomial), comp(&[3]))
        );
    }

    #[test]
    fn scaled_sum() {
        let e = parse("2*L[2,2] + L[1,3]").unwrap();
        let two = Expr::Number(BigRational::from_integer(2.into()));
        let l22 = Expr::Atom(AtomBasis::Ambient(BasisId::L), comp(&[2, 2]));
        let l13 = Expr::Atom(AtomBasis::Ambient(BasisId::L), comp(&[1, 3]));
        assert_eq!(
            e,
            Expr::Add(
                Box::new(Expr::Mul(Box::new(two), Box::new(l22))),
                Box::new(l13)
            )
        );
    }

    #[test]
    fn syntax_error_positions() {
        match parse("R[2,1)*") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (1, 6)),
            other => panic!("{other:?}"),
        }
        match parse("R[1]\n  + Q[2]") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 5)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse("R[1] +"),
            Err(Error::Syntax { column: 7, .. })
        ));
        assert!(matches!(parse("1/0"), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse("R[1] $"),
            Err(Error::Syntax { column: 6, .. })
        ));
    }

    #[test]
    fn semantic_errors() {
        assert!(matches!(parse("T[1] + R[1]"), Err(Error::Semantic(_))));
        assert!(matches!(parse("T[1] * U[1]"), Err(Error::Semantic(_))));
        assert!(matches!(parse("R[2,0]"), Err(Error::Semantic(_))));
        let big = "1+".repeat(MAX_INPUT / 2) + "1";
        assert!(matches!(parse(&big), Err(Error::Semantic(_))));
    }

    #[test]
    fn expansions() {
        assert_eq!(eval("R[2,2]", "L"), "2*L[3,1] + 2*L[2,2] + 1*L[2,1,1]");
        assert_eq!(eval("R[1,1]", "Psi"), "1*Psi[1,1]");
        assert_eq!(eval("T[1]*T[1]", "T"), "1*T[2] + 1*T[1,1]");
        assert_eq!(eval("R[2,1]", "Psi"), "2*Psi[2,1] + 2*Psi[1,1,1]");
        assert_eq!(eval("L[1]*L[1]", "R"), "1*R[2] + 1*R[1,1]");
        assert_eq!(eval("S[1]*S[1] - S[1,1]", "L"), "0");
        assert_eq!(eval("3/2 + R[1]", "S"), "1*S[1] + 3/2");
        assert_eq!(eval("-(2*U[1])*U[1]", "U"), "-2*U[2] - 4*U[1,1]");
    }

    #[test]
    fn incompatible_targets() {
        let e = parse("R[1]").unwrap();
        assert!(matches!(
            evaluate(&e, AtomBasis::Quotient(Quotient::T)),
            Err(Error::Semantic(_))
        ));
        let e = parse("T[1]").unwrap();
        assert!(matches!(
            evaluate(&e, AtomBasis::Ambient(BasisId::L)),
            Err(Error::Semantic(_))
        ));
        assert!(matches!(
            evaluate(&e, AtomBasis::Quotient(Quotient::U)),
            Err(Error::Semantic(_))
        ));
    }

    #[test]
    fn degree_cap() {
        let e = parse("R[5]*R[5]").unwrap();
        assert!(matches!(
            evaluate(&e, AtomBasis::Ambient(BasisId::L)),
            Err(Error::ResourceLimit { .. })
        ));
    }
}
