//! Canonical text and JSON forms of [`Poly`].
//!
//! Text: terms in descending graded-lex order, e.g. `x^2 - 2*x*y + (1+2*i)*y - 3/2`.
//! JSON: `{"vars":[..],"terms":[{"exp":[..],"re":"p/q","im":"p/q"}]}`, same term order.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::poly::{Monomial, Poly, VarSet};
use super::scalar::{Rational, Scalar};

fn monomial_text(vars: &VarSet, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars.name(i).to_string()),
            _ => parts.push(format!("{}^{}", vars.name(i), e)),
        }
    }
    parts.join("*")
}

/// Splits a coefficient into a sign and a magnitude whose display has no
/// leading minus. Genuinely complex values carry no sign.
fn sign_split(c: &Scalar) -> (bool, Scalar) {
    let negative_real = c.is_real() && c.re().is_negative();
    let negative_imaginary = c.re().is_zero() && c.im().is_negative();
    if negative_real || negative_imaginary {
        (true, -c)
    } else {
        (false, c.clone())
    }
}

pub fn format_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (m, c)) in p.terms().rev().enumerate() {
        let (neg, mag) = sign_split(c);
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = monomial_text(p.vars(), m);
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}*{mono}"));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = s[start..i].parse().expect("digits");
            out.push((start, Tok::Int(n)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(s[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(Error::Parse { pos: i, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    vars: &'a VarSet,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.len)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.offset(), msg: msg.to_string() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = acc * self.factor()?;
            } else if self.eat('/') {
                let d = self.factor()?;
                let c = match d.degree() {
                    Some(0) => d.constant_term(),
                    _ => return self.err("division only by nonzero constants"),
                };
                acc = acc.scale(&c.inv()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        if self.eat('-') {
            return Ok(-self.factor()?);
        }
        if self.eat('+') {
            return self.factor();
        }
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| Error::Parse {
                        pos: self.offset(),
                        msg: "exponent too large".into(),
                    })?;
                    return Ok(base.pow(e));
                }
                _ => return self.err("expected integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Poly::constant(self.vars, Scalar::real(Rational::from_integer(n))))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if name == "i" {
                    Ok(Poly::constant(self.vars, Scalar::i()))
                } else {
                    Poly::var(self.vars, &name)
                }
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(inner)
            }
            _ => self.err("expected a number, variable or `(`"),
        }
    }
}

/// Parses a polynomial expression over `vars`. Accepts the canonical form
/// and ordinary hand-written expressions such as `2*(1 - tau)*Y`.
pub fn parse_poly(vars: &VarSet, s: &str) -> Result<Poly> {
    let toks = tokenize(s)?;
    let mut p = Parser { vars, toks, pos: 0, len: s.len() };
    if p.toks.is_empty() {
        return p.err("empty expression");
    }
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub re: String,
    pub im: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl From<&Poly> for PolyJson {
    fn from(p: &Poly) -> Self {
        PolyJson {
            vars: p.vars().names().to_vec(),
            terms: p
                .terms()
                .rev()
                .map(|(m, c)| TermJson {
                    exp: m.exps().to_vec(),
                    re: c.re().to_string(),
                    im: c.im().to_string(),
                })
                .collect(),
        }
    }
}

impl PolyJson {
    pub fn to_poly(&self) -> Result<Poly> {
        let vars = VarSet::new(&self.vars)?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if t.exp.len() != vars.len() {
                return Err(Error::DimensionMismatch(format!(
                    "exponent vector of length {} for {} variables",
                    t.exp.len(),
                    vars.len()
                )));
            }
            terms.push((Monomial::new(t.exp.clone()), Scalar::from_parts(&t.re, &t.im)?));
        }
        Ok(Poly::from_terms(&vars, terms))
    }
}

pub fn poly_to_json(p: &Poly) -> String {
    serde_json::to_string(&PolyJson::from(p)).expect("serializable")
}

pub fn poly_from_json(s: &str) -> Result<Poly> {
    let pj: PolyJson = serde_json::from_str(s).map_err(|e| Error::Parse {
        pos: e.column(),
        msg: e.to_string(),
    })?;
    pj.to_poly()
}
