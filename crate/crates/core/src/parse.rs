//! Text format for rings, polynomials, and named ideals.
//!
//! A document is a sequence of `;`-terminated statements:
//!
//! ```text
//! char 32003;
//! vars x, y, z, w;
//! rel x*z, x*w, y*z, y*w;
//! ideal q = x + z, y + w;
//! ```
//!
//! `char` is optional (a caller-supplied default applies), `rel` may list no
//! polynomials, and `ideal` may repeat. `#` starts a comment running to the end
//! of the line.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{PrimeField, DEFAULT_CHARACTERISTIC};
use crate::groebner::RingPresentation;
use crate::monomial::MonomialOrder;
use crate::poly::{PolyRing, Polynomial};

const MAX_EXPONENT: u64 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(String),
    Ident(String),
    Sym(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut column = 1;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
        } else if c.is_whitespace() {
            chars.next();
            column += 1;
        } else if c == '#' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                chars.next();
            }
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                s.push(d);
                chars.next();
                column += 1;
            }
            out.push(Token {
                tok: Tok::Int(s),
                line: l,
                column: col,
            });
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !(d.is_alphanumeric() || d == '_') {
                    break;
                }
                s.push(d);
                chars.next();
                column += 1;
            }
            out.push(Token {
                tok: Tok::Ident(s),
                line: l,
                column: col,
            });
        } else if "+-*^(),;=".contains(c) {
            chars.next();
            column += 1;
            out.push(Token {
                tok: Tok::Sym(c),
                line: l,
                column: col,
            });
        } else {
            return Err(Error::Syntax {
                line: l,
                column: col,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Token],
    pos: usize,
    end: (usize, usize),
}

impl<'a> Parser<'a> {
    fn new(toks: &'a [Token], text: &str) -> Self {
        let line = text.lines().count().max(1);
        let column = text.lines().last().map(|l| l.chars().count() + 1).unwrap_or(1);
        Parser {
            toks,
            pos: 0,
            end: (line, column),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks.get(self.pos).map(|t| (t.line, t.column)).unwrap_or(self.end)
    }

    fn err(&self, message: impl Into<String>) -> Error {
        let (line, column) = self.here();
        Error::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.tok.clone());
        self.pos += 1;
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{c}`")))
        }
    }

    fn ident(&mut self) -> Result<String> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.err("expected identifier")),
        }
    }

    fn integer(&mut self) -> Result<u64> {
        match self.peek() {
            Some(Tok::Int(s)) => {
                let v = s.parse::<u64>().map_err(|_| self.err("integer too large"))?;
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.err("expected integer")),
        }
    }

    // expr := ['-'|'+'] term (('+'|'-') term)*
    fn expr(&mut self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        let mut acc = if self.eat('-') {
            self.term(ring)?.neg()
        } else {
            self.eat('+');
            self.term(ring)?
        };
        loop {
            if self.eat('+') {
                acc = acc.add_unchecked(&self.term(ring)?);
            } else if self.eat('-') {
                acc = acc.sub_unchecked(&self.term(ring)?);
            } else {
                return Ok(acc);
            }
        }
    }

    // term := factor ('*' factor)*
    fn term(&mut self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        let mut acc = self.factor(ring)?;
        while self.eat('*') {
            acc = acc.mul_unchecked(&self.factor(ring)?);
        }
        Ok(acc)
    }

    // factor := atom ['^' int]
    fn factor(&mut self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        let base = self.atom(ring)?;
        if self.eat('^') {
            let (line, column) = self.here();
            if self.peek() == Some(&Tok::Sym('-')) {
                return Err(Error::NegativeExponent { line, column });
            }
            let k = self.integer()?;
            if k > MAX_EXPONENT {
                return Err(Error::Syntax {
                    line,
                    column,
                    message: format!("exponent {k} exceeds {MAX_EXPONENT}"),
                });
            }
            return Ok(power(&base, k as u32));
        }
        Ok(base)
    }

    fn atom(&mut self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        let (line, column) = self.here();
        match self.next() {
            Some(Tok::Int(s)) => {
                let p = ring.field().characteristic() as u64;
                let v = s.bytes().fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p);
                Ok(Polynomial::constant(ring, v as i64))
            }
            Some(Tok::Ident(name)) => match ring.var_index(&name) {
                Some(i) => Ok(Polynomial::var(ring, i)),
                None => Err(Error::UnknownVariable { name, line, column }),
            },
            Some(Tok::Sym('(')) => {
                let e = self.expr(ring)?;
                self.expect(')')?;
                Ok(e)
            }
            _ => {
                self.pos -= 1;
                Err(self.err("expected a coefficient, variable or `(`"))
            }
        }
    }

    fn poly_list(&mut self, ring: &Arc<PolyRing>) -> Result<Vec<Polynomial>> {
        let mut out = Vec::new();
        if self.peek() == Some(&Tok::Sym(';')) || self.peek().is_none() {
            return Ok(out);
        }
        loop {
            out.push(self.expr(ring)?);
            if !self.eat(',') {
                return Ok(out);
            }
        }
    }
}

fn power(base: &Polynomial, k: u32) -> Polynomial {
    // monomials are common; avoid repeated multiplication for them
    if base.num_terms() == 1 {
        let (c, m) = base.iter().next().expect("one term");
        let f = base.ring().field();
        return Polynomial::monomial(base.ring(), m.pow(k), f.pow(c.value(), k as u64));
    }
    base.pow(k)
}

/// Parses a polynomial in the given ring.
pub fn parse_poly(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial> {
    let toks = tokenize(text)?;
    let mut p = Parser::new(&toks, text);
    let f = p.expr(ring)?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(f)
}

/// Parses a comma-separated list of polynomials.
pub fn parse_poly_list(text: &str, ring: &Arc<PolyRing>) -> Result<Vec<Polynomial>> {
    let toks = tokenize(text)?;
    let mut p = Parser::new(&toks, text);
    let fs = p.poly_list(ring)?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(fs)
}

/// How the characteristic of a document is chosen.
#[derive(Clone, Copy, Debug, Default)]
pub struct CharacteristicChoice {
    /// Wins over everything, including a `char` statement.
    pub force: Option<u64>,
    /// Used when the document has no `char` statement.
    pub fallback: Option<u64>,
}

/// A parsed ring document: the presentation plus its named ideals.
#[derive(Clone, Debug)]
pub struct RingDocument {
    pub ring: Arc<RingPresentation>,
    pub ideals: Vec<(String, Vec<Polynomial>)>,
}

impl RingDocument {
    pub fn ideal(&self, name: &str) -> Option<&[Polynomial]> {
        self.ideals.iter().find(|(n, _)| n == name).map(|(_, g)| g.as_slice())
    }

    /// Canonical text form; parsing it gives back an equal document.
    pub fn to_text(&self) -> String {
        let ring = self.ring.poly_ring();
        let mut s = format!(
            "char {};\nvars {};\n",
            ring.field().characteristic(),
            ring.names().join(", ")
        );
        let rels: Vec<String> = self.ring.relations().iter().map(|f| f.to_string()).collect();
        s.push_str(&format!("rel {};\n", rels.join(", ")));
        for (name, gens) in &self.ideals {
            let g: Vec<String> = gens.iter().map(|f| f.to_string()).collect();
            s.push_str(&format!("ideal {} = {};\n", name, g.join(", ")));
        }
        s
    }
}

/// Parses a ring document, using the default characteristic if absent.
pub fn parse_ring(text: &str) -> Result<RingPresentation> {
    let doc = parse_document(text, CharacteristicChoice::default())?;
    Ok(Arc::try_unwrap(doc.ring).unwrap_or_else(|a| (*a).clone()))
}

pub fn parse_document(text: &str, choice: CharacteristicChoice) -> Result<RingDocument> {
    let toks = tokenize(text)?;
    let mut p = Parser::new(&toks, text);
    let mut declared_char: Option<u64> = None;
    let mut ring: Option<Arc<PolyRing>> = None;
    let mut relations: Vec<Polynomial> = Vec::new();
    let mut ideals: Vec<(String, Vec<Polynomial>)> = Vec::new();

    while p.peek().is_some() {
        let kw = p.ident()?;
        match kw.as_str() {
            "char" => {
                if declared_char.is_some() || ring.is_some() {
                    p.pos -= 1;
                    return Err(p.err("`char` must appear once, before `vars`"));
                }
                declared_char = Some(p.integer()?);
            }
            "vars" => {
                if ring.is_some() {
                    p.pos -= 1;
                    return Err(p.err("`vars` declared twice"));
                }
                let mut names = vec![p.ident()?];
                while p.eat(',') {
                    names.push(p.ident()?);
                }
                let chr = choice
                    .force
                    .or(declared_char)
                    .or(choice.fallback)
                    .unwrap_or(DEFAULT_CHARACTERISTIC);
                let field = PrimeField::new(chr)?;
                ring = Some(Arc::new(PolyRing::new(names, field, MonomialOrder::DegRevLex)?));
            }
            "rel" => {
                let r = ring.as_ref().ok_or_else(|| p.err("`rel` before `vars`"))?;
                relations.extend(p.poly_list(r)?);
            }
            "ideal" => {
                let r = ring.as_ref().ok_or_else(|| p.err("`ideal` before `vars`"))?;
                let name = p.ident()?;
                if name == "m" || ideals.iter().any(|(n, _)| *n == name) {
                    return Err(Error::BadIdealName(name));
                }
                p.expect('=')?;
                let gens = p.poly_list(r)?;
                ideals.push((name, gens));
            }
            other => {
                p.pos -= 1;
                return Err(p.err(format!("unknown statement `{other}`")));
            }
        }
        p.expect(';')?;
    }
    if let (Some(c), None) = (declared_char, &ring) {
        PrimeField::new(c)?;
    }
    let ring = ring.ok_or_else(|| p.err("missing `vars` statement"))?;
    let relations = relations.into_iter().filter(|f| !f.is_zero()).collect();
    Ok(RingDocument {
        ring: Arc::new(RingPresentation::new(ring, relations)),
        ideals,
    })
}
