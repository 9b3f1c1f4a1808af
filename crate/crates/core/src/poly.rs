//! Sparse multivariate polynomials over a prime field.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldScalar, PrimeField};
use crate::monomial::{Monomial, MonomialOrder};

/// The ambient polynomial ring `F_p[x_0, ..., x_{v-1}]` with a fixed order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    names: Vec<String>,
    field: PrimeField,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(names: Vec<String>, field: PrimeField, order: MonomialOrder) -> Result<Self> {
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        Ok(PolyRing { names, field, order })
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Same variables, different order.
    pub fn with_order(&self, order: MonomialOrder) -> PolyRing {
        PolyRing {
            names: self.names.clone(),
            field: self.field,
            order,
        }
    }

    /// Ring with one fresh variable in front, ordered to eliminate it.
    pub(crate) fn with_elimination_var(&self) -> PolyRing {
        let mut fresh = String::from("_t");
        while self.names.contains(&fresh) {
            fresh.push('_');
        }
        let mut names = vec![fresh];
        names.extend(self.names.iter().cloned());
        PolyRing {
            names,
            field: self.field,
            order: MonomialOrder::Elimination(1),
        }
    }
}

pub(crate) type Term = (Monomial, u32);

/// A polynomial with terms sorted strictly descending under the ring order and
/// no stored zero coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: i64) -> Self {
        let c = ring.field.from_i64(c);
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, 1)
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), i), 1)
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: u32) -> Self {
        let terms = if c == 0 { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub(crate) fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<Term>) -> Self {
        let ord = ring.order;
        let field = ring.field;
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = field.add(last.1, c),
                _ => {
                    if let Some(last) = out.last() {
                        if last.1 == 0 {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        out.retain(|t| t.1 != 0);
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Terms already sorted descending with nonzero coefficients.
    pub(crate) fn from_sorted(ring: &Arc<PolyRing>, terms: Vec<Term>) -> Self {
        debug_assert!(terms.iter().all(|t| t.1 != 0));
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn from_coefficients(ring: &Arc<PolyRing>, terms: &[(i64, &[u32])]) -> Self {
        let t = terms
            .iter()
            .map(|(c, e)| (Monomial::from_exponents(e), ring.field.from_i64(*c)))
            .collect();
        Self::from_terms(ring, t)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub(crate) fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Terms as (coefficient, monomial) pairs in descending order.
    pub fn iter(&self) -> impl Iterator<Item = (FieldScalar, &Monomial)> + '_ {
        let f = self.ring.field;
        self.terms.iter().map(move |(m, c)| (f.scalar(*c as i64), m))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_one())
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub(crate) fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub(crate) fn lc(&self) -> u32 {
        self.terms[0].1
    }

    pub fn leading_coefficient(&self) -> Option<FieldScalar> {
        self.terms.first().map(|t| self.ring.field.scalar(t.1 as i64))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => {
                let d = t.0.degree();
                self.terms.iter().all(|u| u.0.degree() == d)
            }
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn add_unchecked(&self, other: &Polynomial) -> Polynomial {
        let one = Monomial::one(self.ring.nvars());
        let neg_one = self.ring.field.neg(1);
        Polynomial {
            ring: self.ring.clone(),
            terms: sub_scaled(&self.ring, &self.terms, neg_one, &one, &other.terms),
        }
    }

    pub(crate) fn sub_unchecked(&self, other: &Polynomial) -> Polynomial {
        let one = Monomial::one(self.ring.nvars());
        Polynomial {
            ring: self.ring.clone(),
            terms: sub_scaled(&self.ring, &self.terms, 1, &one, &other.terms),
        }
    }

    pub(crate) fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc: Vec<Term> = Vec::new();
        let neg = |c: u32| self.ring.field.neg(c);
        for (m, c) in &small.terms {
            // acc - (-c) * m * big
            acc = sub_scaled(&self.ring, &acc, neg(*c), m, &big.terms);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: acc,
        }
    }

    pub fn neg(&self) -> Polynomial {
        let f = self.ring.field;
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), f.neg(*c))).collect(),
        }
    }

    pub fn scale(&self, c: FieldScalar) -> Polynomial {
        self.scale_raw(self.ring.field.from_i64(c.value() as i64))
    }

    pub(crate) fn scale_raw(&self, c: u32) -> Polynomial {
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        let f = self.ring.field;
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), f.mul(*a, c))).collect(),
        }
    }

    pub(crate) fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), *c)).collect(),
        }
    }

    /// Scales so that the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(&(_, 1)) => self.clone(),
            Some(&(_, c)) => self.scale_raw(self.ring.field.inv(c).expect("nonzero lc")),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..k {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Embeds into a ring with `shift` extra leading variables.
    pub(crate) fn embed(&self, target: &Arc<PolyRing>, shift: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; shift];
                e.extend_from_slice(m.exponents());
                (Monomial::from_exponents(&e), *c)
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Drops `shift` leading variables, which must not occur.
    pub(crate) fn project(&self, target: &Arc<PolyRing>, shift: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                debug_assert!(m.exponents()[..shift].iter().all(|&e| e == 0));
                (Monomial::from_exponents(&m.exponents()[shift..]), *c)
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    pub(crate) fn involves_first(&self, k: usize) -> bool {
        self.terms
            .iter()
            .any(|(m, _)| m.exponents()[..k].iter().any(|&e| e > 0))
    }
}

/// `f - c * m * g` by a single merge of two descending term lists.
pub(crate) fn sub_scaled(ring: &PolyRing, f: &[Term], c: u32, m: &Monomial, g: &[Term]) -> Vec<Term> {
    let field = ring.field;
    let ord = ring.order;
    let mut out = Vec::with_capacity(f.len() + g.len());
    let mut i = 0;
    let mut gi = g.iter().map(|(gm, gc)| (gm.mul(m), field.mul(*gc, c))).peekable();
    while i < f.len() {
        match gi.peek() {
            None => break,
            Some((gm, gc)) => match ord.cmp(&f[i].0, gm) {
                Ordering::Greater => {
                    out.push(f[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((gm.clone(), field.neg(*gc)));
                    gi.next();
                }
                Ordering::Equal => {
                    let v = field.sub(f[i].1, *gc);
                    if v != 0 {
                        out.push((f[i].0.clone(), v));
                    }
                    i += 1;
                    gi.next();
                }
            },
        }
    }
    out.extend_from_slice(&f[i..]);
    for (gm, gc) in gi {
        out.push((gm, field.neg(gc)));
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field;
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let c = field.to_signed(*c);
            let mag = c.unsigned_abs();
            if k == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if mag != 1 || m.is_one() {
                parts.push(mag.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(self.ring.names[i].clone()),
                    _ => parts.push(format!("{}^{}", self.ring.names[i], e)),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}
