//! Buchberger's algorithm with the normal selection strategy and the
//! Gebauer–Möller installation of the coprime and chain criteria.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{same_ring, sub_scaled, PolyRing, Polynomial, Term};

/// Default cap on the number of S-pairs reduced in one computation.
pub const DEFAULT_PAIR_BUDGET: usize = 200_000;

/// A reduced Gröbner basis, monic and sorted by ascending leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    polys: Vec<Polynomial>,
}

fn divmask(m: &Monomial) -> u64 {
    m.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0u64, |acc, (i, _)| acc | (1 << (i % 64)))
}

/// Lookup structure for "which divisor's leading monomial divides m".
struct Reducer<'a> {
    entries: Vec<(u64, &'a Polynomial)>,
}

impl<'a> Reducer<'a> {
    fn new(polys: impl IntoIterator<Item = &'a Polynomial>) -> Self {
        Reducer {
            entries: polys.into_iter().map(|p| (divmask(p.lm()), p)).collect(),
        }
    }

    fn find(&self, m: &Monomial) -> Option<&'a Polynomial> {
        let mask = divmask(m);
        self.entries
            .iter()
            .find(|(gm, g)| gm & !mask == 0 && g.lm().divides(m))
            .map(|(_, g)| *g)
    }
}

/// Complete reduction: the remainder has no term divisible by a leading
/// monomial of the divisors. Divisors must be monic.
fn reduce_terms(ring: &PolyRing, mut p: Vec<Term>, red: &Reducer<'_>) -> Vec<Term> {
    let mut rem: Vec<Term> = Vec::new();
    let mut start = 0;
    while start < p.len() {
        let (m, c) = (&p[start].0, p[start].1);
        match red.find(m) {
            Some(g) => {
                let shift = m.div(g.lm());
                p = sub_scaled(ring, &p[start..], c, &shift, g.terms());
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    rem
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Builder {
    ring: Arc<PolyRing>,
    basis: Vec<Polynomial>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Builder {
    fn reduce(&self, p: Vec<Term>) -> Vec<Term> {
        let red = Reducer::new(self.basis.iter().zip(&self.active).filter(|(_, &a)| a).map(|(p, _)| p));
        reduce_terms(&self.ring, p, &red)
    }

    fn insert(&mut self, h: Polynomial) {
        let h_idx = self.basis.len();
        let lm_h = h.lm().clone();
        let mut cands: Vec<(usize, Monomial)> = (0..h_idx)
            .filter(|&g| self.active[g])
            .map(|g| (g, lm_h.lcm(self.basis[g].lm())))
            .collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        while let Some((g1, l1)) = cands.pop() {
            let coprime = lm_h.is_coprime(self.basis[g1].lm());
            let dominated = cands.iter().chain(kept.iter()).any(|(_, l2)| l2.divides(&l1));
            if coprime || !dominated {
                kept.push((g1, l1));
            }
        }
        let basis = &self.basis;
        self.pairs.retain(|p| {
            !(lm_h.divides(&p.lcm) && lm_h.lcm(basis[p.i].lm()) != p.lcm && lm_h.lcm(basis[p.j].lm()) != p.lcm)
        });
        for (g, l) in kept {
            if !lm_h.is_coprime(self.basis[g].lm()) {
                self.pairs.push(Pair { i: g, j: h_idx, lcm: l });
            }
        }
        for g in 0..h_idx {
            if self.active[g] && lm_h.divides(self.basis[g].lm()) {
                self.active[g] = false;
            }
        }
        self.basis.push(h);
        self.active.push(true);
        let ord = self.ring.order();
        // normal strategy: smallest lcm last, so it pops first
        self.pairs.sort_by(|a, b| {
            b.lcm
                .degree()
                .cmp(&a.lcm.degree())
                .then_with(|| ord.cmp(&b.lcm, &a.lcm))
        });
    }

    fn spoly(&self, pair: &Pair) -> Vec<Term> {
        let f = &self.basis[pair.i];
        let g = &self.basis[pair.j];
        let fm = f.mul_monomial(&pair.lcm.div(f.lm()));
        sub_scaled(&self.ring, fm.terms(), 1, &pair.lcm.div(g.lm()), g.terms())
    }
}

impl GroebnerBasis {
    /// Computes the reduced Gröbner basis of the ideal generated by `gens`.
    ///
    /// Fails with [`Error::Budget`] once more than `pair_budget` S-pairs have
    /// been reduced.
    pub fn compute(ring: &Arc<PolyRing>, gens: &[Polynomial], pair_budget: usize) -> Result<Self> {
        if gens.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        let mut input: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
        if input.iter().any(|g| g.is_constant()) {
            return Ok(GroebnerBasis {
                ring: ring.clone(),
                polys: vec![Polynomial::one(ring)],
            });
        }
        let ord = ring.order();
        input.sort_by(|a, b| ord.cmp(a.lm(), b.lm()));
        let mut b = Builder {
            ring: ring.clone(),
            basis: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
        };
        for g in input {
            let r = b.reduce(g.terms().to_vec());
            if !r.is_empty() {
                b.insert(Polynomial::from_sorted(ring, r).monic());
            }
        }
        let mut processed = 0usize;
        while let Some(pair) = b.pairs.pop() {
            processed += 1;
            if processed > pair_budget {
                return Err(Error::Budget(format!(
                    "more than {pair_budget} S-pairs in one Gröbner basis"
                )));
            }
            let s = b.spoly(&pair);
            let r = b.reduce(s);
            if !r.is_empty() {
                let h = Polynomial::from_sorted(ring, r).monic();
                if h.is_constant() {
                    return Ok(GroebnerBasis {
                        ring: ring.clone(),
                        polys: vec![Polynomial::one(ring)],
                    });
                }
                b.insert(h);
            }
        }
        let minimal: Vec<Polynomial> = b
            .basis
            .into_iter()
            .zip(b.active)
            .filter(|(_, a)| *a)
            .map(|(p, _)| p)
            .collect();
        let mut polys = Vec::with_capacity(minimal.len());
        for (k, g) in minimal.iter().enumerate() {
            let red = Reducer::new(minimal.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, p)| p));
            let r = reduce_terms(ring, g.terms().to_vec(), &red);
            polys.push(Polynomial::from_sorted(ring, r).monic());
        }
        polys.sort_by(|a, b| ord.cmp(a.lm(), b.lm()));
        Ok(GroebnerBasis {
            ring: ring.clone(),
            polys,
        })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| p.lm().clone()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.polys.iter().any(|p| p.is_constant())
    }

    /// Remainder of complete multivariate division by the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(self.reduce_unchecked(f))
    }

    pub(crate) fn reduce_unchecked(&self, f: &Polynomial) -> Polynomial {
        let red = Reducer::new(self.polys.iter());
        let r = reduce_terms(&self.ring, f.terms().to_vec(), &red);
        Polynomial::from_sorted(&self.ring, r)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Every S-polynomial of the basis reduces to zero (Buchberger's
    /// criterion). Quadratic in the basis size; meant for verification.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let red = Reducer::new(self.polys.iter());
        for i in 0..self.polys.len() {
            for j in i + 1..self.polys.len() {
                let (f, g) = (&self.polys[i], &self.polys[j]);
                let lcm = f.lm().lcm(g.lm());
                let fm = f.mul_monomial(&lcm.div(f.lm()));
                let s = sub_scaled(&self.ring, fm.terms(), 1, &lcm.div(g.lm()), g.terms());
                if !reduce_terms(&self.ring, s, &red).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// Reducedness: monic, and no term of any element is divisible by the
    /// leading monomial of another.
    pub fn is_reduced(&self) -> bool {
        self.polys.iter().enumerate().all(|(i, p)| {
            p.lc() == 1
                && p.terms()
                    .iter()
                    .all(|(m, _)| self.polys.iter().enumerate().all(|(j, q)| j == i || !q.lm().divides(m)))
        }) && self
            .polys
            .windows(2)
            .all(|w| self.ring.order().cmp(w[0].lm(), w[1].lm()) == Ordering::Less)
    }
}

/// Exact quotient `a / f` in the polynomial ring; fails if `f` does not divide `a`.
pub(crate) fn divide_exact(a: &Polynomial, f: &Polynomial) -> Result<Polynomial> {
    let ring = a.ring().clone();
    let field = ring.field();
    let inv = field.inv(f.lc())?;
    let mut rest = a.terms().to_vec();
    let mut quot: Vec<Term> = Vec::new();
    while let Some((m, c)) = rest.first().cloned() {
        if !f.lm().divides(&m) {
            return Err(Error::Internal("inexact polynomial division".into()));
        }
        let shift = m.div(f.lm());
        let q = field.mul(c, inv);
        rest = sub_scaled(&ring, &rest, q, &shift, f.terms());
        quot.push((shift, q));
    }
    Ok(Polynomial::from_terms(&ring, quot))
}
