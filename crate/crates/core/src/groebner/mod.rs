//! Quotient rings `R = k[x]/J`, ideals of `R`, and the Gröbner toolbox built on
//! them: normal forms, ideal arithmetic, colon and saturation, lengths,
//! dimension, and the length of `H^0_m(R)`.
//!
//! Lengths are computed in the affine ring. For ideals that are primary to the
//! irrelevant ideal `m = (x_1, ..., x_v)` the quotient is supported at the
//! origin only and the affine length equals the length over the localization
//! at `m`. Dimension and `H^0_m` are global affine computations and agree with
//! the local ones for homogeneous relations.

mod buchberger;
pub mod staircase;

use std::sync::{Arc, Mutex, OnceLock};

pub use buchberger::{GroebnerBasis, DEFAULT_PAIR_BUDGET};
pub use staircase::Length;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{same_ring, PolyRing, Polynomial};
use buchberger::divide_exact;

/// Cap on monomials enumerated when counting a difference of staircases.
const DIFFERENCE_CAP: usize = 5_000_000;

/// A finitely presented quotient `k[x_1..x_v]/J`.
#[derive(Clone, Debug)]
pub struct RingPresentation {
    ring: Arc<PolyRing>,
    relations: Vec<Polynomial>,
    pair_budget: usize,
    relation_basis: OnceLock<Result<GroebnerBasis>>,
}

impl RingPresentation {
    pub fn new(ring: Arc<PolyRing>, relations: Vec<Polynomial>) -> Self {
        RingPresentation {
            ring,
            relations,
            pair_budget: DEFAULT_PAIR_BUDGET,
            relation_basis: OnceLock::new(),
        }
    }

    pub fn with_pair_budget(mut self, budget: usize) -> Self {
        self.pair_budget = budget;
        self.relation_basis = OnceLock::new();
        self
    }

    pub fn poly_ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn pair_budget(&self) -> usize {
        self.pair_budget
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    /// Reduced Gröbner basis of `J`, computed once.
    pub fn relation_basis(&self) -> Result<&GroebnerBasis> {
        self.relation_basis
            .get_or_init(|| GroebnerBasis::compute(&self.ring, &self.relations, self.pair_budget))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Krull dimension `d` of `R`.
    pub fn krull_dim(&self) -> Result<usize> {
        let lms = self.relation_basis()?.leading_monomials();
        staircase::dimension(&lms, self.nvars())
            .ok_or_else(|| Error::precondition("the relations generate the unit ideal"))
    }

    /// `ℓ(H^0_m(R)) = ℓ((J : m^∞)/J)`.
    pub fn h0_length(self: &Arc<Self>) -> Result<u64> {
        IdealHandle::zero(self).h0_length()
    }

    fn check(&self, f: &Polynomial) -> Result<()> {
        if same_ring(f.ring(), &self.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }
}

#[derive(Debug)]
struct IdealInner {
    ring: Arc<RingPresentation>,
    gens: Vec<Polynomial>,
    basis: OnceLock<Result<GroebnerBasis>>,
    length: OnceLock<Result<Length>>,
    powers: Mutex<Vec<IdealHandle>>,
}

/// An ideal of a presented ring, with its Gröbner basis (of generators plus
/// relations) and derived data cached on first use.
///
/// Cloning is cheap and shares the caches.
#[derive(Clone, Debug)]
pub struct IdealHandle(Arc<IdealInner>);

impl PartialEq for IdealHandle {
    fn eq(&self, other: &Self) -> bool {
        match (self.groebner_basis(), other.groebner_basis()) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }
}

impl IdealHandle {
    pub fn new(ring: &Arc<RingPresentation>, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            ring.check(g)?;
        }
        Ok(Self::build(ring, gens, None))
    }

    fn build(ring: &Arc<RingPresentation>, gens: Vec<Polynomial>, basis: Option<GroebnerBasis>) -> Self {
        let cell = OnceLock::new();
        if let Some(b) = basis {
            let _ = cell.set(Ok(b));
        }
        IdealHandle(Arc::new(IdealInner {
            ring: ring.clone(),
            gens,
            basis: cell,
            length: OnceLock::new(),
            powers: Mutex::new(Vec::new()),
        }))
    }

    /// The ideal `m` generated by all variables.
    pub fn maximal(ring: &Arc<RingPresentation>) -> Self {
        let pr = ring.poly_ring();
        let gens = (0..pr.nvars()).map(|i| Polynomial::var(pr, i)).collect();
        Self::build(ring, gens, None)
    }

    pub fn zero(ring: &Arc<RingPresentation>) -> Self {
        Self::build(ring, Vec::new(), None)
    }

    pub fn unit(ring: &Arc<RingPresentation>) -> Self {
        Self::build(ring, vec![Polynomial::one(ring.poly_ring())], None)
    }

    pub fn ring(&self) -> &Arc<RingPresentation> {
        &self.0.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.0.gens
    }

    /// Reduced Gröbner basis of `gens + J` in the ambient ring.
    pub fn groebner_basis(&self) -> Result<&GroebnerBasis> {
        self.0
            .basis
            .get_or_init(|| {
                let ring = &self.0.ring;
                let mut all: Vec<Polynomial> = ring.relation_basis()?.polys().to_vec();
                all.extend(self.0.gens.iter().cloned());
                GroebnerBasis::compute(ring.poly_ring(), &all, ring.pair_budget())
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    fn leading_monomials(&self) -> Result<Vec<Monomial>> {
        Ok(self.groebner_basis()?.leading_monomials())
    }

    fn same_ring(&self, other: &IdealHandle) -> Result<()> {
        if Arc::ptr_eq(&self.0.ring, &other.0.ring)
            || same_ring(self.0.ring.poly_ring(), other.0.ring.poly_ring())
                && self.0.ring.relations() == other.0.ring.relations()
        {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.groebner_basis()?.normal_form(f)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &IdealHandle) -> Result<bool> {
        self.same_ring(other)?;
        for g in other.groebner_basis()?.polys() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner_basis()?.is_unit())
    }

    /// `ℓ(R/I)`: the number of standard monomials.
    pub fn length(&self) -> Result<Length> {
        self.0
            .length
            .get_or_init(|| {
                let lms = self.leading_monomials()?;
                Ok(staircase::count_standard(&lms, self.0.ring.nvars()))
            })
            .clone()
    }

    /// Finite length or a precondition error naming `what`.
    pub fn finite_length(&self, what: &str) -> Result<u64> {
        self.length()?
            .finite()
            .ok_or_else(|| Error::precondition(format!("{what} has infinite colength")))
    }

    /// `ℓ(self / inner)` for `inner ⊆ self`, counted as the difference of the
    /// two staircases.
    pub fn length_over(&self, inner: &IdealHandle) -> Result<u64> {
        self.same_ring(inner)?;
        let outer = self.leading_monomials()?;
        let inner = inner.leading_monomials()?;
        staircase::count_difference(&outer, &inner, DIFFERENCE_CAP)
    }

    /// Dimension of `R/I`; `None` for the unit ideal.
    pub fn krull_dim(&self) -> Result<Option<usize>> {
        let lms = self.leading_monomials()?;
        Ok(staircase::dimension(&lms, self.0.ring.nvars()))
    }

    /// Proper, of finite colength, and supported only at the origin.
    pub fn is_m_primary(&self) -> Result<bool> {
        let len = match self.length()? {
            Length::Finite(0) | Length::Infinite => return Ok(false),
            Length::Finite(n) => n,
        };
        let pr = self.0.ring.poly_ring();
        for i in 0..pr.nvars() {
            // nilpotency index of x_i is at most the length
            let power = Polynomial::monomial(pr, Monomial::var(pr.nvars(), i).pow(len as u32), 1);
            if !self.contains(&power)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `m`-primary and generated by exactly `d` elements.
    pub fn is_parameter(&self) -> Result<bool> {
        Ok(self.0.gens.len() == self.0.ring.krull_dim()? && self.is_m_primary()?)
    }

    fn sibling(&self, gens: Vec<Polynomial>) -> Result<IdealHandle> {
        let ring = &self.0.ring;
        let rel = ring.relation_basis()?;
        let mut reduced: Vec<Polynomial> = Vec::with_capacity(gens.len());
        for g in gens {
            let r = rel.reduce_unchecked(&g);
            if !r.is_zero() && !reduced.contains(&r) {
                reduced.push(r);
            }
        }
        Ok(Self::build(ring, reduced, None))
    }

    pub fn sum(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.same_ring(other)?;
        let mut gens = self.0.gens.clone();
        gens.extend(other.0.gens.iter().cloned());
        self.sibling(gens)
    }

    /// Product ideal from pairwise products of the basis of `self` with the
    /// generators of `other`.
    pub fn product(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.same_ring(other)?;
        let left = self.groebner_basis()?.polys();
        let mut gens = Vec::with_capacity(left.len() * other.0.gens.len());
        for a in left {
            for b in &other.0.gens {
                gens.push(a.mul_unchecked(b));
            }
        }
        let out = self.sibling(gens)?;
        out.groebner_basis()?;
        Ok(out)
    }

    /// `I^k`, built by repeated multiplication with interreduction at every
    /// step. Powers are cached on the handle.
    pub fn power(&self, k: u32) -> Result<IdealHandle> {
        if k == 0 {
            return Ok(Self::unit(&self.0.ring));
        }
        if k == 1 {
            return Ok(self.clone());
        }
        let mut cache = self.0.powers.lock().expect("power cache poisoned");
        // cache[j] holds I^(j+2)
        while cache.len() < (k - 1) as usize {
            let prev = cache.last().cloned().unwrap_or_else(|| self.clone());
            let next = prev.product(self)?;
            cache.push(next);
        }
        Ok(cache[(k - 2) as usize].clone())
    }

    /// `I ∩ L` by eliminating `t` from `t·I + (1 - t)·L`.
    pub fn intersection(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.same_ring(other)?;
        let ring = &self.0.ring;
        let pr = ring.poly_ring();
        let aux = Arc::new(pr.with_elimination_var());
        let t = Polynomial::var(&aux, 0);
        let one_minus_t = Polynomial::one(&aux).sub_unchecked(&t);
        let mut gens = Vec::new();
        for g in self.groebner_basis()?.polys() {
            gens.push(t.mul_unchecked(&g.embed(&aux, 1)));
        }
        for g in other.groebner_basis()?.polys() {
            gens.push(one_minus_t.mul_unchecked(&g.embed(&aux, 1)));
        }
        let gb = GroebnerBasis::compute(&aux, &gens, ring.pair_budget())?;
        let kept: Vec<Polynomial> = gb
            .polys()
            .iter()
            .filter(|g| !g.involves_first(1))
            .map(|g| g.project(pr, 1))
            .collect();
        self.sibling(kept)
    }

    /// `I : f`, via `(I ∩ (f)) / f`.
    pub fn colon(&self, f: &Polynomial) -> Result<IdealHandle> {
        self.0.ring.check(f)?;
        if f.is_zero() {
            return Err(Error::precondition("colon by the zero polynomial"));
        }
        let ring = &self.0.ring;
        let f = ring.relation_basis()?.reduce_unchecked(f);
        if f.is_zero() {
            return Ok(Self::unit(ring));
        }
        // (I + J) ∩ (f) in k[x]; every element is an exact multiple of f
        let pr = ring.poly_ring();
        let aux = Arc::new(pr.with_elimination_var());
        let t = Polynomial::var(&aux, 0);
        let one_minus_t = Polynomial::one(&aux).sub_unchecked(&t);
        let mut gens: Vec<Polynomial> = self
            .groebner_basis()?
            .polys()
            .iter()
            .map(|g| t.mul_unchecked(&g.embed(&aux, 1)))
            .collect();
        gens.push(one_minus_t.mul_unchecked(&f.embed(&aux, 1)));
        let gb = GroebnerBasis::compute(&aux, &gens, ring.pair_budget())?;
        let mut quotients = Vec::new();
        for g in gb.polys().iter().filter(|g| !g.involves_first(1)) {
            quotients.push(divide_exact(&g.project(pr, 1), &f)?);
        }
        self.sibling(quotients)
    }

    /// `I : f^∞`, iterating colons until the reduced basis stabilizes.
    pub fn saturation(&self, f: &Polynomial) -> Result<IdealHandle> {
        let mut cur = self.clone();
        loop {
            let next = cur.colon(f)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// `I : m^∞ = ⋂_i (I : x_i^∞)`.
    pub fn m_saturation(&self) -> Result<IdealHandle> {
        let pr = self.0.ring.poly_ring().clone();
        let mut acc: Option<IdealHandle> = None;
        for i in 0..pr.nvars() {
            let s = self.saturation(&Polynomial::var(&pr, i))?;
            acc = Some(match acc {
                None => s,
                Some(a) => a.intersection(&s)?,
            });
        }
        Ok(acc.unwrap_or_else(|| self.clone()))
    }

    /// `ℓ(H^0_m(R/I)) = ℓ((I : m^∞)/I)`.
    pub fn h0_length(&self) -> Result<u64> {
        let sat = self.m_saturation()?;
        sat.length_over(self)
    }
}
