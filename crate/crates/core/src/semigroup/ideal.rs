use std::fmt;
use std::sync::Arc;

use super::NumericalSemigroup;
use crate::error::{Error, Result};

/// A relative ideal `E = ⋃ (v_j + S)` of a numerical semigroup, stored as its
/// elements below a horizon beyond which every integer belongs to `E`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SemigroupIdeal {
    owner: Arc<NumericalSemigroup>,
    below: Vec<u32>,
    horizon: u32,
}

impl SemigroupIdeal {
    /// `v + S`.
    pub fn principal(s: &NumericalSemigroup, v: u32) -> Self {
        Self::from_gens(s, &[v]).expect("one generator is never empty")
    }

    pub fn from_gens(s: &NumericalSemigroup, gens: &[u32]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::Semigroup("an ideal needs at least one generator".into()));
        }
        let bound = gens.iter().max().unwrap() + s.conductor();
        Ok(Self::normalize(Arc::new(s.clone()), bound, |n| {
            gens.iter().any(|&v| v <= n && s.contains(n - v))
        }))
    }

    /// An oversemigroup `S ⊆ B ⊆ ℕ` viewed as an `S`-module.
    pub fn from_oversemigroup(s: &NumericalSemigroup, b: &NumericalSemigroup) -> Result<Self> {
        if !s.small_elements().iter().all(|&n| b.contains(n)) || b.conductor() > s.conductor() {
            return Err(Error::Semigroup(format!("{b} does not contain {s}")));
        }
        let gens: Vec<u32> = (0..=b.conductor() + s.conductor()).filter(|&n| b.contains(n)).collect();
        Self::from_gens(s, &gens)
    }

    /// Builds from a membership predicate that holds for every `n ≥ bound`.
    fn normalize(owner: Arc<NumericalSemigroup>, bound: u32, member: impl Fn(u32) -> bool) -> Self {
        let flags: Vec<bool> = (0..bound).map(&member).collect();
        let horizon = flags.iter().rposition(|&b| !b).map_or(0, |i| i as u32 + 1);
        let below = (0..horizon).filter(|&n| flags[n as usize]).collect();
        SemigroupIdeal { owner, below, horizon }
    }

    pub fn owner(&self) -> &NumericalSemigroup {
        &self.owner
    }

    pub fn contains(&self, n: u32) -> bool {
        n >= self.horizon || self.below.binary_search(&n).is_ok()
    }

    /// Least element, the valuation of a minimal reduction.
    pub fn min(&self) -> u32 {
        self.below.first().copied().unwrap_or(self.horizon)
    }

    /// Every integer from here on is in the ideal.
    pub fn horizon(&self) -> u32 {
        self.horizon
    }

    /// Elements below the horizon.
    pub fn small_elements(&self) -> &[u32] {
        &self.below
    }

    /// Minimal generators: elements not of the form `e + s` with `s ∈ S \ {0}`.
    pub fn generators(&self) -> Vec<u32> {
        let s = &self.owner;
        let top = self.horizon + s.multiplicity();
        (self.min()..top)
            .filter(|&n| self.contains(n))
            .filter(|&n| !(1..=n).any(|k| s.contains(k) && self.contains(n - k)))
            .collect()
    }

    fn same_owner(&self, other: &SemigroupIdeal) -> Result<()> {
        if self.owner == other.owner {
            Ok(())
        } else {
            Err(Error::Semigroup("ideals of different semigroups".into()))
        }
    }

    /// `E + F`, the value set of the product ideal.
    pub fn sumset(&self, other: &SemigroupIdeal) -> Result<SemigroupIdeal> {
        self.same_owner(other)?;
        let bound = (self.horizon + other.min()).min(self.min() + other.horizon);
        let mine: Vec<u32> = (self.min()..bound).filter(|&n| self.contains(n)).collect();
        Ok(Self::normalize(self.owner.clone(), bound, |n| {
            mine.iter().take_while(|&&e| e <= n).any(|&e| other.contains(n - e))
        }))
    }

    /// `kE`; `k = 0` gives `S`.
    pub fn k_fold(&self, k: u32) -> SemigroupIdeal {
        let mut acc = self.owner.as_ideal();
        for _ in 0..k {
            acc = acc.sumset(self).expect("same owner");
        }
        acc
    }

    /// `E - c`, the value set of `E / x^c`.
    pub fn scale_shift(&self, c: u32) -> Result<SemigroupIdeal> {
        if c > self.min() {
            return Err(Error::Semigroup(format!(
                "shift by {c} exceeds the least element {}",
                self.min()
            )));
        }
        Ok(SemigroupIdeal {
            owner: self.owner.clone(),
            below: self.below.iter().map(|&e| e - c).collect(),
            horizon: self.horizon - c,
        })
    }

    /// `c + E`, the value set of `x^c E`.
    pub fn translate(&self, c: u32) -> SemigroupIdeal {
        SemigroupIdeal {
            owner: self.owner.clone(),
            below: self.below.iter().map(|&e| e + c).collect(),
            horizon: self.horizon + c,
        }
    }

    /// `F ⊆ E`.
    pub fn contains_ideal(&self, other: &SemigroupIdeal) -> bool {
        other.below.iter().all(|&n| self.contains(n)) && (other.horizon..self.horizon).all(|n| self.contains(n))
    }

    /// `ℓ(E/F) = #(E \ F)` for `F ⊆ E`.
    pub fn length_over(&self, inner: &SemigroupIdeal) -> Result<u64> {
        self.same_owner(inner)?;
        if !self.contains_ideal(inner) {
            return Err(Error::Semigroup(format!("{inner} is not contained in {self}")));
        }
        Ok((0..inner.horizon)
            .filter(|&n| self.contains(n) && !inner.contains(n))
            .count() as u64)
    }

    /// `ℓ(S/E)`.
    pub fn colength(&self) -> Result<u64> {
        self.owner.as_ideal().length_over(self)
    }
}

impl fmt::Debug for SemigroupIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SemigroupIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators().iter().map(u32::to_string).collect();
        write!(f, "({}) + {}", gens.join(","), self.owner)
    }
}
