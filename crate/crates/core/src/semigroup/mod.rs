//! Numerical semigroup rings `k[[t^{a_1}, ..., t^{a_s}]]` in the language of
//! value sets: ideals are cofinite subsets `E ⊆ ℕ` with `E + S ⊆ E`, products
//! are sumsets, lengths are sizes of set differences, and the integral closure
//! is `ℕ`. Nothing here depends on the coefficient field.

mod blowup;
mod ideal;
mod over;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use blowup::{e1_interpolated, e1_via_blowup, minimal_reduction, Reduction, SemigroupPair};
pub use ideal::SemigroupIdeal;
pub use over::{delta_sets, oversemigroups, witness_ideal, DeltaReport, DeltaWitness, DEFAULT_GAP_CAP};

/// A cofinite additive submonoid of `ℕ`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NumericalSemigroup {
    generators: Vec<u32>,
    /// `member[n]` for `n < conductor`; everything from the conductor on is in.
    member: Vec<bool>,
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl NumericalSemigroup {
    /// The semigroup generated by `gens`, which must be positive with gcd 1.
    pub fn new(gens: &[u32]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::Semigroup("empty generator list".into()));
        }
        if gens.contains(&0) {
            return Err(Error::Semigroup("generators must be positive".into()));
        }
        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::Semigroup(format!("generators have gcd {g}")));
        }
        let largest = *gens.iter().max().unwrap() as usize;
        let cap = 2 * largest * largest + 1;
        let mut sieve = vec![false; cap];
        sieve[0] = true;
        for n in 1..cap {
            sieve[n] = gens.iter().any(|&a| a as usize <= n && sieve[n - a as usize]);
        }
        let conductor = sieve.iter().rposition(|&b| !b).map_or(0, |f| f + 1);
        sieve.truncate(conductor);
        Ok(Self::from_membership(sieve))
    }

    /// `ℕ` itself.
    pub fn naturals() -> Self {
        Self::from_membership(Vec::new())
    }

    /// Builds the semigroup whose elements below the conductor are flagged in
    /// `member`; the caller guarantees additive closure.
    fn from_membership(mut member: Vec<bool>) -> Self {
        while member.last() == Some(&true) {
            member.pop();
        }
        let contains = |n: usize| n >= member.len() || member[n];
        let c = member.len();
        let mut generators = Vec::new();
        for n in 1..=c.max(1) + c.max(1) {
            if !contains(n) {
                continue;
            }
            let decomposable = generators
                .iter()
                .any(|&g: &u32| (g as usize) < n && contains(n - g as usize));
            if !decomposable {
                generators.push(n as u32);
            }
        }
        NumericalSemigroup { generators, member }
    }

    /// `S ∪ extra` if that set is closed under addition.
    pub fn with_elements(&self, extra: &[u32]) -> Option<Self> {
        let mut member = self.member.clone();
        for &e in extra {
            if (e as usize) < member.len() {
                member[e as usize] = true;
            }
        }
        let s = Self::from_membership(member);
        s.is_closed().then_some(s)
    }

    /// Additive closure checked on all pairs below twice the conductor.
    pub fn is_closed(&self) -> bool {
        let c = self.conductor() as usize;
        (0..c).filter(|&a| self.contains(a as u32)).all(|a| {
            (a..c)
                .filter(|&b| self.contains(b as u32))
                .all(|b| self.contains((a + b) as u32))
        })
    }

    pub fn contains(&self, n: u32) -> bool {
        (n as usize) >= self.member.len() || self.member[n as usize]
    }

    /// Minimal generators.
    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn gaps(&self) -> Vec<u32> {
        (0..self.member.len() as u32).filter(|&n| !self.contains(n)).collect()
    }

    /// `#gaps = ℓ(ℕ/S)`.
    pub fn genus(&self) -> usize {
        self.member.iter().filter(|&&b| !b).count()
    }

    /// Largest gap, `-1` for `ℕ`.
    pub fn frobenius(&self) -> i64 {
        self.member.len() as i64 - 1
    }

    pub fn conductor(&self) -> u32 {
        self.member.len() as u32
    }

    /// Smallest positive element.
    pub fn multiplicity(&self) -> u32 {
        self.generators[0]
    }

    /// Elements below the conductor.
    pub fn small_elements(&self) -> Vec<u32> {
        (0..self.conductor()).filter(|&n| self.contains(n)).collect()
    }

    /// `S` as an ideal of itself.
    pub fn as_ideal(&self) -> SemigroupIdeal {
        SemigroupIdeal::principal(self, 0)
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(u32::to_string).collect();
        write!(f, "<{}>", gens.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_four_five() {
        let s = NumericalSemigroup::new(&[3, 4, 5]).unwrap();
        assert_eq!(s.gaps(), vec![1, 2]);
        assert_eq!(s.frobenius(), 2);
        assert_eq!(s.conductor(), 3);
        assert_eq!(s.generators(), &[3, 4, 5]);
    }

    #[test]
    fn naturals_and_small_cases() {
        let n = NumericalSemigroup::new(&[1]).unwrap();
        assert!(n.gaps().is_empty());
        assert_eq!(n.frobenius(), -1);
        assert_eq!(n, NumericalSemigroup::naturals());
        assert_eq!(NumericalSemigroup::new(&[2, 3]).unwrap().gaps(), vec![1]);
        let s = NumericalSemigroup::new(&[6, 9, 20]).unwrap();
        assert_eq!(s.frobenius(), 43);
        assert_eq!(s.generators(), &[6, 9, 20]);
    }

    #[test]
    fn invalid_generators() {
        assert!(NumericalSemigroup::new(&[]).is_err());
        assert!(NumericalSemigroup::new(&[4, 6]).is_err());
        assert!(NumericalSemigroup::new(&[0, 1]).is_err());
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let s = NumericalSemigroup::new(&[5, 3, 6, 4]).unwrap();
        assert_eq!(s.generators(), &[3, 4, 5]);
        assert!(s.is_closed());
    }

    #[test]
    fn adding_gaps() {
        let s = NumericalSemigroup::new(&[3, 4, 5]).unwrap();
        assert_eq!(s.with_elements(&[2]).unwrap().gaps(), vec![1]);
        assert!(s.with_elements(&[1]).is_none());
        assert_eq!(s.with_elements(&[1, 2]).unwrap(), NumericalSemigroup::naturals());
    }
}
