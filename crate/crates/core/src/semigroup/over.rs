use serde::{Deserialize, Serialize};

use super::{NumericalSemigroup, SemigroupIdeal, SemigroupPair};
use crate::error::{Error, Result};
use crate::hilbert::{g_coeffs, DEFAULT_N_MAX};

/// Largest genus for which oversemigroups are enumerated.
pub const DEFAULT_GAP_CAP: usize = 20;

impl NumericalSemigroup {
    /// `T \ {g}` for a minimal generator `g` above the Frobenius number.
    fn without(&self, g: u32) -> Self {
        debug_assert!(g as i64 > self.frobenius() && self.generators().contains(&g));
        let mut member: Vec<bool> = (0..=g).map(|n| self.contains(n)).collect();
        member[g as usize] = false;
        Self::from_membership(member)
    }
}

/// All semigroups `B` with `S ⊆ B ⊆ ℕ`, by genus descending (so `S` first
/// and `ℕ` last).
///
/// Walks the tree in which the parent of `T` is `T ∪ {F(T)}`: starting at
/// `ℕ`, the children of `T` are `T \ {g}` for minimal generators `g > F(T)`,
/// kept only when `g` is a gap of `S`.
pub fn oversemigroups(s: &NumericalSemigroup, gap_cap: usize) -> Result<Vec<NumericalSemigroup>> {
    if s.genus() > gap_cap {
        return Err(Error::Budget(format!(
            "{s} has {} gaps, more than the cap of {gap_cap}",
            s.genus()
        )));
    }
    let mut out = Vec::new();
    let mut stack = vec![NumericalSemigroup::naturals()];
    while let Some(t) = stack.pop() {
        for &g in t.generators() {
            if g as i64 > t.frobenius() && !s.contains(g) {
                stack.push(t.without(g));
            }
        }
        out.push(t);
    }
    out.sort_by(|a, b| b.genus().cmp(&a.genus()).then_with(|| a.gaps().cmp(&b.gaps())));
    Ok(out)
}

/// One oversemigroup with the values it contributes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaWitness {
    pub generators: Vec<u32>,
    pub gaps: Vec<u32>,
    /// `ℓ(KB/K) - ℓ(R/K)`.
    pub delta_k: i64,
    /// `ℓ(B/R)`.
    pub delta_r: i64,
    /// `g_1^K(I)` for the witness ideal `I = xB`, by interpolation.
    pub g1_witness: i64,
}

/// The sets `Δ^K` and `Δ_R` with their extremal checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaReport {
    pub semigroup: Vec<u32>,
    pub k: Vec<u32>,
    pub colength_k: u64,
    pub delta_k: Vec<i64>,
    pub delta_r: Vec<i64>,
    pub witnesses: Vec<DeltaWitness>,
    /// `ℓ(K R̄/K) - ℓ(R/K)`.
    pub sup_expected: i64,
    pub sup_check: bool,
    /// `min Δ_R = 0`.
    pub inf_check: bool,
    /// Every witness reproduces its `Δ^K` value as `g_1^K(xB)`.
    pub bridge_check: bool,
}

impl DeltaReport {
    pub fn all_hold(&self) -> bool {
        self.sup_check && self.inf_check && self.bridge_check
    }
}

/// `I = x·B` with `v(x)` the conductor of `S` (at least 1), so that `I ⊆ S`
/// and `I/x = B`.
pub fn witness_ideal(s: &NumericalSemigroup, b: &NumericalSemigroup) -> Result<SemigroupIdeal> {
    let c = s.conductor().max(1);
    Ok(SemigroupIdeal::from_oversemigroup(s, b)?.translate(c))
}

fn sorted_set(mut v: Vec<i64>) -> Vec<i64> {
    v.sort_unstable();
    v.dedup();
    v
}

pub fn delta_sets(k: &SemigroupIdeal, gap_cap: usize) -> Result<DeltaReport> {
    let s = k.owner();
    if k.min() == 0 {
        return Err(Error::precondition("K is not m-primary (it contains 0)"));
    }
    let colength_k = k.colength()?;
    let ring = s.as_ideal();
    let mut witnesses = Vec::new();
    for b in oversemigroups(s, gap_cap)? {
        let bi = SemigroupIdeal::from_oversemigroup(s, &b)?;
        let kb = k.sumset(&bi)?;
        let delta_k = kb.length_over(k)? as i64 - colength_k as i64;
        let delta_r = bi.length_over(&ring)? as i64;
        let pair = SemigroupPair::new(k.clone(), witness_ideal(s, &b)?)?;
        let g1_witness = g_coeffs(&pair, DEFAULT_N_MAX)?.get(1);
        witnesses.push(DeltaWitness {
            generators: b.generators().to_vec(),
            gaps: b.gaps(),
            delta_k,
            delta_r,
            g1_witness,
        });
    }
    let delta_k = sorted_set(witnesses.iter().map(|w| w.delta_k).collect());
    let delta_r = sorted_set(witnesses.iter().map(|w| w.delta_r).collect());
    let closure = SemigroupIdeal::from_oversemigroup(s, &NumericalSemigroup::naturals())?;
    let sup_expected = k.sumset(&closure)?.length_over(k)? as i64 - colength_k as i64;
    Ok(DeltaReport {
        semigroup: s.generators().to_vec(),
        k: k.generators(),
        colength_k,
        sup_check: delta_k.last() == Some(&sup_expected),
        inf_check: delta_r.first() == Some(&0),
        bridge_check: witnesses.iter().all(|w| w.g1_witness == w.delta_k),
        delta_k,
        delta_r,
        witnesses,
        sup_expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(s: &NumericalSemigroup) -> Vec<Vec<u32>> {
        let gaps = s.gaps();
        let mut out: Vec<Vec<u32>> = (0u32..1 << gaps.len())
            .filter_map(|mask| {
                let extra: Vec<u32> = gaps
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &g)| g)
                    .collect();
                s.with_elements(&extra).map(|b| b.gaps())
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn small_lists() {
        let s = NumericalSemigroup::new(&[3, 4, 5]).unwrap();
        let gaps: Vec<Vec<u32>> = oversemigroups(&s, DEFAULT_GAP_CAP)
            .unwrap()
            .iter()
            .map(|b| b.gaps())
            .collect();
        assert_eq!(gaps, vec![vec![1, 2], vec![1], vec![]]);
        assert_eq!(oversemigroups(&NumericalSemigroup::naturals(), 20).unwrap().len(), 1);
        assert_eq!(
            oversemigroups(&NumericalSemigroup::new(&[2, 3]).unwrap(), 20)
                .unwrap()
                .len(),
            2
        );
    }

    #[test]
    fn tree_walk_matches_subsets() {
        for gens in [&[4, 7, 9][..], &[5, 6, 13], &[3, 7], &[6, 7, 8, 9, 10, 11], &[4, 5]] {
            let s = NumericalSemigroup::new(gens).unwrap();
            let mut walked: Vec<Vec<u32>> = oversemigroups(&s, 20).unwrap().iter().map(|b| b.gaps()).collect();
            walked.sort();
            assert_eq!(walked, brute(&s), "{s}");
        }
    }

    #[test]
    fn gap_cap() {
        let s = NumericalSemigroup::new(&[11, 13]).unwrap();
        assert!(oversemigroups(&s, 20).unwrap_err().is_budget());
    }

    #[test]
    fn deltas_of_three_four_five() {
        let s = NumericalSemigroup::new(&[3, 4, 5]).unwrap();
        let m = SemigroupIdeal::from_gens(&s, &[3, 4, 5]).unwrap();
        let d = delta_sets(&m, 20).unwrap();
        assert_eq!(d.delta_k, vec![-1]);
        assert_eq!(d.sup_expected, -1);
        assert_eq!(d.delta_r, vec![0, 1, 2]);
        assert!(d.all_hold());
    }

    #[test]
    fn deltas_over_the_naturals() {
        let n = NumericalSemigroup::naturals();
        for c in 1..5 {
            let k = SemigroupIdeal::principal(&n, c);
            let d = delta_sets(&k, 20).unwrap();
            assert_eq!(d.delta_k, vec![-(c as i64)]);
            assert!(d.all_hold());
        }
    }
}
