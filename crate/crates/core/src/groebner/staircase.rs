//! Counting with monomial ideals: standard monomials, dimension, and the size
//! of a difference of two monomial ideals.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Length of a quotient: a count of standard monomials, or unbounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Length {
    Finite(u64),
    Infinite,
}

impl Length {
    pub fn finite(self) -> Option<u64> {
        match self {
            Length::Finite(n) => Some(n),
            Length::Infinite => None,
        }
    }
}

impl std::fmt::Display for Length {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Length::Finite(n) => write!(f, "{n}"),
            Length::Infinite => write!(f, "infinite"),
        }
    }
}

/// Minimal generators of the monomial ideal generated by `monos`.
pub fn minimalize(mut monos: Vec<Monomial>) -> Vec<Monomial> {
    monos.sort_by_key(|m| m.degree());
    monos.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in monos {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Number of monomials outside the ideal generated by `gens`.
pub fn count_standard(gens: &[Monomial], nvars: usize) -> Length {
    let gens = minimalize(gens.to_vec());
    if gens.iter().any(|g| g.is_one()) {
        return Length::Finite(0);
    }
    let mut bounds = vec![u32::MAX; nvars];
    for g in &gens {
        let mut supp = g.support();
        if let (Some(i), None) = (supp.next(), supp.next()) {
            bounds[i] = bounds[i].min(g.exponents()[i]);
        }
    }
    if bounds.contains(&u32::MAX) {
        return Length::Infinite;
    }
    let mut exps = vec![0u32; nvars];
    Length::Finite(count_rec(&gens, &bounds, &mut exps, 0))
}

fn count_rec(gens: &[Monomial], bounds: &[u32], exps: &mut [u32], k: usize) -> u64 {
    if k == exps.len() {
        return 1;
    }
    let mut total = 0;
    for a in 0..bounds[k] {
        exps[k] = a;
        let divisible = gens
            .iter()
            .any(|g| g.exponents().iter().zip(exps.iter()).all(|(x, y)| x <= y));
        if divisible {
            break;
        }
        total += count_rec(gens, bounds, exps, k + 1);
    }
    exps[k] = 0;
    total
}

/// Krull dimension of `k[x]/(gens)`: the largest set of variables such that no
/// generator is supported inside it. `None` for the unit ideal.
pub fn dimension(gens: &[Monomial], nvars: usize) -> Option<usize> {
    if gens.iter().any(|g| g.is_one()) {
        return None;
    }
    let supports: Vec<u64> = gens
        .iter()
        .map(|g| g.support().fold(0u64, |acc, i| acc | 1 << i))
        .collect();
    assert!(nvars < 64, "dimension search supports fewer than 64 variables");
    let mut best = 0;
    for set in 0u64..(1u64 << nvars) {
        let size = set.count_ones() as usize;
        if size > best && supports.iter().all(|s| s & !set != 0) {
            best = size;
        }
    }
    Some(best)
}

/// `#(⟨outer⟩ \ ⟨inner⟩)` for monomial ideals with `inner ⊆ outer`.
///
/// Every monomial of the difference is reachable from a generator of `outer`
/// through multiplications by single variables that stay outside `inner`, so a
/// breadth-first walk enumerates it. The walk gives up after `cap` monomials.
pub fn count_difference(outer: &[Monomial], inner: &[Monomial], cap: usize) -> Result<u64> {
    let inner = minimalize(inner.to_vec());
    let in_inner = |m: &Monomial| inner.iter().any(|g| g.divides(m));
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut queue: VecDeque<Monomial> = VecDeque::new();
    for g in minimalize(outer.to_vec()) {
        if !in_inner(&g) && seen.insert(g.clone()) {
            queue.push_back(g);
        }
    }
    while let Some(m) = queue.pop_front() {
        if seen.len() > cap {
            return Err(Error::Budget(format!(
                "monomial difference exceeds {cap} elements (is the quotient finite?)"
            )));
        }
        for i in 0..m.nvars() {
            let mut next = m.clone();
            next.exps_mut()[i] += 1;
            if !in_inner(&next) && !seen.contains(&next) {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(seen.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn rectangle_staircase() {
        assert_eq!(count_standard(&[m(&[2, 0]), m(&[0, 3])], 2), Length::Finite(6));
        assert_eq!(
            count_standard(&[m(&[2, 0]), m(&[1, 1]), m(&[0, 2])], 2),
            Length::Finite(3)
        );
        assert_eq!(count_standard(&[m(&[2, 0])], 2), Length::Infinite);
        assert_eq!(count_standard(&[m(&[0, 0])], 2), Length::Finite(0));
        assert_eq!(count_standard(&[], 0), Length::Finite(1));
    }

    #[test]
    fn dimension_of_two_planes() {
        // xz, xw, yz, yw
        let gens = [m(&[1, 0, 1, 0]), m(&[1, 0, 0, 1]), m(&[0, 1, 1, 0]), m(&[0, 1, 0, 1])];
        assert_eq!(dimension(&gens, 4), Some(2));
        assert_eq!(dimension(&[], 2), Some(2));
        assert_eq!(dimension(&[m(&[1, 0]), m(&[0, 4])], 2), Some(0));
        assert_eq!(dimension(&[m(&[0, 0])], 2), None);
    }

    #[test]
    fn difference_counts() {
        // (x) \ (x^2, xy) in k[x,y] = {x}
        assert_eq!(
            count_difference(&[m(&[1, 0])], &[m(&[2, 0]), m(&[1, 1])], 100).unwrap(),
            1
        );
        // (1) \ (x^2) in k[x] = {1, x}
        assert_eq!(count_difference(&[m(&[0])], &[m(&[2])], 100).unwrap(), 2);
        // infinite difference hits the cap
        assert!(count_difference(&[m(&[0, 0])], &[m(&[1, 0])], 50).is_err());
    }
}
