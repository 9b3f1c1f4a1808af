//! Fitting an eventually polynomial integer sequence and reading off its
//! coefficients in a shifted binomial basis.
//!
//! A polynomial `P` of degree `r` has the backward Newton expansion
//! `P(n) = Σ_k ∇^k P(-s) · C(n + s + k - 1, k)`. With `s = 0` this is the basis
//! `C(n + r - i - 1, r - i)` of Hilbert–Samuel polynomials, with `s = 1` the basis
//! `C(n + r - i, r - i)` of the fiber polynomial; the coefficient of index `i` is
//! `(-1)^i ∇^{r-i} P(-s)`. Everything is integer arithmetic.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default last index at which a sequence is evaluated while searching for
/// stabilization.
pub const DEFAULT_N_MAX: u32 = 40;

/// Which of the three Hilbert polynomials a vector belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoefficientKind {
    /// `e_i(Q, M)` from `n ↦ ℓ(M/QⁿM)`.
    Samuel,
    /// `g_i^K(Q)` from `n ↦ ℓ(R/KQⁿ)`.
    Relative,
    /// `f_i^K(Q)` from `n ↦ ℓ(Qⁿ/KQⁿ)`.
    Fiber,
}

impl CoefficientKind {
    fn shift(self) -> i128 {
        match self {
            CoefficientKind::Fiber => 1,
            _ => 0,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            CoefficientKind::Samuel => "e",
            CoefficientKind::Relative => "g",
            CoefficientKind::Fiber => "f",
        }
    }
}

/// Integer coefficients of a Hilbert polynomial together with the range on
/// which the polynomial was checked against the function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientVector {
    pub kind: CoefficientKind,
    pub values: Vec<i64>,
    pub degree: usize,
    /// Least `n ≥ 1` from which the function agrees with the polynomial.
    pub postulation: u32,
    /// Inclusive range of `n` on which agreement was verified.
    pub window: (u32, u32),
}

impl CoefficientVector {
    /// Coefficient of index `i`, zero beyond the degree.
    pub fn get(&self, i: usize) -> i64 {
        self.values.get(i).copied().unwrap_or(0)
    }

    /// Evaluates the polynomial at any integer `n`.
    pub fn evaluate(&self, n: i64) -> i128 {
        let s = self.kind.shift();
        let r = self.degree as i128;
        self.values
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let i = i as i128;
                let sign = if i % 2 == 0 { 1 } else { -1 };
                sign * c as i128 * binomial(n as i128 + s + r - i - 1, (r - i) as u32)
            })
            .sum()
    }
}

/// `C(t, k)` for any integer `t`, via the falling factorial.
pub fn binomial(t: i128, k: u32) -> i128 {
    let mut acc: i128 = 1;
    for j in 0..k as i128 {
        acc = acc * (t - j) / (j + 1);
    }
    acc
}

/// Newton forward form through `ys` at `n0, n0 + 1, ...`, evaluated at `x`.
fn newton_eval(diffs: &[i128], n0: i128, x: i128) -> i128 {
    diffs
        .iter()
        .enumerate()
        .map(|(j, d)| d * binomial(x - n0, j as u32))
        .sum()
}

fn forward_differences(ys: &[i128]) -> Vec<i128> {
    let mut row = ys.to_vec();
    let mut out = Vec::with_capacity(ys.len());
    while let Some(&first) = row.first() {
        out.push(first);
        row = row.windows(2).map(|w| w[1] - w[0]).collect();
    }
    out
}

/// Fits `h` by a polynomial of the given degree and returns its coefficients in
/// the basis of `kind`.
///
/// Starting at `N = 1`, the candidate through `N..=N+degree` is accepted once
/// it also matches the next `degree + 3` values; otherwise `N` moves up. The
/// whole search stays within `n ≤ n_max`. `h` is called at most once per `n`.
pub fn extract_coeffs<F>(mut h: F, degree: usize, kind: CoefficientKind, n_max: u32) -> Result<CoefficientVector>
where
    F: FnMut(u32) -> Result<u64>,
{
    let mut memo: Vec<Option<i128>> = vec![None; n_max as usize + 1];
    let mut value = |n: u32| -> Result<i128> {
        if let Some(v) = memo[n as usize] {
            return Ok(v);
        }
        let v = h(n)? as i128;
        memo[n as usize] = Some(v);
        Ok(v)
    };
    let span = 2 * degree as u32 + 3;
    let mut start = 1u32;
    while start + span <= n_max {
        let ys: Vec<i128> = (start..=start + degree as u32).map(&mut value).collect::<Result<_>>()?;
        let diffs = forward_differences(&ys);
        let fits = |n: u32, v: i128| newton_eval(&diffs, start as i128, n as i128) == v;
        let mut ok = true;
        for n in start + degree as u32 + 1..=start + span {
            if !fits(n, value(n)?) {
                ok = false;
                break;
            }
        }
        if ok {
            let mut postulation = start;
            while postulation > 1 && fits(postulation - 1, value(postulation - 1)?) {
                postulation -= 1;
            }
            let values = to_basis(&diffs, start as i128, degree, kind)?;
            return Ok(CoefficientVector {
                kind,
                values,
                degree,
                postulation,
                window: (postulation, start + span),
            });
        }
        start += 1;
    }
    Err(Error::PostulationNotReached { n_max })
}

fn to_basis(diffs: &[i128], n0: i128, degree: usize, kind: CoefficientKind) -> Result<Vec<i64>> {
    let s = kind.shift();
    // P(-s), P(-s-1), ..., P(-s-degree)
    let tail: Vec<i128> = (0..=degree as i128).map(|j| newton_eval(diffs, n0, -s - j)).collect();
    let mut values = Vec::with_capacity(degree + 1);
    for i in 0..=degree {
        let k = degree - i;
        let back: i128 = (0..=k)
            .map(|j| {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * binomial(k as i128, j as u32) * tail[j]
            })
            .sum();
        let c = if i % 2 == 0 { back } else { -back };
        values.push(i64::try_from(c).map_err(|_| Error::Internal(format!("coefficient {c} overflows i64")))?);
    }
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fit(h: impl Fn(u32) -> u64, degree: usize, kind: CoefficientKind) -> CoefficientVector {
        extract_coeffs(|n| Ok(h(n)), degree, kind, DEFAULT_N_MAX).unwrap()
    }

    #[test]
    fn binomials_at_negative_arguments() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(-1, 3), -1);
        assert_eq!(binomial(-2, 2), 3);
        assert_eq!(binomial(3, 0), 1);
        assert_eq!(binomial(2, 4), 0);
    }

    #[test]
    fn plane_hilbert_samuel() {
        let v = fit(|n| (n as u64 + 1) * n as u64 / 2, 2, CoefficientKind::Samuel);
        assert_eq!(v.values, vec![1, 0, 0]);
        assert_eq!(v.postulation, 1);
        assert_eq!(v.window, (1, 8));
    }

    #[test]
    fn relative_line() {
        let v = fit(|n| 3 * n as u64 + 1, 1, CoefficientKind::Relative);
        assert_eq!(v.values, vec![3, -1]);
    }

    #[test]
    fn constant_sequence() {
        assert_eq!(fit(|_| 7, 0, CoefficientKind::Samuel).values, vec![7]);
    }

    #[test]
    fn fiber_shift() {
        // ℓ(m^n/m^{n+1}) = n + 1 in two variables: f = (1, 0)
        let v = fit(|n| n as u64 + 1, 1, CoefficientKind::Fiber);
        assert_eq!(v.values, vec![1, 0]);
        assert_eq!(v.evaluate(4), 5);
    }

    #[test]
    fn late_postulation() {
        // agrees with 2n - 1 only from n = 5 on
        let v = fit(|n| if n < 5 { 0 } else { 2 * n as u64 - 1 }, 1, CoefficientKind::Samuel);
        assert_eq!(v.postulation, 5);
        assert_eq!(v.values, vec![2, 1]);
        for n in 5..=30 {
            assert_eq!(v.evaluate(n), 2 * n as i128 - 1);
        }
    }

    #[test]
    fn never_stabilizes() {
        let e = extract_coeffs(|n| Ok(1u64 << n.min(60)), 2, CoefficientKind::Samuel, 20).unwrap_err();
        assert_eq!(e, Error::PostulationNotReached { n_max: 20 });
    }
}
