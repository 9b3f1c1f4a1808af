use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::IdealHandle;
use crate::hilbert::{binomial, e_coeffs, hs_value, ModuleSpec};
use crate::semigroup::{e1_interpolated, SemigroupIdeal};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnvelopeRow {
    pub n: u32,
    /// `ℓ(M/Q^{n+1}M) - e_0 C(n+r, r)`.
    pub value: i64,
    pub lower: i64,
    pub upper: i64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnvelopeReport {
    pub dim: usize,
    pub e0: i64,
    pub i_m: i64,
    pub rows: Vec<EnvelopeRow>,
}

impl EnvelopeReport {
    pub fn violations(&self) -> impl Iterator<Item = &EnvelopeRow> {
        self.rows.iter().filter(|r| !r.holds)
    }
}

/// `-r C(n+r-1, r-1) I_M ≤ ℓ(M/Q^{n+1}M) - e_0 C(n+r, r) ≤ C(n+r-1, r-1) I_M`
/// for `n = 0..=n_last`.
pub fn check_growth_envelope(
    q: &IdealHandle,
    m: &ModuleSpec,
    i_m: i64,
    n_last: u32,
    n_max: u32,
) -> Result<EnvelopeReport> {
    let r = m.dim(q.ring())?;
    if r == 0 {
        return Err(Error::precondition("the envelope needs dim M ≥ 1"));
    }
    let e0 = e_coeffs(q, m, n_max)?.get(0);
    let rows = (0..=n_last)
        .map(|n| {
            let value = hs_value(q, m, n + 1)? as i128 - e0 as i128 * binomial((n as usize + r) as i128, r as u32);
            let c = binomial((n as usize + r - 1) as i128, (r - 1) as u32) * i_m as i128;
            let lower = -(r as i128) * c;
            Ok(EnvelopeRow {
                n,
                value: value as i64,
                lower: lower as i64,
                upper: c as i64,
                holds: lower <= value && value <= c,
            })
        })
        .collect::<Result<_>>()?;
    Ok(EnvelopeReport { dim: r, e0, i_m, rows })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalingRow {
    pub k: u32,
    pub e0: i64,
    pub e1: i64,
    /// `k^r e_0(I)`.
    pub predicted_e0: i64,
    /// `((r-1) e_0 k^r + (2 e_1 - (r-1) e_0) k^{r-1}) / 2`.
    pub predicted_e1: i64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalingReport {
    pub dim: usize,
    pub rows: Vec<ScalingRow>,
}

impl ScalingReport {
    pub fn all_hold(&self) -> bool {
        self.rows.iter().all(|r| r.holds)
    }
}

/// Compares `(e_0, e_1)(I^k)` from `coeffs(k)` with the closed forms in
/// `k` for `k = 1..=k_max`; the `e_1` form is checked after doubling.
pub fn scaling_report<F>(r: usize, k_max: u32, coeffs: F) -> Result<ScalingReport>
where
    F: Fn(u32) -> Result<(i64, i64)>,
{
    if k_max == 0 {
        return Err(Error::precondition("k_max must be at least 1"));
    }
    let (e0, e1) = coeffs(1)?;
    let (e0, e1, rr) = (e0 as i128, e1 as i128, r as i128);
    let mut rows = Vec::new();
    for k in 1..=k_max {
        let (a, b) = if k == 1 { (e0 as i64, e1 as i64) } else { coeffs(k)? };
        let kk = k as i128;
        let kr = kk.pow(r as u32);
        let kr1 = if r == 0 { 0 } else { kk.pow(r as u32 - 1) };
        let twice = (rr - 1) * e0 * kr + (2 * e1 - (rr - 1) * e0) * kr1;
        rows.push(ScalingRow {
            k,
            e0: a,
            e1: b,
            predicted_e0: (kr * e0) as i64,
            predicted_e1: (twice / 2) as i64,
            holds: a as i128 == kr * e0 && 2 * b as i128 == twice,
        });
    }
    Ok(ScalingReport { dim: r, rows })
}

pub fn polynomial_power_scaling(i: &IdealHandle, m: &ModuleSpec, k_max: u32, n_max: u32) -> Result<ScalingReport> {
    let r = m.dim(i.ring())?;
    scaling_report(r, k_max, |k| {
        let e = e_coeffs(&i.power(k)?, m, n_max)?;
        Ok((e.get(0), e.get(1)))
    })
}

pub fn semigroup_power_scaling(
    i: &SemigroupIdeal,
    m: &SemigroupIdeal,
    k_max: u32,
    n_max: u32,
) -> Result<ScalingReport> {
    scaling_report(1, k_max, |k| {
        let e = e1_interpolated(&i.k_fold(k), m, n_max)?;
        Ok((e.get(0), e.get(1)))
    })
}
