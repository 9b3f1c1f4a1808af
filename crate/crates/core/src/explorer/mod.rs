//! Sweeps over families of parameter ideals: observed value sets of
//! coefficients, checks of the known bounds, and probes of numerical
//! relations that hold for Buchsbaum rings.
//!
//! Everything here is evidence on a finite window of samples, never a proof.
//! Per-sample failures are recorded and the sweep carries on.

mod envelope;
mod sampler;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::IdealHandle;
use crate::hilbert::{binomial, e_coeffs, g_coeffs, i_invariant, IdealPair, ModuleSpec};

pub use envelope::{
    check_growth_envelope, polynomial_power_scaling, scaling_report, semigroup_power_scaling, EnvelopeReport,
    EnvelopeRow, ScalingReport, ScalingRow,
};
pub use sampler::{sample_parameter_ideals, SampleSet, SamplerConfig};

/// Advisory shape of the observed values, judged only on the window.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    Empty,
    Constant,
    BoundedInWindow,
    GrowingInWindow,
}

impl Classification {
    /// `Growing` when `|v|` strictly increases along the sample order.
    pub fn of(values: &[i64]) -> Self {
        match values {
            [] => Classification::Empty,
            [first, rest @ ..] if rest.iter().all(|v| v == first) => Classification::Constant,
            _ if values.windows(2).all(|w| w[0].abs() < w[1].abs()) => Classification::GrowingInWindow,
            _ => Classification::BoundedInWindow,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleRecord {
    pub index: usize,
    pub generators: String,
    pub value: Option<i64>,
    pub details: BTreeMap<String, i64>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub index: usize,
    pub generators: String,
    pub message: String,
}

/// How often a diagnostic relation held across the samples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTally {
    pub name: String,
    pub held: usize,
    pub violated: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExplorationReport {
    pub target: String,
    pub family: String,
    pub seed: Option<u64>,
    pub samples: Vec<SampleRecord>,
    /// Successful values in sample order.
    pub observed: Vec<i64>,
    pub observed_set: Vec<i64>,
    pub violations: Vec<Violation>,
    pub checks: Vec<CheckTally>,
    pub classification: Classification,
}

impl ExplorationReport {
    pub fn errors(&self) -> impl Iterator<Item = &SampleRecord> {
        self.samples.iter().filter(|s| s.error.is_some())
    }
}

/// What one sample evaluation produced.
#[derive(Default)]
struct Outcome {
    value: i64,
    details: BTreeMap<String, i64>,
    violations: Vec<String>,
}

fn describe(q: &IdealHandle) -> String {
    let gens: Vec<String> = q.generators().iter().map(|g| g.to_string()).collect();
    format!("({})", gens.join(", "))
}

/// Evaluates every sample in parallel and merges in sample order.
fn sweep<F>(target: String, samples: &SampleSet, eval: F) -> ExplorationReport
where
    F: Fn(&IdealHandle) -> Result<Outcome> + Sync,
{
    let outcomes: Vec<Result<Outcome>> = samples.ideals.par_iter().map(&eval).collect();
    let mut records = Vec::new();
    let mut violations = Vec::new();
    let mut observed = Vec::new();
    for (index, (q, out)) in samples.ideals.iter().zip(outcomes).enumerate() {
        let generators = describe(q);
        match out {
            Ok(o) => {
                observed.push(o.value);
                violations.extend(o.violations.into_iter().map(|message| Violation {
                    index,
                    generators: generators.clone(),
                    message,
                }));
                records.push(SampleRecord {
                    index,
                    generators,
                    value: Some(o.value),
                    details: o.details,
                    error: None,
                });
            }
            Err(e) => records.push(SampleRecord {
                index,
                generators,
                value: None,
                details: BTreeMap::new(),
                error: Some(e.to_string()),
            }),
        }
    }
    let mut observed_set = observed.clone();
    observed_set.sort_unstable();
    observed_set.dedup();
    ExplorationReport {
        target,
        family: samples.family.clone(),
        seed: samples.seed,
        samples: records,
        classification: Classification::of(&observed),
        observed,
        observed_set,
        violations,
        checks: Vec::new(),
    }
}

/// Observed `g_i^K(Q)` over the samples: `Λ_i^K`, or `δ_i^K` when the samples
/// lie in `K`. Each record also carries `e_i(Q,R)`.
pub fn explore_lambda(k: &IdealHandle, i: usize, samples: &SampleSet, n_max: u32) -> Result<ExplorationReport> {
    let d = k.ring().krull_dim()?;
    if i == 0 || i > d {
        return Err(Error::precondition(format!("index {i} outside 1..={d}")));
    }
    let inside = samples.ideals.iter().all(|q| k.contains_ideal(q).unwrap_or(false));
    let name = if inside { "delta" } else { "Lambda" };
    Ok(sweep(format!("{name}_{i}^K"), samples, |q| {
        let pair = IdealPair::new(k.clone(), q.clone())?;
        let g = g_coeffs(&pair, n_max)?;
        let e = e_coeffs(q, &ModuleSpec::Ring, n_max)?;
        Ok(Outcome {
            value: g.get(i),
            details: BTreeMap::from([(format!("e_{i}(Q,R)"), e.get(i))]),
            ..Default::default()
        })
    }))
}

/// Observed `e_i(Q,M)` over the samples: the set `Λ_i(M)`.
pub fn explore_module_lambda(m: &ModuleSpec, i: usize, samples: &SampleSet, n_max: u32) -> Result<ExplorationReport> {
    Ok(sweep(format!("Lambda_{i}(M)"), samples, |q| {
        let e = e_coeffs(q, m, n_max)?;
        if i > e.degree {
            return Err(Error::precondition(format!("index {i} exceeds dim M = {}", e.degree)));
        }
        Ok(Outcome {
            value: e.get(i),
            ..Default::default()
        })
    }))
}

/// `-Σ_{i=1}^{d-1} C(d-2, i-1) ℓ(H^i_m(R)) - ℓ(R/K) ≤ g_1^K(Q) ≤ 0`, with
/// `lh[j] = ℓ(H^{j+1}_m(R))` supplied for `j = 0..d-2`.
pub fn check_g1_bounds(k: &IdealHandle, samples: &SampleSet, lh: &[i64], n_max: u32) -> Result<ExplorationReport> {
    let d = k.ring().krull_dim()?;
    if d < 2 {
        return Err(Error::precondition("the g_1 bounds need dim R ≥ 2"));
    }
    if lh.len() != d - 1 {
        return Err(Error::precondition(format!(
            "expected {} cohomology lengths ℓ(H^1)..ℓ(H^{}), got {}",
            d - 1,
            d - 1,
            lh.len()
        )));
    }
    if lh.iter().any(|&v| v < 0) {
        return Err(Error::precondition("negative cohomology length"));
    }
    let colength = k.finite_length("K")? as i64;
    let lower = -(1..d)
        .map(|i| binomial((d - 2) as i128, (i - 1) as u32) as i64 * lh[i - 1])
        .sum::<i64>()
        - colength;
    Ok(sweep("g_1^K bounds".into(), samples, |q| {
        let pair = IdealPair::new(k.clone(), q.clone())?;
        let g1 = g_coeffs(&pair, n_max)?.get(1);
        let mut violations = Vec::new();
        if g1 > 0 {
            violations.push(format!("g_1 = {g1} > 0"));
        }
        if g1 < lower {
            violations.push(format!("g_1 = {g1} < {lower}"));
        }
        Ok(Outcome {
            value: g1,
            details: BTreeMap::from([("lower".to_string(), lower), ("upper".to_string(), 0)]),
            violations,
        })
    }))
}

/// `|e_1(Q,M)| ≤ I_M` per sample.
pub fn check_e1_bound(m: &ModuleSpec, i_m: i64, samples: &SampleSet, n_max: u32) -> Result<ExplorationReport> {
    Ok(sweep("|e_1(Q,M)| <= I(M)".into(), samples, |q| {
        let e1 = e_coeffs(q, m, n_max)?.get(1);
        let violations = if e1.abs() > i_m {
            vec![format!("|e_1| = {} > I(M) = {i_m}", e1.abs())]
        } else {
            Vec::new()
        };
        Ok(Outcome {
            value: e1,
            details: BTreeMap::new(),
            violations,
        })
    }))
}

/// Per sample: `I(Q;R)`, `I(Q;m)`, `ℓ(R/QK)`, `ℓ(Q/QK)`. Tallies whether
/// `I(Q;R)` is constant, `I(Q;m) - I(Q;R) = d - 1`, `ℓ(Q/QK) = d ℓ(R/K)`, and
/// `ℓ(R/QK) = e_0(Q,R) + I(Q;R) + d ℓ(R/K)`. The value is `I(Q;R)`.
pub fn buchsbaum_probe(k: &IdealHandle, samples: &SampleSet, n_max: u32) -> Result<ExplorationReport> {
    let ring = k.ring().clone();
    let d = ring.krull_dim()? as i64;
    let colength = k.finite_length("K")? as i64;
    let m = ModuleSpec::Ideal(IdealHandle::maximal(&ring));
    let mut report = sweep("I(Q;R)".into(), samples, |q| {
        let ir = i_invariant(q, &ModuleSpec::Ring, n_max)?;
        let im = i_invariant(q, &m, n_max)?;
        let qk = q.product(k)?;
        let l_r_qk = qk.finite_length("QK")? as i64;
        let l_q_qk = q.length_over(&qk)? as i64;
        let mut violations = Vec::new();
        if im.value - ir.value != d - 1 {
            violations.push(format!("I(Q;m) - I(Q;R) = {} ≠ d - 1", im.value - ir.value));
        }
        if l_q_qk != d * colength {
            violations.push(format!("l(Q/QK) = {l_q_qk} ≠ d l(R/K) = {}", d * colength));
        }
        if l_r_qk != ir.e0 + ir.value + d * colength {
            violations.push(format!("l(R/QK) = {l_r_qk} ≠ e_0 + I(Q;R) + d l(R/K)"));
        }
        Ok(Outcome {
            value: ir.value,
            details: BTreeMap::from([
                ("I(Q;m)".to_string(), im.value),
                ("e_0(Q,R)".to_string(), ir.e0),
                ("l(R/QK)".to_string(), l_r_qk),
                ("l(Q/QK)".to_string(), l_q_qk),
            ]),
            violations,
        })
    });
    let ok: Vec<&SampleRecord> = report.samples.iter().filter(|s| s.error.is_none()).collect();
    let tally = |name: &str, holds: &dyn Fn(&SampleRecord) -> bool| CheckTally {
        name: name.to_string(),
        held: ok.iter().filter(|s| holds(s)).count(),
        violated: ok.iter().filter(|s| !holds(s)).count(),
    };
    let first = report.observed.first().copied();
    report.checks = vec![
        tally("I(Q;R) constant", &|s| s.value == first),
        tally("I(Q;m) - I(Q;R) = d - 1", &|s| {
            s.details["I(Q;m)"] - s.value.unwrap() == d - 1
        }),
        tally("l(Q/QK) = d l(R/K)", &|s| s.details["l(Q/QK)"] == d * colength),
        tally("l(R/QK) = e_0(Q,R) + I(Q;R) + d l(R/K)", &|s| {
            s.details["l(R/QK)"] == s.details["e_0(Q,R)"] + s.value.unwrap() + d * colength
        }),
    ];
    Ok(report)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::groebner::RingPresentation;
    use crate::hilbert::DEFAULT_N_MAX;
    use crate::parse::{parse_document, parse_poly_list};

    fn ring(text: &str) -> Arc<RingPresentation> {
        parse_document(text, Default::default()).unwrap().ring
    }

    fn ideal(r: &Arc<RingPresentation>, text: &str) -> IdealHandle {
        IdealHandle::new(r, parse_poly_list(text, r.poly_ring()).unwrap()).unwrap()
    }

    #[test]
    fn classification() {
        assert_eq!(Classification::of(&[]), Classification::Empty);
        assert_eq!(Classification::of(&[-1, -1, -1]), Classification::Constant);
        assert_eq!(Classification::of(&[-1, -2, -3]), Classification::GrowingInWindow);
        assert_eq!(Classification::of(&[-1, -2, -1]), Classification::BoundedInWindow);
    }

    #[test]
    fn plane_lambda_is_minus_one() {
        let r = ring("vars x, y;");
        let m = IdealHandle::maximal(&r);
        let cfg = SamplerConfig {
            seed: 3,
            sample_count: 10,
            ..Default::default()
        };
        let samples = SampleSet::sampled(&r, &cfg, None).unwrap();
        let rep = explore_lambda(&m, 1, &samples, DEFAULT_N_MAX).unwrap();
        assert_eq!(rep.observed_set, vec![-1]);
        assert_eq!(rep.classification, Classification::Constant);
        assert!(rep.samples.iter().all(|s| s.details["e_1(Q,R)"] == 0));
    }

    #[test]
    fn idealization_grows() {
        let r = ring("vars x, y, z; rel z^2, x*z;");
        let qs = (1..=3).map(|n| ideal(&r, &format!("x^{n}, y^{n}"))).collect();
        let samples = SampleSet::explicit(qs, "(x^n, y^n)");
        let rep = explore_module_lambda(&ModuleSpec::Ring, 1, &samples, DEFAULT_N_MAX).unwrap();
        assert_eq!(rep.observed, vec![-1, -2, -3]);
        assert_eq!(rep.classification, Classification::GrowingInWindow);
        let bound = check_e1_bound(&ModuleSpec::Ring, 1, &samples, DEFAULT_N_MAX).unwrap();
        assert_eq!(bound.violations.len(), 2);
    }

    #[test]
    fn plane_bounds_and_probe() {
        let r = ring("vars x, y;");
        let m = IdealHandle::maximal(&r);
        let samples = SampleSet::sampled(&r, &SamplerConfig::default(), None).unwrap();
        let rep = check_g1_bounds(&m, &samples, &[0], DEFAULT_N_MAX).unwrap();
        assert!(rep.violations.is_empty());
        let probe = buchsbaum_probe(&m, &samples, DEFAULT_N_MAX).unwrap();
        assert!(probe.errors().next().is_none());
        // Cohen–Macaulay: I(Q;m) - I(Q;R) = d - 1 still holds for linear Q
        assert!(probe.checks.iter().all(|c| c.violated == 0), "{:?}", probe.checks);
    }
}
