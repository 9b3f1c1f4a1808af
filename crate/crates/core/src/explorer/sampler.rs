use std::ops::RangeInclusive;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{IdealHandle, RingPresentation};
use crate::monomial::Monomial;
use crate::poly::Polynomial;

/// How parameter ideals `(ℓ_1^{a_1}, ..., ℓ_d^{a_d})` are drawn.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplerConfig {
    pub seed: u64,
    pub sample_count: usize,
    /// Nonzero coefficients of the linear forms; zero is always allowed too.
    pub coefficient_pool: Vec<i64>,
    pub power_range: RangeInclusive<u32>,
    /// Keep only `Q ⊆ K` (the `δ` sets instead of `Λ`).
    pub require_subset_of_k: bool,
    /// Draws per sample before giving up.
    pub max_retries: usize,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig {
            seed: 0,
            sample_count: 10,
            coefficient_pool: vec![1, 2, 3],
            power_range: 1..=1,
            require_subset_of_k: false,
            max_retries: 50,
        }
    }
}

impl SamplerConfig {
    pub fn family(&self) -> String {
        format!(
            "powers of random linear forms: coefficients from {{0}} ∪ {:?}, exponents {}..={}{}",
            self.coefficient_pool,
            self.power_range.start(),
            self.power_range.end(),
            if self.require_subset_of_k {
                ", contained in K"
            } else {
                ""
            }
        )
    }
}

/// Parameter ideals to sweep over, with a description of where they came from.
#[derive(Clone, Debug)]
pub struct SampleSet {
    pub ideals: Vec<IdealHandle>,
    pub family: String,
    pub seed: Option<u64>,
}

impl SampleSet {
    /// A sweep over explicitly chosen ideals.
    pub fn explicit(ideals: Vec<IdealHandle>, family: impl Into<String>) -> Self {
        SampleSet {
            ideals,
            family: family.into(),
            seed: None,
        }
    }

    pub fn sampled(ring: &Arc<RingPresentation>, cfg: &SamplerConfig, k: Option<&IdealHandle>) -> Result<Self> {
        Ok(SampleSet {
            ideals: sample_parameter_ideals(ring, cfg, k)?,
            family: cfg.family(),
            seed: Some(cfg.seed),
        })
    }
}

fn random_form(ring: &Arc<RingPresentation>, pool: &[i64], rng: &mut ChaCha8Rng) -> Polynomial {
    let pr = ring.poly_ring();
    loop {
        let mut form = Polynomial::zero(pr);
        for v in 0..pr.nvars() {
            // index 0 stands for the zero coefficient
            let pick = rng.gen_range(0..=pool.len());
            if pick > 0 {
                let c = pr.field().from_i64(pool[pick - 1]);
                let term = Polynomial::monomial(pr, Monomial::var(pr.nvars(), v), c);
                form = form.add_unchecked(&term);
            }
        }
        if !form.is_zero() {
            return form;
        }
    }
}

fn draw(
    ring: &Arc<RingPresentation>,
    cfg: &SamplerConfig,
    k: Option<&IdealHandle>,
    d: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Option<IdealHandle>> {
    let powers: Vec<u32> = cfg.power_range.clone().collect();
    let gens: Vec<Polynomial> = (0..d)
        .map(|_| {
            let a = *powers.choose(rng).expect("nonempty power range");
            random_form(ring, &cfg.coefficient_pool, rng).pow(a)
        })
        .collect();
    if let Some(k) = k.filter(|_| cfg.require_subset_of_k) {
        for g in &gens {
            if !k.contains(g)? {
                return Ok(None);
            }
        }
    }
    let q = IdealHandle::new(ring, gens)?;
    Ok(q.is_parameter()?.then_some(q))
}

/// Draws `cfg.sample_count` parameter ideals. Sample `i` uses its own RNG
/// stream of the master seed, so the list is reproducible and independent of
/// scheduling.
pub fn sample_parameter_ideals(
    ring: &Arc<RingPresentation>,
    cfg: &SamplerConfig,
    k: Option<&IdealHandle>,
) -> Result<Vec<IdealHandle>> {
    let d = ring.krull_dim()?;
    if d == 0 {
        return Err(Error::precondition(
            "a zero-dimensional ring has no parameter ideals to sample",
        ));
    }
    if cfg.coefficient_pool.is_empty() || cfg.power_range.is_empty() || cfg.power_range.start() == &0 {
        return Err(Error::precondition("empty coefficient pool or invalid power range"));
    }
    if cfg.require_subset_of_k && k.is_none() {
        return Err(Error::precondition("sampling inside K needs K"));
    }
    (0..cfg.sample_count)
        .into_par_iter()
        .map(|index| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(index as u64);
            for _ in 0..cfg.max_retries {
                if let Some(q) = draw(ring, cfg, k, d, &mut rng)? {
                    return Ok(q);
                }
            }
            Err(Error::Budget(format!(
                "sample {index}: no parameter ideal in {} draws",
                cfg.max_retries
            )))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_document;

    fn ring(text: &str) -> Arc<RingPresentation> {
        parse_document(text, Default::default()).unwrap().ring
    }

    fn gens(qs: &[IdealHandle]) -> Vec<String> {
        qs.iter()
            .map(|q| {
                q.generators()
                    .iter()
                    .map(|g| g.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            })
            .collect()
    }

    #[test]
    fn reproducible_and_valid() {
        let r = ring("vars x, y;");
        let cfg = SamplerConfig {
            seed: 7,
            sample_count: 8,
            power_range: 1..=2,
            ..Default::default()
        };
        let a = sample_parameter_ideals(&r, &cfg, None).unwrap();
        let b = sample_parameter_ideals(&r, &cfg, None).unwrap();
        assert_eq!(gens(&a), gens(&b));
        for q in &a {
            assert!(q.is_parameter().unwrap());
            assert_eq!(q.generators().len(), 2);
        }
        let other = SamplerConfig { seed: 8, ..cfg };
        assert_ne!(gens(&a), gens(&sample_parameter_ideals(&r, &other, None).unwrap()));
    }

    #[test]
    fn zero_dimensional_ring() {
        let r = ring("vars x; rel x^2;");
        assert!(sample_parameter_ideals(&r, &SamplerConfig::default(), None).is_err());
    }

    #[test]
    fn subsets_of_k() {
        let r = ring("vars x, y;");
        let m2 = IdealHandle::maximal(&r).power(2).unwrap();
        let cfg = SamplerConfig {
            power_range: 1..=3,
            require_subset_of_k: true,
            ..Default::default()
        };
        for q in sample_parameter_ideals(&r, &cfg, Some(&m2)).unwrap() {
            assert!(m2.contains_ideal(&q).unwrap());
        }
    }

    #[test]
    fn quadric_pair_draws_are_parameters() {
        let r = ring("vars x, y, z, w; rel x*z, x*w, y*z, y*w;");
        let cfg = SamplerConfig {
            sample_count: 5,
            ..Default::default()
        };
        for q in sample_parameter_ideals(&r, &cfg, None).unwrap() {
            assert_eq!(q.krull_dim().unwrap(), Some(0));
        }
        let pure = IdealHandle::new(&r, crate::parse::parse_poly_list("x, y", r.poly_ring()).unwrap()).unwrap();
        assert!(!pure.is_parameter().unwrap());
    }
}
