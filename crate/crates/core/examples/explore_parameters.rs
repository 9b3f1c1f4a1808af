//! Sweeps seeded random parameter ideals of the quadric pair: the observed
//! sets Λ_1(R) and Λ_1^K, and the probe of I(Q;R).
//!
//! ```not_rust
//! cargo run --release --example explore_parameters
//! ```

use hilbcoeff::explorer::{buchsbaum_probe, explore_lambda, explore_module_lambda, SampleSet, SamplerConfig};
use hilbcoeff::groebner::IdealHandle;
use hilbcoeff::hilbert::{ModuleSpec, DEFAULT_N_MAX};
use hilbcoeff::parse::parse_document;

fn main() -> hilbcoeff::error::Result<()> {
    let doc = parse_document(include_str!("quadric_pair.ring"), Default::default())?;
    let m = IdealHandle::maximal(&doc.ring);
    let cfg = SamplerConfig {
        seed: 2024,
        sample_count: 20,
        power_range: 1..=2,
        ..Default::default()
    };
    let samples = SampleSet::sampled(&doc.ring, &cfg, Some(&m))?;
    println!("{}", samples.family);

    let lambda = explore_module_lambda(&ModuleSpec::Ring, 1, &samples, DEFAULT_N_MAX)?;
    println!(
        "{}: {:?} ({:?})",
        lambda.target, lambda.observed_set, lambda.classification
    );

    let relative = explore_lambda(&m, 1, &samples, DEFAULT_N_MAX)?;
    println!("{}: {:?}", relative.target, relative.observed_set);

    let probe = buchsbaum_probe(&m, &samples, DEFAULT_N_MAX)?;
    println!("I(Q;R) over the samples: {:?}", probe.observed_set);
    for c in &probe.checks {
        println!("  {}: {}/{}", c.name, c.held, c.held + c.violated);
    }
    Ok(())
}
