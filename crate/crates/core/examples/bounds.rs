//! Bounds on g_1^K(Q) and |e_1(Q,M)| over samples, and the growth envelope of
//! l(M/Q^{n+1}M) around e_0 C(n+r, r).
//!
//! ```not_rust
//! cargo run --release --example bounds
//! ```

use hilbcoeff::explorer::{check_e1_bound, check_g1_bounds, check_growth_envelope, SampleSet, SamplerConfig};
use hilbcoeff::groebner::IdealHandle;
use hilbcoeff::hilbert::{ModuleSpec, DEFAULT_N_MAX};
use hilbcoeff::parse::parse_document;

fn main() -> hilbcoeff::error::Result<()> {
    let doc = parse_document(include_str!("quadric_pair.ring"), Default::default())?;
    let m = IdealHandle::maximal(&doc.ring);
    let samples = SampleSet::sampled(&doc.ring, &SamplerConfig::default(), Some(&m))?;

    let g1 = check_g1_bounds(&m, &samples, &[1], DEFAULT_N_MAX)?;
    println!(
        "g_1^m(Q) observed {:?}, {} violations",
        g1.observed_set,
        g1.violations.len()
    );
    let e1 = check_e1_bound(&ModuleSpec::Ring, 1, &samples, DEFAULT_N_MAX)?;
    println!(
        "e_1(Q,R) observed {:?}, {} violations of |e_1| <= 1",
        e1.observed_set,
        e1.violations.len()
    );

    let q = IdealHandle::new(&doc.ring, doc.ideal("q").unwrap().to_vec())?;
    let env = check_growth_envelope(&q, &ModuleSpec::Ring, 1, 6, DEFAULT_N_MAX)?;
    println!("envelope, e_0 = {}, I_M = {}:", env.e0, env.i_m);
    for row in &env.rows {
        println!("  n = {}: {} <= {} <= {}", row.n, row.lower, row.value, row.upper);
    }
    Ok(())
}
