//! How e_0 and e_1 of I^k depend on k, in a polynomial ring and in a
//! semigroup ring.
//!
//! ```not_rust
//! cargo run --example power_scaling
//! ```

use hilbcoeff::explorer::{polynomial_power_scaling, semigroup_power_scaling};
use hilbcoeff::groebner::IdealHandle;
use hilbcoeff::hilbert::{ModuleSpec, DEFAULT_N_MAX};
use hilbcoeff::parse::parse_document;
use hilbcoeff::semigroup::{NumericalSemigroup, SemigroupIdeal};

fn main() -> hilbcoeff::error::Result<()> {
    let doc = parse_document(include_str!("poly2.ring"), Default::default())?;
    let m = IdealHandle::maximal(&doc.ring);
    let report = polynomial_power_scaling(&m, &ModuleSpec::Ring, 3, DEFAULT_N_MAX)?;
    for row in &report.rows {
        println!("k[x,y], m^{}: (e_0, e_1) = ({}, {})", row.k, row.e0, row.e1);
    }

    let s = NumericalSemigroup::new(&[3, 4, 5])?;
    let max = SemigroupIdeal::from_gens(&s, s.generators())?;
    let report = semigroup_power_scaling(&max, &s.as_ideal(), 4, DEFAULT_N_MAX)?;
    for row in &report.rows {
        println!("{s}, m^{}: (e_0, e_1) = ({}, {})", row.k, row.e0, row.e1);
    }
    Ok(())
}
