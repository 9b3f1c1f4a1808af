//! Hilbert–Samuel coefficients e_i(Q, M) for the three kinds of module: the
//! ring, a quotient, and an m-primary ideal.
//!
//! ```not_rust
//! cargo run --example samuel_coefficients
//! ```

use hilbcoeff::groebner::IdealHandle;
use hilbcoeff::hilbert::{e_coeffs, ModuleSpec, DEFAULT_N_MAX};
use hilbcoeff::parse::{parse_document, parse_poly_list};

fn main() -> hilbcoeff::error::Result<()> {
    let doc = parse_document(include_str!("poly2.ring"), Default::default())?;
    let ring = &doc.ring;
    let m = IdealHandle::maximal(ring);
    let q = IdealHandle::new(ring, doc.ideal("q23").unwrap().to_vec())?;
    let line = IdealHandle::new(ring, parse_poly_list("y", ring.poly_ring())?)?;

    let modules = [
        ("R", ModuleSpec::Ring),
        ("R/(y)", ModuleSpec::Quotient(line)),
        ("m", ModuleSpec::Ideal(m.clone())),
    ];
    for (qname, q) in [("m", &m), ("(x^2, y^3)", &q)] {
        for (mname, module) in &modules {
            let e = e_coeffs(q, module, DEFAULT_N_MAX)?;
            println!(
                "e(Q = {qname}, M = {mname}) = {:?}  (postulation {})",
                e.values, e.postulation
            );
        }
    }
    Ok(())
}
