//! I(Q;M) = l(M/QM) - e_0(Q,M) along a family of parameter ideals, and the
//! closed formula for standard parameter ideals.
//!
//! ```not_rust
//! cargo run --example i_invariant
//! ```

use hilbcoeff::groebner::IdealHandle;
use hilbcoeff::hilbert::{
    e_coeffs, i_invariant, standard_coeff_prediction, IInvariantRecord, ModuleSpec, PredictionTarget, DEFAULT_N_MAX,
};
use hilbcoeff::parse::{parse_document, parse_poly_list};

fn main() -> hilbcoeff::error::Result<()> {
    // A = k[x,y,z]/(z^2, xz) is not generalized Cohen–Macaulay: I(Q;A) grows.
    let doc = parse_document(include_str!("idealization.ring"), Default::default())?;
    let mut record = IInvariantRecord::default();
    for n in 1..=4 {
        let spec = format!("x^{n}, y^{n}");
        let q = IdealHandle::new(&doc.ring, parse_poly_list(&spec, doc.ring.poly_ring())?)?;
        let inv = i_invariant(&q, &ModuleSpec::Ring, DEFAULT_N_MAX)?;
        let e = e_coeffs(&q, &ModuleSpec::Ring, DEFAULT_N_MAX)?;
        println!(
            "Q = ({spec}): l(A/Q) = {}, e = {:?}, I(Q;A) = {}",
            inv.length, e.values, inv.value
        );
        record.push(spec, inv.value);
    }
    println!("largest I(Q;A) seen: {:?}", record.estimate);

    // The quadric pair is Buchsbaum with l(H^0) = 0, l(H^1) = 1.
    let doc = parse_document(include_str!("quadric_pair.ring"), Default::default())?;
    let q = IdealHandle::new(&doc.ring, doc.ideal("q").unwrap().to_vec())?;
    let e = e_coeffs(&q, &ModuleSpec::Ring, DEFAULT_N_MAX)?;
    let lh = [0, 1];
    println!(
        "quadric pair: e = {:?}; predicted e_1 = {}, e_2 = {}; I(Q;R) = {}",
        e.values,
        standard_coeff_prediction(&lh, PredictionTarget::E(1))?,
        standard_coeff_prediction(&lh, PredictionTarget::E(2))?,
        i_invariant(&q, &ModuleSpec::Ring, DEFAULT_N_MAX)?.value
    );
    Ok(())
}
