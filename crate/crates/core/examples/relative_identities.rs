//! The K-relative coefficients g^K(Q) and fiber coefficients f^K(Q), and the
//! identities tying them to e(Q,R) and e(Q,K).
//!
//! ```not_rust
//! cargo run --example relative_identities
//! ```

use hilbcoeff::groebner::IdealHandle;
use hilbcoeff::hilbert::{check_identities, IdealPair, DEFAULT_N_MAX};
use hilbcoeff::parse::parse_document;

fn main() -> hilbcoeff::error::Result<()> {
    for (name, text) in [
        ("k[x,y]", include_str!("poly2.ring")),
        ("quadric pair", include_str!("quadric_pair.ring")),
    ] {
        let doc = parse_document(text, Default::default())?;
        let m = IdealHandle::maximal(&doc.ring);
        let report = check_identities(&IdealPair::new(m.clone(), m)?, DEFAULT_N_MAX)?;
        println!("{name}, K = Q = m");
        println!("  e(Q,R) = {:?}", report.e_ring.values);
        println!("  e(Q,K) = {:?}", report.e_k.values);
        println!("  g^K(Q) = {:?}", report.g.values);
        println!("  f^K(Q) = {:?}", report.f.values);
        for c in &report.checks {
            println!(
                "  [{}] {}: {} = {}",
                if c.holds { "ok" } else { "FAIL" },
                c.name,
                c.lhs,
                c.rhs
            );
        }
    }
    Ok(())
}
