//! Reduced Gröbner bases in lex and degrevlex, with the Buchberger criterion
//! checked on the result.
//!
//! ```not_rust
//! cargo run --example groebner_basis
//! ```

use std::sync::Arc;

use hilbcoeff::field::PrimeField;
use hilbcoeff::groebner::{GroebnerBasis, DEFAULT_PAIR_BUDGET};
use hilbcoeff::monomial::MonomialOrder;
use hilbcoeff::parse::parse_poly_list;
use hilbcoeff::poly::PolyRing;

fn main() -> hilbcoeff::error::Result<()> {
    let field = PrimeField::new(32003)?;
    let names = vec!["x".to_string(), "y".to_string(), "z".to_string()];
    for order in [MonomialOrder::Lex, MonomialOrder::DegRevLex] {
        let ring = Arc::new(PolyRing::new(names.clone(), field, order)?);
        // the twisted cubic, parametrized
        let gens = parse_poly_list("y - x^2, z - x^3", &ring)?;
        let gb = GroebnerBasis::compute(&ring, &gens, DEFAULT_PAIR_BUDGET)?;
        println!("{order:?}:");
        for g in gb.polys() {
            println!("  {g}");
        }
        println!(
            "  reduced: {}, S-pairs reduce to 0: {}",
            gb.is_reduced(),
            gb.satisfies_buchberger_criterion()
        );
    }
    Ok(())
}
