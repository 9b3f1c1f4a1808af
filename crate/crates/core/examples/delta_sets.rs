//! The sets Δ^K and Δ_R of a numerical semigroup ring, computed over every
//! oversemigroup, with the witness ideals that realize each value.
//!
//! ```not_rust
//! cargo run --example delta_sets
//! ```

use hilbcoeff::semigroup::{delta_sets, oversemigroups, NumericalSemigroup, SemigroupIdeal, DEFAULT_GAP_CAP};

fn main() -> hilbcoeff::error::Result<()> {
    let s = NumericalSemigroup::new(&[4, 6, 9])?;
    let over = oversemigroups(&s, DEFAULT_GAP_CAP)?;
    println!("{s} has {} oversemigroups", over.len());

    for k in [s.generators().to_vec(), vec![6, 8, 9]] {
        let k = SemigroupIdeal::from_gens(&s, &k)?;
        let report = delta_sets(&k, DEFAULT_GAP_CAP)?;
        println!("K = {:?} (l(R/K) = {})", report.k, report.colength_k);
        println!("  Delta^K = {:?}, expected sup {}", report.delta_k, report.sup_expected);
        println!("  Delta_R = {:?}", report.delta_r);
        for w in &report.witnesses {
            println!(
                "    B = {:?}: {} (g_1 of witness {})",
                w.generators, w.delta_k, w.g1_witness
            );
        }
        println!("  checks hold: {}", report.all_hold());
    }
    Ok(())
}
