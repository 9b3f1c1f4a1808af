//! e_1 of ideals in a numerical semigroup ring, once from the blow-up and once
//! by interpolating the Hilbert–Samuel function.
//!
//! ```not_rust
//! cargo run --example semigroup_blowup
//! ```

use hilbcoeff::hilbert::DEFAULT_N_MAX;
use hilbcoeff::semigroup::{e1_interpolated, e1_via_blowup, minimal_reduction, NumericalSemigroup, SemigroupIdeal};

fn main() -> hilbcoeff::error::Result<()> {
    for gens in [&[3, 4, 5][..], &[4, 6, 9], &[5, 7, 11]] {
        let s = NumericalSemigroup::new(gens)?;
        println!("{s}: gaps {:?}, Frobenius {}", s.gaps(), s.frobenius());
        let r = s.as_ideal();
        for ideal in [s.generators().to_vec(), vec![s.multiplicity() * 2, s.conductor() + 1]] {
            let i = SemigroupIdeal::from_gens(&s, &ideal)?;
            let red = minimal_reduction(&i)?;
            let blow = e1_via_blowup(&i, &r)?;
            let fit = e1_interpolated(&i, &r, DEFAULT_N_MAX)?;
            println!(
                "  I = {:?}: reduction number {}, e_0 = {}, e_1 blow-up {} / fit {}",
                i.generators(),
                red.number,
                red.e0,
                blow,
                fit.get(1)
            );
        }
    }
    Ok(())
}
