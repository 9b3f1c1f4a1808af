//! Lengths of Artinian quotients, colon ideals and saturations in a ring
//! document.
//!
//! ```not_rust
//! cargo run --example lengths
//! ```

use hilbcoeff::groebner::IdealHandle;
use hilbcoeff::parse::{parse_document, parse_poly, parse_poly_list};

fn main() -> hilbcoeff::error::Result<()> {
    let doc = parse_document(include_str!("idealization.ring"), Default::default())?;
    let ring = &doc.ring;
    let pr = ring.poly_ring();
    let m = IdealHandle::maximal(ring);

    println!("ring: {}", doc.to_text().replace('\n', " "));
    println!("dim R = {}", ring.krull_dim()?);
    println!("l(H^0_m(R)) = {}", ring.h0_length()?);

    for k in 1..=4 {
        println!("l(R/m^{k}) = {}", m.power(k)?.length()?);
    }

    let q = IdealHandle::new(ring, parse_poly_list("x^2, y^2", pr)?)?;
    println!(
        "Q = (x^2, y^2): l(R/Q) = {}, parameter ideal: {}",
        q.length()?,
        q.is_parameter()?
    );

    let z = parse_poly("z", pr)?;
    let zero = IdealHandle::zero(ring);
    println!(
        "0 : z = {:?}",
        zero.colon(&z)?
            .generators()
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
    );
    println!("(x) : y^inf = {:?}", {
        let xi = IdealHandle::new(ring, parse_poly_list("x", pr)?)?;
        xi.saturation(&parse_poly("y", pr)?)?
            .generators()
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
    });
    Ok(())
}
