//! Gröbner bases of the twisted cubic under two orders, and an ideal quotient.
//!
//! ```text
//! cargo run --example groebner
//! ```

use curvelink::algebra::PrimeField;
use curvelink::groebner::{ideal_quotient, Ideal};
use curvelink::poly::{parse_poly, MonomialOrder, PolyRing};

fn main() -> curvelink::Result<()> {
    let r = PolyRing::new(PrimeField::new(10007)?, 4)?;
    let p = |s: &str| parse_poly(r, s);
    let tc = Ideal::new(r, vec![p("x0*x2 - x1^2")?, p("x1*x3 - x2^2")?, p("x0*x3 - x1*x2")?]);

    for (name, order) in [("degrevlex", MonomialOrder::Degrevlex), ("x0 eliminated", MonomialOrder::Elimination { eliminate: 1 })] {
        let gb = tc.gb_with(order);
        println!("{name}:");
        for (g, lead) in gb.elements().iter().zip(gb.leads()) {
            println!("  lead {lead:?}  {g}");
        }
    }

    // two quadrics through the cubic cut it out together with a line
    let ci = Ideal::new(r, tc.gens()[..2].to_vec());
    let residual = ideal_quotient(&ci, &tc)?;
    println!("(q1, q2) : I_C = {:?}", residual.gens().iter().map(|g| g.to_string()).collect::<Vec<_>>());
    println!("x1*x2^5 in I_C: {}", tc.contains(&p("x1*x2^5 - x0*x2^4*x3")?));
    Ok(())
}
