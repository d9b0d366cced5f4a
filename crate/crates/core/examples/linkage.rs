//! Links a rational quartic in P^3 by a quadric and a cubic to a pair of skew lines.

use curvelink::algebra::PrimeField;
use curvelink::groebner::Ideal;
use curvelink::liaison::{link, LiaisonSpec, LinkOptions};
use curvelink::poly::{parse_poly, PolyRing};

fn main() -> curvelink::Result<()> {
    let r = PolyRing::new(PrimeField::new(10007)?, 4)?;
    let gens = ["x0*x3 - x1*x2", "x1^3 - x0^2*x2", "x2^3 - x1*x3^2", "x0*x2^2 - x1^2*x3"];
    let c = Ideal::new(r, gens.iter().map(|s| parse_poly(r, s)).collect::<Result<_, _>>()?);
    let spec = LiaisonSpec::new(3, "2,3".parse()?, 4, 0)?;
    let res = link(&c, &spec, 0, LinkOptions { expect_smooth: false, ..LinkOptions::default() })?;
    println!("expected residual: {:?}", res.numerics);
    for claim in res.claims() {
        println!("  {:<34} expected {:>6} computed {:>6}", claim.name, claim.expected.to_string(), claim.computed.to_string());
    }
    Ok(())
}
