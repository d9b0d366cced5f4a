//! A degree-8 K3 surface in P^5 containing a (10, 3) curve, and a few rational points on it.

use curvelink::algebra::PrimeField;
use curvelink::geometry::{k3_with_curve, rational_points_dim0};
use curvelink::groebner::Ideal;
use curvelink::hilbert::{hilbert_profile, HilbertSeries};
use curvelink::rng;

fn main() -> curvelink::Result<()> {
    let field = PrimeField::new(10007)?;
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let k3 = k3_with_curve(field, seed)?;
    let hs = HilbertSeries::of(&k3.surface);
    println!("surface: dimension {}, degree {}", hs.projective_dim(), hs.degree());
    let prof = hilbert_profile(&k3.curve, None)?;
    println!("curve: degree {}, genus {}", prof.degree, prof.pa);

    // cut the surface by two random hyperplanes and list the rational points
    let ring = k3.surface.ring();
    let mut r = rng::stream(seed, "k3-example");
    let planes = (0..2).map(|_| ring.linear_form(&rng::residues(&mut r, field, 6)));
    let slice = Ideal::new(ring, k3.surface.gens().iter().cloned().chain(planes).collect());
    let pts = rational_points_dim0(&slice)?;
    println!("{} of the 8 slice points are rational: {pts:?}", pts.len());
    Ok(())
}
