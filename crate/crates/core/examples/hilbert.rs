//! Hilbert function, series and polynomial of an ideal read from a file (twisted cubic by default).
//!
//! ```text
//! cargo run --example hilbert -- [path/to/ideal]
//! ```

use curvelink::groebner::io::{parse_ideal, read_ideal};
use curvelink::hilbert::{hilbert_profile, HilbertSeries};

const TWISTED_CUBIC: &str = "ring p=10007 vars=4\nx0*x2 - x1^2\nx1*x3 - x2^2\nx0*x3 - x1*x2\n";

fn main() -> curvelink::Result<()> {
    let ideal = match std::env::args().nth(1) {
        Some(path) => read_ideal(path.as_ref())?,
        None => parse_ideal(TWISTED_CUBIC)?,
    };
    let hs = HilbertSeries::of(&ideal);
    println!("series numerator {:?}, projective dimension {}, degree {}", hs.numerator(), hs.projective_dim(), hs.degree());
    let prof = hilbert_profile(&ideal, Some(0..=6))?;
    println!("{}", prof.to_json());
    Ok(())
}
