//! The Grassmannian `G(2,6) ⊂ P^14` and its linear sections.

use crate::algebra::PrimeField;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::hilbert::HilbertSeries;
use crate::poly::{MultiPoly, PolyRing};
use crate::rng;

/// Index of the Plücker coordinate `p_ij`, `i < j < 6`, in lexicographic order.
pub(crate) fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < 6);
    (0..i).map(|a| 5 - a).sum::<usize>() + (j - i - 1)
}

/// The fifteen relations `p_ij p_kl - p_ik p_jl + p_il p_jk` for `i < j < k < l`.
pub fn plucker_relations(field: PrimeField) -> Result<(PolyRing, Vec<MultiPoly>)> {
    let ring = PolyRing::new(field, 15)?;
    let p = |a: usize, b: usize| ring.var(pair_index(a, b));
    let mut rels = Vec::with_capacity(15);
    for i in 0..6 {
        for j in i + 1..6 {
            for k in j + 1..6 {
                for l in k + 1..6 {
                    rels.push(&(&(&p(i, j) * &p(k, l)) - &(&p(i, k) * &p(j, l))) + &(&p(i, l) * &p(j, k)));
                }
            }
        }
    }
    Ok((ring, rels))
}

/// Pull-back of the Plücker relations along a random linear embedding `P^7 → P^14`.
///
/// Fails with [`Error::UnluckySample`] when the section is not a curve.
pub fn grassmann_slice(field: PrimeField, seed: u64) -> Result<Ideal> {
    let (_, rels) = plucker_relations(field)?;
    let target = PolyRing::new(field, 8)?;
    let mut rng = rng::stream(seed, "grassmann-slice");
    let images: Vec<MultiPoly> = (0..15).map(|_| target.linear_form(&rng::residues(&mut rng, field, 8))).collect();
    let ideal = Ideal::new(target, rels.iter().map(|r| r.substitute(&images)).collect());
    let dim = HilbertSeries::of(&ideal).projective_dim();
    if dim != 1 {
        return Err(Error::UnluckySample(format!("linear section has dimension {dim}")));
    }
    Ok(ideal)
}
