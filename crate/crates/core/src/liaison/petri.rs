//! Maximal-rank checks on the curve side of a link, and the uninodal choice of linking forms.

use serde::{Deserialize, Serialize};

use crate::algebra::Matrix;
use crate::error::{Error, Result};
use crate::geometry::{normalize_point, random_combinations};
use crate::groebner::Ideal;
use crate::hilbert::generated_in_degree;
use crate::poly::MultiPoly;
use crate::rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PetriReport {
    pub f: u32,
    /// `(r + 1) · dim (I_C)_f`.
    pub source: usize,
    /// `dim (I_C)_{f+1}`.
    pub target: usize,
    pub rank: usize,
    pub full: bool,
}

/// Rank of `μ: R_1 ⊗ (I_C)_f → (I_C)_{f+1}`. Defined for the linkage type where
/// `f (r - 2) = r + 2`; full rank there is equivalent to the Petri condition for the
/// residual curve.
pub fn petri_rank(i_c: &Ideal, f: u32) -> Result<PetriReport> {
    let r = i_c.ring().nvars as i64 - 1;
    if f as i64 * (r - 2) != r + 2 {
        return Err(Error::Precondition(format!("f (r - 2) = r + 2 fails for f = {f}, r = {r}")));
    }
    let g = generated_in_degree(i_c, f);
    Ok(PetriReport {
        f,
        source: g.source_dim,
        target: g.dim_next,
        rank: g.mu_rank,
        full: g.mu_rank == g.source_dim.min(g.dim_next),
    })
}

/// Three cubics through `C` for which the residual curve acquires a node at `x`:
/// the unique cubic of `(I_C)_3` singular at `x`, plus two general cubics through `x`.
pub fn uninodal_subspace(i_c: &Ideal, x: &[u32], seed: u64) -> Result<Vec<MultiPoly>> {
    let ring = i_c.ring();
    let field = ring.field;
    let x = normalize_point(field, x);
    let cubics = i_c.basis_in_degree(3);
    if cubics.len() != 6 {
        return Err(Error::Precondition(format!("expected 6 cubics through the curve, found {}", cubics.len())));
    }
    if cubics.iter().all(|f| f.evaluate(&x) == 0) {
        return Err(Error::Degenerate("the point lies on every cubic through the curve".into()));
    }
    let through_x = Matrix::from_fn(field, 1, 6, |_, j| cubics[j].evaluate(&x)).kernel_basis();
    if through_x.len() != 5 {
        return Err(Error::Degenerate(format!("{} cubics through x, expected 5", through_x.len())));
    }
    let grads: Vec<Vec<MultiPoly>> = cubics.iter().map(|f| f.gradient()).collect();
    let singular_at_x =
        Matrix::from_fn(field, ring.nvars, 6, |i, j| grads[j][i].evaluate(&x)).kernel_basis();
    if singular_at_x.len() != 1 {
        return Err(Error::Degenerate(format!("{} cubics singular at x, expected 1", singular_at_x.len())));
    }
    let combine = |w: &[u32]| {
        cubics.iter().zip(w).fold(ring.zero(), |acc, (f, &c)| acc.add_scaled(f, c))
    };
    let nodal = combine(&singular_at_x[0]);
    let pencil: Vec<MultiPoly> = through_x.iter().map(|w| combine(w)).collect();
    let mut rng = rng::stream(seed, "uninodal-subspace");
    let mut out = vec![nodal];
    out.extend(random_combinations(&mut rng, field, &pencil, 2));
    Ok(out)
}
