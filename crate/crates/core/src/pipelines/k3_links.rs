//! Curves on a degree-8 K3 surface in `P^5`, projected to `P^4` and linked by three cubics.

use log::info;

use super::canonical::CONNECTEDNESS_NOTE;
use super::nodal_model::NodalPlaneModel;
use super::{drive, PipelineConfig};
use crate::algebra::Matrix;
use crate::error::{Error, Result};
use crate::geometry::{
    is_ordinary_node, k3_with_curve, normalize_point, project_from_point, random_point,
    rational_points_dim0, singular_scheme, K3WithCurve, Point,
};
use crate::groebner::ideal_quotient;
use crate::hilbert::{hilbert_profile, new_generators};
use crate::liaison::{link, link_with, uninodal_subspace, Certificate, Claim, LiaisonSpec, LinkOptions, Sigma};
use crate::poly::{binomial, MultiPoly};
use crate::rng;

/// Extra base points of the adjoint septics giving degree 13 in `P^4`.
const EXTRA_POINTS: usize = 19;

/// Slices tried when looking for a rational point of the surface off the curve.
const POINT_SEARCH_SLICES: usize = 32;

/// Intersection numbers on the sublattice spanned by `H'` and `L'`.
struct K3Lattice {
    hh: i64,
    hl: i64,
    ll: i64,
}

impl K3Lattice {
    /// From the plane model of `L'`: a smooth quartic mapped by cubics through two of its points.
    fn from_plane_model() -> Self {
        let (plane_degree, system_degree, base) = (4i64, 3i64, 2i64);
        let genus = (plane_degree - 1) * (plane_degree - 2) / 2;
        let degree = plane_degree * system_degree - base;
        // H'^2 = 8 for a complete intersection of three quadrics in P^5
        K3Lattice { hh: 8, hl: degree, ll: 2 * genus - 2 }
    }

    /// `(degree, genus)` of the class `a H' + b L'` (K = 0).
    fn curve(&self, a: i64, b: i64) -> (i64, i64) {
        let self_int = a * a * self.hh + 2 * a * b * self.hl + b * b * self.ll;
        (a * self.hh + b * self.hl, 1 + self_int / 2)
    }
}

/// `h^0(O_{P^n}(m)) - (m d + 1 - g)`.
fn expected_forms(n: i64, d: i64, g: i64, m: u32) -> i64 {
    binomial(n + m as i64, n) as i64 - (m as i64 * d + 1 - g)
}

pub fn run_genus11(cfg: &PipelineConfig) -> Certificate {
    drive(cfg, genus11_attempt)
}

pub fn run_genus13(cfg: &PipelineConfig) -> Certificate {
    drive(cfg, genus13_attempt)
}

/// The K3 surface, its curve, and a rational point of the surface off the curve.
fn k3_stage(cfg: &PipelineConfig, seed: u64, cert: &mut Certificate) -> Result<(K3WithCurve, Point)> {
    let k3 = k3_with_curve(cfg.field, seed)?;
    cfg.dump("Xprime", &k3.surface)?;
    cfg.dump("Lprime", &k3.curve)?;
    let lat = K3Lattice::from_plane_model();
    let prof = hilbert_profile(&k3.curve, None)?;
    cert.push(Claim::new("degree of L'", lat.hl, prof.degree));
    cert.push(Claim::new("pa of L'", lat.ll / 2 + 1, prof.pa));
    cert.push(Claim::new("quadrics through L'", expected_forms(5, lat.hl, lat.ll / 2 + 1, 2), k3.curve.dim_in_degree(2)));
    let e = point_off_curve(&k3, seed)?;
    Ok((k3, e))
}

fn point_off_curve(k3: &K3WithCurve, seed: u64) -> Result<Point> {
    let ring = k3.surface.ring();
    let mut rng = rng::stream(seed, "k3-point");
    for _ in 0..POINT_SEARCH_SLICES {
        let hyperplanes: Vec<MultiPoly> =
            (0..2).map(|_| ring.linear_form(&rng::residues(&mut rng, ring.field, ring.nvars))).collect();
        let Ok(points) = rational_points_dim0(&k3.surface.with(&hyperplanes)) else { continue };
        if let Some(p) = points.into_iter().find(|p| !k3.curve.gens().iter().all(|g| g.evaluate(p) == 0)) {
            return Ok(p);
        }
    }
    Err(Error::NotEnoughPoints { found: 0, wanted: 1 })
}

/// A random cubic through `L'` satisfying the given linear conditions, not containing `X'`.
fn constrained_cubic(k3: &K3WithCurve, e: &[u32], singular: bool, seed: u64) -> Result<MultiPoly> {
    let field = k3.surface.ring().field;
    let basis = k3.curve.basis_in_degree(3);
    let mut conditions: Vec<Vec<u32>> = vec![basis.iter().map(|f| f.evaluate(e)).collect()];
    if singular {
        let grads: Vec<Vec<MultiPoly>> = basis.iter().map(|f| f.gradient()).collect();
        for i in 0..e.len() {
            conditions.push(grads.iter().map(|g| g[i].evaluate(e)).collect());
        }
    }
    let kernel = Matrix::from_rows(field, basis.len(), conditions).kernel_basis();
    let mut rng = rng::stream(seed, "k3-cubic");
    let coeffs = rng::residues(&mut rng, field, kernel.len());
    let weights: Vec<u32> = (0..basis.len())
        .map(|j| kernel.iter().zip(&coeffs).fold(0u32, |acc, (v, &c)| field.mul_add(acc, c, v[j])))
        .collect();
    let f = basis.iter().zip(&weights).fold(k3.surface.ring().zero(), |acc, (b, &w)| acc.add_scaled(b, w));
    if f.is_zero() || k3.surface.contains(&f) {
        return Err(Error::UnluckySample("the cubic contains the surface".into()));
    }
    Ok(f)
}

fn genus11_attempt(cfg: &PipelineConfig, seed: u64, cert: &mut Certificate) -> Result<()> {
    let (k3, e) = k3_stage(cfg, seed, cert)?;
    let lat = K3Lattice::from_plane_model();
    let f = constrained_cubic(&k3, &e, false, seed)?;
    let c_prime = ideal_quotient(&k3.surface.with(&[f]), &k3.curve)?;
    cfg.dump("Cprime", &c_prime)?;
    let (dp, gp) = lat.curve(3, -1);
    let prof = hilbert_profile(&c_prime, None)?;
    cert.push(Claim::new("degree of C'", dp, prof.degree));
    cert.push(Claim::new("pa of C'", gp, prof.pa));
    cert.push(Claim::new("C' passes through e", true, c_prime.gens().iter().all(|g| g.evaluate(&e) == 0)));
    cert.push(Claim::new("C' smooth", true, singular_scheme(&c_prime, 4)?.is_unit()));

    let surface = project_from_point(&k3.surface, &e)?.image;
    cfg.dump("S", &surface)?;
    let sprof = hilbert_profile(&surface, None)?;
    cert.push(Claim::new("degree of projected surface", lat.hh - 1, sprof.degree));
    cert.push(Claim::new("cubic generators of projected surface", 3, new_generators(&surface, 3)));

    let i_co = project_from_point(&c_prime, &e)?.image;
    cfg.dump("Co", &i_co)?;
    let (d, g) = (dp - 1, gp);
    let cprof = hilbert_profile(&i_co, None)?;
    cert.push(Claim::new("degree of C_o", d, cprof.degree));
    cert.push(Claim::new("pa of C_o", g, cprof.pa));
    cert.push(Claim::new("dim I_C_o in degree 3", expected_forms(4, d, g, 3), i_co.dim_in_degree(3)));
    cert.push(Claim::new("C_o smooth", true, singular_scheme(&i_co, 3)?.is_unit()));
    info!("genus 11: C_o ({d}, {g}) on the projected surface");

    // (I_C_o)_3 contains the three cubics of the surface, so every link by three cubics
    // contains the link of the surface by two of them: the residual splits as B ∪ B_1 with
    // B on the surface and B_1 on the residual quadric
    let spec = LiaisonSpec::new(4, Sigma(vec![(3, 3)]), d, g)?;
    let opts = LinkOptions { expect_smooth: false, count_nodes: true, check_symmetry: false };
    let on_s = link(&i_co, &spec, seed, opts)?;
    cfg.dump("Do", &on_s.i_d)?;
    let i_b1 = ideal_quotient(&on_s.i_d, &surface)?;
    let i_b = ideal_quotient(&on_s.i_d, &i_b1)?;
    let (pb, pb1) = (hilbert_profile(&i_b, None)?, hilbert_profile(&i_b1, None)?);
    // B is the image of a member of |L'| with a node at e; B_1 has type (3, 3) on a quadric
    let (db, gb) = (lat.hl - 2, lat.ll / 2 + 1 - 1);
    let (db1, gb1) = (3 + 3, 2 * 2);
    let m = &on_s.measured;
    let n = &on_s.numerics;
    let meet = n.g_prime - gb - gb1 + 1;
    cert.push(Claim::new("degree of B ∪ B_1", n.d_prime, m.profile.degree));
    cert.push(Claim::new("pa of B ∪ B_1", n.g_prime, m.profile.pa));
    cert.push(Claim::new("dim I_(B ∪ B_1) in degree 3", spec.r - 1, m.forms_in_link_degree.1));
    cert.push(Claim::new("degree of B", db, pb.degree));
    cert.push(Claim::new("pa of B", gb, pb.pa));
    cert.push(Claim::new("degree of B_1", db1, pb1.degree));
    cert.push(Claim::new("pa of B_1", gb1, pb1.pa));
    cert.push(Claim::new("singular scheme of B ∪ B_1", (0, meet), (m.singular_dim, m.singular_degree)));
    cert.push(Claim::new("nodes of C_o ∪ B ∪ B_1", (0, n.nodes + meet), m.node_scheme.unwrap_or((-1, 0))));

    let model = NodalPlaneModel::build(cfg.field, EXTRA_POINTS, seed)?;
    let i_c = &model.ideal;
    let (d, g) = (model.invariants.degree, model.invariants.genus);
    cfg.dump("C", i_c)?;
    cert.push(Claim::new("dim of octic system", NodalPlaneModel::octic_class().expected_plane_dimension(), model.octic_system_dim));
    cert.push(Claim::new(
        "dim of adjoint system",
        NodalPlaneModel::embedding_class(EXTRA_POINTS).expected_plane_dimension(),
        model.adjoint_system_dim,
    ));
    cert.push(Claim::new("degree of C", d, model.profile.degree));
    cert.push(Claim::new("pa of C", g, model.profile.pa));
    cert.push(Claim::new("dim I_C in degree 3", expected_forms(4, d, g, 3), i_c.dim_in_degree(3)));
    cert.push(Claim::new("C nondegenerate", true, i_c.dim_in_degree(1) == 0));
    cert.push(Claim::new("C smooth", true, singular_scheme(i_c, 3)?.is_unit()));
    let spec = LiaisonSpec::new(4, Sigma(vec![(3, 3)]), d, g)?;
    let res = link(i_c, &spec, seed, LinkOptions::default())?;
    cfg.dump("B", &res.i_b)?;
    cfg.dump("D", &res.i_d)?;
    cert.extend(res.claims());
    cert.note(CONNECTEDNESS_NOTE);
    Ok(())
}

fn genus13_attempt(cfg: &PipelineConfig, seed: u64, cert: &mut Certificate) -> Result<()> {
    let (k3, e) = k3_stage(cfg, seed, cert)?;
    let lat = K3Lattice::from_plane_model();
    let f = constrained_cubic(&k3, &e, true, seed)?;
    let a_prime = ideal_quotient(&k3.surface.with(&[f]), &k3.curve)?;
    cfg.dump("Aprime", &a_prime)?;
    let (dp, gp) = lat.curve(3, -1);
    let prof = hilbert_profile(&a_prime, None)?;
    cert.push(Claim::new("degree of A'", dp, prof.degree));
    cert.push(Claim::new("pa of A'", gp, prof.pa));
    let sing = singular_scheme(&a_prime, 4)?;
    let sing_pts = rational_points_dim0(&sing)?;
    cert.push(Claim::new("singular points of A'", vec![normalize_point(cfg.field, &e)], sing_pts));
    cert.push(Claim::new("A' has an ordinary node at e", true, is_ordinary_node(&a_prime, 4, &e)?));

    // projecting from the node drops the degree by 2 and resolves it
    let i_a = project_from_point(&a_prime, &e)?.image;
    cfg.dump("A", &i_a)?;
    let (d, g) = (dp - 2, gp - 1);
    let aprof = hilbert_profile(&i_a, None)?;
    cert.push(Claim::new("degree of A", d, aprof.degree));
    cert.push(Claim::new("pa of A", g, aprof.pa));
    cert.push(Claim::new("dim I_A in degree 3", expected_forms(4, d, g, 3), i_a.dim_in_degree(3)));
    cert.push(Claim::new("A smooth", true, singular_scheme(&i_a, 3)?.is_unit()));

    let mut rng = rng::stream(seed, "node-point");
    let x = normalize_point(cfg.field, &random_point(&mut rng, cfg.field, 5));
    if i_a.gens().iter().all(|g| g.evaluate(&x) == 0) {
        return Err(Error::Degenerate("the chosen node lies on A".into()));
    }
    let forms = uninodal_subspace(&i_a, &x, seed)?;
    let spec = LiaisonSpec::new(4, Sigma(vec![(3, 3)]), d, g)?;
    let opts = LinkOptions { expect_smooth: false, count_nodes: false, check_symmetry: true };
    let res = link_with(&i_a, &spec, forms, opts)?;
    cfg.dump("B", &res.i_b)?;
    cfg.dump("D", &res.i_d)?;
    cert.extend(res.claims());
    let m = &res.measured;
    cert.push(Claim::new("singular scheme dimension", 0, m.singular_dim));
    cert.push(Claim::new("singular scheme degree", 1, m.singular_degree));
    let pts = if m.singular_dim == 0 { rational_points_dim0(&res.d_singular)? } else { vec![] };
    cert.push(Claim::new("singular point of D", vec![x.clone()], pts));
    cert.push(Claim::new("D has an ordinary node at x", true, is_ordinary_node(&res.i_d, 3, &x)?));
    cert.push(Claim::new("geometric genus of D", res.numerics.g_prime - 1, m.profile.pa - m.singular_degree));
    cert.note(CONNECTEDNESS_NOTE);
    Ok(())
}

