//! Curves in `P^6` linked by five quadrics: on the eleven-point surface, and for genus 12
//! also from a nodal plane model.

use super::nodal_model::NodalPlaneModel;
use super::surface::{CurveOnSurface, ElevenPointSurface};
use super::{drive, PipelineConfig};
use crate::error::Result;
use crate::geometry::picard::{eleven_points, DivisorClass};
use crate::geometry::singular_scheme;
use crate::groebner::{ideal_quotient, Ideal};
use crate::hilbert::{generated_in_degree, graded_piece_dim, hilbert_function, hilbert_profile};
use crate::liaison::{link, petri_rank, Certificate, Claim, LiaisonSpec, LinkOptions, Sigma};
use crate::poly::binomial;

/// Extra base points of the adjoint septics giving degree 15 in `P^6`.
const EXTRA_POINTS: usize = 17;

pub(crate) const CONNECTEDNESS_NOTE: &str = "connectedness of D assumed via linkage from an ACM scheme";

/// Genus 14: `C ∈ |2H − R|` of degree 14 and genus 8, linked to `D` of degree 18.
pub fn run_genus14(cfg: &PipelineConfig) -> Certificate {
    drive(cfg, |cfg, seed, cert| attempt(cfg, seed, cert, &eleven_points::genus8_curve(), true))
}

/// Genus 12: `C_X ∈ |2H − D_1|` of degree 15 and genus 9 links to the nodal union
/// `D_1 ∪ D_2`; a general `(15, 9)` curve from a nodal octic links to a smooth `D` of degree 17.
pub fn run_genus12(cfg: &PipelineConfig) -> Certificate {
    drive(cfg, genus12_attempt)
}

/// `h^0(I_C(m)) = h^0(O_{P^6}(m)) - (m d + 1 - g)`, valid while `O_C(m)` is nonspecial.
fn expected_forms(d: i64, g: i64, m: u32) -> i64 {
    binomial(6 + m as i64, 6) as i64 - (m as i64 * d + 1 - g)
}

fn surface_stage(cfg: &PipelineConfig, seed: u64, cert: &mut Certificate) -> Result<ElevenPointSurface> {
    let surface = ElevenPointSurface::build(cfg.field, seed)?;
    let h = eleven_points::hyperplane();
    cert.push(Claim::new("dim of sextic system", h.expected_plane_dimension(), surface.system_dim));
    cert.push(Claim::new("dim I_X in degree 2", ElevenPointSurface::expected_quadrics(), surface.quadrics.len()));
    cfg.dump("X", &Ideal::new(surface.ambient(), surface.quadrics.clone()))?;
    Ok(surface)
}

fn attempt(cfg: &PipelineConfig, seed: u64, cert: &mut Certificate, class: &DivisorClass, petri: bool) -> Result<()> {
    let surface = surface_stage(cfg, seed, cert)?;

    let curve = CurveOnSurface::build(&surface, class, seed)?;
    let (d, g) = (curve.invariants.degree, curve.invariants.genus);
    let i_c = &curve.ideal;
    cfg.dump("C", i_c)?;
    cert.push(Claim::new("dim of plane system for C", class.expected_plane_dimension(), curve.plane_system_dim));
    cert.push(Claim::new("degree of C", d, curve.profile.degree));
    cert.push(Claim::new("pa of C", g, curve.profile.pa));
    cert.push(Claim::new("C² > 0 in the Picard lattice", true, curve.invariants.self_intersection > 0));
    cert.push(Claim::new("dim I_C in degree 2", expected_forms(d, g, 2), i_c.dim_in_degree(2)));
    if petri {
        cert.push(Claim::new("dim I_C in degree 3", expected_forms(d, g, 3), i_c.dim_in_degree(3)));
        cert.push(Claim::new("C 2-normal", i_c.dim_in_degree(2), graded_piece_dim(i_c, 2).0));
    }
    cert.push(Claim::new("C nondegenerate", true, i_c.dim_in_degree(1) == 0));
    cert.push(Claim::new("C smooth", true, singular_scheme(i_c, 5)?.is_unit()));
    if petri {
        cert.push(Claim::new("I_C generated by quadrics", true, generated_in_degree(i_c, 2).generated));
        let report = petri_rank(i_c, 2)?;
        let expected = (7 * expected_forms(d, g, 2)).min(expected_forms(d, g, 3));
        cert.push(Claim::new("mu_C rank", expected, report.rank));
        cert.push(Claim::new("Petri map of the residual pair injective", true, report.full));
    }

    let spec = LiaisonSpec::new(6, Sigma(vec![(2, 5)]), d, g)?;
    let res = link(i_c, &spec, seed, LinkOptions::default())?;
    cfg.dump("B", &res.i_b)?;
    cfg.dump("D", &res.i_d)?;
    cert.extend(res.claims());
    if petri {
        cert.push(Claim::new("dim (R/I_D)_1", 7, hilbert_function(&res.i_d, 1)));
    }
    cert.note(CONNECTEDNESS_NOTE);
    Ok(())
}

fn genus12_attempt(cfg: &PipelineConfig, seed: u64, cert: &mut Certificate) -> Result<()> {
    let surface = surface_stage(cfg, seed, cert)?;
    let class = eleven_points::genus9_curve();
    let cx = CurveOnSurface::build(&surface, &class, seed)?;
    let (d, g) = (cx.invariants.degree, cx.invariants.genus);
    cfg.dump("CX", &cx.ideal)?;
    cert.push(Claim::new("dim of plane system for C_X", class.expected_plane_dimension(), cx.plane_system_dim));
    cert.push(Claim::new("degree of C_X", d, cx.profile.degree));
    cert.push(Claim::new("pa of C_X", g, cx.profile.pa));
    cert.push(Claim::new("dim I_C_X in degree 2", expected_forms(d, g, 2), cx.ideal.dim_in_degree(2)));

    // every 5-dim space of quadrics through C_X shares four quadrics with X, so the residual
    // is D_1 plus a quadratic section D_2 of the Del Pezzo surface linked to X
    let spec = LiaisonSpec::new(6, Sigma(vec![(2, 5)]), d, g)?;
    let opts = LinkOptions { expect_smooth: false, count_nodes: true, check_symmetry: false };
    let on_x = link(&cx.ideal, &spec, seed, opts)?;
    cfg.dump("DX", &on_x.i_d)?;
    let d1 = CurveOnSurface::build(&surface, &eleven_points::conic_d1(), seed)?;
    let i_d2 = ideal_quotient(&on_x.i_d, &d1.ideal)?;
    let p2 = hilbert_profile(&i_d2, None)?;
    let m = &on_x.measured;
    let n = &on_x.numerics;
    // D_2 ∈ |2H_Y| on the sextic Del Pezzo Y, where K_Y = -H_Y
    let y = 6;
    let (d2, g2) = (2 * y, 1 + (4 * y - 2 * y) / 2);
    let meet = n.g_prime - d1.invariants.genus - g2 + 1;
    cert.push(Claim::new("degree of D_1 ∪ D_2", n.d_prime, m.profile.degree));
    cert.push(Claim::new("pa of D_1 ∪ D_2", n.g_prime, m.profile.pa));
    cert.push(Claim::new("dim I_(D_1 ∪ D_2) in degree 2", spec.r - 1, m.forms_in_link_degree.1));
    cert.push(Claim::new("D_1 is a component of the residual", true, d1.ideal.contains_ideal(&on_x.i_d)));
    cert.push(Claim::new("degree of D_1", d1.invariants.degree, d1.profile.degree));
    cert.push(Claim::new("degree of D_2", d2, p2.degree));
    cert.push(Claim::new("pa of D_2", g2, p2.pa));
    cert.push(Claim::new("singular scheme of D_1 ∪ D_2", (0, meet), (m.singular_dim, m.singular_degree)));
    cert.push(Claim::new("nodes of C_X ∪ D_1 ∪ D_2", (0, n.nodes + meet), m.node_scheme.unwrap_or((-1, 0))));

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
    cert.push(Claim::new("dim I_C in degree 2", expected_forms(d, g, 2), i_c.dim_in_degree(2)));
    cert.push(Claim::new("C nondegenerate", true, i_c.dim_in_degree(1) == 0));
    cert.push(Claim::new("C smooth", true, singular_scheme(i_c, 5)?.is_unit()));
    let spec = LiaisonSpec::new(6, Sigma(vec![(2, 5)]), d, g)?;
    let res = link(i_c, &spec, seed, LinkOptions::default())?;
    cfg.dump("B", &res.i_b)?;
    cfg.dump("D", &res.i_d)?;
    cert.extend(res.claims());
    cert.note(CONNECTEDNESS_NOTE);
    Ok(())
}
