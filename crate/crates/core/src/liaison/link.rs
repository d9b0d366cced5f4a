//! Linkage by complete intersections, with the verification battery for the residual curve.

use log::info;
use serde::Serialize;

use super::certificate::Claim;
use super::numerics::{liaison_numerics, LiaisonNumerics, LiaisonSpec};
use crate::algebra::RowSpace;
use crate::error::{Error, Result};
use crate::geometry::{is_ordinary_node, rational_points_dim0, singular_scheme};
use crate::groebner::{ideal_quotient, Ideal};
use crate::hilbert::{hilbert_profile, HilbertProfile, HilbertSeries};
use crate::poly::{monomials_of_degree, MultiPoly};
use crate::rng;

/// Which checks the battery runs.
#[derive(Clone, Copy, Debug)]
pub struct LinkOptions {
    /// Claim that `D` is smooth. When false the singular scheme of `D` is still computed
    /// and returned, but no claim is made.
    pub expect_smooth: bool,
    /// Compute the singular scheme of `C ∪ D` and compare its degree with the node count.
    pub count_nodes: bool,
    /// Recompute `I_B : I_D` and compare with `I_C`.
    pub check_symmetry: bool,
}

impl Default for LinkOptions {
    fn default() -> Self {
        LinkOptions { expect_smooth: true, count_nodes: true, check_symmetry: true }
    }
}

/// What the battery measured on the residual curve.
#[derive(Clone, Debug, Serialize)]
pub struct LinkMeasurements {
    pub profile: HilbertProfile,
    /// `dim (I_D)_1`.
    pub linear_forms: usize,
    /// `(f, dim (I_D)_f)` for the form degree of the link.
    pub forms_in_link_degree: (u32, usize),
    /// Dimension and degree of the singular scheme of `D`.
    pub singular_dim: i64,
    pub singular_degree: i64,
    /// Dimension and degree of the singular scheme of `C ∪ D`, when computed.
    pub node_scheme: Option<(i64, i64)>,
    /// Whether every node is an ordinary double point; `None` unless all of them are rational.
    pub rational_nodes_ordinary: Option<bool>,
    pub symmetric: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct LinkageResult {
    pub spec: LiaisonSpec,
    pub numerics: LiaisonNumerics,
    /// The chosen forms spanning `V`.
    pub forms: Vec<MultiPoly>,
    pub i_b: Ideal,
    pub i_d: Ideal,
    /// Singular scheme of `D`.
    pub d_singular: Ideal,
    pub measured: LinkMeasurements,
    pub options: LinkOptions,
}

impl LinkageResult {
    /// Claims comparing the battery against the numerical characters of the link.
    pub fn claims(&self) -> Vec<Claim> {
        let m = &self.measured;
        let n = &self.numerics;
        let r = self.spec.r as usize;
        let mut out = vec![
            Claim::new("dimension of D", 1, m.profile.dim),
            Claim::new("degree of D", n.d_prime, m.profile.degree),
            Claim::new("pa of D", n.g_prime, m.profile.pa),
            Claim::new("D nondegenerate", true, m.linear_forms == 0),
        ];
        if self.spec.canonical_surface_degree().is_some() {
            let (f, dim) = m.forms_in_link_degree;
            out.push(Claim::new(format!("dim I_D in degree {f}"), r - 1, dim));
        }
        if self.options.expect_smooth {
            out.push(Claim::new("D smooth", true, m.singular_dim < 0));
        }
        if let Some((dim, deg)) = m.node_scheme {
            out.push(Claim::new("C∪D singular scheme dimension", 0, dim));
            out.push(Claim::new("nodes of C∪D", n.nodes, deg));
            if let Some(ord) = m.rational_nodes_ordinary {
                out.push(Claim::new("rational nodes are ordinary", true, ord));
            }
        }
        if let Some(s) = m.symmetric {
            out.push(Claim::new("linkage symmetry I_B:I_D = I_C", true, s));
        }
        out
    }

    /// Fails with the first claim that does not hold.
    pub fn ensure(&self) -> Result<()> {
        match self.claims().into_iter().find(|c| !c.pass) {
            None => Ok(()),
            Some(c) => Err(Error::Verification {
                claim: format!("{}: expected {}, computed {}", c.name, c.expected, c.computed),
            }),
        }
    }
}

/// Links `C` by a complete intersection of random forms of the degrees in `σ`.
pub fn link(i_c: &Ideal, spec: &LiaisonSpec, seed: u64, options: LinkOptions) -> Result<LinkageResult> {
    let forms = random_link_forms(i_c, spec, seed)?;
    link_with(i_c, spec, forms, options)
}

/// Random `k`-dimensional subspaces of `(I_C)_f` for each `(f, k)` in `σ`.
pub fn random_link_forms(i_c: &Ideal, spec: &LiaisonSpec, seed: u64) -> Result<Vec<MultiPoly>> {
    spec.validate()?;
    let ring = i_c.ring();
    if ring.nvars != spec.r as usize + 1 {
        return Err(Error::RingMismatch(format!("curve lives in P^{}, link is in P^{}", ring.nvars - 1, spec.r)));
    }
    let mut rng = rng::stream(seed, "link-subspace");
    let mut forms = Vec::new();
    for &(f, k) in &spec.sigma.0 {
        let basis = i_c.basis_in_degree(f);
        if basis.len() < k as usize {
            return Err(Error::Precondition(format!(
                "need {k} forms of degree {f} through the curve, only {} exist",
                basis.len()
            )));
        }
        forms.extend(crate::geometry::random_combinations(&mut rng, ring.field, &basis, k as usize));
    }
    Ok(forms)
}

/// Links `C` by the complete intersection of the given forms.
pub fn link_with(i_c: &Ideal, spec: &LiaisonSpec, forms: Vec<MultiPoly>, options: LinkOptions) -> Result<LinkageResult> {
    let numerics = liaison_numerics(spec)?;
    let ring = i_c.ring();
    let c = spec.r as usize - 1;
    if forms.len() != c {
        return Err(Error::MalformedSpec(format!("{} forms given, {c} needed", forms.len())));
    }
    if let Some(f) = forms.iter().find(|f| !i_c.contains(f)) {
        return Err(Error::Precondition(format!("form {f} does not vanish on the curve")));
    }
    check_independent(&forms)?;
    let i_b = Ideal::new(ring, forms.clone());
    if HilbertSeries::of(&i_b) != complete_intersection_series(ring.nvars, &spec.sigma.degrees()) {
        return Err(Error::UnluckySample("the chosen forms do not meet in a complete intersection".into()));
    }
    let i_d = ideal_quotient(&i_b, i_c)?;
    info!("link: residual computed, {} generators", i_d.gens().len());
    let profile = hilbert_profile(&i_d, None)?;
    let link_degree = spec.sigma.degrees()[0];
    let forms_in_link_degree = (link_degree, i_d.dim_in_degree(link_degree));
    let d_singular = singular_scheme(&i_d, c)?;
    let sing_hs = HilbertSeries::of(&d_singular);
    let (mut node_scheme, mut rational_nodes_ordinary) = (None, None);
    if options.count_nodes {
        let nodes = singular_scheme(&i_b, c)?;
        let hs = HilbertSeries::of(&nodes);
        node_scheme = Some((hs.projective_dim(), hs.degree()));
        if hs.projective_dim() == 0 {
            let pts = rational_points_dim0(&nodes)?;
            if pts.len() as i64 == hs.degree() {
                let mut ok = true;
                for p in &pts {
                    ok &= is_ordinary_node(&i_b, c, p)?;
                }
                rational_nodes_ordinary = Some(ok);
            }
        }
    }
    let symmetric = if options.check_symmetry { Some(ideal_quotient(&i_b, &i_d)? == *i_c) } else { None };
    let measured = LinkMeasurements {
        profile,
        linear_forms: i_d.dim_in_degree(1),
        forms_in_link_degree,
        singular_dim: sing_hs.projective_dim(),
        singular_degree: sing_hs.degree(),
        node_scheme,
        rational_nodes_ordinary,
        symmetric,
    };
    Ok(LinkageResult { spec: spec.clone(), numerics, forms, i_b, i_d, d_singular, measured, options })
}

fn check_independent(forms: &[MultiPoly]) -> Result<()> {
    let ring = forms[0].ring();
    let mut degs: Vec<u32> = forms.iter().filter_map(|f| f.degree()).collect();
    degs.dedup();
    for d in degs {
        let monos = monomials_of_degree(ring.nvars, d);
        let mut space = RowSpace::new(ring.field, monos.len());
        for f in forms.iter().filter(|f| f.degree() == Some(d)) {
            let v: Vec<u32> = monos.iter().map(|&m| f.coefficient(m)).collect();
            if !space.insert(v) {
                return Err(Error::Degenerate(format!("linking forms of degree {d} are dependent")));
            }
        }
    }
    Ok(())
}

/// `Π (1 - t^{f_i}) / (1 - t)^n`.
pub fn complete_intersection_series(nvars: usize, degrees: &[u32]) -> HilbertSeries {
    let mut num = vec![1i64];
    for &f in degrees {
        let mut next = vec![0i64; num.len() + f as usize];
        for (k, &c) in num.iter().enumerate() {
            next[k] += c;
            next[k + f as usize] -= c;
        }
        num = next;
    }
    HilbertSeries::new(nvars, num)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;
    use crate::poly::{parse_poly, PolyRing};

    fn twisted_cubic() -> Ideal {
        let r = PolyRing::new(PrimeField::new(10007).unwrap(), 4).unwrap();
        Ideal::new(
            r,
            ["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"].iter().map(|s| parse_poly(r, s).unwrap()).collect(),
        )
    }

    #[test]
    fn twisted_cubic_links_to_a_line() {
        let tc = twisted_cubic();
        let spec = LiaisonSpec::new(3, "2^2".parse().unwrap(), 3, 0).unwrap();
        let res = link(&tc, &spec, 5, LinkOptions { expect_smooth: true, count_nodes: true, check_symmetry: true }).unwrap();
        assert_eq!(res.numerics, LiaisonNumerics { d_prime: 1, g_prime: 0, nodes: 2 });
        // a line: every claim except the (inapplicable) canonical-surface one is checked
        assert_eq!((res.measured.profile.degree, res.measured.profile.pa), (1, 0));
        assert_eq!(res.measured.node_scheme, Some((0, 2)));
        assert_eq!(res.measured.symmetric, Some(true));
        // a line spans only P^1, so the nondegeneracy claim fails
        let failing: Vec<String> = res.claims().into_iter().filter(|c| !c.pass).map(|c| c.name).collect();
        assert_eq!(failing, vec!["D nondegenerate".to_string()]);
        assert!(res.ensure().is_err());
    }

    #[test]
    fn rejects_forms_off_the_curve() {
        let tc = twisted_cubic();
        let r = tc.ring();
        let spec = LiaisonSpec::new(3, "2^2".parse().unwrap(), 3, 0).unwrap();
        let bad = vec![tc.gens()[0].clone(), parse_poly(r, "x0^2").unwrap()];
        assert!(matches!(link_with(&tc, &spec, bad, LinkOptions::default()), Err(Error::Precondition(_))));
        let dep = vec![tc.gens()[0].clone(), tc.gens()[0].scale(3)];
        assert!(matches!(link_with(&tc, &spec, dep, LinkOptions::default()), Err(Error::Degenerate(_))));
    }

    #[test]
    fn ci_series() {
        let hs = complete_intersection_series(4, &[2, 2]);
        assert_eq!(hs.degree(), 4);
        assert_eq!(hs.projective_dim(), 1);
        assert_eq!(hs.value(5), 4 * 5);
    }
}
