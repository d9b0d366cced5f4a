//! Numerical characters of a linkage.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Degree pattern of the linking complete intersection: `k` forms of degree `f` per entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sigma(pub Vec<(u32, u32)>);

impl Sigma {
    pub fn count(&self) -> u32 {
        self.0.iter().map(|&(_, k)| k).sum()
    }

    /// `Σ k_i f_i`.
    pub fn weighted_sum(&self) -> i64 {
        self.0.iter().map(|&(f, k)| (f * k) as i64).sum()
    }

    /// `Π f_i^{k_i}`, the degree of the complete intersection.
    pub fn ci_degree(&self) -> i64 {
        self.0.iter().map(|&(f, k)| (f as i64).pow(k)).product()
    }

    /// All form degrees with multiplicity, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.0.iter().flat_map(|&(f, k)| std::iter::repeat_n(f, k as usize)).collect();
        v.sort();
        v
    }
}

impl FromStr for Sigma {
    type Err = Error;

    /// `f^k[,f^k...]`, e.g. `2^5` or `3^2,4^1`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| {
                let (f, k) = p.trim().split_once('^').unwrap_or((p.trim(), "1"));
                let f: u32 = f.parse().map_err(|_| Error::Parse(format!("bad form degree in {p:?}")))?;
                let k: u32 = k.parse().map_err(|_| Error::Parse(format!("bad count in {p:?}")))?;
                if f == 0 || k == 0 {
                    return Err(Error::Parse(format!("degrees and counts must be positive in {p:?}")));
                }
                Ok((f, k))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Sigma(parts))
    }
}

impl fmt::Display for Sigma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(d, k)| format!("{d}^{k}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A curve of degree `d` and arithmetic genus `g` in `P^r`, to be linked by forms of type `sigma`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiaisonSpec {
    pub r: u32,
    pub sigma: Sigma,
    pub d: i64,
    pub g: i64,
}

impl LiaisonSpec {
    pub fn new(r: u32, sigma: Sigma, d: i64, g: i64) -> Result<Self> {
        let spec = LiaisonSpec { r, sigma, d, g };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.r < 2 {
            return Err(Error::MalformedSpec(format!("ambient dimension {} is too small", self.r)));
        }
        if self.sigma.count() != self.r - 1 {
            return Err(Error::MalformedSpec(format!(
                "{} forms cannot cut a curve in P^{}",
                self.sigma.count(),
                self.r
            )));
        }
        Ok(())
    }

    /// The single form degree `f` when `σ = (f; r-1)` and `f(r-2) = r+2`.
    pub fn canonical_surface_degree(&self) -> Option<u32> {
        match self.sigma.0.as_slice() {
            [(f, _)] if (*f as i64) * (self.r as i64 - 2) == self.r as i64 + 2 => Some(*f),
            _ => None,
        }
    }

    /// `Σ k_i f_i - r - 1`, the twist of the dualizing sheaf of the complete intersection.
    pub fn canonical_twist(&self) -> i64 {
        self.sigma.weighted_sum() - self.r as i64 - 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiaisonNumerics {
    pub d_prime: i64,
    pub g_prime: i64,
    /// Number of nodes of `C ∪ D` when both are smooth and meet transversally.
    pub nodes: i64,
}

/// Degree and genus of the residual curve, and the length of `C ∩ D`.
pub fn liaison_numerics(spec: &LiaisonSpec) -> Result<LiaisonNumerics> {
    spec.validate()?;
    let e = spec.canonical_twist();
    let d_prime = spec.sigma.ci_degree() - spec.d;
    let twice = e * (spec.d - d_prime);
    if twice % 2 != 0 {
        return Err(Error::MalformedSpec(format!("genus difference {twice}/2 is not an integer")));
    }
    let g_prime = spec.g - twice / 2;
    let nodes = e * spec.d + 2 - 2 * spec.g;
    if nodes < 0 || d_prime <= 0 {
        return Err(Error::MalformedSpec(format!("no residual curve: d' = {d_prime}, n = {nodes}")));
    }
    Ok(LiaisonNumerics { d_prime, g_prime, nodes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn spec(r: u32, sigma: &str, d: i64, g: i64) -> LiaisonSpec {
        LiaisonSpec::new(r, sigma.parse().unwrap(), d, g).unwrap()
    }

    /// Independent oracle: `B = C ∪ D` is a complete intersection, so
    /// `p_a(B) = 1 + deg(B)·e/2` must equal `g + g' + n - 1`.
    fn ci_genus(s: &LiaisonSpec) -> i64 {
        1 + s.sigma.ci_degree() * s.canonical_twist() / 2
    }

    #[test]
    fn the_three_links() {
        let s = spec(6, "2^5", 14, 8);
        let n = liaison_numerics(&s).unwrap();
        assert_eq!((n.d_prime, n.g_prime, n.nodes), (18, 14, 28));
        assert_eq!(n.g_prime + s.g + n.nodes - 1, ci_genus(&s));
        let s = spec(6, "2^5", 15, 9);
        let n = liaison_numerics(&s).unwrap();
        assert_eq!((n.d_prime, n.g_prime, n.nodes), (17, 12, 29));
        assert_eq!(n.g_prime + s.g + n.nodes - 1, ci_genus(&s));
        let s = spec(4, "3^3", 13, 9);
        let n = liaison_numerics(&s).unwrap();
        assert_eq!((n.d_prime, n.g_prime), (14, 11));
        assert_eq!(n.nodes, ci_genus(&s) + 1 - s.g - n.g_prime);
        assert_eq!(n.nodes, 36);
        let s = spec(4, "3^3", 12, 8);
        let n = liaison_numerics(&s).unwrap();
        assert_eq!((n.d_prime, n.g_prime), (15, 14));
    }

    #[test]
    fn canonical_surface_cases() {
        assert_eq!(spec(6, "2^5", 14, 8).canonical_surface_degree(), Some(2));
        assert_eq!(spec(4, "3^3", 13, 9).canonical_surface_degree(), Some(3));
        assert_eq!(spec(3, "2^2", 4, 1).canonical_surface_degree(), None);
    }

    #[test]
    fn malformed() {
        assert!(LiaisonSpec::new(6, "2^4".parse().unwrap(), 14, 8).is_err());
        assert!("2^x".parse::<Sigma>().is_err());
        assert!("0^3".parse::<Sigma>().is_err());
        // a line linked by two planes in P^3 leaves a negative residual
        assert!(liaison_numerics(&spec(3, "1^2", 2, 0)).is_err());
        assert_eq!("3^2,4".parse::<Sigma>().unwrap(), Sigma(vec![(3, 2), (4, 1)]));
        assert_eq!(Sigma(vec![(3, 2), (4, 1)]).to_string(), "3^2,4^1");
    }

    proptest! {
        #[test]
        fn linkage_is_an_involution(f in 2u32..5, r in 3u32..6, d in 1i64..20, g in 0i64..10) {
            let s = LiaisonSpec::new(r, Sigma(vec![(f, r - 1)]), d, g).unwrap();
            if let Ok(n) = liaison_numerics(&s) {
                let back = LiaisonSpec::new(r, s.sigma.clone(), n.d_prime, n.g_prime).unwrap();
                if let Ok(m) = liaison_numerics(&back) {
                    prop_assert_eq!((m.d_prime, m.g_prime), (d, g));
                    // C ∩ D is symmetric in C and D
                    prop_assert_eq!(m.nodes, n.nodes);
                }
            }
        }
    }
}
