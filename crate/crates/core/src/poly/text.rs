//! Text interchange: `c*x0^a*x1^b + ...` with decimal residues.
//!
//! The printer always emits the coefficient and omits `^1`; the parser additionally
//! accepts a bare monomial (coefficient 1), repeated factors and a leading or infix `-`.

use std::fmt;

use super::monomial::{Monomial, MAX_EXP};
use super::multipoly::{MultiPoly, PolyRing};
use crate::error::{Error, Result};

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let n = self.ring().nvars;
        for (k, &(m, c)) in self.terms().iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for i in 0..n {
                match m.exponent(i) {
                    0 => {}
                    1 => write!(f, "*x{i}")?,
                    e => write!(f, "*x{i}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

pub fn parse_poly(ring: PolyRing, s: &str) -> Result<MultiPoly> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let field = ring.field;
    let mut terms = Vec::new();
    let mut rest = compact.as_str();
    let mut negative = false;
    loop {
        if let Some(r) = rest.strip_prefix('-') {
            negative = !negative;
            rest = r;
            continue;
        }
        if let Some(r) = rest.strip_prefix('+') {
            rest = r;
            continue;
        }
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let (term, tail) = rest.split_at(end);
        let (m, c) = parse_term(ring, term)?;
        terms.push((m, if negative { field.neg(c) } else { c }));
        negative = false;
        if tail.is_empty() {
            break;
        }
        rest = tail;
        if rest.len() == 1 {
            return Err(Error::Parse(format!("dangling sign in {s:?}")));
        }
    }
    Ok(MultiPoly::from_terms(ring, terms))
}

fn parse_term(ring: PolyRing, term: &str) -> Result<(Monomial, u32)> {
    if term.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let field = ring.field;
    let mut coeff = 1u32;
    let mut exps = vec![0u32; ring.nvars];
    for factor in term.split('*') {
        if let Some(v) = factor.strip_prefix('x') {
            let (idx, pow) = match v.split_once('^') {
                Some((i, e)) => (i, parse_uint(e)?),
                None => (v, 1),
            };
            let i = parse_uint(idx)? as usize;
            if i >= ring.nvars {
                return Err(Error::VariableOutOfRange { index: i, nvars: ring.nvars });
            }
            exps[i] += pow as u32;
        } else {
            let v = parse_uint(factor)?;
            coeff = field.mul(coeff, field.reduce(v));
        }
    }
    if exps.iter().sum::<u32>() > MAX_EXP {
        return Err(Error::Parse(format!("term {term:?} has degree above {MAX_EXP}")));
    }
    Ok((Monomial::from_exponents(&exps)?, coeff))
}

fn parse_uint(s: &str) -> Result<u64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("expected a non-negative integer, found {s:?}")));
    }
    s.parse::<u64>().map_err(|e| Error::Parse(format!("{s:?}: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;
    use proptest::prelude::*;

    fn ring() -> PolyRing {
        PolyRing::new(PrimeField::new(10007).unwrap(), 4).unwrap()
    }

    #[test]
    fn canonical_printing() {
        let r = ring();
        let f = parse_poly(r, "x1*x0 + 2*x0^2 - 1").unwrap();
        assert_eq!(f.to_string(), "2*x0^2 + 1*x0*x1 + 10006");
        assert_eq!(parse_poly(r, "x0 - x0").unwrap().to_string(), "0");
        assert_eq!(parse_poly(r, " 3 * x2 ^ 2 ").unwrap().to_string(), "3*x2^2");
    }

    #[test]
    fn malformed_inputs() {
        let r = ring();
        for bad in ["", "x", "x9", "2*", "x0^", "1.5*x0", "x0+"] {
            assert!(parse_poly(r, bad).is_err(), "{bad:?} should not parse");
        }
        assert_eq!(parse_poly(r, "x7"), Err(Error::VariableOutOfRange { index: 7, nvars: 4 }));
    }

    proptest! {
        #[test]
        fn round_trip(ts in prop::collection::vec((prop::collection::vec(0u32..5, 4), 0u32..10007), 0..10)) {
            let r = ring();
            let f = MultiPoly::from_terms(r, ts.into_iter().map(|(e, c)| (Monomial::from_exponents(&e).unwrap(), c)).collect());
            let s = f.to_string();
            let g = parse_poly(r, &s).unwrap();
            prop_assert_eq!(&g, &f);
            prop_assert_eq!(g.to_string(), s);
        }
    }
}
