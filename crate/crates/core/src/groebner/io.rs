//! Ideal files: a `ring p=<prime> vars=<n>` header, then one polynomial per line.
//! Blank lines and `#` comments are ignored.

use std::path::Path;

use super::Ideal;
use crate::algebra::PrimeField;
use crate::error::{Error, Result};
use crate::poly::{parse_poly, PolyRing};

pub fn parse_ideal(text: &str) -> Result<Ideal> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("missing ring header".into()))?;
    let ring = parse_header(header)?;
    let gens = lines.map(|l| parse_poly(ring, l)).collect::<Result<Vec<_>>>()?;
    Ok(Ideal::new(ring, gens))
}

fn parse_header(h: &str) -> Result<PolyRing> {
    let mut words = h.split_whitespace();
    if words.next() != Some("ring") {
        return Err(Error::Parse(format!("expected `ring p=<prime> vars=<n>`, found {h:?}")));
    }
    let mut p = None;
    let mut n = None;
    for w in words {
        match w.split_once('=') {
            Some(("p", v)) => p = Some(v.parse::<u64>().map_err(|e| Error::Parse(format!("p: {e}")))?),
            Some(("vars", v)) => n = Some(v.parse::<usize>().map_err(|e| Error::Parse(format!("vars: {e}")))?),
            _ => return Err(Error::Parse(format!("unknown header field {w:?}"))),
        }
    }
    let p = p.ok_or_else(|| Error::Parse("header lacks p=".into()))?;
    let n = n.ok_or_else(|| Error::Parse("header lacks vars=".into()))?;
    PolyRing::new(PrimeField::new(p)?, n)
}

pub fn format_ideal(ideal: &Ideal) -> String {
    let r = ideal.ring();
    let mut s = format!("ring p={} vars={}\n", r.field.modulus(), r.nvars);
    for g in ideal.gens() {
        s.push_str(&g.to_string());
        s.push('\n');
    }
    s
}

pub fn read_ideal(path: &Path) -> Result<Ideal> {
    parse_ideal(&std::fs::read_to_string(path)?)
}

pub fn write_ideal(path: &Path, ideal: &Ideal) -> Result<()> {
    std::fs::write(path, format_ideal(ideal))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_with_comments() {
        let text = "# twisted cubic\nring p=10007 vars=4\n1*x0*x2 + 10006*x1^2\n\n1*x1*x3 + 10006*x2^2 # second\n";
        let i = parse_ideal(text).unwrap();
        assert_eq!(i.gens().len(), 2);
        let again = parse_ideal(&format_ideal(&i)).unwrap();
        assert_eq!(again.gens(), i.gens());
        assert_eq!(format_ideal(&again), format_ideal(&i));
    }

    #[test]
    fn bad_headers() {
        assert!(parse_ideal("").is_err());
        assert!(parse_ideal("ring p=4 vars=3\nx0").is_err());
        assert!(parse_ideal("ring vars=3\nx0").is_err());
        assert!(parse_ideal("ideal p=7 vars=3").is_err());
        assert!(parse_ideal("ring p=7 vars=2\nx5").is_err());
    }
}
