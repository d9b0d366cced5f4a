//! Canonical curves of genus 8 as linear sections of `G(2,6)`.

use super::{drive, PipelineConfig};
use crate::geometry::{grassmann_slice, singular_scheme};
use crate::hilbert::hilbert_profile;
use crate::liaison::{Certificate, Claim};
use crate::poly::binomial;

const GENUS: i64 = 8;

pub fn run_grassmann8(cfg: &PipelineConfig) -> Certificate {
    drive(cfg, |cfg, seed, cert| {
        let slice = grassmann_slice(cfg.field, seed)?;
        cfg.dump("slice", &slice)?;
        let prof = hilbert_profile(&slice, None)?;
        // a canonical curve: degree 2g - 2 in P^{g-1}, with O_C(2) = ω^2 of degree 4g - 4
        let degree = 2 * GENUS - 2;
        let quadrics = binomial(GENUS + 1, 2) as i64 - (2 * degree + 1 - GENUS);
        cert.push(Claim::new("degree", degree, prof.degree));
        cert.push(Claim::new("pa", GENUS, prof.pa));
        cert.push(Claim::new("quadrics through slice", quadrics, slice.dim_in_degree(2)));
        cert.push(Claim::new("nondegenerate", true, slice.dim_in_degree(1) == 0));
        cert.push(Claim::new("smooth", true, singular_scheme(&slice, GENUS as usize - 2)?.is_unit()));
        Ok(())
    })
}
