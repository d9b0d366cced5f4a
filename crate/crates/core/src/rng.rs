//! Seeded randomness. Every randomized step draws from a named substream so that
//! identical `(seed, label)` pairs replay identically regardless of call order elsewhere.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::PrimeField;

pub type Stream = ChaCha8Rng;

fn fnv1a(label: &str) -> u64 {
    label.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

/// A substream keyed by the run seed and a label.
pub fn stream(seed: u64, label: &str) -> Stream {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&fnv1a(label).to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

pub fn residue(rng: &mut Stream, field: PrimeField) -> u32 {
    rng.gen_range(0..field.modulus())
}

pub fn nonzero_residue(rng: &mut Stream, field: PrimeField) -> u32 {
    rng.gen_range(1..field.modulus())
}

pub fn residues(rng: &mut Stream, field: PrimeField, n: usize) -> Vec<u32> {
    (0..n).map(|_| residue(rng, field)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_separate_streams() {
        let a: u64 = stream(1, "points").gen();
        let b: u64 = stream(1, "points").gen();
        let c: u64 = stream(1, "slice").gen();
        let d: u64 = stream(2, "points").gen();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_ne!(a, d);
    }
}
