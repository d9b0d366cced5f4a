use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Maximum number of variables a [`Monomial`] can carry.
pub const MAX_VARS: usize = 15;
/// Largest exponent (and total degree) representable.
pub const MAX_EXP: u32 = 127;

const DEG_SHIFT: u32 = 120;
const LOW: u128 = (1u128 << DEG_SHIFT) - 1;
const HIGH_BITS: u128 = 0x8080_8080_8080_8080_8080_8080_8080_8080;

/// A monomial packed into one `u128`.
///
/// Byte `i` (for `i < 15`) is the exponent of `x_i`, byte 15 is the total degree.
/// Products are plain integer additions; divisibility is a borrow-free byte test.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(u128);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn var(i: usize) -> Monomial {
        assert!(i < MAX_VARS, "variable index {i} exceeds {MAX_VARS}");
        Monomial((1u128 << (8 * i)) | (1u128 << DEG_SHIFT))
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Monomial> {
        if exps.len() > MAX_VARS {
            return Err(Error::VariableOutOfRange { index: exps.len() - 1, nvars: MAX_VARS });
        }
        let deg: u32 = exps.iter().sum();
        if deg > MAX_EXP {
            return Err(Error::Parse(format!("monomial degree {deg} exceeds {MAX_EXP}")));
        }
        let mut m = (deg as u128) << DEG_SHIFT;
        for (i, &e) in exps.iter().enumerate() {
            m |= (e as u128) << (8 * i);
        }
        Ok(Monomial(m))
    }

    #[inline]
    pub fn exponent(self, i: usize) -> u32 {
        ((self.0 >> (8 * i)) & 0xff) as u32
    }

    #[inline]
    pub fn degree(self) -> u32 {
        (self.0 >> DEG_SHIFT) as u32
    }

    pub fn exponents(self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exponent(i)).collect()
    }

    /// Highest variable index with a nonzero exponent, plus one.
    pub fn support_len(self) -> usize {
        let low = self.0 & LOW;
        if low == 0 {
            0
        } else {
            (128 - low.leading_zeros() as usize).div_ceil(8)
        }
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn mul(self, other: Monomial) -> Monomial {
        debug_assert!(self.degree() + other.degree() <= MAX_EXP, "monomial degree overflow");
        Monomial(self.0 + other.0)
    }

    #[inline]
    pub fn divides(self, other: Monomial) -> bool {
        ((other.0 | HIGH_BITS) - self.0) & HIGH_BITS == HIGH_BITS
    }

    /// `other / self`, if `self` divides `other`.
    #[inline]
    pub fn divide_into(self, other: Monomial) -> Option<Monomial> {
        self.divides(other).then(|| Monomial(other.0 - self.0))
    }

    pub fn lcm(self, other: Monomial) -> Monomial {
        self.zip_bytes(other, u32::max)
    }

    pub fn gcd(self, other: Monomial) -> Monomial {
        self.zip_bytes(other, u32::min)
    }

    pub fn is_coprime(self, other: Monomial) -> bool {
        self.gcd(other).is_one()
    }

    fn zip_bytes(self, other: Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        let mut m = 0u128;
        let mut deg = 0;
        for i in 0..MAX_VARS {
            let e = f(self.exponent(i), other.exponent(i));
            deg += e;
            m |= (e as u128) << (8 * i);
        }
        Monomial(m | ((deg as u128) << DEG_SHIFT))
    }

    /// Drops the listed variables (mask bit i = variable i).
    pub fn restrict(self, mask: u16) -> Monomial {
        let mut keep = 0u128;
        for i in 0..MAX_VARS {
            if mask & (1 << i) != 0 {
                keep |= 0xffu128 << (8 * i);
            }
        }
        let low = self.0 & keep;
        Monomial(low | ((byte_sum(low) as u128) << DEG_SHIFT))
    }

    /// Degree reverse lexicographic comparison (x0 > x1 > ...).
    #[inline]
    pub fn cmp_degrevlex(self, other: Monomial) -> Ordering {
        // equal degrees: larger packed value means a larger exponent in a later variable
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => (other.0 & LOW).cmp(&(self.0 & LOW)),
            o => o,
        }
    }

    /// Exponent of `x_i` removed entirely.
    pub fn without_var(self, i: usize) -> Monomial {
        let e = self.exponent(i) as u128;
        Monomial(self.0 - (e << (8 * i)) - (e << DEG_SHIFT))
    }

    /// Monomial with every exponent of `x_i` replaced by `e`.
    pub fn with_exponent(self, i: usize, e: u32) -> Monomial {
        let base = self.without_var(i);
        Monomial(base.0 + ((e as u128) << (8 * i)) + ((e as u128) << DEG_SHIFT))
    }

    pub fn raw(self) -> u128 {
        self.0
    }
}

fn byte_sum(low: u128) -> u32 {
    let a = low as u64;
    let b = (low >> 64) as u64;
    a.to_le_bytes().iter().chain(b.to_le_bytes().iter()).map(|&x| x as u32).sum()
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.support_len();
        write!(f, "{:?}", self.exponents(n))
    }
}

/// Monomial orders. Both are degree-compatible on each block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    Degrevlex,
    /// Block order: the variables in `eliminate` (bit mask) form the leading block,
    /// compared by degrevlex first; ties are broken by degrevlex on the remaining variables.
    Elimination { eliminate: u16 },
}

/// Totally ordered key: `a > b` in the order iff `key(a) > key(b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SortKey {
    hi: u128,
    lo: u128,
}

#[inline]
fn dr_key(m: Monomial) -> u128 {
    ((m.degree() as u128) << DEG_SHIFT) | (LOW ^ (m.0 & LOW))
}

impl MonomialOrder {
    /// Block order eliminating the variables `k..nvars` (keeping the first `k`).
    pub fn eliminate_after(k: usize, nvars: usize) -> MonomialOrder {
        let mask = (k..nvars).fold(0u16, |m, i| m | (1 << i));
        MonomialOrder::Elimination { eliminate: mask }
    }

    #[inline]
    pub fn key(&self, m: Monomial) -> SortKey {
        match *self {
            MonomialOrder::Degrevlex => SortKey { hi: dr_key(m), lo: 0 },
            MonomialOrder::Elimination { eliminate } => {
                let e = m.restrict(eliminate);
                let r = Monomial(m.0 - e.0);
                SortKey { hi: dr_key(e), lo: dr_key(r) }
            }
        }
    }

    #[inline]
    pub fn cmp(&self, a: Monomial, b: Monomial) -> Ordering {
        match self {
            MonomialOrder::Degrevlex => a.cmp_degrevlex(b),
            _ => self.key(a).cmp(&self.key(b)),
        }
    }

    /// Whether `m` involves only variables outside the eliminated block.
    pub fn is_kept(&self, m: Monomial) -> bool {
        match *self {
            MonomialOrder::Degrevlex => true,
            MonomialOrder::Elimination { eliminate } => m.restrict(eliminate).is_one(),
        }
    }
}

/// All monomials of degree `d` in `nvars` variables, in descending degrevlex order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    assert!(nvars <= MAX_VARS);
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::ONE);
        }
        return out;
    }
    let mut exps = vec![0u32; nvars];
    fill(&mut exps, 0, d, &mut out);
    out.sort_unstable_by(|a, b| b.cmp_degrevlex(*a));
    out
}

fn fill(exps: &mut [u32], i: usize, left: u32, out: &mut Vec<Monomial>) {
    if i + 1 == exps.len() {
        exps[i] = left;
        out.push(Monomial::from_exponents(exps).expect("degree within range"));
        return;
    }
    for e in (0..=left).rev() {
        exps[i] = e;
        fill(exps, i + 1, left - e, out);
    }
}

/// Binomial coefficient as u64 (exact for the sizes used here).
pub fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < k || n < 0 {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}
