use std::fmt;

use super::field::PrimeField;
use crate::error::{Error, Result};

/// Dense row-major matrix over a prime field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Result of [`Matrix::rref`].
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: PrimeField, cols: usize, rows: Vec<Vec<u32>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r.into_iter().map(|v| v % field.modulus()));
        }
        Matrix {
            field,
            rows: n,
            cols,
            data,
        }
    }

    pub fn from_fn(field: PrimeField, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let mut m = Self::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = f(i, j) % field.modulus();
            }
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let p = self.field.modulus() as u64;
        (0..self.rows)
            .map(|i| {
                let acc = self
                    .row(i)
                    .iter()
                    .zip(v)
                    .fold(0u64, |acc, (&a, &b)| (acc + a as u64 * b as u64) % p);
                acc as u32
            })
            .collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.rows);
        let f = self.field;
        let mut out = vec![0u32; self.cols];
        for (i, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, &a) in out.iter_mut().zip(self.row(i)) {
                *o = f.mul_add(*o, c, a);
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            let r = other.vec_mul(self.row(i));
            out.data[i * other.cols..(i + 1) * other.cols].copy_from_slice(&r);
        }
        out
    }

    /// Reduced row echelon form by Gauss–Jordan elimination.
    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        Echelon {
            matrix: m,
            pivots,
            rank,
        }
    }

    /// Brings `self` into reduced row echelon form; returns pivot columns.
    /// Zero rows end up at the bottom.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let p = f.modulus() as u64;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(piv) = (r..self.rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if piv != r {
                for j in c..cols {
                    self.data.swap(piv * cols + j, r * cols + j);
                }
            }
            let inv = f.inv_nz(self.data[r * cols + c]);
            for j in c..cols {
                let v = &mut self.data[r * cols + j];
                *v = f.mul(*v, inv);
            }
            let (before, rest) = self.data.split_at_mut(r * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            let eliminate = |row: &mut [u32]| {
                let coef = row[c];
                if coef == 0 {
                    return;
                }
                let neg = p - coef as u64;
                for j in c..cols {
                    let b = pivot_row[j];
                    if b != 0 {
                        row[j] = ((row[j] as u64 + neg * b as u64) % p) as u32;
                    }
                }
            };
            for row in before.chunks_mut(cols) {
                eliminate(row);
            }
            for row in after.chunks_mut(cols) {
                eliminate(row);
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right null space `{v : M v = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        let e = self.rref();
        let f = self.field;
        let mut is_pivot = vec![false; self.cols];
        for &c in &e.pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (i, &pc) in e.pivots.iter().enumerate() {
                v[pc] = f.neg(e.matrix.get(i, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of the left null space `{w : w M = 0}`.
    pub fn left_kernel_basis(&self) -> Vec<Vec<u32>> {
        self.transpose().kernel_basis()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let piv = aug.rref_in_place();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return Err(Error::DivisionByZero(self.field.modulus()));
        }
        Ok(Matrix::from_fn(self.field, n, n, |i, j| aug.get(i, n + j)))
    }

    /// Solves `M x = b`, returning one solution if any exists.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, b[i]);
        }
        let piv = aug.rref_in_place();
        if piv.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0u32; self.cols];
        for (i, &c) in piv.iter().enumerate() {
            x[c] = aug.get(i, self.cols);
        }
        Some(x)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Incrementally maintained row space: an echelon basis that new vectors are reduced against.
///
/// Used for span-dimension counts where vectors arrive one at a time.
#[derive(Clone, Debug)]
pub struct RowSpace {
    field: PrimeField,
    dim: usize,
    // echelon rows keyed by pivot column, each normalized to pivot 1
    rows: Vec<(usize, Vec<u32>)>,
    by_pivot: Vec<Option<usize>>,
}

impl RowSpace {
    pub fn new(field: PrimeField, dim: usize) -> Self {
        RowSpace {
            field,
            dim,
            rows: Vec::new(),
            by_pivot: vec![None; dim],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Reduces `v` against the basis; returns the reduced vector (zero iff `v` is in the span).
    pub fn reduce(&self, v: &mut [u32]) {
        let f = self.field;
        let p = f.modulus() as u64;
        for c in 0..self.dim {
            let coef = v[c];
            if coef == 0 {
                continue;
            }
            if let Some(ri) = self.by_pivot[c] {
                let row = &self.rows[ri].1;
                let neg = p - coef as u64;
                for j in c..self.dim {
                    let b = row[j];
                    if b != 0 {
                        v[j] = ((v[j] as u64 + neg * b as u64) % p) as u32;
                    }
                }
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns true when it increased the rank.
    pub fn insert(&mut self, mut v: Vec<u32>) -> bool {
        self.reduce(&mut v);
        let Some(c) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv_nz(v[c]);
        for x in v.iter_mut() {
            *x = self.field.mul(*x, inv);
        }
        self.by_pivot[c] = Some(self.rows.len());
        self.rows.push((c, v));
        true
    }

    pub fn basis(&self) -> impl Iterator<Item = &[u32]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    #[test]
    fn trivial_ranks() {
        let f = f7();
        assert_eq!(Matrix::identity(f, 3).rank(), 3);
        assert_eq!(Matrix::zeros(f, 2, 5).rank(), 0);
        let m = Matrix::from_rows(f, 2, vec![vec![1, 2], vec![2, 4]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn trivial_kernels() {
        let f = f7();
        assert!(Matrix::identity(f, 3).kernel_basis().is_empty());
        assert_eq!(Matrix::zeros(f, 1, 4).kernel_basis().len(), 4);
    }

    #[test]
    fn random_kernel_is_annihilated_and_independent() {
        let f = PrimeField::new(10007).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let m = Matrix::from_fn(f, 5, 8, |_, _| rng.gen_range(0..10007));
        assert_eq!(m.rank(), 5);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 3);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|&x| x == 0));
        }
        assert_eq!(Matrix::from_rows(f, 8, k).rank(), 3);
    }

    #[test]
    fn rref_idempotent() {
        let f = PrimeField::new(101).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let r = rng.gen_range(1..7);
            let c = rng.gen_range(1..7);
            let m = Matrix::from_fn(f, r, c, |_, _| if rng.gen_bool(0.5) { 0 } else { rng.gen_range(0..101) });
            let once = m.rref().matrix;
            assert_eq!(once.rref().matrix, once);
        }
    }

    #[test]
    fn inverse_and_solve() {
        let f = PrimeField::new(10007).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let m = Matrix::from_fn(f, 4, 4, |_, _| rng.gen_range(0..10007));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(f, 4));
        let b = vec![1, 2, 3, 4];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        assert!(Matrix::zeros(f, 2, 2).inverse().is_err());
    }

    #[test]
    fn row_space_tracks_rank() {
        let f = f7();
        let mut s = RowSpace::new(f, 3);
        assert!(s.insert(vec![1, 2, 3]));
        assert!(!s.insert(vec![2, 4, 6]));
        assert!(s.insert(vec![0, 1, 0]));
        assert!(s.contains(&[1, 0, 3]));
        assert_eq!(s.rank(), 2);
    }
}
