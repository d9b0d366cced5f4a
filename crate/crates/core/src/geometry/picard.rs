//! Divisor classes on a blow-up of the plane.
//!
//! A class `a P - Σ b_i L_i - Σ c_j E_j` is stored as `(a; b; c)`. The two exceptional
//! families only differ in name: `L_i` are the blow-ups of points imposed with higher
//! multiplicity in the constructions, `E_j` the rest.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivisorClass {
    pub a: i64,
    pub b: Vec<i64>,
    pub c: Vec<i64>,
}

/// Self-intersection, degree against the polarization and arithmetic genus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInvariants {
    pub self_intersection: i64,
    pub degree: i64,
    pub genus: i64,
}

impl DivisorClass {
    pub fn new(a: i64, b: Vec<i64>, c: Vec<i64>) -> Self {
        DivisorClass { a, b, c }
    }

    /// The canonical class `-3P + Σ L_i + Σ E_j`.
    pub fn canonical(nb: usize, nc: usize) -> Self {
        DivisorClass::new(-3, vec![-1; nb], vec![-1; nc])
    }

    pub fn same_lattice(&self, other: &DivisorClass) -> bool {
        self.b.len() == other.b.len() && self.c.len() == other.c.len()
    }

    pub fn dot(&self, other: &DivisorClass) -> Result<i64> {
        if !self.same_lattice(other) {
            return Err(Error::LatticeMismatch);
        }
        let eb: i64 = self.b.iter().zip(&other.b).map(|(x, y)| x * y).sum();
        let ec: i64 = self.c.iter().zip(&other.c).map(|(x, y)| x * y).sum();
        Ok(self.a * other.a - eb - ec)
    }

    pub fn add(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.combine(other, -1)
    }

    pub fn scale(&self, k: i64) -> DivisorClass {
        DivisorClass::new(
            k * self.a,
            self.b.iter().map(|x| k * x).collect(),
            self.c.iter().map(|x| k * x).collect(),
        )
    }

    fn combine(&self, other: &DivisorClass, s: i64) -> Result<DivisorClass> {
        if !self.same_lattice(other) {
            return Err(Error::LatticeMismatch);
        }
        Ok(DivisorClass::new(
            self.a + s * other.a,
            self.b.iter().zip(&other.b).map(|(x, y)| x + s * y).collect(),
            self.c.iter().zip(&other.c).map(|(x, y)| x + s * y).collect(),
        ))
    }

    /// Riemann–Roch Euler characteristic `1 + (D² - D·K)/2`.
    pub fn euler_characteristic(&self, k: &DivisorClass) -> Result<i64> {
        let num = self.dot(self)? - self.dot(k)?;
        if num % 2 != 0 {
            return Err(Error::ParityViolation(num));
        }
        Ok(1 + num / 2)
    }

    /// Multiplicities of the plane model, in the order `b` then `c`.
    pub fn multiplicities(&self) -> Vec<i64> {
        self.b.iter().chain(&self.c).copied().collect()
    }

    /// Expected dimension of the plane system: forms of degree `a` minus the conditions
    /// imposed by the multiplicities.
    pub fn expected_plane_dimension(&self) -> i64 {
        let forms = (self.a + 1) * (self.a + 2) / 2;
        let conds: i64 = self.multiplicities().iter().map(|&m| m.max(0) * (m.max(0) + 1) / 2).sum();
        forms - conds
    }
}

/// `D²`, `D·H` and `p_a(D) = (D² + D·K)/2 + 1`.
pub fn class_invariants(d: &DivisorClass, k: &DivisorClass, h: &DivisorClass) -> Result<ClassInvariants> {
    let d2 = d.dot(d)?;
    let dk = d.dot(k)?;
    if (d2 + dk) % 2 != 0 {
        return Err(Error::ParityViolation(d2 + dk));
    }
    Ok(ClassInvariants {
        self_intersection: d2,
        degree: d.dot(h)?,
        genus: (d2 + dk) / 2 + 1,
    })
}

/// Classes used by the constructions on the plane blown up in five double points
/// `l_1..l_5` and six simple points `e_1..e_6`.
pub mod eleven_points {
    use super::DivisorClass;

    pub fn canonical() -> DivisorClass {
        DivisorClass::canonical(5, 6)
    }

    /// The polarization `6P - 2ΣL_i - ΣE_j`.
    pub fn hyperplane() -> DivisorClass {
        DivisorClass::new(6, vec![2; 5], vec![1; 6])
    }

    /// Conics through `l_1, l_2, e_1, e_2`.
    pub fn conic_pencil() -> DivisorClass {
        DivisorClass::new(2, vec![1, 1, 0, 0, 0], vec![1, 1, 0, 0, 0, 0])
    }

    /// The conic through `l_1, l_2, e_1, e_2, e_6`.
    pub fn conic_d1() -> DivisorClass {
        DivisorClass::new(2, vec![1, 1, 0, 0, 0], vec![1, 1, 0, 0, 0, 1])
    }

    /// `2H - R`.
    pub fn genus8_curve() -> DivisorClass {
        hyperplane().scale(2).sub(&conic_pencil()).expect("same lattice")
    }

    /// `2H - D_1`.
    pub fn genus9_curve() -> DivisorClass {
        hyperplane().scale(2).sub(&conic_d1()).expect("same lattice")
    }
}
