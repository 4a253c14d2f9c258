//! 2x2 integer matrices.

use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mat2 {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        Self { a: a.into(), b: b.into(), c: c.into(), d: d.into() }
    }

    pub fn identity() -> Self {
        Self::new(1, 0, 0, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.d.is_one() && self.b.is_zero() && self.c.is_zero()
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(), |acc, _| &acc * self)
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;

    fn mul(self, n: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &n.a + &self.b * &n.c,
            b: &self.a * &n.b + &self.b * &n.d,
            c: &self.c * &n.a + &self.d * &n.c,
            d: &self.c * &n.b + &self.d * &n.d,
        }
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, n: Mat2) -> Mat2 {
        &self * &n
    }
}

impl Neg for Mat2 {
    type Output = Mat2;

    fn neg(self) -> Mat2 {
        Mat2 { a: -self.a, b: -self.b, c: -self.c, d: -self.d }
    }
}

impl From<[[BigInt; 2]; 2]> for Mat2 {
    fn from([[a, b], [c, d]]: [[BigInt; 2]; 2]) -> Self {
        Self { a, b, c, d }
    }
}

impl From<Mat2> for [[BigInt; 2]; 2] {
    fn from(m: Mat2) -> Self {
        [[m.a, m.b], [m.c, m.d]]
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Product of two matrices.
pub fn mat2_mul(m: &Mat2, n: &Mat2) -> Mat2 {
    m * n
}

pub fn mat2_det(m: &Mat2) -> BigInt {
    m.det()
}
