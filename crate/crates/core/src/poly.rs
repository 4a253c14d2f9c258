//! Dense univariate polynomials over a [`Scalar`] field.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Coefficients in ascending degree order. Trailing zeros are trimmed, so
/// the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Polynomial<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    /// Monic polynomial with the given multiset of roots.
    pub fn from_roots(roots: &[S]) -> Self {
        roots.iter().fold(Self::constant(S::one()), |acc, r| {
            acc * Self::new(vec![-r.clone(), S::one()])
        })
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> S {
        self.coeffs.last().cloned().unwrap_or_else(S::zero)
    }

    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn eval(&self, x: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * S::from_i64(k as i64))
                .collect(),
        )
    }

    pub fn scale(&self, k: &S) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().inv())
    }

    /// Euclidean division. Panics on division by the zero polynomial.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead_inv = divisor.leading().inv();
        let mut rem = self.coeffs.clone();
        let n = self.coeffs.len();
        if n <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quo = vec![S::zero(); n - dd];
        for k in (0..n - dd).rev() {
            let c = rem[k + dd].clone() * lead_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * dc.clone();
            }
            rem[k + dd] = S::zero();
            quo[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quo), Self::new(rem))
    }

    /// Monic greatest common divisor (exact domains).
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Resultant via the determinant of the Sylvester matrix.
    pub fn resultant(&self, other: &Self) -> S {
        let (Some(m), Some(n)) = (self.degree(), other.degree()) else {
            return S::zero();
        };
        if m == 0 && n == 0 {
            return S::one();
        }
        let size = m + n;
        let mut rows = vec![vec![S::zero(); size]; size];
        for (i, row) in rows.iter_mut().take(n).enumerate() {
            for (k, c) in self.coeffs.iter().enumerate() {
                row[i + m - k] = c.clone();
            }
        }
        for (i, row) in rows.iter_mut().skip(n).take(m).enumerate() {
            for (k, c) in other.coeffs.iter().enumerate() {
                row[i + n - k] = c.clone();
            }
        }
        determinant(rows)
    }

    /// Discriminant normalized so that `disc(prod (x - r_i)) = prod_{i<j} (r_i - r_j)^2`.
    pub fn discriminant(&self) -> Result<S> {
        let n = match self.degree() {
            Some(d) if d >= 1 => d,
            d => {
                return Err(Error::InvalidInput(format!(
                    "discriminant needs degree >= 1, got {d:?}"
                )))
            }
        };
        if n == 1 {
            return Ok(S::one());
        }
        let res = self.resultant(&self.derivative());
        let sign = if (n * (n - 1) / 2) % 2 == 0 {
            S::one()
        } else {
            -S::one()
        };
        Ok(sign * res / self.leading())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    pub fn to_c64(&self) -> Polynomial<Complex64> {
        self.map(|c| c.to_c64())
    }

    /// Sum of coefficient moduli.
    pub fn norm1(&self) -> f64 {
        self.coeffs.iter().map(|c| c.modulus()).sum()
    }
}

/// Determinant by Gaussian elimination, pivoting on the largest modulus.
pub(crate) fn determinant<S: Scalar>(mut m: Vec<Vec<S>>) -> S {
    let n = m.len();
    let mut det = S::one();
    for col in 0..n {
        let pivot = (col..n)
            .filter(|&r| !m[r][col].is_zero())
            .max_by(|&a, &b| m[a][col].modulus().total_cmp(&m[b][col].modulus()));
        let Some(p) = pivot else {
            return S::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det = det * pv.clone();
        let inv = pv.inv();
        for r in col + 1..n {
            let f = m[r][col].clone() * inv.clone();
            if f.is_zero() {
                continue;
            }
            let (above, below) = m.split_at_mut(r);
            for (x, v) in below[0][col..].iter_mut().zip(&above[col][col..]) {
                *x = x.clone() - f.clone() * v.clone();
            }
        }
    }
    det
}

impl<S: Scalar> Add for Polynomial<S> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<S: Scalar> Sub for Polynomial<S> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<S: Scalar> Neg for Polynomial<S> {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<S: Scalar> Mul for Polynomial<S> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }
}
