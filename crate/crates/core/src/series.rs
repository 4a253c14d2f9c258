//! Truncated power series, used for local expansions at the origin of a curve.

use crate::scalar::Scalar;

/// `sum_{k < len} c_k t^k`, truncated at a fixed precision.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Series<S> {
    pub fn new(mut coeffs: Vec<S>, precision: usize) -> Self {
        coeffs.resize(precision, S::zero());
        Self { coeffs }
    }

    pub fn constant(c: S, precision: usize) -> Self {
        Self::new(vec![c], precision)
    }

    /// `c t^k`.
    pub fn monomial(c: S, k: usize, precision: usize) -> Self {
        let mut v = vec![S::zero(); precision];
        if k < precision {
            v[k] = c;
        }
        Self { coeffs: v }
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.precision().min(o.precision());
        Self::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect(), n)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-S::one()))
    }

    pub fn scale(&self, k: &S) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c.clone() * k.clone()).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.precision().min(o.precision());
        let mut out = vec![S::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n - i) {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self { coeffs: out }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inv(&self) -> Self {
        let n = self.precision();
        let c0 = self.coeff(0);
        assert!(!c0.is_zero(), "series inverse needs a unit constant term");
        let c0_inv = c0.inv();
        let mut out = vec![S::zero(); n];
        out[0] = c0_inv.clone();
        for k in 1..n {
            let mut acc = S::zero();
            for j in 1..=k {
                acc = acc + self.coeff(j) * out[k - j].clone();
            }
            out[k] = -(acc * c0_inv.clone());
        }
        Self { coeffs: out }
    }

    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv())
    }

    /// Formal derivative `d/dt`; the top coefficient is lost.
    pub fn derivative(&self) -> Self {
        let n = self.precision();
        let v = (1..n).map(|k| self.coeff(k) * S::from_i64(k as i64)).collect();
        Self::new(v, n)
    }
}
