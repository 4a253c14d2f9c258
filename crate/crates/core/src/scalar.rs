//! Scalar domains.
//!
//! Every algebraic routine in the crate is generic over [`Scalar`]: a field
//! with enough extra structure to extract square roots and polynomial roots
//! when they exist. Three families implement it:
//!
//! * [`BigRational`]: exact rationals,
//! * `Complex<BigRational>`: exact Gaussian rationals,
//! * `Complex<f32>` / `Complex<f64>`: complex floats, compared with a
//!   relative tolerance.

use std::cmp::Ordering;
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Result;
use crate::exact;
use crate::poly::Polynomial;
use crate::roots;

/// Default relative tolerance for binary64 comparisons.
pub const F64_TOLERANCE: f64 = 1e-9;
/// Default relative tolerance for binary32 comparisons.
pub const F32_TOLERANCE: f64 = 1e-4;

pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Whether equality in this domain is decided exactly.
    const EXACT: bool;

    /// Relative tolerance for approximate comparisons; `0.0` when exact.
    fn tolerance() -> f64;

    fn from_i64(n: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }

    /// The imaginary unit, when the domain contains it.
    fn imaginary_unit() -> Option<Self>;

    fn to_c64(&self) -> Complex64;

    fn modulus(&self) -> f64 {
        self.to_c64().norm()
    }

    /// Total order on `(re, im)`, used only for deterministic choices.
    fn lex_cmp(&self, other: &Self) -> Ordering;

    fn conj(&self) -> Self;

    /// A square root in the field, if one exists.
    fn sqrt(&self) -> Option<Self>;

    /// All roots of `p` that lie in the field, repeated by multiplicity.
    ///
    /// Float domains always return `deg p` roots. Exact domains may return
    /// fewer when some roots live in an extension.
    fn field_roots(p: &Polynomial<Self>) -> Result<Vec<Self>>;

    fn is_finite(&self) -> bool {
        true
    }

    /// Equality up to the domain tolerance, relative to `scale` and the
    /// magnitudes of both operands.
    fn near(&self, other: &Self, scale: f64) -> bool {
        if Self::EXACT {
            return self == other;
        }
        let d = (self.clone() - other.clone()).modulus();
        d <= Self::tolerance() * scale.max(self.modulus()).max(other.modulus())
    }

    /// Zero up to the domain tolerance relative to `scale`.
    fn negligible(&self, scale: f64) -> bool {
        if Self::EXACT {
            return self.is_zero();
        }
        self.modulus() <= Self::tolerance() * scale
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }

    fn powu(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc * self.clone();
        }
        acc
    }

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn rat_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // numerator/denominator overflow f64 separately; scale down first
        let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000) as i32;
        let n = (r.numer() >> shift as usize).to_f64().unwrap_or(f64::NAN);
        let d = (r.denom() >> shift as usize).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn tolerance() -> f64 {
        0.0
    }

    fn from_i64(n: i64) -> Self {
        rat(n)
    }

    fn imaginary_unit() -> Option<Self> {
        None
    }

    fn to_c64(&self) -> Complex64 {
        Complex64::new(rat_to_f64(self), 0.0)
    }

    fn lex_cmp(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn sqrt(&self) -> Option<Self> {
        exact::rational_sqrt(self)
    }

    fn field_roots(p: &Polynomial<Self>) -> Result<Vec<Self>> {
        exact::field_roots(p)
    }
}

impl Scalar for Complex<BigRational> {
    const EXACT: bool = true;

    fn tolerance() -> f64 {
        0.0
    }

    fn from_i64(n: i64) -> Self {
        Complex::new(rat(n), BigRational::zero())
    }

    fn imaginary_unit() -> Option<Self> {
        Some(Complex::new(BigRational::zero(), BigRational::one()))
    }

    fn to_c64(&self) -> Complex64 {
        Complex64::new(rat_to_f64(&self.re), rat_to_f64(&self.im))
    }

    fn lex_cmp(&self, other: &Self) -> Ordering {
        self.re.cmp(&other.re).then_with(|| self.im.cmp(&other.im))
    }

    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn sqrt(&self) -> Option<Self> {
        exact::gaussian_sqrt(self)
    }

    fn field_roots(p: &Polynomial<Self>) -> Result<Vec<Self>> {
        exact::field_roots(p)
    }
}

macro_rules! impl_float_scalar {
    ($t:ty, $tol:expr) => {
        impl Scalar for Complex<$t> {
            const EXACT: bool = false;

            fn tolerance() -> f64 {
                $tol
            }

            fn from_i64(n: i64) -> Self {
                Complex::new(n as $t, 0.0)
            }

            fn from_ratio(num: i64, den: i64) -> Self {
                Complex::new((num as f64 / den as f64) as $t, 0.0)
            }

            fn imaginary_unit() -> Option<Self> {
                Some(Complex::new(0.0, 1.0))
            }

            fn to_c64(&self) -> Complex64 {
                Complex64::new(self.re as f64, self.im as f64)
            }

            fn lex_cmp(&self, other: &Self) -> Ordering {
                self.re
                    .total_cmp(&other.re)
                    .then_with(|| self.im.total_cmp(&other.im))
            }

            fn conj(&self) -> Self {
                Complex::conj(self)
            }

            fn sqrt(&self) -> Option<Self> {
                Some(Complex::sqrt(*self))
            }

            fn field_roots(p: &Polynomial<Self>) -> Result<Vec<Self>> {
                let found = roots::roots_complex(p, Self::tolerance())?;
                Ok(found
                    .into_iter()
                    .map(|z| Complex::new(z.re as $t, z.im as $t))
                    .collect())
            }

            fn is_finite(&self) -> bool {
                self.re.is_finite() && self.im.is_finite()
            }
        }
    };
}

impl_float_scalar!(f64, F64_TOLERANCE);
impl_float_scalar!(f32, F32_TOLERANCE);
