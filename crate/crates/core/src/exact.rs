//! Exact square roots and root extraction over Q and Q(i).
//!
//! Roots are located numerically, then lifted: after the substitution
//! `y = D x` (with `D` the common denominator of the monic squarefree part)
//! every root in the field becomes an integer or Gaussian integer, which is
//! recovered by rounded exact Newton steps and confirmed by exact evaluation.

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::roots;
use crate::scalar::Scalar;

const NEWTON_STEPS: usize = 96;

pub(crate) trait ExactLift: Scalar {
    /// Least common multiple of the denominators of all rational components.
    fn common_denominator(&self) -> BigInt;
    fn from_integer(k: &BigInt) -> Self;
    /// Nearest integer (componentwise for Gaussian rationals).
    fn round_integral(&self) -> Self;
    fn from_approx(z: Complex64) -> Option<Self>;
}

impl ExactLift for BigRational {
    fn common_denominator(&self) -> BigInt {
        self.denom().clone()
    }

    fn from_integer(k: &BigInt) -> Self {
        BigRational::from_integer(k.clone())
    }

    fn round_integral(&self) -> Self {
        self.round()
    }

    fn from_approx(z: Complex64) -> Option<Self> {
        BigRational::from_float(z.re)
    }
}

impl ExactLift for Complex<BigRational> {
    fn common_denominator(&self) -> BigInt {
        self.re.denom().lcm(self.im.denom())
    }

    fn from_integer(k: &BigInt) -> Self {
        Complex::new(BigRational::from_integer(k.clone()), BigRational::zero())
    }

    fn round_integral(&self) -> Self {
        Complex::new(self.re.round(), self.im.round())
    }

    fn from_approx(z: Complex64) -> Option<Self> {
        Some(Complex::new(
            BigRational::from_float(z.re)?,
            BigRational::from_float(z.im)?,
        ))
    }
}

pub(crate) fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

pub(crate) fn gaussian_sqrt(z: &Complex<BigRational>) -> Option<Complex<BigRational>> {
    if z.im.is_zero() {
        return if z.re.is_negative() {
            rational_sqrt(&-z.re.clone()).map(|s| Complex::new(BigRational::zero(), s))
        } else {
            rational_sqrt(&z.re).map(|s| Complex::new(s, BigRational::zero()))
        };
    }
    let norm = rational_sqrt(&(&z.re * &z.re + &z.im * &z.im))?;
    let two = BigRational::from_integer(BigInt::from(2));
    let re = rational_sqrt(&((&norm + &z.re) / &two))?;
    if re.is_zero() {
        return None;
    }
    let im = &z.im / (&two * &re);
    let root = Complex::new(re, im);
    (root.clone() * root.clone() == *z).then_some(root)
}

pub(crate) fn field_roots<S: ExactLift>(p: &Polynomial<S>) -> Result<Vec<S>> {
    let deg = match p.degree() {
        None => return Err(Error::InvalidInput("roots of the zero polynomial".into())),
        Some(0) => return Ok(Vec::new()),
        Some(d) => d,
    };
    let monic = p.monic();
    let g = Polynomial::gcd(&monic, &monic.derivative());
    let (squarefree, _) = monic.div_rem(&g);
    let n = squarefree.degree().unwrap_or(0);
    if n == 0 {
        return Ok(Vec::new());
    }

    let den = squarefree
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(&c.common_denominator()));
    let scale = S::from_integer(&den);
    // monic integral model: q(y) = D^n * sqf(y / D)
    let mut q_coeffs = Vec::with_capacity(n + 1);
    let mut power = S::one();
    for k in (0..=n).rev() {
        q_coeffs.push((k, squarefree.coeffs()[k].clone() * power.clone()));
        power = power * scale.clone();
    }
    q_coeffs.sort_by_key(|(k, _)| *k);
    let q = Polynomial::new(q_coeffs.into_iter().map(|(_, c)| c).collect());
    let dq = q.derivative();

    // lift one root at a time, deflating exactly so the remaining
    // approximations are not polluted by roots already found
    let mut distinct: Vec<S> = Vec::new();
    let mut rest = squarefree;
    while rest.degree().unwrap_or(0) > 0 {
        let lifted = roots::approximate_roots(&rest.to_c64())?
            .into_iter()
            .find_map(|approx| lift_root(&q, &dq, &scale, approx));
        let Some(root) = lifted else {
            break;
        };
        rest = rest.div_rem(&Polynomial::new(vec![-root.clone(), S::one()])).0;
        distinct.push(root);
    }

    let mut out = Vec::with_capacity(deg);
    for r in distinct {
        let linear = Polynomial::new(vec![-r.clone(), S::one()]);
        let mut rest = monic.clone();
        loop {
            let (quo, rem) = rest.div_rem(&linear);
            if !rem.is_zero() {
                break;
            }
            out.push(r.clone());
            rest = quo;
        }
    }
    Ok(out)
}

/// Rounded exact Newton iteration on the integral model `q`, starting from
/// an approximation of a root of the original polynomial.
fn lift_root<S: ExactLift>(
    q: &Polynomial<S>,
    dq: &Polynomial<S>,
    scale: &S,
    approx: Complex64,
) -> Option<S> {
    let mut y = (S::from_approx(approx)? * scale.clone()).round_integral();
    for _ in 0..NEWTON_STEPS {
        let v = q.eval(&y);
        if v.is_zero() {
            return Some(y / scale.clone());
        }
        let d = dq.eval(&y);
        if d.is_zero() {
            return None;
        }
        let next = (y.clone() - v / d).round_integral();
        if next == y {
            return None;
        }
        y = next;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn g(re: BigRational, im: BigRational) -> Complex<BigRational> {
        Complex::new(re, im)
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        let roots = [q(3, 7), q(3, 7), q(-5, 2), q(11, 3)];
        let p = Polynomial::from_roots(&roots);
        let mut found = field_roots(&p).unwrap();
        found.sort();
        let mut want = roots.to_vec();
        want.sort();
        assert_eq!(found, want);
    }

    #[test]
    fn irrational_roots_are_skipped() {
        // (x^2 - 2)(x - 1/3)
        let p = Polynomial::new(vec![q(2, 3), q(-2, 1), q(-1, 3), q(1, 1)]);
        assert_eq!(field_roots(&p).unwrap(), vec![q(1, 3)]);
    }

    #[test]
    fn gaussian_roots_large_denominators() {
        let roots = [
            g(q(123456789, 1000), q(-987654321, 77)),
            g(q(-1, 3), q(1, 5)),
            g(q(0, 1), q(1, 1)),
            g(q(7, 2), q(0, 1)),
        ];
        let p = Polynomial::from_roots(&roots);
        let found = field_roots(&p).unwrap();
        assert_eq!(found.len(), 4);
        for r in &roots {
            assert!(found.contains(r));
        }
    }

    #[test]
    fn perfect_square_quartic() {
        // (x^2 - 4)^2 over Q(i)
        let c = |n: i64| g(q(n, 1), q(0, 1));
        let p = Polynomial::new(vec![c(16), c(0), c(-8), c(0), c(1)]);
        let found = field_roots(&p).unwrap();
        assert_eq!(found.len(), 4);
        assert_eq!(found.iter().filter(|r| **r == c(2)).count(), 2);
    }
}
