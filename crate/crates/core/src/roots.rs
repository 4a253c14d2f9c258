//! Closed-form complex roots of polynomials of degree at most four.
//!
//! Quadratics use the cancellation-free formula, cubics Cardano's formula,
//! quartics Ferrari's reduction to a resolvent cubic (taking the resolvent
//! root that maximizes `|2m - P|`). Every root then gets a few guarded
//! Newton steps against the original polynomial.

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

const POLISH_STEPS: usize = 8;

/// All complex roots of `p`, with multiplicity.
///
/// Each returned root satisfies `|p(r)| <= tol * (1 + sum_k |c_k| |r|^k)`,
/// which reduces to `tol * (1 + |p|_1)` on the unit disc and stays
/// meaningful for roots of large modulus. Violations yield
/// [`Error::Tolerance`].
pub fn roots_complex<S: Scalar>(p: &Polynomial<S>, tol: f64) -> Result<Vec<Complex64>> {
    let pc = p.to_c64();
    let found = approximate_roots(&pc)?;
    for r in &found {
        let residual = pc.eval(r).norm();
        let bound = tol * (1.0 + absolute_eval(&pc, r.norm()));
        if residual > bound {
            return Err(Error::Tolerance {
                residual,
                tolerance: bound,
            });
        }
    }
    Ok(found)
}

/// Closed-form roots plus polishing, without a residual gate.
pub(crate) fn approximate_roots(pc: &Polynomial<Complex64>) -> Result<Vec<Complex64>> {
    let deg = pc.degree().unwrap_or(0);
    if deg == 0 || deg > 4 {
        return Err(Error::UnsupportedDegree(deg));
    }
    let lead = pc.leading();
    let c: Vec<Complex64> = pc.coeffs().iter().map(|x| x / lead).collect();
    let raw = match deg {
        1 => vec![-c[0]],
        2 => quadratic(c[1], c[0]).to_vec(),
        3 => cubic(c[2], c[1], c[0]).to_vec(),
        _ => quartic(c[3], c[2], c[1], c[0]).to_vec(),
    };
    let monic = Polynomial::new(c);
    Ok(raw.into_iter().map(|r| polish(&monic, r)).collect())
}

fn absolute_eval(p: &Polynomial<Complex64>, x: f64) -> f64 {
    p.coeffs().iter().rev().fold(0.0, |acc, c| acc * x + c.norm())
}

fn polish(p: &Polynomial<Complex64>, mut r: Complex64) -> Complex64 {
    let dp = p.derivative();
    let mut best = p.eval(&r).norm();
    for _ in 0..POLISH_STEPS {
        if best == 0.0 {
            break;
        }
        let d = dp.eval(&r);
        if d.is_zero() {
            break;
        }
        let next = r - p.eval(&r) / d;
        let res = p.eval(&next).norm();
        if res.is_nan() || res >= best {
            break;
        }
        best = res;
        r = next;
    }
    r
}

/// Roots of `x^2 + b x + c`.
pub(crate) fn quadratic(b: Complex64, c: Complex64) -> [Complex64; 2] {
    let mut s = (b * b - 4.0 * c).sqrt();
    if (b + s).norm() < (b - s).norm() {
        s = -s;
    }
    let q = -(b + s) / 2.0;
    if q.is_zero() {
        return [Complex64::zero(), Complex64::zero()];
    }
    [q, c / q]
}

/// Roots of `x^3 + a x^2 + b x + c`.
pub(crate) fn cubic(a: Complex64, b: Complex64, c: Complex64) -> [Complex64; 3] {
    let shift = a / 3.0;
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    let s = (q * q / 4.0 + p * p * p / 27.0).sqrt();
    let u1 = -q / 2.0 + s;
    let u2 = -q / 2.0 - s;
    let u = if u1.norm() >= u2.norm() { u1 } else { u2 };
    let big_c = u.cbrt();
    if big_c.is_zero() {
        return [-shift; 3];
    }
    let omega = Complex64::new(-0.5, 3f64.sqrt() / 2.0);
    let mut out = [Complex64::zero(); 3];
    let mut ck = big_c;
    for slot in out.iter_mut() {
        *slot = ck - p / (3.0 * ck) - shift;
        ck *= omega;
    }
    out
}

/// Roots of `x^4 + a x^3 + b x^2 + c x + d`.
pub(crate) fn quartic(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> [Complex64; 4] {
    let shift = a / 4.0;
    let a2 = a * a;
    let p = b - 3.0 * a2 / 8.0;
    let q = c - a * b / 2.0 + a2 * a / 8.0;
    let r = d - a * c / 4.0 + a2 * b / 16.0 - 3.0 * a2 * a2 / 256.0;

    // resolvent: 8m^3 - 4P m^2 - 8R m + (4PR - Q^2) = 0
    let ms = cubic(-p / 2.0, -r, (4.0 * p * r - q * q) / 8.0);
    let m = ms
        .into_iter()
        .max_by(|x, y| (2.0 * x - p).norm().total_cmp(&(2.0 * y - p).norm()))
        .expect("three resolvent roots");
    let s = (2.0 * m - p).sqrt();
    let scale = 1.0 + p.norm() + q.norm().sqrt() + r.norm().sqrt();
    let ys: [Complex64; 4] = if s.norm() <= 1e-14 * scale {
        // biquadratic: y^4 + P y^2 + R
        let [z1, z2] = quadratic(p, r);
        let (w1, w2) = (z1.sqrt(), z2.sqrt());
        [w1, -w1, w2, -w2]
    } else {
        let t = q / (2.0 * s);
        let [y1, y2] = quadratic(-s, m + t);
        let [y3, y4] = quadratic(s, m - t);
        [y1, y2, y3, y4]
    };
    ys.map(|y| y - shift)
}
