//! Period lattices, fundamental-domain reduction and elliptic logarithms,
//! all in binary64.
//!
//! Periods come from the complex AGM on differences of the roots of
//! `X^3 + A X + B`; the elliptic logarithm uses the matching Landen descent.
//! Both are computed for `dX/Y` and then scaled by the differential's `c`.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::curve::{CurvePoint, MarkedTriple, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::poly::Polynomial;
use crate::report::Report;
use crate::roots::approximate_roots;
use crate::scalar::Scalar;

pub const AGM_MAX_ITERATIONS: usize = 64;
const AGM_EPS: f64 = 1e-15;

/// Basis `(omega1, omega2)` with `Im(omega2/omega1) > 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PeriodLattice {
    omega1: Complex64,
    omega2: Complex64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EllipticLogValue {
    pub z: Complex64,
    pub lattice: PeriodLattice,
}

impl PeriodLattice {
    /// Orients the basis so that `Im(omega2/omega1) > 0`.
    pub fn new(omega1: Complex64, omega2: Complex64) -> Result<Self> {
        if omega1.is_zero() || !omega1.is_finite() || !omega2.is_finite() {
            return Err(Error::InvalidInput("degenerate period basis".into()));
        }
        let ratio = omega2 / omega1;
        if ratio.im.abs() <= 1e-12 * ratio.norm().max(1.0) {
            return Err(Error::InvalidInput("periods are linearly dependent over R".into()));
        }
        let omega2 = if ratio.im < 0.0 { -omega2 } else { omega2 };
        Ok(Self { omega1, omega2 })
    }

    pub fn omega1(&self) -> Complex64 {
        self.omega1
    }

    pub fn omega2(&self) -> Complex64 {
        self.omega2
    }

    pub fn tau(&self) -> Complex64 {
        self.omega2 / self.omega1
    }

    pub fn scale(&self, k: Complex64) -> Result<Self> {
        Self::new(self.omega1 * k, self.omega2 * k)
    }

    /// Length of the shortest nonzero lattice vector.
    pub fn shortest(&self) -> f64 {
        let (_, m) = tau_reduce(self);
        self.apply(&m).1.norm()
    }

    /// Basis `(omega2', omega1')` after the change of basis `m`.
    fn apply(&self, m: &Mat2) -> (Complex64, Complex64) {
        let f = |x: &num_bigint::BigInt| x.to_f64().unwrap_or(f64::NAN);
        let w2 = self.omega2 * f(&m.a) + self.omega1 * f(&m.b);
        let w1 = self.omega2 * f(&m.c) + self.omega1 * f(&m.d);
        (w2, w1)
    }

    /// Distance from `z` to the nearest lattice point.
    pub fn distance_to_lattice(&self, z: Complex64) -> f64 {
        let (_, m) = tau_reduce(self);
        let (w2, w1) = self.apply(&m);
        let det = w1.re * w2.im - w2.re * w1.im;
        let s = (z.re * w2.im - w2.re * z.im) / det;
        let t = (w1.re * z.im - w1.im * z.re) / det;
        let (s0, t0) = (s.round(), t.round());
        let mut best = f64::INFINITY;
        for ds in -1..=1 {
            for dt in -1..=1 {
                let p = w1 * (s0 + ds as f64) + w2 * (t0 + dt as f64);
                best = best.min((z - p).norm());
            }
        }
        best
    }

    /// Distance to the lattice in units of the shortest period.
    pub fn relative_distance(&self, z: Complex64) -> f64 {
        self.distance_to_lattice(z) / self.shortest()
    }
}

/// `tau = omega2/omega1` moved into `|Re tau| <= 1/2`, `|tau| >= 1`, with
/// `M = [[a, b], [c, d]]` such that `omega2' = a omega2 + b omega1` and
/// `omega1' = c omega2 + d omega1` span the same lattice with ratio `tau`.
pub fn tau_reduce(l: &PeriodLattice) -> (Complex64, Mat2) {
    let mut tau = l.tau();
    let (mut a, mut b, mut c, mut d) = (1i64, 0i64, 0i64, 1i64);
    for _ in 0..10_000 {
        let n = tau.re.round();
        if n != 0.0 {
            tau -= n;
            let n = n as i64;
            a -= n * c;
            b -= n * d;
        }
        if tau.norm_sqr() < 1.0 - 1e-14 {
            tau = -tau.inv();
            (a, b, c, d) = (-c, -d, a, b);
        } else {
            break;
        }
    }
    // boundary identifications: keep Re tau > -1/2, and Re tau >= 0 on |tau| = 1
    if tau.re < -0.5 + 1e-12 {
        tau += 1.0;
        a += c;
        b += d;
    }
    if (tau.norm_sqr() - 1.0).abs() < 1e-12 && tau.re < -1e-12 {
        tau = -tau.inv();
        (a, b, c, d) = (-c, -d, a, b);
    }
    (tau, Mat2::new(a, b, c, d))
}

struct AgmData {
    roots: [Complex64; 3],
    /// `2 pi / AGM(sqrt(e1 - e3), sqrt(e1 - e2))`, before orientation.
    w1: Complex64,
    /// `2 pi i / AGM(sqrt(e1 - e3), sqrt(e2 - e3))`, before orientation.
    w2: Complex64,
    a0: Complex64,
    b0: Complex64,
}

/// Keeps successive AGM iterates on the same side: `|a' - b'| <= |a' + b'|`.
fn agm_step(a: Complex64, b: Complex64) -> (Complex64, Complex64) {
    let a2 = (a + b) / 2.0;
    let mut b2 = (a * b).sqrt();
    if (a2 - b2).norm() > (a2 + b2).norm() {
        b2 = -b2;
    }
    (a2, b2)
}

fn agm(mut a: Complex64, mut b: Complex64) -> Result<Complex64> {
    for _ in 0..AGM_MAX_ITERATIONS {
        if (a - b).norm() <= AGM_EPS * a.norm() {
            return Ok(a);
        }
        (a, b) = agm_step(a, b);
    }
    if (a - b).norm() <= 1e3 * AGM_EPS * a.norm() {
        Ok(a)
    } else {
        Err(Error::AgmNonConvergence(AGM_MAX_ITERATIONS))
    }
}

fn agm_data<S: Scalar>(e: &WeierstrassCurve<S>) -> Result<AgmData> {
    let cubic = Polynomial::new(vec![
        e.b().to_c64(),
        e.a().to_c64(),
        Complex64::zero(),
        Complex64::new(1.0, 0.0),
    ]);
    let r = approximate_roots(&cubic)?;
    let roots = [r[0], r[1], r[2]];
    let [e1, e2, e3] = roots;
    let a = (e1 - e3).sqrt();
    let mut b = (e1 - e2).sqrt();
    if (a + b).norm() < (a - b).norm() {
        b = -b;
    }
    let mut c = (e2 - e3).sqrt();
    if (a + c).norm() < (a - c).norm() {
        c = -c;
    }
    let m1 = agm(a, b)?;
    let m2 = agm(a, c)?;
    if m1.is_zero() || m2.is_zero() {
        return Err(Error::SingularCurve);
    }
    Ok(AgmData {
        roots,
        w1: Complex64::new(2.0 * PI, 0.0) / m1,
        w2: Complex64::new(0.0, 2.0 * PI) / m2,
        a0: a,
        b0: b,
    })
}

/// Lattice of periods of `c dX/Y`.
pub fn period_lattice<S: Scalar>(e: &WeierstrassCurve<S>, c: &S) -> Result<PeriodLattice> {
    let data = agm_data(e)?;
    let c = c.to_c64();
    PeriodLattice::new(data.w1 * c, data.w2 * c).map_err(|_| Error::SingularCurve)
}

/// Abel-Jacobi coordinate of `p` for the differential `c dX/Y`, modulo `l`.
pub fn elliptic_log<S: Scalar>(
    e: &WeierstrassCurve<S>,
    c: &S,
    p: &CurvePoint<S>,
    l: &PeriodLattice,
) -> Result<EllipticLogValue> {
    e.check(p)?;
    let Some((x, y)) = p.coords() else {
        return Ok(EllipticLogValue {
            z: Complex64::zero(),
            lattice: *l,
        });
    };
    let data = agm_data(e)?;
    let z = landen_log(&data, x.to_c64(), y.to_c64(), e.x_scale());
    Ok(EllipticLogValue {
        z: z * c.to_c64(),
        lattice: *l,
    })
}

fn landen_log(data: &AgmData, x: Complex64, y: Complex64, scale: f64) -> Complex64 {
    let [e1, e2, e3] = data.roots;
    let y_tol = 1e-12 * scale.max(x.norm()).powf(1.5);
    if y.norm() <= y_tol {
        // 2-torsion: the half-period attached to the nearest root
        let halves = [data.w1 / 2.0, (data.w1 + data.w2) / 2.0, data.w2 / 2.0];
        let k = [e1, e2, e3]
            .iter()
            .enumerate()
            .min_by(|u, v| (u.1 - x).norm().total_cmp(&(v.1 - x).norm()))
            .map(|(k, _)| k)
            .unwrap_or(0);
        return halves[k];
    }
    let (mut a, mut b) = (data.a0, data.b0);
    let mut r = ((x - e3) / (x - e2)).sqrt();
    if r.re < 0.0 {
        r = -r;
    }
    let mut t = -y / (r * (x - e2));
    for _ in 0..AGM_MAX_ITERATIONS {
        let s = b * r + a;
        (a, b) = agm_step(a, b);
        r = (a * (r + 1.0) / s).sqrt();
        if (r.norm() - 1.0).abs() < AGM_EPS {
            break;
        }
        if r.re < 0.0 {
            r = -r;
        }
        t *= r;
    }
    2.0 * (a / t).atan() / a
}

/// Abel-Jacobi consistency of a marked triple:
/// each halving point `P` satisfies `2 log P = log Q`, and the four of them
/// sum to `2 log Q`, modulo the period lattice. Residuals are measured in
/// units of the shortest period.
pub fn aj_verify<S: Scalar>(t: &MarkedTriple<S>, tol: f64) -> Result<Report> {
    t.curve().check(t.q())?;
    let tf = to_float_triple(t)?;
    let (e, q, c) = (tf.curve(), tf.q(), tf.c());
    let lattice = period_lattice(e, c)?;
    let halving = e.halve(q)?;
    let zq = elliptic_log(e, c, q, &lattice)?.z;

    let mut report = Report::new();
    let mut sum = Complex64::zero();
    for (k, p) in halving.points.iter().enumerate() {
        let z = elliptic_log(e, c, p, &lattice)?.z;
        sum += z;
        report.within(
            format!("halving point {k}: 2 log P = log Q"),
            lattice.relative_distance(2.0 * z - zq),
            tol,
        );
    }
    report.within(
        "sum of ramification logs = 2 log Q",
        lattice.relative_distance(sum - 2.0 * zq),
        tol,
    );
    Ok(report)
}

pub(crate) fn to_float_triple<S: Scalar>(t: &MarkedTriple<S>) -> Result<MarkedTriple<Complex64>> {
    let e = WeierstrassCurve::new(t.curve().a().to_c64(), t.curve().b().to_c64())?;
    let q = match t.q() {
        CurvePoint::Affine { x, y } => CurvePoint::affine(x.to_c64(), y.to_c64()),
        CurvePoint::Infinity => CurvePoint::Infinity,
    };
    MarkedTriple::new(e, q, t.c().to_c64())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ComplexFloat;

    fn c(re: f64, im: f64) -> ComplexFloat {
        ComplexFloat::new(re, im)
    }

    fn curve(a: f64, b: f64) -> WeierstrassCurve<ComplexFloat> {
        WeierstrassCurve::new(c(a, 0.0), c(b, 0.0)).unwrap()
    }

    #[test]
    fn cm_lattices() {
        let l = period_lattice(&curve(4.0, 0.0), &c(1.0, 0.0)).unwrap();
        let (tau, m) = tau_reduce(&l);
        assert!((tau - c(0.0, 1.0)).norm() < 1e-6);
        assert_eq!(m.det(), 1.into());

        let l = period_lattice(&curve(0.0, 1.0), &c(1.0, 0.0)).unwrap();
        let (tau, _) = tau_reduce(&l);
        assert!((tau - c(0.5, 3f64.sqrt() / 2.0)).norm() < 1e-6);
    }

    #[test]
    fn lattice_is_linear_in_c() {
        let e = curve(-2.0, 1.0);
        let l1 = period_lattice(&e, &c(1.0, 0.0)).unwrap();
        let l2 = period_lattice(&e, &c(2.0, 0.0)).unwrap();
        assert!((l2.omega1() - 2.0 * l1.omega1()).norm() < 1e-12);
        assert!((l2.omega2() - 2.0 * l1.omega2()).norm() < 1e-12);
    }

    #[test]
    fn tau_reduce_examples() {
        let l = PeriodLattice::new(c(1.0, 0.0), c(0.0, 1.0)).unwrap();
        assert_eq!(tau_reduce(&l), (c(0.0, 1.0), Mat2::identity()));

        let l = PeriodLattice::new(c(1.0, 0.0), c(5.0, 1.0)).unwrap();
        let (tau, m) = tau_reduce(&l);
        assert!((tau - c(0.0, 1.0)).norm() < 1e-14);
        assert_eq!(m, Mat2::new(1, -5, 0, 1));

        let l = PeriodLattice::new(c(2.0, 0.0), c(0.0, 2.0)).unwrap();
        assert!((tau_reduce(&l).0 - c(0.0, 1.0)).norm() < 1e-14);
    }

    #[test]
    fn log_of_two_torsion_is_half_period() {
        let e = curve(4.0, 0.0);
        let l = period_lattice(&e, &c(1.0, 0.0)).unwrap();
        let p = CurvePoint::affine(c(0.0, 0.0), c(0.0, 0.0));
        let z = elliptic_log(&e, &c(1.0, 0.0), &p, &l).unwrap().z;
        assert!(l.distance_to_lattice(2.0 * z) < 1e-8);
        assert!(l.distance_to_lattice(z) > 0.1);
        let o = elliptic_log(&e, &c(1.0, 0.0), &CurvePoint::Infinity, &l).unwrap();
        assert_eq!(o.z, Complex64::zero());
    }

    #[test]
    fn off_curve_rejected() {
        let e = curve(4.0, 0.0);
        let l = period_lattice(&e, &c(1.0, 0.0)).unwrap();
        let p = CurvePoint::affine(c(1.0, 0.0), c(1.0, 0.0));
        assert_eq!(elliptic_log(&e, &c(1.0, 0.0), &p, &l), Err(Error::OffCurve));
    }
}
