//! Four-point configurations and the classical invariants attached to them.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// Four pairwise distinct points of the affine line, unordered.
///
/// Distinctness is exact in exact domains; in float domains two points
/// coincide when they agree to the domain tolerance relative to the
/// configuration's diameter.
#[derive(Clone, Debug, PartialEq)]
pub struct Configuration<S> {
    points: [S; 4],
}

impl<S: Scalar> Configuration<S> {
    pub fn new(points: [S; 4]) -> Result<Self> {
        if points.iter().any(|p| !p.is_finite()) {
            return Err(Error::InvalidInput("non-finite point".into()));
        }
        let diameter = diameter(&points);
        for i in 0..4 {
            for j in i + 1..4 {
                if points[i].near(&points[j], diameter) || points[i] == points[j] {
                    return Err(Error::NotDistinct);
                }
            }
        }
        Ok(Self { points })
    }

    pub fn from_slice(points: &[S]) -> Result<Self> {
        let arr: [S; 4] = points.to_vec().try_into().map_err(|_| Error::WrongPointCount {
            expected: 4,
            got: points.len(),
        })?;
        Self::new(arr)
    }

    pub fn points(&self) -> &[S; 4] {
        &self.points
    }

    pub fn diameter(&self) -> f64 {
        diameter(&self.points)
    }

    pub fn sum(&self) -> S {
        self.points.iter().cloned().fold(S::zero(), |a, b| a + b)
    }

    pub fn translate(&self, t: &S) -> Self {
        Self {
            points: self.points.clone().map(|p| p + t.clone()),
        }
    }

    /// Multiplies every point by a nonzero `s`.
    pub fn dilate(&self, s: &S) -> Self {
        Self {
            points: self.points.clone().map(|p| p * s.clone()),
        }
    }

    /// The monic quartic vanishing on the configuration.
    pub fn polynomial(&self) -> Polynomial<S> {
        Polynomial::from_roots(&self.points)
    }

    /// Largest point-to-point distance under the best matching of the two
    /// point sets (exhaustive over the 24 bijections).
    pub fn set_distance(&self, other: &Self) -> f64 {
        permutations4()
            .iter()
            .map(|perm| {
                (0..4)
                    .map(|i| (self.points[i].clone() - other.points[perm[i]].clone()).modulus())
                    .fold(0.0, f64::max)
            })
            .fold(f64::INFINITY, f64::min)
    }

    /// Equality as unordered sets: exact in exact domains, within `tol` otherwise.
    pub fn same_set(&self, other: &Self, tol: f64) -> bool {
        if S::EXACT {
            let mut a = self.points.to_vec();
            let mut b = other.points.to_vec();
            a.sort_by(|x, y| x.lex_cmp(y));
            b.sort_by(|x, y| x.lex_cmp(y));
            a == b
        } else {
            self.set_distance(other) <= tol
        }
    }

    /// Points sorted lexicographically by `(re, im)`.
    pub fn sorted(&self) -> Self {
        let mut pts = self.points.clone();
        pts.sort_by(|x, y| x.lex_cmp(y));
        Self { points: pts }
    }

    /// Index of the lexicographically least point.
    pub fn least_index(&self) -> usize {
        (1..4).fold(0, |best, i| {
            if self.points[i].lex_cmp(&self.points[best]).is_lt() {
                i
            } else {
                best
            }
        })
    }
}

fn diameter<S: Scalar>(points: &[S]) -> f64 {
    let mut d: f64 = 0.0;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            d = d.max((points[i].clone() - points[j].clone()).modulus());
        }
    }
    d
}

pub(crate) fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|k| p.contains(&k)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// Translates the configuration to barycenter zero. Returns the translated
/// configuration and the mean that was subtracted.
pub fn normalize_barycenter<S: Scalar>(cfg: &Configuration<S>) -> (Configuration<S>, S) {
    let shift = cfg.sum() / S::from_i64(4);
    (cfg.translate(&-shift.clone()), shift)
}

/// Monic quartic `x^4 + p x^3 + q x^2 + r x + s` with nonzero discriminant.
#[derive(Clone, Debug, PartialEq)]
pub struct Quartic<S> {
    pub p: S,
    pub q: S,
    pub r: S,
    pub s: S,
}

impl<S: Scalar> Quartic<S> {
    pub fn new(p: S, q: S, r: S, s: S) -> Result<Self> {
        let quartic = Self { p, q, r, s };
        let poly = quartic.polynomial();
        let disc = poly.discriminant()?;
        let rho = root_scale(&poly);
        if disc.negligible(rho.powi(12)) {
            return Err(Error::NotDistinct);
        }
        Ok(quartic)
    }

    pub fn polynomial(&self) -> Polynomial<S> {
        Polynomial::new(vec![
            self.s.clone(),
            self.r.clone(),
            self.q.clone(),
            self.p.clone(),
            S::one(),
        ])
    }
}

/// Bound on root magnitudes of a monic polynomial: `max_k |c_{n-k}|^{1/k}`.
pub(crate) fn root_scale<S: Scalar>(p: &Polynomial<S>) -> f64 {
    let n = p.degree().unwrap_or(0);
    (1..=n)
        .map(|k| p.coeff(n - k).modulus().powf(1.0 / k as f64))
        .fold(1e-300, f64::max)
}

pub fn quartic_from_config<S: Scalar>(cfg: &Configuration<S>) -> Result<Quartic<S>> {
    let c = cfg.polynomial();
    Quartic::new(c.coeff(3), c.coeff(2), c.coeff(1), c.coeff(0))
}

/// Quartic through raw points; rejects coincident points.
pub fn quartic_from_points<S: Scalar>(points: &[S]) -> Result<Quartic<S>> {
    quartic_from_config(&Configuration::from_slice(points)?)
}

/// The three values `ab + cd`, `ac + bd`, `ad + bc`.
pub fn ferrari_resolvent<S: Scalar>(cfg: &Configuration<S>) -> [S; 3] {
    let [a, b, c, d] = cfg.points().clone();
    [
        a.clone() * b.clone() + c.clone() * d.clone(),
        a.clone() * c.clone() + b.clone() * d.clone(),
        a * d + b * c,
    ]
}

/// Classical invariants `(I, J)` of a monic quartic.
pub fn quartic_invariants<S: Scalar>(q: &Quartic<S>) -> (S, S) {
    let k = S::from_i64;
    let (p, qq, r, s) = (q.p.clone(), q.q.clone(), q.r.clone(), q.s.clone());
    let i = k(12) * s.clone() + qq.square() - k(3) * p.clone() * r.clone();
    let j = k(72) * qq.clone() * s.clone() - k(27) * r.square() - k(27) * p.square() * s
        + k(9) * p * qq.clone() * r
        - k(2) * qq.powu(3);
    (i, j)
}

/// j-invariant of `Y^2 = X^3 - 27 I X - 27 J`.
pub fn j_from_invariants<S: Scalar>(i: &S, j: &S) -> Result<S> {
    let a = S::from_i64(-27) * i.clone();
    let b = S::from_i64(-27) * j.clone();
    j_from_ab(&a, &b)
}

pub(crate) fn j_from_ab<S: Scalar>(a: &S, b: &S) -> Result<S> {
    let four_a3 = S::from_i64(4) * a.powu(3);
    let den = four_a3.clone() + S::from_i64(27) * b.square();
    let scale = (four_a3.modulus()).max(27.0 * b.modulus() * b.modulus());
    if den.negligible(scale) {
        return Err(Error::SingularCurve);
    }
    Ok(S::from_i64(1728) * four_a3 / den)
}

/// Cross-ratio `(a - c)(b - d) / ((a - d)(b - c))` of the points in the given order.
pub fn cross_ratio<S: Scalar>(points: &[S; 4]) -> S {
    let [a, b, c, d] = points.clone();
    (a.clone() - c.clone()) * (b.clone() - d.clone()) / ((a - d) * (b - c))
}

/// `j = 256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2)` on the cross-ratio `l`.
pub fn j_from_cross_ratio<S: Scalar>(cfg: &Configuration<S>) -> S {
    j_of_lambda(&cross_ratio(cfg.points()))
}

pub(crate) fn j_of_lambda<S: Scalar>(l: &S) -> S {
    let one = S::one();
    let num = (l.square() - l.clone() + one.clone()).powu(3);
    let den = l.square() * (l.clone() - one).square();
    S::from_i64(256) * num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ComplexFloat, ExactRational, GaussianRational};
    use num_traits::{One, Zero};

    fn q(n: i64) -> ExactRational {
        ExactRational::from_i64(n)
    }

    fn qr(n: i64, d: i64) -> ExactRational {
        ExactRational::from_ratio(n, d)
    }

    fn gi(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(q(re), q(im))
    }

    fn lemniscatic() -> Configuration<GaussianRational> {
        Configuration::new([gi(1, 0), gi(-1, 0), gi(0, 1), gi(0, -1)]).unwrap()
    }

    fn rat_cfg(p: [i64; 4]) -> Configuration<ExactRational> {
        Configuration::new(p.map(q)).unwrap()
    }

    #[test]
    fn barycenter_examples() {
        let (n, s) = normalize_barycenter(&rat_cfg([0, 1, 2, 3]));
        assert_eq!(n.points(), &[qr(-3, 2), qr(-1, 2), qr(1, 2), qr(3, 2)]);
        assert_eq!(s, qr(3, 2));

        let (n, s) = normalize_barycenter(&lemniscatic());
        assert_eq!(n, lemniscatic());
        assert!(s.is_zero());

        let (n, s) = normalize_barycenter(&rat_cfg([4, 5, 6, 7]));
        assert_eq!(n.points(), &[qr(-3, 2), qr(-1, 2), qr(1, 2), qr(3, 2)]);
        assert_eq!(s, qr(11, 2));
    }

    #[test]
    fn quartic_examples() {
        let quart = quartic_from_config(&lemniscatic()).unwrap();
        assert_eq!(
            (quart.p, quart.q, quart.r, quart.s),
            (gi(0, 0), gi(0, 0), gi(0, 0), gi(-1, 0))
        );
        let quart = quartic_from_config(&rat_cfg([0, 1, 2, 3])).unwrap();
        assert_eq!((quart.p, quart.q, quart.r, quart.s), (q(-6), q(11), q(-6), q(0)));
        assert_eq!(
            quartic_from_points(&[q(0), q(0), q(1), q(2)]),
            Err(Error::NotDistinct)
        );
        assert_eq!(
            Quartic::new(q(0), q(-2), q(0), q(1)),
            Err(Error::NotDistinct),
            "(x^2 - 1)^2 is rejected"
        );
    }

    #[test]
    fn float_near_coincidence_rejected() {
        let c = |re: f64| ComplexFloat::new(re, 0.0);
        assert_eq!(
            Configuration::new([c(0.0), c(1.0), c(1.0 + 1e-12), c(2.0)]),
            Err(Error::NotDistinct)
        );
        assert!(Configuration::new([c(0.0), c(1.0), c(1.0 + 1e-6), c(2.0)]).is_ok());
    }

    #[test]
    fn resolvent_examples() {
        let mut r = ferrari_resolvent(&rat_cfg([0, 1, -1, 2])).to_vec();
        r.sort();
        assert_eq!(r, vec![q(-2), q(-1), q(2)]);

        let r = ferrari_resolvent(&lemniscatic());
        for want in [gi(0, 0), gi(0, 2), gi(0, -2)] {
            assert!(r.contains(&want));
        }
    }

    #[test]
    fn resolvent_discriminant_matches_quartic() {
        let cfg = rat_cfg([0, 1, -1, 2]);
        let brute = |pts: &[ExactRational]| {
            let mut acc = ExactRational::one();
            for i in 0..pts.len() {
                for j in i + 1..pts.len() {
                    acc *= (&pts[i] - &pts[j]) * (&pts[i] - &pts[j]);
                }
            }
            acc
        };
        let res = ferrari_resolvent(&cfg);
        assert_eq!(brute(&res), q(144));
        assert_eq!(brute(cfg.points()), q(144));
    }

    #[test]
    fn invariant_examples() {
        let quart = Quartic::new(q(0), q(0), q(0), q(-1)).unwrap();
        assert_eq!(quartic_invariants(&quart), (q(-12), q(0)));
        let quart = Quartic::new(q(0), q(0), q(-1), q(0)).unwrap();
        assert_eq!(quartic_invariants(&quart), (q(0), q(-27)));

        assert_eq!(j_from_invariants(&q(-12), &q(0)).unwrap(), q(1728));
        assert_eq!(j_from_invariants(&q(0), &q(-27)).unwrap(), q(0));
        // 4 I^3 = J^2 with I = 1, J = 2
        assert_eq!(j_from_invariants(&q(1), &q(2)), Err(Error::SingularCurve));
    }

    #[test]
    fn cross_ratio_examples() {
        assert_eq!(j_from_cross_ratio(&lemniscatic()), gi(1728, 0));
        assert_eq!(cross_ratio(&[gi(1, 0), gi(0, 1), gi(-1, 0), gi(0, -1)]), gi(2, 0));
        assert_eq!(j_from_cross_ratio(&rat_cfg([0, 1, 2, 3])), qr(35152, 9));
        assert_eq!(j_of_lambda(&qr(4, 3)), qr(35152, 9));

        let w = ComplexFloat::new(-0.5, 3f64.sqrt() / 2.0);
        let cfg = Configuration::new([
            ComplexFloat::new(0.0, 0.0),
            ComplexFloat::new(1.0, 0.0),
            w,
            w * w,
        ])
        .unwrap();
        assert!(j_from_cross_ratio(&cfg).norm() < 1e-9);
    }

    #[test]
    fn cross_ratio_j_is_order_independent() {
        let cfg = Configuration::new([gi(3, 1), gi(-2, 5), gi(0, -1), gi(7, 2)]).unwrap();
        let j0 = j_from_cross_ratio(&cfg);
        for perm in permutations4() {
            let pts = perm.map(|k| cfg.points()[k].clone());
            assert_eq!(j_of_lambda(&cross_ratio(&pts)), j0);
        }
    }
}
