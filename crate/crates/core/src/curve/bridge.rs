//! The two directions between configurations and marked triples.

use super::config::{normalize_barycenter, Configuration};
use super::model::{branch_cubic_model, cubic_to_short_weierstrass};
use super::weierstrass::{CurvePoint, HalvingSet, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::series::Series;

/// `(E, Q, omega)` with `omega = c dX/Y`.
#[derive(Clone, Debug, PartialEq)]
pub struct MarkedTriple<S> {
    curve: WeierstrassCurve<S>,
    q: CurvePoint<S>,
    c: S,
}

impl<S: Scalar> MarkedTriple<S> {
    pub fn new(curve: WeierstrassCurve<S>, q: CurvePoint<S>, c: S) -> Result<Self> {
        if q.is_infinity() {
            return Err(Error::QAtInfinity);
        }
        curve.check(&q)?;
        if c.negligible(1.0) || !c.is_finite() {
            return Err(Error::ZeroDifferential);
        }
        Ok(Self { curve, q, c })
    }

    pub fn curve(&self) -> &WeierstrassCurve<S> {
        &self.curve
    }

    pub fn q(&self) -> &CurvePoint<S> {
        &self.q
    }

    pub fn c(&self) -> &S {
        &self.c
    }

    pub fn j(&self) -> S {
        self.curve.j()
    }

    /// The isomorphic triple with `c = 1`, via `u = 1/c`.
    pub fn normalized(&self) -> Self {
        if self.c.is_one() {
            return self.clone();
        }
        let u = self.c.inv();
        let q = match &self.q {
            CurvePoint::Affine { x, y } => {
                CurvePoint::affine(u.square() * x.clone(), u.powu(3) * y.clone())
            }
            CurvePoint::Infinity => CurvePoint::Infinity,
        };
        Self {
            curve: self.curve.rescale(&u),
            q,
            c: S::one(),
        }
    }

    /// `(A, B, X_Q, Y_Q, c)`.
    pub fn components(&self) -> [S; 5] {
        let (x, y) = self.q.coords().expect("Q is affine");
        [
            self.curve.a().clone(),
            self.curve.b().clone(),
            x.clone(),
            y.clone(),
            self.c.clone(),
        ]
    }

    /// Largest componentwise gap to `other`, each term divided by the natural
    /// size of that component: `s^2, s^3, s, s^1.5, 1` for the X-scale `s`.
    pub fn relative_distance(&self, other: &Self) -> f64 {
        let s = self.curve.x_scale().max(other.curve.x_scale());
        let weights = [s.powi(2), s.powi(3), s, s.powf(1.5), 1.0];
        self.components()
            .iter()
            .zip(other.components().iter())
            .zip(weights)
            .map(|((a, b), w)| (a.clone() - b.clone()).modulus() / w.max(1e-300))
            .fold(0.0, f64::max)
    }
}

/// `(E, omega)` with `omega = c dX/Y`.
#[derive(Clone, Debug, PartialEq)]
pub struct DifferentialPair<S> {
    pub curve: WeierstrassCurve<S>,
    pub c: S,
}

impl<S: Scalar> DifferentialPair<S> {
    pub fn j(&self) -> S {
        self.curve.j()
    }
}

/// A value of a rational function on the curve.
#[derive(Clone, Debug, PartialEq)]
pub enum Extended<S> {
    Finite(S),
    Infinity,
}

impl<S> Extended<S> {
    pub fn finite(self) -> Option<S> {
        match self {
            Extended::Finite(v) => Some(v),
            Extended::Infinity => None,
        }
    }
}

/// `g(P) = (Y_P + Y_Q)/(X_P - X_Q)`: the degree-two function with poles at
/// `O` and `Q`, invariant under `P -> Q - P`.
pub fn quotient_value_g<S: Scalar>(
    e: &WeierstrassCurve<S>,
    q: &CurvePoint<S>,
    p: &CurvePoint<S>,
) -> Result<Extended<S>> {
    let (xq, yq) = q.coords().ok_or(Error::QAtInfinity)?;
    e.check(q)?;
    e.check(p)?;
    let Some((xp, yp)) = p.coords() else {
        return Ok(Extended::Infinity);
    };
    let scale = e.x_scale().max(xq.modulus());
    if xp.near(xq, scale) {
        let y_scale = scale.powf(1.5);
        let same = (yp.clone() - yq.clone()).negligible(y_scale);
        if same {
            return Ok(Extended::Infinity);
        }
        // P = -Q: the limit is the tangent slope at -Q
        let num = S::from_i64(3) * xq.square() + e.a().clone();
        return Ok(Extended::Finite(num / (S::from_i64(-2) * yq.clone())));
    }
    Ok(Extended::Finite(
        (yp.clone() + yq.clone()) / (xp.clone() - xq.clone()),
    ))
}

const SERIES_PRECISION: usize = 6;

/// The scalar `alpha` such that `1/(alpha g)` and `omega = c dX/Y` agree to
/// first order at `O`, expanded in the local parameter `t = X/Y`.
pub fn normalization_constant<S: Scalar>(
    e: &WeierstrassCurve<S>,
    q: &CurvePoint<S>,
    c: &S,
) -> Result<S> {
    let (xq, yq) = q.coords().ok_or(Error::QAtInfinity)?;
    let n = SERIES_PRECISION;
    let t = Series::monomial(S::one(), 1, n);
    let t4 = t.mul(&t).mul(&t).mul(&t);
    let t6 = t4.mul(&t).mul(&t);

    // X = xi/t^2, Y = xi/t^3 with xi = 1 - (A xi t^4 + B t^6)/xi^2
    let mut xi = Series::constant(S::one(), n);
    for _ in 0..n {
        let rhs = xi
            .mul(&t4)
            .scale(e.a())
            .add(&t6.scale(e.b()))
            .div(&xi.mul(&xi));
        xi = Series::constant(S::one(), n).sub(&rhs);
    }

    // t g = (xi + Y_Q t^3) / (xi - X_Q t^2)
    let t2 = t.mul(&t);
    let t3 = t2.mul(&t);
    let g_t = xi.add(&t3.scale(yq)).div(&xi.sub(&t2.scale(xq)));
    // omega/dt = c (t xi' - 2 xi)/xi
    let omega = t
        .mul(&xi.derivative())
        .sub(&xi.scale(&S::from_i64(2)))
        .div(&xi)
        .scale(c);

    let lead = g_t.coeff(0) * omega.coeff(0);
    if lead.negligible(1.0) {
        return Err(Error::ZeroDifferential);
    }
    Ok(lead.inv())
}

/// Which point over `x = infinity` is identified with the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftSign {
    Plus,
    Minus,
}

/// Canonical triple of a configuration, using the lexicographically least
/// point as pivot and the `w = +1` lift.
pub fn forward_map<S: Scalar>(cfg: &Configuration<S>) -> Result<MarkedTriple<S>> {
    forward_map_with(cfg, cfg.least_index(), LiftSign::Plus)
}

pub fn forward_map_with<S: Scalar>(
    cfg: &Configuration<S>,
    pivot: usize,
    lift: LiftSign,
) -> Result<MarkedTriple<S>> {
    let model = branch_cubic_model(cfg, pivot)?;
    let (curve, o_model, q_model) = cubic_to_short_weierstrass(&model)?;
    let (origin, other, c) = match lift {
        LiftSign::Plus => (o_model, q_model, S::one()),
        LiftSign::Minus => (q_model, o_model, -S::one()),
    };
    let q = curve.add_unchecked(&other, &curve.neg(&origin));
    if q.is_infinity() {
        return Err(Error::QIsOrigin);
    }
    Ok(MarkedTriple::new(curve, q, c)?.normalized())
}

/// Halving set of `Q` together with the rescaled quotient values, which are
/// the branch points up to translation.
pub fn ramification_values<S: Scalar>(t: &MarkedTriple<S>) -> Result<(HalvingSet<S>, [S; 4])> {
    let t = t.normalized();
    if t.q().is_infinity() {
        return Err(Error::QIsOrigin);
    }
    let halving = t.curve().halve(t.q())?;
    let alpha = normalization_constant(t.curve(), t.q(), t.c())?;
    let mut values = Vec::with_capacity(4);
    for p in &halving.points {
        let g = quotient_value_g(t.curve(), t.q(), p)?
            .finite()
            .ok_or(Error::QIsOrigin)?;
        values.push(alpha.clone() * g);
    }
    let values: [S; 4] = values.try_into().expect("four values");
    Ok((halving, values))
}

/// The barycenter-zero configuration whose canonical triple is `t`.
pub fn inverse_map<S: Scalar>(t: &MarkedTriple<S>) -> Result<Configuration<S>> {
    let (_, values) = ramification_values(t)?;
    let cfg = Configuration::new(values)?;
    Ok(normalize_barycenter(&cfg).0)
}

/// The pair `(E_f, -dX/2Y)` for the monic cubic `f` vanishing on three
/// distinct points, after translating them to barycenter zero.
pub fn conf3_to_pair<S: Scalar>(points: &[S]) -> Result<DifferentialPair<S>> {
    if points.len() != 3 {
        return Err(Error::WrongPointCount {
            expected: 3,
            got: points.len(),
        });
    }
    let diameter = (0..3)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .map(|(i, j)| (points[i].clone() - points[j].clone()).modulus())
        .fold(0.0, f64::max);
    for i in 0..3 {
        for j in i + 1..3 {
            if points[i] == points[j] || points[i].near(&points[j], diameter) {
                return Err(Error::NotDistinct);
            }
        }
    }
    let mean = points.iter().cloned().fold(S::zero(), |a, b| a + b) / S::from_i64(3);
    let shifted: Vec<S> = points.iter().map(|p| p.clone() - mean.clone()).collect();
    let f = Polynomial::from_roots(&shifted);
    let curve = WeierstrassCurve::new(f.coeff(1), f.coeff(0))?;
    Ok(DifferentialPair {
        curve,
        c: S::from_ratio(-1, 2),
    })
}
