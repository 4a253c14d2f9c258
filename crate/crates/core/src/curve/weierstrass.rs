//! Short Weierstrass curves, the chord-tangent group law and point halving.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// `Y^2 = X^3 + A X + B` with `4A^3 + 27B^2 != 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeierstrassCurve<S> {
    a: S,
    b: S,
}

#[derive(Clone, Debug, PartialEq)]
pub enum CurvePoint<S> {
    Infinity,
    Affine { x: S, y: S },
}

impl<S: Scalar> CurvePoint<S> {
    pub fn affine(x: S, y: S) -> Self {
        CurvePoint::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn coords(&self) -> Option<(&S, &S)> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { x, y } => Some((x, y)),
        }
    }

    /// Chordal distance-like gap between two points: infinite when exactly
    /// one of them is the point at infinity.
    pub fn distance(&self, other: &Self) -> f64 {
        match (self, other) {
            (CurvePoint::Infinity, CurvePoint::Infinity) => 0.0,
            (CurvePoint::Affine { x, y }, CurvePoint::Affine { x: x2, y: y2 }) => {
                (x.clone() - x2.clone())
                    .modulus()
                    .max((y.clone() - y2.clone()).modulus())
            }
            _ => f64::INFINITY,
        }
    }
}

/// Four points doubling to a common point; a coset of the 2-torsion subgroup.
#[derive(Clone, Debug, PartialEq)]
pub struct HalvingSet<S> {
    pub points: [CurvePoint<S>; 4],
    /// Largest distance between `[2]P` and the target over the four points.
    pub residual: f64,
}

impl<S: Scalar> WeierstrassCurve<S> {
    pub fn new(a: S, b: S) -> Result<Self> {
        let curve = Self { a, b };
        if curve.discriminant_term().negligible(curve.disc_scale()) {
            return Err(Error::SingularCurve);
        }
        Ok(curve)
    }

    pub fn a(&self) -> &S {
        &self.a
    }

    pub fn b(&self) -> &S {
        &self.b
    }

    /// `4A^3 + 27B^2`.
    pub fn discriminant_term(&self) -> S {
        S::from_i64(4) * self.a.powu(3) + S::from_i64(27) * self.b.square()
    }

    fn disc_scale(&self) -> f64 {
        let s = self.x_scale();
        31.0 * s.powi(6)
    }

    /// Natural magnitude of X coordinates: `max(|A|^(1/2), |B|^(1/3))`.
    pub fn x_scale(&self) -> f64 {
        self.a
            .modulus()
            .sqrt()
            .max(self.b.modulus().cbrt())
            .max(1e-300)
    }

    pub fn j(&self) -> S {
        let four_a3 = S::from_i64(4) * self.a.powu(3);
        S::from_i64(1728) * four_a3 / self.discriminant_term()
    }

    pub fn rhs(&self, x: &S) -> S {
        x.powu(3) + self.a.clone() * x.clone() + self.b.clone()
    }

    /// `Y^2 - (X^3 + A X + B)`; zero for the point at infinity.
    pub fn equation_residual(&self, p: &CurvePoint<S>) -> S {
        match p {
            CurvePoint::Infinity => S::zero(),
            CurvePoint::Affine { x, y } => y.square() - self.rhs(x),
        }
    }

    pub fn contains(&self, p: &CurvePoint<S>) -> bool {
        let Some((x, y)) = p.coords() else {
            return true;
        };
        if !x.is_finite() || !y.is_finite() {
            return false;
        }
        let s = self.x_scale().max(x.modulus());
        self.equation_residual(p).negligible(s.powi(3))
    }

    pub fn check(&self, p: &CurvePoint<S>) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::OffCurve)
        }
    }

    /// Model change `(X, Y) -> (u^2 X, u^3 Y)`, `(A, B) -> (u^4 A, u^6 B)`.
    pub fn rescale(&self, u: &S) -> Self {
        Self {
            a: u.powu(4) * self.a.clone(),
            b: u.powu(6) * self.b.clone(),
        }
    }

    pub fn neg(&self, p: &CurvePoint<S>) -> CurvePoint<S> {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::affine(x.clone(), -y.clone()),
        }
    }

    pub fn add(&self, p: &CurvePoint<S>, q: &CurvePoint<S>) -> Result<CurvePoint<S>> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    pub fn sub(&self, p: &CurvePoint<S>, q: &CurvePoint<S>) -> Result<CurvePoint<S>> {
        self.add(p, &self.neg(q))
    }

    pub fn double(&self, p: &CurvePoint<S>) -> Result<CurvePoint<S>> {
        self.check(p)?;
        Ok(self.double_unchecked(p))
    }

    /// `[n] P` for any integer `n`.
    pub fn mul(&self, n: i64, p: &CurvePoint<S>) -> Result<CurvePoint<S>> {
        self.check(p)?;
        let mut base = if n < 0 { self.neg(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            base = self.double_unchecked(&base);
            k >>= 1;
        }
        Ok(acc)
    }

    pub(crate) fn add_unchecked(&self, p: &CurvePoint<S>, q: &CurvePoint<S>) -> CurvePoint<S> {
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Infinity, _) => return q.clone(),
            (_, CurvePoint::Infinity) => return p.clone(),
            (CurvePoint::Affine { x, y }, CurvePoint::Affine { x: x2, y: y2 }) => (x, y, x2, y2),
        };
        if x1.near(x2, self.x_scale()) {
            let opposite = if S::EXACT {
                *y1 == -y2.clone()
            } else {
                (y1.clone() + y2.clone()).modulus() <= (y1.clone() - y2.clone()).modulus()
            };
            return if opposite {
                CurvePoint::Infinity
            } else {
                self.double_unchecked(p)
            };
        }
        let lambda = (y2.clone() - y1.clone()) / (x2.clone() - x1.clone());
        let x3 = lambda.square() - x1.clone() - x2.clone();
        let y3 = lambda * (x1.clone() - x3.clone()) - y1.clone();
        CurvePoint::affine(x3, y3)
    }

    pub(crate) fn double_unchecked(&self, p: &CurvePoint<S>) -> CurvePoint<S> {
        let Some((x, y)) = p.coords() else {
            return CurvePoint::Infinity;
        };
        if y.negligible(self.x_scale().max(x.modulus()).powf(1.5)) {
            return CurvePoint::Infinity;
        }
        let lambda =
            (S::from_i64(3) * x.square() + self.a.clone()) / (S::from_i64(2) * y.clone());
        let x3 = lambda.square() - S::from_i64(2) * x.clone();
        let y3 = lambda * (x.clone() - x3.clone()) - y.clone();
        CurvePoint::affine(x3, y3)
    }

    /// Numerator of `x([2]P) - x_Q`, a quartic in `x = X_P`.
    pub fn halving_quartic(&self, xq: &S) -> Polynomial<S> {
        let k = S::from_i64;
        let (a, b) = (self.a.clone(), self.b.clone());
        Polynomial::new(vec![
            a.square() - k(4) * b.clone() * xq.clone(),
            -(k(8) * b + k(4) * a.clone() * xq.clone()),
            -(k(2) * a),
            -(k(4) * xq.clone()),
            S::one(),
        ])
    }

    /// The four points `P` with `[2] P = Q`.
    pub fn halve(&self, q: &CurvePoint<S>) -> Result<HalvingSet<S>> {
        let Some((xq, yq)) = q.coords() else {
            return Err(Error::QAtInfinity);
        };
        self.check(q)?;
        let scale = self.x_scale().max(xq.modulus());

        let xs = if !S::EXACT && yq.negligible(scale.powf(1.5)) {
            // 2-torsion target: the quartic is the square of
            // x^2 - 2 x_Q x - A - 2 x_Q^2
            let u = -(S::from_i64(2) * xq.clone());
            let v = -self.a.clone() - S::from_i64(2) * xq.square();
            let quad = Polynomial::new(vec![v, u, S::one()]);
            let r = S::field_roots(&quad)?;
            vec![r[0].clone(), r[0].clone(), r[1].clone(), r[1].clone()]
        } else {
            S::field_roots(&self.halving_quartic(xq))?
        };

        // group x-roots with multiplicity
        let mut groups: Vec<(S, usize)> = Vec::new();
        for x in xs {
            match groups.iter_mut().find(|(g, _)| g.near(&x, scale)) {
                Some(entry) => entry.1 += 1,
                None => groups.push((x, 1)),
            }
        }

        let mut found = Vec::with_capacity(4);
        let mut worst: f64 = 0.0;
        for (x, mult) in groups {
            let y = self.rhs(&x).sqrt().ok_or(Error::NotInField)?;
            let mut candidates: Vec<(CurvePoint<S>, f64)> = [y.clone(), -y]
                .into_iter()
                .map(|yy| {
                    let p = CurvePoint::affine(x.clone(), yy);
                    let d = self.double_unchecked(&p).distance(q);
                    (p, d)
                })
                .collect();
            candidates.sort_by(|a, b| a.1.total_cmp(&b.1));
            let take = mult.min(2);
            for (p, d) in candidates.into_iter().take(take) {
                worst = worst.max(d);
                found.push(p);
            }
        }

        if found.len() != 4 {
            return Err(if S::EXACT {
                Error::NotInField
            } else {
                Error::Tolerance {
                    residual: f64::INFINITY,
                    tolerance: S::tolerance(),
                }
            });
        }
        let bound = if S::EXACT {
            0.0
        } else {
            1e3 * S::tolerance() * scale.powf(1.5).max(1.0)
        };
        if worst > bound {
            return Err(if S::EXACT {
                Error::NotInField
            } else {
                Error::Tolerance {
                    residual: worst,
                    tolerance: bound,
                }
            });
        }
        let points: [CurvePoint<S>; 4] = found.try_into().expect("four points");
        Ok(HalvingSet {
            points,
            residual: worst,
        })
    }
}
