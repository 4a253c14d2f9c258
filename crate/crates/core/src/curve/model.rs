//! The cubic chart centred at a branch point and its short Weierstrass form.

use super::config::{root_scale, Configuration};
use super::weierstrass::{CurvePoint, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// `w^2 = c3 u^3 + c2 u^2 + c1 u + c0` in the chart `u = 1/(x - pivot)`,
/// `w = y/(x - pivot)^2`.
#[derive(Clone, Debug, PartialEq)]
pub struct CubicModel<S> {
    pub c3: S,
    pub c2: S,
    pub c1: S,
    pub c0: S,
    pub pivot: S,
}

impl<S: Scalar> CubicModel<S> {
    pub fn new(c3: S, c2: S, c1: S, c0: S, pivot: S) -> Result<Self> {
        if !c0.is_one() {
            return Err(Error::InvalidInput("cubic model needs c0 = 1".into()));
        }
        let model = Self {
            c3,
            c2,
            c1,
            c0,
            pivot,
        };
        let cubic = model.polynomial();
        if cubic.degree() != Some(3) {
            return Err(Error::NotDistinct);
        }
        let rho = root_scale(&cubic.monic());
        let scale = model.c3.modulus().powi(4) * rho.powi(6);
        if cubic.discriminant()?.negligible(scale) {
            return Err(Error::NotDistinct);
        }
        Ok(model)
    }

    pub fn polynomial(&self) -> Polynomial<S> {
        Polynomial::new(vec![
            self.c0.clone(),
            self.c1.clone(),
            self.c2.clone(),
            self.c3.clone(),
        ])
    }
}

/// Chart centred at `cfg.points()[pivot]`.
pub fn branch_cubic_model<S: Scalar>(cfg: &Configuration<S>, pivot: usize) -> Result<CubicModel<S>> {
    if pivot > 3 {
        return Err(Error::InvalidInput(format!("pivot index {pivot} out of range")));
    }
    let a = cfg.points()[pivot].clone();
    let betas: Vec<S> = (0..4)
        .filter(|&k| k != pivot)
        .map(|k| cfg.points()[k].clone() - a.clone())
        .collect();
    let (b1, b2, b3) = (betas[0].clone(), betas[1].clone(), betas[2].clone());
    let c1 = -(b1.clone() + b2.clone() + b3.clone());
    let c2 = b1.clone() * b2.clone() + b1.clone() * b3.clone() + b2.clone() * b3.clone();
    let c3 = -(b1 * b2 * b3);
    CubicModel::new(c3, c2, c1, S::one(), a)
}

/// Short Weierstrass form of a cubic model, with the images of the two
/// points over `x = infinity`: `O_model` from `w = +1`, `Q_model` from `w = -1`.
/// The differential `du/w` becomes `dX/Y`.
pub fn cubic_to_short_weierstrass<S: Scalar>(
    m: &CubicModel<S>,
) -> Result<(WeierstrassCurve<S>, CurvePoint<S>, CurvePoint<S>)> {
    let three = S::from_i64(3);
    let (c3, c2, c1, c0) = (m.c3.clone(), m.c2.clone(), m.c1.clone(), m.c0.clone());
    let a = c1.clone() * c3.clone() - c2.square() / three.clone();
    let b = c0 * c3.square() - c1 * c2.clone() * c3.clone() / three.clone()
        + S::from_i64(2) * c2.powu(3) / S::from_i64(27);
    let curve = WeierstrassCurve::new(a, b)?;
    let x0 = c2 / three;
    let o = CurvePoint::affine(x0.clone(), c3.clone());
    let q = CurvePoint::affine(x0, -c3);
    debug_assert!(curve.contains(&o) && curve.contains(&q));
    Ok((curve, o, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ExactRational, GaussianRational};

    fn q(n: i64) -> ExactRational {
        ExactRational::from_i64(n)
    }

    fn gi(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(q(re), q(im))
    }

    #[test]
    fn model_examples() {
        let cfg = Configuration::new([gi(1, 0), gi(-1, 0), gi(0, 1), gi(0, -1)]).unwrap();
        // pivot at the point 1
        let m = branch_cubic_model(&cfg, 0).unwrap();
        assert_eq!((m.c3, m.c2, m.c1, m.c0), (gi(4, 0), gi(6, 0), gi(4, 0), gi(1, 0)));

        let cfg = Configuration::new([q(0), q(1), q(2), q(3)]).unwrap();
        let m = branch_cubic_model(&cfg, 0).unwrap();
        assert_eq!((m.c3, m.c2, m.c1, m.c0), (q(-6), q(11), q(-6), q(1)));
        assert_eq!(m.pivot, q(0));

        for pivot in 0..4 {
            let m = branch_cubic_model(&cfg, pivot).unwrap();
            assert_eq!(m.polynomial().eval(&q(0)), q(1));
        }
    }

    #[test]
    fn chart_maps_branch_points_to_roots() {
        // u = 1/(x - a) sends the other three branch points to roots of the cubic
        let cfg = Configuration::new([q(5), q(-1), q(2), q(7)]).unwrap();
        let m = branch_cubic_model(&cfg, 2).unwrap();
        for k in [0, 1, 3] {
            let u = (cfg.points()[k].clone() - q(2)).inv();
            assert_eq!(m.polynomial().eval(&u), q(0));
        }
    }

    #[test]
    fn weierstrass_examples() {
        let m = CubicModel::new(q(4), q(6), q(4), q(1), q(0)).unwrap();
        let (e, o, qm) = cubic_to_short_weierstrass(&m).unwrap();
        assert_eq!((e.a().clone(), e.b().clone()), (q(4), q(0)));
        assert_eq!(o, CurvePoint::affine(q(2), q(4)));
        assert_eq!(qm, CurvePoint::affine(q(2), q(-4)));

        let m = CubicModel::new(q(1), q(0), q(0), q(1), q(0)).unwrap();
        let (e, o, _) = cubic_to_short_weierstrass(&m).unwrap();
        assert_eq!((e.a().clone(), e.b().clone()), (q(0), q(1)));
        assert_eq!(o, CurvePoint::affine(q(0), q(1)));

        let m = CubicModel::new(q(-6), q(11), q(-6), q(1), q(0)).unwrap();
        let (e, o, _) = cubic_to_short_weierstrass(&m).unwrap();
        assert_eq!(
            (e.a().clone(), e.b().clone()),
            (ExactRational::from_ratio(-13, 3), ExactRational::from_ratio(70, 27))
        );
        assert_eq!(o, CurvePoint::affine(ExactRational::from_ratio(11, 3), q(-6)));
        assert_eq!(e.j(), ExactRational::from_ratio(35152, 9));
    }

    #[test]
    fn invalid_models_rejected() {
        assert!(CubicModel::new(q(0), q(1), q(1), q(1), q(0)).is_err());
        assert!(CubicModel::new(q(1), q(1), q(1), q(2), q(0)).is_err());
        // (1 + u)^2 (1 + 2u): repeated root
        assert_eq!(
            CubicModel::new(q(2), q(5), q(4), q(1), q(0)),
            Err(Error::NotDistinct)
        );
    }
}
