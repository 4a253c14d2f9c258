use conf4::{mat2_det, mat2_mul, roots_complex, ExactRational, Mat2, Polynomial, Scalar};
use num_complex::Complex64;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = ExactRational> {
    (-40i64..=40, 1i64..=6).prop_map(|(n, d)| ExactRational::from_ratio(n, d))
}

fn distinct(xs: &[ExactRational]) -> bool {
    xs.iter()
        .enumerate()
        .all(|(i, x)| xs[i + 1..].iter().all(|y| x != y))
}

fn c64(r: &ExactRational) -> Complex64 {
    r.to_c64()
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 128,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn from_roots_vanishes_exactly(roots in prop::collection::vec(rational(), 1..=4)) {
        let p = Polynomial::from_roots(&roots);
        for r in &roots {
            prop_assert_eq!(p.eval(r), ExactRational::from_i64(0));
        }
    }

    #[test]
    fn discriminant_detects_repeated_roots(roots in prop::collection::vec(rational(), 2..=4)) {
        let d = Polynomial::from_roots(&roots).discriminant().unwrap();
        prop_assert_eq!(d == ExactRational::from_i64(0), !distinct(&roots));
    }

    #[test]
    fn root_residuals_within_bound(
        coeffs in prop::collection::vec(rational(), 1..=4),
        lead in rational().prop_filter("nonzero", |r| *r != ExactRational::from_i64(0)),
    ) {
        let mut all = coeffs.clone();
        all.push(lead);
        let p = Polynomial::new(all);
        let tol = 1e-9;
        let roots = roots_complex(&p, tol).unwrap();
        prop_assert_eq!(roots.len(), p.degree().unwrap());
        let pc = p.to_c64();
        for r in &roots {
            prop_assert!(pc.eval(r).norm() <= tol * (1.0 + pc.norm1()));
        }
    }

    #[test]
    fn roots_match_exact_factorization(roots in prop::collection::vec(rational(), 1..=4)) {
        prop_assume!(distinct(&roots));
        let found = roots_complex(&Polynomial::from_roots(&roots), 1e-9).unwrap();
        let mut unused: Vec<Complex64> = found.clone();
        for r in &roots {
            let target = c64(r);
            let (k, d) = unused
                .iter()
                .enumerate()
                .map(|(k, z)| (k, (z - target).norm()))
                .min_by(|a, b| a.1.total_cmp(&b.1))
                .unwrap();
            prop_assert!(d <= 1e-7 * (1.0 + target.norm()), "root {} off by {}", r, d);
            unused.remove(k);
        }
    }

    #[test]
    fn det_is_multiplicative(
        m in prop::array::uniform4(-1000i64..=1000),
        n in prop::array::uniform4(-1000i64..=1000),
    ) {
        let m = Mat2::new(m[0], m[1], m[2], m[3]);
        let n = Mat2::new(n[0], n[1], n[2], n[3]);
        prop_assert_eq!(mat2_det(&mat2_mul(&m, &n)), mat2_det(&m) * mat2_det(&n));
    }
}

#[test]
fn closed_form_examples() {
    let q = ExactRational::from_i64;
    let quartic = Polynomial::new(vec![q(16), q(0), q(-8), q(0), q(1)]);
    let mut roots: Vec<f64> = roots_complex(&quartic, 1e-9)
        .unwrap()
        .iter()
        .map(|z| z.re)
        .collect();
    roots.sort_by(f64::total_cmp);
    for (r, e) in roots.iter().zip([-2.0, -2.0, 2.0, 2.0]) {
        assert!((r - e).abs() < 1e-6);
    }
    assert!(roots_complex(&Polynomial::new(vec![q(1)]), 1e-9).is_err());
}
