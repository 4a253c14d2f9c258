//! JSON encodings of every public value.
//!
//! Rationals are strings `"p/q"` (`"p"` when the denominator is 1), Gaussian
//! rationals are `{"re": .., "im": ..}` (collapsed to the real string when the
//! imaginary part is zero), complex floats are `[re, im]`.
//! Input is lenient: integers, decimal numbers (read exactly), `"p/q"`
//! strings, `[re, im]` pairs and `{"re", "im"}` objects are all accepted
//! wherever the domain can represent them.

use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::braid::{BraidWord, FreeAut, FreeWord, SemidirectCoord};
use crate::curve::{Configuration, CurvePoint, MarkedTriple, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::lattice::PeriodLattice;
use crate::mat2::Mat2;
use crate::poly::Polynomial;
use crate::report::Report;
use crate::scalar::Scalar;
use crate::{ExactRational, GaussianRational};

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

/// Scalars with a JSON encoding.
pub trait JsonScalar: Scalar {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

pub fn rational_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact value of a decimal literal such as `-12.5e-3`.
pub fn parse_decimal(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i64>().ok()?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.find('.') {
        Some(i) => (&digits[..i], &digits[i + 1..]),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all = format!("{int_part}{frac_part}");
    let mut n = BigInt::from_str(if all.is_empty() { "0" } else { &all }).ok()?;
    if neg {
        n = -n;
    }
    let shift = exp - frac_part.len() as i64;
    if shift.unsigned_abs() > 10_000 {
        return None;
    }
    let ten = BigInt::from(10);
    let p = num_traits::pow(ten, shift.unsigned_abs() as usize);
    Some(if shift >= 0 {
        BigRational::from_integer(n * p)
    } else {
        BigRational::new(n, p)
    })
}

fn parse_rational_str(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n = parse_decimal(n)?;
            let d = parse_decimal(d)?;
            (!d.is_zero()).then(|| n / d)
        }
        None => parse_decimal(s),
    }
}

pub fn rational_from_json(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(n) => {
            parse_decimal(&n.to_string()).ok_or_else(|| bad(format!("bad number {n}")))
        }
        Value::String(s) => {
            parse_rational_str(s).ok_or_else(|| bad(format!("bad rational {s:?}")))
        }
        _ => Err(bad(format!("expected a rational, got {v}"))),
    }
}

/// `(re, im)` parts of a complex literal in any accepted form.
fn complex_parts(v: &Value) -> Option<(&Value, Option<&Value>)> {
    match v {
        Value::Array(a) if a.len() == 2 => Some((&a[0], Some(&a[1]))),
        Value::Object(o) => Some((o.get("re")?, o.get("im"))),
        Value::Number(_) | Value::String(_) => Some((v, None)),
        _ => None,
    }
}

impl JsonScalar for BigRational {
    fn to_json(&self) -> Value {
        Value::String(rational_to_string(self))
    }

    fn from_json(v: &Value) -> Result<Self> {
        let (re, im) = complex_parts(v).ok_or_else(|| bad(format!("expected a rational, got {v}")))?;
        if let Some(im) = im {
            if !rational_from_json(im)?.is_zero() {
                return Err(Error::NotInField);
            }
        }
        rational_from_json(re)
    }
}

impl JsonScalar for GaussianRational {
    fn to_json(&self) -> Value {
        if self.im.is_zero() {
            self.re.to_json()
        } else {
            json!({"re": rational_to_string(&self.re), "im": rational_to_string(&self.im)})
        }
    }

    fn from_json(v: &Value) -> Result<Self> {
        let (re, im) = complex_parts(v)
            .ok_or_else(|| bad(format!("expected a Gaussian rational, got {v}")))?;
        let im = match im {
            Some(im) => rational_from_json(im)?,
            None => BigRational::zero(),
        };
        Ok(GaussianRational::new(rational_from_json(re)?, im))
    }
}

fn float_from_json(v: &Value) -> Result<f64> {
    let x = match v {
        Value::Number(n) => n.as_f64(),
        Value::String(s) => parse_rational_str(s).and_then(|r| r.to_f64()),
        _ => None,
    }
    .ok_or_else(|| bad(format!("expected a number, got {v}")))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(bad("non-finite number"))
    }
}

fn float_to_json(x: f64) -> Value {
    serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
}

pub fn complex_to_json(z: Complex64) -> Value {
    Value::Array(vec![float_to_json(z.re), float_to_json(z.im)])
}

impl JsonScalar for Complex64 {
    fn to_json(&self) -> Value {
        complex_to_json(*self)
    }

    fn from_json(v: &Value) -> Result<Self> {
        let (re, im) = complex_parts(v).ok_or_else(|| bad(format!("expected a complex number, got {v}")))?;
        let im = match im {
            Some(im) => float_from_json(im)?,
            None => 0.0,
        };
        Ok(Complex64::new(float_from_json(re)?, im))
    }
}

pub fn points_from_json<S: JsonScalar>(v: &Value) -> Result<Vec<S>> {
    v.as_array()
        .ok_or_else(|| bad("expected an array of points"))?
        .iter()
        .map(S::from_json)
        .collect()
}

pub fn config_from_json<S: JsonScalar>(v: &Value) -> Result<Configuration<S>> {
    Configuration::from_slice(&points_from_json(v)?)
}

pub fn config_to_json<S: JsonScalar>(cfg: &Configuration<S>) -> Value {
    Value::Array(cfg.sorted().points().iter().map(S::to_json).collect())
}

pub fn scalars_to_json<S: JsonScalar>(xs: &[S]) -> Value {
    Value::Array(xs.iter().map(S::to_json).collect())
}

pub fn poly_to_json<S: JsonScalar>(p: &Polynomial<S>) -> Value {
    scalars_to_json(p.coeffs())
}

pub fn point_to_json<S: JsonScalar>(p: &CurvePoint<S>) -> Value {
    match p {
        CurvePoint::Infinity => Value::Null,
        CurvePoint::Affine { x, y } => Value::Array(vec![x.to_json(), y.to_json()]),
    }
}

pub fn triple_to_json<S: JsonScalar>(t: &MarkedTriple<S>) -> Value {
    json!({
        "A": t.curve().a().to_json(),
        "B": t.curve().b().to_json(),
        "Q": point_to_json(t.q()),
        "c": t.c().to_json(),
        "j": t.j().to_json(),
    })
}

/// Reads `{"A", "B", "Q": [X, Y], "c"}`; `c` defaults to 1 and `j` is ignored.
pub fn triple_from_json<S: JsonScalar>(v: &Value) -> Result<MarkedTriple<S>> {
    let o = v.as_object().ok_or_else(|| bad("expected a triple object"))?;
    let field = |k: &str| o.get(k).ok_or_else(|| bad(format!("triple is missing {k:?}")));
    let curve = WeierstrassCurve::new(S::from_json(field("A")?)?, S::from_json(field("B")?)?)?;
    let q = match field("Q")? {
        Value::Null => CurvePoint::Infinity,
        Value::Array(xy) if xy.len() == 2 => {
            CurvePoint::affine(S::from_json(&xy[0])?, S::from_json(&xy[1])?)
        }
        Value::String(s) if s.eq_ignore_ascii_case("infinity") => CurvePoint::Infinity,
        other => return Err(bad(format!("Q must be [X, Y] or null, got {other}"))),
    };
    let c = match o.get("c") {
        Some(c) => S::from_json(c)?,
        None => S::one(),
    };
    MarkedTriple::new(curve, q, c)
}

pub fn mat2_to_json(m: &Mat2) -> Value {
    let e = |x: &BigInt| match x.to_i64() {
        Some(v) => json!(v),
        None => Value::String(x.to_string()),
    };
    json!([[e(&m.a), e(&m.b)], [e(&m.c), e(&m.d)]])
}

pub fn lattice_to_json(l: &PeriodLattice, tau: Complex64) -> Value {
    json!({
        "omega1": complex_to_json(l.omega1()),
        "omega2": complex_to_json(l.omega2()),
        "tau": complex_to_json(tau),
    })
}

pub fn report_to_json(r: &Report) -> Value {
    json!({
        "checks": r.checks.iter().map(|c| json!({
            "name": c.name,
            "pass": c.pass,
            "residual": float_to_json(c.residual),
        })).collect::<Vec<_>>()
    })
}

fn letters_from_json(v: &Value) -> Result<Vec<i64>> {
    v.as_array()
        .ok_or_else(|| bad("expected an array of signed integers"))?
        .iter()
        .map(|x| x.as_i64().ok_or_else(|| bad(format!("bad letter {x}"))))
        .collect()
}

pub fn braid_to_json(b: &BraidWord) -> Value {
    json!({"strands": b.strands(), "word": b.letters()})
}

/// Accepts `{"strands", "word"}` or a bare letter array with the given default.
pub fn braid_from_json(v: &Value, default_strands: usize) -> Result<BraidWord> {
    match v {
        Value::Object(o) => {
            let strands = o
                .get("strands")
                .and_then(Value::as_u64)
                .map_or(default_strands, |n| n as usize);
            let word = o.get("word").ok_or_else(|| bad("braid is missing \"word\""))?;
            BraidWord::new(strands, letters_from_json(word)?)
        }
        _ => BraidWord::new(default_strands, letters_from_json(v)?),
    }
}

/// Strand count implied by a JSON braid, if stated explicitly.
pub fn braid_declared_strands(v: &Value) -> Option<usize> {
    v.get("strands").and_then(Value::as_u64).map(|n| n as usize)
}

/// Largest `|letter| + 1` in a JSON braid (bare or object form).
pub fn braid_min_strands(v: &Value) -> Result<usize> {
    let word = v.get("word").unwrap_or(v);
    Ok(letters_from_json(word)?
        .iter()
        .map(|l| l.unsigned_abs() as usize + 1)
        .max()
        .unwrap_or(2)
        .max(2))
}

pub fn free_word_to_json(w: &FreeWord) -> Value {
    json!({"rank": w.rank(), "word": w.letters()})
}

pub fn free_word_from_json(v: &Value, default_rank: usize) -> Result<FreeWord> {
    match v {
        Value::Object(o) => {
            let rank = o
                .get("rank")
                .and_then(Value::as_u64)
                .map_or(default_rank, |n| n as usize);
            let word = o.get("word").ok_or_else(|| bad("free word is missing \"word\""))?;
            FreeWord::new(rank, letters_from_json(word)?)
        }
        _ => FreeWord::new(default_rank, letters_from_json(v)?),
    }
}

pub fn free_aut_to_json(phi: &FreeAut) -> Value {
    json!({"images": phi.images().iter().map(free_word_to_json).collect::<Vec<_>>()})
}

/// Accepts `{"images": [...]}` or a bare array of images.
pub fn free_aut_from_json(v: &Value) -> Result<FreeAut> {
    let images = v.get("images").unwrap_or(v);
    let arr = images
        .as_array()
        .ok_or_else(|| bad("automorphism needs an array of images"))?;
    let words = arr
        .iter()
        .map(|w| free_word_from_json(w, arr.len()))
        .collect::<Result<Vec<_>>>()?;
    FreeAut::new(words)
}

pub fn semidirect_to_json(c: &SemidirectCoord) -> Value {
    json!({"fpart": free_word_to_json(&c.fpart), "b3part": braid_to_json(&c.b3part)})
}

/// `ExactRational` parsed from a plain string, for convenience in tests.
pub fn rational(s: &str) -> Result<ExactRational> {
    parse_rational_str(s).ok_or_else(|| bad(format!("bad rational {s:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_encodings() {
        let r = BigRational::new(BigInt::from(-6), BigInt::from(4));
        assert_eq!(r.to_json(), json!("-3/2"));
        assert_eq!(BigRational::from_integer(BigInt::from(7)).to_json(), json!("7"));
        assert_eq!(BigRational::from_json(&json!("-3/2")).unwrap(), r);
        assert_eq!(BigRational::from_json(&json!(-1.5)).unwrap(), r);
        assert_eq!(BigRational::from_json(&json!("-15e-1")).unwrap(), r);
        assert_eq!(BigRational::from_json(&json!([-1.5, 0])).unwrap(), r);
        assert_eq!(BigRational::from_json(&json!([0, 1])), Err(Error::NotInField));
        assert!(BigRational::from_json(&json!("1/0")).is_err());
    }

    #[test]
    fn decimal_is_exact() {
        assert_eq!(
            parse_decimal("0.1").unwrap(),
            BigRational::new(BigInt::from(1), BigInt::from(10))
        );
        assert_eq!(parse_decimal("2e3").unwrap(), BigRational::from_integer(BigInt::from(2000)));
        assert!(parse_decimal("abc").is_none());
        assert!(parse_decimal(".").is_none());
    }

    #[test]
    fn gaussian_encodings() {
        let z = GaussianRational::from_json(&json!([1, -2])).unwrap();
        assert_eq!(z.to_json(), json!({"re": "1", "im": "-2"}));
        assert_eq!(GaussianRational::from_json(&z.to_json()).unwrap(), z);
        let four = GaussianRational::from_json(&json!(4)).unwrap();
        assert_eq!(four.to_json(), json!("4"));
    }

    #[test]
    fn float_encodings() {
        let z = Complex64::from_json(&json!([0.5, -1])).unwrap();
        assert_eq!(z, Complex64::new(0.5, -1.0));
        assert_eq!(z.to_json(), json!([0.5, -1.0]));
        assert_eq!(Complex64::from_json(&json!("1/4")).unwrap(), Complex64::new(0.25, 0.0));
    }

    #[test]
    fn triple_round_trip() {
        let v = json!({"A": "4", "B": "0", "Q": ["0", "0"], "c": "1"});
        let t: MarkedTriple<GaussianRational> = triple_from_json(&v).unwrap();
        let out = triple_to_json(&t);
        assert_eq!(out, json!({"A":"4","B":"0","Q":["0","0"],"c":"1","j":"1728"}));
        let bad_q = json!({"A": "4", "B": "0", "Q": null});
        assert_eq!(
            triple_from_json::<GaussianRational>(&bad_q),
            Err(Error::QAtInfinity)
        );
    }

    #[test]
    fn braid_encodings() {
        let b = braid_from_json(&json!([1, 2, 3]), 4).unwrap();
        assert_eq!(braid_to_json(&b), json!({"strands": 4, "word": [1, 2, 3]}));
        assert_eq!(braid_from_json(&braid_to_json(&b), 3).unwrap(), b);
        let phi = free_aut_from_json(&json!({"images": [[2], [1]]})).unwrap();
        assert_eq!(free_aut_from_json(&free_aut_to_json(&phi)).unwrap(), phi);
    }
}
