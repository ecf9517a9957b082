//! The shared JSON formats for quantics and points.
//!
//! A quantic is `{"degree": m, "convention": "binomial" | "plain",
//! "coeffs": [[re, im], …]}`; a point is `[re, im]`, `"inf"` or
//! `{"alpha": [re, im], "beta": [re, im]}`. Numbers may also be written as
//! strings such as `"-3/7"` or `"0.125"`, which exact mode reads without
//! rounding; a bare number stands for a real coefficient.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::moebius::{MoebiusMap, PointCP1, RootConfiguration};
use crate::quantic::BinaryQuantic;
use crate::scalar::{GaussianRational, Scalar, C64};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    #[default]
    Binomial,
    Plain,
}

/// A real number as written in the input.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Float(f64),
    Text(String),
}

/// A complex entry: `[re, im]` or a bare real.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComplexEntry {
    Pair([Number; 2]),
    Real(Number),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuanticJson {
    pub degree: usize,
    #[serde(default)]
    pub convention: Convention,
    pub coeffs: Vec<ComplexEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointJson {
    Homogeneous {
        alpha: ComplexEntry,
        beta: ComplexEntry,
    },
    Affine([Number; 2]),
    Named(String),
}

/// A root-list entry: a point, optionally with a multiplicity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RootEntry {
    Counted {
        point: PointJson,
        multiplicity: usize,
    },
    Single(PointJson),
}

fn parse_decimal(s: &str) -> Option<BigRational> {
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let all = format!("{int_part}{frac_part}");
    let n = BigInt::from_str(if all.is_empty() { "0" } else { &all }).ok()?;
    let shift = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let value = if shift >= 0 {
        BigRational::from_integer(n * ten.pow(shift as u32))
    } else {
        BigRational::new(n, ten.pow((-shift) as u32))
    };
    Some(if negative { -value } else { value })
}

/// Reads `"p/q"`, an integer, or a decimal with optional exponent exactly.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    if let Some((p, q)) = t.split_once('/') {
        let p = BigInt::from_str(p.trim())
            .map_err(|_| Error::Format(format!("bad numerator in {s:?}")))?;
        let q = BigInt::from_str(q.trim())
            .map_err(|_| Error::Format(format!("bad denominator in {s:?}")))?;
        if q.is_zero() {
            return Err(Error::Format(format!("zero denominator in {s:?}")));
        }
        return Ok(BigRational::new(p, q));
    }
    parse_decimal(t).ok_or_else(|| Error::Format(format!("not a number: {s:?}")))
}

impl Number {
    fn to_f64(&self) -> Result<f64> {
        let v = match self {
            Number::Float(v) => *v,
            Number::Text(s) => {
                let r = parse_rational(s)?;
                r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
            }
        };
        if !v.is_finite() {
            return Err(Error::Format(format!("non-finite number {self:?}")));
        }
        Ok(v)
    }

    /// Floats are read through their shortest decimal form, so `0.1` is `1/10`.
    fn to_rational(&self) -> Result<BigRational> {
        match self {
            Number::Float(v) if v.is_finite() => parse_rational(&format!("{v}")),
            Number::Float(v) => Err(Error::Format(format!("non-finite number {v}"))),
            Number::Text(s) => parse_rational(s),
        }
    }
}

/// Scalars that can be read from and written to the shared formats.
pub trait JsonScalar: Scalar {
    fn from_parts(re: &Number, im: &Number) -> Result<Self>;
    fn to_json(&self) -> Value;
}

impl JsonScalar for C64 {
    fn from_parts(re: &Number, im: &Number) -> Result<Self> {
        Ok(C64::new(re.to_f64()?, im.to_f64()?))
    }

    fn to_json(&self) -> Value {
        json!([self.re, self.im])
    }
}

fn rational_text(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl JsonScalar for GaussianRational {
    fn from_parts(re: &Number, im: &Number) -> Result<Self> {
        Ok(GaussianRational::new(re.to_rational()?, im.to_rational()?))
    }

    fn to_json(&self) -> Value {
        json!([rational_text(&self.re), rational_text(&self.im)])
    }
}

impl ComplexEntry {
    pub fn to_scalar<T: JsonScalar>(&self) -> Result<T> {
        match self {
            ComplexEntry::Pair([re, im]) => T::from_parts(re, im),
            ComplexEntry::Real(re) => T::from_parts(re, &Number::Float(0.0)),
        }
    }
}

impl QuanticJson {
    pub fn to_quantic<T: JsonScalar>(&self) -> Result<BinaryQuantic<T>> {
        if self.coeffs.len() != self.degree + 1 {
            return Err(Error::Format(format!(
                "degree {} needs {} coefficients, got {}",
                self.degree,
                self.degree + 1,
                self.coeffs.len()
            )));
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(ComplexEntry::to_scalar)
            .collect::<Result<Vec<T>>>()?;
        match self.convention {
            Convention::Binomial => BinaryQuantic::new(coeffs),
            Convention::Plain => BinaryQuantic::from_plain(coeffs),
        }
    }
}

pub fn parse_quantic<T: JsonScalar>(text: &str) -> Result<BinaryQuantic<T>> {
    serde_json::from_str::<QuanticJson>(text)?.to_quantic()
}

pub fn quantic_from_value<T: JsonScalar>(v: &Value) -> Result<BinaryQuantic<T>> {
    QuanticJson::deserialize(v)?.to_quantic()
}

/// A quantic in binomial convention.
pub fn quantic_to_json<T: JsonScalar>(q: &BinaryQuantic<T>) -> Value {
    coeffs_to_json(q.coeffs())
}

/// A coefficient list in binomial convention; zero lists are allowed here.
pub fn coeffs_to_json<T: JsonScalar>(c: &[T]) -> Value {
    json!({
        "degree": c.len() - 1,
        "convention": "binomial",
        "coeffs": c.iter().map(JsonScalar::to_json).collect::<Vec<_>>(),
    })
}

impl PointJson {
    pub fn to_point<T: JsonScalar>(&self) -> Result<PointCP1<T>> {
        match self {
            PointJson::Named(s) if s.eq_ignore_ascii_case("inf") => Ok(PointCP1::infinity()),
            PointJson::Named(s) => Err(Error::Format(format!("unknown point {s:?}"))),
            PointJson::Affine([re, im]) => Ok(PointCP1::affine(T::from_parts(re, im)?)),
            PointJson::Homogeneous { alpha, beta } => {
                PointCP1::new(alpha.to_scalar()?, beta.to_scalar()?)
                    .map_err(|e| Error::Format(e.to_string()))
            }
        }
    }
}

/// A point as `"inf"`, as `[re, im]` when finite, or homogeneously when
/// `force_homogeneous` is set.
pub fn point_to_json<T: JsonScalar>(p: &PointCP1<T>, force_homogeneous: bool) -> Value {
    if force_homogeneous {
        return json!({"alpha": p.alpha().to_json(), "beta": p.beta().to_json()});
    }
    match p.affine_coordinate().finite() {
        Some(x) => x.to_json(),
        None => json!("inf"),
    }
}

pub fn parse_points<T: JsonScalar>(text: &str) -> Result<Vec<PointCP1<T>>> {
    let list: Vec<PointJson> = serde_json::from_str(text)?;
    list.iter().map(PointJson::to_point).collect()
}

pub fn parse_point<T: JsonScalar>(text: &str) -> Result<PointCP1<T>> {
    serde_json::from_str::<PointJson>(text)?.to_point()
}

/// A root list; repeated points and explicit multiplicities both count.
pub fn parse_roots<T: JsonScalar>(text: &str) -> Result<RootConfiguration<T>> {
    let list: Vec<RootEntry> = serde_json::from_str(text)?;
    let mut expanded = Vec::new();
    for entry in &list {
        let (p, m) = match entry {
            RootEntry::Counted {
                point,
                multiplicity,
            } => (point.to_point::<T>()?, *multiplicity),
            RootEntry::Single(point) => (point.to_point::<T>()?, 1),
        };
        if m == 0 {
            return Err(Error::Format("multiplicities must be positive".into()));
        }
        expanded.extend(std::iter::repeat_n(p, m));
    }
    Ok(RootConfiguration::from_points(&expanded))
}

pub fn roots_to_json<T: JsonScalar>(r: &RootConfiguration<T>) -> Value {
    Value::Array(
        r.points()
            .iter()
            .map(|(p, m)| json!({"point": point_to_json(p, false), "multiplicity": m}))
            .collect(),
    )
}

pub fn moebius_to_json<T: JsonScalar>(g: &MoebiusMap<T>) -> Value {
    json!({"a": g.a.to_json(), "b": g.b.to_json(), "c": g.c.to_json(), "d": g.d.to_json()})
}
