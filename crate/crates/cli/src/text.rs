//! Human-readable rendering of numbers and points.

use apolar::json::JsonScalar;
use apolar::{GaussianRational, PointCP1, C64};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

const DIGITS: i32 = 10;

/// A real with ten significant digits, trailing zeros removed.
pub fn real(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let magnitude = x.abs().log10().floor() as i32;
    let s = if (-5..15).contains(&magnitude) {
        let decimals = (DIGITS - 1 - magnitude).max(0) as usize;
        trim(&format!("{x:.decimals$}"))
    } else {
        let s = format!("{:.*e}", (DIGITS - 1) as usize, x);
        let (mantissa, exponent) = s.split_once('e').expect("scientific format");
        format!("{}e{exponent}", trim(mantissa))
    };
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

fn trim(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

fn join_complex(re: String, im: String, im_negative: bool, im_zero: bool, re_zero: bool) -> String {
    match (re_zero, im_zero) {
        (_, true) => re,
        (true, false) => format!("{im}i"),
        (false, false) if im_negative => format!("{re}{im}i"),
        (false, false) => format!("{re}+{im}i"),
    }
}

/// Scalars that print in text mode.
pub trait Show: JsonScalar {
    fn show(&self) -> String;
}

impl Show for C64 {
    /// `a+bi` to ten significant digits of the modulus, so a part below
    /// that resolution is dropped.
    fn show(&self) -> String {
        let cut = 5e-11 * self.norm();
        let visible = |v: f64| if v.abs() < cut { 0.0 } else { v };
        let (re, im) = (real(visible(self.re)), real(visible(self.im)));
        join_complex(
            re.clone(),
            im.clone(),
            im.starts_with('-'),
            im == "0",
            re == "0",
        )
    }
}

fn rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Show for GaussianRational {
    fn show(&self) -> String {
        join_complex(
            rational(&self.re),
            rational(&self.im),
            self.im.is_negative(),
            self.im.is_zero(),
            self.re.is_zero(),
        )
    }
}

pub fn point<T: Show>(p: &PointCP1<T>) -> String {
    match p.affine_coordinate().finite() {
        Some(x) => x.show(),
        None => "inf".into(),
    }
}

pub fn list<T: Show>(values: &[T]) -> String {
    let parts: Vec<String> = values.iter().map(Show::show).collect();
    format!("[{}]", parts.join(", "))
}
