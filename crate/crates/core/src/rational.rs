//! Exact rational helpers shared by every measure.
//!
//! Values are arbitrary-precision [`BigRational`]s; this module only adds
//! construction shorthands and the text/JSON renderings used in reports.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::Serializer;

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_usize(v: usize) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `"num/den"`, or just `"num"` for integers.
pub fn exact(r: &Rational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal rendering with six significant digits, trailing zeros trimmed.
pub fn decimal(r: &Rational) -> String {
    let v = r.to_f64().unwrap_or(f64::NAN);
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let magnitude = v.abs().log10().floor() as i32;
    let places = (5 - magnitude).max(0) as usize;
    let mut s = format!("{v:.places$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}

/// Table rendering: exact value followed by the decimal when they differ.
pub fn pretty(r: &Rational) -> String {
    let e = exact(r);
    if r.is_integer() {
        e
    } else {
        format!("{e} (~{})", decimal(r))
    }
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

pub fn is_zero(r: &Rational) -> bool {
    r.is_zero()
}

fn json_int(v: &BigInt) -> serde_json::Value {
    match v.to_i64() {
        Some(i) => serde_json::Value::from(i),
        None => serde_json::Value::from(v.to_string()),
    }
}

/// Serializes a rational as `{"num": .., "den": .., "decimal": ".."}`.
///
/// Components that overflow `i64` fall back to decimal strings.
pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(3))?;
    map.serialize_entry("num", &json_int(r.numer()))?;
    map.serialize_entry("den", &json_int(r.denom()))?;
    map.serialize_entry("decimal", &decimal(r))?;
    map.end()
}

pub fn serialize_opt<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => serialize(r, s),
        None => s.serialize_none(),
    }
}

/// Wrapper that serializes with [`serialize`]; handy inside ad-hoc JSON.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Json(#[serde(serialize_with = "serialize")] pub Rational);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals_use_six_significant_digits() {
        assert_eq!(decimal(&ratio(112, 3)), "37.3333");
        assert_eq!(decimal(&ratio(98, 9)), "10.8889");
        assert_eq!(decimal(&int(36)), "36");
        assert_eq!(decimal(&ratio(39, 25)), "1.56");
        assert_eq!(decimal(&ratio(1, 3)), "0.333333");
        assert_eq!(decimal(&ratio(-9, 7)), "-1.28571");
        assert_eq!(decimal(&int(0)), "0");
    }

    #[test]
    fn exact_rendering() {
        assert_eq!(exact(&ratio(160, 49)), "160/49");
        assert_eq!(exact(&ratio(24, 2)), "12");
        assert_eq!(pretty(&ratio(50, 121)), "50/121 (~0.413223)");
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(Json(ratio(13, 100))).unwrap();
        assert_eq!(v["num"], 13);
        assert_eq!(v["den"], 100);
        assert_eq!(v["decimal"], "0.13");
    }
}
