//! Display-only decimal renderings of exact rationals. Nothing computed here
//! feeds back into the exact pipeline.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::geometry::Rat;

fn pow10(k: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), k as usize)
}

/// `|r|` rounded half-up to an integer.
fn round_abs(r: &Rat) -> BigInt {
    let r = r.abs();
    let twice_d: BigInt = r.denom() * 2;
    let num: BigInt = r.numer() * 2 + r.denom();
    num.div_floor(&twice_d)
}

/// Fixed-point rendering with `places` digits after the point.
pub fn fixed(r: &Rat, places: u32) -> String {
    let scaled = round_abs(&(r * Rat::from_integer(pow10(places))));
    let sign = if r.is_negative() && !scaled.is_zero() { "-" } else { "" };
    if places == 0 {
        return format!("{sign}{scaled}");
    }
    let digits = format!("{:0>width$}", scaled.to_string(), width = places as usize + 1);
    let (int, frac) = digits.split_at(digits.len() - places as usize);
    format!("{sign}{int}.{frac}")
}

/// Scientific rendering `d.ddd…e±x` with `digits` significant digits.
pub fn scientific(r: &Rat, digits: u32) -> String {
    assert!(digits >= 1);
    if r.is_zero() {
        return "0".into();
    }
    let a = r.abs();
    // Decimal exponent e with 10^e <= |r| < 10^(e+1).
    let mut e: i64 = a.numer().to_string().len() as i64 - a.denom().to_string().len() as i64;
    let ten_pow = |k: i64| -> Rat {
        if k >= 0 {
            Rat::from_integer(pow10(k as u32))
        } else {
            Rat::new(BigInt::from(1), pow10((-k) as u32))
        }
    };
    while ten_pow(e) > a {
        e -= 1;
    }
    while ten_pow(e + 1) <= a {
        e += 1;
    }
    let mut mant = round_abs(&(&a * ten_pow(digits as i64 - 1 - e)));
    if mant == pow10(digits) {
        mant = pow10(digits - 1);
        e += 1;
    }
    let m = mant.to_string();
    let sign = if r.is_negative() { "-" } else { "" };
    if digits == 1 {
        format!("{sign}{m}e{e}")
    } else {
        format!("{sign}{}.{}e{e}", &m[..1], &m[1..])
    }
}

/// Nearest `f64` to the `digits`-significant-digit rounding of `r`.
pub fn approx(r: &Rat, digits: u32) -> f64 {
    scientific(r, digits).parse().expect("well-formed scientific literal")
}
