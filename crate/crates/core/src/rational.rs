//! Exact rational arithmetic for weights, scores, and aggregates.
//!
//! All weights and deprivation scores are kept as exact fractions end to
//! end; floats appear only at serialization time. With the built-in
//! schemes every score is an integer multiple of 1/120.

use num_rational::Ratio;

pub type Rational = Ratio<i64>;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

pub const fn zero() -> Rational {
    Rational::new_raw(0, 1)
}

pub const fn one() -> Rational {
    Rational::new_raw(1, 1)
}

/// Renders a rational as a decimal with the given number of fractional
/// digits, rounding half away from zero. Used only for human-facing output.
pub fn to_decimal_string(r: Rational, digits: u32) -> String {
    let scale = 10i128.pow(digits);
    let num = *r.numer() as i128;
    let den = *r.denom() as i128;
    let scaled = num * scale;
    let (q, rem) = (scaled / den, scaled % den);
    let rounded = if 2 * rem.abs() >= den {
        q + if num >= 0 { 1 } else { -1 }
    } else {
        q
    };
    let sign = if rounded < 0 { "-" } else { "" };
    let abs = rounded.abs();
    if digits == 0 {
        format!("{sign}{abs}")
    } else {
        format!("{sign}{}.{:0width$}", abs / scale, abs % scale, width = digits as usize)
    }
}

pub fn to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}
