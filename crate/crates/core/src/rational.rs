//! Exact rational scalars.
//!
//! All proportions and series coefficients in this crate are `Rational`:
//! unbounded numerator, unbounded positive denominator, always reduced.
//! `num_rational::BigRational` provides exactly that representation; this
//! module adds the small constructors and rendering helpers used throughout.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// `a / b` as an exact rational. Panics if `b == 0`.
pub fn rat(a: i64, b: i64) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

/// Integer `a` as a rational.
pub fn rint(a: i64) -> Rational {
    Rational::from_integer(BigInt::from(a))
}

pub fn from_biguint(a: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(a.clone()))
}

/// Render as `"p/q"` (or `"p"` when the denominator is 1), the exact form
/// used in JSON reports.
pub fn render(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `"p/q"` or `"p"`.
pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
        Some((p, q)) => {
            let p = p.trim().parse::<BigInt>().ok()?;
            let q = q.trim().parse::<BigInt>().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
    }
}

/// Exact decimal rendering with `digits` places, rounded half away from zero.
/// Used for human-readable report columns; the `"p/q"` form stays canonical.
pub fn to_decimal(r: &Rational, digits: u32) -> String {
    let sign = if r.is_negative() { "-" } else { "" };
    let abs = r.abs();
    let scale = BigInt::from(10u32).pow(digits);
    // round(abs * 10^digits)
    let scaled = &abs * Rational::from_integer(scale.clone());
    let (q, rem) = num_integer::Integer::div_rem(scaled.numer(), scaled.denom());
    let rounded = if &rem * BigInt::from(2) >= *scaled.denom() {
        q + BigInt::one()
    } else {
        q
    };
    let (int_part, frac_part) = num_integer::Integer::div_rem(&rounded, &scale);
    let frac_str = format!("{:0width$}", frac_part, width = digits as usize);
    format!("{sign}{int_part}.{frac_str}")
}
