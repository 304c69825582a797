//! Rational enclosures of real quantities, with directed rounding.
//!
//! Inequalities whose right side involves `e^x`, `pi`, or fractional powers
//! are decided by computing a rational interval `[lo, hi]` guaranteed to
//! contain the real value, then comparing against the endpoint that makes
//! the test *harder*: a claim `value <= bound` passes only when
//! `value <= bound.lo`.  No floating point is involved anywhere.
//!
//! Working precision: endpoints are rounded outward to dyadic rationals with
//! `WORK_BITS` fractional bits after every operation, so enclosures stay
//! cheap while guaranteeing far more than 60 correct bits for the handful of
//! composed operations any one check performs.

use crate::rational::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::sync::OnceLock;

/// Fractional bits kept by outward rounding; comfortably above the 60-bit
/// guarantee the bound checks rely on.
pub const WORK_BITS: u32 = 128;

/// A closed rational interval `[lo, hi]` containing a real value.
#[derive(Debug, Clone, PartialEq)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits
}

/// Largest multiple of 2^-bits that is <= r.
fn floor_dyadic(r: &Rational, bits: u32) -> Rational {
    let scale = pow2(bits);
    let scaled = r * Rational::from_integer(scale.clone());
    let fl = scaled.floor();
    Rational::new(fl.to_integer(), scale)
}

/// Smallest multiple of 2^-bits that is >= r.
fn ceil_dyadic(r: &Rational, bits: u32) -> Rational {
    let scale = pow2(bits);
    let scaled = r * Rational::from_integer(scale.clone());
    let cl = scaled.ceil();
    Rational::new(cl.to_integer(), scale)
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi }
    }

    /// Degenerate interval containing exactly `r`.
    pub fn point(r: Rational) -> Self {
        Interval {
            lo: r.clone(),
            hi: r,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::point(Rational::from_integer(big(n)))
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// Round endpoints outward to dyadics, keeping the enclosure valid while
    /// stopping denominator growth.
    pub fn round_out(&self) -> Self {
        Interval {
            lo: floor_dyadic(&self.lo, WORK_BITS),
            hi: ceil_dyadic(&self.hi, WORK_BITS),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
        .round_out()
    }

    pub fn sub(&self, other: &Self) -> Self {
        Interval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
        .round_out()
    }

    pub fn neg(&self) -> Self {
        Interval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        Interval { lo, hi }.round_out()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.mul(&Interval::point(c.clone()))
    }

    /// Reciprocal; requires the interval not to contain zero.
    pub fn recip(&self) -> Self {
        assert!(
            self.lo.is_positive() || self.hi.is_negative(),
            "reciprocal of interval containing zero"
        );
        Interval {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        }
        .round_out()
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.recip())
    }

    /// `self^k` for k >= 0; requires a nonnegative lower endpoint (the only
    /// case the bound checks need).
    pub fn pow_int(&self, k: u32) -> Self {
        assert!(!self.lo.is_negative(), "pow_int needs a nonnegative interval");
        let mut lo = Rational::one();
        let mut hi = Rational::one();
        for _ in 0..k {
            lo *= &self.lo;
            hi *= &self.hi;
        }
        Interval { lo, hi }.round_out()
    }

    /// `e^self`: monotone, so take `exp` of each endpoint outward.
    pub fn exp(&self) -> Self {
        let lo = exp_rational(&self.lo);
        let hi = exp_rational(&self.hi);
        Interval {
            lo: lo.lo,
            hi: hi.hi,
        }
    }

    /// `self^(1/b)` for positive intervals.
    pub fn nth_root(&self, b: u32) -> Self {
        assert!(b >= 1);
        assert!(
            !self.lo.is_negative(),
            "nth_root needs a nonnegative interval"
        );
        Interval {
            lo: root_below(&self.lo, b),
            hi: root_above(&self.hi, b),
        }
    }

    pub fn sqrt(&self) -> Self {
        self.nth_root(2)
    }

    /// `self^(a/b)` for a positive interval and integer a (possibly negative).
    pub fn pow_rat(&self, a: i64, b: u32) -> Self {
        assert!(self.lo.is_positive(), "pow_rat needs a positive interval");
        let pos = self.pow_int(a.unsigned_abs() as u32).nth_root(b);
        if a >= 0 {
            pos
        } else {
            pos.recip()
        }
    }
}

/// `value <= bound` with the bound rounded *down*: true only when the
/// inequality is certain.
pub fn definitely_le(value: &Rational, bound: &Interval) -> bool {
    value <= &bound.lo
}

/// `value >= bound` with the bound rounded *up*.
pub fn definitely_ge(value: &Rational, bound: &Interval) -> bool {
    value >= &bound.hi
}

/// Rigorous enclosure of `e^x` for rational `x`.
///
/// Argument is halved until `|x| <= 1/2`, the Taylor series is summed with an
/// explicit tail bound, and the reduction is undone by repeated squaring.
pub fn exp_rational(x: &Rational) -> Interval {
    if x.is_negative() {
        return exp_rational(&-x.clone()).recip();
    }
    if x.is_zero() {
        return Interval::from_int(1);
    }
    // halve until <= 1/2
    let half = Rational::new(big(1), big(2));
    let mut x_red = x.clone();
    let mut squarings = 0u32;
    while x_red > half {
        x_red /= Rational::from_integer(big(2));
        squarings += 1;
    }
    // Taylor sum with K terms; tail <= 2 * x^K / K! for x <= 1/2.
    const K: u32 = 40;
    let mut term = Rational::one();
    let mut sum = Rational::one();
    for k in 1..K {
        term = term * &x_red / Rational::from_integer(big(k as i64));
        sum += &term;
    }
    let tail = term * &x_red / Rational::from_integer(big(K as i64)) * Rational::from_integer(big(2));
    let mut iv = Interval {
        lo: sum.clone(),
        hi: sum + tail,
    }
    .round_out();
    for _ in 0..squarings {
        iv = iv.mul(&iv);
    }
    iv
}

/// Dyadic `r` with `r^b <= y`, within 2^-WORK_BITS of the true root.
fn root_below(y: &Rational, b: u32) -> Rational {
    root_enclose(y, b).0
}

/// Dyadic `r` with `r^b >= y`, within 2^-WORK_BITS of the true root.
fn root_above(y: &Rational, b: u32) -> Rational {
    root_enclose(y, b).1
}

fn rat_pow(r: &Rational, b: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..b {
        acc *= r;
    }
    acc
}

/// Bisection for the b-th root of a nonnegative rational.
fn root_enclose(y: &Rational, b: u32) -> (Rational, Rational) {
    if y.is_zero() {
        return (Rational::zero(), Rational::zero());
    }
    assert!(y.is_positive(), "root of a negative rational");
    if b == 1 {
        return (y.clone(), y.clone());
    }
    let one = Rational::one();
    let (mut lo, mut hi) = if *y >= one {
        (Rational::one(), y.clone().max(one))
    } else {
        (Rational::zero(), Rational::one())
    };
    // Invariant: lo^b <= y <= hi^b.
    let target_width = Rational::new(BigInt::one(), pow2(WORK_BITS));
    let two = Rational::from_integer(big(2));
    while &hi - &lo > target_width {
        let mid = (&lo + &hi) / &two;
        if rat_pow(&mid, b) <= *y {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// Enclosure of pi via Machin's formula with alternating-series tail bounds.
pub fn pi() -> Interval {
    static PI: OnceLock<Interval> = OnceLock::new();
    PI.get_or_init(|| {
        // pi = 16 atan(1/5) - 4 atan(1/239)
        let a5 = atan_inv(5, 40);
        let a239 = atan_inv(239, 14);
        a5.scale(&Rational::from_integer(big(16)))
            .sub(&a239.scale(&Rational::from_integer(big(4))))
    })
    .clone()
}

/// Enclosure of atan(1/m) from `terms` leading terms of the alternating
/// series; consecutive partial sums bracket the limit.
fn atan_inv(m: i64, terms: u32) -> Interval {
    let minv2 = Rational::new(BigInt::one(), big(m) * big(m));
    let mut power = Rational::new(BigInt::one(), big(m)); // (1/m)^(2k+1)
    let mut sum = Rational::zero();
    let mut prev;
    let mut lo = Rational::zero();
    let mut hi = Rational::one();
    for k in 0..terms {
        prev = sum.clone();
        let term = &power / Rational::from_integer(big(2 * k as i64 + 1));
        if k % 2 == 0 {
            sum = prev + term;
            hi = sum.clone(); // odd partial sums overshoot
        } else {
            sum = prev - term;
            lo = sum.clone(); // even partial sums undershoot
        }
        power *= &minv2;
    }
    Interval::new(lo, hi).round_out()
}
