//! Counting monic irreducible polynomials and the generating-function
//! identities built on those counts.
//!
//! Everything here takes the field order q as a plain integer (no arithmetic
//! tables are needed), so these functions work far beyond the table cap.
//! The headline checks: the necklace identity
//! ∏_d (1−u^d)^{−N(q;d)} = (1−u)/(1−qu), its weighted double-product form
//! ∏_d ∏_{i≥1} (1−u^d/q^{di})^{−N(q;d)} = (1−u)^{−1}, and the subfield
//! comparison b·N(q;db) ≤ N(q^b;d) — where N(q;d) counts monic irreducible
//! degree-d polynomials over F_q with nonzero constant term.

use crate::qseries::Series;
use crate::Rational;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// The Möbius function on positive integers.
pub fn moebius(n: u64) -> i64 {
    assert!(n >= 1);
    let mut n = n;
    let mut k = 0u32;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            k += 1;
        }
        p += 1;
    }
    if n > 1 {
        k += 1;
    }
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

fn divisors(n: u32) -> Vec<u32> {
    let mut out: Vec<u32> = (1..=n).filter(|d| n % d == 0).collect();
    out.sort_unstable();
    out
}

/// The number of ALL monic irreducible degree-d polynomials over F_q
/// (including x), by Möbius inversion of the necklace count:
/// (1/d)·Σ_{e|d} μ(e)·q^{d/e}.
pub fn irreducible_count_total(q: u64, d: u32) -> BigInt {
    assert!(d >= 1 && q >= 2);
    let qb = BigInt::from(q);
    let mut sum = BigInt::zero();
    for e in divisors(d) {
        let term = qb.pow(d / e);
        match moebius(e as u64) {
            1 => sum += term,
            -1 => sum -= term,
            _ => {}
        }
    }
    let (quot, rem) = (sum.clone() / d, sum % d);
    assert!(rem.is_zero(), "necklace count must divide evenly");
    quot
}

/// N(q;d): monic irreducible degree-d polynomials over F_q with nonzero
/// constant term.  Only x itself has constant term zero, so this differs
/// from the total count exactly at d = 1.
pub fn nonzero_constant_irreducible_count(q: u64, d: u32) -> BigInt {
    let mut n = irreducible_count_total(q, d);
    if d == 1 {
        n -= 1;
    }
    n
}

/// Σ_{d|m} d·(total irreducible count of degree d) = q^m — the necklace
/// identity in counting form, an independent oracle for the counts.
pub fn gauss_count_identity_holds(q: u64, m: u32) -> bool {
    let mut sum = BigInt::zero();
    for d in divisors(m) {
        sum += BigInt::from(d) * irreducible_count_total(q, d);
    }
    sum == BigInt::from(q).pow(m)
}

/// b·N(q;db) ≤ N(q^b;d): a degree-db irreducible over F_q splits into b
/// conjugate degree-d irreducibles over F_{q^b}, never exhausting them.
pub fn subfield_count_check(q: u64, d: u32, b: u32) -> bool {
    let qb = q.checked_pow(b).expect("q^b overflows u64");
    BigInt::from(b) * nonzero_constant_irreducible_count(q, d * b)
        <= nonzero_constant_irreducible_count(qb, d)
}

/// The series Σ_m v^m·c^m/∏_{j=1}^m(1−c^j), which is the expansion of
/// ∏_{i≥1}(1−v·c^i)^{−1}; also the generating function Σ_λ v^{|λ|}/C(λ)
/// over partitions weighted by centralizer order at q = 1/c.
pub fn euler_factor_series(c: &Rational, order: usize) -> Series {
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(Rational::one());
    let mut c_pow = Rational::one(); // c^m
    let mut denom = Rational::one(); // ∏_{j=1}^m (1 − c^j)
    for _ in 1..=order {
        c_pow *= c;
        let factor = Rational::one() - &c_pow;
        assert!(!factor.is_zero(), "c must not be a root of unity");
        denom *= factor;
        coeffs.push(&c_pow / &denom);
    }
    Series::from_coeffs(coeffs)
}

fn n_exponent(q: u64, d: u32) -> BigUint {
    nonzero_constant_irreducible_count(q, d)
        .to_biguint()
        .expect("irreducible counts are nonnegative")
}

/// ∏_{d=1}^{order} (1−u^d)^{−N(q;d)} equals (1−u)/(1−qu) coefficientwise to
/// the given order.
pub fn necklace_identity_holds(q: u64, order: usize) -> bool {
    let mut lhs = Series::one(order);
    for d in 1..=order {
        let factor = Series::one_minus_u_pow(d, order)
            .inverse()
            .expect("unit constant term")
            .pow_big(&n_exponent(q, d as u32));
        lhs = lhs.mul(&factor);
    }
    let mut denom_coeffs = vec![Rational::zero(); order + 1];
    denom_coeffs[0] = Rational::one();
    denom_coeffs[1] = -Rational::from_integer(q.into());
    let rhs = Series::from_coeffs(denom_coeffs)
        .inverse()
        .expect("unit constant term")
        .mul(&Series::one_minus_u_pow(1, order));
    lhs.agrees_with(&rhs)
}

/// ∏_{d=1}^{order} [∏_{i≥1}(1−u^d/q^{di})^{−1}]^{N(q;d)} equals (1−u)^{−1}
/// coefficientwise to the given order: the inner products expand by the
/// closed form of `euler_factor_series`.
pub fn necklace_double_product_holds(q: u64, order: usize) -> bool {
    let mut lhs = Series::one(order);
    for d in 1..=order {
        let c = Rational::new(BigInt::one(), BigInt::from(q).pow(d as u32));
        let inner_order = order / d + 1;
        let factor = euler_factor_series(&c, inner_order)
            .subst_power(d)
            .truncate(order)
            .pow_big(&n_exponent(q, d as u32));
        lhs = lhs.mul(&factor);
    }
    let rhs = Series::one_minus_u_pow(1, order)
        .inverse()
        .expect("unit constant term");
    lhs.agrees_with(&rhs)
}

/// Both necklace-identity forms at once (the single product against
/// (1−u)/(1−qu) and the double product against (1−u)^{−1}).
pub fn verify_necklace_identity(q: u64, order: usize) -> bool {
    necklace_identity_holds(q, order) && necklace_double_product_holds(q, order)
}
