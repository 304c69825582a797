//! Truncated formal power series with exact rational coefficients.
//!
//! A `Series` holds coefficients of u^0 .. u^N for its truncation order N;
//! arithmetic on two series truncates to the smaller order.  Everything is
//! exact, so identities between generating functions can be asserted
//! coefficient-for-coefficient.
//!
//! The constructors tied to cycle structure:
//! - `binomial_series(t, N)` is (1-u)^(-t) for rational t;
//! - `sym_cycle_series(allowed, N)` is exp(sum over allowed i of u^i/i), the
//!   proportion generating function for permutations whose cycle lengths all
//!   satisfy `allowed`;
//! - `signed_cycle_series` is the analogue for signed permutations with a
//!   prescribed sign pattern per cycle-length parity.

use crate::rational::Rational;
use crate::realbound::{definitely_le, exp_rational, pi, Interval};
use crate::{Error, Result};
use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};

/// Truncation order used by the CLI when none is requested.
pub const DEFAULT_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rational>, // index k holds the coefficient of u^k
}

impl Series {
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the u^0 term");
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// `1 - u^b`, truncated at `order`.
    pub fn one_minus_u_pow(b: usize, order: usize) -> Self {
        assert!(b >= 1 && b <= order, "monomial degree outside order");
        let mut s = Series::one(order);
        s.coeffs[b] = -Rational::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of u^k; panics past the truncation order.
    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Copy truncated to a (possibly smaller) order.
    pub fn truncate(&self, order: usize) -> Series {
        Series {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn add(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        Series {
            coeffs: (0..=n)
                .map(|k| &self.coeffs[k] + &other.coeffs[k])
                .collect(),
        }
    }

    pub fn sub(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        Series {
            coeffs: (0..=n)
                .map(|k| &self.coeffs[k] - &other.coeffs[k])
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Series { coeffs: out }
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Result<Series> {
        if self.coeffs[0].is_zero() {
            return Err(Error::Domain(
                "series inverse needs a nonzero constant term".into(),
            ));
        }
        let n = self.order();
        let a0 = self.coeffs[0].recip();
        let mut c = vec![Rational::zero(); n + 1];
        c[0] = a0.clone();
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &c[k - j];
                }
            }
            c[k] = -(acc * &a0);
        }
        Ok(Series { coeffs: c })
    }

    /// exp of a series with zero constant term, via g' = f' g.
    pub fn exp(&self) -> Result<Series> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Domain(
                "series exp needs a zero constant term".into(),
            ));
        }
        let n = self.order();
        let mut g = vec![Rational::zero(); n + 1];
        g[0] = Rational::one();
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += Rational::from_integer(j.into()) * &self.coeffs[j] * &g[k - j];
                }
            }
            g[k] = acc / Rational::from_integer(k.into());
        }
        Ok(Series { coeffs: g })
    }

    /// Substitute u -> u^b.  An order-N input determines orders 0..N*b.
    pub fn subst_power(&self, b: usize) -> Series {
        assert!(b >= 1, "substitution power must be positive");
        let n = self.order();
        let mut out = vec![Rational::zero(); n * b + 1];
        for (k, a) in self.coeffs.iter().enumerate() {
            out[k * b] = a.clone();
        }
        Series { coeffs: out }
    }

    /// Integer power by binary exponentiation (truncated at self's order).
    pub fn pow_big(&self, e: &BigUint) -> Series {
        let order = self.order();
        let mut result = Series::one(order);
        if e.is_zero() {
            return result;
        }
        let bits = e.bits();
        let mut base = self.clone();
        for i in 0..bits {
            if e.bit(i) {
                result = result.mul(&base);
            }
            if i + 1 < bits {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn pow_u64(&self, e: u64) -> Series {
        self.pow_big(&BigUint::from(e))
    }

    /// Coefficientwise domination: |self_k| <= |other_k| for all k up to the
    /// shared order.
    pub fn dominated_by(&self, other: &Series) -> bool {
        let n = self.order().min(other.order());
        (0..=n).all(|k| self.coeffs[k].abs() <= other.coeffs[k].abs())
    }

    /// Equality of coefficients up to the shared order.
    pub fn agrees_with(&self, other: &Series) -> bool {
        let n = self.order().min(other.order());
        (0..=n).all(|k| self.coeffs[k] == other.coeffs[k])
    }
}

/// `(1-u)^(-t)` for rational `t`: coefficients c_0 = 1,
/// c_r = c_{r-1} (t + r - 1)/r.
pub fn binomial_series(t: &Rational, order: usize) -> Series {
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(Rational::one());
    for r in 1..=order {
        let prev = &coeffs[r - 1];
        let next = prev * (t + Rational::from_integer((r as i64 - 1).into()))
            / Rational::from_integer((r as i64).into());
        coeffs.push(next);
    }
    Series { coeffs }
}

/// Generating function for the proportion of permutations all of whose cycle
/// lengths satisfy `allowed`: exp(sum over allowed i of u^i / i).
pub fn sym_cycle_series(allowed: impl Fn(usize) -> bool, order: usize) -> Series {
    let mut f = Series::zero(order);
    for i in 1..=order {
        if allowed(i) {
            f.coeffs[i] = Rational::new(1.into(), (i as i64).into());
        }
    }
    f.exp().expect("constant term is zero by construction")
}

/// Which signs a cycle may carry, per cycle-length parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignChoice {
    pub positive: bool,
    pub negative: bool,
}

impl SignChoice {
    pub const BOTH: SignChoice = SignChoice {
        positive: true,
        negative: true,
    };
    pub const POS: SignChoice = SignChoice {
        positive: true,
        negative: false,
    };
    pub const NEG: SignChoice = SignChoice {
        positive: false,
        negative: true,
    };

    fn count(&self) -> i64 {
        self.positive as i64 + self.negative as i64
    }
}

/// Generating function for the proportion of signed permutations whose
/// odd-length cycles carry a sign allowed by `odd` and even-length cycles a
/// sign allowed by `even`: exp(sum of u^i a_i/(2i)) with a_i the number of
/// allowed signs for the parity of i.
pub fn signed_cycle_series(odd: SignChoice, even: SignChoice, order: usize) -> Series {
    let mut f = Series::zero(order);
    for i in 1..=order {
        let a = if i % 2 == 1 { odd.count() } else { even.count() };
        if a != 0 {
            f.coeffs[i] = Rational::new(a.into(), (2 * i as i64).into());
        }
    }
    f.exp().expect("constant term is zero by construction")
}

/// Coefficient of u^n in the all-cycle-lengths-divisible-by-b series
/// (1 - u^b)^(-1/b); zero unless b divides n.
pub fn cycles_div_b_coeff(n: usize, b: usize) -> Rational {
    assert!(b >= 1);
    if n % b != 0 {
        return Rational::zero();
    }
    let t = Rational::new(1.into(), (b as i64).into());
    binomial_series(&t, n / b).coeff(n / b).clone()
}

/// Check: the coefficient of u^r in (1-u)^(-t) is at most t e^t r^(t-1),
/// with the right side rounded down.  Needs 0 < t <= 1 and r >= 1.
pub fn binomial_tail_bound_holds(t: &Rational, r: usize) -> bool {
    assert!(t.is_positive() && *t <= Rational::one());
    assert!(r >= 1);
    let coeff = binomial_series(t, r).coeff(r).clone();
    let a = i64::try_from(t.numer().clone()).expect("small numerator");
    let b = u32::try_from(t.denom().clone()).expect("small denominator");
    let bound = Interval::point(t.clone())
        .mul(&exp_rational(t))
        .mul(&Interval::from_int(r as i64).pow_rat(a - b as i64, b));
    definitely_le(&coeff, &bound)
}

/// Check: for b | n, the coefficient of u^n in (1-u^b)^(-1/b) is at most
/// 1.2 / n^(1 - 1/b), right side rounded down.
pub fn cycles_div_b_bound_holds(n: usize, b: usize) -> bool {
    assert!(b >= 2 && n >= 1 && n % b == 0);
    let coeff = cycles_div_b_coeff(n, b);
    let bound = Interval::point(Rational::new(6.into(), 5.into()))
        .mul(&Interval::from_int(n as i64).pow_rat(-((b as i64) - 1), b as u32));
    definitely_le(&coeff, &bound)
}

/// Check: the coefficient of u^n in (1-u)^(-1/2) is at most 1/sqrt(pi n),
/// right side rounded down.
pub fn signed_pattern_bound_holds(n: usize) -> bool {
    assert!(n >= 1);
    let half = Rational::new(1.into(), 2.into());
    let coeff = binomial_series(&half, n).coeff(n).clone();
    let bound = pi()
        .mul(&Interval::from_int(n as i64))
        .sqrt()
        .recip();
    definitely_le(&coeff, &bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rint};

    // ---- independent brute-force oracles over S_n and B_n ----------------

    /// Visit every permutation of 0..n (Heap's algorithm).
    fn for_each_perm(n: usize, mut f: impl FnMut(&[usize])) {
        let mut a: Vec<usize> = (0..n).collect();
        let mut c = vec![0usize; n];
        f(&a);
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    a.swap(0, i);
                } else {
                    a.swap(c[i], i);
                }
                f(&a);
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
    }

    fn cycle_lengths(p: &[usize]) -> Vec<usize> {
        let n = p.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut j = s;
            while !seen[j] {
                seen[j] = true;
                j = p[j];
                len += 1;
            }
            out.push(len);
        }
        out
    }

    /// Proportion of S_n with every cycle length divisible by b, by direct
    /// enumeration of all n! permutations.
    fn brute_sym_div_proportion(n: usize, b: usize) -> Rational {
        let mut hits = 0i64;
        let mut total = 0i64;
        for_each_perm(n, |p| {
            total += 1;
            if cycle_lengths(p).iter().all(|&l| l % b == 0) {
                hits += 1;
            }
        });
        rat(hits, total)
    }

    /// Proportion of signed permutations of 0..n whose odd cycles all carry
    /// sign `odd_neg ? -1 : +1` and even cycles `even_neg ? -1 : +1`,
    /// by enumerating all 2^n n! elements.
    fn brute_signed_pattern_proportion(n: usize, odd_neg: bool, even_neg: bool) -> Rational {
        let mut hits = 0i64;
        let mut total = 0i64;
        for_each_perm(n, |p| {
            for mask in 0u32..(1 << n) {
                total += 1;
                let mut seen = vec![false; n];
                let mut ok = true;
                for s in 0..n {
                    if seen[s] {
                        continue;
                    }
                    let mut len = 0;
                    let mut sign_neg = false;
                    let mut j = s;
                    while !seen[j] {
                        seen[j] = true;
                        if mask >> j & 1 == 1 {
                            sign_neg = !sign_neg;
                        }
                        j = p[j];
                        len += 1;
                    }
                    let want_neg = if len % 2 == 1 { odd_neg } else { even_neg };
                    if sign_neg != want_neg {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    hits += 1;
                }
            }
        });
        rat(hits, total)
    }

    // ---- frozen example values -------------------------------------------

    #[test]
    fn binomial_series_examples() {
        let half = rat(1, 2);
        let s = binomial_series(&half, 4);
        assert_eq!(s.coeff(0), &rint(1));
        assert_eq!(s.coeff(1), &rat(1, 2));
        assert_eq!(s.coeff(2), &rat(3, 8));
        assert_eq!(s.coeff(3), &rat(5, 16));
        assert_eq!(s.coeff(4), &rat(35, 128));
        // t = 1 gives the geometric series
        let g = binomial_series(&rint(1), 6);
        assert!(g.coeffs().iter().all(|c| c == &rint(1)));
    }

    #[test]
    fn subst_power_example() {
        let half = rat(1, 2);
        let s = binomial_series(&half, 2).subst_power(2);
        assert_eq!(s.coeff(4), &rat(3, 8));
        assert_eq!(s.coeff(3), &rint(0));
        assert_eq!(s.order(), 4);
    }

    #[test]
    fn mul_inverse_exp_basics() {
        let one_minus_u = Series::one_minus_u_pow(1, 8);
        let inv = one_minus_u.inverse().unwrap();
        assert!(inv.coeffs().iter().all(|c| c == &rint(1)));
        assert!(one_minus_u.mul(&inv).agrees_with(&Series::one(8)));

        // exp(u) has coefficients 1/k!
        let mut u = Series::zero(6);
        u = u.add(&{
            let mut m = Series::zero(6);
            m.coeffs[1] = rint(1);
            m
        });
        let e = u.exp().unwrap();
        let mut fact = 1i64;
        for k in 1..=6 {
            fact *= k as i64;
            assert_eq!(e.coeff(k), &rat(1, fact));
        }

        assert!(matches!(
            Series::one(4).exp(),
            Err(crate::Error::Domain(_))
        ));
        assert!(matches!(
            Series::zero(4).inverse(),
            Err(crate::Error::Domain(_))
        ));
    }

    #[test]
    fn min_order_rule() {
        let a = Series::one(10);
        let b = Series::one(4);
        assert_eq!(a.mul(&b).order(), 4);
        assert_eq!(a.add(&b).order(), 4);
    }

    #[test]
    fn cycle_series_identity_with_binomial() {
        // exp(sum over b|i of u^i/i) = (1-u^b)^(-1/b)
        for b in [2usize, 3, 5] {
            let lhs = sym_cycle_series(|i| i % b == 0, 30);
            let t = Rational::new(1.into(), (b as i64).into());
            let rhs = binomial_series(&t, 30 / b).subst_power(b);
            assert!(lhs.agrees_with(&rhs), "b = {b}");
        }
        // all lengths allowed: the geometric series (proportion 1 for every n)
        let all = sym_cycle_series(|_| true, 12);
        assert!(all.agrees_with(&binomial_series(&rint(1), 12)));
    }

    #[test]
    fn sym_cycle_series_matches_brute_force() {
        for b in [2usize, 3] {
            let s = sym_cycle_series(|i| i % b == 0, 8);
            for n in 1..=8usize {
                let brute = brute_sym_div_proportion(n, b);
                assert_eq!(s.coeff(n), &brute, "n = {n}, b = {b}");
            }
        }
        // frozen spot value: n = 4, b = 2 gives 3/8 (9 of 24 permutations)
        assert_eq!(brute_sym_div_proportion(4, 2), rat(3, 8));
    }

    #[test]
    fn signed_cycle_series_matches_brute_force() {
        // Each single-sign-per-parity pattern collapses to (1-u)^(-1/2).
        let half_series = binomial_series(&rat(1, 2), 6);
        for (odd_neg, even_neg) in [(true, false), (false, true), (true, true), (false, false)] {
            let odd = if odd_neg { SignChoice::NEG } else { SignChoice::POS };
            let even = if even_neg { SignChoice::NEG } else { SignChoice::POS };
            let s = signed_cycle_series(odd, even, 6);
            assert!(s.agrees_with(&half_series));
            for n in 1..=6usize {
                let brute = brute_signed_pattern_proportion(n, odd_neg, even_neg);
                assert_eq!(s.coeff(n), &brute, "n = {n}, pattern {odd_neg}/{even_neg}");
            }
        }
        // frozen spot value: n = 4 gives 35/128
        assert_eq!(brute_signed_pattern_proportion(4, true, false), rat(35, 128));
        // all signs allowed: proportion 1 for every n
        let free = signed_cycle_series(SignChoice::BOTH, SignChoice::BOTH, 10);
        assert!(free.agrees_with(&binomial_series(&rint(1), 10)));
    }

    #[test]
    fn dominated_by_is_coefficientwise() {
        let small = binomial_series(&rat(1, 2), 10);
        let big = binomial_series(&rint(1), 10);
        assert!(small.dominated_by(&big));
        assert!(!big.dominated_by(&small));
    }

    #[test]
    fn bound_checks_hold_on_spot_values() {
        assert!(binomial_tail_bound_holds(&rat(1, 2), 4));
        assert!(cycles_div_b_bound_holds(4, 2));
        assert!(signed_pattern_bound_holds(8));
        // and the bound really is sharp-side: 35/128 vs 1/sqrt(4 pi) at n=4
        assert!(signed_pattern_bound_holds(4));
    }

    #[test]
    fn asymptotic_constant_for_even_cycles() {
        // coeff of u^500 in (1-u^2)^(-1/2), scaled by sqrt(500), is within 1%
        // of sqrt(2/pi); asserted conservatively through enclosures.
        let v = cycles_div_b_coeff(500, 2);
        let lhs = Interval::point(v).mul(&Interval::from_int(500).sqrt());
        let target = Interval::from_int(2).div(&pi()).sqrt();
        let diff = lhs.sub(&target);
        let abs_hi = diff.lo().abs().max(diff.hi().abs());
        let tol = target.scale(&rat(1, 100));
        assert!(&abs_hi <= tol.lo());
    }

    // ---- randomized property: mul(a, inverse(a)) == 1 ---------------------

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(50))]
        #[test]
        fn inverse_is_two_sided(nums in proptest::collection::vec(-20i64..20, 9), c0 in 1i64..30) {
            let mut coeffs = vec![rat(c0, 7)];
            for (i, n) in nums.iter().enumerate() {
                coeffs.push(rat(*n, 3 + i as i64));
            }
            let a = Series::from_coeffs(coeffs);
            let inv = a.inverse().unwrap();
            let n = a.order();
            proptest::prop_assert!(a.mul(&inv).agrees_with(&Series::one(n)));
            proptest::prop_assert!(inv.mul(&a).agrees_with(&Series::one(n)));
        }
    }
}
