//! Polynomials over a table-backed finite field: exact division, gcd,
//! irreducibility testing and canonical enumeration, squarefree
//! decomposition in characteristic p, and distinct-degree splitting.
//!
//! Coefficients are stored constant term first with no trailing zeros, so
//! the zero polynomial is the empty vector.  Factor-degree statistics never
//! materialize irreducible factors: `factor_degree_profile` returns only
//! (degree, multiplicity) pairs, which is all the downstream consumers need.
//! Full factorization (`factor_by_trial_division`) exists as an oracle for
//! small degrees.

use super::FieldSpec;
use crate::{Error, Result};
use std::sync::Arc;

#[derive(Clone)]
pub struct Poly {
    field: Arc<FieldSpec>,
    c: Vec<u32>, // constant first, no trailing zeros
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.field.q() == other.field.q() && self.c == other.c
    }
}

impl Eq for Poly {}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Poly {
    /// Canonical order: by degree, then lexicographic constant-term-first.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.c
            .len()
            .cmp(&other.c.len())
            .then_with(|| self.c.cmp(&other.c))
    }
}

impl std::hash::Hash for Poly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.q().hash(state);
        self.c.hash(state);
    }
}

impl std::fmt::Debug for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poly[q={}]{:?}", self.field.q(), self.c)
    }
}

impl std::fmt::Display for Poly {
    /// Renders with coefficients shown as element indices, e.g. `x^3 + 2x + 1`
    /// (for extension fields an index k stands for the element with base-p
    /// digits of k in the generator).
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &a) in self.c.iter().enumerate().rev() {
            if a == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{a}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{a}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Poly {
    pub fn zero(field: Arc<FieldSpec>) -> Poly {
        Poly { field, c: Vec::new() }
    }

    pub fn one(field: Arc<FieldSpec>) -> Poly {
        Poly::constant(field, 1)
    }

    pub fn constant(field: Arc<FieldSpec>, a: u32) -> Poly {
        let c = if a == 0 { Vec::new() } else { vec![a] };
        Poly { field, c }
    }

    pub fn x(field: Arc<FieldSpec>) -> Poly {
        Poly { field, c: vec![0, 1] }
    }

    /// From constant-first coefficients (trailing zeros trimmed).
    pub fn from_coeffs(field: Arc<FieldSpec>, mut c: Vec<u32>) -> Poly {
        assert!(c.iter().all(|&a| a < field.q()), "coefficient out of range");
        while c.last() == Some(&0) {
            c.pop();
        }
        Poly { field, c }
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, with deg 0 for nonzero constants; None for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    /// Degree of a polynomial known to be nonzero.
    pub fn degree(&self) -> usize {
        self.deg().expect("degree of the zero polynomial")
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.c.get(i).copied().unwrap_or(0)
    }

    /// Constant-first coefficients, without trailing zeros.
    pub fn coeffs(&self) -> &[u32] {
        &self.c
    }

    pub fn leading(&self) -> u32 {
        self.c.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn eval(&self, a: u32) -> u32 {
        let f = &self.field;
        let mut acc = 0u32;
        for &ci in self.c.iter().rev() {
            acc = f.add(f.mul(acc, a), ci);
        }
        acc
    }

    fn trim(mut c: Vec<u32>, field: &Arc<FieldSpec>) -> Poly {
        while c.last() == Some(&0) {
            c.pop();
        }
        Poly { field: field.clone(), c }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.field.q(), other.field.q());
        let f = &self.field;
        let mut out = vec![0u32; self.c.len().max(other.c.len())];
        for (i, o) in out.iter_mut().enumerate() {
            *o = f.add(self.coeff(i), other.coeff(i));
        }
        Poly::trim(out, f)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        assert_eq!(self.field.q(), other.field.q());
        let f = &self.field;
        let mut out = vec![0u32; self.c.len().max(other.c.len())];
        for (i, o) in out.iter_mut().enumerate() {
            *o = f.sub(self.coeff(i), other.coeff(i));
        }
        Poly::trim(out, f)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.field.q(), other.field.q());
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field.clone());
        }
        let f = &self.field;
        let mut out = vec![0u32; self.c.len() + other.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.c.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::trim(out, f)
    }

    pub fn mul_scalar(&self, a: u32) -> Poly {
        let f = &self.field;
        Poly::trim(self.c.iter().map(|&ci| f.mul(ci, a)).collect(), f)
    }

    /// Multiplication by x^k.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![0u32; k];
        c.extend_from_slice(&self.c);
        Poly { field: self.field.clone(), c }
    }

    pub fn make_monic(&self) -> Poly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.mul_scalar(self.field.inv(self.leading()))
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        assert_eq!(self.field.q(), d.field.q());
        let f = &self.field;
        let dd = d.degree();
        if self.c.len() < d.c.len() {
            return (Poly::zero(f.clone()), self.clone());
        }
        let lead_inv = f.inv(d.leading());
        let mut rem = self.c.clone();
        let mut quo = vec![0u32; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let coef = f.mul(rem[k], lead_inv);
            if coef != 0 {
                quo[k - dd] = coef;
                for (i, &di) in d.c.iter().enumerate() {
                    rem[k - dd + i] = f.sub(rem[k - dd + i], f.mul(coef, di));
                }
            }
        }
        rem.truncate(dd);
        (Poly::trim(quo, f), Poly::trim(rem, f))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn div_exact(&self, d: &Poly) -> Poly {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        if self.c.len() <= 1 {
            return Poly::zero(f.clone());
        }
        let p = f.p();
        let mut out = vec![0u32; self.c.len() - 1];
        for (i, o) in out.iter_mut().enumerate() {
            // (i+1)·c_{i+1}, with the integer i+1 reduced into the prime field
            let k = ((i as u32 + 1) % p) % p;
            let mut acc = 0u32;
            for _ in 0..k {
                acc = f.add(acc, self.c[i + 1]);
            }
            *o = acc;
        }
        Poly::trim(out, f)
    }

    /// self^q mod m, where q is the field order.  Since every coefficient
    /// satisfies a^q = a, raising to the q-th power spreads exponents by q.
    pub fn pow_q_mod(&self, m: &Poly) -> Poly {
        assert!(!m.is_zero());
        let f = &self.field;
        if self.is_zero() {
            return self.clone();
        }
        let q = f.q() as usize;
        let mut spread = vec![0u32; (self.c.len() - 1) * q + 1];
        for (j, &cj) in self.c.iter().enumerate() {
            spread[j * q] = cj;
        }
        Poly::trim(spread, f).rem(m)
    }

    /// self^k mod m by binary exponentiation (test oracle for `pow_q_mod`,
    /// and general modular powers).
    pub fn pow_mod(&self, mut k: u64, m: &Poly) -> Poly {
        assert!(!m.is_zero());
        let mut base = self.rem(m);
        let mut acc = Poly::one(self.field.clone()).rem(m);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            k >>= 1;
        }
        acc
    }

    /// Rabin-style irreducibility for monic nonconstant polynomials:
    /// gcd(x^(q^i) − x, f) collects the factors of degree dividing i, so a
    /// polynomial with no factor of degree ≤ deg/2 is irreducible; the final
    /// x^(q^deg) = x identity re-checks the whole computation.
    pub fn is_irreducible(&self) -> bool {
        let d = match self.deg() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(d) => d,
        };
        let x = Poly::x(self.field.clone());
        let me = self.make_monic();
        let mut t = x.clone();
        for _ in 1..=d / 2 {
            t = t.pow_q_mod(&me);
            let g = me.gcd(&t.sub(&x));
            if g.degree() > 0 {
                return false;
            }
        }
        for _ in d / 2..d {
            t = t.pow_q_mod(&me);
        }
        t.sub(&x).is_zero()
    }

    /// True when no irreducible factor repeats.  Nonzero constants count as
    /// squarefree; a nonconstant polynomial with zero derivative is a p-th
    /// power, hence never squarefree.
    pub fn is_squarefree(&self) -> bool {
        assert!(!self.is_zero());
        if self.degree() == 0 {
            return true;
        }
        let d = self.derivative();
        if d.is_zero() {
            return false;
        }
        self.gcd(&d).degree() == 0
    }

    /// The p-th root of a polynomial whose only nonzero terms sit at
    /// exponents divisible by p (coefficients get the inverse Frobenius).
    fn pth_root(&self) -> Poly {
        let f = &self.field;
        let p = f.p() as usize;
        let mut out = vec![0u32; (self.c.len() + p - 1) / p];
        for (i, &ci) in self.c.iter().enumerate() {
            if ci == 0 {
                continue;
            }
            assert!(i % p == 0, "not a p-th power");
            let mut a = ci;
            for _ in 1..f.e() {
                a = f.frob(a);
            }
            out[i / p] = a;
        }
        Poly::trim(out, f)
    }

    /// Squarefree decomposition of a monic nonconstant polynomial in
    /// characteristic p: pairs (exponent, monic squarefree part) with
    /// distinct exponents in increasing order and
    /// ∏ part^exponent = self.  The classical derivative/gcd loop extracts
    /// the factors of exponent not divisible by p; what remains is a perfect
    /// p-th power handled by recursion (its exponents, all multiples of p,
    /// cannot collide with the loop's).
    pub fn squarefree_decomposition(&self) -> Vec<(u32, Poly)> {
        assert!(self.is_monic() && self.degree() >= 1);
        let one = Poly::one(self.field.clone());
        let deriv = self.derivative();
        let mut out: Vec<(u32, Poly)> = Vec::new();
        if deriv.is_zero() {
            for (e, part) in self.pth_root().squarefree_decomposition() {
                out.push((e * self.field.p(), part));
            }
            return out;
        }
        let mut c = self.gcd(&deriv);
        let mut w = self.div_exact(&c);
        let mut i = 1u32;
        while w != one {
            let y = w.gcd(&c);
            let z = w.div_exact(&y);
            if z.degree() > 0 {
                out.push((i, z));
            }
            c = c.div_exact(&y);
            w = y;
            i += 1;
        }
        if c.degree() > 0 {
            let p = self.field.p();
            for (e, part) in c.pth_root().squarefree_decomposition() {
                out.push((e * p, part));
            }
        }
        out.sort_by_key(|&(e, _)| e);
        out
    }

    /// Distinct-degree splitting of a monic squarefree polynomial: pairs
    /// (d, product of the irreducible factors of degree d), increasing in d.
    /// Once 2d exceeds the degree of what remains, the remainder is itself
    /// irreducible and the loop exits early.
    pub fn distinct_degree_split(&self) -> Vec<(u32, Poly)> {
        assert!(self.is_monic());
        debug_assert!(self.is_squarefree());
        let x = Poly::x(self.field.clone());
        let mut rem = self.clone();
        let mut out = Vec::new();
        if rem.degree() == 0 {
            return out;
        }
        let mut h = x.rem(&rem);
        let mut d = 0u32;
        while rem.degree() > 0 {
            d += 1;
            if 2 * d as usize > rem.degree() {
                out.push((rem.degree() as u32, rem));
                break;
            }
            h = h.pow_q_mod(&rem);
            let g = rem.gcd(&h.sub(&x));
            if g.degree() > 0 {
                rem = rem.div_exact(&g);
                out.push((d, g));
                if rem.degree() == 0 {
                    break;
                }
                h = h.rem(&rem);
            }
        }
        out
    }
}

/// The degrees and multiplicities of the irreducible factors of f (monic,
/// nonconstant): one (degree, multiplicity) pair per irreducible factor,
/// sorted, without materializing the factors themselves.
pub fn factor_degree_profile(f: &Poly) -> Vec<(u32, u32)> {
    let f = f.make_monic();
    assert!(f.degree() >= 1);
    let mut out = Vec::new();
    for (e, part) in f.squarefree_decomposition() {
        for (d, g) in part.distinct_degree_split() {
            let count = g.degree() as u32 / d;
            for _ in 0..count {
                out.push((d, e));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Cap on the number of candidate polynomials scanned by `irreducibles`.
const ENUMERATION_CAP: u64 = 1 << 20;

/// All monic irreducibles of degree d over the field, with nonzero constant
/// term, in constant-first lexicographic order.
pub fn irreducibles(field: &Arc<FieldSpec>, d: u32) -> Result<Vec<Poly>> {
    assert!(d >= 1);
    let q = field.q() as u64;
    let candidates = (q - 1) * q.pow(d - 1);
    if candidates > ENUMERATION_CAP {
        return Err(Error::Resource {
            what: format!("irreducible enumeration over F_{} at degree {}", q, d),
            needed: candidates as u128,
            cap: ENUMERATION_CAP as u128,
        });
    }
    let mut out = Vec::new();
    // digits (c_0, .., c_{d-1}) in constant-first lexicographic order:
    // c_{d-1} advances fastest, c_0 is most significant and stays nonzero
    let mut digits = vec![0u32; d as usize];
    digits[0] = 1;
    loop {
        let mut c = digits.clone();
        c.push(1);
        let f = Poly::from_coeffs(field.clone(), c);
        if f.is_irreducible() {
            out.push(f);
        }
        let mut i = d as usize - 1;
        loop {
            digits[i] += 1;
            if digits[i] < field.q() {
                break;
            }
            if i == 0 {
                return Ok(out);
            }
            digits[i] = 0;
            i -= 1;
        }
    }
}

/// Full factorization by trial division against enumerated irreducibles —
/// an oracle for small degrees.  Returns (irreducible, multiplicity) pairs,
/// x first if present, then ascending (degree, constant-first) order.
pub fn factor_by_trial_division(f: &Poly) -> Result<Vec<(Poly, u32)>> {
    let mut rem = f.make_monic();
    assert!(rem.degree() >= 1);
    let field = rem.field().clone();
    let mut out = Vec::new();
    // powers of x
    let mut k = 0u32;
    while rem.coeff(0) == 0 {
        rem = rem.div_exact(&Poly::x(field.clone()));
        k += 1;
    }
    if k > 0 {
        out.push((Poly::x(field.clone()), k));
    }
    let mut d = 1u32;
    while rem.degree() >= 1 {
        if (d as usize) > rem.degree() {
            unreachable!("a nonconstant remainder must have a factor");
        }
        if 2 * d as usize > rem.degree() {
            // what remains is irreducible
            out.push((rem.clone(), 1));
            break;
        }
        for g in irreducibles(&field, d)? {
            let mut mult = 0u32;
            loop {
                let (quo, r) = rem.div_rem(&g);
                if !r.is_zero() {
                    break;
                }
                rem = quo;
                mult += 1;
            }
            if mult > 0 {
                out.push((g, mult));
            }
            if rem.degree() == 0 {
                break;
            }
        }
        d += 1;
        if rem.degree() == 0 {
            break;
        }
    }
    Ok(out)
}
