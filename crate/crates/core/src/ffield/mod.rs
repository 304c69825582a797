//! Small finite fields with full arithmetic tables, plus polynomials,
//! matrices, and irreducible-polynomial counting over them.
//!
//! Elements of F_{p^e} are indices 0..q encoding polynomials in the
//! generator: index a with base-p digits c_0, c_1, ... stands for
//! c_0 + c_1·alpha + c_2·alpha² + ..., where alpha is the class of x modulo
//! the canonical modulus.  The canonical modulus is the lexicographically
//! least monic irreducible of degree e over F_p, comparing coefficient
//! tuples constant term first.  Index 0 and 1 are the field's zero and one;
//! for e > 1 the index p is the generator alpha itself.
//!
//! Full q-by-q tables keep element operations O(1); construction is capped
//! at q <= 512, which covers every field instantiated by the enumeration
//! and sampling paths.  Counting functions (`moebius`, the irreducible
//! counts, the series identities) take q as a plain integer and are uncapped.

mod counts;
mod matrix;
mod poly;

pub use counts::{
    euler_factor_series, gauss_count_identity_holds, irreducible_count_total, moebius,
    necklace_double_product_holds, necklace_identity_holds, nonzero_constant_irreducible_count,
    subfield_count_check, verify_necklace_identity,
};
pub use matrix::{eval_poly_at_matrix, jordan_partition, Matrix};
pub use poly::{factor_by_trial_division, factor_degree_profile, irreducibles, Poly};

use crate::{Error, Result};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Hard cap on table-backed field order.
pub const TABLE_CAP: u64 = 512;

pub struct FieldSpec {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>, // constant-first coefficients over F_p, length e+1, monic
    add: Vec<u32>,     // q*q tables
    mul: Vec<u32>,
    inv: Vec<u32>,
    neg: Vec<u32>,
    frob: Vec<u32>, // a -> a^p
}

impl std::fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FieldSpec(q = {}^{})", self.p, self.e)
    }
}

// ---- arithmetic on F_p coefficient vectors (construction-time only) ----

fn fp_poly_trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// a mod m, with m monic.
fn fp_poly_rem(mut a: Vec<u32>, m: &[u32], p: u32) -> Vec<u32> {
    let dm = m.len() - 1;
    fp_poly_trim(&mut a);
    while a.len() > dm {
        let lead = *a.last().unwrap();
        let shift = a.len() - 1 - dm;
        for i in 0..=dm {
            a[shift + i] = (a[shift + i] + p - lead * m[i] % p) % p;
        }
        fp_poly_trim(&mut a);
    }
    a
}

fn fp_poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    fp_poly_trim(&mut out);
    out
}

fn fp_poly_sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0u32; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + p - y) % p;
    }
    fp_poly_trim(&mut out);
    out
}

fn fp_poly_gcd(mut a: Vec<u32>, mut b: Vec<u32>, p: u32) -> Vec<u32> {
    fp_poly_trim(&mut a);
    fp_poly_trim(&mut b);
    while !b.is_empty() {
        let lead_inv = fp_inv(*b.last().unwrap(), p);
        let monic: Vec<u32> = b.iter().map(|&c| c * lead_inv % p).collect();
        let r = fp_poly_rem(a, &monic, p);
        a = b;
        b = r;
    }
    a
}

fn fp_inv(a: u32, p: u32) -> u32 {
    assert!(a % p != 0);
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut exp = p as u64 - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    result as u32
}

/// t(x) -> t(x)^p mod m.  Coefficients lie in F_p and are fixed by
/// Frobenius, so raising to the p-th power just spreads exponents by p.
fn fp_frobenius_step(t: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if t.is_empty() {
        return Vec::new();
    }
    let mut spread = vec![0u32; (t.len() - 1) * p as usize + 1];
    for (j, &c) in t.iter().enumerate() {
        spread[j * p as usize] = c;
    }
    fp_poly_trim(&mut spread);
    fp_poly_rem(spread, m, p)
}

/// Irreducibility over F_p for monic f of degree d >= 1: gcd(x^(p^i) - x, f)
/// collects the irreducible factors of f of degree dividing i, so if no
/// factor of degree <= d/2 exists, any two remaining factors would overshoot
/// degree d and f is irreducible.  A final x^(p^d) = x check guards the
/// implementation.
fn fp_is_irreducible(f: &[u32], p: u32) -> bool {
    let d = f.len() - 1;
    if d == 1 {
        return true;
    }
    let x = fp_poly_rem(vec![0, 1], f, p);
    let mut t = x.clone();
    for _ in 1..=d / 2 {
        t = fp_frobenius_step(&t, f, p);
        let g = fp_poly_gcd(f.to_vec(), fp_poly_sub(&t, &x, p), p);
        if g.len() > 1 {
            return false;
        }
    }
    for _ in d / 2..d {
        t = fp_frobenius_step(&t, f, p);
    }
    fp_poly_sub(&t, &x, p).is_empty()
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl FieldSpec {
    /// The field F_{p^e}, from a process-wide cache.
    pub fn get(p: u32, e: u32) -> Result<Arc<FieldSpec>> {
        static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Arc<FieldSpec>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().unwrap();
        if let Some(f) = guard.get(&(p, e)) {
            return Ok(f.clone());
        }
        let f = Arc::new(FieldSpec::build(p, e)?);
        guard.insert((p, e), f.clone());
        Ok(f)
    }

    /// The field of order q (q a prime power).
    pub fn from_order(q: u64) -> Result<Arc<FieldSpec>> {
        if q < 2 {
            return Err(Error::Domain(format!("{q} is not a prime power")));
        }
        let mut p = 2u64;
        while p * p <= q {
            if q % p == 0 {
                let mut e = 0u32;
                let mut m = q;
                while m % p == 0 {
                    m /= p;
                    e += 1;
                }
                if m != 1 {
                    return Err(Error::Domain(format!("{q} is not a prime power")));
                }
                return FieldSpec::get(p as u32, e);
            }
            p += 1;
        }
        FieldSpec::get(q as u32, 1)
    }

    fn build(p: u32, e: u32) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        if e == 0 {
            return Err(Error::Domain("the extension degree must be positive".into()));
        }
        let q_big = (p as u64).checked_pow(e).unwrap_or(u64::MAX);
        if q_big > TABLE_CAP {
            return Err(Error::Resource {
                what: format!("field tables for q = {p}^{e}"),
                needed: q_big as u128,
                cap: TABLE_CAP as u128,
            });
        }
        let q = q_big as u32;

        // Canonical modulus: scan lower-coefficient tuples (c_0, .., c_{e-1})
        // in lexicographic order with the CONSTANT term most significant, so
        // the first irreducible found is the constant-first lexicographic
        // least.
        let mut modulus = None;
        for code in 0..q {
            let mut f = vec![0u32; e as usize + 1];
            f[e as usize] = 1;
            let mut c = code;
            for i in 0..e as usize {
                f[i] = c / p.pow(e - 1 - i as u32);
                c %= p.pow(e - 1 - i as u32);
            }
            if fp_is_irreducible(&f, p) {
                modulus = Some(f);
                break;
            }
        }
        let modulus = modulus.expect("an irreducible of every degree exists");

        // index <-> F_p coefficient vector (element indices use c_0 as the
        // LEAST significant digit, independent of the search order above)
        let decode = |a: u32| -> Vec<u32> {
            let mut v = Vec::with_capacity(e as usize);
            let mut a = a;
            for _ in 0..e {
                v.push(a % p);
                a /= p;
            }
            fp_poly_trim(&mut v);
            v
        };
        let encode = |v: &[u32]| -> u32 {
            v.iter()
                .enumerate()
                .map(|(i, &c)| c * p.pow(i as u32))
                .sum()
        };

        let qs = q as usize;
        let mut add = vec![0u32; qs * qs];
        let mut mul = vec![0u32; qs * qs];
        let mut neg = vec![0u32; qs];
        let mut inv = vec![0u32; qs];
        let mut frob = vec![0u32; qs];
        for a in 0..q {
            let va = decode(a);
            neg[a as usize] = encode(&fp_poly_sub(&[], &va, p));
            for b in a..q {
                let vb = decode(b);
                let mut s = vec![0u32; va.len().max(vb.len())];
                for (i, o) in s.iter_mut().enumerate() {
                    *o = (va.get(i).copied().unwrap_or(0) + vb.get(i).copied().unwrap_or(0)) % p;
                }
                fp_poly_trim(&mut s);
                let sv = encode(&s);
                add[a as usize * qs + b as usize] = sv;
                add[b as usize * qs + a as usize] = sv;
                let m = fp_poly_rem(fp_poly_mul(&va, &vb, p), &modulus, p);
                let mv = encode(&m);
                mul[a as usize * qs + b as usize] = mv;
                mul[b as usize * qs + a as usize] = mv;
            }
        }
        for a in 1..q {
            // inverse by scanning the multiplication row (q is tiny)
            let row = &mul[a as usize * qs..(a as usize + 1) * qs];
            inv[a as usize] = row.iter().position(|&x| x == 1).expect("unit in a field") as u32;
        }
        for a in 0..q {
            let mut x = a;
            for _ in 1..p {
                x = mul[a as usize * qs + x as usize];
            }
            frob[a as usize] = x;
        }
        Ok(FieldSpec {
            p,
            e,
            q,
            modulus,
            add,
            mul,
            inv,
            neg,
            frob,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Canonical modulus coefficients, constant first (length e+1, monic).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    /// Multiplicative inverse; panics at zero.
    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero");
        self.inv[a as usize]
    }

    #[inline]
    pub fn div(&self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b))
    }

    /// Frobenius a -> a^p.
    #[inline]
    pub fn frob(&self, a: u32) -> u32 {
        self.frob[a as usize]
    }

    pub fn pow(&self, mut a: u32, mut k: u64) -> u32 {
        let mut acc = 1u32;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            k >>= 1;
        }
        acc
    }

    /// The conjugation a -> a^(p^(e/2)) of a quadratic extension (needs e
    /// even); an involution fixing exactly the index-2 subfield.
    pub fn conj(&self, a: u32) -> u32 {
        assert!(self.e % 2 == 0, "conjugation needs a quadratic extension");
        let mut x = a;
        for _ in 0..self.e / 2 {
            x = self.frob(x);
        }
        x
    }

    /// A fixed multiplicative generator (the least index of full order).
    pub fn generator(&self) -> u32 {
        'cand: for g in 2..self.q {
            let mut x = g;
            for _ in 1..self.q - 1 {
                if x == 1 {
                    continue 'cand;
                }
                x = self.mul(x, g);
            }
            if x == 1 {
                return g;
            }
        }
        assert!(self.q == 2);
        1
    }
}
