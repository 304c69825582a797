//! Symbolic conjugacy-class data of GL(n,q).
//!
//! A conjugacy class of GL(n,q) is labeled by assigning to finitely many
//! monic irreducible polynomials (nonzero constant term) a nonempty
//! partition, with Σ deg(φ)·|λ_φ| = n.  The centralizer order factors over
//! the assignment as ∏_φ q^{deg φ · Σ_i (λ′_i)²}·∏_i (1/q^{deg φ})_{m_i},
//! which keeps every class size exact.  Proportions of classes restricted
//! by degree-wise conditions come from a cycle-index-style product over
//! degrees, grouped by the irreducible counts N(q;d) so that no polynomial
//! is ever materialized — that path stays feasible far beyond enumeration
//! range and has no field-table cap.

use crate::ffield::{
    euler_factor_series, irreducibles, nonzero_constant_irreducible_count, FieldSpec, Poly,
};
use crate::partitions::{
    enumerate_divisible_multiplicity_partitions, enumerate_partitions, partition_count, Partition,
};
use crate::qseries::{binomial_series, Series};
use crate::rational::Rational;
use crate::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// (1/q)_m = ∏_{j=0}^{m-1} (1 − q^{-1-j}), exactly.
pub fn q_pochhammer(q_eff: u64, m: u32) -> Rational {
    assert!(q_eff >= 2);
    let mut acc = Rational::one();
    let mut denom = BigInt::from(q_eff);
    for _ in 0..m {
        acc *= Rational::one() - Rational::new(BigInt::one(), denom.clone());
        denom *= q_eff;
    }
    acc
}

/// The centralizer-order contribution of one irreducible with partition λ
/// in GL over a field of order q_eff:
/// q_eff^{Σ_i (λ′_i)²} · ∏_i (1/q_eff)_{m_i(λ)}.  Always a positive integer
/// for nonempty λ; 1 for the empty partition.
pub fn centralizer_factor(q_eff: u64, lam: &Partition) -> Rational {
    if lam.is_empty() {
        return Rational::one();
    }
    let dual = lam.dual();
    let sum_sq: u64 = dual.parts().iter().map(|&c| c as u64 * c as u64).sum();
    let mut power = BigInt::one();
    let q_big = BigInt::from(q_eff);
    for _ in 0..sum_sq {
        power *= &q_big;
    }
    let mut acc = Rational::from_integer(power);
    for (_, mult) in lam.multiplicities() {
        acc *= q_pochhammer(q_eff, mult);
    }
    acc
}

/// |GL(n,q)| = ∏_{i=0}^{n-1} (q^n − q^i).
pub fn gl_order(n: u32, q: u64) -> BigInt {
    let q_big = BigInt::from(q);
    let qn = q_big.pow(n);
    let mut acc = BigInt::one();
    for i in 0..n {
        acc *= &qn - q_big.pow(i);
    }
    acc
}

/// A conjugacy class of GL(n,q): irreducible polynomials with nonzero
/// constant term, each carrying a nonempty partition, with
/// Σ deg(φ)·|λ_φ| = n.
#[derive(Clone, PartialEq, Eq)]
pub struct GLClassLabel {
    n: u32,
    q: u64,
    assignment: Vec<(Poly, Partition)>, // sorted by polynomial
}

impl std::fmt::Debug for GLClassLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GLClassLabel(n={}, q={}; ", self.n, self.q)?;
        for (i, (poly, lam)) in self.assignment.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{poly} -> {lam}")?;
        }
        write!(f, ")")
    }
}

impl PartialOrd for GLClassLabel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GLClassLabel {
    /// Canonical order: lexicographic over the sorted (polynomial,
    /// partition) pairs.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.assignment.cmp(&other.assignment)
    }
}

impl GLClassLabel {
    pub fn new(n: u32, q: u64, mut assignment: Vec<(Poly, Partition)>) -> Result<GLClassLabel> {
        assignment.sort_by(|a, b| a.0.cmp(&b.0));
        let mut total = 0u32;
        for (i, (poly, lam)) in assignment.iter().enumerate() {
            if poly.field().q() as u64 != q {
                return Err(Error::Construction(format!(
                    "polynomial over F_{} in a label for GL(n,{q})",
                    poly.field().q()
                )));
            }
            if !poly.is_monic() || poly.coeff(0) == 0 || !poly.is_irreducible() {
                return Err(Error::Construction(format!(
                    "label key {poly} must be monic irreducible with nonzero constant term"
                )));
            }
            if lam.is_empty() {
                return Err(Error::Construction(format!(
                    "label key {poly} carries an empty partition"
                )));
            }
            if i > 0 && assignment[i - 1].0 == *poly {
                return Err(Error::Construction(format!("duplicate label key {poly}")));
            }
            total += poly.degree() as u32 * lam.size();
        }
        if total != n {
            return Err(Error::Construction(format!(
                "label weight {total} does not match n = {n}"
            )));
        }
        Ok(GLClassLabel { n, q, assignment })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn assignment(&self) -> &[(Poly, Partition)] {
        &self.assignment
    }

    /// ∏_φ centralizer_factor(q^{deg φ}, λ_φ), an exact positive integer.
    pub fn centralizer_order(&self) -> BigInt {
        let mut acc = Rational::one();
        for (poly, lam) in &self.assignment {
            let q_eff = self
                .q
                .checked_pow(poly.degree() as u32)
                .expect("q^deg overflows u64");
            acc *= centralizer_factor(q_eff, lam);
        }
        assert!(acc.is_integer() && acc.is_positive(), "centralizer order must be a positive integer");
        acc.to_integer()
    }

    /// |GL(n,q)| / centralizer order (exact division).
    pub fn class_size(&self) -> BigInt {
        let order = gl_order(self.n, self.q);
        let cent = self.centralizer_order();
        let (quot, rem) = (order.clone() / &cent, order % &cent);
        assert!(rem.is_zero(), "centralizer order must divide the group order");
        quot
    }

    /// Regular semisimple: squarefree characteristic polynomial, i.e. every
    /// partition is exactly (1).
    pub fn is_rss(&self) -> bool {
        self.assignment.iter().all(|(_, lam)| lam.parts() == [1])
    }

    /// True iff every key polynomial has degree divisible by b, or carries a
    /// partition whose part multiplicities are all divisible by b — the
    /// class-data condition necessary for lying in a conjugate of the
    /// embedded GL(n/b, q^b).
    pub fn degree_or_multiplicity_div(&self, b: u32) -> bool {
        self.assignment.iter().all(|(poly, lam)| {
            poly.degree() as u32 % b == 0 || lam.multiplicities_divisible_by(b)
        })
    }
}

/// Cap on the number of labels produced by `enumerate_gl_classes`.
const LABEL_CAP: usize = 1_000_000;

/// Every conjugacy-class label of GL(n,q), canonically ordered.
pub fn enumerate_gl_classes(n: u32, q: u64) -> Result<Vec<GLClassLabel>> {
    assert!(n >= 1);
    let field = FieldSpec::from_order(q)?;
    let mut polys: Vec<Poly> = Vec::new();
    for d in 1..=n {
        polys.extend(irreducibles(&field, d)?);
    }
    let parts_by_size: Vec<Vec<Partition>> =
        (0..=n).map(|s| enumerate_partitions(s)).collect();

    fn rec(
        polys: &[Poly],
        parts_by_size: &[Vec<Partition>],
        idx: usize,
        remaining: u32,
        current: &mut Vec<(Poly, Partition)>,
        out: &mut Vec<GLClassLabel>,
        n: u32,
        q: u64,
    ) -> Result<()> {
        if remaining == 0 {
            if out.len() >= LABEL_CAP {
                return Err(Error::Resource {
                    what: format!("GL({n},{q}) class enumeration"),
                    needed: out.len() as u128 + 1,
                    cap: LABEL_CAP as u128,
                });
            }
            out.push(GLClassLabel {
                n,
                q,
                assignment: current.clone(),
            });
            return Ok(());
        }
        if idx == polys.len() {
            return Ok(());
        }
        let deg = polys[idx].degree() as u32;
        if deg > remaining {
            // polynomials are sorted by degree; nothing later fits either
            return Ok(());
        }
        // skip this polynomial entirely
        rec(polys, parts_by_size, idx + 1, remaining, current, out, n, q)?;
        // or assign it a nonempty partition of any feasible size
        for size in 1..=remaining / deg {
            for lam in &parts_by_size[size as usize] {
                current.push((polys[idx].clone(), lam.clone()));
                rec(
                    polys,
                    parts_by_size,
                    idx + 1,
                    remaining - size * deg,
                    current,
                    out,
                    n,
                    q,
                )?;
                current.pop();
            }
        }
        Ok(())
    }

    let mut out = Vec::new();
    let mut current = Vec::new();
    rec(&polys, &parts_by_size, 0, n, &mut current, &mut out, n, q)?;
    out.sort();
    Ok(out)
}

/// k(GL(n,q)) by generating function: coefficient of u^n in
/// ∏_d (Σ_s p(s)·u^{ds})^{N(q;d)}.  No enumeration, no field-table cap.
pub fn class_count(n: u32, q: u64) -> BigInt {
    let order = n as usize;
    let mut prod = Series::one(order);
    for d in 1..=n as usize {
        let mut coeffs = vec![Rational::zero(); order + 1];
        let mut s = 0usize;
        while d * s <= order {
            coeffs[d * s] = Rational::from_integer(partition_count(s as u32));
            s += 1;
        }
        let factor = Series::from_coeffs(coeffs);
        let exp = nonzero_constant_irreducible_count(q, d as u32)
            .to_biguint()
            .expect("irreducible counts are nonnegative");
        if !exp.is_zero() {
            prod = prod.mul(&factor.pow_big(&exp));
        }
    }
    let c = prod.coeff(order);
    assert!(c.is_integer());
    c.to_integer()
}

/// Exact proportion of elements of GL(n,q) whose class satisfies the
/// predicate: Σ class sizes / |GL(n,q)|.
pub fn proportion_satisfying(
    n: u32,
    q: u64,
    pred: impl Fn(&GLClassLabel) -> bool,
) -> Result<Rational> {
    let labels = enumerate_gl_classes(n, q)?;
    let mut total = BigInt::zero();
    for label in &labels {
        if pred(label) {
            total += label.class_size();
        }
    }
    Ok(Rational::new(total, gl_order(n, q)))
}

/// Coefficient of u^n in ∏_d [1 + Σ_{λ allowed at degree d} u^{d|λ|} /
/// c(q^d,λ)]^{N(q;d)} — the exact proportion of elements of GL(n,q) whose
/// class assigns every polynomial of degree d either nothing or an allowed
/// partition.  Polynomials are never materialized, so this scales in n and q
/// far beyond enumeration.
pub fn restricted_cycle_index_coeff(
    n: u32,
    q: u64,
    allowed: impl Fn(u32, &Partition) -> bool,
) -> Rational {
    let order = n as usize;
    let mut prod = Series::one(order);
    for d in 1..=n {
        let q_eff = q.checked_pow(d).expect("q^d overflows u64");
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = Rational::one();
        for size in 1..=n / d {
            for lam in enumerate_partitions(size) {
                if allowed(d, &lam) {
                    let c = centralizer_factor(q_eff, &lam);
                    coeffs[(d * size) as usize] += c.recip();
                }
            }
        }
        let factor = Series::from_coeffs(coeffs);
        let exp = nonzero_constant_irreducible_count(q, d)
            .to_biguint()
            .expect("irreducible counts are nonnegative");
        if !exp.is_zero() {
            prod = prod.mul(&factor.pow_big(&exp));
        }
    }
    prod.coeff(order).clone()
}

/// Exact proportion of GL(n,q) elements that are regular semisimple with
/// every irreducible factor of degree divisible by b (zero whenever b ∤ n).
pub fn rss_div_b_proportion(n: u32, q: u64, b: u32) -> Rational {
    restricted_cycle_index_coeff(n, q, |d, lam| d % b == 0 && lam.parts() == [1])
}

/// ∏_{d≥1} ∏_{i≥1} (1 − u^d/q^{idb})^{−N(q;db)}, truncated at the given
/// order: the factor of the embedding bound that collects class data on
/// polynomial degrees NOT divisible by b.
pub fn embedding_bound_first_product(q: u64, b: u32, order: usize) -> Series {
    let mut prod = Series::one(order);
    for d in 1..=order {
        let c = Rational::new(
            BigInt::one(),
            BigInt::from(q).pow(d as u32 * b),
        );
        let inner_order = order / d + 1;
        let exp = nonzero_constant_irreducible_count(q, d as u32 * b)
            .to_biguint()
            .expect("irreducible counts are nonnegative");
        if exp.is_zero() {
            continue;
        }
        let factor = euler_factor_series(&c, inner_order)
            .subst_power(d)
            .truncate(order)
            .pow_big(&exp);
        prod = prod.mul(&factor);
    }
    prod
}

/// The first product of the embedding bound is dominated coefficientwise by
/// (1−u)^{−1/b} up to the given order.
pub fn first_product_dominated_by_binomial(q: u64, b: u32, order: usize) -> bool {
    let product = embedding_bound_first_product(q, b, order);
    let bound = binomial_series(&Rational::new(BigInt::one(), BigInt::from(b)), order);
    product.dominated_by(&bound)
}

/// Coefficient of u^{n/b} in the embedding-bound generating function
/// ∏_{d,i}(1−u^d/q^{idb})^{−N(q;db)} · ∏_d [Σ_{λ: multiplicities divisible
/// by b} u^{|λ|d/b}/c(q^d,λ)]^{N(q;d)} — an upper bound for the proportion
/// of elements of GL(n,q) conjugate into the embedded GL(n/b, q^b).
pub fn embedding_bound_coeff(n: u32, q: u64, b: u32) -> Result<Rational> {
    if b < 2 || n % b != 0 {
        return Err(Error::Domain(format!(
            "the embedding bound needs b ≥ 2 dividing n (got n = {n}, b = {b})"
        )));
    }
    let m = (n / b) as usize;
    let mut prod = embedding_bound_first_product(q, b, m);
    for d in 1..=m {
        let q_eff = q.checked_pow(d as u32).expect("q^d overflows u64");
        let mut coeffs = vec![Rational::zero(); m + 1];
        coeffs[0] = Rational::one();
        for j in 1..=m / d {
            // partitions of j·b with all multiplicities divisible by b
            for lam in enumerate_divisible_multiplicity_partitions(j as u32, b) {
                let c = centralizer_factor(q_eff, &lam);
                coeffs[j * d] += c.recip();
            }
        }
        let factor = Series::from_coeffs(coeffs);
        let exp = nonzero_constant_irreducible_count(q, d as u32)
            .to_biguint()
            .expect("irreducible counts are nonnegative");
        if !exp.is_zero() {
            prod = prod.mul(&factor.pow_big(&exp));
        }
    }
    Ok(prod.coeff(m).clone())
}
