//! Integer partitions: canonical enumeration, counting, duality, and the
//! multiplicity-divisibility condition used by class parametrizations.
//!
//! A `Partition` is a nonincreasing list of positive parts.  Enumeration
//! yields lexicographically descending order: (4), (3,1), (2,2), (2,1,1),
//! (1,1,1,1).  Counting goes through the pentagonal-number recurrence with a
//! process-wide memo table; enumeration doubles as an independent oracle for
//! it in tests.

use crate::rational::{from_biguint, Rational};
use crate::realbound::{definitely_le, pi, Interval};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>, // nonincreasing, all positive
}

impl Partition {
    /// Build from a nonincreasing list of positive parts.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be nonincreasing"
        );
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Build from any list of positive parts, sorting as needed.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Multiplicity m_i of each part size i that occurs.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Conjugate partition: dual_i = #{ j : part_j >= i }.
    pub fn dual(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let max = self.parts[0];
        let mut dual = Vec::with_capacity(max as usize);
        for i in 1..=max {
            dual.push(self.parts.iter().filter(|&&p| p >= i).count() as u32);
        }
        Partition { parts: dual }
    }

    /// Whether every part multiplicity is divisible by b.
    pub fn multiplicities_divisible_by(&self, b: u32) -> bool {
        assert!(b >= 1);
        self.multiplicities().values().all(|&m| m % b == 0)
    }

    /// Multiply every multiplicity by b (each part repeated b times as
    /// often); the result always satisfies `multiplicities_divisible_by(b)`.
    pub fn inflate_multiplicities(&self, b: u32) -> Partition {
        let mut parts = Vec::with_capacity(self.parts.len() * b as usize);
        for &p in &self.parts {
            for _ in 0..b {
                parts.push(p);
            }
        }
        Partition::new(parts)
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of n, lexicographically descending.  n = 0 yields the
/// empty partition.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(rem: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let mut k = rem.min(max);
        while k >= 1 {
            current.push(k);
            rec(rem - k, k, current, out);
            current.pop();
            k -= 1;
        }
    }
    rec(n, n.max(1), &mut current, &mut out);
    out
}

/// Partitions of `w * b` all of whose multiplicities are divisible by b:
/// exactly the b-fold inflations of partitions of w.
pub fn enumerate_divisible_multiplicity_partitions(w: u32, b: u32) -> Vec<Partition> {
    enumerate_partitions(w)
        .into_iter()
        .map(|p| p.inflate_multiplicities(b))
        .collect()
}

/// p(n) by the pentagonal-number recurrence, memoized process-wide.
pub fn partition_count(n: u32) -> BigUint {
    static MEMO: OnceLock<Mutex<Vec<BigInt>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(vec![BigInt::one()]));
    let mut table = memo.lock().unwrap();
    while table.len() <= n as usize {
        let m = table.len() as i64;
        let mut acc = BigInt::zero();
        let mut k = 1i64;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            let g2 = k * (3 * k + 1) / 2;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * &table[(m - g1) as usize];
            if g2 <= m {
                acc += sign * &table[(m - g2) as usize];
            }
            k += 1;
        }
        table.push(acc);
    }
    table[n as usize]
        .to_biguint()
        .expect("partition counts are nonnegative")
}

/// Number of conjugacy classes of the signed permutation group on n symbols:
/// sum over a of p(a) p(n-a).
pub fn hyperoctahedral_class_count(n: u32) -> BigUint {
    (0..=n)
        .map(|a| partition_count(a) * partition_count(n - a))
        .sum()
}

/// Enclosure of pi / sqrt(6(n-1)) * e^(pi sqrt(2n/3)), the closed-form
/// partition growth bound; needs n >= 2.
pub fn partition_growth_bound(n: u32) -> Interval {
    assert!(n >= 2);
    let exponent = pi()
        .mul(&Interval::point(Rational::new((2 * n as i64).into(), 3.into())).sqrt());
    pi()
        .mul(&Interval::from_int(6 * (n as i64 - 1)).sqrt().recip())
        .mul(&exponent.exp())
}

/// Check p(n) <= pi / sqrt(6(n-1)) * e^(pi sqrt(2n/3)), bound rounded down.
pub fn wall_bound_holds(n: u32) -> bool {
    let p = from_biguint(&partition_count(n));
    definitely_le(&p, &partition_growth_bound(n))
}

/// Enclosure of (n+1) pi^2 / (6(n-1)) * e^(2 pi sqrt(2n/3)), the closed-form
/// bound for the signed-permutation class count; needs n >= 2.
pub fn hyperoctahedral_growth_bound(n: u32) -> Interval {
    assert!(n >= 2);
    let exponent = pi()
        .scale(&Rational::from_integer(2.into()))
        .mul(&Interval::point(Rational::new((2 * n as i64).into(), 3.into())).sqrt());
    pi()
        .pow_int(2)
        .scale(&Rational::new((n as i64 + 1).into(), (6 * (n as i64 - 1)).into()))
        .mul(&exponent.exp())
}

/// Check both forms of the signed-permutation class-count bound:
/// the count is at most (n+1) p(n)^2, which is at most the closed form.
pub fn hyperoctahedral_bound_holds(n: u32) -> bool {
    assert!(n >= 2);
    let count = hyperoctahedral_class_count(n);
    let pn = partition_count(n);
    let middle = BigUint::from(n + 1) * &pn * &pn;
    if count > middle {
        return false;
    }
    definitely_le(&from_biguint(&middle), &hyperoctahedral_growth_bound(n))
}

/// Closed-form bound for the even-sign-product subgroup's class count:
/// twice the signed-permutation bound (index-2 subgroups at most double the
/// class count).
pub fn even_subgroup_growth_bound(n: u32) -> Interval {
    hyperoctahedral_growth_bound(n).scale(&Rational::from_integer(2.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    /// Independent oracle: count partitions of n into parts <= k by the
    /// largest-part DP (a different identity from the pentagonal recurrence).
    fn count_partitions_dp(n: usize) -> BigUint {
        let mut table = vec![vec![BigUint::zero(); n + 1]; n + 1];
        for k in 0..=n {
            table[0][k] = BigUint::one();
        }
        for m in 1..=n {
            for k in 1..=n {
                let mut v = table[m][k - 1].clone();
                if m >= k {
                    v += table[m - k][k].clone();
                }
                table[m][k] = v;
            }
        }
        table[n][n].clone()
    }

    #[test]
    fn enumeration_is_lex_descending_and_complete() {
        let got = enumerate_partitions(4);
        let want: Vec<Vec<u32>> = vec![
            vec![4],
            vec![3, 1],
            vec![2, 2],
            vec![2, 1, 1],
            vec![1, 1, 1, 1],
        ];
        assert_eq!(
            got.iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>(),
            want
        );
        assert_eq!(enumerate_partitions(0).len(), 1);
        assert!(enumerate_partitions(0)[0].is_empty());
        for n in 0..=20u32 {
            let list = enumerate_partitions(n);
            assert_eq!(BigUint::from(list.len()), partition_count(n), "n = {n}");
            // canonical order is strictly decreasing lexicographically
            assert!(list.windows(2).all(|w| w[0].parts() > w[1].parts()));
        }
    }

    #[test]
    fn counts_match_small_table_and_dp_oracle() {
        let first: Vec<u64> = (1..=8).map(|n| partition_count(n).to_u64().unwrap()).collect();
        assert_eq!(first, vec![1, 2, 3, 5, 7, 11, 15, 22]);
        for n in 0..=80usize {
            assert_eq!(partition_count(n as u32), count_partitions_dp(n), "n = {n}");
        }
    }

    #[test]
    fn dual_and_multiplicities() {
        let p = Partition::new(vec![3, 1]);
        assert_eq!(p.dual().parts(), &[2, 1, 1]);
        for n in 0..=12u32 {
            for p in enumerate_partitions(n) {
                assert_eq!(p.dual().dual(), p);
                assert_eq!(p.dual().size(), p.size());
            }
        }
        let q = Partition::new(vec![2, 2, 1, 1]);
        assert!(q.multiplicities_divisible_by(2));
        assert!(!Partition::new(vec![2, 1, 1]).multiplicities_divisible_by(2));
        assert_eq!(q.multiplicities()[&2], 2);
    }

    #[test]
    fn inflation_enumerates_divisible_multiplicity_partitions() {
        for (w, b) in [(1u32, 2u32), (2, 2), (3, 2), (2, 3)] {
            let list = enumerate_divisible_multiplicity_partitions(w, b);
            assert_eq!(BigUint::from(list.len()), partition_count(w));
            for p in &list {
                assert_eq!(p.size(), w * b);
                assert!(p.multiplicities_divisible_by(b));
            }
            // and they are exactly the partitions of w*b satisfying the condition
            let direct: Vec<_> = enumerate_partitions(w * b)
                .into_iter()
                .filter(|p| p.multiplicities_divisible_by(b))
                .collect();
            assert_eq!(direct.len(), list.len());
            for p in direct {
                assert!(list.contains(&p));
            }
        }
    }

    #[test]
    fn signed_class_count_small_values() {
        assert_eq!(hyperoctahedral_class_count(2), BigUint::from(5u32));
        assert_eq!(hyperoctahedral_class_count(3), BigUint::from(10u32));
        assert_eq!(hyperoctahedral_class_count(4), BigUint::from(20u32));
    }

    #[test]
    fn growth_bounds_hold_up_to_60() {
        for n in 2..=60u32 {
            assert!(wall_bound_holds(n), "partition bound fails at n = {n}");
            assert!(
                hyperoctahedral_bound_holds(n),
                "signed class bound fails at n = {n}"
            );
        }
    }

    #[test]
    #[should_panic(expected = "nonincreasing")]
    fn rejects_unsorted_parts() {
        let _ = Partition::new(vec![1, 3]);
    }
}
