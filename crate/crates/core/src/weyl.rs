//! Permutations, signed permutations, and the cycle statistics behind
//! derangement counting in symmetric and hyperoctahedral groups.
//!
//! Conventions:
//! - a `Perm` maps position i to `images[i]`, 0-based;
//! - a `SignedPerm` sends e_i to sign_i * e_{perm(i)}, with `signs` a bitmask
//!   (bit i set means the minus sign);
//! - the index of a permutation is n minus its number of cycles, which equals
//!   its minimal factorization length into transpositions.
//!
//! Conjugacy in the full signed group is decided by the (positive, negative)
//! cycle-type invariant; in the even-sign-product subgroup classes can split,
//! so there they are computed by conjugation orbits.

use crate::partitions::{enumerate_partitions, Partition};
use crate::rational::{rat, Rational};
use crate::realbound::{definitely_le, exp_rational, Interval};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n as u32).collect(),
        }
    }

    /// Build from an image list; panics unless it is a bijection on 0..n.
    pub fn from_images(images: Vec<u32>) -> Self {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            assert!((i as usize) < n && !seen[i as usize], "not a bijection");
            seen[i as usize] = true;
        }
        Perm { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.images[i as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `self` after `other`: (a.compose(b))(i) = a(b(i)).
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n());
        Perm {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.n()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Cycles as index lists, each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut j = s as u32;
            while !seen[j as usize] {
                seen[j as usize] = true;
                cyc.push(j);
                j = self.images[j as usize];
            }
            out.push(cyc);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycles().iter().map(|c| c.len() as u32).collect())
    }

    /// Number of cycles (fixed points count as cycles).
    pub fn orbit_count(&self) -> usize {
        self.cycles().len()
    }

    /// n minus the number of cycles: the minimal number of transpositions
    /// whose product is this permutation.
    pub fn index(&self) -> usize {
        self.n() - self.orbit_count()
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &j)| *i as u32 == j)
            .count()
    }

    /// Whether, for every 1 <= s <= n, some union of cycles has total size s
    /// (i.e. the permutation fixes a subset of every size).
    pub fn fixes_every_size(&self) -> bool {
        let n = self.n();
        assert!(n <= 127, "subset-sum bitset holds at most 127 symbols");
        let mut reachable: u128 = 1;
        for c in self.cycles() {
            reachable |= reachable << c.len();
        }
        (1..=n).all(|s| reachable >> s & 1 == 1)
    }
}

/// Visit every permutation of 0..n as an image slice (Heap's algorithm).
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[u32])) {
    let mut a: Vec<u32> = (0..n as u32).collect();
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

/// Exhaustive check over S_k: every permutation of index < k/2 fixes subsets
/// of every size, and for even k the fixed-point-free involutions show the
/// threshold is sharp (index exactly k/2, odd sizes unfixed).
pub fn low_index_fixes_all_sizes(k: usize) -> bool {
    assert!(k <= 9, "exhaustive scan is sized for k <= 9");
    let mut ok = true;
    let mut sharp_witness = k % 2 == 1; // nothing to witness for odd k
    for_each_permutation(k, |images| {
        let p = Perm::from_images(images.to_vec());
        if 2 * p.index() < k && !p.fixes_every_size() {
            ok = false;
        }
        if k % 2 == 0 {
            let all_two_cycles = p.cycle_type().parts().iter().all(|&l| l == 2);
            if all_two_cycles && p.n() > 0 {
                // index is exactly k/2 and odd subset sizes are unfixed
                if p.index() * 2 == k && !p.fixes_every_size() {
                    sharp_witness = true;
                }
            }
        }
    });
    ok && sharp_witness
}

/// z_lambda = prod over part sizes i of i^{m_i} m_i!: the centralizer order
/// of a permutation with cycle type lambda.
pub fn cycle_type_centralizer(lambda: &Partition) -> BigUint {
    let mut z = BigUint::one();
    for (i, m) in lambda.multiplicities() {
        for _ in 0..m {
            z *= BigUint::from(i);
        }
        for j in 1..=m {
            z *= BigUint::from(j);
        }
    }
    z
}

/// Exact proportion of S_n whose cycle lengths are all divisible by b:
/// sum of 1/z_lambda over partitions of n with all parts divisible by b.
pub fn exact_prop_all_cycles_div(n: u32, b: u32) -> Rational {
    assert!(b >= 1);
    let mut total = Rational::zero();
    for lambda in enumerate_partitions(n) {
        if lambda.parts().iter().all(|&p| p % b == 0) {
            let z = cycle_type_centralizer(&lambda);
            total += Rational::new(1.into(), num_bigint::BigInt::from(z));
        }
    }
    total
}

/// Brute-force proportion of S_n with all cycle lengths divisible by b.
pub fn sym_div_proportion_brute(n: usize, b: usize) -> Rational {
    assert!(n <= 9, "direct enumeration is sized for n <= 9");
    let mut hits = 0i64;
    let mut total = 0i64;
    for_each_permutation(n, |images| {
        total += 1;
        let p = Perm::from_images(images.to_vec());
        if p.cycle_type().parts().iter().all(|&l| l % b as u32 == 0) {
            hits += 1;
        }
    });
    rat(hits, total)
}

/// Union-bound check at n: the brute proportion of permutations whose cycle
/// lengths are all divisible by some prime is at most the sum of the exact
/// per-prime proportions, which is at most 1.2 * sum of n^-(1-1/b) over
/// primes b <= n (right side rounded down).
pub fn some_prime_divisible_bound_check(n: usize) -> bool {
    let primes: Vec<u32> = (2..=n as u32).filter(|&b| (2..b).all(|d| b % d != 0)).collect();
    let mut hits = 0i64;
    let mut total = 0i64;
    for_each_permutation(n, |images| {
        total += 1;
        let p = Perm::from_images(images.to_vec());
        let parts = p.cycle_type();
        if primes
            .iter()
            .any(|&b| parts.parts().iter().all(|&l| l % b == 0))
        {
            hits += 1;
        }
    });
    let brute = rat(hits, total);
    let exact_sum: Rational = primes
        .iter()
        .map(|&b| exact_prop_all_cycles_div(n as u32, b))
        .sum();
    if brute > exact_sum {
        return false;
    }
    let mut bound = Interval::from_int(0);
    for &b in &primes {
        bound = bound.add(
            &Interval::from_int(n as i64)
                .pow_rat(-((b as i64) - 1), b)
                .scale(&rat(6, 5)),
        );
    }
    definitely_le(&exact_sum, &bound)
}

// ---------------------------------------------------------------------------
// derangements of the natural S_n action
// ---------------------------------------------------------------------------

/// Number of fixed-point-free permutations of n symbols, by enumeration.
pub fn sym_derangement_count(n: usize) -> u64 {
    assert!(n <= 9, "direct enumeration is sized for n <= 9");
    let mut count = 0u64;
    for_each_permutation(n, |images| {
        if images.iter().enumerate().all(|(i, &j)| i as u32 != j) {
            count += 1;
        }
    });
    count
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// Check that the derangement count is the nearest integer to n!/e
/// (certified through an enclosure of n!/e), and at least n!/3 for n >= 2.
pub fn derangement_count_matches_rounded(n: usize) -> bool {
    let d = sym_derangement_count(n);
    let nf = factorial(n as u64);
    let target = Interval::point(crate::rational::from_biguint(&nf))
        .mul(&exp_rational(&rat(-1, 1)));
    let dr = crate::rational::from_biguint(&BigUint::from(d));
    let half = rat(1, 2);
    let lo_ok = target.lo() > &(&dr - &half);
    let hi_ok = target.hi() < &(&dr + &half);
    let third_ok = n < 2 || &dr * rat(3, 1) >= crate::rational::from_biguint(&nf);
    lo_ok && hi_ok && third_ok
}

// ---------------------------------------------------------------------------
// signed permutations
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    perm: Perm,
    signs: u32, // bit i set: e_i picks up a minus sign
}

impl SignedPerm {
    pub fn new(perm: Perm, signs: u32) -> Self {
        assert!(perm.n() <= 32);
        assert_eq!(signs >> perm.n(), 0, "sign bits past n");
        SignedPerm { perm, signs }
    }

    pub fn identity(n: usize) -> Self {
        SignedPerm::new(Perm::identity(n), 0)
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn signs(&self) -> u32 {
        self.signs
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        let n = self.n();
        assert_eq!(n, other.n());
        let mut signs = 0u32;
        for i in 0..n {
            let mid = other.perm.apply(i as u32);
            let neg = (other.signs >> i & 1) ^ (self.signs >> mid & 1);
            signs |= neg << i;
        }
        SignedPerm {
            perm: self.perm.compose(&other.perm),
            signs,
        }
    }

    pub fn inverse(&self) -> SignedPerm {
        let inv_perm = self.perm.inverse();
        let mut signs = 0u32;
        for j in 0..self.n() {
            let i = inv_perm.apply(j as u32);
            signs |= (self.signs >> i & 1) << j;
        }
        SignedPerm {
            perm: inv_perm,
            signs,
        }
    }

    /// Whether the product of all signs is +1 (membership in the
    /// even-sign-product subgroup).
    pub fn even_sign_product(&self) -> bool {
        self.signs.count_ones() % 2 == 0
    }

    /// Cycle type split by the sign product around each cycle:
    /// (positive-cycle partition, negative-cycle partition).
    pub fn signed_cycle_type(&self) -> (Partition, Partition) {
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for cyc in self.perm.cycles() {
            let mut product_negative = false;
            for &i in &cyc {
                if self.signs >> i & 1 == 1 {
                    product_negative = !product_negative;
                }
            }
            if product_negative {
                neg.push(cyc.len() as u32);
            } else {
                pos.push(cyc.len() as u32);
            }
        }
        (Partition::from_unsorted(pos), Partition::from_unsorted(neg))
    }

    /// Whether every odd cycle's sign matches `odd_negative` and every even
    /// cycle's sign matches `even_negative`.
    pub fn matches_sign_pattern(&self, odd_negative: bool, even_negative: bool) -> bool {
        let (pos, neg) = self.signed_cycle_type();
        pos.parts()
            .iter()
            .all(|&l| !(if l % 2 == 1 { odd_negative } else { even_negative }))
            && neg
                .parts()
                .iter()
                .all(|&l| if l % 2 == 1 { odd_negative } else { even_negative })
    }

    fn key(&self) -> u64 {
        // n <= 8: 4 bits per image plus the sign mask
        let mut k = 0u64;
        for (i, &j) in self.perm.images().iter().enumerate() {
            k |= (j as u64) << (4 * i);
        }
        k | (self.signs as u64) << 40
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignedKind {
    /// Full signed permutation group, order 2^n n!.
    Full,
    /// Even-sign-product subgroup, index 2.
    EvenProduct,
}

/// A fully enumerated signed permutation group with its conjugacy classes.
pub struct SignedGroup {
    pub n: usize,
    pub kind: SignedKind,
    pub elements: Vec<SignedPerm>,
    pub class_of: Vec<u32>,
    pub class_sizes: Vec<u64>,
    pub class_reps: Vec<u32>,
}

impl SignedGroup {
    pub fn class_count(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    /// Proportion of elements whose cycle signs follow the given pattern.
    pub fn sign_pattern_proportion(&self, odd_negative: bool, even_negative: bool) -> Rational {
        let hits = self
            .elements
            .iter()
            .filter(|w| w.matches_sign_pattern(odd_negative, even_negative))
            .count();
        rat(hits as i64, self.elements.len() as i64)
    }
}

/// Enumerate the full or even-sign-product signed permutation group on n
/// symbols with its conjugacy classes.  The full group is classed by the
/// signed cycle-type invariant; the subgroup by conjugation orbits (classes
/// can split there).
pub fn enumerate_signed_group(n: usize, kind: SignedKind) -> SignedGroup {
    assert!((1..=7).contains(&n), "enumeration is sized for n <= 7");
    let mut elements = Vec::new();
    for_each_permutation(n, |images| {
        let p = Perm::from_images(images.to_vec());
        for mask in 0u32..(1 << n) {
            if kind == SignedKind::EvenProduct && mask.count_ones() % 2 == 1 {
                continue;
            }
            elements.push(SignedPerm::new(p.clone(), mask));
        }
    });
    let index: HashMap<u64, u32> = elements
        .iter()
        .enumerate()
        .map(|(i, w)| (w.key(), i as u32))
        .collect();

    let class_of = match kind {
        SignedKind::Full => {
            // invariant-based classes
            let mut type_ids: HashMap<(Partition, Partition), u32> = HashMap::new();
            let mut class_of = vec![0u32; elements.len()];
            for (i, w) in elements.iter().enumerate() {
                let t = w.signed_cycle_type();
                let next = type_ids.len() as u32;
                let id = *type_ids.entry(t).or_insert(next);
                class_of[i] = id;
            }
            class_of
        }
        SignedKind::EvenProduct => {
            // conjugation-orbit classes under subgroup generators
            let mut gens: Vec<SignedPerm> = Vec::new();
            for i in 0..n - 1 {
                let mut images: Vec<u32> = (0..n as u32).collect();
                images.swap(i, i + 1);
                gens.push(SignedPerm::new(Perm::from_images(images), 0));
            }
            if n >= 2 {
                // e_0 -> -e_1, e_1 -> -e_0
                let mut images: Vec<u32> = (0..n as u32).collect();
                images.swap(0, 1);
                gens.push(SignedPerm::new(Perm::from_images(images), 0b11));
            }
            let gen_invs: Vec<SignedPerm> = gens.iter().map(|g| g.inverse()).collect();
            let mut class_of = vec![u32::MAX; elements.len()];
            let mut next_class = 0u32;
            for start in 0..elements.len() {
                if class_of[start] != u32::MAX {
                    continue;
                }
                let id = next_class;
                next_class += 1;
                class_of[start] = id;
                let mut queue = vec![start as u32];
                while let Some(x) = queue.pop() {
                    let w = elements[x as usize].clone();
                    for (g, ginv) in gens.iter().zip(&gen_invs) {
                        let conj = g.compose(&w).compose(ginv);
                        let y = index[&conj.key()];
                        if class_of[y as usize] == u32::MAX {
                            class_of[y as usize] = id;
                            queue.push(y);
                        }
                    }
                }
            }
            class_of
        }
    };

    let class_count = class_of.iter().map(|&c| c + 1).max().unwrap_or(0) as usize;
    let mut class_sizes = vec![0u64; class_count];
    let mut class_reps = vec![u32::MAX; class_count];
    for (i, &c) in class_of.iter().enumerate() {
        class_sizes[c as usize] += 1;
        if class_reps[c as usize] == u32::MAX {
            class_reps[c as usize] = i as u32;
        }
    }
    SignedGroup {
        n,
        kind,
        elements,
        class_of,
        class_sizes,
        class_reps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::hyperoctahedral_class_count;
    use crate::qseries::{binomial_series, cycles_div_b_coeff};
    use crate::rational::rint;
    use num_traits::ToPrimitive;
    use std::collections::{HashMap, VecDeque};

    #[test]
    fn perm_basics() {
        let p = Perm::from_images(vec![1, 2, 0, 4, 3]); // (0 1 2)(3 4)
        assert_eq!(p.cycle_type().parts(), &[3, 2]);
        assert_eq!(p.orbit_count(), 2);
        assert_eq!(p.index(), 3);
        assert!(p.compose(&p.inverse()).is_identity());
        let q = Perm::from_images(vec![1, 0, 2, 3, 4]);
        // compose applies the right factor first
        assert_eq!(p.compose(&q).apply(0), p.apply(q.apply(0)));
    }

    #[test]
    fn index_equals_cayley_distance_on_s5() {
        // BFS distance from the identity in the transposition Cayley graph.
        let n = 5;
        let mut gens = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut im: Vec<u32> = (0..n as u32).collect();
                im.swap(i, j);
                gens.push(Perm::from_images(im));
            }
        }
        let mut dist: HashMap<Vec<u32>, usize> = HashMap::new();
        let id = Perm::identity(n);
        dist.insert(id.images().to_vec(), 0);
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            let d = dist[p.images()];
            for g in &gens {
                let q = g.compose(&p);
                if !dist.contains_key(q.images()) {
                    dist.insert(q.images().to_vec(), d + 1);
                    queue.push_back(q);
                }
            }
        }
        assert_eq!(dist.len(), 120);
        for (images, d) in &dist {
            let p = Perm::from_images(images.clone());
            assert_eq!(p.index(), *d, "at {images:?}");
        }
        // spot value: a 5-cycle has index 4
        assert_eq!(Perm::from_images(vec![1, 2, 3, 4, 0]).index(), 4);
    }

    #[test]
    fn fixes_every_size_examples() {
        // (1 2)(3 4) on 4 symbols: even sizes only
        let p = Perm::from_images(vec![1, 0, 3, 2]);
        assert!(!p.fixes_every_size());
        // (1 2 3) x fixed point: sizes 1,3 from cycles, 4 total: size 2 fails
        let q = Perm::from_images(vec![1, 2, 0, 3]);
        assert!(!q.fixes_every_size());
        // (1 2) x two fixed points: all sizes reachable
        let r = Perm::from_images(vec![1, 0, 2, 3]);
        assert!(r.fixes_every_size());
    }

    #[test]
    fn low_index_threshold_is_exact_up_to_9() {
        for k in 2..=9usize {
            assert!(low_index_fixes_all_sizes(k), "k = {k}");
        }
    }

    #[test]
    fn exact_proportion_matches_series_and_brute() {
        for b in [2u32, 3] {
            for n in 1..=10u32 {
                let exact = exact_prop_all_cycles_div(n, b);
                let series = cycles_div_b_coeff(n as usize, b as usize);
                assert_eq!(exact, series, "n = {n}, b = {b}");
            }
        }
        assert_eq!(exact_prop_all_cycles_div(4, 2), rat(3, 8));
        for n in 1..=7usize {
            for b in [2usize, 3] {
                assert_eq!(
                    sym_div_proportion_brute(n, b),
                    exact_prop_all_cycles_div(n as u32, b as u32),
                );
            }
        }
    }

    #[test]
    fn union_bound_at_six() {
        assert!(some_prime_divisible_bound_check(6));
    }

    #[test]
    fn derangement_counts() {
        assert_eq!(sym_derangement_count(1), 0);
        assert_eq!(sym_derangement_count(2), 1);
        assert_eq!(sym_derangement_count(3), 2);
        assert_eq!(sym_derangement_count(4), 9);
        assert_eq!(sym_derangement_count(5), 44);
        for n in 1..=8usize {
            assert!(derangement_count_matches_rounded(n), "n = {n}");
        }
    }

    #[test]
    fn signed_perm_group_axioms() {
        let n = 4;
        let a = SignedPerm::new(Perm::from_images(vec![1, 2, 0, 3]), 0b0101);
        let b = SignedPerm::new(Perm::from_images(vec![3, 0, 1, 2]), 0b0011);
        let c = SignedPerm::new(Perm::from_images(vec![2, 3, 1, 0]), 0b1001);
        // associativity and inverses in the matrix model
        assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        assert_eq!(a.compose(&a.inverse()), SignedPerm::identity(n));
        assert_eq!(a.inverse().compose(&a), SignedPerm::identity(n));
    }

    #[test]
    fn signed_cycle_type_is_conjugation_invariant() {
        let g = enumerate_signed_group(3, SignedKind::Full);
        for w in g.elements.iter().take(200) {
            for v in g.elements.iter().step_by(7) {
                let conj = v.compose(w).compose(&v.inverse());
                assert_eq!(conj.signed_cycle_type(), w.signed_cycle_type());
            }
        }
    }

    #[test]
    fn full_signed_group_class_counts_match_partitions() {
        for n in 1..=6usize {
            let g = enumerate_signed_group(n, SignedKind::Full);
            assert_eq!(g.order(), (1u64 << n) * factorial(n as u64).to_u64().unwrap());
            assert_eq!(
                BigUint::from(g.class_count()),
                hyperoctahedral_class_count(n as u32),
                "n = {n}"
            );
            assert_eq!(g.class_sizes.iter().sum::<u64>(), g.order());
        }
    }

    #[test]
    fn full_group_invariant_classes_are_conjugation_orbits() {
        // oracle: orbit computation must refine to the same classes (n = 3)
        let g = enumerate_signed_group(3, SignedKind::Full);
        let index: HashMap<u64, u32> = g
            .elements
            .iter()
            .enumerate()
            .map(|(i, w)| (w.key(), i as u32))
            .collect();
        // conjugate every element by every element: full orbits
        let mut orbit_of = vec![u32::MAX; g.elements.len()];
        let mut next = 0u32;
        for i in 0..g.elements.len() {
            if orbit_of[i] != u32::MAX {
                continue;
            }
            let id = next;
            next += 1;
            for v in &g.elements {
                let conj = v.compose(&g.elements[i]).compose(&v.inverse());
                orbit_of[index[&conj.key()] as usize] = id;
            }
        }
        // same partition of elements
        for i in 0..g.elements.len() {
            for j in 0..g.elements.len() {
                assert_eq!(
                    g.class_of[i] == g.class_of[j],
                    orbit_of[i] == orbit_of[j],
                );
            }
        }
    }

    #[test]
    fn even_subgroup_class_counts() {
        // frozen by the orbit computation, cross-checked against the
        // index-2 splitting bounds k(B_n)/2 <= k(D_n) <= 2 k(B_n)
        let expected = [(2usize, 4usize), (3, 5), (4, 13), (5, 18), (6, 37)];
        for (n, want) in expected {
            let d = enumerate_signed_group(n, SignedKind::EvenProduct);
            assert_eq!(d.order(), (1u64 << (n - 1)) * factorial(n as u64).to_u64().unwrap());
            assert_eq!(d.class_count(), want, "n = {n}");
            let b_count = hyperoctahedral_class_count(n as u32).to_usize().unwrap();
            assert!(d.class_count() <= 2 * b_count);
            assert!(2 * d.class_count() >= b_count);
            assert_eq!(d.class_sizes.iter().sum::<u64>(), d.order());
        }
    }

    #[test]
    fn sign_pattern_proportions_match_series() {
        let series = binomial_series(&rat(1, 2), 6);
        for n in 1..=6usize {
            let g = enumerate_signed_group(n, SignedKind::Full);
            for (odd_neg, even_neg) in [(true, false), (false, true), (true, true), (false, false)]
            {
                assert_eq!(
                    g.sign_pattern_proportion(odd_neg, even_neg),
                    series.coeff(n).clone(),
                    "n = {n}, pattern {odd_neg}/{even_neg}"
                );
            }
        }
        // frozen spot value at n = 4
        let g4 = enumerate_signed_group(4, SignedKind::Full);
        assert_eq!(g4.sign_pattern_proportion(true, false), rat(35, 128));
        // sanity: all-signs-allowed would be proportion 1; the four patterns
        // tile only part of the group
        assert!(g4.sign_pattern_proportion(true, false) < rint(1));
    }

    #[test]
    fn signed_class_bound_against_closed_form() {
        use crate::partitions::{even_subgroup_growth_bound, hyperoctahedral_growth_bound};
        use crate::rational::from_biguint;
        for n in 2..=6usize {
            let b = enumerate_signed_group(n, SignedKind::Full);
            let d = enumerate_signed_group(n, SignedKind::EvenProduct);
            assert!(definitely_le(
                &from_biguint(&BigUint::from(b.class_count())),
                &hyperoctahedral_growth_bound(n as u32)
            ));
            assert!(definitely_le(
                &from_biguint(&BigUint::from(d.class_count())),
                &even_subgroup_growth_bound(n as u32)
            ));
        }
    }
}
