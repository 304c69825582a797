//! Dense matrices over a table-backed finite field: Gaussian elimination
//! (determinant, rank, inverse), characteristic polynomials via Hessenberg
//! reduction, Jordan-block data per irreducible, and compact u128 element
//! keys for group enumeration.

use super::poly::Poly;
use super::FieldSpec;
use crate::partitions::Partition;
use std::sync::Arc;

#[derive(Clone)]
pub struct Matrix {
    field: Arc<FieldSpec>,
    rows: usize,
    cols: usize,
    data: Vec<u32>, // row-major
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.field.q() == other.field.q()
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
    }
}

impl Eq for Matrix {}

impl std::hash::Hash for Matrix {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.q().hash(state);
        self.rows.hash(state);
        self.data.hash(state);
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix[q={}] {}x{}", self.field.q(), self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zero(field: Arc<FieldSpec>, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Arc<FieldSpec>, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: Arc<FieldSpec>, rows: &[Vec<u32>]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            for &v in row {
                assert!(v < field.q(), "entry out of range");
                data.push(v);
            }
        }
        Matrix {
            field,
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        debug_assert!(v < self.field.q());
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        assert_eq!(self.field.q(), other.field.q());
        let f = &self.field;
        let mut out = Matrix::zero(f.clone(), self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b != 0 {
                        let cur = out.get(r, c);
                        out.set(r, c, f.add(cur, f.mul(a, b)));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let mut out = self.clone();
        for i in 0..self.data.len() {
            out.data[i] = f.add(self.data[i], other.data[i]);
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let mut out = self.clone();
        for i in 0..self.data.len() {
            out.data[i] = f.sub(self.data[i], other.data[i]);
        }
        out
    }

    pub fn scale(&self, a: u32) -> Matrix {
        let f = &self.field;
        let mut out = self.clone();
        for v in &mut out.data {
            *v = f.mul(*v, a);
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let f = &self.field;
        (0..self.rows)
            .map(|r| {
                let mut acc = 0;
                for c in 0..self.cols {
                    acc = f.add(acc, f.mul(self.get(r, c), v[c]));
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, mut k: u64) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field.clone(), self.rows);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Determinant by Gaussian elimination with row swaps.
    pub fn det(&self) -> u32 {
        assert_eq!(self.rows, self.cols);
        let f = self.field.clone();
        let n = self.rows;
        let mut m = self.clone();
        let mut det = 1u32;
        let mut swaps = 0usize;
        for col in 0..n {
            let pivot = (col..n).find(|&r| m.get(r, col) != 0);
            let pivot = match pivot {
                Some(p) => p,
                None => return 0,
            };
            if pivot != col {
                for c in 0..n {
                    let (a, b) = (m.get(col, c), m.get(pivot, c));
                    m.set(col, c, b);
                    m.set(pivot, c, a);
                }
                swaps += 1;
            }
            let pv = m.get(col, col);
            det = f.mul(det, pv);
            let pv_inv = f.inv(pv);
            for r in col + 1..n {
                let factor = f.mul(m.get(r, col), pv_inv);
                if factor == 0 {
                    continue;
                }
                for c in col..n {
                    let v = f.sub(m.get(r, c), f.mul(factor, m.get(col, c)));
                    m.set(r, c, v);
                }
            }
        }
        if swaps % 2 == 1 {
            det = f.neg(det);
        }
        det
    }

    pub fn rank(&self) -> usize {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut rank = 0usize;
        let mut row = 0usize;
        for col in 0..self.cols {
            let pivot = (row..self.rows).find(|&r| m.get(r, col) != 0);
            let pivot = match pivot {
                Some(p) => p,
                None => continue,
            };
            if pivot != row {
                for c in 0..self.cols {
                    let (a, b) = (m.get(row, c), m.get(pivot, c));
                    m.set(row, c, b);
                    m.set(pivot, c, a);
                }
            }
            let pv_inv = f.inv(m.get(row, col));
            for r in row + 1..self.rows {
                let factor = f.mul(m.get(r, col), pv_inv);
                if factor == 0 {
                    continue;
                }
                for c in col..self.cols {
                    let v = f.sub(m.get(r, c), f.mul(factor, m.get(row, c)));
                    m.set(r, c, v);
                }
            }
            rank += 1;
            row += 1;
            if row == self.rows {
                break;
            }
        }
        rank
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.det() != 0
    }

    /// Inverse by Gauss-Jordan on an augmented block, if invertible.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let f = self.field.clone();
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = Matrix::identity(f.clone(), n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| m.get(r, col) != 0)?;
            if pivot != col {
                for c in 0..n {
                    let (a, b) = (m.get(col, c), m.get(pivot, c));
                    m.set(col, c, b);
                    m.set(pivot, c, a);
                    let (a, b) = (inv.get(col, c), inv.get(pivot, c));
                    inv.set(col, c, b);
                    inv.set(pivot, c, a);
                }
            }
            let pv_inv = f.inv(m.get(col, col));
            for c in 0..n {
                m.set(col, c, f.mul(m.get(col, c), pv_inv));
                inv.set(col, c, f.mul(inv.get(col, c), pv_inv));
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = m.get(r, col);
                if factor == 0 {
                    continue;
                }
                for c in 0..n {
                    let v = f.sub(m.get(r, c), f.mul(factor, m.get(col, c)));
                    m.set(r, c, v);
                    let v = f.sub(inv.get(r, c), f.mul(factor, inv.get(col, c)));
                    inv.set(r, c, v);
                }
            }
        }
        Some(inv)
    }

    /// Row-major base-q key; panics if q^(rows·cols) exceeds u128 (a shape
    /// property, so every matrix of a given shape panics or none does).
    pub fn key(&self) -> u128 {
        let q = self.field.q() as u128;
        q.checked_pow(self.data.len() as u32)
            .expect("matrix key exceeds u128 capacity");
        let mut key = 0u128;
        for &v in self.data.iter().rev() {
            key = key * q + v as u128;
        }
        key
    }

    pub fn from_key(field: Arc<FieldSpec>, rows: usize, cols: usize, mut key: u128) -> Matrix {
        let q = field.q() as u128;
        let mut data = Vec::with_capacity(rows * cols);
        for _ in 0..rows * cols {
            data.push((key % q) as u32);
            key /= q;
        }
        assert_eq!(key, 0, "key out of range for the given shape");
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Companion matrix of a monic polynomial (last column carries the
    /// negated lower coefficients).
    pub fn companion(f: &Poly) -> Matrix {
        assert!(f.is_monic() && f.degree() >= 1);
        let field = f.field().clone();
        let n = f.degree();
        let mut m = Matrix::zero(field.clone(), n, n);
        for i in 1..n {
            m.set(i, i - 1, 1);
        }
        for i in 0..n {
            m.set(i, n - 1, field.neg(f.coeff(i)));
        }
        m
    }

    /// Characteristic polynomial det(xI − M), monic of degree n, computed by
    /// similarity reduction to upper Hessenberg form followed by the leading
    /// principal minor recurrence
    ///   p_j = (x − H[j−1][j−1])·p_{j−1}
    ///         − Σ_{i<j−1} H[i][j−1]·(∏_{t=i+1}^{j−1} H[t][t−1])·p_i.
    pub fn char_poly(&self) -> Poly {
        assert_eq!(self.rows, self.cols);
        let f = self.field.clone();
        let n = self.rows;
        if n == 0 {
            return Poly::one(f);
        }
        let mut h = self.clone();
        // reduce to upper Hessenberg by similarity transforms
        for col in 0..n.saturating_sub(2) {
            let pivot = (col + 1..n).find(|&r| h.get(r, col) != 0);
            let pivot = match pivot {
                Some(p) => p,
                None => continue,
            };
            if pivot != col + 1 {
                // swap rows pivot <-> col+1 and the same columns (similarity)
                for c in 0..n {
                    let (a, b) = (h.get(col + 1, c), h.get(pivot, c));
                    h.set(col + 1, c, b);
                    h.set(pivot, c, a);
                }
                for r in 0..n {
                    let (a, b) = (h.get(r, col + 1), h.get(r, pivot));
                    h.set(r, col + 1, b);
                    h.set(r, pivot, a);
                }
            }
            let pv_inv = f.inv(h.get(col + 1, col));
            for r in col + 2..n {
                let factor = f.mul(h.get(r, col), pv_inv);
                if factor == 0 {
                    continue;
                }
                // row_r -= factor * row_{col+1}; col_{col+1} += factor * col_r
                for c in 0..n {
                    let v = f.sub(h.get(r, c), f.mul(factor, h.get(col + 1, c)));
                    h.set(r, c, v);
                }
                for rr in 0..n {
                    let v = f.add(h.get(rr, col + 1), f.mul(factor, h.get(rr, r)));
                    h.set(rr, col + 1, v);
                }
            }
        }
        // p_0 = 1
        let mut ps: Vec<Poly> = vec![Poly::one(f.clone())];
        let x = Poly::x(f.clone());
        for j in 1..=n {
            let diag = h.get(j - 1, j - 1);
            let mut pj = x
                .sub(&Poly::constant(f.clone(), diag))
                .mul(&ps[j - 1]);
            let mut subprod = 1u32; // ∏ H[t][t−1] for t = i+1 .. j−1
            for i in (0..j.saturating_sub(1)).rev() {
                subprod = f.mul(subprod, h.get(i + 1, i));
                if subprod == 0 {
                    break;
                }
                let coeff = f.mul(h.get(i, j - 1), subprod);
                if coeff != 0 {
                    pj = pj.sub(&ps[i].mul_scalar(coeff));
                }
            }
            ps.push(pj);
        }
        ps.pop().unwrap()
    }
}

/// f(M) with matrix Horner evaluation.
pub fn eval_poly_at_matrix(f: &Poly, m: &Matrix) -> Matrix {
    assert_eq!(m.rows(), m.cols());
    let field = m.field().clone();
    let n = m.rows();
    let mut acc = Matrix::zero(field.clone(), n, n);
    for i in (0..=f.deg().map_or(0, |d| d)).rev() {
        acc = acc.mul(m);
        let c = f.coeff(i);
        if c != 0 {
            for r in 0..n {
                let v = field.add(acc.get(r, r), c);
                acc.set(r, r, v);
            }
        }
        if i == 0 {
            break;
        }
    }
    acc
}

/// The Jordan-block partition of M at the irreducible phi: part sizes are
/// the block sizes, read off the kernel-dimension jumps of phi(M)^j (each
/// jump is deg(phi) times the number of blocks of size ≥ j).  Empty when
/// phi does not divide the characteristic polynomial.
pub fn jordan_partition(m: &Matrix, phi: &Poly) -> Partition {
    assert!(phi.is_monic() && phi.degree() >= 1);
    let n = m.rows();
    let d = phi.degree();
    let a = eval_poly_at_matrix(phi, m);
    let mut power = a.clone();
    let mut kernel_dims = vec![0usize]; // k_0 = 0
    loop {
        let k = n - power.rank();
        if k == *kernel_dims.last().unwrap() {
            break;
        }
        kernel_dims.push(k);
        if k == n {
            break;
        }
        power = power.mul(&a);
    }
    // blocks of size >= j, for j = 1..
    let mut ge: Vec<u32> = Vec::new();
    for j in 1..kernel_dims.len() {
        let jump = kernel_dims[j] - kernel_dims[j - 1];
        assert!(jump % d == 0, "kernel jump must be a multiple of deg(phi)");
        ge.push((jump / d) as u32);
    }
    let mut parts = Vec::new();
    for (idx, &count) in ge.iter().enumerate() {
        let next = ge.get(idx + 1).copied().unwrap_or(0);
        for _ in 0..count.saturating_sub(next) {
            parts.push(idx as u32 + 1);
        }
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::from_unsorted(parts)
}

#[cfg(test)]
mod tests {
    use super::super::poly::{irreducibles, Poly};
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn fld(p: u32, e: u32) -> Arc<FieldSpec> {
        FieldSpec::get(p, e).unwrap()
    }

    fn random_matrix(field: &Arc<FieldSpec>, n: usize, rng: &mut StdRng) -> Matrix {
        let mut m = Matrix::zero(field.clone(), n, n);
        for r in 0..n {
            for c in 0..n {
                m.set(r, c, rng.gen_range(0..field.q()));
            }
        }
        m
    }

    fn random_invertible(field: &Arc<FieldSpec>, n: usize, rng: &mut StdRng) -> Matrix {
        loop {
            let m = random_matrix(field, n, rng);
            if m.is_invertible() {
                return m;
            }
        }
    }

    /// Cofactor-expansion characteristic polynomial over the polynomial
    /// ring — exponential, for n ≤ 4 oracle use only.
    fn char_poly_cofactor(m: &Matrix) -> Poly {
        let field = m.field().clone();
        let n = m.rows();
        // entries of xI - M as polynomials
        let entries: Vec<Vec<Poly>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let a = Poly::constant(field.clone(), field.neg(m.get(r, c)));
                        if r == c {
                            Poly::x(field.clone()).add(&a)
                        } else {
                            a
                        }
                    })
                    .collect()
            })
            .collect();
        fn det_rec(entries: &[Vec<Poly>], rows: &[usize], cols: &[usize], field: &Arc<FieldSpec>) -> Poly {
            if rows.is_empty() {
                return Poly::one(field.clone());
            }
            let mut acc = Poly::zero(field.clone());
            let r = rows[0];
            let rest: Vec<usize> = rows[1..].to_vec();
            for (k, &c) in cols.iter().enumerate() {
                let sub_cols: Vec<usize> =
                    cols.iter().copied().filter(|&cc| cc != c).collect();
                let minor = det_rec(entries, &rest, &sub_cols, field);
                let term = entries[r][c].mul(&minor);
                if k % 2 == 0 {
                    acc = acc.add(&term);
                } else {
                    acc = acc.sub(&term);
                }
            }
            acc
        }
        let idx: Vec<usize> = (0..n).collect();
        det_rec(&entries, &idx, &idx, &field)
    }

    #[test]
    fn gl22_has_six_invertible_matrices() {
        let f2 = fld(2, 1);
        let mut count = 0;
        for key in 0..16u128 {
            let m = Matrix::from_key(f2.clone(), 2, 2, key);
            assert_eq!(m.key(), key);
            let inv_ok = m.is_invertible();
            assert_eq!(inv_ok, m.rank() == 2);
            if inv_ok {
                count += 1;
                let inv = m.inverse().unwrap();
                assert_eq!(m.mul(&inv), Matrix::identity(f2.clone(), 2));
                assert_eq!(inv.mul(&m), Matrix::identity(f2.clone(), 2));
            } else {
                assert!(m.inverse().is_none());
            }
        }
        assert_eq!(count, 6);
    }

    #[test]
    fn det_is_multiplicative() {
        for (p, e) in [(3, 1), (2, 2)] {
            let field = fld(p, e);
            let mut rng = StdRng::seed_from_u64(31);
            for _ in 0..50 {
                let a = random_matrix(&field, 3, &mut rng);
                let b = random_matrix(&field, 3, &mut rng);
                assert_eq!(a.mul(&b).det(), field.mul(a.det(), b.det()));
            }
        }
    }

    #[test]
    fn det_sign_tracks_row_swaps() {
        // a permutation matrix for a transposition has determinant −1
        let f3 = fld(3, 1);
        let m = Matrix::from_rows(f3.clone(), &[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]);
        assert_eq!(m.det(), f3.neg(1));
    }

    #[test]
    fn companion_matrix_recovers_its_polynomial() {
        for (p, e) in [(2, 1), (3, 1), (2, 2)] {
            let field = fld(p, e);
            let mut rng = StdRng::seed_from_u64(37);
            for _ in 0..30 {
                let deg = rng.gen_range(1..6);
                let mut c: Vec<u32> = (0..deg).map(|_| rng.gen_range(0..field.q())).collect();
                c.push(1);
                let f = Poly::from_coeffs(field.clone(), c);
                let m = Matrix::companion(&f);
                assert_eq!(m.char_poly(), f);
            }
        }
    }

    #[test]
    fn char_poly_matches_cofactor_oracle() {
        for (p, e) in [(2, 1), (3, 1), (2, 2)] {
            let field = fld(p, e);
            let mut rng = StdRng::seed_from_u64(41);
            for n in 1..=4usize {
                for _ in 0..30 {
                    let m = random_matrix(&field, n, &mut rng);
                    assert_eq!(m.char_poly(), char_poly_cofactor(&m), "{m:?}");
                }
            }
        }
    }

    #[test]
    fn char_poly_constant_term_is_signed_det() {
        // det(xI−M) at x=0 gives (−1)^n det M
        let field = fld(3, 1);
        let mut rng = StdRng::seed_from_u64(43);
        for _ in 0..30 {
            let m = random_matrix(&field, 4, &mut rng);
            let cp = m.char_poly();
            assert_eq!(cp.coeff(0), m.det()); // (−1)^4 = 1
        }
    }

    #[test]
    fn char_poly_is_conjugation_invariant() {
        for (n, p, e) in [(4usize, 2, 1), (3, 3, 1)] {
            let field = fld(p, e);
            let mut rng = StdRng::seed_from_u64(47);
            for _ in 0..100 {
                let m = random_matrix(&field, n, &mut rng);
                let g = random_invertible(&field, n, &mut rng);
                let conj = g.mul(&m).mul(&g.inverse().unwrap());
                assert_eq!(conj.char_poly(), m.char_poly());
            }
        }
    }

    #[test]
    fn cayley_hamilton_holds() {
        for (p, e) in [(2, 1), (3, 1), (2, 2)] {
            let field = fld(p, e);
            let mut rng = StdRng::seed_from_u64(53);
            for n in 1..=5usize {
                for _ in 0..10 {
                    let m = random_matrix(&field, n, &mut rng);
                    let cp = m.char_poly();
                    let z = eval_poly_at_matrix(&cp, &m);
                    assert_eq!(z, Matrix::zero(field.clone(), n, n));
                }
            }
        }
    }

    #[test]
    fn jordan_partition_reads_block_structure() {
        let f2 = fld(2, 1);
        let phi = Poly::from_coeffs(f2.clone(), vec![1, 1]); // x+1
        // blocks of sizes 2 and 1 for x+1: companion((x+1)^2) ⊕ companion(x+1)
        let phi2 = phi.mul(&phi);
        let b1 = Matrix::companion(&phi2);
        let mut m = Matrix::identity(f2.clone(), 3);
        for r in 0..2 {
            for c in 0..2 {
                m.set(r, c, b1.get(r, c));
            }
        }
        // bottom-right 1x1 block is companion(x+1) = [1]
        assert_eq!(jordan_partition(&m, &phi).parts(), &[2, 1]);
        // identity: partition (1,1,1)
        let id = Matrix::identity(f2.clone(), 3);
        assert_eq!(jordan_partition(&id, &phi).parts(), &[1, 1, 1]);
        // an irreducible that does not divide: empty partition
        let other = Poly::from_coeffs(f2.clone(), vec![1, 1, 1]);
        assert!(jordan_partition(&id, &other).is_empty());
    }

    #[test]
    fn jordan_partition_handles_degree_two_primaries() {
        let f2 = fld(2, 1);
        let quad = irreducibles(&f2, 2).unwrap()[0].clone(); // x^2+x+1
        // companion(quad^2) is one size-2 block for quad in GL(4,2)
        let m = Matrix::companion(&quad.mul(&quad));
        assert_eq!(jordan_partition(&m, &quad).parts(), &[2]);
        // block-diagonal companion(quad) ⊕ companion(quad): two size-1 blocks
        let c = Matrix::companion(&quad);
        let mut m2 = Matrix::zero(f2.clone(), 4, 4);
        for r in 0..2 {
            for cc in 0..2 {
                m2.set(r, cc, c.get(r, cc));
                m2.set(r + 2, cc + 2, c.get(r, cc));
            }
        }
        assert_eq!(jordan_partition(&m2, &quad).parts(), &[1, 1]);
    }

    #[test]
    fn transpose_and_apply_are_consistent() {
        let f3 = fld(3, 1);
        let mut rng = StdRng::seed_from_u64(59);
        for _ in 0..20 {
            let a = random_matrix(&f3, 3, &mut rng);
            let b = random_matrix(&f3, 3, &mut rng);
            let v = vec![1, 2, 0];
            // (M^T)^T = M and (AB)^T = B^T A^T
            assert_eq!(a.transpose().transpose(), a);
            assert_eq!(a.mul(&b).transpose(), b.transpose().mul(&a.transpose()));
            // (AB)v = A(Bv)
            assert_eq!(a.mul(&b).apply(&v), a.apply(&b.apply(&v)));
        }
    }

    #[test]
    #[should_panic(expected = "exceeds u128 capacity")]
    fn oversized_keys_panic() {
        let f2 = fld(2, 1);
        let m = Matrix::zero(f2, 12, 12);
        let _ = m.key();
    }
}
