//! Dense linear algebra over prime fields GF(p).
//!
//! Matrices are row-major with entries stored as reduced residues. Moduli
//! are limited to `p < 2^16` so that products fit comfortably in `u64`
//! accumulators without intermediate reduction.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn check_prime(p: u32) -> Result<()> {
    if is_prime(p) && p < (1 << 16) {
        Ok(())
    } else {
        Err(Error::NonPrime(p))
    }
}

pub fn check_odd_prime(p: u32) -> Result<()> {
    check_prime(p)?;
    if p == 2 {
        return Err(Error::NonOddPrime(p));
    }
    Ok(())
}

/// Multiplicative inverse of a nonzero residue.
pub fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

pub fn pow_mod(a: u32, mut e: u32, p: u32) -> u32 {
    let mut base = (a % p) as u64;
    let mut acc = 1u64 % p as u64;
    let m = p as u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u32
}

/// Reduce a signed integer into `[0, p)`.
pub fn reduce(x: i64, p: u32) -> u32 {
    x.rem_euclid(p as i64) as u32
}

/// A residue together with its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FScalar {
    value: u32,
    p: u32,
}

impl FScalar {
    pub fn new(value: i64, p: u32) -> Result<Self> {
        check_prime(p)?;
        Ok(FScalar { value: reduce(value, p), p })
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.p
    }

    pub fn inverse(self) -> Option<Self> {
        (self.value != 0).then(|| FScalar { value: inv_mod(self.value, self.p), p: self.p })
    }
}

impl std::ops::Add for FScalar {
    type Output = FScalar;
    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.p, rhs.p);
        FScalar { value: (self.value + rhs.value) % self.p, p: self.p }
    }
}

impl std::ops::Sub for FScalar {
    type Output = FScalar;
    fn sub(self, rhs: Self) -> Self {
        assert_eq!(self.p, rhs.p);
        FScalar { value: (self.value + self.p - rhs.value) % self.p, p: self.p }
    }
}

impl std::ops::Mul for FScalar {
    type Output = FScalar;
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.p, rhs.p);
        FScalar { value: ((self.value as u64 * rhs.value as u64) % self.p as u64) as u32, p: self.p }
    }
}

impl std::ops::Neg for FScalar {
    type Output = FScalar;
    fn neg(self) -> Self {
        FScalar { value: (self.p - self.value) % self.p, p: self.p }
    }
}

/// Row vector helpers (vectors are plain `Vec<u32>` of reduced residues).
pub mod vec_ops {
    pub fn add_scaled(target: &mut [u32], src: &[u32], c: u32, p: u32) {
        if c == 0 {
            return;
        }
        let (c, m) = (c as u64, p as u64);
        for (t, &s) in target.iter_mut().zip(src) {
            if s != 0 {
                *t = ((*t as u64 + c * s as u64) % m) as u32;
            }
        }
    }

    pub fn scale(v: &mut [u32], c: u32, p: u32) {
        for x in v.iter_mut() {
            *x = ((*x as u64 * c as u64) % p as u64) as u32;
        }
    }

    pub fn is_zero(v: &[u32]) -> bool {
        v.iter().all(|&x| x == 0)
    }

    pub fn dot(a: &[u32], b: &[u32], p: u32) -> u32 {
        let mut acc = 0u64;
        for (&x, &y) in a.iter().zip(b) {
            acc = (acc + x as u64 * y as u64) % p as u64;
        }
        acc as u32
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Result of row reduction.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: FMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl fmt::Debug for FMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FMatrix {}x{} over GF({})", self.rows, self.cols, self.p)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl FMatrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        FMatrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = FMatrix::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    pub fn scalar(p: u32, n: usize, c: u32) -> Self {
        let mut m = FMatrix::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = c % p;
        }
        m
    }

    /// Build from signed integer rows, reducing mod p.
    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&x| reduce(x, p)));
        }
        FMatrix { p, rows: r, cols: c, data }
    }

    pub fn from_vec(p: u32, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {}x{} matrix",
                data.len(),
                rows,
                cols
            )));
        }
        Ok(FMatrix { p, rows, cols, data: data.into_iter().map(|x| x % p).collect() })
    }

    /// Stack row vectors into a matrix with `cols` columns.
    pub fn from_row_vectors(p: u32, cols: usize, vecs: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(vecs.len() * cols);
        for v in vecs {
            assert_eq!(v.len(), cols);
            data.extend_from_slice(v);
        }
        FMatrix { p, rows: vecs.len(), cols, data }
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn data(&self) -> &[u32] {
        &self.data
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn set_signed(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = reduce(v, self.p);
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [u32] {
        let c = self.cols;
        &mut self.data[r * c..(r + 1) * c]
    }

    pub fn row_vectors(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> FMatrix {
        let mut t = FMatrix::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, other: &FMatrix) -> FMatrix {
        assert_eq!(self.p, other.p, "field mismatch");
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let p = self.p as u64;
        let n = other.cols;
        let mut out = FMatrix::zeros(self.p, self.rows, n);
        let mut acc = vec![0u64; n];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|x| *x = 0);
            let mut pending = 0u32;
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * n..(k + 1) * n];
                for (x, &b) in acc.iter_mut().zip(brow) {
                    *x += a * b as u64;
                }
                pending += 1;
                if pending == 1 << 30 {
                    acc.iter_mut().for_each(|x| *x %= p);
                    pending = 0;
                }
            }
            for (o, &x) in out.data[i * n..(i + 1) * n].iter_mut().zip(&acc) {
                *o = (x % p) as u32;
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.rows);
        let p = self.p as u64;
        let mut acc = vec![0u64; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (x, &b) in acc.iter_mut().zip(self.row(k)) {
                *x += a as u64 * b as u64;
            }
        }
        acc.into_iter().map(|x| (x % p) as u32).collect()
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|r| vec_ops::dot(self.row(r), v, self.p)).collect()
    }

    pub fn add(&self, other: &FMatrix) -> FMatrix {
        assert_eq!((self.rows, self.cols, self.p), (other.rows, other.cols, other.p));
        let p = self.p;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| (a + b) % p).collect();
        FMatrix { p, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &FMatrix) -> FMatrix {
        assert_eq!((self.rows, self.cols, self.p), (other.rows, other.cols, other.p));
        let p = self.p;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| (a + p - b) % p).collect();
        FMatrix { p, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: u32) -> FMatrix {
        let mut m = self.clone();
        vec_ops::scale(&mut m.data, c % self.p, self.p);
        m
    }

    pub fn neg(&self) -> FMatrix {
        self.scale(self.p - 1)
    }

    /// `self += c * other`
    pub fn add_scaled_assign(&mut self, other: &FMatrix, c: u32) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        vec_ops::add_scaled(&mut self.data, &other.data, c % self.p, self.p);
    }

    pub fn pow(&self, mut e: u64) -> FMatrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = FMatrix::identity(self.p, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> u32 {
        assert!(self.is_square());
        let mut t = 0u64;
        for i in 0..self.rows {
            t += self.get(i, i) as u64;
        }
        (t % self.p as u64) as u32
    }

    /// Select a submatrix by row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> FMatrix {
        let mut m = FMatrix::zeros(self.p, rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m.data[i * cols.len() + j] = self.get(r, c);
            }
        }
        m
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let p = self.p;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else { continue };
            m.swap_rows(r, pr);
            let inv = inv_mod(m.get(r, c), p);
            vec_ops::scale(m.row_mut(r), inv, p);
            let pivot_row = m.row(r).to_vec();
            for i in 0..m.rows {
                if i != r {
                    let f = m.get(i, c);
                    if f != 0 {
                        vec_ops::add_scaled(m.row_mut(i), &pivot_row, p - f, p);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, rank: r, pivots }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let c = self.cols;
        for j in 0..c {
            self.data.swap(a * c + j, b * c + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right kernel `{v : M v = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        let Rref { matrix, rank, pivots } = self.rref();
        let p = self.p;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u32; self.cols];
                v[f] = 1;
                for (i, &pc) in pivots.iter().enumerate().take(rank) {
                    let x = matrix.get(i, f);
                    v[pc] = (p - x) % p;
                }
                v
            })
            .collect()
    }

    /// Basis of the left kernel `{v : v M = 0}`.
    pub fn left_kernel_basis(&self) -> Vec<Vec<u32>> {
        self.transpose().kernel_basis()
    }

    /// Basis (in echelon form) of the row space.
    pub fn row_space_basis(&self) -> Vec<Vec<u32>> {
        let r = self.rref();
        (0..r.rank).map(|i| r.matrix.row(i).to_vec()).collect()
    }

    /// Some `x` with `A x = b`, if the system is consistent.
    pub fn solve(&self, b: &[u32]) -> Result<Option<Vec<u32>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut aug = FMatrix::zeros(self.p, self.rows, self.cols + 1);
        for r in 0..self.rows {
            aug.row_mut(r)[..self.cols].copy_from_slice(self.row(r));
            aug.row_mut(r)[self.cols] = b[r] % self.p;
        }
        let Rref { matrix, rank, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0u32; self.cols];
        for (i, &pc) in pivots.iter().enumerate().take(rank) {
            x[pc] = matrix.get(i, self.cols);
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<FMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = FMatrix::zeros(self.p, n, 2 * n);
        for r in 0..n {
            aug.row_mut(r)[..n].copy_from_slice(self.row(r));
            aug.row_mut(r)[n + r] = 1 % self.p;
        }
        let red = aug.rref();
        if red.rank < n || red.pivots[n - 1] != n - 1 {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Some(red.matrix.select(&rows, &cols))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Block diagonal sum.
    pub fn direct_sum(blocks: &[&FMatrix]) -> FMatrix {
        let p = blocks[0].p;
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = FMatrix::zeros(p, r, c);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.data[(ro + i) * c + co + j] = b.get(i, j);
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        m
    }
}

/// A subspace of row vectors kept in reduced echelon form, allowing
/// membership tests and coordinate extraction with respect to a fixed basis.
#[derive(Clone, Debug)]
pub struct Span {
    p: u32,
    len: usize,
    /// Original basis vectors, in insertion order.
    basis: Vec<Vec<u32>>,
    /// Echelon rows paired with their expression in terms of `basis`.
    echelon: Vec<(usize, Vec<u32>, Vec<u32>)>,
}

impl Span {
    pub fn new(p: u32, len: usize) -> Self {
        Span { p, len, basis: Vec::new(), echelon: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<Vec<u32>> {
        self.basis
    }

    fn reduce_with_coords(&self, v: &[u32]) -> (Vec<u32>, Vec<u32>) {
        let p = self.p;
        let mut r = v.to_vec();
        let mut coords = vec![0u32; self.basis.len()];
        for (pc, row, expr) in &self.echelon {
            let f = r[*pc];
            if f != 0 {
                vec_ops::add_scaled(&mut r, row, p - f, p);
                for (c, &e) in coords.iter_mut().zip(expr) {
                    *c = ((*c as u64 + f as u64 * e as u64) % p as u64) as u32;
                }
            }
        }
        (r, coords)
    }

    /// Insert `v`; returns true if it was independent of the current span.
    pub fn insert(&mut self, v: Vec<u32>) -> bool {
        assert_eq!(v.len(), self.len);
        let p = self.p;
        let (r, coords) = self.reduce_with_coords(&v);
        let Some(pc) = r.iter().position(|&x| x != 0) else { return false };
        let inv = inv_mod(r[pc], p);
        let mut row = r;
        vec_ops::scale(&mut row, inv, p);
        // expr: row = inv * (v - sum coords_k basis_k)
        let k = self.basis.len();
        let mut expr: Vec<u32> = coords.iter().map(|&c| (p - c) % p).collect();
        expr.push(1);
        vec_ops::scale(&mut expr, inv, p);
        for (_, _, e) in self.echelon.iter_mut() {
            e.push(0);
        }
        // keep echelon fully reduced in the new pivot column
        for (_, erow, eexpr) in self.echelon.iter_mut() {
            let f = erow[pc];
            if f != 0 {
                vec_ops::add_scaled(erow, &row, p - f, p);
                vec_ops::add_scaled(eexpr, &expr, p - f, p);
            }
        }
        self.basis.push(v);
        self.echelon.push((pc, row, expr));
        debug_assert_eq!(self.echelon.len(), k + 1);
        true
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        vec_ops::is_zero(&self.reduce_with_coords(v).0)
    }

    /// Coordinates of `v` in terms of the inserted basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        let (r, coords) = self.reduce_with_coords(v);
        vec_ops::is_zero(&r).then_some(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_examples() {
        let id = FMatrix::identity(5, 3);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 3);

        let m = FMatrix::from_rows(5, &[vec![1, 2], vec![2, 4]]);
        let r = m.rref();
        assert_eq!(r.matrix, FMatrix::from_rows(5, &[vec![1, 2], vec![0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);

        let m = FMatrix::from_rows(3, &[vec![1, 1], vec![1, 2]]);
        let r = m.rref();
        assert_eq!(r.matrix, FMatrix::identity(3, 2));
        assert_eq!(r.rank, 2);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(FMatrix::zeros(7, 2, 3).kernel_basis().len(), 3);
        assert!(FMatrix::identity(7, 4).kernel_basis().is_empty());
        let k = FMatrix::from_rows(3, &[vec![1, 1]]).kernel_basis();
        assert_eq!(k, vec![vec![2, 1]]);
    }

    #[test]
    fn solve_examples() {
        let id = FMatrix::identity(7, 3);
        assert_eq!(id.solve(&[3, 4, 5]).unwrap(), Some(vec![3, 4, 5]));
        let a = FMatrix::from_rows(3, &[vec![1, 1], vec![2, 2]]);
        assert_eq!(a.solve(&[1, 0]).unwrap(), None);
        let a = FMatrix::from_rows(5, &[vec![2]]);
        assert_eq!(a.solve(&[1]).unwrap(), Some(vec![3]));
        assert!(matches!(a.solve(&[1, 2]), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn inverse_and_pow() {
        let a = FMatrix::from_rows(7, &[vec![1, 2], vec![3, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), FMatrix::identity(7, 2));
        assert!(FMatrix::from_rows(7, &[vec![1, 2], vec![2, 4]]).inverse().is_none());
        assert_eq!(a.pow(3), a.mul(&a).mul(&a));
    }

    #[test]
    fn span_coordinates() {
        let mut s = Span::new(5, 3);
        assert!(s.insert(vec![1, 2, 0]));
        assert!(s.insert(vec![0, 1, 1]));
        assert!(!s.insert(vec![1, 3, 1]));
        assert_eq!(s.coordinates(&[2, 2, 3]), Some(vec![2, 3]));
        assert_eq!(s.coordinates(&[0, 0, 1]), None);
    }

    #[test]
    fn scalar_arith() {
        let a = FScalar::new(-1, 5).unwrap();
        assert_eq!(a.value(), 4);
        assert_eq!((a * a).value(), 1);
        assert_eq!(a.inverse().unwrap().value(), 4);
        assert!(FScalar::new(1, 6).is_err());
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        fn matrix_strategy() -> impl Strategy<Value = FMatrix> {
            (prop::sample::select(vec![2u32, 3, 5, 7]), 1usize..6, 1usize..6).prop_flat_map(|(p, r, c)| {
                prop::collection::vec(0..p, r * c).prop_map(move |d| FMatrix::from_vec(p, r, c, d).unwrap())
            })
        }

        proptest! {
            #[test]
            fn rref_idempotent(m in matrix_strategy()) {
                let r = m.rref();
                prop_assert_eq!(r.matrix.rref().matrix, r.matrix.clone());
            }

            #[test]
            fn rank_nullity(m in matrix_strategy()) {
                let k = m.kernel_basis();
                prop_assert_eq!(m.rank() + k.len(), m.cols());
                for v in &k {
                    prop_assert!(vec_ops::is_zero(&m.mul_vec(v)));
                }
                let km = FMatrix::from_row_vectors(m.p(), m.cols(), &k);
                prop_assert_eq!(km.rank(), k.len());
            }

            #[test]
            fn solve_is_exact(m in matrix_strategy(), seed in 0u64..1000) {
                let b: Vec<u32> = (0..m.rows()).map(|i| ((seed as usize * 31 + i * 7) % m.p() as usize) as u32).collect();
                if let Some(x) = m.solve(&b).unwrap() {
                    prop_assert_eq!(m.mul_vec(&x), b);
                }
                // a consistent right-hand side built from a known x is always solvable
                let x0: Vec<u32> = (0..m.cols()).map(|i| ((seed as usize + i) % m.p() as usize) as u32).collect();
                let b0 = m.mul_vec(&x0);
                let x = m.solve(&b0).unwrap().expect("consistent");
                prop_assert_eq!(m.mul_vec(&x), b0);
            }

            #[test]
            fn pivot_columns_reproduced(m in matrix_strategy()) {
                // rows of the rref restricted to pivot columns form an identity block,
                // and the pivot columns of M are recovered from the rref by left multiplication
                let r = m.rref();
                let rows: Vec<usize> = (0..r.rank).collect();
                let block = r.matrix.select(&rows, &r.pivots);
                prop_assert_eq!(block, FMatrix::identity(m.p(), r.rank));
                let all_rows: Vec<usize> = (0..m.rows()).collect();
                let pc = m.select(&all_rows, &r.pivots);
                // M restricted to pivot columns has full column rank
                prop_assert_eq!(pc.rank(), r.rank);
            }
        }
    }
}
