//! Finite-dimensional algebras over GF(p) given by structure constants.
//!
//! Products are written `a·b` and the right regular representation sends
//! `a` to the matrix whose row `i` is `b_i·a`, so that `R_a R_b = R_{ab}`.

mod idempotents;
mod module;
mod radical;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{vec_ops, FMatrix, Span};

pub use idempotents::IdempotentData;
pub use module::{AlgModule, Resolution};
pub(crate) use module::find_invertible as find_invertible_matrix;

#[derive(Clone, Debug, Serialize)]
pub struct LabeledIdempotent {
    pub label: String,
    pub element: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    p: u32,
    dim: usize,
    /// sparse `b_i · b_j`, indexed by `i * dim + j`
    table: Vec<Vec<(u32, u32)>>,
    unit: Vec<u32>,
    grading: Option<Vec<u8>>,
    /// optional faithful matrix representation, one matrix per basis element
    rep: Option<Vec<FMatrix>>,
    idempotents: Vec<LabeledIdempotent>,
}

impl GradedAlgebra {
    /// Build from dense structure constants `c[i][j]` (a vector over the
    /// basis), validating associativity and the unit.
    pub fn from_structure_constants(
        p: u32,
        dim: usize,
        c: &[Vec<Vec<u32>>],
        unit: Vec<u32>,
        grading: Option<Vec<u8>>,
    ) -> Result<Self> {
        crate::field::check_prime(p)?;
        let table = (0..dim * dim)
            .map(|ij| {
                let (i, j) = (ij / dim, ij % dim);
                sparse(&c[i][j])
            })
            .collect();
        let a = GradedAlgebra { p, dim, table, unit, grading, rep: None, idempotents: Vec::new() };
        a.check()?;
        Ok(a)
    }

    pub(crate) fn from_table(p: u32, dim: usize, table: Vec<Vec<(u32, u32)>>, unit: Vec<u32>) -> Self {
        GradedAlgebra { p, dim, table, unit, grading: None, rep: None, idempotents: Vec::new() }
    }

    /// Algebra spanned by square matrices closed under multiplication and
    /// containing the identity; the matrices serve as faithful representation.
    pub fn from_matrices(p: u32, basis: Vec<FMatrix>) -> Result<Self> {
        let n = basis.first().map_or(0, |m| m.rows());
        let mut span = Span::new(p, n * n);
        for m in &basis {
            if !span.insert(m.data().to_vec()) {
                return Err(Error::Invalid("matrix basis is dependent".into()));
            }
        }
        let dim = basis.len();
        let mut table = Vec::with_capacity(dim * dim);
        for a in &basis {
            for b in &basis {
                let prod = a.mul(b);
                let coords = span
                    .coordinates(prod.data())
                    .ok_or_else(|| Error::Invalid("matrix span is not closed under products".into()))?;
                table.push(sparse(&coords));
            }
        }
        let unit = span
            .coordinates(FMatrix::identity(p, n).data())
            .ok_or_else(|| Error::Invalid("identity is not in the span".into()))?;
        Ok(GradedAlgebra { p, dim, table, unit, grading: None, rep: Some(basis), idempotents: Vec::new() })
    }

    pub fn with_grading(mut self, grading: Vec<u8>) -> Result<Self> {
        self.grading = Some(grading);
        self.check_grading()?;
        Ok(self)
    }

    pub fn with_idempotents(mut self, idempotents: Vec<LabeledIdempotent>) -> Self {
        self.idempotents = idempotents;
        self
    }

    pub(crate) fn with_rep(mut self, rep: Vec<FMatrix>) -> Self {
        self.rep = Some(rep);
        self
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[u32] {
        &self.unit
    }

    pub fn grading(&self) -> Option<&[u8]> {
        self.grading.as_deref()
    }

    pub fn rep(&self) -> Option<&[FMatrix]> {
        self.rep.as_deref()
    }

    pub fn labeled_idempotents(&self) -> &[LabeledIdempotent] {
        &self.idempotents
    }

    /// `{p, dim, unit, grading, table, idempotents}`; `table[i*dim+j]` lists
    /// the nonzero `(k, c)` of `b_i b_j`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "p": self.p,
            "dim": self.dim,
            "unit": self.unit,
            "grading": self.grading,
            "table": self.table,
            "idempotents": self.idempotents,
        })
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0u32; self.dim];
        v[i] = 1;
        v
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<u32> {
        let mut v = vec![0u32; self.dim];
        for &(k, c) in &self.table[i * self.dim + j] {
            v[k as usize] = c;
        }
        v
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let p = self.p as u64;
        let mut acc = vec![0u64; self.dim];
        let ynz: Vec<(usize, u64)> = y.iter().enumerate().filter(|(_, &b)| b != 0).map(|(j, &b)| (j, b as u64)).collect();
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for &(j, b) in &ynz {
                let ab = a as u64 * b % p;
                for &(k, c) in &self.table[i * self.dim + j] {
                    acc[k as usize] += ab * c as u64;
                }
            }
            if i % 64 == 63 {
                acc.iter_mut().for_each(|v| *v %= p);
            }
        }
        acc.into_iter().map(|v| (v % p) as u32).collect()
    }

    pub fn add(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        x.iter().zip(y).map(|(&a, &b)| (a + b) % self.p).collect()
    }

    pub fn sub(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        x.iter().zip(y).map(|(&a, &b)| (a + self.p - b) % self.p).collect()
    }

    pub fn scale(&self, x: &[u32], c: u32) -> Vec<u32> {
        let mut v = x.to_vec();
        vec_ops::scale(&mut v, c, self.p);
        v
    }

    pub fn is_idempotent(&self, e: &[u32]) -> bool {
        self.mul(e, e) == e
    }

    /// Right multiplication by `a` on the basis: row `i` is `b_i · a`.
    pub fn right_mult_matrix(&self, a: &[u32]) -> FMatrix {
        let mut m = FMatrix::zeros(self.p, self.dim, self.dim);
        for i in 0..self.dim {
            let row = self.mul(&self.basis_vector(i), a);
            m.row_mut(i).copy_from_slice(&row);
        }
        m
    }

    /// Left multiplication by `a`: row `i` is `a · b_i`.
    pub fn left_mult_matrix(&self, a: &[u32]) -> FMatrix {
        let mut m = FMatrix::zeros(self.p, self.dim, self.dim);
        for i in 0..self.dim {
            let row = self.mul(a, &self.basis_vector(i));
            m.row_mut(i).copy_from_slice(&row);
        }
        m
    }

    /// Matrix of `a` in the faithful representation (right regular if none is stored).
    pub(crate) fn rep_matrix(&self, a: &[u32]) -> FMatrix {
        match &self.rep {
            Some(rep) => {
                let n = rep[0].rows();
                let mut m = FMatrix::zeros(self.p, n, n);
                for (r, &c) in rep.iter().zip(a) {
                    if c != 0 {
                        m.add_scaled_assign(r, c);
                    }
                }
                m
            }
            None => self.right_mult_matrix(a),
        }
    }

    pub(crate) fn rep_size(&self) -> usize {
        self.rep.as_ref().map_or(self.dim, |r| r[0].rows())
    }

    pub fn check(&self) -> Result<()> {
        let dim = self.dim;
        for i in 0..dim {
            let bi = self.basis_vector(i);
            if self.mul(&self.unit, &bi) != bi || self.mul(&bi, &self.unit) != bi {
                return Err(Error::Invalid("unit does not act as identity".into()));
            }
            for j in 0..dim {
                let bij = self.basis_product(i, j);
                for k in 0..dim {
                    let bk = self.basis_vector(k);
                    let left = self.mul(&bij, &bk);
                    let right = self.mul(&bi, &self.basis_product(j, k));
                    if left != right {
                        return Err(Error::Invalid(format!("associativity fails on ({i},{j},{k})")));
                    }
                }
            }
        }
        self.check_grading()
    }

    fn check_grading(&self) -> Result<()> {
        let Some(g) = &self.grading else { return Ok(()) };
        if g.len() != self.dim {
            return Err(Error::DimensionMismatch("grading length".into()));
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                for &(k, _) in &self.table[i * self.dim + j] {
                    if g[k as usize] != (g[i] + g[j]) % 2 {
                        return Err(Error::IncompatibleGrading);
                    }
                }
            }
        }
        Ok(())
    }

    /// Subspace `x A y` spanned by `x b_k y`.
    pub fn sandwich(&self, x: &[u32], y: &[u32]) -> Vec<Vec<u32>> {
        let mut span = Span::new(self.p, self.dim);
        let xa: Vec<Vec<u32>> = (0..self.dim).map(|k| self.mul(x, &self.basis_vector(k))).collect();
        for v in xa {
            span.insert(self.mul(&v, y));
        }
        span.into_basis()
    }

    /// Corner algebra `eAe` with unit `e`.
    pub fn corner(&self, e: &[u32]) -> Result<GradedAlgebra> {
        if !self.is_idempotent(e) {
            return Err(Error::NotIdempotent);
        }
        let basis = self.sandwich(e, e);
        let mut span = Span::new(self.p, self.dim);
        for b in &basis {
            span.insert(b.clone());
        }
        let n = basis.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &basis {
            for b in &basis {
                let c = span.coordinates(&self.mul(a, b)).ok_or_else(|| Error::Invalid("corner not closed".into()))?;
                table.push(sparse(&c));
            }
        }
        let unit = span.coordinates(e).expect("e lies in eAe");
        let grading = self.grading.as_ref().and_then(|g| homogeneous_degrees(&basis, g));
        let rep = self.rep.as_ref().map(|_| basis.iter().map(|b| self.rep_matrix(b)).collect());
        let idempotents = self
            .idempotents
            .iter()
            .filter_map(|l| {
                let inside = self.mul(&self.mul(e, &l.element), e);
                (inside == l.element && l.element.iter().any(|&x| x != 0))
                    .then(|| LabeledIdempotent { label: l.label.clone(), element: span.coordinates(&l.element).unwrap() })
            })
            .collect();
        Ok(GradedAlgebra { p: self.p, dim: n, table, unit, grading, rep, idempotents })
    }

    /// Quotient `A / I` by a two-sided ideal, on a complement basis of
    /// standard basis vectors.
    pub fn quotient(&self, ideal: &[Vec<u32>]) -> Result<(GradedAlgebra, QuotientMap)> {
        let map = QuotientMap::new(self.p, self.dim, ideal);
        let n = map.complement.len();
        let mut table = Vec::with_capacity(n * n);
        for &a in &map.complement {
            for &b in &map.complement {
                table.push(sparse(&map.project(&self.basis_product(a, b))));
            }
        }
        let unit = map.project(&self.unit);
        let grading = self.grading.as_ref().map(|g| map.complement.iter().map(|&i| g[i]).collect());
        Ok((GradedAlgebra { p: self.p, dim: n, table, unit, grading, rep: None, idempotents: Vec::new() }, map))
    }

    /// Ideal spanned by all products `x y` with `x ∈ I`, `y ∈ K`.
    pub fn product_space(&self, i: &[Vec<u32>], k: &[Vec<u32>]) -> Vec<Vec<u32>> {
        let mut span = Span::new(self.p, self.dim);
        for x in i {
            for y in k {
                span.insert(self.mul(x, y));
                if span.dim() == self.dim {
                    return span.into_basis();
                }
            }
        }
        span.into_basis()
    }

    /// The radical power series `J, J², …` until it vanishes (for nilpotent `J`).
    pub fn radical_powers(&self) -> Vec<Vec<Vec<u32>>> {
        let j = self.radical();
        let mut out = vec![j.clone()];
        let mut cur = j.clone();
        while !cur.is_empty() {
            let next = self.product_space(&cur, &j);
            if next.len() == cur.len() {
                break;
            }
            cur = next;
            out.push(cur.clone());
        }
        out
    }

    /// Smallest `k` with `J^k = 0`, or `None` if the powers stabilise above zero.
    pub fn loewy_length(&self) -> Option<usize> {
        let powers = self.radical_powers();
        powers.last().filter(|l| l.is_empty()).map(|_| powers.len())
    }
}

/// Projection `A → A/I` onto a complement of standard basis vectors.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    pub complement: Vec<usize>,
    span: Span,
    dim: usize,
}

impl QuotientMap {
    fn new(p: u32, dim: usize, ideal: &[Vec<u32>]) -> Self {
        let mut span = Span::new(p, dim);
        for v in ideal {
            span.insert(v.clone());
        }
        let k = span.dim();
        let mut complement = Vec::new();
        for i in 0..dim {
            let mut e = vec![0u32; dim];
            e[i] = 1;
            if span.insert(e) {
                complement.push(i);
            }
        }
        debug_assert_eq!(k + complement.len(), dim);
        QuotientMap { complement, span, dim }
    }

    /// Coordinates of the image of `v` in the quotient basis.
    pub fn project(&self, v: &[u32]) -> Vec<u32> {
        let coords = self.span.coordinates(v).expect("full span");
        let k = coords.len() - self.complement.len();
        coords[k..].to_vec()
    }

    /// A preimage of a quotient element.
    pub fn lift(&self, q: &[u32]) -> Vec<u32> {
        let mut v = vec![0u32; self.dim];
        for (&i, &c) in self.complement.iter().zip(q) {
            v[i] = c;
        }
        v
    }
}

pub(crate) fn sparse(v: &[u32]) -> Vec<(u32, u32)> {
    v.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, &c)| (k as u32, c)).collect()
}

fn homogeneous_degrees(basis: &[Vec<u32>], g: &[u8]) -> Option<Vec<u8>> {
    basis
        .iter()
        .map(|v| {
            let mut degs = v.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| g[i]);
            let first = degs.next()?;
            degs.all(|x| x == first).then_some(first)
        })
        .collect()
}
