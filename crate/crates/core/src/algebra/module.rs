//! Right modules over a `GradedAlgebra` and minimal projective resolutions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{vec_ops, FMatrix, Span};

use super::{GradedAlgebra, IdempotentData};

/// Right module: `v · b_k = v act[k]`.
#[derive(Clone, Debug)]
pub struct AlgModule {
    p: u32,
    dim: usize,
    act: Vec<FMatrix>,
}

impl AlgModule {
    pub fn new(a: &GradedAlgebra, dim: usize, act: Vec<FMatrix>) -> Result<Self> {
        if act.len() != a.dim() {
            return Err(Error::DimensionMismatch("one action matrix per basis element".into()));
        }
        let m = AlgModule { p: a.p(), dim, act };
        m.check(a)?;
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[FMatrix] {
        &self.act
    }

    pub fn act_by(&self, a: &[u32]) -> FMatrix {
        let mut m = FMatrix::zeros(self.p, self.dim, self.dim);
        for (x, &c) in self.act.iter().zip(a) {
            if c != 0 {
                m.add_scaled_assign(x, c);
            }
        }
        m
    }

    /// `R_{b_i} R_{b_j} = R_{b_i b_j}` and the unit acts trivially.
    pub fn check(&self, a: &GradedAlgebra) -> Result<()> {
        if self.act_by(a.unit()) != FMatrix::identity(self.p, self.dim) {
            return Err(Error::Invalid("unit does not act as identity".into()));
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                if self.act[i].mul(&self.act[j]) != self.act_by(&a.basis_product(i, j)) {
                    return Err(Error::Invalid(format!("action fails on basis pair ({i},{j})")));
                }
            }
        }
        Ok(())
    }

    /// The right ideal `x A` as a module.
    pub fn right_ideal(a: &GradedAlgebra, x: &[u32]) -> AlgModule {
        let basis: Vec<Vec<u32>> = {
            let mut s = Span::new(a.p(), a.dim());
            for k in 0..a.dim() {
                s.insert(a.mul(x, &a.basis_vector(k)));
            }
            s.into_basis()
        };
        Self::on_subspace_of_regular(a, basis)
    }

    pub fn regular(a: &GradedAlgebra) -> AlgModule {
        Self::right_ideal(a, a.unit())
    }

    fn on_subspace_of_regular(a: &GradedAlgebra, basis: Vec<Vec<u32>>) -> AlgModule {
        let mut span = Span::new(a.p(), a.dim());
        for v in &basis {
            span.insert(v.clone());
        }
        let act = (0..a.dim())
            .map(|k| {
                let bk = a.basis_vector(k);
                let rows: Vec<Vec<u32>> =
                    basis.iter().map(|v| span.coordinates(&a.mul(v, &bk)).expect("right ideal")).collect();
                FMatrix::from_row_vectors(a.p(), basis.len(), &rows)
            })
            .collect();
        AlgModule { p: a.p(), dim: basis.len(), act }
    }

    pub fn submodule(&self, basis: &[Vec<u32>]) -> Result<AlgModule> {
        let mut span = Span::new(self.p, self.dim);
        for v in basis {
            if !span.insert(v.clone()) {
                return Err(Error::Invalid("dependent submodule basis".into()));
            }
        }
        let act = self
            .act
            .iter()
            .map(|g| {
                let rows: Vec<Vec<u32>> = basis
                    .iter()
                    .map(|v| span.coordinates(&g.vec_mul(v)).ok_or_else(|| Error::Invalid("not a submodule".into())))
                    .collect::<Result<_>>()?;
                Ok(FMatrix::from_row_vectors(self.p, basis.len(), &rows))
            })
            .collect::<Result<_>>()?;
        Ok(AlgModule { p: self.p, dim: basis.len(), act })
    }

    pub fn quotient(&self, sub: &[Vec<u32>]) -> Result<AlgModule> {
        let mut span = Span::new(self.p, self.dim);
        for v in sub {
            span.insert(v.clone());
        }
        let sub_basis = span.basis().to_vec();
        let mut rows = Vec::new();
        for i in 0..self.dim {
            let mut e = vec![0u32; self.dim];
            e[i] = 1;
            if span.insert(e.clone()) {
                rows.push(e);
            }
        }
        let k = rows.len();
        rows.extend(sub_basis);
        let basis = FMatrix::from_row_vectors(self.p, self.dim, &rows);
        let inv = basis.inverse().expect("basis");
        let idx: Vec<usize> = (0..k).collect();
        let mut act = Vec::with_capacity(self.act.len());
        for g in &self.act {
            let conj = basis.mul(g).mul(&inv);
            if (k..self.dim).any(|r| (0..k).any(|c| conj.get(r, c) != 0)) {
                return Err(Error::Invalid("not a submodule".into()));
            }
            act.push(conj.select(&idx, &idx));
        }
        Ok(AlgModule { p: self.p, dim: k, act })
    }

    /// Simple top of `e A` for a primitive idempotent `e`.
    pub fn simple(a: &GradedAlgebra, e: &[u32], radical: &[Vec<u32>]) -> Result<AlgModule> {
        let proj = Self::right_ideal(a, e);
        // e J inside e A
        let ea: Vec<Vec<u32>> = {
            let mut s = Span::new(a.p(), a.dim());
            for k in 0..a.dim() {
                s.insert(a.mul(e, &a.basis_vector(k)));
            }
            s.into_basis()
        };
        let mut span = Span::new(a.p(), a.dim());
        for v in &ea {
            span.insert(v.clone());
        }
        let ej: Vec<Vec<u32>> = radical.iter().map(|x| span.coordinates(&a.mul(e, x)).expect("eJ ⊂ eA")).collect();
        proj.quotient(&ej)
    }

    /// `M J`, spanned by images under radical elements.
    fn radical_part(&self, radical: &[Vec<u32>]) -> Span {
        let mut s = Span::new(self.p, self.dim);
        for x in radical {
            let m = self.act_by(x);
            for r in 0..self.dim {
                s.insert(m.row(r).to_vec());
            }
        }
        s
    }

    /// Homomorphisms `self → other` commuting with every basis element.
    pub fn hom_basis(&self, other: &AlgModule) -> Vec<FMatrix> {
        let (r, c) = (self.dim, other.dim);
        let p = self.p;
        let n = r * c;
        if n == 0 {
            return Vec::new();
        }
        let mut cur: Vec<Vec<u32>> = (0..n)
            .map(|u| {
                let mut e = vec![0u32; n];
                e[u] = 1;
                e
            })
            .collect();
        for (gm, gn) in self.act.iter().zip(&other.act) {
            if cur.is_empty() {
                break;
            }
            let images: Vec<Vec<u32>> = cur
                .iter()
                .map(|v| {
                    let x = FMatrix::from_vec(p, r, c, v.clone()).expect("shape");
                    gm.mul(&x).sub(&x.mul(gn)).data().to_vec()
                })
                .collect();
            let rel = FMatrix::from_row_vectors(p, n, &images).left_kernel_basis();
            cur = rel
                .iter()
                .map(|coeffs| {
                    let mut acc = vec![0u32; n];
                    for (v, &a) in cur.iter().zip(coeffs) {
                        vec_ops::add_scaled(&mut acc, v, a, p);
                    }
                    acc
                })
                .collect();
        }
        cur.into_iter().map(|v| FMatrix::from_vec(p, r, c, v).expect("shape")).collect()
    }

    /// Decides whether an invertible homomorphism exists: seeded random
    /// search, exhaustive for small hom spaces.
    pub fn is_isomorphic(&self, other: &AlgModule, seed: u64) -> bool {
        if self.dim != other.dim {
            return false;
        }
        if self.dim == 0 {
            return true;
        }
        let basis = self.hom_basis(other);
        if find_invertible(&basis, self.p, seed).is_some() {
            return true;
        }
        if basis.is_empty() || (self.p as f64).powi(basis.len() as i32) <= 4096.0 {
            return false;
        }
        // large hom space: compare Krull–Schmidt decompositions
        let (Ok(xs), Ok(ys)) = (self.summands(seed), other.summands(seed)) else { return false };
        if xs.len() != ys.len() {
            return false;
        }
        let mut used = vec![false; ys.len()];
        xs.iter().all(|x| {
            let hit = (0..ys.len()).find(|&k| !used[k] && x.indecomposables_isomorphic(&ys[k]));
            hit.map(|k| used[k] = true).is_some()
        })
    }

    /// Unchecked constructor for actions already known to be valid.
    pub(crate) fn from_parts(p: u32, dim: usize, act: Vec<FMatrix>) -> Self {
        AlgModule { p, dim, act }
    }

    pub fn direct_sum(&self, other: &AlgModule) -> AlgModule {
        let act = self.act.iter().zip(&other.act).map(|(x, y)| FMatrix::direct_sum(&[x, y])).collect();
        AlgModule { p: self.p, dim: self.dim + other.dim, act }
    }

    /// The endomorphism algebra, acting on the module through its matrices.
    pub fn endomorphism_algebra(&self) -> Result<GradedAlgebra> {
        if self.dim == 0 {
            return Err(Error::Invalid("zero module".into()));
        }
        GradedAlgebra::from_matrices(self.p, self.hom_basis(self))
    }

    /// Indecomposable summands, cut out by primitive idempotents of the
    /// endomorphism algebra.
    pub fn summands(&self, seed: u64) -> Result<Vec<AlgModule>> {
        if self.dim == 0 {
            return Ok(Vec::new());
        }
        let end = self.hom_basis(self);
        if end.len() == 1 {
            return Ok(vec![self.clone()]);
        }
        let alg = GradedAlgebra::from_matrices(self.p, end.clone())?;
        let es = alg.primitive_idempotents(seed)?;
        es.iter()
            .map(|e| {
                let mut m = FMatrix::zeros(self.p, self.dim, self.dim);
                for (x, &c) in end.iter().zip(e) {
                    m.add_scaled_assign(x, c);
                }
                self.submodule(&m.row_space_basis())
            })
            .collect()
    }

    /// Local endomorphism ring: `dim End - dim rad End = 1`.
    pub fn is_indecomposable(&self) -> Result<bool> {
        if self.dim == 0 {
            return Ok(false);
        }
        let alg = self.endomorphism_algebra()?;
        Ok(alg.dim() - alg.radical().len() == 1)
    }

    /// Isomorphism test for modules with local endomorphism rings.
    pub(crate) fn indecomposables_isomorphic(&self, other: &AlgModule) -> bool {
        if self.dim != other.dim {
            return false;
        }
        let ab = self.hom_basis(other);
        let ba = other.hom_basis(self);
        ab.iter().any(|u| ba.iter().any(|v| u.mul(v).is_invertible()))
    }
}

/// Invertible element in the span of square matrices, if one is found.
pub(crate) fn find_invertible(basis: &[FMatrix], p: u32, seed: u64) -> Option<FMatrix> {
    if basis.is_empty() {
        return None;
    }
    if let Some(x) = basis.iter().find(|x| x.is_invertible()) {
        return Some(x.clone());
    }
    let combine = |coeffs: &[u32]| {
        let mut acc = FMatrix::zeros(p, basis[0].rows(), basis[0].cols());
        for (x, &c) in basis.iter().zip(coeffs) {
            if c != 0 {
                acc.add_scaled_assign(x, c);
            }
        }
        acc
    };
    let k = basis.len();
    let exhaustive = (p as f64).powi(k as i32) <= 4096.0;
    if exhaustive {
        let total = (p as u64).pow(k as u32);
        for mut code in 1..total {
            let coeffs: Vec<u32> = (0..k)
                .map(|_| {
                    let c = (code % p as u64) as u32;
                    code /= p as u64;
                    c
                })
                .collect();
            let x = combine(&coeffs);
            if x.is_invertible() {
                return Some(x);
            }
        }
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..64 {
        let coeffs: Vec<u32> = (0..k).map(|_| rng.gen_range(0..p)).collect();
        let x = combine(&coeffs);
        if x.is_invertible() {
            return Some(x);
        }
    }
    None
}

#[derive(Clone, Debug, Serialize)]
pub struct Resolution {
    /// dims of `Ω⁰ = S, Ω¹, …`
    pub dims: Vec<usize>,
    /// `(start, length)`: `Ω^{start+length} ≅ Ω^{start}`
    pub period: Option<(usize, usize)>,
}

impl GradedAlgebra {
    /// Minimal projective cover kernel of `m`: returns `(Ω m, dim P)`.
    pub fn syzygy(&self, m: &AlgModule, data: &IdempotentData) -> Result<(AlgModule, usize)> {
        let mj = m.radical_part(&data.radical);
        let mut gens: Vec<(usize, Vec<u32>)> = Vec::new();
        for &ri in &data.representatives {
            let e = &data.idempotents[ri];
            let act_e = m.act_by(e);
            let mut s = Span::new(self.p, m.dim);
            for b in mj.basis() {
                s.insert(act_e.vec_mul(b));
            }
            for r in 0..m.dim {
                let v = act_e.row(r).to_vec();
                if s.insert(v.clone()) {
                    gens.push((ri, v));
                }
            }
        }
        // P = ⊕ e_i A, one summand per generator
        let mut blocks: Vec<(Vec<Vec<u32>>, AlgModule)> = Vec::new();
        let mut images: Vec<Vec<u32>> = Vec::new();
        for (ri, g) in &gens {
            let pim = AlgModule::right_ideal(self, &data.idempotents[*ri]);
            let basis = {
                let mut s = Span::new(self.p, self.dim);
                for k in 0..self.dim {
                    s.insert(self.mul(&data.idempotents[*ri], &self.basis_vector(k)));
                }
                s.into_basis()
            };
            for w in &basis {
                images.push(m.act_by(w).vec_mul(g));
            }
            blocks.push((basis, pim));
        }
        let pdim: usize = blocks.iter().map(|(b, _)| b.len()).sum();
        let map = FMatrix::from_row_vectors(self.p, m.dim, &images);
        if map.rank() != m.dim {
            return Err(Error::Invalid("projective cover is not surjective".into()));
        }
        let pmod = AlgModule {
            p: self.p,
            dim: pdim,
            act: (0..self.dim)
                .map(|k| FMatrix::direct_sum(&blocks.iter().map(|(_, b)| &b.act[k]).collect::<Vec<_>>()))
                .collect(),
        };
        let kernel = map.left_kernel_basis();
        Ok((pmod.submodule(&kernel)?, pdim))
    }

    /// Minimal projective resolution of the simple module at class `simple`.
    pub fn projective_resolution(&self, simple: usize, steps: usize, seed: u64) -> Result<Resolution> {
        let data = self.idempotent_data(seed)?;
        let rep = *data
            .representatives
            .get(simple)
            .ok_or_else(|| Error::Invalid(format!("no simple module with index {simple}")))?;
        let mut cur = AlgModule::simple(self, &data.idempotents[rep], &data.radical)?;
        let mut dims = vec![cur.dim()];
        let mut seen = vec![cur.clone()];
        let mut period = None;
        for _ in 0..steps {
            if cur.dim() == 0 {
                break;
            }
            let (next, _) = self.syzygy(&cur, &data)?;
            dims.push(next.dim());
            if period.is_none() && next.dim() > 0 {
                let k = seen.len();
                if let Some(j) = (0..k).find(|&j| seen[j].is_isomorphic(&next, seed)) {
                    period = Some((j, k - j));
                }
            }
            seen.push(next.clone());
            cur = next;
        }
        Ok(Resolution { dims, period })
    }
}
