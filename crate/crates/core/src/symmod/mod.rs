//! Symmetric group modules over GF(p) given by the right action of the
//! adjacent transpositions `s_1, …, s_{d-1}` on row vectors.

mod decompose;
mod hom;

use std::collections::HashMap;
use std::sync::Arc;

use serde_json::json;

use crate::error::{Error, Result};
use crate::field::{check_odd_prime, check_prime, FMatrix, Span};
use crate::partition::{BiWeight, Partition};

pub use decompose::{
    decompose, distinct_summands, is_isomorphic, signed_young_census, young_module, Decomposition, Summand,
};
pub use hom::{hom_space, HomSpace};
pub(crate) use hom::monomial_orbits;

/// Signed permutation data: `b_i · s_j = sign · b_{target}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Monomial {
    pub perms: Vec<Vec<(u32, bool)>>,
}

/// A module realised as a direct summand of a monomial module.
#[derive(Clone, Debug)]
pub(crate) struct Embedding {
    pub root: Arc<ModuleRep>,
    /// rows: basis of the summand in root coordinates
    pub inc: FMatrix,
    /// module map root → summand restricting to the identity
    pub proj: FMatrix,
}

#[derive(Clone, Debug)]
pub(crate) enum Shape {
    Dense,
    Monomial(Arc<Monomial>),
    Embedded(Arc<Embedding>),
}

#[derive(Clone, Debug)]
pub struct ModuleRep {
    p: u32,
    d: usize,
    dim: usize,
    gens: Vec<FMatrix>,
    grading: Option<Vec<u8>>,
    pub(crate) shape: Shape,
    label: Option<String>,
}

impl PartialEq for ModuleRep {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.d == other.d && self.gens == other.gens && self.grading == other.grading
    }
}

impl ModuleRep {
    /// Build from explicit generator matrices, checking the Coxeter relations.
    pub fn new(p: u32, d: usize, dim: usize, gens: Vec<FMatrix>, grading: Option<Vec<u8>>) -> Result<Self> {
        check_prime(p)?;
        let m = ModuleRep { p, d, dim, gens, grading, shape: Shape::Dense, label: None };
        m.check()?;
        Ok(m)
    }

    pub(crate) fn from_parts(
        p: u32,
        d: usize,
        dim: usize,
        gens: Vec<FMatrix>,
        grading: Option<Vec<u8>>,
        shape: Shape,
    ) -> Self {
        ModuleRep { p, d, dim, gens, grading, shape, label: None }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[FMatrix] {
        &self.gens
    }

    pub fn grading(&self) -> Option<&[u8]> {
        self.grading.as_deref()
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// Involution, braid and commutation relations, plus grading preservation.
    pub fn check(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::Invalid(format!("module fails {what}")));
        if self.gens.len() != self.d.saturating_sub(1) {
            return bad("generator count");
        }
        let id = FMatrix::identity(self.p, self.dim);
        for g in &self.gens {
            if g.rows() != self.dim || g.cols() != self.dim || g.p() != self.p {
                return bad("generator shape");
            }
            if g.mul(g) != id {
                return bad("involution relation");
            }
        }
        for j in 0..self.gens.len() {
            for k in j + 1..self.gens.len() {
                let (a, b) = (&self.gens[j], &self.gens[k]);
                let ok = if k == j + 1 { a.mul(b).mul(a) == b.mul(a).mul(b) } else { a.mul(b) == b.mul(a) };
                if !ok {
                    return bad("braid relation");
                }
            }
        }
        if let Some(gr) = &self.grading {
            for g in &self.gens {
                for r in 0..self.dim {
                    if (0..self.dim).any(|c| g.get(r, c) != 0 && gr[r] != gr[c]) {
                        return Err(Error::IncompatibleGrading);
                    }
                }
            }
        }
        Ok(())
    }

    /// Matrix of the transposition `(i j)` (1-indexed, `i < j`).
    pub fn transposition(&self, i: usize, j: usize) -> FMatrix {
        assert!(1 <= i && i < j && j <= self.d);
        // (i j) = s_i s_{i+1} … s_{j-2} s_{j-1} s_{j-2} … s_i
        let mut word: Vec<usize> = (i..j).collect();
        word.extend((i..j - 1).rev());
        let mut m = FMatrix::identity(self.p, self.dim);
        for k in word {
            m = m.mul(&self.gens[k - 1]);
        }
        m
    }

    /// Jucys–Murphy element `L_k = Σ_{i<k} (i k)`.
    pub fn jucys_murphy(&self, k: usize) -> FMatrix {
        let mut acc = FMatrix::zeros(self.p, self.dim, self.dim);
        for i in 1..k {
            acc.add_scaled_assign(&self.transposition(i, k), 1);
        }
        acc
    }

    /// Restriction of the action to a submodule given by basis rows.
    pub fn submodule(&self, basis: &[Vec<u32>]) -> Result<ModuleRep> {
        let mut span = Span::new(self.p, self.dim);
        for v in basis {
            if !span.insert(v.clone()) {
                return Err(Error::Invalid("submodule basis is dependent".into()));
            }
        }
        let mut gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let rows: Vec<Vec<u32>> = basis
                .iter()
                .map(|v| span.coordinates(&g.vec_mul(v)).ok_or_else(|| Error::Invalid("not a submodule".into())))
                .collect::<Result<_>>()?;
            gens.push(FMatrix::from_row_vectors(self.p, basis.len(), &rows));
        }
        let grading = self.grading.as_ref().and_then(|gr| {
            let degs: Vec<Option<u8>> = basis
                .iter()
                .map(|v| {
                    let mut it = v.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| gr[i]);
                    let first = it.next()?;
                    it.all(|g| g == first).then_some(first)
                })
                .collect();
            degs.into_iter().collect::<Option<Vec<u8>>>()
        });
        Ok(ModuleRep::from_parts(self.p, self.d, basis.len(), gens, grading, Shape::Dense))
    }

    /// Quotient by the submodule spanned by `sub` (rows).
    pub fn quotient(&self, sub: &[Vec<u32>]) -> Result<ModuleRep> {
        let mut span = Span::new(self.p, self.dim);
        for v in sub {
            span.insert(v.clone());
        }
        let sub_basis = span.basis().to_vec();
        let mut complement = Vec::new();
        for i in 0..self.dim {
            let mut e = vec![0u32; self.dim];
            e[i] = 1;
            if span.insert(e.clone()) {
                complement.push(e);
            }
        }
        let k = complement.len();
        let mut rows = complement.clone();
        rows.extend(sub_basis);
        let basis = FMatrix::from_row_vectors(self.p, self.dim, &rows);
        let inv = basis.inverse().ok_or_else(|| Error::Invalid("quotient basis".into()))?;
        let mut gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let conj = basis.mul(g).mul(&inv);
            for r in k..self.dim {
                if (0..k).any(|c| conj.get(r, c) != 0) {
                    return Err(Error::Invalid("not a submodule".into()));
                }
            }
            let idx: Vec<usize> = (0..k).collect();
            gens.push(conj.select(&idx, &idx));
        }
        Ok(ModuleRep::from_parts(self.p, self.d, k, gens, None, Shape::Dense))
    }

    pub fn direct_sum(parts: &[&ModuleRep]) -> Result<ModuleRep> {
        let first = parts.first().ok_or_else(|| Error::Invalid("empty direct sum".into()))?;
        for m in parts {
            if m.p != first.p {
                return Err(Error::FieldMismatch(first.p, m.p));
            }
            if m.d != first.d {
                return Err(Error::DegreeMismatch(first.d, m.d));
            }
        }
        let gens = (0..first.gens.len())
            .map(|j| FMatrix::direct_sum(&parts.iter().map(|m| &m.gens[j]).collect::<Vec<_>>()))
            .collect();
        let grading = parts.iter().map(|m| m.grading.clone()).collect::<Option<Vec<_>>>().map(|v| v.concat());
        let dim = parts.iter().map(|m| m.dim).sum();
        Ok(ModuleRep::from_parts(first.p, first.d, dim, gens, grading, Shape::Dense))
    }

    /// Plain JSON form `{p, d, dim, gens, grading}` with generators as flat residue arrays.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "p": self.p,
            "d": self.d,
            "dim": self.dim,
            "gens": self.gens.iter().map(|g| g.data().to_vec()).collect::<Vec<_>>(),
            "grading": self.grading,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<ModuleRep> {
        let err = |w: &str| Error::Parse(format!("module JSON: {w}"));
        let p = v["p"].as_u64().ok_or_else(|| err("p"))? as u32;
        let d = v["d"].as_u64().ok_or_else(|| err("d"))? as usize;
        let dim = v["dim"].as_u64().ok_or_else(|| err("dim"))? as usize;
        let gens_v = v["gens"].as_array().ok_or_else(|| err("gens"))?;
        let mut gens = Vec::new();
        for g in gens_v {
            let data: Vec<u32> = serde_json::from_value(g.clone()).map_err(|e| err(&e.to_string()))?;
            gens.push(FMatrix::from_vec(p, dim, dim, data)?);
        }
        let grading: Option<Vec<u8>> = serde_json::from_value(v["grading"].clone()).map_err(|e| err(&e.to_string()))?;
        ModuleRep::new(p, d, dim, gens, grading)
    }
}

/// Build a monomial module on words with letters of given parity, acted on by
/// place permutations with the super sign.
fn word_module(words: Vec<Vec<u8>>, odd: &[bool], p: u32, d: usize) -> ModuleRep {
    let index: HashMap<&[u8], usize> = words.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
    let n = words.len();
    let mut perms = Vec::with_capacity(d.saturating_sub(1));
    let mut gens = Vec::with_capacity(d.saturating_sub(1));
    for j in 0..d.saturating_sub(1) {
        let mut perm = Vec::with_capacity(n);
        let mut g = FMatrix::zeros(p, n, n);
        let mut w2 = Vec::with_capacity(d);
        for (i, w) in words.iter().enumerate() {
            w2.clear();
            w2.extend_from_slice(w);
            w2.swap(j, j + 1);
            let t = index[w2.as_slice()];
            let neg = p != 2 && odd[w[j] as usize] && odd[w[j + 1] as usize];
            perm.push((t as u32, neg));
            g.set(i, t, if neg { p - 1 } else { 1 });
        }
        perms.push(perm);
        gens.push(g);
    }
    let grading = words.iter().map(|w| (w.iter().filter(|&&c| odd[c as usize]).count() % 2) as u8).collect();
    ModuleRep::from_parts(p, d, n, gens, Some(grading), Shape::Monomial(Arc::new(Monomial { perms })))
}

/// All words of length `d` over `k` letters, lexicographic.
pub(crate) fn all_words(k: usize, d: usize) -> Vec<Vec<u8>> {
    let total = k.pow(d as u32);
    (0..total)
        .map(|mut x| {
            let mut w = vec![0u8; d];
            for slot in (0..d).rev() {
                w[slot] = (x % k) as u8;
                x /= k;
            }
            w
        })
        .collect()
}

/// Words with prescribed letter content, lexicographic.
pub(crate) fn content_words(content: &[usize]) -> Vec<Vec<u8>> {
    fn rec(left: &mut [usize], cur: &mut Vec<u8>, d: usize, out: &mut Vec<Vec<u8>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for c in 0..left.len() {
            if left[c] > 0 {
                left[c] -= 1;
                cur.push(c as u8);
                rec(left, cur, d, out);
                cur.pop();
                left[c] += 1;
            }
        }
    }
    let d = content.iter().sum();
    let mut out = Vec::new();
    rec(&mut content.to_vec(), &mut Vec::with_capacity(d), d, &mut out);
    out
}

fn parities(m: usize, n: usize) -> Vec<bool> {
    (0..m + n).map(|i| i >= m).collect()
}

/// Signed tensor space `V^{⊗d}` for `V` of dimension `(m|n)`.
pub fn tensor_space(m: usize, n: usize, d: usize, p: u32) -> Result<ModuleRep> {
    check_prime(p)?;
    if m + n == 0 || d == 0 {
        return Err(Error::Invalid("tensor space needs m+n >= 1 and d >= 1".into()));
    }
    Ok(word_module(all_words(m + n, d), &parities(m, n), p, d).with_label(format!("V({m}|{n})^{d}")))
}

/// Signed permutation module `M^{(λ|μ)}`, realised as a weight space of tensor space.
pub fn signed_perm_module(w: &BiWeight, p: u32) -> Result<ModuleRep> {
    check_prime(p)?;
    let (m, n) = (w.lambda.len(), w.mu.len());
    let mut content = w.lambda.clone();
    content.extend(&w.mu);
    Ok(word_module(content_words(&content), &parities(m, n), p, w.degree()).with_label(format!("M({w})")))
}

pub fn perm_module(lambda: &Partition, p: u32) -> Result<ModuleRep> {
    signed_perm_module(&BiWeight::new(lambda.parts().to_vec(), vec![]), p)
}

pub fn trivial_module(d: usize, p: u32) -> Result<ModuleRep> {
    signed_perm_module(&BiWeight::new(vec![d], vec![]), p)
}

pub fn sign_module(d: usize, p: u32) -> Result<ModuleRep> {
    Ok(tensor_sign(&trivial_module(d, p)?).with_label("sgn"))
}

/// `M ⊗ sgn`: every generator negated.
pub fn tensor_sign(m: &ModuleRep) -> ModuleRep {
    let gens = m.gens.iter().map(|g| g.neg()).collect();
    let shape = match &m.shape {
        Shape::Monomial(mono) => Shape::Monomial(Arc::new(Monomial {
            perms: mono.perms.iter().map(|pm| pm.iter().map(|&(t, s)| (t, s ^ (m.p != 2))).collect()).collect(),
        })),
        Shape::Embedded(e) => {
            let root = tensor_sign(&e.root);
            Shape::Embedded(Arc::new(Embedding { root: Arc::new(root), inc: e.inc.clone(), proj: e.proj.clone() }))
        }
        Shape::Dense => Shape::Dense,
    };
    let mut out = ModuleRep::from_parts(m.p, m.d, m.dim, gens, m.grading.clone(), shape);
    out.label = m.label.as_ref().map(|l| format!("{l}⊗sgn"));
    out
}

/// Row of every entry `1..=d` in a tableau given as rows of entries.
fn row_word(rows: &[Vec<usize>], d: usize) -> Vec<u8> {
    let mut w = vec![0u8; d];
    for (r, row) in rows.iter().enumerate() {
        for &e in row {
            w[e - 1] = r as u8;
        }
    }
    w
}

/// Standard tableaux of shape `λ`, each as its rows of entries.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Vec<Vec<usize>>> {
    fn rec(lambda: &Partition, rows: &mut Vec<Vec<usize>>, next: usize, n: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if next > n {
            out.push(rows.clone());
            return;
        }
        for r in 0..lambda.len() {
            let len = rows[r].len();
            if len < lambda.part(r) && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(next);
                rec(lambda, rows, next + 1, n, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); lambda.len()];
    rec(lambda, &mut rows, 1, lambda.size(), &mut out);
    out
}

fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    // (permutation, is_odd)
    if n == 0 {
        return vec![(vec![], false)];
    }
    let mut out = Vec::new();
    for (q, odd) in permutations(n - 1) {
        for pos in 0..n {
            let mut v = q.clone();
            v.insert(pos, n - 1);
            // inserting n-1 at position `pos` creates n-1-pos inversions
            out.push((v, odd ^ ((n - 1 - pos) % 2 == 1)));
        }
    }
    out
}

/// Polytabloid basis of `S^λ` inside `M^{(λ|∅)}` and the ambient module.
pub(crate) fn polytabloids(lambda: &Partition, p: u32) -> Result<(ModuleRep, Vec<Vec<u32>>)> {
    let ambient = perm_module(lambda, p)?;
    let d = lambda.size();
    let words = content_words(lambda.parts());
    let index: HashMap<Vec<u8>, usize> = words.into_iter().enumerate().map(|(i, w)| (w, i)).collect();
    let cols = lambda.transpose();
    let perms_by_len: Vec<Vec<(Vec<usize>, bool)>> = (0..=cols.part(0).max(lambda.len())).map(permutations).collect();
    let mut basis = Vec::new();
    for t in standard_tableaux(lambda) {
        let base = row_word(&t, d);
        let columns: Vec<Vec<usize>> = (0..cols.len()).map(|j| (0..cols.part(j)).map(|i| t[i][j]).collect()).collect();
        let mut v = vec![0u32; ambient.dim()];
        let mut choice = vec![0usize; columns.len()];
        loop {
            let mut w = base.clone();
            let mut odd = false;
            for (c, col) in columns.iter().enumerate() {
                let (perm, o) = &perms_by_len[col.len()][choice[c]];
                odd ^= o;
                for (r, &e) in col.iter().enumerate() {
                    w[e - 1] = perm[r] as u8;
                }
            }
            let i = index[&w];
            v[i] = (v[i] + if odd { p - 1 } else { 1 }) % p;
            let mut c = 0;
            loop {
                if c == columns.len() {
                    break;
                }
                choice[c] += 1;
                if choice[c] < perms_by_len[columns[c].len()].len() {
                    break;
                }
                choice[c] = 0;
                c += 1;
            }
            if c == columns.len() {
                break;
            }
        }
        basis.push(v);
    }
    Ok((ambient, basis))
}

/// Specht module `S^λ` on the standard polytabloid basis.
pub fn specht_module(lambda: &Partition, p: u32) -> Result<ModuleRep> {
    let (ambient, basis) = polytabloids(lambda, p)?;
    Ok(ambient.submodule(&basis)?.with_label(format!("S({lambda})")))
}

/// Gram matrix of the standard form on the polytabloid basis.
pub fn specht_gram(lambda: &Partition, p: u32) -> Result<FMatrix> {
    let (ambient, basis) = polytabloids(lambda, p)?;
    let b = FMatrix::from_row_vectors(p, ambient.dim(), &basis);
    Ok(b.mul(&b.transpose()))
}

/// Simple module `D^λ = S^λ / rad` for p-regular `λ`.
pub fn simple_module(lambda: &Partition, p: u32) -> Result<ModuleRep> {
    check_prime(p)?;
    if !lambda.is_p_regular(p as usize) {
        return Err(Error::NotPRegular(lambda.to_string(), p));
    }
    let s = specht_module(lambda, p)?;
    let rad = specht_gram(lambda, p)?.left_kernel_basis();
    Ok(s.quotient(&rad)?.with_label(format!("D({lambda})")))
}

/// Index map `t` from the basis of `V(m|n)` to that of `V(n|m)`.
fn duality_letter(i: usize, m: usize, n: usize) -> usize {
    if i < m {
        n + i
    } else {
        i - m
    }
}

/// Matrix of `τ: V^{⊗d} ⊗ sgn → Ṽ^{⊗d}` on the word bases.
pub fn duality_intertwiner(m: usize, n: usize, d: usize, p: u32) -> Result<FMatrix> {
    check_odd_prime(p)?;
    let words = all_words(m + n, d);
    let k = m + n;
    let mut t = FMatrix::zeros(p, words.len(), words.len());
    for (i, w) in words.iter().enumerate() {
        let mut target = 0usize;
        let mut exponent = 0usize;
        for (slot, &c) in w.iter().enumerate() {
            target = target * k + duality_letter(c as usize, m, n);
            if c as usize >= m {
                exponent += d - 1 - slot;
            }
        }
        t.set(i, target, if exponent % 2 == 1 { p - 1 } else { 1 });
    }
    Ok(t)
}

#[cfg(test)]
mod tests;
