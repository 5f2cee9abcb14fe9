//! Bound quiver algebras `kQ/I` for homogeneous relations, and checking that
//! elements of an algebra satisfy a presentation.
//!
//! Degree `ℓ` of `kQ/I` is built as `(N_{ℓ-1} ⊗ arrows) / R_ℓ`, where
//! `N_{ℓ-1}` is the normal basis one degree down and `R_ℓ` is spanned by
//! `u·r` for normal `u` and relations `r`; the ideal's other generators
//! already vanish in that quotient.

use std::collections::HashMap;

use crate::algebra::{GradedAlgebra, LabeledIdempotent};
use crate::error::{Error, Result};
use crate::field::{reduce, FMatrix, Rref, Span};

use super::QuiverPresentation;

/// Longest path length explored before giving up on finite dimensionality.
const MAX_LENGTH: usize = 32;
/// Largest dimension of `kQ/I` built.
const MAX_DIM: usize = 4000;

#[derive(Clone, Debug)]
pub struct PathAlgebra {
    pub algebra: GradedAlgebra,
    /// basis labels: vertex idempotents first (as `(v, [])`), then normal paths
    pub basis: Vec<(usize, Vec<usize>)>,
}

impl PathAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vertex(&self, v: usize) -> Vec<u32> {
        self.algebra.basis_vector(v)
    }

    /// The image of an arrow, as an algebra element.
    pub fn arrow(&self, a: usize) -> Vec<u32> {
        match self.basis.iter().position(|(_, w)| w.as_slice() == [a]) {
            Some(i) => self.algebra.basis_vector(i),
            None => vec![0; self.dim()],
        }
    }
}

/// One degree of `kQ/I`.
struct Layer {
    /// `(normal element one degree down, arrow)` pairs spanning this degree
    cand: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
    /// row-reduced relations in candidate coordinates
    rels: Rref,
    /// candidates kept as normal basis elements
    normal: Vec<usize>,
    /// `(source, target)` of each normal element
    ends: Vec<(usize, usize)>,
}

struct Layers {
    p: u32,
    vertices: usize,
    layers: Vec<Layer>,
}

impl Layers {
    fn size(&self, k: usize) -> usize {
        if k == 0 {
            self.vertices
        } else {
            self.layers.get(k - 1).map_or(0, |l| l.normal.len())
        }
    }

    fn ends(&self, k: usize, n: usize) -> (usize, usize) {
        if k == 0 {
            (n, n)
        } else {
            self.layers[k - 1].ends[n]
        }
    }

    /// `x · a` in candidate coordinates of degree `k + 1`.
    fn lift(&self, layer: &Layer, x: &[u32], a: usize) -> Vec<u32> {
        let mut v = vec![0u32; layer.cand.len()];
        for (n, &c) in x.iter().enumerate() {
            if c != 0 {
                if let Some(&i) = layer.index.get(&(n, a)) {
                    v[i] = (v[i] + c) % self.p;
                }
            }
        }
        v
    }

    /// Reduce candidate coordinates to normal coordinates.
    fn normalize(&self, layer: &Layer, mut v: Vec<u32>) -> Vec<u32> {
        let p = self.p;
        for (row, &piv) in layer.rels.pivots.iter().enumerate() {
            let c = v[piv];
            if c != 0 {
                let r = layer.rels.matrix.row(row);
                for (x, &y) in v.iter_mut().zip(r) {
                    *x = ((*x as u64 + (p - c) as u64 * y as u64) % p as u64) as u32;
                }
            }
        }
        layer.normal.iter().map(|&i| v[i]).collect()
    }

    /// `x · a` for `x` of degree `k`; `None` once the degree exceeds the algebra.
    fn times_arrow(&self, k: usize, x: &[u32], a: usize) -> Option<Vec<u32>> {
        let layer = self.layers.get(k)?;
        Some(self.normalize(layer, self.lift(layer, x, a)))
    }

    /// `x · w` for a path `w`.
    fn times_path(&self, k: usize, x: &[u32], w: &[usize]) -> Option<Vec<u32>> {
        let mut y = x.to_vec();
        for (t, &a) in w.iter().enumerate() {
            y = self.times_arrow(k + t, &y, a)?;
        }
        Some(y)
    }
}

fn relation_lengths(q: &QuiverPresentation) -> Result<Vec<usize>> {
    q.relations()
        .iter()
        .map(|r| {
            let mut lens = r.terms.iter().map(|(_, w)| w.len());
            let first = lens.next().unwrap_or(0);
            if lens.all(|l| l == first) {
                Ok(first)
            } else {
                Err(Error::Invalid("relations must be homogeneous in path length".into()))
            }
        })
        .collect()
}

/// Degrees `1..=max_len`; the flag reports whether `kQ/I` ended by then.
fn build_layers(q: &QuiverPresentation, p: u32, max_len: usize) -> Result<(Layers, bool)> {
    let lens = relation_lengths(q)?;
    let arrows = q.arrows();
    let mut all = Layers { p, vertices: q.vertices().len(), layers: Vec::new() };
    let mut total = all.vertices;
    for len in 1..=max_len {
        let prev = len - 1;
        let mut cand = Vec::new();
        let mut ends = Vec::new();
        for n in 0..all.size(prev) {
            let (s, t) = all.ends(prev, n);
            for (a, arrow) in arrows.iter().enumerate() {
                if arrow.source == t {
                    cand.push((n, a));
                    ends.push((s, arrow.target));
                }
            }
        }
        if cand.is_empty() {
            return Ok((all, true));
        }
        let index: HashMap<(usize, usize), usize> = cand.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut layer = Layer {
            cand,
            index,
            rels: FMatrix::zeros(p, 0, 0).rref(),
            normal: Vec::new(),
            ends: Vec::new(),
        };
        let mut gens: Vec<Vec<u32>> = Vec::new();
        for (r, &rl) in q.relations().iter().zip(&lens) {
            if rl == 0 || rl > len {
                continue;
            }
            let s = len - rl;
            let (rs, _) = q.path_ends(&r.terms[0].1)?;
            for u in 0..all.size(s) {
                if all.ends(s, u).1 != rs {
                    continue;
                }
                let mut unit = vec![0u32; all.size(s)];
                unit[u] = 1;
                let mut acc = vec![0u32; layer.cand.len()];
                for (c, w) in &r.terms {
                    let (last, init) = w.split_last().expect("nonempty term");
                    let Some(y) = all.times_path(s, &unit, init) else { continue };
                    let v = all.lift(&layer, &y, *last);
                    let c = reduce(*c, p) as u64;
                    for (x, z) in acc.iter_mut().zip(v) {
                        *x = ((*x as u64 + c * z as u64) % p as u64) as u32;
                    }
                }
                gens.push(acc);
            }
        }
        layer.rels = FMatrix::from_row_vectors(p, layer.cand.len(), &gens).rref();
        layer.normal = (0..layer.cand.len()).filter(|i| !layer.rels.pivots.contains(i)).collect();
        layer.ends = layer.normal.iter().map(|&i| ends[i]).collect();
        total += layer.normal.len();
        if total > MAX_DIM {
            return Err(Error::BudgetExceeded(format!("kQ/I has dimension > {MAX_DIM}")));
        }
        let done = layer.normal.is_empty();
        all.layers.push(layer);
        if done {
            return Ok((all, true));
        }
    }
    Ok((all, false))
}

/// `dim (kQ/I)_ℓ` for `ℓ = 0, 1, …, max_len`, stopping early once a degree vanishes.
pub fn graded_dims(q: &QuiverPresentation, p: u32, max_len: usize) -> Result<Vec<usize>> {
    crate::field::check_prime(p)?;
    let (all, _) = build_layers(q, p, max_len)?;
    Ok((0..=all.layers.len()).map(|k| all.size(k)).collect())
}

/// The algebra `kQ/I` over `GF(p)` on a basis of vertices and normal-form paths.
pub fn path_algebra(q: &QuiverPresentation, p: u32) -> Result<PathAlgebra> {
    crate::field::check_prime(p)?;
    let (all, finished) = build_layers(q, p, MAX_LENGTH)?;
    if !finished {
        return Err(Error::BudgetExceeded(format!("kQ/I has nonzero paths of length {MAX_LENGTH}")));
    }
    let nv = all.vertices;
    // (degree, index within degree) and the path spelling each basis element
    let mut slots: Vec<(usize, usize)> = (0..nv).map(|v| (0, v)).collect();
    let mut basis: Vec<(usize, Vec<usize>)> = (0..nv).map(|v| (v, Vec::new())).collect();
    let mut offsets = vec![0usize];
    for (k, layer) in all.layers.iter().enumerate() {
        offsets.push(basis.len());
        for (n, &c) in layer.normal.iter().enumerate() {
            let (prev, a) = layer.cand[c];
            let mut w = basis[offsets[k] + prev].1.clone();
            w.push(a);
            basis.push((layer.ends[n].0, w));
            slots.push((k + 1, n));
        }
    }
    let dim = basis.len();
    let mut table = Vec::with_capacity(dim * dim);
    for (xi, x) in basis.iter().enumerate() {
        let (xk, xn) = slots[xi];
        let xt = all.ends(xk, xn).1;
        for (yi, y) in basis.iter().enumerate() {
            let ys = all.ends(slots[yi].0, slots[yi].1).0;
            let entry = if xt != ys {
                Vec::new()
            } else if x.1.is_empty() {
                vec![(yi as u32, 1)]
            } else if y.1.is_empty() {
                vec![(xi as u32, 1)]
            } else {
                let mut unit = vec![0u32; all.size(xk)];
                unit[xn] = 1;
                match all.times_path(xk, &unit, &y.1) {
                    None => Vec::new(),
                    Some(z) => {
                        let off = offsets[xk + y.1.len()];
                        z.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, &c)| ((off + k) as u32, c)).collect()
                    }
                }
            };
            table.push(entry);
        }
    }
    let mut unit = vec![0u32; dim];
    unit[..nv].iter_mut().for_each(|c| *c = 1);
    let idempotents = q
        .vertices()
        .iter()
        .enumerate()
        .map(|(v, name)| {
            let mut e = vec![0u32; dim];
            e[v] = 1;
            LabeledIdempotent { label: name.clone(), element: e }
        })
        .collect();
    let algebra = GradedAlgebra::from_table(p, dim, table, unit).with_idempotents(idempotents);
    Ok(PathAlgebra { algebra, basis })
}

fn evaluate(a: &GradedAlgebra, arrows: &[Vec<u32>], terms: &[(i64, Vec<usize>)]) -> Vec<u32> {
    let p = a.p();
    let mut acc = vec![0u32; a.dim()];
    for (c, w) in terms {
        let mut x = arrows[w[0]].clone();
        for &k in &w[1..] {
            x = a.mul(&x, &arrows[k]);
        }
        acc = a.add(&acc, &a.scale(&x, reduce(*c, p)));
    }
    acc
}

fn validate_assignment(
    a: &GradedAlgebra,
    q: &QuiverPresentation,
    vertices: &[Vec<u32>],
    arrows: &[Vec<u32>],
) -> Result<()> {
    let bad = |s: String| Err(Error::InvalidAssignment(s));
    if vertices.len() != q.vertices().len() || arrows.len() != q.arrows().len() {
        return bad(format!(
            "expected {} vertices and {} arrows, got {} and {}",
            q.vertices().len(),
            q.arrows().len(),
            vertices.len(),
            arrows.len()
        ));
    }
    if vertices.iter().chain(arrows).any(|x| x.len() != a.dim()) {
        return bad("element has the wrong length".into());
    }
    let zero = vec![0u32; a.dim()];
    for (i, e) in vertices.iter().enumerate() {
        if e == &zero || !a.is_idempotent(e) {
            return bad(format!("vertex {} is not a nonzero idempotent", q.vertices()[i]));
        }
        for f in &vertices[..i] {
            if a.mul(e, f) != zero || a.mul(f, e) != zero {
                return bad("vertex idempotents are not orthogonal".into());
            }
        }
    }
    let mut rad = Span::new(a.p(), a.dim());
    for x in a.radical() {
        rad.insert(x);
    }
    for (x, arrow) in arrows.iter().zip(q.arrows()) {
        let framed = a.mul(&a.mul(&vertices[arrow.source], x), &vertices[arrow.target]);
        if &framed != x || !rad.contains(x) {
            return bad(format!("arrow {} is not a radical element of e_s A e_t", arrow.label));
        }
    }
    Ok(())
}

/// All relations hold for the assignment and `dim A = dim kQ/I`.
pub fn check_relations(
    a: &GradedAlgebra,
    q: &QuiverPresentation,
    vertices: &[Vec<u32>],
    arrows: &[Vec<u32>],
) -> Result<bool> {
    validate_assignment(a, q, vertices, arrows)?;
    let zero = vec![0u32; a.dim()];
    if q.relations().iter().any(|r| evaluate(a, arrows, &r.terms) != zero) {
        return Ok(false);
    }
    Ok(path_algebra(q, a.p())?.dim() == a.dim())
}

/// [`check_relations`] together with surjectivity of `kQ/I → A`, so the
/// assignment is an isomorphism.
pub fn is_presentation(
    a: &GradedAlgebra,
    q: &QuiverPresentation,
    vertices: &[Vec<u32>],
    arrows: &[Vec<u32>],
) -> Result<bool> {
    if !check_relations(a, q, vertices, arrows)? {
        return Ok(false);
    }
    let pa = path_algebra(q, a.p())?;
    let mut span = Span::new(a.p(), a.dim());
    for (v, w) in &pa.basis {
        let x = if w.is_empty() { vertices[*v].clone() } else { evaluate(a, arrows, &[(1, w.clone())]) };
        span.insert(x);
    }
    Ok(span.dim() == a.dim())
}

/// A nonzero element of `x J y` outside `x J² y`, if one exists.
fn top_element(a: &GradedAlgebra, x: &[u32], y: &[u32], j: &[Vec<u32>], j2: &[Vec<u32>]) -> Option<Vec<u32>> {
    let mut low = Span::new(a.p(), a.dim());
    for z in j2 {
        low.insert(a.mul(&a.mul(x, z), y));
    }
    j.iter().map(|z| a.mul(&a.mul(x, z), y)).find(|z| !low.contains(z))
}

/// `c` with `c·w = u`, if `u` is a multiple of `w`.
fn ratio(u: &[u32], w: &[u32], p: u32) -> Option<u32> {
    let k = w.iter().position(|&c| c != 0)?;
    let c = (u[k] as u64 * crate::field::inv_mod(w[k], p) as u64 % p as u64) as u32;
    u.iter().zip(w).all(|(&a, &b)| a as u64 == c as u64 * b as u64 % p as u64).then_some(c)
}

/// Elements realising the chain quiver of [`super::a_tilde`] on idempotents
/// listed along the chain, rescaled so that `β_iα_i = α_{i+1}β_{i+1}`.
/// Returns arrows in `α_1, …, α_m, β_1, …, β_m` order.
pub fn chain_assignment(a: &GradedAlgebra, chain: &[Vec<u32>]) -> Option<Vec<Vec<u32>>> {
    let m = chain.len().checked_sub(1)?;
    let j = a.radical();
    let j2 = a.product_space(&j, &j);
    let mut alpha = Vec::with_capacity(m);
    let mut beta = Vec::with_capacity(m);
    for i in 1..=m {
        alpha.push(top_element(a, &chain[i - 1], &chain[i], &j, &j2)?);
        beta.push(top_element(a, &chain[i], &chain[i - 1], &j, &j2)?);
    }
    for i in 0..m.saturating_sub(1) {
        let u = a.mul(&beta[i], &alpha[i]);
        let w = a.mul(&alpha[i + 1], &beta[i + 1]);
        let c = ratio(&u, &w, a.p()).filter(|&c| c != 0)?;
        beta[i + 1] = a.scale(&beta[i + 1], c);
    }
    alpha.extend(beta);
    Some(alpha)
}
