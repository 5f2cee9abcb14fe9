//! Krull–Schmidt decomposition and isomorphism tests.

use std::collections::HashMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::GradedAlgebra;
use crate::error::{Error, Result};
use crate::field::FMatrix;
use crate::partition::{partitions, BiWeight, Partition};

use super::hom::{hom_space, rooted};
use super::{perm_module, Embedding, ModuleRep, Shape};

const FITTING_TRIES: usize = 12;

#[derive(Clone, Debug)]
pub struct Summand {
    pub module: ModuleRep,
    pub multiplicity: usize,
    pub end_dim: usize,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    /// every indecomposable piece, in the order found
    pub pieces: Vec<ModuleRep>,
    /// isomorphism class of each piece
    pub classes: Vec<usize>,
    /// one representative per class
    pub summands: Vec<Summand>,
}

impl Decomposition {
    pub fn as_pairs(&self) -> Vec<(ModuleRep, usize)> {
        self.summands.iter().map(|s| (s.module.clone(), s.multiplicity)).collect()
    }

    /// `(dim, multiplicity)` per class, sorted.
    pub fn signature(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> = self.summands.iter().map(|s| (s.module.dim(), s.multiplicity)).collect();
        v.sort_unstable();
        v
    }
}

/// Piece of a module `M` given by inclusion rows and a module projection, in `M` coordinates.
struct Piece {
    inc: FMatrix,
    proj: FMatrix,
}

fn piece_module(m: &ModuleRep, piece: &Piece) -> ModuleRep {
    let gens: Vec<FMatrix> = m.gens().iter().map(|g| piece.inc.mul(g).mul(&piece.proj)).collect();
    let grading = m.grading().and_then(|gr| {
        (0..piece.inc.rows())
            .map(|r| {
                let mut degs = piece.inc.row(r).iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| gr[i]);
                let first = degs.next()?;
                degs.all(|x| x == first).then_some(first)
            })
            .collect::<Option<Vec<u8>>>()
    });
    let shape = match rooted(m) {
        Some((root, None)) => {
            Shape::Embedded(Arc::new(Embedding { root: Arc::new(root), inc: piece.inc.clone(), proj: piece.proj.clone() }))
        }
        Some((root, Some((inc, proj)))) => Shape::Embedded(Arc::new(Embedding {
            root: Arc::new(root),
            inc: piece.inc.mul(&inc),
            proj: proj.mul(&piece.proj),
        })),
        None => Shape::Dense,
    };
    ModuleRep::from_parts(m.p(), m.degree(), piece.inc.rows(), gens, grading, shape)
}

/// Split a piece along complementary submodules given by bases (rows, in piece coordinates).
fn split_piece(parent: &Piece, parts: &[Vec<Vec<u32>>], p: u32) -> Vec<Piece> {
    let rows: Vec<Vec<u32>> = parts.iter().flatten().cloned().collect();
    let n = rows.len();
    let basis = FMatrix::from_row_vectors(p, n, &rows);
    let inv = basis.inverse().expect("complementary submodules");
    let all: Vec<usize> = (0..n).collect();
    let mut start = 0;
    parts
        .iter()
        .map(|r| {
            let cols: Vec<usize> = (start..start + r.len()).collect();
            start += r.len();
            Piece {
                inc: FMatrix::from_row_vectors(p, n, r).mul(&parent.inc),
                proj: parent.proj.mul(&inv.select(&all, &cols)),
            }
        })
        .collect()
}

fn random_endomorphism(basis: &[FMatrix], rng: &mut ChaCha8Rng, p: u32) -> FMatrix {
    let mut acc = FMatrix::zeros(p, basis[0].rows(), basis[0].cols());
    for x in basis {
        acc.add_scaled_assign(x, rng.gen_range(0..p));
    }
    acc
}

/// Try a Fitting decomposition `Y = im ψ^N ⊕ ker ψ^N` for `ψ = φ - c`.
fn fitting_split(end: &[FMatrix], rng: &mut ChaCha8Rng, p: u32) -> Option<(Vec<Vec<u32>>, Vec<Vec<u32>>)> {
    let n = end[0].rows();
    for _ in 0..FITTING_TRIES {
        let phi = random_endomorphism(end, rng, p);
        for c in 0..p.min(64) {
            let psi = phi.sub(&FMatrix::scalar(p, n, c));
            if psi.is_invertible() {
                continue;
            }
            let power = psi.pow(n as u64);
            let im = power.row_space_basis();
            if im.is_empty() {
                continue;
            }
            let ker = power.left_kernel_basis();
            return Some((im, ker));
        }
    }
    None
}

/// `dim End(Y) - dim rad End(Y)`; equals 1 exactly for indecomposable `Y`.
fn end_residue(end: &[FMatrix], p: u32) -> Result<(usize, GradedAlgebra)> {
    let alg = GradedAlgebra::from_matrices(p, end.to_vec())?;
    let r = alg.radical().len();
    Ok((end.len() - r, alg))
}

fn decompose_pieces(m: &ModuleRep, seed: u64) -> Result<Vec<(Piece, usize)>> {
    let p = m.p();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = m.dim();
    let mut todo = vec![Piece { inc: FMatrix::identity(p, n), proj: FMatrix::identity(p, n) }];
    let mut done = Vec::new();
    while let Some(piece) = todo.pop() {
        if piece.inc.rows() == 0 {
            continue;
        }
        let y = piece_module(m, &piece);
        let end = hom_space(&y, &y)?.basis;
        if end.len() == 1 {
            done.push((piece, 1));
            continue;
        }
        if let Some((u, w)) = fitting_split(&end, &mut rng, p) {
            todo.extend(split_piece(&piece, &[u, w], p));
            continue;
        }
        let (residue, alg) = end_residue(&end, p)?;
        if residue == 1 {
            done.push((piece, end.len()));
            continue;
        }
        // fall back to primitive idempotents of the endomorphism ring
        let es = alg.primitive_idempotents(rng.gen())?;
        let images: Vec<Vec<Vec<u32>>> = es
            .iter()
            .map(|e| {
                let mut acc = FMatrix::zeros(p, y.dim(), y.dim());
                for (x, &c) in end.iter().zip(e) {
                    acc.add_scaled_assign(x, c);
                }
                acc.row_space_basis()
            })
            .collect();
        todo.extend(split_piece(&piece, &images, p));
    }
    Ok(done)
}

/// Isomorphism test for modules with local endomorphism rings.
pub(crate) fn indecomposables_isomorphic(a: &ModuleRep, b: &ModuleRep) -> Result<bool> {
    if a.dim() != b.dim() {
        return Ok(false);
    }
    let ab = hom_space(a, b)?.basis;
    if ab.is_empty() {
        return Ok(false);
    }
    let ba = hom_space(b, a)?.basis;
    for u in &ab {
        for v in &ba {
            if u.mul(v).is_invertible() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Decompose into indecomposables, grouped by isomorphism class.
pub fn decompose(m: &ModuleRep, seed: u64) -> Result<Decomposition> {
    let pieces = decompose_pieces(m, seed)?;
    let base = m.label().unwrap_or("M").to_string();
    let modules: Vec<(ModuleRep, usize)> = pieces
        .iter()
        .enumerate()
        .map(|(i, (pc, e))| (piece_module(m, pc).with_label(format!("{base}[{i}]")), *e))
        .collect();
    let mut classes = vec![usize::MAX; modules.len()];
    let mut summands: Vec<Summand> = Vec::new();
    for i in 0..modules.len() {
        if classes[i] != usize::MAX {
            continue;
        }
        let c = summands.len();
        classes[i] = c;
        let mut mult = 1;
        for j in i + 1..modules.len() {
            if classes[j] == usize::MAX
                && modules[j].1 == modules[i].1
                && indecomposables_isomorphic(&modules[i].0, &modules[j].0)?
            {
                classes[j] = c;
                mult += 1;
            }
        }
        summands.push(Summand { module: modules[i].0.clone(), multiplicity: mult, end_dim: modules[i].1 });
    }
    Ok(Decomposition { pieces: modules.into_iter().map(|x| x.0).collect(), classes, summands })
}

/// `M ≅ N`: search for an invertible intertwiner, falling back to comparing
/// Krull–Schmidt decompositions.
pub fn is_isomorphic(m: &ModuleRep, n: &ModuleRep, seed: u64) -> Result<bool> {
    if m.p() != n.p() {
        return Err(Error::FieldMismatch(m.p(), n.p()));
    }
    if m.degree() != n.degree() {
        return Err(Error::DegreeMismatch(m.degree(), n.degree()));
    }
    if m.dim() != n.dim() {
        return Ok(false);
    }
    if m.dim() == 0 {
        return Ok(true);
    }
    let hom = hom_space(m, n)?;
    if hom.basis.is_empty() {
        return Ok(false);
    }
    if crate::algebra::find_invertible_matrix(&hom.basis, m.p(), seed).is_some() {
        return Ok(true);
    }
    if (m.p() as f64).powi(hom.dim() as i32) <= 4096.0 {
        return Ok(false);
    }
    let dm = decompose(m, seed)?;
    let dn = decompose(n, seed)?;
    if dm.signature() != dn.signature() {
        return Ok(false);
    }
    let mut used = vec![false; dn.summands.len()];
    for s in &dm.summands {
        let mut matched = false;
        for (k, t) in dn.summands.iter().enumerate() {
            if !used[k] && t.multiplicity == s.multiplicity && indecomposables_isomorphic(&s.module, &t.module)? {
                used[k] = true;
                matched = true;
                break;
            }
        }
        if !matched {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One representative per isomorphism class of indecomposable summands of
/// the given modules, in order of first appearance.
pub fn distinct_summands(modules: &[ModuleRep], seed: u64) -> Result<Vec<ModuleRep>> {
    let mut reps: Vec<ModuleRep> = Vec::new();
    for m in modules {
        for s in decompose(m, seed)?.summands {
            let mut new = true;
            for r in reps.iter().filter(|r| r.dim() == s.module.dim()) {
                if is_isomorphic(r, &s.module, seed)? {
                    new = false;
                    break;
                }
            }
            if new {
                reps.push(s.module);
            }
        }
    }
    Ok(reps)
}

/// Signed Young modules of degree `d`: the distinct indecomposable summands
/// of `M^{(λ|μ)}` over pairs of partitions with `|λ| + |μ| = d`.
pub fn signed_young_census(d: usize, p: u32, seed: u64) -> Result<Vec<ModuleRep>> {
    let mut modules = Vec::new();
    for k in (0..=d).rev() {
        for lambda in partitions(k) {
            for mu in partitions(d - k) {
                let w = BiWeight::new(lambda.parts().to_vec(), mu.parts().to_vec());
                modules.push(super::signed_perm_module(&w, p)?.with_label(w.to_string()));
            }
        }
    }
    distinct_summands(&modules, seed)
}

/// Young module `Y^λ`: the summand of `M^λ` not found in any `M^ν`, `ν ⊳ λ`.
pub fn young_module(lambda: &Partition, p: u32, seed: u64) -> Result<ModuleRep> {
    let mut cache: HashMap<Partition, Decomposition> = HashMap::new();
    young_module_cached(lambda, p, seed, &mut cache)
}

pub(crate) fn young_module_cached(
    lambda: &Partition,
    p: u32,
    seed: u64,
    cache: &mut HashMap<Partition, Decomposition>,
) -> Result<ModuleRep> {
    let d = lambda.size();
    let get = |nu: &Partition, cache: &mut HashMap<Partition, Decomposition>| -> Result<Decomposition> {
        if let Some(x) = cache.get(nu) {
            return Ok(x.clone());
        }
        let dec = decompose(&perm_module(nu, p)?, seed)?;
        cache.insert(nu.clone(), dec.clone());
        Ok(dec)
    };
    let own = get(lambda, cache)?;
    let mut higher: Vec<ModuleRep> = Vec::new();
    for nu in partitions(d) {
        if nu != *lambda && nu.dominates(lambda)? {
            higher.extend(get(&nu, cache)?.summands.into_iter().map(|s| s.module));
        }
    }
    let mut found = Vec::new();
    for s in &own.summands {
        let mut seen = false;
        for h in &higher {
            if indecomposables_isomorphic(&s.module, h)? {
                seen = true;
                break;
            }
        }
        if !seen {
            found.push(s.module.clone());
        }
    }
    match found.len() {
        1 => Ok(found.pop().unwrap().with_label(format!("Y({lambda})"))),
        k => Err(Error::Invalid(format!("expected one new summand of M({lambda}), found {k}"))),
    }
}
