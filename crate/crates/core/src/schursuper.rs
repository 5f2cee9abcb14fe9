//! The Schur superalgebra `S(m|n,d) = End_{Σ_d}(V^{⊗d})`, assembled block by
//! block over the weight decomposition of tensor space.
//!
//! The basis consists of the sign-consistent orbit sums of `Σ_d` on matrix
//! positions of `Hom(M^{w}, M^{w'})`; the first entry of every orbit has
//! coefficient `+1`, so coordinates are read off at those positions.

use crate::algebra::{GradedAlgebra, LabeledIdempotent};
use crate::error::{Error, Result};
use crate::field::{check_odd_prime, check_prime, FMatrix};
use crate::partition::{enumerate_biweights, BiWeight};
use crate::symmod::{hom_space, signed_perm_module, ModuleRep, Shape};

/// Largest `Σ dim M^w · dim M^{w'}` (that is `(m+n)^{2d}`) accepted.
pub const MAX_UNKNOWNS: usize = 600_000;
/// Largest dimension for which structure constants are materialized.
pub const MAX_MATERIALIZED: usize = 2000;

/// Orbit basis element: block `(source, target)` and `(row, col, negated)` entries.
#[derive(Clone, Debug)]
struct Orbit {
    source: usize,
    target: usize,
    entries: Vec<(u32, u32, bool)>,
}

/// Orbit data of `S(m|n,d)` without structure constants.
#[derive(Clone, Debug)]
pub struct SchurSuper {
    pub m: usize,
    pub n: usize,
    pub d: usize,
    pub p: u32,
    pub weights: Vec<BiWeight>,
    sizes: Vec<usize>,
    orbits: Vec<Orbit>,
    /// per block `(s, t)`: `Some((orbit, negated))` for each position
    lookup: Vec<Vec<Option<(u32, bool)>>>,
}

fn monomial_of(m: &ModuleRep) -> &crate::symmod::Monomial {
    match &m.shape {
        Shape::Monomial(mono) => mono,
        _ => unreachable!("signed permutation modules are monomial"),
    }
}

impl SchurSuper {
    pub fn new(m: usize, n: usize, d: usize, p: u32) -> Result<Self> {
        check_prime(p)?;
        if m + n == 0 || d == 0 {
            return Err(Error::Invalid("need m+n >= 1 and d >= 1".into()));
        }
        let unknowns = ((m + n) as u128).pow(2 * d as u32);
        if unknowns > MAX_UNKNOWNS as u128 {
            return Err(Error::BudgetExceeded(format!("(m+n)^(2d) = {unknowns} hom unknowns")));
        }
        let weights = enumerate_biweights(m, n, d);
        let modules: Vec<ModuleRep> = weights.iter().map(|w| signed_perm_module(w, p)).collect::<Result<_>>()?;
        let sizes: Vec<usize> = modules.iter().map(|x| x.dim()).collect();
        let k = weights.len();
        let mut orbits = Vec::new();
        let mut lookup = Vec::with_capacity(k * k);
        for s in 0..k {
            for t in 0..k {
                let vs = crate::symmod::monomial_orbits(monomial_of(&modules[s]), monomial_of(&modules[t]), sizes[s], sizes[t], p != 2);
                let mut table = vec![None; sizes[s] * sizes[t]];
                for entries in vs {
                    let id = orbits.len() as u32;
                    for &(i, j, neg) in &entries {
                        table[i as usize * sizes[t] + j as usize] = Some((id, neg));
                    }
                    orbits.push(Orbit { source: s, target: t, entries });
                }
                lookup.push(table);
            }
        }
        Ok(SchurSuper { m, n, d, p, weights, sizes, orbits, lookup })
    }

    pub fn dim(&self) -> usize {
        self.orbits.len()
    }

    fn weight_parity(&self, w: usize) -> u8 {
        (self.weights[w].odd_degree() % 2) as u8
    }

    /// Parity of each basis element.
    pub fn grading(&self) -> Vec<u8> {
        self.orbits.iter().map(|o| (self.weight_parity(o.source) + self.weight_parity(o.target)) % 2).collect()
    }

    pub fn even_dim(&self) -> usize {
        self.grading().iter().filter(|&&g| g == 0).count()
    }

    /// Basis index of the identity of `M^w`.
    pub fn weight_idempotent_index(&self, w: usize) -> usize {
        let k = self.weights.len();
        self.lookup[w * k + w][0].expect("identity orbit").0 as usize
    }

    /// Position of each weight's words inside the word basis of tensor space.
    fn word_offsets(&self) -> Vec<usize> {
        let mut off = vec![0; self.sizes.len()];
        for w in 1..self.sizes.len() {
            off[w] = off[w - 1] + self.sizes[w - 1];
        }
        off
    }

    /// Global word indices `(row, col, negated)` of a basis element, rows and
    /// columns indexed by weight-ordered words.
    fn global_entries(&self, k: usize) -> Vec<(usize, usize, bool)> {
        let off = self.word_offsets();
        let o = &self.orbits[k];
        o.entries.iter().map(|&(i, j, neg)| (off[o.source] + i as usize, off[o.target] + j as usize, neg)).collect()
    }

    /// Weight-ordered word list of tensor space.
    pub fn words(&self) -> Vec<Vec<u8>> {
        self.weights
            .iter()
            .flat_map(|w| {
                let mut content = w.lambda.clone();
                content.extend(&w.mu);
                crate::symmod::content_words(&content)
            })
            .collect()
    }

    /// The basis element as a matrix on `V^{⊗d}` in weight-ordered word coordinates.
    pub fn element_matrix(&self, k: usize) -> FMatrix {
        let n = self.sizes.iter().sum();
        let mut x = FMatrix::zeros(self.p, n, n);
        for (i, j, neg) in self.global_entries(k) {
            x.set(i, j, if neg { self.p - 1 } else { 1 });
        }
        x
    }

    /// Structure constants of `eSe` for `e` the sum of the kept weight
    /// idempotents, indexed `X * dim + Y` over the kept orbits.
    fn table(&self, keep: &[bool], index: &[Option<u32>], dim: usize) -> Vec<Vec<(u32, u32)>> {
        let k = self.weights.len();
        let p = self.p;
        let mut table: Vec<Vec<(u32, u32)>> = vec![Vec::new(); dim * dim];
        for o in &self.orbits {
            let (s, u) = (o.source, o.target);
            if !keep[s] || !keep[u] {
                continue;
            }
            let (i0, j0, _) = o.entries[0];
            let z = index[self.lookup[s * k + u][i0 as usize * self.sizes[u] + j0 as usize].expect("orbit").0 as usize]
                .expect("kept");
            for t in (0..k).filter(|&t| keep[t]) {
                let left = &self.lookup[s * k + t];
                let right = &self.lookup[t * k + u];
                let (nt, nu) = (self.sizes[t], self.sizes[u]);
                for mid in 0..nt {
                    let (Some((x, sx)), Some((y, sy))) =
                        (left[i0 as usize * nt + mid], right[mid * nu + j0 as usize])
                    else {
                        continue;
                    };
                    let c = if sx ^ sy { p - 1 } else { 1 };
                    let (x, y) = (index[x as usize].expect("kept"), index[y as usize].expect("kept"));
                    let cell = &mut table[x as usize * dim + y as usize];
                    match cell.iter_mut().find(|e| e.0 == z) {
                        Some(e) => e.1 = (e.1 + c) % p,
                        None => cell.push((z, c % p)),
                    }
                }
            }
        }
        for cell in &mut table {
            cell.retain(|e| e.1 != 0);
            cell.sort_unstable();
        }
        table
    }

    /// The corner `eSe` for `e` the sum of the idempotents of `weights`
    /// (indices into `self.weights`).
    pub fn corner(&self, weights: &[usize]) -> Result<GradedAlgebra> {
        let mut keep = vec![false; self.weights.len()];
        for &w in weights {
            *keep.get_mut(w).ok_or_else(|| Error::Invalid(format!("weight index {w}")))? = true;
        }
        let mut index = vec![None; self.dim()];
        let mut kept = Vec::new();
        for (z, o) in self.orbits.iter().enumerate() {
            if keep[o.source] && keep[o.target] {
                index[z] = Some(kept.len() as u32);
                kept.push(z);
            }
        }
        let dim = kept.len();
        if dim > MAX_MATERIALIZED {
            return Err(Error::BudgetExceeded(format!("dim = {dim} > {MAX_MATERIALIZED}")));
        }
        let mut unit = vec![0u32; dim];
        let mut idempotents = Vec::new();
        for w in (0..self.weights.len()).filter(|&w| keep[w]) {
            let i = index[self.weight_idempotent_index(w)].expect("kept") as usize;
            unit[i] = 1;
            let mut e = vec![0u32; dim];
            e[i] = 1;
            idempotents.push(LabeledIdempotent { label: self.weights[w].to_string(), element: e });
        }
        let full = self.grading();
        let grading = kept.iter().map(|&z| full[z]).collect();
        let mut alg = GradedAlgebra::from_table(self.p, dim, self.table(&keep, &index, dim), unit).with_idempotents(idempotents);
        if keep.iter().all(|&x| x) && self.sizes.iter().sum::<usize>() < dim {
            alg = alg.with_rep((0..dim).map(|k| self.element_matrix(k)).collect());
        }
        alg.with_grading(grading)
    }

    /// Semisimplicity of the corner for `weights`, decided on the corners of
    /// one or two weights: `rad(eSe) = e rad(S) e` and the radical is the sum
    /// of its pieces `e_s rad(S) e_t`.
    pub fn corner_semisimple(&self, weights: &[usize]) -> Result<bool> {
        for (i, &a) in weights.iter().enumerate() {
            for &b in &weights[i..] {
                let sub: Vec<usize> = if a == b { vec![a] } else { vec![a, b] };
                if !self.corner(&sub)?.is_semisimple() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Materialize as a graded algebra with the weight idempotents labeled.
    pub fn algebra(&self) -> Result<GradedAlgebra> {
        self.corner(&(0..self.weights.len()).collect::<Vec<_>>())
    }

    /// Weights with both sides non-increasing; every `M^w` is isomorphic to
    /// one of these, so the corner they cut out is Morita equivalent to `S`.
    pub fn sorted_weights(&self) -> Vec<usize> {
        let sorted = |v: &[usize]| v.windows(2).all(|w| w[0] >= w[1]);
        (0..self.weights.len()).filter(|&w| sorted(&self.weights[w].lambda) && sorted(&self.weights[w].mu)).collect()
    }

    /// Morita-reduced form of `S(m|n,d)`.
    pub fn basic_corner(&self) -> Result<GradedAlgebra> {
        self.corner(&self.sorted_weights())
    }

    fn weight_index(&self, w: &BiWeight) -> Option<usize> {
        self.weights.iter().position(|x| x == w)
    }
}

/// `S(m|n,d)` over `GF(p)` as a graded algebra.
pub fn schur_super(m: usize, n: usize, d: usize, p: u32) -> Result<GradedAlgebra> {
    SchurSuper::new(m, n, d, p)?.algebra()
}

/// Coefficient of `t^d` in `(1+t)^{2mn} / (1-t)^{m²+n²}`.
pub fn dim_formula(m: usize, n: usize, d: usize) -> u128 {
    let binom = |a: u128, b: u128| -> u128 {
        if b > a {
            return 0;
        }
        let mut r = 1u128;
        for i in 0..b {
            r = r * (a - i) / (i + 1);
        }
        r
    };
    let odd = (2 * m * n) as u128;
    let even = (m * m + n * n) as u128;
    (0..=d as u128)
        .map(|k| {
            let rest = d as u128 - k;
            let series = if even == 0 { u128::from(rest == 0) } else { binom(even + rest - 1, rest) };
            binom(odd, k) * series
        })
        .sum()
}

fn hom_stack(basis: &[FMatrix], p: u32) -> (FMatrix, Vec<usize>) {
    let cols = basis.first().map_or(0, |x| x.rows() * x.cols());
    let rows: Vec<Vec<u32>> = basis.iter().map(|x| x.data().to_vec()).collect();
    let r = FMatrix::from_row_vectors(p, cols, &rows).rref();
    let reduced = r.matrix.select(&(0..r.rank).collect::<Vec<_>>(), &(0..cols).collect::<Vec<_>>());
    (reduced, r.pivots)
}

/// Block of `End(⊕ M_i)`: basis of `Hom(M_i, M_j)` in reduced row form, so
/// coordinates are the entries at the pivot positions.
struct HomBlock {
    basis: Vec<FMatrix>,
    pivots: Vec<usize>,
    parity: Vec<u8>,
}

fn hom_block(a: &ModuleRep, b: &ModuleRep) -> Result<HomBlock> {
    let p = a.p();
    let raw = hom_space(a, b)?.basis;
    let (ra, ca) = (a.dim(), b.dim());
    let mut parts: Vec<(Vec<FMatrix>, u8)> = Vec::new();
    match (a.grading(), b.grading()) {
        (Some(ga), Some(gb)) => {
            let mut even = Vec::new();
            let mut odd = Vec::new();
            for x in &raw {
                let (mut e, mut o) = (x.clone(), x.clone());
                for i in 0..ra {
                    for j in 0..ca {
                        if ga[i] == gb[j] {
                            o.set(i, j, 0);
                        } else {
                            e.set(i, j, 0);
                        }
                    }
                }
                even.push(e);
                odd.push(o);
            }
            parts.push((even, 0));
            parts.push((odd, 1));
        }
        _ => parts.push((raw, 0)),
    }
    let mut basis = Vec::new();
    let mut pivots = Vec::new();
    let mut parity = Vec::new();
    for (mats, g) in parts {
        if mats.is_empty() {
            continue;
        }
        let (reduced, piv) = hom_stack(&mats, p);
        for (r, &c) in piv.iter().enumerate() {
            basis.push(FMatrix::from_vec(p, ra, ca, reduced.row(r).to_vec())?);
            pivots.push(c);
            parity.push(g);
        }
    }
    Ok(HomBlock { basis, pivots, parity })
}

/// `End(⊕ M_i)` with the projection onto each summand as a labeled idempotent.
/// Graded when every summand carries a grading.
pub fn end_of_summands(modules: &[ModuleRep]) -> Result<GradedAlgebra> {
    let first = modules.first().ok_or_else(|| Error::Invalid("no modules".into()))?;
    let (p, d) = (first.p(), first.degree());
    for m in modules {
        if m.p() != p {
            return Err(Error::FieldMismatch(p, m.p()));
        }
        if m.degree() != d {
            return Err(Error::DegreeMismatch(d, m.degree()));
        }
    }
    let k = modules.len();
    let mut blocks = Vec::with_capacity(k * k);
    let mut offsets = Vec::with_capacity(k * k);
    let mut dim = 0;
    for a in modules {
        for b in modules {
            let blk = hom_block(a, b)?;
            offsets.push(dim);
            dim += blk.basis.len();
            blocks.push(blk);
        }
    }
    let graded = modules.iter().all(|m| m.grading().is_some());
    let mut table: Vec<Vec<(u32, u32)>> = vec![Vec::new(); dim * dim];
    for i in 0..k {
        for j in 0..k {
            let x_blk = &blocks[i * k + j];
            for l in 0..k {
                let y_blk = &blocks[j * k + l];
                let z_blk = &blocks[i * k + l];
                let cols = modules[l].dim();
                for (xa, x) in x_blk.basis.iter().enumerate() {
                    for (yb, y) in y_blk.basis.iter().enumerate() {
                        let entry: Vec<(u32, u32)> = z_blk
                            .pivots
                            .iter()
                            .enumerate()
                            .filter_map(|(zc, &pos)| {
                                let (r, c) = (pos / cols, pos % cols);
                                let v = x.row(r).iter().enumerate().fold(0u64, |acc, (t, &e)| {
                                    (acc + e as u64 * y.get(t, c) as u64) % p as u64
                                }) as u32;
                                (v != 0).then_some(((offsets[i * k + l] + zc) as u32, v))
                            })
                            .collect();
                        table[(offsets[i * k + j] + xa) * dim + offsets[j * k + l] + yb] = entry;
                    }
                }
            }
        }
    }
    let mut unit = vec![0u32; dim];
    let mut idempotents = Vec::with_capacity(k);
    for (i, m) in modules.iter().enumerate() {
        let blk = &blocks[i * k + i];
        let id = FMatrix::identity(p, m.dim());
        let mut e = vec![0u32; dim];
        for (zc, &pos) in blk.pivots.iter().enumerate() {
            e[offsets[i * k + i] + zc] = id.data()[pos];
            unit[offsets[i * k + i] + zc] = id.data()[pos];
        }
        let label = m.label().map_or_else(|| format!("M{i}"), str::to_string);
        idempotents.push(LabeledIdempotent { label, element: e });
    }
    let alg = GradedAlgebra::from_table(p, dim, table, unit).with_idempotents(idempotents);
    if graded {
        let grading = blocks.iter().flat_map(|b| b.parity.iter().copied()).collect();
        alg.with_grading(grading)
    } else {
        Ok(alg)
    }
}

/// Signed correspondence between two orbit bases: `k ↦ (k', negated)`.
fn orbit_map(
    src: &SchurSuper,
    dst: &SchurSuper,
    pos: impl Fn(usize, usize) -> Option<(usize, usize, bool)>,
) -> Option<Vec<(usize, bool)>> {
    let dst_off = dst.word_offsets();
    let locate = |i: usize, j: usize| -> Option<(u32, bool)> {
        let s = dst_off.iter().rposition(|&o| o <= i)?;
        let t = dst_off.iter().rposition(|&o| o <= j)?;
        let k = dst.weights.len();
        dst.lookup[s * k + t][(i - dst_off[s]) * dst.sizes[t] + (j - dst_off[t])]
    };
    let mut map = Vec::with_capacity(src.dim());
    for k in 0..src.dim() {
        let entries = src.global_entries(k);
        let mut image: Option<(u32, bool)> = None;
        for &(i, j, neg) in &entries {
            let (a, b, flip) = pos(i, j)?;
            let (z, zneg) = locate(a, b)?;
            let sign = neg ^ flip ^ zneg;
            match image {
                None => image = Some((z, sign)),
                Some(prev) if prev != (z, sign) => return None,
                _ => {}
            }
        }
        let (z, sign) = image?;
        if dst.orbits[z as usize].entries.len() != entries.len() {
            return None;
        }
        map.push((z as usize, sign));
    }
    Some(map)
}

/// Structure constants agree under a signed basis map.
fn tables_match(a: &GradedAlgebra, b: &GradedAlgebra, map: &[(usize, bool)]) -> bool {
    let p = a.p();
    let signed = |v: u32, neg: bool| if neg && v != 0 { p - v } else { v };
    for x in 0..a.dim() {
        for y in 0..a.dim() {
            let prod = a.basis_product(x, y);
            let mut mapped = vec![0u32; b.dim()];
            for (z, &c) in prod.iter().enumerate() {
                if c != 0 {
                    let (zz, zs) = map[z];
                    mapped[zz] = signed(c, zs);
                }
            }
            let (xx, xs) = map[x];
            let (yy, ys) = map[y];
            let target: Vec<u32> = b.basis_product(xx, yy).iter().map(|&c| signed(c, xs ^ ys)).collect();
            if mapped != target {
                return false;
            }
        }
    }
    true
}

/// `S(m|n,d) ≅ S(n|m,d)` through conjugation by `τ`: every orbit basis element
/// maps to a signed orbit basis element, bijectively, preserving parity and
/// structure constants.
pub fn verify_duality(m: usize, n: usize, d: usize, p: u32) -> Result<bool> {
    check_odd_prime(p)?;
    let src = SchurSuper::new(m, n, d, p)?;
    let dst = SchurSuper::new(n, m, d, p)?;
    if src.dim() != dst.dim() {
        return Ok(false);
    }
    let t = crate::symmod::duality_intertwiner(m, n, d, p)?;
    // τ on the lexicographic word basis; translate to weight-ordered bases
    let lex = crate::symmod::all_words(m + n, d);
    let lex_index = |w: &[u8]| lex.binary_search_by(|x| x.as_slice().cmp(w)).expect("word");
    let src_words = src.words();
    let dst_words = dst.words();
    let mut dst_pos = vec![0usize; lex.len()];
    for (i, w) in dst_words.iter().enumerate() {
        dst_pos[lex_index(w)] = i;
    }
    let perm: Vec<(usize, bool)> = src_words
        .iter()
        .map(|w| {
            let row = lex_index(w);
            let (col, val) = (0..lex.len()).map(|c| (c, t.get(row, c))).find(|&(_, v)| v != 0).expect("signed permutation");
            (dst_pos[col], val != 1)
        })
        .collect();
    let Some(map) = orbit_map(&src, &dst, |i, j| {
        let (a, sa) = perm[i];
        let (b, sb) = perm[j];
        Some((a, b, sa ^ sb))
    }) else {
        return Ok(false);
    };
    let mut hit = vec![false; dst.dim()];
    for &(z, _) in &map {
        if std::mem::replace(&mut hit[z], true) {
            return Ok(false);
        }
    }
    let (gs, gd) = (src.grading(), dst.grading());
    if map.iter().enumerate().any(|(k, &(z, _))| gs[k] != gd[z]) {
        return Ok(false);
    }
    if src.dim() > MAX_MATERIALIZED {
        return Ok(true);
    }
    Ok(tables_match(&src.algebra()?, &dst.algebra()?, &map))
}

/// `e S(m'|n',d) e ≅ S(m|n,d)` for the idempotent `e` projecting onto the
/// weights supported on the first `m` even and first `n` odd letters.
pub fn verify_truncation(m: usize, n: usize, m2: usize, n2: usize, d: usize, p: u32) -> Result<bool> {
    if m > m2 || n > n2 {
        return Err(Error::HypothesisViolated(format!("({m}|{n}) does not fit in ({m2}|{n2})")));
    }
    let small = SchurSuper::new(m, n, d, p)?;
    let big = SchurSuper::new(m2, n2, d, p)?;
    let pad = |w: &BiWeight| {
        let mut l = w.lambda.clone();
        l.resize(m2, 0);
        let mut u = w.mu.clone();
        u.resize(n2, 0);
        BiWeight::new(l, u)
    };
    let small_off = small.word_offsets();
    let big_off = big.word_offsets();
    let mut word_pos = Vec::new();
    for (w, weight) in small.weights.iter().enumerate() {
        let Some(bw) = big.weight_index(&pad(weight)) else { return Ok(false) };
        if big.sizes[bw] != small.sizes[w] {
            return Ok(false);
        }
        word_pos.extend((0..small.sizes[w]).map(|i| big_off[bw] + i));
        debug_assert_eq!(word_pos.len(), small_off[w] + small.sizes[w]);
    }
    let Some(map) = orbit_map(&small, &big, |i, j| Some((word_pos[i], word_pos[j], false))) else {
        return Ok(false);
    };
    // the corner e S e is spanned by orbits between padded weights
    let corner: Vec<usize> = (0..big.dim())
        .filter(|&z| {
            let o = &big.orbits[z];
            let inside = |w: usize| small.weights.iter().any(|x| pad(x) == big.weights[w]);
            inside(o.source) && inside(o.target)
        })
        .collect();
    let mut images: Vec<usize> = map.iter().map(|&(z, _)| z).collect();
    images.sort_unstable();
    images.dedup();
    if images != corner || map.iter().any(|&(_, s)| s) {
        return Ok(false);
    }
    if big.dim() > MAX_MATERIALIZED {
        return Ok(true);
    }
    let a = small.algebra()?;
    let b = big.algebra()?;
    Ok(tables_match(&a, &b, &map))
}

impl SchurSuper {
    /// `dim Hom(M^{w_s}, M^{w_t})` for every pair of weights.
    pub fn block_dims(&self) -> Vec<Vec<usize>> {
        let k = self.weights.len();
        let mut out = vec![vec![0; k]; k];
        for o in &self.orbits {
            out[o.source][o.target] += 1;
        }
        out
    }
}
