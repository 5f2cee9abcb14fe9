//! Primitive idempotents, Cartan matrix and Gabriel quiver.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{inv_mod, Span};

use super::GradedAlgebra;

const SPLIT_TRIES: usize = 200;

/// A complete set of primitive orthogonal idempotents with their
/// isomorphism classes.
#[derive(Clone, Debug, Serialize)]
pub struct IdempotentData {
    pub idempotents: Vec<Vec<u32>>,
    pub labels: Vec<String>,
    /// class index of each idempotent
    pub classes: Vec<usize>,
    /// first idempotent of each class, in order of appearance
    pub representatives: Vec<usize>,
    pub radical: Vec<Vec<u32>>,
}

impl IdempotentData {
    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }

    pub fn representative_labels(&self) -> Vec<String> {
        self.representatives.iter().map(|&i| self.labels[i].clone()).collect()
    }
}

/// Evaluate a polynomial (coefficients low to high) at a field element.
fn eval_poly(poly: &[u32], x: u32, p: u32) -> u32 {
    poly.iter().rev().fold(0u64, |acc, &c| (acc * x as u64 + c as u64) % p as u64) as u32
}

/// Divide by `(x - c)` assuming `c` is a root; returns the quotient.
fn deflate(poly: &[u32], c: u32, p: u32) -> Vec<u32> {
    let deg = poly.len() - 1;
    let mut q = vec![0u32; deg];
    let mut carry = 0u64;
    for k in (1..=deg).rev() {
        carry = (poly[k] as u64 + carry * c as u64) % p as u64;
        q[k - 1] = carry as u32;
    }
    q
}

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    a
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    trim(out.into_iter().map(|x| x as u32).collect())
}

fn poly_sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let n = a.len().max(b.len());
    let g = |v: &[u32], i: usize| v.get(i).copied().unwrap_or(0);
    trim((0..n).map(|i| (g(a, i) + p - g(b, i)) % p).collect())
}

fn poly_divrem(a: &[u32], b: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
    let mut r = trim(a.to_vec());
    let b = trim(b.to_vec());
    let lead_inv = inv_mod(*b.last().unwrap(), p);
    if r.len() < b.len() {
        return (vec![0], r);
    }
    let mut q = vec![0u32; r.len() - b.len() + 1];
    while r.len() >= b.len() && !(r.len() == 1 && r[0] == 0) {
        let shift = r.len() - b.len();
        let f = (*r.last().unwrap() as u64 * lead_inv as u64 % p as u64) as u32;
        q[shift] = f;
        for (i, &x) in b.iter().enumerate() {
            r[i + shift] = ((r[i + shift] as u64 + (p - f) as u64 * x as u64) % p as u64) as u32;
        }
        r = trim(r);
        if shift == 0 {
            break;
        }
    }
    (trim(q), r)
}

/// `s` with `s·a ≡ 1 (mod b)` for coprime `a`, `b`.
fn poly_inverse_mod(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let (mut r0, mut r1) = (trim(b.to_vec()), poly_divrem(a, b, p).1);
    let (mut s0, mut s1) = (vec![0u32], vec![1u32]);
    while !(r1.len() == 1 && r1[0] == 0) {
        let (q, r) = poly_divrem(&r0, &r1, p);
        let s = poly_sub(&s0, &poly_mul(&q, &s1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    // r0 is a nonzero constant
    let c = inv_mod(r0[0], p);
    s0.iter().map(|&x| (x as u64 * c as u64 % p as u64) as u32).collect()
}

/// Idempotent polynomial for the `c`-primary factor of `m`, if `m` has
/// another factor.
fn primary_idempotent(m: &[u32], c: u32, p: u32) -> Option<Vec<u32>> {
    let mut h = m.to_vec();
    let mut f = vec![1u32];
    while h.len() > 1 && eval_poly(&h, c, p) == 0 {
        h = deflate(&h, c, p);
        f = poly_mul(&f, &[(p - c) % p, 1], p);
    }
    if h.len() <= 1 || f.len() <= 1 {
        return None;
    }
    // u ≡ 1 mod f, u ≡ 0 mod h
    let s = poly_inverse_mod(&h, &f, p);
    Some(poly_mul(&s, &h, p))
}

impl GradedAlgebra {
    fn span_of(&self, vs: &[Vec<u32>]) -> Span {
        let mut s = Span::new(self.p, self.dim);
        for v in vs {
            s.insert(v.clone());
        }
        s
    }

    /// `dim eAe - dim eJe`; equals 1 exactly when `e` is primitive (split case).
    fn local_residue_dim(&self, e: &[u32], radical: &Span) -> usize {
        let corner = self.sandwich(e, e);
        let mut s = Span::new(self.p, self.dim);
        for b in radical.basis() {
            s.insert(self.mul(&self.mul(e, b), e));
        }
        let in_rad = s.dim();
        corner.len() - in_rad
    }

    /// Minimal polynomial of `z` inside the corner with unit `e`.
    fn min_poly(&self, z: &[u32], e: &[u32]) -> Vec<u32> {
        let p = self.p;
        let mut span = Span::new(p, self.dim);
        let mut power = e.to_vec();
        loop {
            if let Some(coords) = span.coordinates(&power) {
                // power = Σ coords_k z^k  ⇒  x^deg - Σ coords_k x^k
                let mut poly: Vec<u32> = coords.iter().map(|&c| (p - c) % p).collect();
                poly.push(1);
                return poly;
            }
            span.insert(power.clone());
            power = self.mul(&power, z);
        }
    }

    fn poly_at(&self, poly: &[u32], z: &[u32], e: &[u32]) -> Vec<u32> {
        let mut acc = vec![0u32; self.dim];
        let mut power = e.to_vec();
        for &c in poly {
            if c != 0 {
                crate::field::vec_ops::add_scaled(&mut acc, &power, c, self.p);
            }
            power = self.mul(&power, z);
        }
        acc
    }

    /// Split the unit of a semisimple algebra into primitive orthogonal idempotents.
    fn split_semisimple(&self, rng: &mut ChaCha8Rng) -> Result<Vec<Vec<u32>>> {
        let p = self.p;
        let mut done = Vec::new();
        let mut todo = vec![self.unit.clone()];
        while let Some(e) = todo.pop() {
            let corner = self.sandwich(&e, &e);
            if corner.len() <= 1 {
                done.push(e);
                continue;
            }
            let mut split = None;
            for _ in 0..SPLIT_TRIES {
                let mut z = vec![0u32; self.dim];
                for b in &corner {
                    crate::field::vec_ops::add_scaled(&mut z, b, rng.gen_range(0..p), p);
                }
                let m = self.min_poly(&z, &e);
                if m.len() <= 2 {
                    continue;
                }
                if let Some(u) = (0..p).find_map(|c| primary_idempotent(&m, c, p)) {
                    split = Some(self.poly_at(&u, &z, &e));
                    break;
                }
            }
            let Some(ec) = split else { return Err(Error::SplitFailure(p)) };
            let rest = self.sub(&e, &ec);
            todo.push(rest);
            todo.push(ec);
        }
        Ok(done)
    }

    /// `e ← 3e² − 2e³` until idempotent.
    fn lift_idempotent(&self, mut e: Vec<u32>) -> Result<Vec<u32>> {
        let p = self.p;
        for _ in 0..64 {
            let e2 = self.mul(&e, &e);
            if e2 == e {
                return Ok(e);
            }
            let e3 = self.mul(&e2, &e);
            e = self.sub(&self.scale(&e2, 3 % p), &self.scale(&e3, 2 % p));
        }
        Err(Error::Invalid("idempotent lifting did not converge".into()))
    }

    fn search_idempotents(&self, radical: &[Vec<u32>], seed: u64) -> Result<Vec<Vec<u32>>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (q, map) = self.quotient(radical)?;
        let bars = q.split_semisimple(&mut rng)?;
        let mut lifted: Vec<Vec<u32>> = Vec::with_capacity(bars.len());
        let mut remaining = self.unit.clone();
        for (k, bar) in bars.iter().enumerate() {
            if k + 1 == bars.len() {
                lifted.push(remaining.clone());
                break;
            }
            let x = map.lift(bar);
            let x = self.mul(&self.mul(&remaining, &x), &remaining);
            let f = self.lift_idempotent(x)?;
            remaining = self.sub(&remaining, &f);
            lifted.push(f);
        }
        Ok(lifted)
    }

    fn labeled_set_is_complete(&self, radical: &Span) -> bool {
        let es: Vec<&Vec<u32>> = self.idempotents.iter().map(|l| &l.element).collect();
        if es.is_empty() {
            return false;
        }
        let mut sum = vec![0u32; self.dim];
        for (i, e) in es.iter().enumerate() {
            sum = self.add(&sum, e);
            for (j, f) in es.iter().enumerate() {
                let prod = self.mul(e, f);
                let expect: Vec<u32> = if i == j { e.to_vec() } else { vec![0; self.dim] };
                if prod != expect {
                    return false;
                }
            }
        }
        sum == self.unit && es.iter().all(|e| self.local_residue_dim(e, radical) == 1)
    }

    /// Primitive orthogonal idempotents summing to 1. Labeled idempotents
    /// are used directly when they already form such a set.
    pub fn idempotent_data(&self, seed: u64) -> Result<IdempotentData> {
        let radical = self.radical();
        let rspan = self.span_of(&radical);
        let (idempotents, labels) = if self.labeled_set_is_complete(&rspan) {
            (
                self.idempotents.iter().map(|l| l.element.clone()).collect::<Vec<_>>(),
                self.idempotents.iter().map(|l| l.label.clone()).collect::<Vec<_>>(),
            )
        } else {
            let es = self.search_idempotents(&radical, seed)?;
            let labels = (0..es.len()).map(|i| format!("e{i}")).collect();
            (es, labels)
        };
        let mut classes = vec![usize::MAX; idempotents.len()];
        let mut representatives = Vec::new();
        for i in 0..idempotents.len() {
            if classes[i] != usize::MAX {
                continue;
            }
            classes[i] = representatives.len();
            for j in i + 1..idempotents.len() {
                if classes[j] == usize::MAX {
                    let linked = self.sandwich(&idempotents[i], &idempotents[j]).iter().any(|v| !rspan.contains(v));
                    if linked {
                        classes[j] = representatives.len();
                    }
                }
            }
            representatives.push(i);
        }
        Ok(IdempotentData { idempotents, labels, classes, representatives, radical })
    }

    pub fn primitive_idempotents(&self, seed: u64) -> Result<Vec<Vec<u32>>> {
        Ok(self.idempotent_data(seed)?.idempotents)
    }

    /// `C[i][j] = dim e_i A e_j` over class representatives.
    pub fn cartan_matrix(&self, seed: u64) -> Result<Vec<Vec<usize>>> {
        let data = self.idempotent_data(seed)?;
        Ok(self.cartan_from(&data))
    }

    pub fn cartan_from(&self, data: &IdempotentData) -> Vec<Vec<usize>> {
        let reps: Vec<&Vec<u32>> = data.representatives.iter().map(|&i| &data.idempotents[i]).collect();
        reps.iter().map(|ei| reps.iter().map(|ej| self.sandwich(ei, ej).len()).collect()).collect()
    }

    /// Arrow counts `Q[i][j] = dim e_i (J/J²) e_j` between class representatives;
    /// an arrow `i → j` is an element `e_i x e_j`, paths read left to right.
    pub fn gabriel_arrows(&self, data: &IdempotentData) -> Vec<Vec<usize>> {
        let j = &data.radical;
        let j2 = self.product_space(j, j);
        let reps: Vec<&Vec<u32>> = data.representatives.iter().map(|&i| &data.idempotents[i]).collect();
        let k = reps.len();
        let mut arrows = vec![vec![0usize; k]; k];
        for (a, ea) in reps.iter().enumerate() {
            for (b, eb) in reps.iter().enumerate() {
                let mut s1 = Span::new(self.p, self.dim);
                let mut s2 = Span::new(self.p, self.dim);
                for x in j {
                    s1.insert(self.mul(&self.mul(ea, x), eb));
                }
                for x in &j2 {
                    s2.insert(self.mul(&self.mul(ea, x), eb));
                }
                arrows[a][b] = s1.dim() - s2.dim();
            }
        }
        arrows
    }

    /// Vertex classes of the connected components of the Gabriel quiver.
    pub fn quiver_components(arrows: &[Vec<usize>]) -> Vec<Vec<usize>> {
        let k = arrows.len();
        let mut comp = vec![usize::MAX; k];
        let mut out = Vec::new();
        for start in 0..k {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut members = vec![start];
            comp[start] = out.len();
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                for w in 0..k {
                    if comp[w] == usize::MAX && (arrows[v][w] > 0 || arrows[w][v] > 0) {
                        comp[w] = out.len();
                        members.push(w);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Gabriel arrows of the corners `eAe`, `e` a sum of `size` class
    /// representatives from one connected component of the quiver.
    pub fn corner_quivers(&self, data: &IdempotentData, size: usize, seed: u64) -> Result<Vec<(Vec<usize>, Vec<Vec<usize>>)>> {
        let arrows = self.gabriel_arrows(data);
        let mut out = Vec::new();
        for comp in Self::quiver_components(&arrows) {
            for subset in subsets(&comp, size) {
                let mut e = vec![0u32; self.dim];
                for &v in &subset {
                    e = self.add(&e, &data.idempotents[data.representatives[v]]);
                }
                let corner = self.corner(&e)?;
                let cd = corner.idempotent_data(seed)?;
                out.push((subset, corner.gabriel_arrows(&cd)));
            }
        }
        Ok(out)
    }
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = subsets(&items[1..], k - 1);
    for s in &mut out {
        s.insert(0, items[0]);
    }
    out.extend(subsets(&items[1..], k));
    out
}
