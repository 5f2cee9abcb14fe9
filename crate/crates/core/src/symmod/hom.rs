use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::{FMatrix, Span};

use super::{Embedding, ModuleRep, Monomial, Shape};

/// Space of module maps `M → N`; a map `X` acts on row vectors by `v ↦ vX`
/// and satisfies `ρ_M(s) X = X ρ_N(s)` for every generator.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source: ModuleRep,
    pub target: ModuleRep,
    pub basis: Vec<FMatrix>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_intertwiner(source: &ModuleRep, target: &ModuleRep, x: &FMatrix) -> bool {
        source.gens().iter().zip(target.gens()).all(|(a, b)| a.mul(x) == x.mul(b))
    }

    pub fn combination(&self, coeffs: &[u32]) -> FMatrix {
        let mut acc = FMatrix::zeros(self.source.p(), self.source.dim(), self.target.dim());
        for (x, &c) in self.basis.iter().zip(coeffs) {
            if c != 0 {
                acc.add_scaled_assign(x, c);
            }
        }
        acc
    }
}

/// Sparse orbit basis element: entries `(row, col, negated)`.
pub(crate) type OrbitVector = Vec<(u32, u32, bool)>;

struct SignedUnionFind {
    parent: Vec<u32>,
    // parity relative to parent
    parity: Vec<bool>,
    bad: Vec<bool>,
}

impl SignedUnionFind {
    fn new(n: usize) -> Self {
        SignedUnionFind { parent: (0..n as u32).collect(), parity: vec![false; n], bad: vec![false; n] }
    }

    fn find(&mut self, x: u32) -> (u32, bool) {
        let mut path = Vec::new();
        let mut cur = x;
        let mut par = false;
        while self.parent[cur as usize] != cur {
            path.push(cur);
            par ^= self.parity[cur as usize];
            cur = self.parent[cur as usize];
        }
        let root = cur;
        // compress: recompute each node's parity to the root
        let mut acc = par;
        for &node in &path {
            let own = self.parity[node as usize];
            self.parent[node as usize] = root;
            self.parity[node as usize] = acc;
            acc ^= own;
        }
        (root, par)
    }

    /// Record `value(a) = (-1)^neg value(b)`.
    fn union(&mut self, a: u32, b: u32, neg: bool) {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            if pa ^ pb ^ neg {
                self.bad[ra as usize] = true;
            }
            return;
        }
        self.parent[ra as usize] = rb;
        self.parity[ra as usize] = pa ^ pb ^ neg;
        let bad = self.bad[ra as usize] || self.bad[rb as usize];
        self.bad[rb as usize] = bad;
    }
}

/// Basis of `Hom(M, N)` between monomial modules: one vector per
/// sign-consistent orbit of the group on matrix positions.
pub(crate) fn monomial_orbits(m: &Monomial, n: &Monomial, dm: usize, dn: usize, odd_p: bool) -> Vec<OrbitVector> {
    let total = dm * dn;
    assert!(total <= u32::MAX as usize);
    let mut uf = SignedUnionFind::new(total);
    for (gm, gn) in m.perms.iter().zip(&n.perms) {
        for i in 0..dm {
            let (ti, si) = gm[i];
            for k in 0..dn {
                let (tk, sk) = gn[k];
                let a = (ti as usize * dn + tk as usize) as u32;
                let b = (i * dn + k) as u32;
                uf.union(a, b, odd_p && (si ^ sk));
            }
        }
    }
    let mut slot: HashMap<u32, usize> = HashMap::new();
    let mut out: Vec<OrbitVector> = Vec::new();
    for x in 0..total as u32 {
        let (r, par) = uf.find(x);
        if uf.bad[r as usize] {
            continue;
        }
        let idx = *slot.entry(r).or_insert_with(|| {
            out.push(Vec::new());
            out.len() - 1
        });
        out[idx].push(((x as usize / dn) as u32, (x as usize % dn) as u32, par));
    }
    // normalise so the first entry of each orbit has coefficient +1
    for v in &mut out {
        if v[0].2 {
            v.iter_mut().for_each(|e| e.2 = !e.2);
        }
    }
    out
}

pub(crate) fn orbit_to_dense(v: &OrbitVector, p: u32, rows: usize, cols: usize) -> FMatrix {
    let mut x = FMatrix::zeros(p, rows, cols);
    for &(i, j, neg) in v {
        x.set(i as usize, j as usize, if neg { p - 1 } else { 1 });
    }
    x
}

/// `A · X` for a dense `A` and a sparse orbit `X` of shape `rows × cols`.
pub(crate) fn dense_times_orbit(a: &FMatrix, v: &OrbitVector, cols: usize) -> FMatrix {
    let p = a.p();
    let mut out = FMatrix::zeros(p, a.rows(), cols);
    for &(i, j, neg) in v {
        for r in 0..a.rows() {
            let x = a.get(r, i as usize);
            if x != 0 {
                let add = if neg { p - x } else { x };
                let cur = out.get(r, j as usize);
                out.set(r, j as usize, (cur + add) % p);
            }
        }
    }
    out
}

/// Monomial root, inclusion, projection for modules that sit inside a monomial one.
pub(crate) fn rooted(m: &ModuleRep) -> Option<(ModuleRep, Option<(FMatrix, FMatrix)>)> {
    match &m.shape {
        Shape::Monomial(_) => Some((m.clone(), None)),
        Shape::Embedded(e) => {
            let Embedding { root, inc, proj } = e.as_ref();
            Some(((**root).clone(), Some((inc.clone(), proj.clone()))))
        }
        Shape::Dense => None,
    }
}

fn monomial_of(m: &ModuleRep) -> &Monomial {
    match &m.shape {
        Shape::Monomial(mono) => mono,
        _ => unreachable!("root must be monomial"),
    }
}

fn check_compatible(m: &ModuleRep, n: &ModuleRep) -> Result<()> {
    if m.p() != n.p() {
        return Err(Error::FieldMismatch(m.p(), n.p()));
    }
    if m.degree() != n.degree() {
        return Err(Error::DegreeMismatch(m.degree(), n.degree()));
    }
    Ok(())
}

/// Largest dense system (in unknowns) solved directly.
const DENSE_LIMIT: usize = 1600;

pub fn hom_space(m: &ModuleRep, n: &ModuleRep) -> Result<HomSpace> {
    check_compatible(m, n)?;
    let basis = match (rooted(m), rooted(n)) {
        (Some((rm, em)), Some((rn, en))) => {
            let orbits = monomial_orbits(monomial_of(&rm), monomial_of(&rn), rm.dim(), rn.dim(), m.p() != 2);
            match (em, en) {
                (None, None) => orbits.iter().map(|v| orbit_to_dense(v, m.p(), m.dim(), n.dim())).collect(),
                (em, en) => spanning_to_basis(
                    m.p(),
                    m.dim(),
                    n.dim(),
                    orbits.iter().map(|v| {
                        let left = match &em {
                            Some((inc, _)) => dense_times_orbit(inc, v, rn.dim()),
                            None => orbit_to_dense(v, m.p(), rm.dim(), rn.dim()),
                        };
                        match &en {
                            Some((_, proj)) => left.mul(proj),
                            None => left,
                        }
                    }),
                ),
            }
        }
        _ => dense_hom(m, n)?,
    };
    Ok(HomSpace { source: m.clone(), target: n.clone(), basis })
}

pub(crate) fn spanning_to_basis(
    p: u32,
    rows: usize,
    cols: usize,
    it: impl Iterator<Item = FMatrix>,
) -> Vec<FMatrix> {
    let mut span = Span::new(p, rows * cols);
    let mut out = Vec::new();
    for x in it {
        if span.insert(x.data().to_vec()) {
            out.push(x);
        }
        if span.dim() == rows * cols {
            break;
        }
    }
    out
}

/// Solve `ρ_M(s) X = X ρ_N(s)` directly, one generator at a time.
fn dense_hom(m: &ModuleRep, n: &ModuleRep) -> Result<Vec<FMatrix>> {
    let (r, c) = (m.dim(), n.dim());
    let p = m.p();
    let unknowns = r * c;
    if unknowns > DENSE_LIMIT {
        return Err(Error::BudgetExceeded(format!("dense hom system with {unknowns} unknowns")));
    }
    // current solution space as rows of coefficient vectors over the unknowns
    let mut basis: Option<Vec<Vec<u32>>> = None;
    for (gm, gn) in m.gens().iter().zip(n.gens()) {
        let apply = |x: &FMatrix| gm.mul(x).sub(&x.mul(gn));
        let next = match &basis {
            None => {
                // columns of the operator on unit matrices, rows = equations
                let mut op = FMatrix::zeros(p, unknowns, unknowns);
                for u in 0..unknowns {
                    let mut e = FMatrix::zeros(p, r, c);
                    e.set(u / c, u % c, 1);
                    let img = apply(&e);
                    for (eq, &v) in img.data().iter().enumerate() {
                        if v != 0 {
                            op.set(eq, u, v);
                        }
                    }
                }
                op.kernel_basis()
            }
            Some(cur) => {
                if cur.is_empty() {
                    return Ok(Vec::new());
                }
                let images: Vec<Vec<u32>> = cur
                    .iter()
                    .map(|v| apply(&FMatrix::from_vec(p, r, c, v.clone()).expect("shape")).data().to_vec())
                    .collect();
                let rel = FMatrix::from_row_vectors(p, unknowns, &images).left_kernel_basis();
                rel.iter()
                    .map(|coeffs| {
                        let mut acc = vec![0u32; unknowns];
                        for (v, &a) in cur.iter().zip(coeffs) {
                            crate::field::vec_ops::add_scaled(&mut acc, v, a, p);
                        }
                        acc
                    })
                    .collect()
            }
        };
        basis = Some(next);
    }
    let basis = basis.unwrap_or_else(|| {
        (0..unknowns)
            .map(|u| {
                let mut e = vec![0u32; unknowns];
                e[u] = 1;
                e
            })
            .collect()
    });
    Ok(basis.into_iter().map(|v| FMatrix::from_vec(p, r, c, v).expect("shape")).collect())
}
