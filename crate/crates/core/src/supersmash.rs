//! The smash product `B = kZ₂ ⊗ A` of a superalgebra with the group algebra
//! of its grading involution, and the passage between supermodules and
//! `B`-modules.
//!
//! Basis of `B`: `1⊗b_i` at index `i`, `x⊗b_i` at index `dim A + i`.
//! Product: `(x^r⊗a)(x^s⊗b) = x^{r+s} ⊗ δ^s(a) b`, with `δ(a) = (-1)^{|a|} a`.

use crate::algebra::{AlgModule, GradedAlgebra};
use crate::error::{Error, Result};
use crate::field::{check_odd_prime, inv_mod, FMatrix};

#[derive(Clone, Debug)]
pub struct SmashAlgebra {
    base: GradedAlgebra,
    carrier: GradedAlgebra,
}

fn sign(deg: u8, p: u32) -> u32 {
    if deg == 0 {
        1
    } else {
        p - 1
    }
}

/// Diagonal matrix of the parity involution.
fn parity_matrix(grading: &[u8], p: u32) -> FMatrix {
    let mut d = FMatrix::zeros(p, grading.len(), grading.len());
    for (i, &g) in grading.iter().enumerate() {
        d.set(i, i, sign(g, p));
    }
    d
}

/// `[[0, I], [I, 0]]`.
fn swap_matrix(n: usize, p: u32) -> FMatrix {
    let mut s = FMatrix::zeros(p, 2 * n, 2 * n);
    for i in 0..n {
        s.set(i, n + i, 1);
        s.set(n + i, i, 1);
    }
    s
}

pub fn smash(a: &GradedAlgebra) -> Result<SmashAlgebra> {
    check_odd_prime(a.p())?;
    let g = a.grading().ok_or(Error::Ungraded)?.to_vec();
    let p = a.p();
    let n = a.dim();
    let mut table = Vec::with_capacity(4 * n * n);
    for r in 0..2 {
        for i in 0..n {
            for s in 0..2 {
                for j in 0..n {
                    let prod = a.basis_product(i, j);
                    let c = if s == 1 { sign(g[i], p) } else { 1 };
                    let shift = ((r + s) % 2) * n;
                    let entry: Vec<(u32, u32)> = prod
                        .iter()
                        .enumerate()
                        .filter(|(_, &v)| v != 0)
                        .map(|(k, &v)| ((shift + k) as u32, (v as u64 * c as u64 % p as u64) as u32))
                        .collect();
                    table.push(entry);
                }
            }
        }
    }
    let mut unit = vec![0u32; 2 * n];
    unit[..n].copy_from_slice(a.unit());
    let grading: Vec<u8> = g.iter().chain(&g).copied().collect();
    let carrier = GradedAlgebra::from_table(p, 2 * n, table, unit).with_grading(grading)?;
    Ok(SmashAlgebra { base: a.clone(), carrier })
}

impl SmashAlgebra {
    pub fn base(&self) -> &GradedAlgebra {
        &self.base
    }

    pub fn algebra(&self) -> &GradedAlgebra {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    /// `1 ⊗ a`.
    pub fn embed(&self, a: &[u32]) -> Vec<u32> {
        let mut v = a.to_vec();
        v.resize(self.dim(), 0);
        v
    }

    /// `x ⊗ 1`.
    pub fn x(&self) -> Vec<u32> {
        let mut v = vec![0u32; self.dim()];
        v[self.base.dim()..].copy_from_slice(self.base.unit());
        v
    }

    /// `ζ(x^r ⊗ a) = (-1)^r x^r ⊗ a`.
    pub fn zeta(&self, b: &[u32]) -> Vec<u32> {
        let p = self.base.p();
        let n = self.base.dim();
        b.iter().enumerate().map(|(i, &c)| if i < n || c == 0 { c } else { p - c }).collect()
    }

    fn grading(&self) -> &[u8] {
        self.base.grading().expect("smash base is graded")
    }

    /// Checks that each basis element of `A` moves parities by its degree.
    pub fn check_supermodule(&self, m: &AlgModule, parity: &[u8]) -> Result<()> {
        if parity.len() != m.dim() {
            return Err(Error::DimensionMismatch("one parity per basis vector".into()));
        }
        for (k, act) in m.action().iter().enumerate() {
            let deg = self.grading()[k];
            for i in 0..m.dim() {
                for (j, &c) in act.row(i).iter().enumerate() {
                    if c != 0 && parity[j] != (parity[i] + deg) % 2 {
                        return Err(Error::IncompatibleGrading);
                    }
                }
            }
        }
        Ok(())
    }

    /// `x` acts as the parity involution.
    pub fn supermodule_to_bmodule(&self, m: &AlgModule, parity: &[u8]) -> Result<AlgModule> {
        self.check_supermodule(m, parity)?;
        let d = parity_matrix(parity, self.base.p());
        let mut act: Vec<FMatrix> = m.action().to_vec();
        act.extend(m.action().iter().map(|g| d.mul(g)));
        Ok(AlgModule::from_parts(self.base.p(), m.dim(), act))
    }

    /// Grading by the `±1` eigenspaces of `x`. Eigenvectors are ordered by
    /// leading coordinate, so supermodules round-trip exactly.
    pub fn bmodule_to_supermodule(&self, m: &AlgModule) -> Result<(AlgModule, Vec<u8>)> {
        let p = self.base.p();
        let n = m.dim();
        let x = m.act_by(&self.x());
        let id = FMatrix::identity(p, n);
        let mut vecs: Vec<(Vec<u32>, u8)> = x.sub(&id).left_kernel_basis().into_iter().map(|v| (v, 0)).collect();
        vecs.extend(x.add(&id).left_kernel_basis().into_iter().map(|v| (v, 1)));
        if vecs.len() != n {
            return Err(Error::Invalid("x does not act as an involution".into()));
        }
        vecs.sort_by_key(|(v, _)| v.iter().position(|&c| c != 0));
        let rows: Vec<Vec<u32>> = vecs.iter().map(|(v, _)| v.clone()).collect();
        let parity: Vec<u8> = vecs.iter().map(|(_, g)| *g).collect();
        let basis = FMatrix::from_row_vectors(p, n, &rows);
        let inv = basis.inverse().ok_or_else(|| Error::Invalid("eigenvectors do not span".into()))?;
        let act = m.action()[..self.base.dim()].iter().map(|g| basis.mul(g).mul(&inv)).collect();
        Ok((AlgModule::from_parts(p, n, act), parity))
    }

    /// The parity flip `Π`.
    pub fn parity_flip(parity: &[u8]) -> Vec<u8> {
        parity.iter().map(|g| 1 - g).collect()
    }

    /// Precompose the action with `ζ`.
    pub fn zeta_twist(&self, m: &AlgModule) -> AlgModule {
        let n = self.base.dim();
        let act = m.action().iter().enumerate().map(|(i, g)| if i < n { g.clone() } else { g.neg() }).collect();
        AlgModule::from_parts(self.base.p(), m.dim(), act)
    }

    /// `N ⊗_A B` on the basis `n⊗1, n⊗x`.
    pub fn induce(&self, m: &AlgModule) -> AlgModule {
        let p = self.base.p();
        let k = m.dim();
        let lower: Vec<FMatrix> = m
            .action()
            .iter()
            .zip(self.grading())
            .map(|(g, &deg)| FMatrix::direct_sum(&[g, &g.scale(sign(deg, p))]))
            .collect();
        let s = swap_matrix(k, p);
        let mut act = lower.clone();
        act.extend(lower.iter().map(|g| s.mul(g)));
        AlgModule::from_parts(p, 2 * k, act)
    }

    /// Forget the action of `x`.
    pub fn restrict(&self, m: &AlgModule) -> AlgModule {
        AlgModule::from_parts(self.base.p(), m.dim(), m.action()[..self.base.dim()].to_vec())
    }

    /// The twist `N^δ` of an `A`-module by the grading involution.
    pub fn delta_twist(&self, m: &AlgModule) -> AlgModule {
        let p = self.base.p();
        let act = m.action().iter().zip(self.grading()).map(|(g, &d)| g.scale(sign(d, p))).collect();
        AlgModule::from_parts(p, m.dim(), act)
    }

    /// The map `ind res M → M ⊕ M^ζ`, `m⊗b ↦ (m·b, m·ζ(b))`, as a matrix on the
    /// bases `(m_i⊗1, m_i⊗x)` and `(M, M^ζ)`. Its inverse sends `(m, m')` to
    /// `½(m⊗1 + mx⊗x) + ½(m'⊗1 − m'x⊗x)`.
    pub fn induce_restrict_map(&self, m: &AlgModule) -> FMatrix {
        let p = self.base.p();
        let k = m.dim();
        let x = m.act_by(&self.x());
        let mut f = FMatrix::zeros(p, 2 * k, 2 * k);
        for i in 0..k {
            f.set(i, i, 1);
            f.set(i, k + i, 1);
            for j in 0..k {
                let c = x.get(i, j);
                f.set(k + i, j, c);
                f.set(k + i, k + j, (p - c) % p);
            }
        }
        f
    }

    /// Explicit inverse of [`Self::induce_restrict_map`].
    pub fn induce_restrict_inverse(&self, m: &AlgModule) -> FMatrix {
        let p = self.base.p();
        let k = m.dim();
        let half = inv_mod(2, p);
        let x = m.act_by(&self.x());
        let mut g = FMatrix::zeros(p, 2 * k, 2 * k);
        for i in 0..k {
            g.set(i, i, half);
            g.set(k + i, i, half);
            for j in 0..k {
                let c = (x.get(i, j) as u64 * half as u64 % p as u64) as u32;
                g.set(i, k + j, c);
                g.set(k + i, k + j, (p - c) % p);
            }
        }
        g
    }

    /// `ind res M ≅ M ⊕ M^ζ`: the explicit map is `B`-linear and inverted by
    /// the explicit inverse.
    pub fn verify_induce_restrict(&self, m: &AlgModule) -> bool {
        let ind = self.induce(&self.restrict(m));
        let target = m.direct_sum(&self.zeta_twist(m));
        let f = self.induce_restrict_map(m);
        let g = self.induce_restrict_inverse(m);
        let linear = ind.action().iter().zip(target.action()).all(|(a, b)| a.mul(&f) == f.mul(b));
        linear && f.mul(&g) == FMatrix::identity(self.base.p(), 2 * m.dim())
    }

    /// Number of indecomposable `A`-summands of an indecomposable `B`-module.
    pub fn count_restriction_summands(&self, m: &AlgModule, seed: u64) -> Result<usize> {
        if !m.is_indecomposable()? {
            return Err(Error::NotIndecomposable);
        }
        Ok(self.restrict(m).summands(seed)?.len())
    }

    /// Even and odd parts of `Hom_A(M, N)` for supermodules: grading-preserving
    /// and grading-reversing intertwiners.
    pub fn graded_hom(
        &self,
        m: &AlgModule,
        pm: &[u8],
        n: &AlgModule,
        pn: &[u8],
    ) -> Result<(Vec<FMatrix>, Vec<FMatrix>)> {
        self.check_supermodule(m, pm)?;
        self.check_supermodule(n, pn)?;
        let p = self.base.p();
        let (dm, dn) = (parity_matrix(pm, p), parity_matrix(pn, p));
        let half = inv_mod(2, p);
        let mut even = crate::field::Span::new(p, m.dim() * n.dim());
        let mut odd = crate::field::Span::new(p, m.dim() * n.dim());
        for x in m.hom_basis(n) {
            let twisted = dm.mul(&x).mul(&dn);
            even.insert(x.add(&twisted).scale(half).data().to_vec());
            odd.insert(x.sub(&twisted).scale(half).data().to_vec());
        }
        let to = |s: crate::field::Span| -> Vec<FMatrix> {
            s.into_basis()
                .into_iter()
                .map(|v| FMatrix::from_vec(p, m.dim(), n.dim(), v).expect("hom shape"))
                .collect()
        };
        Ok((to(even), to(odd)))
    }
}
