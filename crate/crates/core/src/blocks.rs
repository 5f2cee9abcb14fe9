//! Residue combinatorics of the weight lattice `X = Z^{m|n}` and the blocks
//! of signed Young modules.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{check_odd_prime, check_prime};
use crate::partition::{lex_desc, partitions, Partition, SignedYoungLabel};

/// `ξ = (ξ_1, …, ξ_m | ξ_{m+1}, …, ξ_{m+n})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct XWeight {
    pub m: usize,
    pub n: usize,
    pub entries: Vec<i64>,
}

impl XWeight {
    pub fn new(m: usize, n: usize, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != m + n {
            return Err(Error::SizeMismatch(m + n, entries.len()));
        }
        Ok(XWeight { m, n, entries })
    }

    pub fn zero(m: usize, n: usize) -> Self {
        XWeight { m, n, entries: vec![0; m + n] }
    }

    /// `(λ, 0, …, 0 | pμ, 0, …, 0)`.
    pub fn from_label(label: &SignedYoungLabel, m: usize, n: usize) -> Result<Self> {
        if label.lambda.len() > m || label.mu.len() > n {
            return Err(Error::ShapeOverflow(format!("{label} in ({m}|{n})")));
        }
        let mut entries = vec![0i64; m + n];
        for (i, &x) in label.lambda.parts().iter().enumerate() {
            entries[i] = x as i64;
        }
        for (j, &x) in label.mu.parts().iter().enumerate() {
            entries[m + j] = (label.p as usize * x) as i64;
        }
        Ok(XWeight { m, n, entries })
    }

    /// `ξ + ε_i` (0-based `i`).
    pub fn plus_epsilon(&self, i: usize) -> Self {
        let mut out = self.clone();
        out.entries[i] += 1;
        out
    }
}

/// `ϑ = (−1, −2, …, −m | m−1, m−2, …, m−n)`.
pub fn theta(m: usize, n: usize) -> XWeight {
    let mut entries: Vec<i64> = (1..=m as i64).map(|i| -i).collect();
    entries.extend((1..=n as i64).map(|j| m as i64 - j));
    XWeight { m, n, entries }
}

fn r_unchecked(xi: &XWeight) -> Vec<i64> {
    let t = theta(xi.m, xi.n);
    xi.entries
        .iter()
        .zip(&t.entries)
        .enumerate()
        .map(|(i, (&x, &t))| if i < xi.m { x + t } else { -(x + t) })
        .collect()
}

/// `r_i(ξ)` for all `i`, unreduced.
pub fn r_values(xi: &XWeight, p: u32) -> Result<Vec<i64>> {
    check_prime(p)?;
    Ok(r_unchecked(xi))
}

/// Residue counts of a label: `A_r, B_r` over all indices and the primed
/// versions over the even indices only, each indexed by `r ∈ Z_p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralCharData {
    pub p: u32,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub a_prime: Vec<usize>,
    pub b_prime: Vec<usize>,
}

impl CentralCharData {
    pub fn diff(&self) -> Vec<i64> {
        self.a.iter().zip(&self.b).map(|(&a, &b)| a as i64 - b as i64).collect()
    }

    pub fn diff_prime(&self) -> Vec<i64> {
        self.a_prime.iter().zip(&self.b_prime).map(|(&a, &b)| a as i64 - b as i64).collect()
    }
}

fn residue(x: i64, p: u32) -> usize {
    x.rem_euclid(p as i64) as usize
}

fn counts(xi: &XWeight, p: u32) -> CentralCharData {
    let pu = p as usize;
    let mut data = CentralCharData { p, a: vec![0; pu], b: vec![0; pu], a_prime: vec![0; pu], b_prime: vec![0; pu] };
    let base = r_unchecked(xi);
    for i in 0..xi.m + xi.n {
        let shifted = r_unchecked(&xi.plus_epsilon(i))[i];
        let (ra, rb) = (residue(shifted, p), residue(base[i], p));
        data.a[ra] += 1;
        data.b[rb] += 1;
        if i < xi.m {
            data.a_prime[ra] += 1;
            data.b_prime[rb] += 1;
        }
    }
    data
}

pub fn central_char_data(label: &SignedYoungLabel, m: usize, n: usize) -> Result<CentralCharData> {
    check_prime(label.p)?;
    Ok(counts(&XWeight::from_label(label, m, n)?, label.p))
}

/// Append `1^p` to `λ` `times` times.
fn pad_columns(label: &SignedYoungLabel, times: usize) -> SignedYoungLabel {
    let mut parts = label.lambda.parts().to_vec();
    parts.extend(std::iter::repeat_n(1, times * label.p as usize));
    SignedYoungLabel::new(Partition::from_unsorted(parts), label.mu.clone(), label.p)
}

/// Equality of the `A_r − B_r` data, after padding the smaller `λ` by
/// columns `1^p` when the sizes differ by a multiple of `p`.
pub fn same_central_character(l1: &SignedYoungLabel, l2: &SignedYoungLabel, m: usize, n: usize, p: u32) -> Result<bool> {
    check_prime(p)?;
    if l1.p != p || l2.p != p {
        return Err(Error::FieldMismatch(p, if l1.p != p { l1.p } else { l2.p }));
    }
    let (s1, s2) = (l1.lambda.size(), l2.lambda.size());
    let pu = p as usize;
    let (mut a, mut b) = (l1.clone(), l2.clone());
    if s1.abs_diff(s2) % pu == 0 {
        let times = s1.abs_diff(s2) / pu;
        if s1 < s2 {
            a = pad_columns(&a, times);
        } else {
            b = pad_columns(&b, times);
        }
    }
    Ok(central_char_data(&a, m, n)?.diff() == central_char_data(&b, m, n)?.diff())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BlockLabel {
    pub core: Partition,
    pub weight: usize,
}

/// The block of `Y^{(λ|pμ)}`: the one with the p-core of `λ`.
pub fn block_of_signed_young(label: &SignedYoungLabel) -> BlockLabel {
    let (core, _) = label.lambda.p_core(label.p as usize);
    let weight = (label.degree() - core.size()) / label.p as usize;
    BlockLabel { core, weight }
}

/// Composition series `[head; heart; socle]` of a module, entries 1-based
/// indices into the `λ`-chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LoewyPattern {
    pub layers: Vec<Vec<usize>>,
}

impl LoewyPattern {
    fn new(layers: Vec<Vec<usize>>) -> Self {
        LoewyPattern { layers: layers.into_iter().map(|l| l.into_iter().filter(|&i| i > 0).collect()).collect() }
    }

    pub fn composition_length(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    /// `dim End` for a module with simple head and multiplicity-one heart.
    pub fn end_dim(&self) -> usize {
        let head = self.layers[0][0];
        self.layers.iter().flatten().filter(|&&i| i == head).count()
    }
}

/// The defect-one block with core `τ`.
#[derive(Clone, Debug, Serialize)]
pub struct DefectOneCatalog {
    pub tau: Partition,
    pub p: u32,
    /// the `p` partitions of `|τ|+p` with core `τ`, dominance decreasing
    pub chain: Vec<Partition>,
    pub twisted: SignedYoungLabel,
    /// patterns of `Y^{λ_1}, …, Y^{λ_p}` then the twisted module
    pub patterns: Vec<LoewyPattern>,
}

impl DefectOneCatalog {
    pub fn signed_young_count(&self) -> usize {
        self.chain.len() + 1
    }
}

pub fn defect_one_catalog(tau: &Partition, p: u32) -> Result<DefectOneCatalog> {
    check_odd_prime(p)?;
    let pu = p as usize;
    if !tau.is_p_core(pu) {
        return Err(Error::NotACore(tau.to_string(), p));
    }
    let mut chain: Vec<Partition> = partitions(tau.size() + pu).into_iter().filter(|l| &l.p_core(pu).0 == tau).collect();
    chain.sort_by(lex_desc);
    debug_assert_eq!(chain.len(), pu);
    let mut patterns = vec![LoewyPattern::new(vec![vec![1]])];
    for i in 2..=pu {
        let layers = if i == pu {
            vec![vec![i - 1], vec![i - 2], vec![i - 1]]
        } else {
            vec![vec![i - 1], vec![i, i - 2], vec![i - 1]]
        };
        patterns.push(LoewyPattern::new(layers));
    }
    patterns.push(LoewyPattern::new(vec![vec![pu - 1]]));
    let twisted = SignedYoungLabel::new(tau.clone(), Partition::from_unsorted(vec![1]), p);
    Ok(DefectOneCatalog { tau: tau.clone(), p, chain, twisted, patterns })
}

#[cfg(test)]
mod tests;
