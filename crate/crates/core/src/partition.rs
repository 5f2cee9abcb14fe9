//! Partitions, bi-weights and signed Young labels.
//!
//! Text formats: a partition is written as comma separated parts (`4,2,1`)
//! with the empty partition written `-`; a bi-weight as `λ|μ` (`4,2|1`);
//! a signed Young label as `λ|p*μ` (`1|3*1`).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::check_prime;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Build from weakly decreasing parts; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Invalid(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sort arbitrary nonnegative entries into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-indexed), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.part(0);
        let parts = (0..cols).map(|j| self.parts.iter().take_while(|&&r| r > j).count()).collect();
        Partition { parts }
    }

    /// Hook length of the cell in row `i`, column `j` (0-indexed).
    pub fn hook_length(&self, i: usize, j: usize) -> usize {
        let t = self.transpose();
        self.part(i) - j + t.part(j) - i - 1
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &r)| (0..r).map(move |j| (i, j)))
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn hook_dimension(&self) -> u128 {
        let n = self.size();
        let num: u128 = (1..=n as u128).product();
        let t = self.transpose();
        let den: u128 = self.cells().map(|(i, j)| (self.part(i) - j + t.part(j) - i - 1) as u128).product();
        num / den
    }

    pub fn is_p_regular(&self, p: usize) -> bool {
        let mut run = 1;
        for w in self.parts.windows(2) {
            if w[0] == w[1] {
                run += 1;
                if run >= p {
                    return false;
                }
            } else {
                run = 1;
            }
        }
        p > 1 || self.is_empty()
    }

    pub fn is_p_restricted(&self, p: usize) -> bool {
        (0..self.len()).all(|i| self.part(i) - self.part(i + 1) < p)
    }

    /// `p_core` via the abacus: beads `λ_i + (N-1-i)` slide up their runners.
    pub fn p_core(&self, p: usize) -> (Partition, usize) {
        let n = self.len();
        if n == 0 || p == 0 {
            return (self.clone(), 0);
        }
        let beta: Vec<usize> = (0..n).map(|i| self.parts[i] + (n - 1 - i)).collect();
        let mut counts = vec![0usize; p];
        for &b in &beta {
            counts[b % p] += 1;
        }
        let mut slid: Vec<usize> = Vec::with_capacity(n);
        for (r, &c) in counts.iter().enumerate() {
            slid.extend((0..c).map(|k| r + k * p));
        }
        slid.sort_unstable_by(|a, b| b.cmp(a));
        let moved: usize = beta.iter().sum::<usize>() - slid.iter().sum::<usize>();
        let core: Vec<usize> = (0..n).map(|i| slid[i] - (n - 1 - i)).collect();
        (Partition::from_unsorted(core), moved / p)
    }

    pub fn is_p_core(&self, p: usize) -> bool {
        self.p_core(p).1 == 0
    }

    /// Dominance order `self ⊵ other`.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(self.size(), other.size()));
        }
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Residues `(col - row) mod p` of all cells, as counts per residue.
    pub fn residue_counts(&self, p: usize) -> Vec<usize> {
        let mut c = vec![0usize; p];
        for (i, j) in self.cells() {
            c[((j as i64 - i as i64).rem_euclid(p as i64)) as usize] += 1;
        }
        c
    }

    /// Rim cells ordered from the end of the first row towards the bottom-left.
    fn rim_rows(&self) -> Vec<(usize, usize)> {
        // (row, number of rim cells in that row), rim cells are the rightmost ones
        (0..self.len())
            .map(|i| {
                let lo = self.part(i + 1).saturating_sub(1);
                (i, self.part(i) - lo)
            })
            .collect()
    }

    /// Cells removed per row when stripping the `p`-rim.
    fn p_rim_removal(&self, p: usize) -> Vec<usize> {
        let rim = self.rim_rows();
        let mut removed = vec![0usize; self.len()];
        let mut row = 0;
        while row < self.len() {
            // one p-segment starting at the last cell of `row`
            let mut left = p;
            let mut r = row;
            loop {
                let take = left.min(rim[r].1);
                removed[r] += take;
                left -= take;
                if left == 0 || r + 1 == self.len() {
                    break;
                }
                r += 1;
            }
            row = r + 1;
        }
        removed
    }

    fn strip_p_rim(&self, p: usize) -> (Partition, usize) {
        let removed = self.p_rim_removal(p);
        let total = removed.iter().sum();
        let parts = self.parts.iter().zip(&removed).map(|(&a, &r)| a - r).collect();
        (Partition::from_unsorted(parts), total)
    }

    /// Columns `(|p-rim|, rows)` of the Mullineux symbol.
    pub fn mullineux_symbol(&self, p: usize) -> Vec<(usize, usize)> {
        let mut cur = self.clone();
        let mut symbol = Vec::new();
        while !cur.is_empty() {
            let rows = cur.len();
            let (next, a) = cur.strip_p_rim(p);
            symbol.push((a, rows));
            cur = next;
        }
        symbol
    }

    /// Rebuild the p-regular partition with a given Mullineux symbol.
    pub fn from_mullineux_symbol(symbol: &[(usize, usize)], p: usize) -> Option<Partition> {
        let mut cur = Partition::empty();
        for &(a, rows) in symbol.iter().rev() {
            let target = cur.size() + a;
            let found: Vec<Partition> = partitions_with_parts(target, rows)
                .into_iter()
                .filter(|mu| mu.len() == rows && mu.is_p_regular(p))
                .filter(|mu| (0..cur.len()).all(|i| mu.part(i) >= cur.part(i)))
                .filter(|mu| mu.strip_p_rim(p) == (cur.clone(), a))
                .collect();
            if found.len() != 1 {
                return None;
            }
            cur = found.into_iter().next().unwrap();
        }
        Some(cur)
    }

    /// Mullineux conjugate `m(λ)`, characterised by `D^λ ⊗ sgn ≅ D^{m(λ)}`.
    pub fn mullineux(&self, p: u32) -> Result<Partition> {
        check_prime(p)?;
        let p = p as usize;
        if !self.is_p_regular(p) {
            return Err(Error::NotPRegular(self.to_string(), p as u32));
        }
        let symbol: Vec<(usize, usize)> = self
            .mullineux_symbol(p)
            .into_iter()
            .map(|(a, r)| (a, a + usize::from(a % p != 0) - r))
            .collect();
        Partition::from_mullineux_symbol(&symbol, p)
            .ok_or_else(|| Error::Invalid(format!("no partition with Mullineux symbol {symbol:?}")))
    }
}

/// `(is_p_regular, is_p_restricted)`
pub fn regularity(lambda: &Partition, p: u32) -> Result<(bool, bool)> {
    check_prime(p)?;
    Ok((lambda.is_p_regular(p as usize), lambda.is_p_restricted(p as usize)))
}

pub fn p_core(lambda: &Partition, p: u32) -> Result<(Partition, usize)> {
    check_prime(p)?;
    Ok(lambda.p_core(p as usize))
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        write_list(f, &self.parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "-" || s == "∅" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{x:?}: {e}"))))
        .collect()
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_list(s)?)
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    partitions_with_parts(n, n.max(1))
}

/// Partitions of `n` with at most `max_parts` parts, decreasing lexicographic order.
pub fn partitions_with_parts(n: usize, max_parts: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for k in (1..=max.min(n)).rev() {
            cur.push(k);
            rec(n - k, k, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, max_parts, &mut Vec::new(), &mut out);
    out
}

pub fn partition_count(n: usize) -> usize {
    let mut table = vec![0usize; n + 1];
    table[0] = 1;
    for k in 1..=n {
        for m in k..=n {
            table[m] += table[m - k];
        }
    }
    table[n]
}

/// Compositions of `n` into exactly `k` nonnegative parts, decreasing lexicographic.
pub fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            if n == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if k == 1 {
            cur.push(n);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in (0..=n).rev() {
            cur.push(first);
            rec(n - first, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, &mut Vec::new(), &mut out);
    out
}

/// An element `(λ|μ)` of the weight set of degree `d`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BiWeight {
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
}

impl BiWeight {
    pub fn new(lambda: Vec<usize>, mu: Vec<usize>) -> Self {
        BiWeight { lambda, mu }
    }

    pub fn degree(&self) -> usize {
        self.lambda.iter().sum::<usize>() + self.mu.iter().sum::<usize>()
    }

    pub fn odd_degree(&self) -> usize {
        self.mu.iter().sum()
    }

    /// Sort both sides into partitions; permuting within a side gives an isomorphic module.
    pub fn sorted(&self) -> (Partition, Partition) {
        (Partition::from_unsorted(self.lambda.clone()), Partition::from_unsorted(self.mu.clone()))
    }
}

impl fmt::Display for BiWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lambda.is_empty() {
            write!(f, "-")?;
        } else {
            write_list(f, &self.lambda)?;
        }
        write!(f, "|")?;
        if self.mu.is_empty() {
            write!(f, "-")
        } else {
            write_list(f, &self.mu)
        }
    }
}

impl fmt::Debug for BiWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for BiWeight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (l, m) = s.split_once('|').ok_or_else(|| Error::Parse(format!("missing '|' in {s:?}")))?;
        Ok(BiWeight { lambda: parse_list(l)?, mu: parse_list(m)? })
    }
}

/// All `(λ|μ)` with `λ` of length `m`, `μ` of length `n`, total `d`.
pub fn enumerate_biweights(m: usize, n: usize, d: usize) -> Vec<BiWeight> {
    let mut out = Vec::new();
    for even in (0..=d).rev() {
        let ls = compositions(even, m);
        let ms = compositions(d - even, n);
        for l in &ls {
            for mu in &ms {
                out.push(BiWeight { lambda: l.clone(), mu: mu.clone() });
            }
        }
    }
    out
}

/// `(λ | pμ)` with `|λ| + p|μ| = d`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedYoungLabel {
    pub lambda: Partition,
    pub mu: Partition,
    pub p: u32,
}

impl SignedYoungLabel {
    pub fn new(lambda: Partition, mu: Partition, p: u32) -> Self {
        SignedYoungLabel { lambda, mu, p }
    }

    pub fn degree(&self) -> usize {
        self.lambda.size() + self.p as usize * self.mu.size()
    }
}

impl fmt::Display for SignedYoungLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}*{}", self.lambda, self.p, self.mu)
    }
}

impl fmt::Debug for SignedYoungLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl SignedYoungLabel {
    /// Parse `λ|p*μ` (or `λ|-` for empty `μ`, which needs `p` supplied).
    pub fn parse(s: &str, p: u32) -> Result<Self> {
        let (l, rest) = s.split_once('|').ok_or_else(|| Error::Parse(format!("missing '|' in {s:?}")))?;
        let lambda: Partition = l.parse()?;
        let mu = match rest.split_once('*') {
            Some((q, m)) => {
                let q: u32 = q.trim().parse().map_err(|e| Error::Parse(format!("{q:?}: {e}")))?;
                if q != p {
                    return Err(Error::Parse(format!("label prime {q} differs from {p}")));
                }
                m.parse()?
            }
            None => rest.parse()?,
        };
        Ok(SignedYoungLabel { lambda, mu, p })
    }
}

/// Labels `(λ|pμ)` of degree `d`; requires `m, n ≥ d`.
pub fn enumerate_signed_labels(m: usize, n: usize, d: usize, p: u32) -> Result<Vec<SignedYoungLabel>> {
    check_prime(p)?;
    if m < d || n < d {
        return Err(Error::HypothesisViolated(format!("need m,n >= d, got m={m}, n={n}, d={d}")));
    }
    let pu = p as usize;
    let mut out = Vec::new();
    for j in 0..=d / pu {
        for mu in partitions(j) {
            for lambda in partitions(d - pu * j) {
                out.push(SignedYoungLabel { lambda, mu: mu.clone(), p });
            }
        }
    }
    Ok(out)
}

/// Partitions of `d` that are their own p-core.
pub fn pcore_partitions(d: usize, p: u32) -> Result<Vec<Partition>> {
    check_prime(p)?;
    Ok(partitions(d).into_iter().filter(|l| l.is_p_core(p as usize)).collect())
}

/// The two readings of `τ′ + (p)`: add `p` to the first part, or append a
/// part `p` and re-sort.
pub fn transpose_plus_p(tau: &Partition, p: usize) -> (Partition, Partition) {
    let t = tau.transpose();
    let mut first = t.parts.clone();
    if first.is_empty() {
        first.push(p);
    } else {
        first[0] += p;
    }
    let mut cat = t.parts.clone();
    cat.push(p);
    (Partition::from_unsorted(first), Partition::from_unsorted(cat))
}

/// Total order used for block chains: decreasing lexicographic, which
/// refines dominance.
pub fn lex_desc(a: &Partition, b: &Partition) -> Ordering {
    b.parts.cmp(&a.parts)
}
