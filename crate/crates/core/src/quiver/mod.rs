//! Quivers with relations, separated quivers and Gabriel-type verdicts.
//!
//! Paths are read left to right: `f.g` means `f` then `g`, so the target of
//! `f` must be the source of `g`.

mod graph;
mod pathalg;
mod text;

use serde::Serialize;

use crate::error::{Error, Result};

pub use graph::{
    recognize_graph, separated_quiver, separated_verdict, verdict_of, ComponentType, UndirectedGraph, Verdict,
};
pub use pathalg::{chain_assignment, check_relations, graded_dims, is_presentation, path_algebra, PathAlgebra};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub label: String,
}

/// The relation `Σ c · path = 0`; a path is a list of arrow indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub terms: Vec<(i64, Vec<usize>)>,
}

impl Relation {
    pub fn zero(path: Vec<usize>) -> Self {
        Relation { terms: vec![(1, path)] }
    }

    /// `lhs = rhs` as `lhs - rhs = 0`.
    pub fn equal(lhs: Vec<(i64, Vec<usize>)>, rhs: Vec<(i64, Vec<usize>)>) -> Self {
        let mut terms = lhs;
        terms.extend(rhs.into_iter().map(|(c, w)| (-c, w)));
        Relation { terms }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuiverPresentation {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    relations: Vec<Relation>,
}

impl QuiverPresentation {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>, relations: Vec<Relation>) -> Result<Self> {
        let q = QuiverPresentation { vertices, arrows, relations };
        q.validate()?;
        Ok(q)
    }

    fn validate(&self) -> Result<()> {
        let n = self.vertices.len();
        for (i, v) in self.vertices.iter().enumerate() {
            if self.vertices[..i].contains(v) {
                return Err(Error::Invalid(format!("duplicate vertex {v}")));
            }
        }
        for (i, a) in self.arrows.iter().enumerate() {
            if a.source >= n || a.target >= n {
                return Err(Error::Invalid(format!("arrow {} has an invalid endpoint", a.label)));
            }
            if self.arrows[..i].iter().any(|b| b.label == a.label) {
                return Err(Error::Invalid(format!("duplicate arrow {}", a.label)));
            }
        }
        for r in &self.relations {
            let mut ends = None;
            for (_, path) in &r.terms {
                let e = self.path_ends(path)?;
                if *ends.get_or_insert(e) != e {
                    return Err(Error::Invalid("relation terms are not parallel".into()));
                }
            }
        }
        Ok(())
    }

    /// `(source, target)` of a nonempty composable path.
    pub fn path_ends(&self, path: &[usize]) -> Result<(usize, usize)> {
        let first = *path.first().ok_or_else(|| Error::Invalid("empty path".into()))?;
        let mut at = self.arrow(first)?.source;
        for &a in path {
            let arrow = self.arrow(a)?;
            if arrow.source != at {
                return Err(Error::Invalid("path is not composable".into()));
            }
            at = arrow.target;
        }
        Ok((self.arrows[first].source, at))
    }

    fn arrow(&self, a: usize) -> Result<&Arrow> {
        self.arrows.get(a).ok_or_else(|| Error::Invalid(format!("no arrow {a}")))
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    /// Arrow multiplicities `Q[i][j]` = number of arrows `i → j`.
    pub fn arrow_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut m = vec![vec![0; n]; n];
        for a in &self.arrows {
            m[a.source][a.target] += 1;
        }
        m
    }

    /// Quiver without relations from an arrow-count matrix, vertices named `0, 1, …`.
    pub fn from_arrow_matrix(counts: &[Vec<usize>]) -> Self {
        let vertices = (0..counts.len()).map(|i| i.to_string()).collect();
        let mut arrows = Vec::new();
        for (i, row) in counts.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                for k in 0..c {
                    let label = if c == 1 { format!("x{i}_{j}") } else { format!("x{i}_{j}_{k}") };
                    arrows.push(Arrow { source: i, target: j, label });
                }
            }
        }
        QuiverPresentation { vertices, arrows, relations: Vec::new() }
    }

    /// Same arrow multiplicities up to relabeling vertices.
    pub fn is_isomorphic_to(&self, other: &QuiverPresentation) -> bool {
        let (a, b) = (self.arrow_matrix(), other.arrow_matrix());
        if a.len() != b.len() || self.arrows.len() != other.arrows.len() {
            return false;
        }
        let n = a.len();
        let profile = |m: &Vec<Vec<usize>>, i: usize| {
            let out: usize = m[i].iter().sum();
            let inn: usize = m.iter().map(|r| r[i]).sum();
            (out, inn, m[i][i])
        };
        let mut perm = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn extend(
            i: usize,
            a: &[Vec<usize>],
            b: &[Vec<usize>],
            perm: &mut Vec<usize>,
            used: &mut Vec<bool>,
            ok: &dyn Fn(usize, usize) -> bool,
        ) -> bool {
            if i == a.len() {
                return true;
            }
            for j in 0..a.len() {
                if used[j] || !ok(i, j) {
                    continue;
                }
                if (0..i).any(|k| a[i][k] != b[j][perm[k]] || a[k][i] != b[perm[k]][j]) {
                    continue;
                }
                perm[i] = j;
                used[j] = true;
                if extend(i + 1, a, b, perm, used, ok) {
                    return true;
                }
                used[j] = false;
            }
            false
        }
        let ok = |i: usize, j: usize| profile(&a, i) == profile(&b, j);
        extend(0, &a, &b, &mut perm, &mut used, &ok)
    }

    pub fn with_vertex_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.vertices.len() {
            return Err(Error::SizeMismatch(self.vertices.len(), names.len()));
        }
        self.vertices = names;
        Ok(self)
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph Q {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            s.push_str(&format!("  v{i} [label=\"{}\"];\n", escape(v)));
        }
        for a in &self.arrows {
            s.push_str(&format!("  v{} -> v{} [label=\"{}\"];\n", a.source, a.target, escape(&a.label)));
        }
        s.push_str("}\n");
        s
    }
}

pub(crate) fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// Quiver with both arrows `u → v` and `v → u` for every listed pair.
fn doubled(vertices: &[&str], pairs: &[(&str, &str, &str, &str)]) -> QuiverPresentation {
    let vs = names(vertices);
    let idx = |name: &str| vs.iter().position(|v| v == name).expect("listed vertex");
    let mut arrows = Vec::new();
    for &(u, v, uv, vu) in pairs {
        arrows.push(Arrow { source: idx(u), target: idx(v), label: uv.to_string() });
        arrows.push(Arrow { source: idx(v), target: idx(u), label: vu.to_string() });
    }
    QuiverPresentation { vertices: vs, arrows, relations: Vec::new() }
}

/// The chain quiver on `0..=m` with `α_i: i-1 → i`, `β_i: i → i-1` and relations
/// `α_iα_{i+1} = β_{i+1}β_i = 0`, `α_1β_1 = β_mα_m = 0`, `β_iα_i = α_{i+1}β_{i+1}`.
/// Arrows are ordered `α_1, …, α_m, β_1, …, β_m`.
pub fn a_tilde(m: usize) -> Result<QuiverPresentation> {
    if m == 0 {
        return Err(Error::Invalid("a_tilde needs m >= 1".into()));
    }
    let vertices = (0..=m).map(|i| i.to_string()).collect();
    let mut arrows = Vec::with_capacity(2 * m);
    for i in 1..=m {
        arrows.push(Arrow { source: i - 1, target: i, label: format!("α{i}") });
    }
    for i in 1..=m {
        arrows.push(Arrow { source: i, target: i - 1, label: format!("β{i}") });
    }
    let alpha = |i: usize| i - 1;
    let beta = |i: usize| m + i - 1;
    let mut relations = Vec::new();
    for i in 1..m {
        relations.push(Relation::zero(vec![alpha(i), alpha(i + 1)]));
        relations.push(Relation::zero(vec![beta(i + 1), beta(i)]));
    }
    relations.push(Relation::zero(vec![alpha(1), beta(1)]));
    relations.push(Relation::zero(vec![beta(m), alpha(m)]));
    for i in 1..m {
        relations.push(Relation::equal(vec![(1, vec![beta(i), alpha(i)])], vec![(1, vec![alpha(i + 1), beta(i + 1)])]));
    }
    QuiverPresentation::new(vertices, arrows, relations)
}

/// The named quivers `L`, `Q` and `H`.
pub fn named_quiver(name: &str) -> Result<QuiverPresentation> {
    match name {
        "L" => Ok(doubled(
            &["0", "1", "*", "μ", "2"],
            &[
                ("0", "1", "x01", "x10"),
                ("1", "*", "x1s", "xs1"),
                ("*", "μ", "xsμ", "xμs"),
                ("1", "2", "x12", "x21"),
                ("μ", "2", "xμ2", "x2μ"),
            ],
        )),
        "Q" => {
            let mut q = doubled(
                &["0", "1", "2", "3", "δ", "τ"],
                &[
                    ("0", "1", "α1", "β1"),
                    ("1", "2", "α2", "β2"),
                    ("2", "3", "α3", "β3"),
                    ("δ", "2", "f", "g"),
                    ("2", "τ", "h", "k"),
                ],
            );
            let a = |l: &str| q.arrow_index(l).expect("listed arrow");
            let mut rels: Vec<Relation> = [["α1", "α2"], ["α2", "α3"], ["α2", "h"], ["β3", "β2"], ["β2", "β1"], ["β3", "g"], ["f", "α3"]]
                .iter()
                .map(|[x, y]| Relation::zero(vec![a(x), a(y)]))
                .collect();
            rels.push(Relation::equal(vec![(1, vec![a("h"), a("k")])], vec![(1, vec![a("g"), a("f")])]));
            rels.push(Relation::equal(
                vec![(1, vec![a("g"), a("f")])],
                vec![(1, vec![a("β2"), a("α2")]), (1, vec![a("α3"), a("β3")])],
            ));
            q.relations = rels;
            q.validate()?;
            Ok(q)
        }
        "H" => Ok(doubled(
            &["3", "2", "1", "0", "*", "ρ"],
            &[
                ("3", "2", "x32", "x23"),
                ("2", "1", "x21", "x12"),
                ("1", "0", "x10", "x01"),
                ("1", "*", "x1s", "xs1"),
                ("1", "ρ", "x1ρ", "xρ1"),
            ],
        )),
        other => Err(Error::UnknownName(other.to_string())),
    }
}

/// Ordering of vertices along a doubled chain (`Q[i][i±1] = 1`), if the
/// arrow matrix has that shape.
pub fn chain_order(counts: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = counts.len();
    if n == 0 {
        return None;
    }
    let nbrs: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| counts[i][j] > 0 || counts[j][i] > 0).collect())
        .collect();
    for i in 0..n {
        for &j in &nbrs[i] {
            if i == j || counts[i][j] != 1 || counts[j][i] != 1 {
                return None;
            }
        }
    }
    if n == 1 {
        return Some(vec![0]);
    }
    let start = (0..n).find(|&i| nbrs[i].len() == 1)?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut at = start;
    while let Some(&next) = nbrs[at].iter().find(|&&j| j != prev) {
        if order.contains(&next) {
            return None;
        }
        order.push(next);
        prev = at;
        at = next;
        if nbrs[at].len() > 2 {
            return None;
        }
    }
    (order.len() == n).then_some(order)
}
