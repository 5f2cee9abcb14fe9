//! Undirected multigraphs and recognition of Dynkin and Euclidean diagrams.

use std::fmt;

use serde::Serialize;

use super::{escape, QuiverPresentation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UndirectedGraph {
    pub vertices: Vec<String>,
    /// multigraph edges; `(v, v)` is a loop
    pub edges: Vec<(usize, usize)>,
}

impl UndirectedGraph {
    pub fn new(vertices: Vec<String>, edges: Vec<(usize, usize)>) -> Self {
        let n = vertices.len();
        assert!(edges.iter().all(|&(a, b)| a < n && b < n), "edge endpoint out of range");
        UndirectedGraph { vertices, edges }
    }

    /// Unlabeled graph on `n` vertices.
    pub fn unlabeled(n: usize, edges: Vec<(usize, usize)>) -> Self {
        Self::new((0..n).map(|i| i.to_string()).collect(), edges)
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let c = out.len();
            let mut stack = vec![s];
            let mut members = Vec::new();
            comp[s] = c;
            while let Some(v) = stack.pop() {
                members.push(v);
                for &(a, b) in &self.edges {
                    for (x, y) in [(a, b), (b, a)] {
                        if x == v && comp[y] == usize::MAX {
                            comp[y] = c;
                            stack.push(y);
                        }
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Induced subgraph on `verts`, renumbered in the given order.
    pub fn induced(&self, verts: &[usize]) -> UndirectedGraph {
        let pos = |v: usize| verts.iter().position(|&w| w == v);
        let edges = self.edges.iter().filter_map(|&(a, b)| Some((pos(a)?, pos(b)?))).collect();
        UndirectedGraph { vertices: verts.iter().map(|&v| self.vertices[v].clone()).collect(), edges }
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.vertices.len();
        let mut colour = vec![u8::MAX; n];
        for s in 0..n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &(a, b) in &self.edges {
                    for (x, y) in [(a, b), (b, a)] {
                        if x != v {
                            continue;
                        }
                        if colour[y] == u8::MAX {
                            colour[y] = 1 - colour[v];
                            stack.push(y);
                        } else if colour[y] == colour[v] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            s.push_str(&format!("  v{i} [label=\"{}\"];\n", escape(v)));
        }
        for &(a, b) in &self.edges {
            s.push_str(&format!("  v{a} -- v{b};\n"));
        }
        s.push_str("}\n");
        s
    }
}

/// Vertices `V ⊔ V′` with an edge `v — w′` for every arrow `v → w`.
pub fn separated_quiver(q: &QuiverPresentation) -> UndirectedGraph {
    let n = q.vertices().len();
    let mut vertices: Vec<String> = q.vertices().to_vec();
    vertices.extend(q.vertices().iter().map(|v| format!("{v}'")));
    let edges = q.arrows().iter().map(|a| (a.source, n + a.target)).collect();
    UndirectedGraph { vertices, edges }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ComponentType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
    ATilde(usize),
    DTilde(usize),
    E6Tilde,
    E7Tilde,
    E8Tilde,
    Other,
}

impl ComponentType {
    pub fn is_dynkin(self) -> bool {
        matches!(self, ComponentType::A(_) | ComponentType::D(_) | ComponentType::E6 | ComponentType::E7 | ComponentType::E8)
    }

    pub fn is_euclidean(self) -> bool {
        matches!(
            self,
            ComponentType::ATilde(_)
                | ComponentType::DTilde(_)
                | ComponentType::E6Tilde
                | ComponentType::E7Tilde
                | ComponentType::E8Tilde
        )
    }
}

impl fmt::Display for ComponentType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentType::A(n) => write!(f, "A{n}"),
            ComponentType::D(n) => write!(f, "D{n}"),
            ComponentType::E6 => write!(f, "E6"),
            ComponentType::E7 => write!(f, "E7"),
            ComponentType::E8 => write!(f, "E8"),
            ComponentType::ATilde(n) => write!(f, "Ã{n}"),
            ComponentType::DTilde(n) => write!(f, "D̃{n}"),
            ComponentType::E6Tilde => write!(f, "Ẽ6"),
            ComponentType::E7Tilde => write!(f, "Ẽ7"),
            ComponentType::E8Tilde => write!(f, "Ẽ8"),
            ComponentType::Other => write!(f, "other"),
        }
    }
}

/// Arm lengths (vertex counts) hanging off `center` in a tree.
fn arms(adj: &[Vec<usize>], center: usize) -> Vec<usize> {
    adj[center]
        .iter()
        .map(|&start| {
            let (mut prev, mut at, mut len) = (center, start, 1);
            while adj[at].len() == 2 {
                let next = if adj[at][0] == prev { adj[at][1] } else { adj[at][0] };
                prev = at;
                at = next;
                len += 1;
            }
            if adj[at].len() == 1 {
                len
            } else {
                usize::MAX
            }
        })
        .collect()
}

fn classify_connected(g: &UndirectedGraph) -> ComponentType {
    let n = g.vertices.len();
    let e = g.edges.len();
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in &g.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    if n == 1 && e == 0 {
        return ComponentType::A(1);
    }
    if e == n {
        // unicyclic: Euclidean only if it is the bare cycle
        return if adj.iter().all(|x| x.len() == 2) { ComponentType::ATilde(n - 1) } else { ComponentType::Other };
    }
    if e != n - 1 {
        return ComponentType::Other;
    }
    let branch: Vec<usize> = (0..n).filter(|&v| adj[v].len() >= 3).collect();
    match branch.as_slice() {
        [] => ComponentType::A(n),
        [c] => {
            let mut a = arms(&adj, *c);
            a.sort_unstable();
            match a.as_slice() {
                [1, 1, 1, 1] => ComponentType::DTilde(4),
                [1, 1, _] => ComponentType::D(n),
                [1, 2, 2] => ComponentType::E6,
                [1, 2, 3] => ComponentType::E7,
                [1, 2, 4] => ComponentType::E8,
                [2, 2, 2] => ComponentType::E6Tilde,
                [1, 3, 3] => ComponentType::E7Tilde,
                [1, 2, 5] => ComponentType::E8Tilde,
                _ => ComponentType::Other,
            }
        }
        [b1, b2] if adj[*b1].len() == 3 && adj[*b2].len() == 3 => {
            let leaves_ok = (0..n).filter(|&v| adj[v].len() == 1).all(|v| branch.contains(&adj[v][0]));
            if leaves_ok {
                ComponentType::DTilde(n - 1)
            } else {
                ComponentType::Other
            }
        }
        _ => ComponentType::Other,
    }
}

/// Type of each connected component, in the order of [`UndirectedGraph::components`].
pub fn recognize_graph(g: &UndirectedGraph) -> Vec<ComponentType> {
    g.components().iter().map(|c| classify_connected(&g.induced(c))).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Finite,
    InfiniteNonwildCandidate,
    Wild,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Finite => "finite",
            Verdict::InfiniteNonwildCandidate => "infinite-nonwild-candidate",
            Verdict::Wild => "wild",
        })
    }
}

/// Gabriel rule for radical-square-zero algebras from component types.
pub fn verdict_of(types: &[ComponentType]) -> Verdict {
    if types.contains(&ComponentType::Other) {
        Verdict::Wild
    } else if types.iter().any(|t| t.is_euclidean()) {
        Verdict::InfiniteNonwildCandidate
    } else {
        Verdict::Finite
    }
}

/// Verdict for `kQ/(arrows)²` via its separated quiver.
pub fn separated_verdict(q: &QuiverPresentation) -> Verdict {
    verdict_of(&recognize_graph(&separated_quiver(q)))
}
