use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use super::{OrderedComplex, SimplexKey, SimplicialSet, VertexId};
use crate::error::{Error, Result};

/// Outcome of a predicate that can exhibit a counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

/// Reflexive-transitive closure of the edge relation `source -> target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreorderRelation {
    n: usize,
    reach: Vec<bool>,
}

impl PreorderRelation {
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(s, t) in edges {
            adj[s].push(t);
        }
        let mut reach = vec![false; n * n];
        for start in 0..n {
            let mut queue = VecDeque::from([start]);
            reach[start * n + start] = true;
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if !reach[start * n + w] {
                        reach[start * n + w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        Self { n, reach }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, a: VertexId, b: VertexId) -> bool {
        self.reach[a * self.n + b]
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|a| self.leq(a, a))
    }

    pub fn is_transitive(&self) -> bool {
        (0..self.n).all(|a| {
            (0..self.n).all(|b| !self.leq(a, b) || (0..self.n).all(|c| !self.leq(b, c) || self.leq(a, c)))
        })
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| !(self.leq(a, b) && self.leq(b, a))))
    }

    /// Pairs `(a, b)` with `a ⪯ b`.
    pub fn related_pairs(&self) -> Vec<(VertexId, VertexId)> {
        (0..self.n)
            .flat_map(|a| (0..self.n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.leq(a, b))
            .collect()
    }

    /// A directed cycle `a, ..., b, ..., a` through two distinct mutually
    /// reachable vertices, if one exists.
    pub(crate) fn antisymmetry_witness(&self, edges: &[(VertexId, VertexId)]) -> Option<Vec<VertexId>> {
        let (a, b) = (0..self.n)
            .flat_map(|a| (0..a).map(move |b| (b, a)))
            .find(|&(a, b)| self.leq(a, b) && self.leq(b, a))?;
        let mut cycle = path(self.n, edges, a, b)?;
        let back = path(self.n, edges, b, a)?;
        cycle.extend_from_slice(&back[1..]);
        Some(cycle)
    }
}

/// Shortest directed path from `from` to `to` (BFS, edges scanned in order).
fn path(n: usize, edges: &[(VertexId, VertexId)], from: VertexId, to: VertexId) -> Option<Vec<VertexId>> {
    let mut parent = vec![usize::MAX; n];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            break;
        }
        for &(s, t) in edges {
            if s == u && parent[t] == usize::MAX {
                parent[t] = u;
                queue.push_back(t);
            }
        }
    }
    if parent[to] == usize::MAX {
        return None;
    }
    let mut out = vec![to];
    let mut cur = to;
    while cur != from {
        cur = parent[cur];
        out.push(cur);
    }
    out.reverse();
    Some(out)
}

fn edge_list<S: SimplicialSet + ?Sized>(complex: &S) -> Vec<(VertexId, VertexId)> {
    (0..complex.generator_count(1))
        .map(|g| {
            let v = complex.generator_vertices(1, g);
            (v[0], v[1])
        })
        .collect()
}

/// Reachability preorder of a complex.
pub fn preceq<S: SimplicialSet + ?Sized>(complex: &S) -> PreorderRelation {
    PreorderRelation::from_edges(complex.vertex_count(), &edge_list(complex))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum OrderedViolation {
    /// Two distinct vertices reach each other along this directed cycle.
    Cycle(Vec<VertexId>),
    /// Two distinct simplices with the same dimension and vertex sequence.
    SharedVertices { vertices: Vec<VertexId>, first: SimplexKey, second: SimplexKey },
}

impl std::fmt::Display for OrderedViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OrderedViolation::Cycle(c) => write!(f, "directed cycle through vertices {c:?}"),
            OrderedViolation::SharedVertices { vertices, first, second } => {
                write!(f, "simplices {first} and {second} share vertex sequence {vertices:?}")
            }
        }
    }
}

/// Decides whether a complex is ordered.
///
/// After antisymmetry, degenerate simplices are exactly those with a
/// consecutive vertex repeat, so it suffices to compare nondegenerate
/// generators pairwise and to reject any generator whose vertex sequence
/// repeats consecutively (it collides with `s_i d_i` of itself).
pub fn is_ordered<S: SimplicialSet + ?Sized>(complex: &S) -> Verdict<OrderedViolation> {
    let edges = edge_list(complex);
    let order = PreorderRelation::from_edges(complex.vertex_count(), &edges);
    if let Some(cycle) = order.antisymmetry_witness(&edges) {
        return Verdict::Fails(OrderedViolation::Cycle(cycle));
    }
    let Some(top) = complex.max_dim() else {
        return Verdict::Holds;
    };
    for d in 1..=top {
        let mut seen = HashMap::new();
        for g in 0..complex.generator_count(d) {
            let key = SimplexKey::nondegenerate(d, g);
            let vertices = complex.generator_vertices(d, g);
            if let Some(i) = vertices.windows(2).position(|w| w[0] == w[1]) {
                let other = complex
                    .face(&key, i)
                    .and_then(|f| complex.degeneracy(&f, i))
                    .expect("valid operator indices");
                return Verdict::Fails(OrderedViolation::SharedVertices {
                    vertices,
                    first: other,
                    second: key,
                });
            }
            if let Some(prev) = seen.insert(vertices.clone(), key.clone()) {
                return Verdict::Fails(OrderedViolation::SharedVertices { vertices, first: prev, second: key });
            }
        }
    }
    Verdict::Holds
}

/// A simplicial subset of an ambient complex, as a face-closed set of
/// nondegenerate generators `(dim, gen)` of the ambient complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subcomplex {
    members: BTreeSet<(usize, usize)>,
}

impl Subcomplex {
    /// Validates face-closure of `members` inside `ambient`.
    pub fn new<S: SimplicialSet + ?Sized>(
        ambient: &S,
        members: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let members: BTreeSet<_> = members.into_iter().collect();
        for &(d, g) in &members {
            if g >= ambient.generator_count(d) {
                return Err(Error::NotSubcomplex(format!("generator {g} of dimension {d} is not in the ambient complex")));
            }
            if d == 0 {
                continue;
            }
            for i in 0..=d {
                let f = ambient.generator_face(d, g, i);
                if !members.contains(&(f.gen_dim(), f.gen)) {
                    return Err(Error::NotSubcomplex(format!("face {i} of ({d}, {g}) is missing")));
                }
            }
        }
        Ok(Self { members })
    }

    /// The subcomplex generated by `chains` (and all their faces) inside an
    /// ordered complex.
    pub fn from_chains(ambient: &OrderedComplex, chains: &[Vec<VertexId>]) -> Result<Self> {
        let mut members = BTreeSet::new();
        for chain in chains {
            let n = chain.len();
            if n == 0 || n > 63 {
                return Err(Error::NotSubcomplex(format!("bad chain {chain:?}")));
            }
            for mask in 1u64..(1u64 << n) {
                let sub: Vec<VertexId> =
                    (0..n).filter(|i| mask & (1 << i) != 0).map(|i| chain[i]).collect();
                let g = ambient
                    .chain_index(&sub)
                    .ok_or_else(|| Error::NotSubcomplex(format!("{sub:?} is not a simplex of the ambient complex")))?;
                members.insert((sub.len() - 1, g));
            }
        }
        Ok(Self { members })
    }

    pub fn contains(&self, dim: usize, gen: usize) -> bool {
        self.members.contains(&(dim, gen))
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.contains(0, v)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SimpleInclusionWitness {
    /// A directed path with both ends in the subcomplex that leaves it.
    PathLeaves { path: Vec<VertexId> },
    /// A nondegenerate simplex with first and last vertex in the
    /// subcomplex that is not itself in the subcomplex.
    SimplexOutside { vertices: Vec<VertexId> },
}

/// Decides whether `sub ↪ ambient` is a simple inclusion.
///
/// Uses the finite criterion: (a) every edge on a directed path between
/// vertices of `sub` lies in `sub`, and (b) every nondegenerate simplex whose
/// initial and final vertices lie in `sub` lies in `sub`. Any necklace from
/// `sub` to `sub` has its spine inside `sub` by (a), so all joints are in
/// `sub`, and each bead is then in `sub` by (b).
pub fn is_simple_inclusion<S: SimplicialSet + ?Sized>(
    sub: &Subcomplex,
    ambient: &S,
) -> Verdict<SimpleInclusionWitness> {
    let edges = edge_list(ambient);
    let n = ambient.vertex_count();
    let order = PreorderRelation::from_edges(n, &edges);
    let inside: Vec<VertexId> = (0..n).filter(|&v| sub.contains_vertex(v)).collect();
    for (g, &(u, v)) in edges.iter().enumerate() {
        if sub.contains(1, g) {
            continue;
        }
        for &a in &inside {
            if !order.leq(a, u) {
                continue;
            }
            if let Some(&b) = inside.iter().find(|&&b| order.leq(v, b)) {
                let mut p = path(n, &edges, a, u).expect("reachable");
                p.extend(path(n, &edges, v, b).expect("reachable"));
                return Verdict::Fails(SimpleInclusionWitness::PathLeaves { path: p });
            }
        }
    }
    let Some(top) = ambient.max_dim() else {
        return Verdict::Holds;
    };
    for d in 1..=top {
        for g in 0..ambient.generator_count(d) {
            if sub.contains(d, g) {
                continue;
            }
            let vertices = ambient.generator_vertices(d, g);
            if sub.contains_vertex(vertices[0]) && sub.contains_vertex(vertices[d]) {
                return Verdict::Fails(SimpleInclusionWitness::SimplexOutside { vertices });
            }
        }
    }
    Verdict::Holds
}
