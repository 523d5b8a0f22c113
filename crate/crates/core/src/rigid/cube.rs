use std::collections::HashMap;

use crate::complex::{GeneratedComplex, SimplexKey};
use crate::error::{Error, Result};
use crate::necklace::{Necklace, VertexSet};

/// Subsets of `V_T(a, b)` containing `J_T(a, b)`, ordered by inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubePoset {
    pub necklace: Necklace,
    pub a: usize,
    pub b: usize,
    pub joints: VertexSet,
    pub vertices: VertexSet,
}

impl CubePoset {
    pub fn new(necklace: &Necklace, a: usize, b: usize) -> Result<Self> {
        for v in [a, b] {
            if v >= necklace.vertex_count() {
                return Err(Error::VertexOutOfRange { vertex: v, count: necklace.vertex_count() });
            }
        }
        Ok(Self {
            necklace: necklace.clone(),
            a,
            b,
            joints: necklace.joints_between(a, b),
            vertices: necklace.vertices_between(a, b),
        })
    }

    pub fn is_empty(&self) -> bool {
        self.b < self.a
    }

    /// `V_T(a, b) - J_T(a, b)`.
    pub fn free(&self) -> VertexSet {
        self.vertices.difference(self.joints)
    }

    /// Dimension `N` of the cube.
    pub fn dimension(&self) -> usize {
        self.free().len()
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        !self.is_empty() && self.joints.is_subset(s) && s.is_subset(self.vertices)
    }

    /// All elements, ordered by size and then by bits.
    pub fn elements(&self) -> Vec<VertexSet> {
        if self.is_empty() {
            return Vec::new();
        }
        let free: Vec<usize> = self.free().to_vec();
        let mut out: Vec<VertexSet> = (0u64..(1 << free.len()))
            .map(|mask| {
                let extra: VertexSet = free.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &v)| v).collect();
                self.joints.union(extra)
            })
            .collect();
        out.sort_by_key(|s| (s.len(), s.bits()));
        out
    }

    /// Strict chains of length `dim + 1`, in lexicographic order.
    pub fn chains(&self, dim: usize) -> Vec<Vec<VertexSet>> {
        let elements = self.elements();
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(elements: &[VertexSet], len: usize, current: &mut Vec<VertexSet>, out: &mut Vec<Vec<VertexSet>>) {
            if current.len() == len {
                out.push(current.clone());
                return;
            }
            for &e in elements {
                if current.last().is_none_or(|&l| l != e && l.is_subset(e)) {
                    current.push(e);
                    rec(elements, len, current, out);
                    current.pop();
                }
            }
        }
        rec(&elements, dim + 1, &mut current, &mut out);
        out
    }
}

fn chain_label(chain: &[VertexSet]) -> String {
    chain
        .iter()
        .map(|s| format!("{{{}}}", s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join("<")
}

/// The nerve of the cube poset `P_T(a, b)`, i.e. `𝔠(T)(a, b)`. Empty when `b < a`.
pub fn necklace_mapping_space(t: &Necklace, a: usize, b: usize) -> Result<GeneratedComplex> {
    let poset = CubePoset::new(t, a, b)?;
    if poset.is_empty() {
        return Ok(GeneratedComplex::empty());
    }
    let top = poset.dimension();
    let chains: Vec<Vec<Vec<VertexSet>>> = (0..=top).map(|d| poset.chains(d)).collect();
    let index: Vec<HashMap<&[VertexSet], usize>> = chains
        .iter()
        .map(|layer| layer.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect())
        .collect();
    let counts = chains.iter().map(Vec::len).collect();
    let faces = chains
        .iter()
        .enumerate()
        .map(|(d, layer)| {
            layer
                .iter()
                .map(|c| {
                    if d == 0 {
                        return Vec::new();
                    }
                    (0..=d)
                        .map(|i| {
                            let mut f = c.clone();
                            f.remove(i);
                            SimplexKey::nondegenerate(d - 1, index[d - 1][f.as_slice()])
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let labels = chains.iter().map(|layer| layer.iter().map(|c| chain_label(c)).collect()).collect();
    GeneratedComplex::from_parts(counts, faces, labels)
}

/// The cube face spanned by `Y ⊆ Y ∪ M`, as the chain that adds the
/// elements of `M` in increasing order.
pub fn cube_face(t: &Necklace, a: usize, b: usize, y: VertexSet, n: VertexSet, m: VertexSet) -> Result<Vec<VertexSet>> {
    let poset = CubePoset::new(t, a, b)?;
    if poset.is_empty() {
        return Err(Error::InvalidCubeFace(format!("{b} precedes {a}")));
    }
    if !poset.joints.is_subset(y) {
        return Err(Error::InvalidCubeFace(format!("Y = {y:?} misses joints {:?}", poset.joints)));
    }
    let disjoint = y.intersection(n).is_empty() && y.intersection(m).is_empty() && n.intersection(m).is_empty();
    if !disjoint || y.union(n).union(m) != poset.vertices {
        return Err(Error::InvalidCubeFace("Y, N, M must partition V_T(a, b)".into()));
    }
    let mut chain = vec![y];
    let mut acc = y;
    for v in m.iter() {
        acc.insert(v);
        chain.push(acc);
    }
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{check_simplicial_identities, SimplicialSet};

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn square() {
        let c = necklace_mapping_space(&Necklace::simplex(3), 0, 3).unwrap();
        assert_eq!(c.f_vector(), vec![4, 5, 2]);
        check_simplicial_identities(&c, 3).unwrap();
    }

    #[test]
    fn formula_dimension() {
        let t = Necklace::new(vec![1, 2, 1]).unwrap();
        let p = CubePoset::new(&t, 0, 4).unwrap();
        assert_eq!(p.dimension(), 1);
        assert_eq!(necklace_mapping_space(&t, 0, 4).unwrap().f_vector(), vec![2, 1]);
    }

    #[test]
    fn point_and_empty() {
        let t = Necklace::simplex(3);
        assert_eq!(necklace_mapping_space(&t, 2, 2).unwrap().f_vector(), vec![1]);
        assert_eq!(necklace_mapping_space(&t, 2, 1).unwrap().f_vector(), Vec::<usize>::new());
        assert!(necklace_mapping_space(&t, 0, 9).is_err());
    }

    #[test]
    fn cube_faces() {
        let t = Necklace::simplex(3);
        let c = cube_face(&t, 0, 3, set(&[0, 3]), set(&[]), set(&[1, 2])).unwrap();
        assert_eq!(c, vec![set(&[0, 3]), set(&[0, 1, 3]), set(&[0, 1, 2, 3])]);
        let v = cube_face(&t, 0, 3, set(&[0, 1, 3]), set(&[2]), set(&[])).unwrap();
        assert_eq!(v, vec![set(&[0, 1, 3])]);
        assert!(cube_face(&t, 0, 3, set(&[0]), set(&[1, 2]), set(&[3])).is_err());
        assert!(cube_face(&t, 0, 3, set(&[0, 3]), set(&[1]), set(&[1, 2])).is_err());
    }
}
