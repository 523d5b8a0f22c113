use std::collections::{BTreeSet, HashMap};

use super::{
    generated::GeneratedComplex, order::PreorderRelation, DegeneracyWord, SimplexKey,
    SimplicialSet, VertexId,
};
use crate::error::{Error, Result};

/// A finite ordered simplicial set stored by its nondegenerate vertex chains.
///
/// Reachability along edges is antisymmetric and every simplex is determined
/// by its vertex sequence, so a chain of distinct vertices *is* a simplex. A
/// degenerate simplex is a chain with consecutive repeats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedComplex {
    vertex_count: usize,
    /// `simplices[d]` holds the `d`-chains in lexicographic order.
    simplices: Vec<Vec<Vec<VertexId>>>,
    index: HashMap<Vec<VertexId>, usize>,
    order: PreorderRelation,
}

impl OrderedComplex {
    /// The complex whose simplices are all nonempty subchains of `chains`.
    /// Vertices are `0..=max id`.
    pub fn from_maximal_chains(chains: &[Vec<VertexId>]) -> Result<Self> {
        let count = chains.iter().flatten().map(|&v| v + 1).max().unwrap_or(0);
        Self::with_vertex_count(count, chains)
    }

    /// As [`from_maximal_chains`](Self::from_maximal_chains) with an explicit
    /// vertex count, so isolated vertices may be present.
    pub fn with_vertex_count(vertex_count: usize, chains: &[Vec<VertexId>]) -> Result<Self> {
        let mut all = BTreeSet::new();
        for v in 0..vertex_count {
            all.insert(vec![v]);
        }
        for chain in chains {
            if let Some(&v) = chain.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::VertexOutOfRange { vertex: v, count: vertex_count });
            }
            let distinct: BTreeSet<_> = chain.iter().collect();
            if distinct.len() != chain.len() {
                return Err(Error::RepeatedVertex { chain: chain.clone() });
            }
            if chain.len() > 63 {
                return Err(Error::NotOrdered(format!("chain of length {} too long", chain.len())));
            }
            for mask in 1u64..(1u64 << chain.len()) {
                let sub: Vec<VertexId> = chain
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &v)| v)
                    .collect();
                all.insert(sub);
            }
        }
        Self::from_face_closed(vertex_count, all)
    }

    /// Builds from a set of chains that is already closed under faces.
    pub(crate) fn from_face_closed(
        vertex_count: usize,
        chains: impl IntoIterator<Item = Vec<VertexId>>,
    ) -> Result<Self> {
        let mut simplices: Vec<Vec<Vec<VertexId>>> = Vec::new();
        for chain in chains {
            let d = chain.len() - 1;
            if simplices.len() <= d {
                simplices.resize(d + 1, Vec::new());
            }
            simplices[d].push(chain);
        }
        for layer in &mut simplices {
            layer.sort();
            layer.dedup();
        }
        let mut index = HashMap::new();
        for layer in &simplices {
            for (i, c) in layer.iter().enumerate() {
                index.insert(c.clone(), i);
            }
        }
        let edges: Vec<(VertexId, VertexId)> = simplices
            .get(1)
            .map(|l| l.iter().map(|c| (c[0], c[1])).collect())
            .unwrap_or_default();
        let order = PreorderRelation::from_edges(vertex_count, &edges);
        if let Some(cycle) = order.antisymmetry_witness(&edges) {
            return Err(Error::NotAntisymmetric { cycle });
        }
        Ok(Self { vertex_count, simplices, index, order })
    }

    /// Re-presents any ordered simplicial set by its vertex chains.
    pub fn from_simplicial_set<S: SimplicialSet + ?Sized>(s: &S) -> Result<Self> {
        if let super::Verdict::Fails(w) = super::is_ordered(s) {
            return Err(Error::NotOrdered(w.to_string()));
        }
        let mut chains = Vec::new();
        for d in 0..=s.max_dim().unwrap_or(0) {
            for g in 0..s.generator_count(d) {
                chains.push(s.generator_vertices(d, g));
            }
        }
        Self::from_face_closed(s.vertex_count(), chains)
    }

    /// The standard simplex `Δⁿ`.
    pub fn simplex(n: usize) -> Self {
        Self::from_maximal_chains(&[(0..=n).collect()]).expect("Δⁿ is ordered")
    }

    pub fn simplices(&self, dim: usize) -> &[Vec<VertexId>] {
        self.simplices.get(dim).map_or(&[], |l| l.as_slice())
    }

    pub fn chains(&self) -> impl Iterator<Item = &Vec<VertexId>> {
        self.simplices.iter().flatten()
    }

    pub fn simplex_count(&self) -> usize {
        self.simplices.iter().map(Vec::len).sum()
    }

    pub fn dimension(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn contains_chain(&self, chain: &[VertexId]) -> bool {
        self.index.contains_key(chain)
    }

    pub fn chain_index(&self, chain: &[VertexId]) -> Option<usize> {
        self.index.get(chain).copied()
    }

    pub fn order(&self) -> &PreorderRelation {
        &self.order
    }

    /// Chains starting at `v`, including the 0-chain `[v]`.
    pub fn chains_from(&self, v: VertexId) -> impl Iterator<Item = &Vec<VertexId>> {
        self.chains().filter(move |c| c[0] == v)
    }

    /// Key of the (possibly degenerate) simplex with vertex sequence `seq`,
    /// or `None` if no such simplex exists.
    pub fn key_of_sequence(&self, seq: &[VertexId]) -> Option<SimplexKey> {
        if seq.is_empty() {
            return None;
        }
        let mut chain = vec![seq[0]];
        let mut sigma = vec![0usize];
        for &v in &seq[1..] {
            if v != *chain.last().unwrap() {
                chain.push(v);
            }
            sigma.push(chain.len() - 1);
        }
        let gen = self.chain_index(&chain)?;
        Some(SimplexKey {
            dim: seq.len() - 1,
            gen,
            word: DegeneracyWord::from_surjection(&sigma),
        })
    }

    /// The same simplicial set with generators numbered as in this complex.
    pub fn to_generated(&self) -> GeneratedComplex {
        let counts: Vec<usize> = self.simplices.iter().map(Vec::len).collect();
        let faces = (0..counts.len())
            .map(|d| {
                (0..counts[d])
                    .map(|g| if d == 0 { Vec::new() } else { (0..=d).map(|i| self.generator_face(d, g, i)).collect() })
                    .collect()
            })
            .collect();
        let labels = self
            .simplices
            .iter()
            .map(|l| l.iter().map(|c| format!("{c:?}").replace(' ', "")).collect())
            .collect();
        GeneratedComplex::from_parts(counts, faces, labels)
            .expect("ordered complexes have valid face tables")
    }
}

impl SimplicialSet for OrderedComplex {
    fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    fn generator_count(&self, dim: usize) -> usize {
        self.simplices(dim).len()
    }

    fn max_dim(&self) -> Option<usize> {
        self.dimension()
    }

    fn generator_face(&self, dim: usize, gen: usize, i: usize) -> SimplexKey {
        let mut chain = self.simplices[dim][gen].clone();
        chain.remove(i);
        SimplexKey::nondegenerate(dim - 1, self.index[&chain])
    }

    fn generator_vertices(&self, dim: usize, gen: usize) -> Vec<VertexId> {
        self.simplices[dim][gen].clone()
    }
}
