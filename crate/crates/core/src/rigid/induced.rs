use super::{FlaggedTriple, MappingSimplex};
use crate::complex::{OrderedComplex, SimplicialSet, VertexId};
use crate::error::{Error, Result};
use crate::necklace::NecklaceMap;

/// A simplicial map of ordered complexes, given by its vertex map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedMap {
    vertex_map: Vec<VertexId>,
}

impl OrderedMap {
    /// Checks that every simplex of `source` lands on a (possibly degenerate)
    /// simplex of `target`.
    pub fn new(source: &OrderedComplex, target: &OrderedComplex, vertex_map: Vec<VertexId>) -> Result<Self> {
        if vertex_map.len() != source.vertex_count() {
            return Err(Error::LengthMismatch { left: vertex_map.len(), right: source.vertex_count() });
        }
        for chain in source.chains() {
            let image: Vec<VertexId> = chain.iter().map(|&v| vertex_map[v]).collect();
            if target.key_of_sequence(&image).is_none() {
                return Err(Error::InvalidSimplicialMap(format!("{chain:?} goes to {image:?}, which is not a simplex")));
            }
        }
        Ok(Self { vertex_map })
    }

    pub fn identity(s: &OrderedComplex) -> Self {
        Self { vertex_map: (0..s.vertex_count()).collect() }
    }

    pub fn vertex_map(&self) -> &[VertexId] {
        &self.vertex_map
    }

    pub fn apply(&self, v: VertexId) -> VertexId {
        self.vertex_map[v]
    }
}

/// `𝔠(f)` on a simplex: post-compose the necklace map and canonicalize.
pub fn induced_map(f: &OrderedMap, target: &OrderedComplex, m: &MappingSimplex) -> Result<MappingSimplex> {
    let vertices: Vec<VertexId> = m.map().vertices().iter().map(|&v| f.apply(v)).collect();
    let map = NecklaceMap::from_vertices(target, m.map().necklace().clone(), vertices)?;
    FlaggedTriple::new(map, m.flag().to_vec())?.canonicalize(target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::product;
    use crate::rigid::{compose, mapping_space};

    #[test]
    fn identity_is_identity() {
        let s = OrderedComplex::simplex(3);
        let id = OrderedMap::identity(&s);
        let sp = mapping_space(&s, 0, 3).unwrap();
        for d in 0..3 {
            for m in sp.all_simplices(d) {
                assert_eq!(induced_map(&id, &s, &m).unwrap(), m);
            }
        }
    }

    #[test]
    fn projection_of_square() {
        let e = OrderedComplex::simplex(1);
        let p = product(&e, &e);
        let left = OrderedMap::new(&p.complex, &e, p.left.clone()).unwrap();
        let sp = mapping_space(&p.complex, 0, 3).unwrap();
        let target = mapping_space(&e, 0, 1).unwrap();
        for m in sp.simplices(0) {
            let image = induced_map(&left, &e, m).unwrap();
            assert_eq!(target.key_of(&image).map(|k| k.gen), Some(0));
        }
    }

    #[test]
    fn respects_composition() {
        let s = OrderedComplex::simplex(3);
        let t = OrderedComplex::simplex(2);
        let f = OrderedMap::new(&s, &t, vec![0, 1, 1, 2]).unwrap();
        let (g1, g2) = (mapping_space(&s, 0, 2).unwrap(), mapping_space(&s, 2, 3).unwrap());
        for d in 0..2 {
            for a in g1.all_simplices(d) {
                for b in g2.all_simplices(d) {
                    let lhs = induced_map(&f, &t, &compose(&s, &b, &a).unwrap()).unwrap();
                    let rhs = compose(&t, &induced_map(&f, &t, &b).unwrap(), &induced_map(&f, &t, &a).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn rejects_non_simplicial_map() {
        let s = OrderedComplex::simplex(1);
        let t = OrderedComplex::with_vertex_count(2, &[]).unwrap();
        assert!(OrderedMap::new(&s, &t, vec![0, 1]).is_err());
        assert!(OrderedMap::new(&s, &t, vec![0]).is_err());
    }
}
