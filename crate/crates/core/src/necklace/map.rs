use std::fmt;

use super::{Necklace, NecklaceMorphism, VertexSet};
use crate::complex::{OrderedComplex, SimplexKey, SimplicialSet, VertexId};
use crate::error::{Error, Result};

/// A simplicial map `T -> S` out of a necklace, stored as one simplex of `S`
/// per bead. The point necklace carries a single vertex key.
///
/// The derived order compares necklaces, then bead simplices, then vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NecklaceMap {
    necklace: Necklace,
    beads: Vec<SimplexKey>,
    vertices: Vec<VertexId>,
}

impl NecklaceMap {
    pub fn point(v: VertexId) -> Self {
        Self { necklace: Necklace::point(), beads: vec![SimplexKey::vertex(v)], vertices: vec![v] }
    }

    /// Checks dimensions, membership and agreement at the joints.
    pub fn new<S: SimplicialSet + ?Sized>(s: &S, necklace: Necklace, beads: Vec<SimplexKey>) -> Result<Self> {
        if beads.len() != necklace.beads().len() {
            return Err(Error::LengthMismatch { left: beads.len(), right: necklace.beads().len() });
        }
        let mut vertices: Vec<VertexId> = Vec::with_capacity(necklace.vertex_count());
        for (key, &n) in beads.iter().zip(necklace.beads()) {
            if key.dim != n {
                return Err(Error::InvalidNecklaceMap(format!("bead of dimension {n} given simplex {key}")));
            }
            s.check_key(key)?;
            let vs = s.vertices(key);
            match vertices.last() {
                None => vertices.extend(vs),
                Some(&last) if last == vs[0] => vertices.extend(&vs[1..]),
                Some(&last) => {
                    return Err(Error::InvalidNecklaceMap(format!("beads meet at {last} and {}", vs[0])));
                }
            }
        }
        Ok(Self { necklace, beads, vertices })
    }

    /// The map with the given vertex images, for a target in which simplices
    /// are determined by their vertices.
    pub fn from_vertices(s: &OrderedComplex, necklace: Necklace, vertices: Vec<VertexId>) -> Result<Self> {
        if vertices.len() != necklace.vertex_count() {
            return Err(Error::LengthMismatch { left: vertices.len(), right: necklace.vertex_count() });
        }
        let beads = (0..necklace.beads().len())
            .map(|i| {
                let (lo, hi) = necklace.bead_range(i);
                s.key_of_sequence(&vertices[lo..=hi])
                    .ok_or_else(|| Error::InvalidNecklaceMap(format!("{:?} is not a simplex", &vertices[lo..=hi])))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { necklace, beads, vertices })
    }

    pub fn necklace(&self) -> &Necklace {
        &self.necklace
    }

    pub fn bead_keys(&self) -> &[SimplexKey] {
        &self.beads
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn source(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn target(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }

    /// No bead is sent to a degenerate simplex.
    pub fn is_totally_nondegenerate(&self) -> bool {
        self.beads.iter().all(|k| !k.is_degenerate())
    }

    pub fn is_injective_on_vertices(&self) -> bool {
        let mut seen = VertexSet::empty();
        self.vertices.iter().all(|&v| {
            let fresh = !seen.contains(v);
            seen.insert(v);
            fresh
        }) && self.vertices.iter().all(|&v| v < 64)
    }

    /// `self ∘ f` for a necklace morphism `f` into this map's necklace.
    pub fn precompose<S: SimplicialSet + ?Sized>(&self, s: &S, f: &NecklaceMorphism) -> Result<Self> {
        if f.target() != &self.necklace {
            return Err(Error::InvalidMorphism("morphism target differs from the mapped necklace".into()));
        }
        let src = f.source();
        let fv = f.vertex_map();
        let mut beads = Vec::with_capacity(src.beads().len());
        for i in 0..src.beads().len() {
            let (lo, hi) = src.bead_range(i);
            let j = self.necklace.common_bead(fv[lo], fv[hi]).expect("validated morphism");
            let (tlo, _) = self.necklace.bead_range(j);
            let theta: Vec<usize> = (lo..=hi).map(|v| fv[v] - tlo).collect();
            beads.push(s.pull_back(&self.beads[j], &theta)?);
        }
        let vertices = fv.iter().map(|&v| self.vertices[v]).collect();
        Ok(Self { necklace: src.clone(), beads, vertices })
    }

    /// Restriction to the subnecklace with the given joints and vertices.
    pub fn restrict<S: SimplicialSet + ?Sized>(&self, s: &S, joints: VertexSet, vertices: VertexSet) -> Result<Self> {
        let (sub, inclusion) = self.necklace.subnecklace(joints, vertices)?;
        let inc = NecklaceMorphism::new(sub, self.necklace.clone(), inclusion)?;
        self.precompose(s, &inc)
    }

    /// Factors this map as `T ->> T' -> S` with `T' -> S` totally
    /// nondegenerate, by replacing each bead simplex with its nondegenerate
    /// root. Returns the new map and the surjection `T ->> T'`.
    pub fn collapse(&self) -> (NecklaceMap, NecklaceMorphism) {
        let mut raw = Vec::with_capacity(self.beads.len());
        let mut roots = Vec::with_capacity(self.beads.len());
        let mut vertex_map = vec![0usize];
        let mut offset = 0;
        for key in &self.beads {
            let sigma = key.word.surjection(key.dim);
            vertex_map.extend(sigma[1..].iter().map(|&t| offset + t));
            offset += key.gen_dim();
            raw.push(key.gen_dim());
            roots.push(SimplexKey::nondegenerate(key.gen_dim(), key.gen));
        }
        let necklace = Necklace::preferred_form(&raw).expect("nonempty");
        let collapsed = if necklace.is_point() {
            NecklaceMap::point(self.vertices[0])
        } else {
            let beads: Vec<SimplexKey> = roots.into_iter().filter(|k| k.dim > 0).collect();
            let mut vertices = Vec::with_capacity(necklace.vertex_count());
            for (v, &w) in vertex_map.iter().enumerate() {
                if vertices.len() == w {
                    vertices.push(self.vertices[v]);
                }
            }
            NecklaceMap { necklace: necklace.clone(), beads, vertices }
        };
        let surj = NecklaceMorphism::new(self.necklace.clone(), collapsed.necklace.clone(), vertex_map)
            .expect("collapse is a necklace morphism");
        (collapsed, surj)
    }
}

impl fmt::Display for NecklaceMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.necklace.beads().len() {
            if i > 0 {
                write!(f, "∨")?;
            }
            let (lo, hi) = self.necklace.bead_range(i);
            let vs: Vec<String> = self.vertices[lo..=hi].iter().map(|v| v.to_string()).collect();
            write!(f, "[{}]", vs.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::standard;

    fn delta(n: usize) -> OrderedComplex {
        OrderedComplex::simplex(n)
    }

    #[test]
    fn from_vertices_checks_simplices() {
        let s = standard("horn", &[2, 1]).unwrap();
        let s = s.as_ordered().unwrap();
        assert!(NecklaceMap::from_vertices(s, Necklace::new(vec![1, 1]).unwrap(), vec![0, 1, 2]).is_ok());
        assert!(NecklaceMap::from_vertices(s, Necklace::simplex(2), vec![0, 1, 2]).is_err());
    }

    #[test]
    fn collapse_degenerate_bead() {
        let s = delta(2);
        let t = Necklace::new(vec![2, 1]).unwrap();
        let f = NecklaceMap::from_vertices(&s, t, vec![0, 0, 1, 2]).unwrap();
        assert!(!f.is_totally_nondegenerate());
        let (g, surj) = f.collapse();
        assert_eq!(g.necklace().beads(), &[1, 1]);
        assert_eq!(g.vertices(), &[0, 1, 2]);
        assert_eq!(surj.vertex_map(), &[0, 0, 1, 2]);
        assert!(g.is_totally_nondegenerate());
        assert_eq!(g.precompose(&s, &surj).unwrap(), f);
    }

    #[test]
    fn collapse_to_point() {
        let s = delta(1);
        let f = NecklaceMap::from_vertices(&s, Necklace::new(vec![1, 2]).unwrap(), vec![1, 1, 1, 1]).unwrap();
        let (g, surj) = f.collapse();
        assert_eq!(g, NecklaceMap::point(1));
        assert_eq!(surj.vertex_map(), &[0, 0, 0, 0]);
    }

    #[test]
    fn restrict_to_subnecklace() {
        let s = delta(3);
        let f = NecklaceMap::from_vertices(&s, Necklace::simplex(3), vec![0, 1, 2, 3]).unwrap();
        let g = f.restrict(&s, VertexSet::from_iter([0, 2, 3]), VertexSet::from_iter([0, 2, 3])).unwrap();
        assert_eq!(g.necklace().beads(), &[1, 1]);
        assert_eq!(g.vertices(), &[0, 2, 3]);
    }

    #[test]
    fn generic_map_on_loop() {
        let s = standard("loop", &[]).unwrap();
        let e = SimplexKey::nondegenerate(1, 0);
        let f = NecklaceMap::new(&s, Necklace::new(vec![1, 1]).unwrap(), vec![e.clone(), e]).unwrap();
        assert_eq!(f.vertices(), &[0, 0, 0]);
        assert!(f.is_totally_nondegenerate());
        assert!(!f.is_injective_on_vertices());
    }

    #[test]
    fn display() {
        let s = delta(3);
        let f = NecklaceMap::from_vertices(&s, Necklace::new(vec![2, 1]).unwrap(), vec![0, 1, 2, 3]).unwrap();
        assert_eq!(f.to_string(), "[0,1,2]∨[2,3]");
    }
}
