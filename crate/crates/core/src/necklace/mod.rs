//! Necklaces `Δ^{n0} ∨ Δ^{n1} ∨ ... ∨ Δ^{nk}` and maps out of them.
//!
//! A necklace is identified with its bead-dimension list in preferred form.
//! Its vertices are numbered `0..vertex_count()` in path order, so joints are
//! the prefix sums of the bead list.

mod enumerate;
mod map;
mod morphism;
mod vertex_set;

use serde::{Deserialize, Serialize};

pub use enumerate::enumerate_injective_maps;
pub use map::NecklaceMap;
pub use morphism::NecklaceMorphism;
pub use vertex_set::VertexSet;

use crate::complex::OrderedComplex;
use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Necklace {
    beads: Vec<usize>,
}

/// Result of wedging two necklaces, with the vertex reindexing of each factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wedge {
    pub necklace: Necklace,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl Necklace {
    /// The one-vertex necklace `Δ⁰`.
    pub fn point() -> Self {
        Self { beads: vec![0] }
    }

    /// A necklace already in preferred form.
    pub fn new(beads: Vec<usize>) -> Result<Self> {
        if beads.is_empty() {
            return Err(Error::EmptyBeadList);
        }
        if beads.len() > 1 && beads.contains(&0) {
            return Err(Error::InvalidNecklaceMap(format!("{beads:?} is not in preferred form")));
        }
        let n = Self { beads };
        if n.vertex_count() > MAX_VERTICES {
            return Err(Error::NecklaceTooLarge(n.vertex_count()));
        }
        Ok(n)
    }

    /// Drops `Δ⁰` beads, keeping `[0]` only for the point. Vertex numbering
    /// is unchanged because point beads contribute no vertices.
    pub fn preferred_form(raw: &[usize]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyBeadList);
        }
        let beads: Vec<usize> = raw.iter().copied().filter(|&n| n > 0).collect();
        if beads.is_empty() {
            Ok(Self::point())
        } else {
            Self::new(beads)
        }
    }

    /// A single bead `Δⁿ`.
    pub fn simplex(n: usize) -> Self {
        Self { beads: vec![n] }
    }

    pub fn beads(&self) -> &[usize] {
        &self.beads
    }

    pub fn bead_count(&self) -> usize {
        if self.is_point() {
            0
        } else {
            self.beads.len()
        }
    }

    pub fn is_point(&self) -> bool {
        self.beads == [0]
    }

    pub fn vertex_count(&self) -> usize {
        self.beads.iter().sum::<usize>() + 1
    }

    pub fn alpha(&self) -> usize {
        0
    }

    pub fn omega(&self) -> usize {
        self.vertex_count() - 1
    }

    /// Joint positions in increasing order.
    pub fn joints(&self) -> Vec<usize> {
        let mut out = vec![0];
        let mut acc = 0;
        for &n in &self.beads {
            if n > 0 {
                acc += n;
                out.push(acc);
            }
        }
        out
    }

    pub fn joint_set(&self) -> VertexSet {
        VertexSet::from_iter(self.joints())
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::range(0, self.omega())
    }

    /// Vertex range `(first, last)` of bead `i`.
    pub fn bead_range(&self, i: usize) -> (usize, usize) {
        let start: usize = self.beads[..i].iter().sum();
        (start, start + self.beads[i])
    }

    /// Index of the bead containing both `u <= v`, if they share one.
    pub fn common_bead(&self, u: usize, v: usize) -> Option<usize> {
        (0..self.beads.len()).find(|&i| {
            let (s, e) = self.bead_range(i);
            s <= u && v <= e
        })
    }

    /// `V_T(a, b)`: vertices between `a` and `b` inclusive.
    pub fn vertices_between(&self, a: usize, b: usize) -> VertexSet {
        if a > b {
            VertexSet::empty()
        } else {
            VertexSet::range(a, b)
        }
    }

    /// `J_T(a, b)`: `{a, b}` together with the joints between them.
    pub fn joints_between(&self, a: usize, b: usize) -> VertexSet {
        if a > b {
            return VertexSet::empty();
        }
        let mut s = VertexSet::from_iter(self.joints().into_iter().filter(|&j| a <= j && j <= b));
        s.insert(a);
        s.insert(b);
        s
    }

    /// `self ∨ other`: glue `ω` of `self` to `α` of `other`.
    pub fn wedge(&self, other: &Necklace) -> Wedge {
        let shift = self.vertex_count() - 1;
        let mut beads: Vec<usize> = self.beads.clone();
        beads.extend_from_slice(&other.beads);
        Wedge {
            necklace: Self::preferred_form(&beads).expect("nonempty"),
            left: (0..self.vertex_count()).collect(),
            right: (0..other.vertex_count()).map(|v| v + shift).collect(),
        }
    }

    /// `Δ[T]` together with the inclusion `T ↪ Δ[T]`.
    pub fn outer_simplex(&self) -> (Necklace, NecklaceMorphism) {
        let target = Self::simplex(self.omega());
        let map = NecklaceMorphism::new(self.clone(), target.clone(), (0..self.vertex_count()).collect())
            .expect("inclusion into the outer simplex");
        (target, map)
    }

    /// `Spi[T]` together with the inclusion `Spi[T] ↪ T`.
    pub fn spine(&self) -> (Necklace, NecklaceMorphism) {
        let spine = if self.is_point() { Self::point() } else { Self { beads: vec![1; self.omega()] } };
        let map = NecklaceMorphism::new(spine.clone(), self.clone(), (0..self.vertex_count()).collect())
            .expect("spine inclusion");
        (spine, map)
    }

    /// The necklace as an ordered simplicial set: the union of its beads.
    pub fn to_complex(&self) -> OrderedComplex {
        let chains: Vec<Vec<usize>> = (0..self.beads.len())
            .map(|i| {
                let (lo, hi) = self.bead_range(i);
                (lo..=hi).collect()
            })
            .collect();
        OrderedComplex::with_vertex_count(self.vertex_count(), &chains).expect("necklaces are ordered")
    }

    /// The unique subnecklace with joint set `joints` and vertex set
    /// `vertices`, returned with its inclusion (as a vertex list).
    ///
    /// Requires `J_T ∩ [min, max] ⊆ joints ⊆ vertices`, where min and max are
    /// the extreme elements of `joints`.
    pub fn subnecklace(&self, joints: VertexSet, vertices: VertexSet) -> Result<(Necklace, Vec<usize>)> {
        if !joints.is_subset(vertices) || joints.is_empty() {
            return Err(Error::InvalidFlag("joints must be a nonempty subset of the vertices".into()));
        }
        let js: Vec<usize> = joints.iter().collect();
        let (lo, hi) = (js[0], *js.last().unwrap());
        if vertices.iter().any(|v| v < lo || v > hi) {
            return Err(Error::InvalidFlag("vertices outside the joint range".into()));
        }
        if !self.joints_between(lo, hi).is_subset(joints) {
            return Err(Error::InvalidFlag("joint set misses a joint of the necklace".into()));
        }
        let inclusion: Vec<usize> = vertices.iter().collect();
        let mut beads = Vec::with_capacity(js.len());
        for w in js.windows(2) {
            beads.push(vertices.count_between(w[0], w[1]) - 1);
        }
        let necklace = if beads.is_empty() { Self::point() } else { Self::new(beads)? };
        Ok((necklace, inclusion))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preferred_form_examples() {
        assert_eq!(Necklace::preferred_form(&[1, 0, 2]).unwrap().beads(), &[1, 2]);
        assert_eq!(Necklace::preferred_form(&[0]).unwrap(), Necklace::point());
        assert_eq!(Necklace::preferred_form(&[0, 0, 0]).unwrap(), Necklace::point());
        assert!(matches!(Necklace::preferred_form(&[]), Err(Error::EmptyBeadList)));
    }

    #[test]
    fn wedge_examples() {
        let e = Necklace::simplex(1);
        let w = e.wedge(&e);
        assert_eq!(w.necklace.beads(), &[1, 1]);
        assert_eq!(w.necklace.vertex_count(), 3);
        assert_eq!(w.necklace.joints(), vec![0, 1, 2]);

        let t = Necklace::new(vec![2, 1]).unwrap();
        assert_eq!(t.wedge(&Necklace::point()).necklace, t);
        assert_eq!(Necklace::point().wedge(&t).necklace, t);

        let w = Necklace::simplex(2).wedge(&Necklace::simplex(1));
        assert_eq!(w.necklace.beads(), &[2, 1]);
        assert_eq!(w.necklace.vertex_set().to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(w.necklace.joints(), vec![0, 2, 3]);
        assert_eq!(w.right, vec![2, 3]);
    }

    #[test]
    fn outer_simplex_and_spine() {
        let t = Necklace::new(vec![2, 1]).unwrap();
        assert_eq!(t.outer_simplex().0.beads(), &[3]);
        assert_eq!(t.spine().0.beads(), &[1, 1, 1]);
        let e = Necklace::simplex(1);
        assert_eq!(e.outer_simplex().0, e);
        assert_eq!(e.spine().0, e);
        let (sp, inc) = Necklace::simplex(3).spine();
        assert_eq!(sp.beads(), &[1, 1, 1]);
        assert_eq!(inc.vertex_map(), &[0, 1, 2, 3]);
    }

    #[test]
    fn joints_between_interior() {
        let t = Necklace::new(vec![1, 2, 1]).unwrap();
        assert_eq!(t.joints(), vec![0, 1, 3, 4]);
        assert_eq!(t.joints_between(0, 4).to_vec(), vec![0, 1, 3, 4]);
        assert_eq!(t.joints_between(2, 4).to_vec(), vec![2, 3, 4]);
        assert_eq!(t.vertices_between(2, 4).to_vec(), vec![2, 3, 4]);
    }

    #[test]
    fn subnecklace_of_simplex() {
        let t = Necklace::simplex(3);
        let (s, inc) = t.subnecklace(VertexSet::from_iter([0, 3]), VertexSet::from_iter([0, 3])).unwrap();
        assert_eq!(s.beads(), &[1]);
        assert_eq!(inc, vec![0, 3]);
        let (s, _) = t.subnecklace(VertexSet::from_iter([0, 2, 3]), VertexSet::from_iter([0, 1, 2, 3])).unwrap();
        assert_eq!(s.beads(), &[2, 1]);
    }

    #[test]
    fn as_complex() {
        use crate::complex::SimplicialSet;
        let t = Necklace::new(vec![2, 1]).unwrap();
        assert_eq!(t.to_complex().f_vector(), vec![4, 4, 1]);
        assert_eq!(Necklace::point().to_complex().f_vector(), vec![1]);
    }

    #[test]
    fn joint_and_vertex_counts() {
        for beads in [vec![1], vec![2, 1], vec![1, 1, 3], vec![4]] {
            let t = Necklace::new(beads.clone()).unwrap();
            assert_eq!(t.joints().len(), beads.len() + 1);
            assert_eq!(t.vertex_count(), beads.iter().sum::<usize>() + 1);
        }
    }
}
