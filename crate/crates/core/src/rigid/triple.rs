use std::fmt;

use crate::complex::{SimplicialSet, VertexId};
use crate::error::{Error, Result};
use crate::necklace::{NecklaceMap, VertexSet};

/// A necklace map together with a flag `T⁰ ⊆ ... ⊆ Tⁿ` of vertex sets of its
/// necklace. Represents an `n`-simplex of `𝔠(S)(a, b)` up to equivalence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlaggedTriple {
    map: NecklaceMap,
    flag: Vec<VertexSet>,
}

/// A flagged triple in canonical form: the flag is flanked (`T⁰ = J_T`,
/// `Tⁿ = V_T`) and no bead is sent to a degenerate simplex.
///
/// Two canonical triples denote the same simplex exactly when they are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MappingSimplex {
    pub(crate) map: NecklaceMap,
    pub(crate) flag: Vec<VertexSet>,
}

fn validate_flag(map: &NecklaceMap, flag: &[VertexSet]) -> Result<()> {
    if flag.is_empty() {
        return Err(Error::InvalidFlag("a flag needs at least one set".into()));
    }
    let t = map.necklace();
    if !t.joint_set().is_subset(flag[0]) {
        return Err(Error::InvalidFlag(format!("{:?} does not contain the joints {:?}", flag[0], t.joints())));
    }
    if !flag.last().unwrap().is_subset(t.vertex_set()) {
        return Err(Error::InvalidFlag(format!("{:?} is not a set of necklace vertices", flag.last().unwrap())));
    }
    if let Some(w) = flag.windows(2).find(|w| !w[0].is_subset(w[1])) {
        return Err(Error::InvalidFlag(format!("{:?} is not contained in {:?}", w[0], w[1])));
    }
    Ok(())
}

impl FlaggedTriple {
    pub fn new(map: NecklaceMap, flag: Vec<VertexSet>) -> Result<Self> {
        validate_flag(&map, &flag)?;
        Ok(Self { map, flag })
    }

    pub fn map(&self) -> &NecklaceMap {
        &self.map
    }

    pub fn flag(&self) -> &[VertexSet] {
        &self.flag
    }

    pub fn dim(&self) -> usize {
        self.flag.len() - 1
    }

    pub fn is_flanked(&self) -> bool {
        self.flag[0] == self.map.necklace().joint_set() && *self.flag.last().unwrap() == self.map.necklace().vertex_set()
    }

    /// Restricts to the subnecklace with joints `T⁰` and vertices `Tⁿ`.
    pub fn flankify<S: SimplicialSet + ?Sized>(&self, s: &S) -> Result<Self> {
        if self.is_flanked() {
            return Ok(self.clone());
        }
        let (first, last) = (self.flag[0], *self.flag.last().unwrap());
        let map = self.map.restrict(s, first, last)?;
        let flag = self.flag.iter().map(|t| t.relative_to(last)).collect();
        Ok(Self { map, flag })
    }

    /// Replaces degenerate beads by their nondegenerate roots and pushes the
    /// flag forward along the collapsing surjection.
    pub fn collapse(&self) -> Self {
        if self.map.is_totally_nondegenerate() {
            return self.clone();
        }
        let (map, surj) = self.map.collapse();
        let flag = self.flag.iter().map(|t| t.map(surj.vertex_map())).collect();
        Self { map, flag }
    }

    /// The unique flanked, totally nondegenerate representative.
    pub fn canonicalize<S: SimplicialSet + ?Sized>(&self, s: &S) -> Result<MappingSimplex> {
        let mut current = self.clone();
        let mut rounds = 0;
        loop {
            let next = current.flankify(s)?.collapse();
            if next == current {
                break;
            }
            current = next;
            rounds += 1;
            debug_assert!(rounds <= 2, "canonical loop for {self} took {rounds} rounds");
        }
        Ok(MappingSimplex { map: current.map, flag: current.flag })
    }
}

impl MappingSimplex {
    /// The identity `n`-simplex at `a`: the point necklace with flag `{0}`.
    pub fn identity(a: VertexId, n: usize) -> Self {
        Self { map: NecklaceMap::point(a), flag: vec![VertexSet::singleton(0); n + 1] }
    }

    /// Builds from parts that are already canonical.
    pub fn from_canonical(map: NecklaceMap, flag: Vec<VertexSet>) -> Result<Self> {
        let t = FlaggedTriple::new(map, flag)?;
        if !t.is_flanked() {
            return Err(Error::InvalidFlag("flag is not flanked".into()));
        }
        if !t.map.is_totally_nondegenerate() {
            return Err(Error::InvalidNecklaceMap("a bead is sent to a degenerate simplex".into()));
        }
        Ok(Self { map: t.map, flag: t.flag })
    }

    pub fn map(&self) -> &NecklaceMap {
        &self.map
    }

    pub fn flag(&self) -> &[VertexSet] {
        &self.flag
    }

    pub fn dim(&self) -> usize {
        self.flag.len() - 1
    }

    pub fn source(&self) -> VertexId {
        self.map.source()
    }

    pub fn target(&self) -> VertexId {
        self.map.target()
    }

    /// Nondegenerate in `𝔠(S)(a, b)` exactly when the flag is strictly increasing.
    pub fn is_degenerate(&self) -> bool {
        self.flag.windows(2).any(|w| w[0] == w[1])
    }

    pub fn to_triple(&self) -> FlaggedTriple {
        FlaggedTriple { map: self.map.clone(), flag: self.flag.clone() }
    }

    /// `d_i`: omit `Tⁱ`, then canonicalize.
    pub fn face<S: SimplicialSet + ?Sized>(&self, s: &S, i: usize) -> Result<Self> {
        let n = self.dim();
        if n == 0 || i > n {
            return Err(Error::OperatorOutOfRange { index: i, dim: n });
        }
        let mut flag = self.flag.clone();
        flag.remove(i);
        FlaggedTriple { map: self.map.clone(), flag }.canonicalize(s)
    }

    /// `s_i`: repeat `Tⁱ`. Already canonical.
    pub fn degeneracy(&self, i: usize) -> Result<Self> {
        let n = self.dim();
        if i > n {
            return Err(Error::OperatorOutOfRange { index: i, dim: n });
        }
        let mut flag = self.flag.clone();
        flag.insert(i, flag[i]);
        Ok(Self { map: self.map.clone(), flag })
    }
}

/// `g ∘ f`: wedge the necklaces (`f` first), take levelwise unions of the
/// flags and canonicalize.
pub fn compose<S: SimplicialSet + ?Sized>(s: &S, g: &MappingSimplex, f: &MappingSimplex) -> Result<MappingSimplex> {
    if f.target() != g.source() {
        return Err(Error::EndpointMismatch { expected: f.target(), found: g.source() });
    }
    if f.dim() != g.dim() {
        return Err(Error::LengthMismatch { left: g.dim(), right: f.dim() });
    }
    let wedge = f.map.necklace().wedge(g.map.necklace());
    let keys: Vec<_> = f
        .map
        .bead_keys()
        .iter()
        .chain(g.map.bead_keys())
        .filter(|k| k.dim > 0)
        .cloned()
        .collect();
    let map = if wedge.necklace.is_point() {
        NecklaceMap::point(f.source())
    } else {
        NecklaceMap::new(s, wedge.necklace, keys)?
    };
    let flag = f.flag.iter().zip(&g.flag).map(|(t, u)| t.map(&wedge.left).union(u.map(&wedge.right))).collect();
    FlaggedTriple::new(map, flag)?.canonicalize(s)
}

fn fmt_flag(flag: &[VertexSet], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (i, t) in flag.iter().enumerate() {
        if i > 0 {
            write!(f, "⊆")?;
        }
        let vs: Vec<String> = t.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", vs.join(","))?;
    }
    Ok(())
}

impl fmt::Display for FlaggedTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}; ", self.map)?;
        fmt_flag(&self.flag, f)
    }
}

impl fmt::Display for MappingSimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}; ", self.map)?;
        fmt_flag(&self.flag, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{standard, OrderedComplex};
    use crate::necklace::Necklace;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn triple(s: &OrderedComplex, beads: &[usize], vertices: &[usize], flag: &[&[usize]]) -> FlaggedTriple {
        let map = NecklaceMap::from_vertices(s, Necklace::new(beads.to_vec()).unwrap(), vertices.to_vec()).unwrap();
        FlaggedTriple::new(map, flag.iter().map(|f| set(f)).collect()).unwrap()
    }

    #[test]
    fn flankify_long_edge() {
        let s = OrderedComplex::simplex(3);
        let t = triple(&s, &[3], &[0, 1, 2, 3], &[&[0, 3], &[0, 3]]);
        let f = t.flankify(&s).unwrap();
        assert_eq!(f.map().necklace().beads(), &[1]);
        assert_eq!(f.map().vertices(), &[0, 3]);
        assert_eq!(f.flag(), &[set(&[0, 1]), set(&[0, 1])]);
        assert_eq!(f.flankify(&s).unwrap(), f);
    }

    #[test]
    fn already_flanked_unchanged() {
        let s = OrderedComplex::simplex(2);
        let t = triple(&s, &[1, 1], &[0, 1, 2], &[&[0, 1, 2], &[0, 1, 2]]);
        assert_eq!(t.flankify(&s).unwrap(), t);
    }

    #[test]
    fn canonicalize_collapses_degenerate_bead() {
        let s = OrderedComplex::simplex(1);
        let t = triple(&s, &[1, 1], &[0, 1, 1], &[&[0, 1, 2], &[0, 1, 2]]);
        let m = t.canonicalize(&s).unwrap();
        assert_eq!(m.map().necklace().beads(), &[1]);
        assert_eq!(m.map().vertices(), &[0, 1]);
        assert_eq!(m.flag(), &[set(&[0, 1]), set(&[0, 1])]);
        assert_eq!(m.to_triple().canonicalize(&s).unwrap(), m);
    }

    fn tt() -> OrderedComplex {
        standard("two_triangles", &[]).unwrap().as_ordered().unwrap().clone()
    }

    #[test]
    fn example_edge_faces() {
        let s = tt();
        let e = triple(&s, &[1, 2], &[0, 1, 2, 3], &[&[0, 1, 3], &[0, 1, 2, 3]]).canonicalize(&s).unwrap();
        assert_eq!(e.to_triple(), triple(&s, &[1, 2], &[0, 1, 2, 3], &[&[0, 1, 3], &[0, 1, 2, 3]]));
        let d1 = e.face(&s, 1).unwrap();
        assert_eq!(d1.map().necklace().beads(), &[1, 1]);
        assert_eq!(d1.map().vertices(), &[0, 1, 3]);
        assert_eq!(d1.flag(), &[set(&[0, 1, 2])]);
        let d0 = e.face(&s, 0).unwrap();
        assert_eq!(d0.map().necklace().beads(), &[1, 1, 1]);
        assert_eq!(d0.map().vertices(), &[0, 1, 2, 3]);
        assert_eq!(d0.flag(), &[set(&[0, 1, 2, 3])]);
    }

    #[test]
    fn compose_vertices_in_two_triangles() {
        let s = tt();
        let f = triple(&s, &[1], &[0, 1], &[&[0, 1]]).canonicalize(&s).unwrap();
        let g = triple(&s, &[1], &[1, 3], &[&[0, 1]]).canonicalize(&s).unwrap();
        let h = compose(&s, &g, &f).unwrap();
        assert_eq!(h.map().necklace().beads(), &[1, 1]);
        assert_eq!(h.map().vertices(), &[0, 1, 3]);
        assert_eq!(h.flag(), &[set(&[0, 1, 2])]);
        assert_eq!(compose(&s, &MappingSimplex::identity(3, 0), &h).unwrap(), h);
        assert_eq!(compose(&s, &h, &MappingSimplex::identity(0, 0)).unwrap(), h);
        assert!(matches!(compose(&s, &f, &g), Err(Error::EndpointMismatch { .. })));
    }

    #[test]
    fn face_of_degeneracy() {
        let s = tt();
        let e = triple(&s, &[1, 2], &[0, 1, 2, 3], &[&[0, 1, 3], &[0, 1, 2, 3]]).canonicalize(&s).unwrap();
        for i in 0..=1 {
            let d = e.degeneracy(i).unwrap();
            assert!(d.is_degenerate());
            assert_eq!(d.face(&s, i).unwrap(), e);
            assert_eq!(d.face(&s, i + 1).unwrap(), e);
        }
        assert!(e.degeneracy(2).is_err());
        assert!(e.face(&s, 2).is_err());
    }

    #[test]
    fn flag_validation() {
        let s = OrderedComplex::simplex(2);
        let map = NecklaceMap::from_vertices(&s, Necklace::simplex(2), vec![0, 1, 2]).unwrap();
        assert!(FlaggedTriple::new(map.clone(), vec![set(&[0])]).is_err());
        assert!(FlaggedTriple::new(map.clone(), vec![set(&[0, 1, 2]), set(&[0, 2])]).is_err());
        assert!(FlaggedTriple::new(map.clone(), vec![]).is_err());
        assert!(FlaggedTriple::new(map, vec![set(&[0, 2, 5])]).is_err());
    }
}
