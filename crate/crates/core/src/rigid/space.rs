use std::collections::HashMap;

use super::MappingSimplex;
use crate::complex::{DegeneracyWord, GeneratedComplex, OrderedComplex, SimplexKey, SimplicialSet, VertexId};
use crate::error::{Error, Result};
use crate::necklace::{enumerate_injective_maps, Necklace, NecklaceMap, VertexSet, MAX_VERTICES};

/// An enumerated mapping space `𝔠(S)(a, b)`.
///
/// Generators of dimension `n` are the nondegenerate canonical simplices,
/// sorted; the face table is computed with [`MappingSimplex::face`].
#[derive(Debug, Clone)]
pub struct MappingSpace {
    source: VertexId,
    target: VertexId,
    simplices: Vec<Vec<MappingSimplex>>,
    index: HashMap<MappingSimplex, usize>,
    complex: GeneratedComplex,
    truncated: bool,
}

impl MappingSpace {
    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn target(&self) -> VertexId {
        self.target
    }

    pub fn complex(&self) -> &GeneratedComplex {
        &self.complex
    }

    /// Nondegenerate simplices of dimension `dim`, in generator order.
    pub fn simplices(&self, dim: usize) -> &[MappingSimplex] {
        self.simplices.get(dim).map_or(&[], |l| l.as_slice())
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Set when a necklace-size bound cut the enumeration short, so the
    /// result is only a subcomplex.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    /// The key of any simplex, degenerate or not, if it was enumerated.
    pub fn key_of(&self, m: &MappingSimplex) -> Option<SimplexKey> {
        let mut base: Vec<VertexSet> = Vec::with_capacity(m.flag.len());
        let mut sigma = Vec::with_capacity(m.flag.len());
        for &t in &m.flag {
            if base.last() != Some(&t) {
                base.push(t);
            }
            sigma.push(base.len() - 1);
        }
        let root = MappingSimplex { map: m.map.clone(), flag: base };
        let gen = *self.index.get(&root)?;
        Some(SimplexKey { dim: m.dim(), gen, word: DegeneracyWord::from_surjection(&sigma) })
    }

    pub fn simplex_of(&self, key: &SimplexKey) -> Result<MappingSimplex> {
        let root = self
            .simplices
            .get(key.gen_dim())
            .and_then(|l| l.get(key.gen))
            .ok_or(Error::UnknownGenerator { dim: key.gen_dim(), gen: key.gen })?;
        let sigma = key.word.surjection(key.dim);
        Ok(MappingSimplex { map: root.map.clone(), flag: sigma.iter().map(|&t| root.flag[t]).collect() })
    }

    /// Every simplex of dimension `dim`, degenerate ones included.
    pub fn all_simplices(&self, dim: usize) -> Vec<MappingSimplex> {
        self.complex.all_simplices(dim).iter().map(|k| self.simplex_of(k).expect("own key")).collect()
    }
}

/// Strict chains `J = T⁰ ⊊ ... ⊊ Tⁿ = V`.
pub(crate) fn flanked_flags(joints: VertexSet, vertices: VertexSet) -> Vec<Vec<VertexSet>> {
    let mut out = Vec::new();
    let mut current = vec![joints];
    fn rec(top: VertexSet, current: &mut Vec<VertexSet>, out: &mut Vec<Vec<VertexSet>>) {
        let last = *current.last().unwrap();
        if last == top {
            out.push(current.clone());
            return;
        }
        let rest = top.difference(last).to_vec();
        for mask in 1u64..(1 << rest.len()) {
            let add: VertexSet = rest.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &v)| v).collect();
            current.push(last.union(add));
            rec(top, current, out);
            current.pop();
        }
    }
    rec(vertices, &mut current, &mut out);
    out
}

fn build<S: SimplicialSet + ?Sized>(
    s: &S,
    a: VertexId,
    b: VertexId,
    maps: Vec<NecklaceMap>,
    truncated: bool,
) -> Result<MappingSpace> {
    let mut simplices: Vec<Vec<MappingSimplex>> = Vec::new();
    for map in maps {
        let t = map.necklace();
        for flag in flanked_flags(t.joint_set(), t.vertex_set()) {
            let d = flag.len() - 1;
            if simplices.len() <= d {
                simplices.resize(d + 1, Vec::new());
            }
            simplices[d].push(MappingSimplex { map: map.clone(), flag });
        }
    }
    for layer in &mut simplices {
        layer.sort();
    }
    let index: HashMap<MappingSimplex, usize> =
        simplices.iter().flat_map(|l| l.iter().enumerate().map(|(i, m)| (m.clone(), i))).collect();
    let mut space = MappingSpace { source: a, target: b, simplices, index, complex: GeneratedComplex::empty(), truncated };
    let mut faces = Vec::with_capacity(space.simplices.len());
    for (d, layer) in space.simplices.iter().enumerate() {
        let mut layer_faces = Vec::with_capacity(layer.len());
        for m in layer {
            if d == 0 {
                layer_faces.push(Vec::new());
                continue;
            }
            let mut fs = Vec::with_capacity(d + 1);
            for i in 0..=d {
                let f = m.face(s, i)?;
                let key = space
                    .key_of(&f)
                    .ok_or_else(|| Error::BoundExceeded(format!("face {i} of {m} is {f}, outside the enumeration")))?;
                fs.push(key);
            }
            layer_faces.push(fs);
        }
        faces.push(layer_faces);
    }
    let counts = space.f_vector();
    let labels = space.simplices.iter().map(|l| l.iter().map(|m| m.to_string()).collect()).collect();
    space.complex = GeneratedComplex::from_parts(counts, faces, labels)?;
    Ok(space)
}

fn check_vertex<S: SimplicialSet + ?Sized>(s: &S, v: VertexId) -> Result<()> {
    if v < s.vertex_count() {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange { vertex: v, count: s.vertex_count() })
    }
}

/// The complete mapping space `𝔠(S)(a, b)` of an ordered complex.
///
/// Canonical simplices have injective necklace maps, so finitely many
/// necklaces occur.
pub fn mapping_space(s: &OrderedComplex, a: VertexId, b: VertexId) -> Result<MappingSpace> {
    check_vertex(s, a)?;
    check_vertex(s, b)?;
    build(s, a, b, enumerate_injective_maps(s, a, b), false)
}

/// Totally nondegenerate necklace maps from `a` to `b` with at most `bound`
/// necklace vertices, and whether the bound cut anything off.
pub fn enumerate_nondegenerate_maps<S: SimplicialSet + ?Sized>(
    s: &S,
    a: VertexId,
    b: VertexId,
    bound: usize,
) -> Result<(Vec<NecklaceMap>, bool)> {
    check_vertex(s, a)?;
    check_vertex(s, b)?;
    let bound = bound.min(MAX_VERTICES);
    let mut starts: Vec<Vec<SimplexKey>> = vec![Vec::new(); s.vertex_count()];
    for d in 1..=s.max_dim().unwrap_or(0) {
        for g in 0..s.generator_count(d) {
            starts[s.generator_vertices(d, g)[0]].push(SimplexKey::nondegenerate(d, g));
        }
    }
    let mut out = Vec::new();
    if a == b && bound >= 1 {
        out.push(NecklaceMap::point(a));
    }
    let mut truncated = false;
    let mut beads = Vec::new();
    extend_path(s, &starts, b, bound, a, 1, &mut beads, &mut out, &mut truncated)?;
    out.sort();
    Ok((out, truncated))
}

#[allow(clippy::too_many_arguments)]
fn extend_path<S: SimplicialSet + ?Sized>(
    s: &S,
    starts: &[Vec<SimplexKey>],
    b: VertexId,
    bound: usize,
    here: VertexId,
    count: usize,
    beads: &mut Vec<SimplexKey>,
    out: &mut Vec<NecklaceMap>,
    truncated: &mut bool,
) -> Result<()> {
    for key in &starts[here] {
        if count + key.dim > bound {
            *truncated = true;
            continue;
        }
        let end = *s.generator_vertices(key.dim, key.gen).last().unwrap();
        beads.push(key.clone());
        if end == b {
            let necklace = Necklace::new(beads.iter().map(|k| k.dim).collect())?;
            out.push(NecklaceMap::new(s, necklace, beads.clone())?);
        }
        extend_path(s, starts, b, bound, end, count + key.dim, beads, out, truncated)?;
        beads.pop();
    }
    Ok(())
}

/// Mapping space of an arbitrary finite complex, restricted to necklaces
/// with at most `bound` vertices. Faces never enlarge a necklace, so the
/// result is a subcomplex; [`MappingSpace::truncated`] records whether it may
/// be proper.
pub fn mapping_space_bounded<S: SimplicialSet + ?Sized>(s: &S, a: VertexId, b: VertexId, bound: usize) -> Result<MappingSpace> {
    let (maps, truncated) = enumerate_nondegenerate_maps(s, a, b, bound)?;
    build(s, a, b, maps, truncated)
}
