use super::{Necklace, NecklaceMap, VertexSet, MAX_VERTICES};
use crate::complex::{OrderedComplex, SimplicialSet, VertexId};

/// All necklace maps `T -> S` from `a` to `b` that are injective on vertices,
/// sorted. For `a == b` this is just the point.
///
/// In an ordered complex these are exactly the totally nondegenerate maps
/// that can appear in a flanked canonical triple.
pub fn enumerate_injective_maps(s: &OrderedComplex, a: VertexId, b: VertexId) -> Vec<NecklaceMap> {
    if a >= s.vertex_count() || b >= s.vertex_count() || s.vertex_count() > MAX_VERTICES {
        return Vec::new();
    }
    if a == b {
        return vec![NecklaceMap::point(a)];
    }
    let mut out = Vec::new();
    let mut beads: Vec<usize> = Vec::new();
    let mut path = vec![a];
    rec(s, b, VertexSet::singleton(a), &mut beads, &mut path, &mut out);
    out.sort();
    out
}

fn rec(
    s: &OrderedComplex,
    b: VertexId,
    used: VertexSet,
    beads: &mut Vec<usize>,
    path: &mut Vec<VertexId>,
    out: &mut Vec<NecklaceMap>,
) {
    let here = *path.last().unwrap();
    for chain in s.chains_from(here) {
        if chain.len() < 2 || chain[1..].iter().any(|&v| used.contains(v)) {
            continue;
        }
        let end = *chain.last().unwrap();
        if chain[1..chain.len() - 1].contains(&b) {
            continue;
        }
        beads.push(chain.len() - 1);
        path.extend(&chain[1..]);
        if end == b {
            let necklace = Necklace::new(beads.clone()).expect("positive beads");
            out.push(NecklaceMap::from_vertices(s, necklace, path.clone()).expect("chains are simplices"));
        } else {
            let used = used.union(chain.iter().copied().collect());
            rec(s, b, used, beads, path, out);
        }
        path.truncate(path.len() - (chain.len() - 1));
        beads.pop();
    }
}
