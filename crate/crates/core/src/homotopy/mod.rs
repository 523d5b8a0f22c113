//! Homotopy-level evidence: components, integral homology, inner horn
//! filling, and the comonad level counts for `𝔠(Δⁿ)`.

mod comonad;
mod homology;
mod horn;

pub use comonad::{chain_count, chain_count_brute_force, comonad_level, LevelCount, Morphism, MAX_COMONAD_DEPTH, MAX_COMONAD_N};
pub use homology::{homology, is_homology_point, ChainComplex, HomologyGroup, HomologyResult, HOMOLOGY_CAVEAT};
pub use horn::{inner_horn_check, HornFailure, HornReport, Levelwise, NerveLevels, SimplicesOf, MAX_HORN_DIM};

use crate::complex::{SimplicialSet, VertexId};

/// Connected components under the undirected edge relation, each sorted,
/// listed by smallest vertex.
pub fn pi0<S: SimplicialSet + ?Sized>(s: &S) -> Vec<Vec<VertexId>> {
    let n = s.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in 0..s.generator_count(1) {
        let v = s.generator_vertices(1, g);
        let (ra, rb) = (find(&mut parent, v[0]), find(&mut parent, v[1]));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut groups: Vec<Vec<VertexId>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        if slot[r] == usize::MAX {
            slot[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[r]].push(v);
    }
    groups
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{standard, OrderedComplex};
    use crate::rigid::mapping_space;

    #[test]
    fn components() {
        assert_eq!(pi0(&OrderedComplex::simplex(3)).len(), 1);
        assert_eq!(pi0(&standard("boundary", &[1]).unwrap()), vec![vec![0], vec![1]]);
        let s = standard("two_triangles", &[]).unwrap();
        let sp = mapping_space(s.as_ordered().unwrap(), 0, 3).unwrap();
        assert_eq!(pi0(sp.complex()).len(), 1);
    }
}
