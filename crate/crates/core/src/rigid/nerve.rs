use std::collections::HashMap;

use super::{MappingSimplex, SimplicialCategoryPresentation};
use crate::complex::VertexId;
use crate::error::{Error, Result};
use crate::necklace::VertexSet;

pub const MAX_NERVE_LEVEL: usize = 3;

/// A chain `S⁰ ⊆ ... ⊆ Sᵐ` in `P_{i,j}`: subsets of `{i..j}` containing `i, j`.
type Chain = Vec<VertexSet>;

/// A simplicial functor `𝔠(Δⁿ) -> D`: object images plus the images of the
/// indecomposable nondegenerate chains (those with `S⁰ = {i, j}`), listed in
/// the fixed order of [`indecomposables`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NerveFunctor {
    pub objects: Vec<VertexId>,
    pub images: Vec<MappingSimplex>,
}

#[derive(Debug, Clone)]
pub struct CoherentNerveLevel {
    pub level: usize,
    pub functors: Vec<NerveFunctor>,
    /// `faces[x][k]` is the index of `d_k` of functor `x` in the level below.
    pub faces: Vec<Vec<usize>>,
}

/// Indecomposable strict chains of `𝔠(Δⁿ)`, by increasing span `j - i`,
/// then dimension, then lexicographically.
fn indecomposables(n: usize) -> Vec<(usize, usize, Chain)> {
    let mut out = Vec::new();
    for span in 1..=n {
        for i in 0..=n - span {
            let j = i + span;
            let bottom = VertexSet::from_iter([i, j]);
            let top = VertexSet::range(i, j);
            let mut chains = super::space::flanked_flags(bottom, top);
            // Chains need not reach the top; take every prefix.
            let mut all: Vec<Chain> = Vec::new();
            for c in chains.drain(..) {
                for len in 1..=c.len() {
                    all.push(c[..len].to_vec());
                }
            }
            all.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
            all.dedup();
            out.extend(all.into_iter().map(|c| (i, j, c)));
        }
    }
    out
}

struct Level<'a> {
    cat: &'a SimplicialCategoryPresentation,
    chains: Vec<(usize, usize, Chain)>,
    index: HashMap<(usize, usize, Chain), usize>,
}

impl<'a> Level<'a> {
    fn new(cat: &'a SimplicialCategoryPresentation, n: usize) -> Self {
        let chains = indecomposables(n);
        let index = chains.iter().enumerate().map(|(x, c)| (c.clone(), x)).collect();
        Self { cat, chains, index }
    }

    /// Image of an arbitrary (weakly increasing) chain in `P_{i,j}` given
    /// the images of the indecomposables assigned so far.
    fn value(&self, objects: &[VertexId], images: &[MappingSimplex], i: usize, j: usize, chain: &[VertexSet]) -> Result<MappingSimplex> {
        let dim = chain.len() - 1;
        if i == j {
            return Ok(MappingSimplex::identity(objects[i], dim));
        }
        let inner = chain[0].difference(VertexSet::from_iter([i, j]));
        if let Some(k) = inner.min() {
            let left: Chain = chain.iter().map(|s| s.intersection(VertexSet::range(i, k))).collect();
            let right: Chain = chain.iter().map(|s| s.intersection(VertexSet::range(k, j))).collect();
            let f = self.value(objects, images, i, k, &left)?;
            let g = self.value(objects, images, k, j, &right)?;
            return self.cat.compose(&g, &f);
        }
        let mut root: Chain = Vec::with_capacity(chain.len());
        let mut sigma = Vec::with_capacity(chain.len());
        for &s in chain {
            if root.last() != Some(&s) {
                root.push(s);
            }
            sigma.push(root.len() - 1);
        }
        let x = *self
            .index
            .get(&(i, j, root))
            .ok_or_else(|| Error::InvalidMorphism(format!("no indecomposable chain in P({i},{j})")))?;
        let base = images.get(x).ok_or_else(|| Error::InvalidMorphism("chain used before assignment".into()))?;
        let mut m = base.clone();
        m.flag = sigma.iter().map(|&t| base.flag[t]).collect();
        Ok(m)
    }

    fn functors_over(&self, objects: &[VertexId]) -> Result<Vec<NerveFunctor>> {
        let mut out = Vec::new();
        let mut images = Vec::with_capacity(self.chains.len());
        self.extend(objects, &mut images, &mut out)?;
        Ok(out)
    }

    fn extend(&self, objects: &[VertexId], images: &mut Vec<MappingSimplex>, out: &mut Vec<NerveFunctor>) -> Result<()> {
        let x = images.len();
        if x == self.chains.len() {
            out.push(NerveFunctor { objects: objects.to_vec(), images: images.clone() });
            return Ok(());
        }
        let (i, j, ref chain) = self.chains[x];
        let Some(space) = self.cat.space(objects[i], objects[j]) else {
            return Ok(());
        };
        let dim = chain.len() - 1;
        let mut expected = Vec::with_capacity(dim + 1);
        if dim > 0 {
            for l in 0..=dim {
                let mut face = chain.clone();
                face.remove(l);
                expected.push(self.value(objects, images, i, j, &face)?);
            }
        }
        'candidates: for candidate in space.all_simplices(dim) {
            for (l, e) in expected.iter().enumerate() {
                if self.cat.face(&candidate, l)? != *e {
                    continue 'candidates;
                }
            }
            images.push(candidate);
            self.extend(objects, images, out)?;
            images.pop();
        }
        Ok(())
    }
}

fn object_sequences(cat: &SimplicialCategoryPresentation, n: usize) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(cat: &SimplicialCategoryPresentation, n: usize, current: &mut Vec<VertexId>, out: &mut Vec<Vec<VertexId>>) {
        if current.len() == n + 1 {
            out.push(current.clone());
            return;
        }
        for v in 0..cat.object_count() {
            if current.iter().all(|&u| cat.space(u, v).is_some()) {
                current.push(v);
                rec(cat, n, current, out);
                current.pop();
            }
        }
    }
    rec(cat, n, &mut current, &mut out);
    out
}

/// `d_k` of a functor at level `n`: restrict along `δ_k: [n-1] -> [n]`.
fn functor_face(upper: &Level, lower: &Level, f: &NerveFunctor, k: usize) -> NerveFunctor {
    let delta = |v: usize| if v >= k { v + 1 } else { v };
    let mut objects = f.objects.clone();
    objects.remove(k);
    let images = lower
        .chains
        .iter()
        .map(|(p, q, chain)| {
            let moved: Chain = chain.iter().map(|s| s.iter().map(delta).collect()).collect();
            f.images[upper.index[&(delta(*p), delta(*q), moved)]].clone()
        })
        .collect();
    NerveFunctor { objects, images }
}

/// Levels `0..=nmax` of the homotopy coherent nerve of `D`.
pub fn coherent_nerve_truncated(cat: &SimplicialCategoryPresentation, nmax: usize) -> Result<Vec<CoherentNerveLevel>> {
    if nmax > MAX_NERVE_LEVEL {
        return Err(Error::BoundExceeded(format!("nerve level {nmax} exceeds {MAX_NERVE_LEVEL}")));
    }
    let mut levels: Vec<CoherentNerveLevel> = Vec::new();
    let mut previous: Option<(Level, HashMap<NerveFunctor, usize>)> = None;
    for n in 0..=nmax {
        let level = Level::new(cat, n);
        let mut functors = Vec::new();
        for objects in object_sequences(cat, n) {
            functors.extend(level.functors_over(&objects)?);
        }
        functors.sort();
        let faces = match &previous {
            None => vec![Vec::new(); functors.len()],
            Some((lower, lookup)) => functors
                .iter()
                .map(|f| (0..=n).map(|k| lookup[&functor_face(&level, lower, f, k)]).collect())
                .collect(),
        };
        let lookup = functors.iter().enumerate().map(|(x, f)| (f.clone(), x)).collect();
        levels.push(CoherentNerveLevel { level: n, functors, faces });
        previous = Some((level, lookup));
    }
    Ok(levels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::OrderedComplex;
    use crate::rigid::categorify;

    fn counts(levels: &[CoherentNerveLevel]) -> Vec<usize> {
        levels.iter().map(|l| l.functors.len()).collect()
    }

    #[test]
    fn nerve_of_interval() {
        let c = categorify(&OrderedComplex::simplex(1)).unwrap();
        let levels = coherent_nerve_truncated(&c, 3).unwrap();
        assert_eq!(counts(&levels), vec![2, 3, 4, 5]);
    }

    #[test]
    fn discrete_category() {
        let s = OrderedComplex::with_vertex_count(3, &[]).unwrap();
        let c = categorify(&s).unwrap();
        assert_eq!(counts(&coherent_nerve_truncated(&c, 2).unwrap()), vec![3, 3, 3]);
    }

    #[test]
    fn level_one_counts_vertices() {
        let c = categorify(&OrderedComplex::simplex(2)).unwrap();
        let levels = coherent_nerve_truncated(&c, 1).unwrap();
        let expected: usize = c.spaces().map(|(_, sp)| sp.simplices(0).len()).sum();
        assert_eq!(levels[1].functors.len(), expected);
    }

    #[test]
    fn bound_enforced() {
        let c = categorify(&OrderedComplex::simplex(1)).unwrap();
        assert!(coherent_nerve_truncated(&c, 4).is_err());
    }

    #[test]
    fn indecomposable_counts() {
        // P_{0,2} contributes {0,2} and {0,2}<{0,1,2}; spans 1 contribute one each.
        assert_eq!(indecomposables(2).len(), 4);
    }

    #[test]
    fn faces_satisfy_identities() {
        let c = categorify(&OrderedComplex::simplex(2)).unwrap();
        let levels = coherent_nerve_truncated(&c, 3).unwrap();
        for n in 2..=3 {
            for x in 0..levels[n].functors.len() {
                for i in 0..n {
                    for j in (i + 1)..=n {
                        let a = levels[n - 1].faces[levels[n].faces[x][j]][i];
                        let b = levels[n - 1].faces[levels[n].faces[x][i]][j - 1];
                        assert_eq!(a, b);
                    }
                }
            }
        }
    }
}
