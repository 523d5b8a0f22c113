//! Finite simplicial sets.
//!
//! Two presentations share the [`SimplicialSet`] read interface:
//! [`OrderedComplex`] stores nondegenerate simplices as vertex chains (every
//! simplex is determined by its vertices), and [`GeneratedComplex`] stores
//! abstract generators with an explicit face table, which is needed for
//! complexes such as `Δ¹/∂Δ¹` that are not ordered.
//!
//! Every simplex, degenerate or not, is referred to by a [`SimplexKey`]: its
//! Eilenberg–Zilber decomposition into a nondegenerate generator and a
//! degeneracy word in normal form.

mod degeneracy;
mod fixtures;
mod generated;
mod order;
mod ordered;
mod product;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use degeneracy::DegeneracyWord;
pub use fixtures::{fixture_names, standard, Complex, FixtureBuilder};
pub use generated::GeneratedComplex;
pub use order::{
    is_ordered, is_simple_inclusion, preceq, OrderedViolation, PreorderRelation,
    SimpleInclusionWitness, Subcomplex, Verdict,
};
pub use ordered::OrderedComplex;
pub use product::{product, Product};

use crate::error::{Error, Result};
use degeneracy::{precompose_degeneracy, precompose_face};

pub type VertexId = usize;

/// Canonical reference to a simplex: `s_word(gen)`.
///
/// `gen` indexes the generators of dimension `dim - word.len()`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimplexKey {
    pub dim: usize,
    pub gen: usize,
    pub word: DegeneracyWord,
}

impl SimplexKey {
    pub fn nondegenerate(dim: usize, gen: usize) -> Self {
        Self { dim, gen, word: DegeneracyWord::identity() }
    }

    pub fn vertex(v: VertexId) -> Self {
        Self::nondegenerate(0, v)
    }

    pub fn gen_dim(&self) -> usize {
        self.dim - self.word.len()
    }

    pub fn is_degenerate(&self) -> bool {
        !self.word.is_empty()
    }

    /// Applies a further degeneracy given as a surjection `[m] -> [self.dim]`.
    fn degenerate_by(&self, outer: &[usize]) -> Self {
        let inner = self.word.surjection(self.dim);
        let total: Vec<usize> = outer.iter().map(|&t| inner[t]).collect();
        Self {
            dim: outer.len() - 1,
            gen: self.gen,
            word: DegeneracyWord::from_surjection(&total),
        }
    }
}

impl fmt::Display for SimplexKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            write!(f, "x{}_{}", self.dim, self.gen)
        } else {
            write!(f, "{}(x{}_{})", self.word, self.gen_dim(), self.gen)
        }
    }
}

/// A face (`d_i`) or degeneracy (`s_i`) operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operator {
    Face(usize),
    Degeneracy(usize),
}

/// Read interface over a finite simplicial set.
///
/// Vertices are the generators of dimension 0, so `VertexId` `v` is the key
/// `x0_v`. Implementors provide the face table on nondegenerate generators;
/// everything else is derived.
pub trait SimplicialSet {
    fn vertex_count(&self) -> usize;

    fn generator_count(&self, dim: usize) -> usize;

    /// Highest dimension with a generator, or `None` for the empty complex.
    fn max_dim(&self) -> Option<usize>;

    /// Face `d_i` of a nondegenerate generator of dimension `dim >= 1`.
    fn generator_face(&self, dim: usize, gen: usize, i: usize) -> SimplexKey;

    /// Vertex sequence of a nondegenerate generator.
    fn generator_vertices(&self, dim: usize, gen: usize) -> Vec<VertexId> {
        if dim == 0 {
            return vec![gen];
        }
        let mut out = self.vertices(&self.generator_face(dim, gen, dim));
        let last = self.vertices(&self.generator_face(dim, gen, 0));
        out.push(*last.last().expect("face has a vertex"));
        out
    }

    fn contains(&self, key: &SimplexKey) -> bool {
        key.word.len() <= key.dim
            && key.word.indices().iter().all(|&i| i < key.dim)
            && key.gen < self.generator_count(key.gen_dim())
    }

    fn check_key(&self, key: &SimplexKey) -> Result<()> {
        if self.contains(key) {
            Ok(())
        } else {
            Err(Error::UnknownGenerator { dim: key.gen_dim(), gen: key.gen })
        }
    }

    /// `d_i(key)`, renormalized.
    fn face(&self, key: &SimplexKey, i: usize) -> Result<SimplexKey> {
        self.check_key(key)?;
        if key.dim == 0 || i > key.dim {
            return Err(Error::OperatorOutOfRange { index: i, dim: key.dim });
        }
        let d = key.gen_dim();
        let sigma = key.word.surjection(key.dim);
        let tau = precompose_face(&sigma, i);
        // The only value that can be lost is σ(i), when i is its sole preimage.
        let lost = sigma[i];
        if tau.contains(&lost) {
            return Ok(SimplexKey {
                dim: key.dim - 1,
                gen: key.gen,
                word: DegeneracyWord::from_surjection(&tau),
            });
        }
        // τ = δ_lost ∘ τ', result = s_τ'(d_lost gen)
        let tau_prime: Vec<usize> =
            tau.iter().map(|&v| if v < lost { v } else { v - 1 }).collect();
        let inner = self.generator_face(d, key.gen, lost);
        Ok(inner.degenerate_by(&tau_prime))
    }

    /// `s_i(key)`, renormalized.
    fn degeneracy(&self, key: &SimplexKey, i: usize) -> Result<SimplexKey> {
        self.check_key(key)?;
        if i > key.dim {
            return Err(Error::OperatorOutOfRange { index: i, dim: key.dim });
        }
        let ident: Vec<usize> = (0..=key.dim).collect();
        Ok(key.degenerate_by(&precompose_degeneracy(&ident, i)))
    }

    fn apply_operator(&self, key: &SimplexKey, op: Operator) -> Result<SimplexKey> {
        match op {
            Operator::Face(i) => self.face(key, i),
            Operator::Degeneracy(i) => self.degeneracy(key, i),
        }
    }

    /// Restricts a simplex to the positions in `keep` (strictly increasing).
    fn restrict(&self, key: &SimplexKey, keep: &[usize]) -> Result<SimplexKey> {
        let mut current = key.clone();
        for pos in (0..=key.dim).rev() {
            if !keep.contains(&pos) {
                current = self.face(&current, pos)?;
            }
        }
        Ok(current)
    }

    /// `θ*(key)` for a monotone map `θ: [m] -> [key.dim]` given by its values.
    fn pull_back(&self, key: &SimplexKey, theta: &[usize]) -> Result<SimplexKey> {
        if theta.is_empty() || theta.windows(2).any(|w| w[0] > w[1]) || theta.iter().any(|&t| t > key.dim) {
            return Err(Error::InvalidMorphism(format!("{theta:?} is not a monotone map into [{}]", key.dim)));
        }
        let mut image = theta.to_vec();
        image.dedup();
        let restricted = self.restrict(key, &image)?;
        let sigma: Vec<usize> = theta.iter().map(|t| image.binary_search(t).unwrap()).collect();
        Ok(restricted.degenerate_by(&sigma))
    }

    /// Vertex sequence of any simplex.
    fn vertices(&self, key: &SimplexKey) -> Vec<VertexId> {
        let base = self.generator_vertices(key.gen_dim(), key.gen);
        key.word.surjection(key.dim).into_iter().map(|t| base[t]).collect()
    }

    /// Number of nondegenerate simplices per dimension.
    fn f_vector(&self) -> Vec<usize> {
        match self.max_dim() {
            None => Vec::new(),
            Some(top) => (0..=top).map(|d| self.generator_count(d)).collect(),
        }
    }

    /// All simplices of dimension `dim`, degenerate ones included.
    fn all_simplices(&self, dim: usize) -> Vec<SimplexKey> {
        let mut out = Vec::new();
        let top = self.max_dim().map_or(0, |t| t.min(dim));
        if self.max_dim().is_none() {
            return out;
        }
        for d in 0..=top {
            let words = surjection_words(dim, d);
            for gen in 0..self.generator_count(d) {
                for w in &words {
                    out.push(SimplexKey { dim, gen, word: w.clone() });
                }
            }
        }
        out
    }
}

/// All degeneracy words taking dimension `to` to dimension `from` (`to >= from`).
pub fn surjection_words(from: usize, to: usize) -> Vec<DegeneracyWord> {
    // choose which `from - to` of the `from` adjacent positions repeat
    let k = from - to;
    let mut out = Vec::new();
    let mut pick = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, pick: &mut Vec<usize>, out: &mut Vec<DegeneracyWord>) {
        if pick.len() == k {
            let mut w = pick.clone();
            w.reverse();
            out.push(DegeneracyWord(w));
            return;
        }
        for j in start..n {
            pick.push(j);
            rec(j + 1, n, k, pick, out);
            pick.pop();
        }
    }
    rec(0, from, k, &mut pick, &mut out);
    out
}

impl<T: SimplicialSet + ?Sized> SimplicialSet for &T {
    fn vertex_count(&self) -> usize {
        (**self).vertex_count()
    }
    fn generator_count(&self, dim: usize) -> usize {
        (**self).generator_count(dim)
    }
    fn max_dim(&self) -> Option<usize> {
        (**self).max_dim()
    }
    fn generator_face(&self, dim: usize, gen: usize, i: usize) -> SimplexKey {
        (**self).generator_face(dim, gen, i)
    }
    fn generator_vertices(&self, dim: usize, gen: usize) -> Vec<VertexId> {
        (**self).generator_vertices(dim, gen)
    }
}

/// Exhaustively checks `d_i d_j = d_{j-1} d_i` (`i < j`) and the mixed
/// identities on every simplex up to `max_dim`. Returns the first failure.
pub fn check_simplicial_identities<S: SimplicialSet + ?Sized>(
    complex: &S,
    max_dim: usize,
) -> Result<()> {
    let fail = |msg: String| Err(Error::SimplicialIdentity(msg));
    for dim in 0..=max_dim {
        for x in complex.all_simplices(dim) {
            for j in 0..=dim {
                // d_j s_j = d_{j+1} s_j = id
                let sj = complex.degeneracy(&x, j)?;
                if complex.face(&sj, j)? != x || complex.face(&sj, j + 1)? != x {
                    return fail(format!("d s_{j} != id on {x}"));
                }
                for i in 0..=dim + 1 {
                    // d_i s_j = s_{j-1} d_i (i < j), s_j d_{i-1} (i > j+1)
                    let lhs = complex.face(&sj, i)?;
                    if i < j {
                        let rhs = complex.degeneracy(&complex.face(&x, i)?, j - 1)?;
                        if lhs != rhs {
                            return fail(format!("d_{i} s_{j} on {x}"));
                        }
                    } else if i > j + 1 {
                        let rhs = complex.degeneracy(&complex.face(&x, i - 1)?, j)?;
                        if lhs != rhs {
                            return fail(format!("d_{i} s_{j} on {x}"));
                        }
                    }
                }
            }
            if dim >= 2 {
                for j in 0..=dim {
                    for i in 0..j {
                        let lhs = complex.face(&complex.face(&x, j)?, i)?;
                        let rhs = complex.face(&complex.face(&x, i)?, j - 1)?;
                        if lhs != rhs {
                            return fail(format!("d_{i} d_{j} on {x}"));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}
