use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A degeneracy operator `s_{i1} s_{i2} ... s_{ik}` in admissible normal form,
/// `i1 > i2 > ... > ik`.
///
/// The operator acts on a simplex of dimension `d` and produces one of
/// dimension `d + k`. Equivalently it is the monotone surjection
/// `[d + k] -> [d]` whose repeated positions (`j` with `σ(j) = σ(j+1)`) are
/// exactly the indices of the word.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DegeneracyWord(pub(crate) Vec<usize>);

impl DegeneracyWord {
    pub fn identity() -> Self {
        Self(Vec::new())
    }

    /// Normalizes an arbitrary word `s_{w[0]} s_{w[1]} ...` (applied right to
    /// left) acting on a simplex of dimension `base_dim`.
    pub fn from_word(word: &[usize], base_dim: usize) -> Result<Self> {
        let mut sigma: Vec<usize> = (0..=base_dim).collect();
        for &j in word.iter().rev() {
            let dim = sigma.len() - 1;
            if j > dim {
                return Err(Error::OperatorOutOfRange { index: j, dim });
            }
            sigma = precompose_degeneracy(&sigma, j);
        }
        Ok(Self::from_surjection(&sigma))
    }

    /// Reads the word off a monotone surjection given as its value list.
    pub fn from_surjection(sigma: &[usize]) -> Self {
        let mut repeats: Vec<usize> = sigma
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == w[1])
            .map(|(j, _)| j)
            .collect();
        repeats.reverse();
        Self(repeats)
    }

    /// The monotone surjection `[dim] -> [dim - len]` this word denotes.
    pub fn surjection(&self, dim: usize) -> Vec<usize> {
        debug_assert!(self.0.len() <= dim);
        let mut out = Vec::with_capacity(dim + 1);
        let mut value = 0;
        for j in 0..=dim {
            out.push(value);
            if j < dim && !self.0.contains(&j) {
                value += 1;
            }
        }
        out
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for DegeneracyWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in &self.0 {
            write!(f, "s{i}")?;
        }
        Ok(())
    }
}

/// `σ ∘ σ_j`, where `σ_j : [m+1] -> [m]` repeats `j`.
pub(crate) fn precompose_degeneracy(sigma: &[usize], j: usize) -> Vec<usize> {
    let m = sigma.len() - 1;
    (0..=m + 1)
        .map(|t| sigma[if t <= j { t } else { t - 1 }])
        .collect()
}

/// `σ ∘ δ_i`, where `δ_i : [m-1] -> [m]` skips `i`.
pub(crate) fn precompose_face(sigma: &[usize], i: usize) -> Vec<usize> {
    sigma
        .iter()
        .enumerate()
        .filter(|&(t, _)| t != i)
        .map(|(_, &v)| v)
        .collect()
}
