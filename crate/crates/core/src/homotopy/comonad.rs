use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};

pub const MAX_COMONAD_N: usize = 4;
pub const MAX_COMONAD_DEPTH: usize = 3;

/// A non-identity morphism of `(FU)^{ℓ+1}([n])`.
///
/// Graphs are identity-free: `U` forgets composition and identities, `F`
/// takes nonempty paths. An `Arrow` is a morphism `i < j` of `[n]` itself;
/// a `Path` is a composable string of morphisms from the level below.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Morphism {
    Arrow { from: usize, to: usize },
    Path { from: usize, to: usize, steps: Vec<Morphism> },
}

impl Morphism {
    pub fn source(&self) -> usize {
        match self {
            Morphism::Arrow { from, .. } | Morphism::Path { from, .. } => *from,
        }
    }

    pub fn target(&self) -> usize {
        match self {
            Morphism::Arrow { to, .. } | Morphism::Path { to, .. } => *to,
        }
    }

    /// Nesting depth: 0 for arrows of `[n]`.
    pub fn depth(&self) -> usize {
        match self {
            Morphism::Arrow { .. } => 0,
            Morphism::Path { steps, .. } => 1 + steps[0].depth(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelCount {
    pub n: usize,
    pub l: usize,
    pub i: usize,
    pub j: usize,
    pub count: usize,
}

type Homs = HashMap<(usize, usize), Vec<Morphism>>;

/// Non-identity morphisms of `F U (C)` from the non-identity morphisms of `C`.
fn free_on(n: usize, below: &Homs) -> Homs {
    let mut out: Homs = HashMap::new();
    for span in 1..=n {
        for i in 0..=n - span {
            let j = i + span;
            let mut homs = Vec::new();
            // A path is a first step i -> k followed by a (possibly empty) path k -> j.
            for k in i + 1..=j {
                for first in &below[&(i, k)] {
                    if k == j {
                        homs.push(Morphism::Path { from: i, to: j, steps: vec![first.clone()] });
                        continue;
                    }
                    for rest in &out[&(k, j)] {
                        let Morphism::Path { steps, .. } = rest else { unreachable!() };
                        let mut all = vec![first.clone()];
                        all.extend(steps.iter().cloned());
                        homs.push(Morphism::Path { from: i, to: j, steps: all });
                    }
                }
            }
            out.insert((i, j), homs);
        }
    }
    out
}

fn levels(n: usize, depth: usize) -> Vec<Homs> {
    let mut base: Homs = HashMap::new();
    for i in 0..=n {
        for j in i + 1..=n {
            base.insert((i, j), vec![Morphism::Arrow { from: i, to: j }]);
        }
    }
    let mut out = Vec::with_capacity(depth + 1);
    let mut below = base;
    for _ in 0..=depth {
        let next = free_on(n, &below);
        out.push(next.clone());
        below = next;
    }
    out
}

/// Size of the hom-set `(i, j)` of `(FU)^{ℓ+1}([n])`, built literally.
pub fn comonad_level(n: usize, l: usize, i: usize, j: usize) -> Result<LevelCount> {
    if n > MAX_COMONAD_N || l > MAX_COMONAD_DEPTH {
        return Err(Error::BoundExceeded(format!(
            "comonad levels need n <= {MAX_COMONAD_N} and l <= {MAX_COMONAD_DEPTH}, got n={n}, l={l}"
        )));
    }
    if i > n || j > n {
        return Err(Error::VertexOutOfRange { vertex: i.max(j), count: n + 1 });
    }
    let count = match i.cmp(&j) {
        std::cmp::Ordering::Equal => 1,
        std::cmp::Ordering::Greater => 0,
        std::cmp::Ordering::Less => {
            let homs = &levels(n, l)[l][&(i, j)];
            debug_assert!(homs.iter().all(|m| m.depth() == l + 1 && m.source() == i && m.target() == j));
            homs.len()
        }
    };
    Ok(LevelCount { n, l, i, j, count })
}

/// `(ℓ + 2)^m`: chains `S⁰ ⊆ ... ⊆ S^ℓ` of subsets of an `m`-set.
pub fn chain_count(m: usize, l: usize) -> u64 {
    (l as u64 + 2).pow(m as u32)
}

/// Counts the same chains by listing every tuple of subsets.
pub fn chain_count_brute_force(m: usize, l: usize) -> Result<u64> {
    if m > 4 || l > 3 {
        return Err(Error::BoundExceeded(format!("brute force needs m <= 4 and l <= 3, got m={m}, l={l}")));
    }
    let subsets = 1u64 << m;
    let total = subsets.pow(l as u32 + 1);
    let mut count = 0;
    for code in 0..total {
        let sets: Vec<u64> = (0..=l).map(|t| (code / subsets.pow(t as u32)) % subsets).collect();
        if sets.windows(2).all(|w| w[0] & !w[1] == 0) {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(comonad_level(2, 0, 0, 2).unwrap().count, 2);
        assert_eq!(comonad_level(3, 1, 0, 3).unwrap().count, 9);
        assert_eq!(comonad_level(3, 2, 1, 1).unwrap().count, 1);
        assert_eq!(comonad_level(3, 2, 2, 1).unwrap().count, 0);
        assert!(comonad_level(5, 0, 0, 1).is_err());
        assert!(comonad_level(2, 4, 0, 1).is_err());
    }

    #[test]
    fn chain_counts() {
        assert_eq!(chain_count(0, 3), 1);
        assert_eq!(chain_count(1, 0), 2);
        assert_eq!(chain_count(2, 1), 9);
        for m in 0..=3 {
            for l in 0..=2 {
                assert_eq!(chain_count_brute_force(m, l).unwrap(), chain_count(m, l));
            }
        }
    }

    #[test]
    fn levels_match_chain_counts() {
        for n in 0..=3 {
            for l in 0..=2 {
                for i in 0..=n {
                    for j in i..=n {
                        let expected = if i == j { 1 } else { chain_count(j - i - 1, l) as usize };
                        assert_eq!(comonad_level(n, l, i, j).unwrap().count, expected, "n={n} l={l} ({i},{j})");
                    }
                }
            }
        }
    }
}
