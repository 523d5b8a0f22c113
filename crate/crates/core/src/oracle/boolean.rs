use crate::error::{Error, Result};

/// Strict chains `S⁰ ⊊ S¹ ⊊ ... ⊊ Sᵏ` of subsets of an `m`-set, as bitmasks,
/// found by walking every subset.
pub fn boolean_chains(m: usize, k: usize) -> Result<Vec<Vec<u64>>> {
    if m > 12 {
        return Err(Error::BoundExceeded(format!("Boolean lattice on {m} elements is too large to walk")));
    }
    let mut out = Vec::new();
    let mut chain = Vec::with_capacity(k + 1);
    for start in 0..1u64 << m {
        chain.push(start);
        grow(m, k, &mut chain, &mut out);
        chain.pop();
    }
    Ok(out)
}

fn grow(m: usize, k: usize, chain: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if chain.len() == k + 1 {
        out.push(chain.clone());
        return;
    }
    let last = *chain.last().unwrap();
    for next in 0..1u64 << m {
        if next != last && last & !next == 0 {
            chain.push(next);
            grow(m, k, chain, out);
            chain.pop();
        }
    }
}

/// `counts[k]` is the number of strict chains of length `k + 1`, for
/// `k = 0..=m`.
pub fn boolean_chain_counts(m: usize) -> Result<Vec<usize>> {
    (0..=m).map(|k| boolean_chains(m, k).map(|c| c.len())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_lattices() {
        assert_eq!(boolean_chain_counts(0).unwrap(), vec![1]);
        assert_eq!(boolean_chain_counts(1).unwrap(), vec![2, 1]);
        assert_eq!(boolean_chain_counts(2).unwrap(), vec![4, 5, 2]);
        assert_eq!(boolean_chain_counts(3).unwrap(), vec![8, 19, 18, 6]);
    }

    #[test]
    fn top_chains_are_permutations() {
        for m in 0..5 {
            let n = boolean_chains(m, m).unwrap().len();
            assert_eq!(n, (1..=m).product::<usize>());
        }
    }
}
