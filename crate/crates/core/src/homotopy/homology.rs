use serde::Serialize;

use super::pi0;
use crate::complex::{SimplexKey, SimplicialSet};
use crate::error::{Error, Result};

pub const HOMOLOGY_CAVEAT: &str =
    "homology point is a necessary condition for contractibility, not a sufficient one; fundamental groups are not checked";

/// Normalized chains: `boundaries[d]` is the matrix of `∂_d: C_d -> C_{d-1}`
/// with one row per `(d-1)`-generator and one column per `d`-generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    pub ranks: Vec<usize>,
    pub boundaries: Vec<Vec<Vec<i64>>>,
}

impl ChainComplex {
    /// Chains up to dimension `top`. Degenerate faces are zero.
    pub fn of<S: SimplicialSet + ?Sized>(s: &S, top: usize) -> Result<Self> {
        let ranks: Vec<usize> = (0..=top).map(|d| s.generator_count(d)).collect();
        let mut boundaries = vec![Vec::new()];
        for d in 1..=top {
            let mut m = vec![vec![0i64; ranks[d]]; ranks[d - 1]];
            for g in 0..ranks[d] {
                let key = SimplexKey::nondegenerate(d, g);
                for i in 0..=d {
                    let f = s.face(&key, i)?;
                    if !f.is_degenerate() {
                        m[f.gen][g] += if i % 2 == 0 { 1 } else { -1 };
                    }
                }
            }
            boundaries.push(m);
        }
        let c = Self { ranks, boundaries };
        c.check_square_zero()?;
        Ok(c)
    }

    /// `∂_{d-1} ∂_d = 0` for every `d`.
    pub fn check_square_zero(&self) -> Result<()> {
        for d in 2..self.boundaries.len() {
            let (outer, inner) = (&self.boundaries[d - 1], &self.boundaries[d]);
            for (r, row) in outer.iter().enumerate() {
                for c in 0..self.ranks[d] {
                    let v: i64 = row.iter().enumerate().map(|(k, &a)| a * inner[k][c]).sum();
                    if v != 0 {
                        return Err(Error::SimplicialIdentity(format!("∂∂ ≠ 0 in dimension {d} at ({r}, {c})")));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Nonzero diagonal entries of the Smith normal form, each dividing the next.
pub fn invariant_factors(matrix: &[Vec<i64>]) -> Vec<i64> {
    let mut a: Vec<Vec<i128>> = matrix.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Pivot: smallest nonzero absolute value in the remaining block.
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, &x) in row.iter().enumerate().skip(t) {
                if x != 0 && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t];
            let mut dirty = false;
            for i in t + 1..rows {
                let q = a[i][t] / p;
                if q != 0 {
                    for j in t..cols {
                        a[i][j] -= q * a[t][j];
                    }
                }
                dirty |= a[i][t] != 0;
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                dirty |= a[t][j] != 0;
            }
            if !dirty {
                // Divisibility: fold in any block entry the pivot does not divide.
                let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
                match bad {
                    Some(i) => {
                        for j in t..cols {
                            a[t][j] += a[i][j];
                        }
                        continue;
                    }
                    None => break,
                }
            }
            // Move the smallest remaining entry of row/column t onto the pivot.
            let mut best = (t, t);
            for i in t..rows {
                if a[i][t] != 0 && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if a[t][j] != 0 && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            if best.0 != t {
                a.swap(t, best.0);
            }
            if best.1 != t {
                for row in a.iter_mut() {
                    row.swap(t, best.1);
                }
            }
        }
        diag.push(a[t][t].unsigned_abs() as i64);
        t += 1;
    }
    diag
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub dim: usize,
    pub betti: usize,
    pub torsion: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyResult {
    pub groups: Vec<HomologyGroup>,
}

impl HomologyResult {
    pub fn betti(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.betti).collect()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.groups.iter().all(|g| g.torsion.is_empty())
    }
}

/// Integral homology `H_0 .. H_dmax` of the normalized chains.
pub fn homology<S: SimplicialSet + ?Sized>(s: &S, dmax: usize) -> Result<HomologyResult> {
    let chains = ChainComplex::of(s, dmax + 1)?;
    let factors: Vec<Vec<i64>> = chains.boundaries.iter().map(|m| invariant_factors(m)).collect();
    let groups = (0..=dmax)
        .map(|d| {
            let rank_out = if d == 0 { 0 } else { factors[d].len() };
            let rank_in = factors[d + 1].len();
            HomologyGroup {
                dim: d,
                betti: chains.ranks[d] - rank_out - rank_in,
                torsion: factors[d + 1].iter().copied().filter(|&x| x > 1).collect(),
            }
        })
        .collect();
    Ok(HomologyResult { groups })
}

/// Connected with vanishing reduced homology up to the top dimension.
pub fn is_homology_point<S: SimplicialSet + ?Sized>(s: &S) -> Result<bool> {
    if s.vertex_count() == 0 || pi0(s).len() != 1 {
        return Ok(false);
    }
    let top = s.max_dim().unwrap_or(0);
    let h = homology(s, top)?;
    Ok(h.is_torsion_free() && h.groups.iter().skip(1).all(|g| g.betti == 0) && h.groups[0].betti == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{standard, GeneratedComplex, OrderedComplex};
    use crate::necklace::Necklace;
    use crate::rigid::{mapping_space, necklace_mapping_space};
    use proptest::prelude::*;

    #[test]
    fn simplex_is_point() {
        for n in 0..4 {
            assert!(is_homology_point(&OrderedComplex::simplex(n)).unwrap());
        }
    }

    #[test]
    fn circle_from_boundary() {
        let s = standard("boundary", &[3]).unwrap();
        let sp = mapping_space(s.as_ordered().unwrap(), 0, 3).unwrap();
        assert_eq!(sp.f_vector(), vec![4, 4]);
        assert_eq!(homology(sp.complex(), 1).unwrap().betti(), vec![1, 1]);
        assert!(!is_homology_point(sp.complex()).unwrap());
    }

    #[test]
    fn sphere_and_loop() {
        let s = standard("boundary", &[3]).unwrap();
        assert_eq!(homology(&s, 2).unwrap().betti(), vec![1, 0, 1]);
        let l = standard("loop", &[]).unwrap();
        assert_eq!(homology(&l, 1).unwrap().betti(), vec![1, 1]);
    }

    #[test]
    fn torsion_detected() {
        // RP²: one vertex, one loop e, one triangle with faces (e, s0 v, e), so ∂ = 2e.
        let v = SimplexKey::vertex(0);
        let e = SimplexKey::nondegenerate(1, 0);
        let s0v = SimplexKey { dim: 1, gen: 0, word: crate::complex::DegeneracyWord::from_word(&[0], 0).unwrap() };
        let c = GeneratedComplex::new(vec![1, 1, 1], vec![vec![], vec![vec![v.clone(), v]], vec![vec![e.clone(), s0v, e]]]).unwrap();
        let h = homology(&c, 2).unwrap();
        assert_eq!(h.groups[1].torsion, vec![2]);
        assert_eq!(h.betti(), vec![1, 0, 0]);
    }

    #[test]
    fn necklace_cubes_are_points() {
        let t = Necklace::new(vec![2, 3]).unwrap();
        let c = necklace_mapping_space(&t, 0, 5).unwrap();
        assert!(is_homology_point(&c).unwrap());
    }

    #[test]
    fn snf_examples() {
        assert_eq!(invariant_factors(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(invariant_factors(&[vec![0, 0], vec![0, 0]]), Vec::<i64>::new());
        assert_eq!(invariant_factors(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
    }

    fn det(m: &[Vec<i64>]) -> i128 {
        if m.len() == 1 {
            return m[0][0] as i128;
        }
        (0..m.len())
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect()).collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] as i128 * det(&minor)
            })
            .sum()
    }

    proptest! {
        #[test]
        fn factors_divide_and_multiply_to_det(entries in proptest::collection::vec(-6i64..6, 9)) {
            let m: Vec<Vec<i64>> = entries.chunks(3).map(|c| c.to_vec()).collect();
            let f = invariant_factors(&m);
            for w in f.windows(2) {
                prop_assert_eq!(w[1] % w[0], 0);
            }
            let d = det(&m);
            if d == 0 {
                prop_assert!(f.len() < 3);
            } else {
                prop_assert_eq!(f.len(), 3);
                prop_assert_eq!(f.iter().map(|&x| x as i128).product::<i128>(), d.abs());
            }
        }
    }
}
