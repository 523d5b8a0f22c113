use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::complex::{SimplexKey, SimplicialSet};
use crate::error::{Error, Result};
use crate::rigid::CoherentNerveLevel;

pub const MAX_HORN_DIM: usize = 4;

/// A simplicial set seen level by level, simplices numbered `0..level_size(n)`.
pub trait Levelwise {
    fn level_size(&self, n: usize) -> usize;
    /// Index of `d_i x` in level `n - 1`.
    fn face(&self, n: usize, x: usize, i: usize) -> usize;
}

/// Every simplex of a finite complex, degenerate ones included, up to `top`.
pub struct SimplicesOf {
    levels: Vec<Vec<SimplexKey>>,
    faces: Vec<Vec<Vec<usize>>>,
}

impl SimplicesOf {
    pub fn new<S: SimplicialSet + ?Sized>(s: &S, top: usize) -> Result<Self> {
        let levels: Vec<Vec<SimplexKey>> = (0..=top).map(|n| s.all_simplices(n)).collect();
        let index: Vec<HashMap<&SimplexKey, usize>> =
            levels.iter().map(|l| l.iter().enumerate().map(|(i, k)| (k, i)).collect()).collect();
        let mut faces = vec![Vec::new()];
        for n in 1..=top {
            let mut layer = Vec::with_capacity(levels[n].len());
            for key in &levels[n] {
                let row = (0..=n).map(|i| s.face(key, i).map(|f| index[n - 1][&f])).collect::<Result<Vec<_>>>()?;
                layer.push(row);
            }
            faces.push(layer);
        }
        Ok(Self { levels, faces })
    }

    pub fn key(&self, n: usize, x: usize) -> &SimplexKey {
        &self.levels[n][x]
    }
}

impl Levelwise for SimplicesOf {
    fn level_size(&self, n: usize) -> usize {
        self.levels.get(n).map_or(0, Vec::len)
    }
    fn face(&self, n: usize, x: usize, i: usize) -> usize {
        self.faces[n][x][i]
    }
}

/// The levels of a truncated coherent nerve.
pub struct NerveLevels<'a>(pub &'a [CoherentNerveLevel]);

impl Levelwise for NerveLevels<'_> {
    fn level_size(&self, n: usize) -> usize {
        self.0.get(n).map_or(0, |l| l.functors.len())
    }
    fn face(&self, n: usize, x: usize, i: usize) -> usize {
        self.0[n].faces[x][i]
    }
}

/// A horn `Λⁿₖ -> X` with no filler: `faces[i]` is the image of the face
/// opposite vertex `i` (entry `k` is unused and set to `usize::MAX`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HornFailure {
    pub n: usize,
    pub k: usize,
    pub faces: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HornReport {
    pub checked: usize,
    pub failures: Vec<HornFailure>,
}

/// Enumerates all inner horns `Λⁿₖ -> X` with `2 <= n <= dmax` and looks for
/// fillers. `X` must be known up to level `dmax`.
pub fn inner_horn_check<L: Levelwise + ?Sized>(x: &L, dmax: usize) -> Result<HornReport> {
    if dmax > MAX_HORN_DIM {
        return Err(Error::BoundExceeded(format!("horn dimension {dmax} exceeds {MAX_HORN_DIM}")));
    }
    let mut report = HornReport { checked: 0, failures: Vec::new() };
    for n in 2..=dmax {
        for k in 1..n {
            let fillable: HashSet<Vec<usize>> = (0..x.level_size(n))
                .map(|y| (0..=n).map(|i| if i == k { usize::MAX } else { x.face(n, y, i) }).collect())
                .collect();
            let mut tuple = vec![usize::MAX; n + 1];
            extend(x, n, k, 0, &mut tuple, &fillable, &mut report);
        }
    }
    Ok(report)
}

/// Chooses `tuple[pos..]`, keeping `d_i x_j = d_{j-1} x_i` for `i < j`.
fn extend<L: Levelwise + ?Sized>(
    x: &L,
    n: usize,
    k: usize,
    pos: usize,
    tuple: &mut Vec<usize>,
    fillable: &HashSet<Vec<usize>>,
    report: &mut HornReport,
) {
    if pos > n {
        report.checked += 1;
        if !fillable.contains(tuple) {
            report.failures.push(HornFailure { n, k, faces: tuple.clone() });
        }
        return;
    }
    if pos == k {
        extend(x, n, k, pos + 1, tuple, fillable, report);
        return;
    }
    let j = pos;
    'candidates: for c in 0..x.level_size(n - 1) {
        for i in 0..j {
            if i == k {
                continue;
            }
            // d_i x_j = d_{j-1} x_i
            if x.face(n - 1, c, i) != x.face(n - 1, tuple[i], j - 1) {
                continue 'candidates;
            }
        }
        tuple[j] = c;
        extend(x, n, k, pos + 1, tuple, fillable, report);
    }
    tuple[j] = usize::MAX;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{standard, OrderedComplex};
    use crate::rigid::{categorify, coherent_nerve_truncated};

    #[test]
    fn simplex_has_no_failures() {
        let s = OrderedComplex::simplex(2);
        let report = inner_horn_check(&SimplicesOf::new(&s, 3).unwrap(), 3).unwrap();
        assert!(report.checked > 0);
        assert!(report.failures.is_empty());
    }

    #[test]
    fn horn_two_one_fails_once() {
        let s = standard("horn", &[2, 1]).unwrap();
        let levels = SimplicesOf::new(&s, 2).unwrap();
        let report = inner_horn_check(&levels, 2).unwrap();
        assert_eq!(report.failures.len(), 1);
        let f = &report.failures[0];
        let (e0, e2) = (levels.key(1, f.faces[0]), levels.key(1, f.faces[2]));
        assert_eq!(s.vertices(e2), vec![0, 1]);
        assert_eq!(s.vertices(e0), vec![1, 2]);
    }

    #[test]
    fn coherent_nerve_of_interval() {
        let c = categorify(&OrderedComplex::simplex(1)).unwrap();
        let levels = coherent_nerve_truncated(&c, 3).unwrap();
        let report = inner_horn_check(&NerveLevels(&levels), 3).unwrap();
        assert_eq!(report.checked, 14);
        assert!(report.failures.is_empty());
    }

    /// `𝔠(Δ²)(0,2) = Δ¹` is not Kan, so some 3-horns cannot be filled: each
    /// failure would need an edge from the spine `[0,1]∨[1,2]` back to the
    /// long edge `[0,2]`.
    #[test]
    fn coherent_nerve_of_triangle_has_unfillable_three_horns() {
        let c = categorify(&OrderedComplex::simplex(2)).unwrap();
        let levels = coherent_nerve_truncated(&c, 3).unwrap();
        let report = inner_horn_check(&NerveLevels(&levels), 3).unwrap();
        assert_eq!(report.checked, 80);
        assert_eq!(report.failures.len(), 6);
        assert!(report.failures.iter().all(|f| f.n == 3));
        let edges = c.space(0, 2).unwrap().simplices(1);
        assert_eq!(edges.len(), 1);
        assert_eq!(edges[0].map().vertices(), &[0, 1, 2]);
        assert_eq!(edges[0].map().necklace().beads(), &[2]);
    }
}
