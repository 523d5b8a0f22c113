use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::complex::{OrderedComplex, SimplicialSet, VertexId};
use crate::error::{Error, Result};
use crate::rigid::{mapping_space, MappingSimplex};

/// A flagged triple as plain data: bead dimensions, vertex images and flag
/// sets as bitmasks over necklace vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RawTriple {
    pub beads: Vec<usize>,
    pub vertices: Vec<VertexId>,
    pub flag: Vec<u64>,
}

impl From<&MappingSimplex> for RawTriple {
    fn from(m: &MappingSimplex) -> Self {
        Self {
            beads: m.map().necklace().beads().to_vec(),
            vertices: m.map().vertices().to_vec(),
            flag: m.flag().iter().map(|s| s.bits()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientReport {
    pub triples: usize,
    pub classes: usize,
    pub expected: usize,
    pub mismatches: Vec<String>,
}

impl QuotientReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.classes == self.expected
    }
}

fn bead_ranges(beads: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(beads.len());
    let mut lo = 0;
    for &n in beads {
        out.push((lo, lo + n));
        lo += n;
    }
    out
}

fn joint_mask(beads: &[usize]) -> u64 {
    bead_ranges(beads).iter().fold(1, |m, &(_, hi)| m | 1 << hi)
}

/// Necklaces in preferred form with at most `max_vertices` vertices.
fn necklaces(max_vertices: usize) -> Vec<Vec<usize>> {
    fn compositions(total: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if total == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in 1..=total {
            prefix.push(part);
            compositions(total - part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = vec![vec![0]];
    for total in 1..max_vertices {
        compositions(total, &mut Vec::new(), &mut out);
    }
    out
}

/// Every vertex sequence from `a` to `b` whose beads are simplices of `s`.
fn maps(s: &OrderedComplex, beads: &[usize], a: VertexId, b: VertexId) -> Vec<Vec<VertexId>> {
    let len = beads.iter().sum::<usize>() + 1;
    let k = s.vertex_count();
    let mut out = Vec::new();
    for code in 0..k.pow(len as u32) {
        let seq: Vec<VertexId> = (0..len).map(|p| code / k.pow(p as u32) % k).collect();
        if seq[0] != a || seq[len - 1] != b {
            continue;
        }
        if bead_ranges(beads).iter().all(|&(lo, hi)| s.key_of_sequence(&seq[lo..=hi]).is_some()) {
            out.push(seq);
        }
    }
    out
}

/// Nested flags `J ⊆ F⁰ ⊆ ... ⊆ Fⁿ ⊆ V`, one per assignment of an entry level
/// (or none) to each non-joint vertex.
fn flags(beads: &[usize], n: usize) -> Vec<Vec<u64>> {
    let len = beads.iter().sum::<usize>() + 1;
    let joints = joint_mask(beads);
    let free: Vec<usize> = (0..len).filter(|&v| joints & 1 << v == 0).collect();
    let choices = n + 2;
    let mut out = Vec::new();
    for code in 0..choices.pow(free.len() as u32) {
        let mut flag = vec![joints; n + 1];
        for (p, &v) in free.iter().enumerate() {
            let level = code / choices.pow(p as u32) % choices;
            for set in flag.iter_mut().skip(level) {
                *set |= 1 << v;
            }
        }
        out.push(flag);
    }
    out
}

/// Monotone endpoint-preserving vertex maps sending each bead into one bead.
fn morphisms(source: &[usize], target: &[usize]) -> Vec<Vec<usize>> {
    let slen = source.iter().sum::<usize>() + 1;
    let tlen = target.iter().sum::<usize>() + 1;
    let tranges = bead_ranges(target);
    let mut out = Vec::new();
    let mut f = vec![0usize; slen];
    loop {
        let monotone = f.windows(2).all(|w| w[0] <= w[1]);
        if monotone && f[0] == 0 && f[slen - 1] == tlen - 1 {
            let beadwise = bead_ranges(source)
                .iter()
                .all(|&(lo, hi)| tranges.iter().any(|&(tl, th)| tl <= f[lo] && f[hi] <= th));
            if beadwise {
                out.push(f.clone());
            }
        }
        let Some(p) = (0..slen).find(|&p| f[p] + 1 < tlen) else { break };
        f[p] += 1;
        for q in f.iter_mut().take(p) {
            *q = 0;
        }
    }
    out
}

fn push_forward(f: &[usize], set: u64) -> u64 {
    f.iter().enumerate().filter(|&(v, _)| set & 1 << v != 0).fold(0, |m, (_, &w)| m | 1 << w)
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn is_canonical(t: &RawTriple) -> bool {
    let all = (1u64 << t.vertices.len()) - 1;
    let flanked = t.flag[0] == joint_mask(&t.beads) && *t.flag.last().unwrap() == all;
    let nondegenerate = bead_ranges(&t.beads)
        .iter()
        .all(|&(lo, hi)| t.vertices[lo..=hi].windows(2).all(|w| w[0] != w[1]));
    flanked && nondegenerate
}

/// Materializes every triple over `s` with at most `|S₀|` necklace vertices
/// and flags of length `<= max_dim + 1`, identifies `(T, g∘f, F)` with
/// `(T', g, f(F))` for every necklace map `f: T -> T'`, and checks that each
/// class holds exactly one flanked triple with nondegenerate beads and that
/// these are the simplices of `mapping_space`.
pub fn quotient_check(s: &OrderedComplex, max_dim: usize) -> Result<QuotientReport> {
    let k = s.vertex_count();
    if k > 4 || max_dim > 2 {
        return Err(Error::BoundExceeded(format!(
            "quotient oracle needs at most 4 vertices and dimension 2, got {k} and {max_dim}"
        )));
    }
    let shapes = necklaces(k.max(1));
    let mut nodes: Vec<RawTriple> = Vec::new();
    let mut index: HashMap<RawTriple, usize> = HashMap::new();
    let mut mismatches = Vec::new();
    let mut expected_total = 0;
    let mut classes_total = 0;

    for a in 0..k {
        for b in 0..k {
            let start = nodes.len();
            let all_maps: Vec<Vec<Vec<VertexId>>> = shapes.iter().map(|t| maps(s, t, a, b)).collect();
            for (t, ms) in shapes.iter().zip(&all_maps) {
                for n in 0..=max_dim {
                    for flag in flags(t, n) {
                        for m in ms {
                            let raw = RawTriple { beads: t.clone(), vertices: m.clone(), flag: flag.clone() };
                            index.insert(raw.clone(), nodes.len());
                            nodes.push(raw);
                        }
                    }
                }
            }
            let mut parent: Vec<usize> = (0..nodes.len()).collect();
            for src in &shapes {
                for (ti, tgt) in shapes.iter().enumerate() {
                    for f in morphisms(src, tgt) {
                        for g in &all_maps[ti] {
                            let h: Vec<VertexId> = f.iter().map(|&v| g[v]).collect();
                            for n in 0..=max_dim {
                                for flag in flags(src, n) {
                                    let x = RawTriple { beads: src.clone(), vertices: h.clone(), flag: flag.clone() };
                                    let pushed = flag.iter().map(|&set| push_forward(&f, set)).collect();
                                    let y = RawTriple { beads: tgt.clone(), vertices: g.clone(), flag: pushed };
                                    let (Some(&xi), Some(&yi)) = (index.get(&x), index.get(&y)) else {
                                        mismatches.push(format!("relation leaves the triple set: {x:?} ~ {y:?}"));
                                        continue;
                                    };
                                    let (rx, ry) = (find(&mut parent, xi), find(&mut parent, yi));
                                    parent[rx] = ry;
                                }
                            }
                        }
                    }
                }
            }

            let mut canonical_of: HashMap<usize, Vec<usize>> = HashMap::new();
            for i in start..nodes.len() {
                let root = find(&mut parent, i);
                let entry = canonical_of.entry(root).or_default();
                if is_canonical(&nodes[i]) {
                    entry.push(i);
                }
            }
            classes_total += canonical_of.len();
            let mut found = BTreeSet::new();
            for members in canonical_of.values() {
                if members.len() != 1 {
                    let shown: Vec<&RawTriple> = members.iter().map(|&i| &nodes[i]).collect();
                    mismatches.push(format!("({a},{b}): class with {} canonical members {shown:?}", members.len()));
                }
                found.extend(members.iter().map(|&i| nodes[i].clone()));
            }

            let space = mapping_space(s, a, b)?;
            let expected: BTreeSet<RawTriple> =
                (0..=max_dim).flat_map(|n| space.all_simplices(n)).map(|m| RawTriple::from(&m)).collect();
            expected_total += expected.len();
            for missing in expected.difference(&found) {
                mismatches.push(format!("({a},{b}): mapping space simplex {missing:?} has no class"));
            }
            for extra in found.difference(&expected) {
                mismatches.push(format!("({a},{b}): class representative {extra:?} is not in the mapping space"));
            }
        }
    }
    Ok(QuotientReport { triples: nodes.len(), classes: classes_total, expected: expected_total, mismatches })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::standard;

    #[test]
    fn counts_of_small_pieces() {
        assert_eq!(necklaces(3), vec![vec![0], vec![1], vec![1, 1], vec![2]]);
        assert_eq!(flags(&[2], 1).len(), 3);
        assert_eq!(morphisms(&[1, 1], &[2]), vec![vec![0, 0, 2], vec![0, 1, 2], vec![0, 2, 2]]);
        assert_eq!(morphisms(&[2], &[1, 1]), Vec::<Vec<usize>>::new());
        assert_eq!(morphisms(&[2], &[1]).len(), 2);
    }

    #[test]
    fn interval_and_triangle() {
        for n in 1..=2 {
            let r = quotient_check(&OrderedComplex::simplex(n), 2).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn two_triangles() {
        let s = standard("two_triangles", &[]).unwrap();
        let r = quotient_check(s.as_ordered().unwrap(), 1).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.triples > r.classes);
    }
}
