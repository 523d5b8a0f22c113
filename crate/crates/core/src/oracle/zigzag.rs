use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complex::{OrderedComplex, SimplicialSet, VertexId};
use crate::error::Result;
use crate::necklace::{Necklace, NecklaceMap};
use crate::rigid::{mapping_space, FlaggedTriple, MappingSimplex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZigZagReport {
    pub zigzags: usize,
    pub triples: usize,
    pub failures: Vec<String>,
}

/// A triple as bead dimensions, vertex images and the flag level at which
/// each necklace vertex enters (`None`: not in the top set).
#[derive(Debug, Clone)]
struct Raw {
    beads: Vec<usize>,
    verts: Vec<VertexId>,
    level: Vec<Option<usize>>,
    n: usize,
}

impl Raw {
    fn from_simplex(m: &MappingSimplex) -> Self {
        let flag = m.flag();
        let level = (0..m.map().vertices().len()).map(|v| flag.iter().position(|s| s.contains(v))).collect();
        Self {
            beads: m.map().necklace().beads().to_vec(),
            verts: m.map().vertices().to_vec(),
            level,
            n: m.dim(),
        }
    }

    fn is_point(&self) -> bool {
        self.beads == [0]
    }

    fn range(&self, i: usize) -> (usize, usize) {
        let lo: usize = self.beads[..i].iter().sum();
        (lo, lo + self.beads[i])
    }

    fn is_joint(&self, v: usize) -> bool {
        let mut acc = 0;
        v == 0 || self.beads.iter().any(|&b| {
            acc += b;
            acc == v
        })
    }

    fn to_triple(&self, s: &OrderedComplex) -> Result<FlaggedTriple> {
        let map = NecklaceMap::from_vertices(s, Necklace::new(self.beads.clone())?, self.verts.clone())?;
        let flag = (0..=self.n)
            .map(|i| self.level.iter().enumerate().filter(|(_, l)| l.is_some_and(|l| l <= i)).map(|(v, _)| v).collect())
            .collect();
        FlaggedTriple::new(map, flag)
    }
}

fn level_at_least(rng: &mut ChaCha8Rng, e: Option<usize>, n: usize) -> Option<usize> {
    let e = e?;
    let pick = rng.gen_range(e..=n + 1);
    (pick <= n).then_some(pick)
}

/// Surjection up: repeat a vertex inside a bead. The copies keep the old
/// entry level between them, joints staying at level 0.
fn inflate(r: &Raw, rng: &mut ChaCha8Rng) -> Option<Raw> {
    if r.is_point() {
        return None;
    }
    let i = rng.gen_range(0..r.beads.len());
    let (lo, hi) = r.range(i);
    let v = rng.gen_range(lo..=hi);
    let mut u = r.clone();
    let e = r.level[v];
    u.verts.insert(v + 1, r.verts[v]);
    u.beads[i] += 1;
    let other = level_at_least(rng, e, r.n);
    let (first, second) = if v == hi {
        (other, e)
    } else if v == lo || rng.gen_bool(0.5) {
        (e, other)
    } else {
        (other, e)
    };
    u.level[v] = first;
    u.level.insert(v + 1, second);
    Some(u)
}

/// Surjection up: a new bead at a joint, sent constantly to its image.
fn insert_collapsed_bead(r: &Raw, rng: &mut ChaCha8Rng) -> Option<Raw> {
    let k = rng.gen_range(1..=2);
    let joints: Vec<usize> = (0..r.verts.len()).filter(|&v| r.is_joint(v)).collect();
    let j = *joints.choose(rng)?;
    let mut u = r.clone();
    if r.is_point() {
        u.beads = vec![k];
    } else {
        let at = r.beads.iter().scan(0, |acc, &b| {
            *acc += b;
            Some(*acc)
        });
        let pos = at.take_while(|&end| end <= j).count();
        u.beads.insert(pos, k);
    }
    for step in 1..=k {
        u.verts.insert(j + step, r.verts[j]);
        let l = if step == k { Some(0) } else { level_at_least(rng, Some(0), r.n) };
        u.level.insert(j + step, l);
    }
    Some(u)
}

/// Inclusion up: split a bead at an interior vertex of the first flag set.
fn split(r: &Raw, rng: &mut ChaCha8Rng) -> Option<Raw> {
    let cands: Vec<usize> = (0..r.verts.len()).filter(|&v| !r.is_joint(v) && r.level[v] == Some(0)).collect();
    let v = *cands.choose(rng)?;
    let i = (0..r.beads.len()).find(|&i| r.range(i).1 > v)?;
    let (lo, hi) = r.range(i);
    let mut u = r.clone();
    u.beads[i] = v - lo;
    u.beads.insert(i + 1, hi - v);
    Some(u)
}

/// Inclusion up: an extra interior vertex outside the flag.
fn insert_free_vertex(r: &Raw, s: &OrderedComplex, rng: &mut ChaCha8Rng) -> Option<Raw> {
    if r.is_point() {
        return None;
    }
    let i = rng.gen_range(0..r.beads.len());
    let (lo, hi) = r.range(i);
    let p = rng.gen_range(lo..hi);
    let mut seq = r.verts[lo..=hi].to_vec();
    let fits: Vec<VertexId> = (0..s.vertex_count())
        .filter(|&w| {
            seq.insert(p - lo + 1, w);
            let ok = s.key_of_sequence(&seq).is_some();
            seq.remove(p - lo + 1);
            ok
        })
        .collect();
    let w = *fits.choose(rng)?;
    let mut u = r.clone();
    u.verts.insert(p + 1, w);
    u.level.insert(p + 1, None);
    u.beads[i] += 1;
    Some(u)
}

/// Surjection down: identify two equal neighbouring vertices.
fn collapse_pair(r: &Raw, rng: &mut ChaCha8Rng) -> Option<Raw> {
    let cands: Vec<usize> = (0..r.verts.len().saturating_sub(1)).filter(|&w| r.verts[w] == r.verts[w + 1]).collect();
    let w = *cands.choose(rng)?;
    let i = (0..r.beads.len()).find(|&i| r.range(i).1 > w)?;
    let (lo, hi) = r.range(i);
    let merged = match (r.level[w], r.level[w + 1]) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    };
    let mut u = r.clone();
    let keep = if w + 1 == hi && w != lo { w + 1 } else { w };
    let drop = if keep == w { w + 1 } else { w };
    u.level[keep] = merged;
    u.verts.remove(drop);
    u.level.remove(drop);
    if r.beads[i] == 1 {
        u.beads.remove(i);
        if u.beads.is_empty() {
            u.beads.push(0);
        }
    } else {
        u.beads[i] -= 1;
    }
    Some(u)
}

/// Inclusion down: drop a vertex outside the flag.
fn drop_free_vertex(r: &Raw, rng: &mut ChaCha8Rng) -> Option<Raw> {
    let cands: Vec<usize> = (0..r.verts.len()).filter(|&v| r.level[v].is_none()).collect();
    let v = *cands.choose(rng)?;
    let i = (0..r.beads.len()).find(|&i| r.range(i).1 > v)?;
    let mut u = r.clone();
    u.verts.remove(v);
    u.level.remove(v);
    u.beads[i] -= 1;
    Some(u)
}

/// Inclusion down: merge two beads when their union is a simplex.
fn merge(r: &Raw, s: &OrderedComplex, rng: &mut ChaCha8Rng) -> Option<Raw> {
    let cands: Vec<usize> = (0..r.beads.len().saturating_sub(1))
        .filter(|&i| {
            let (lo, _) = r.range(i);
            let (_, hi) = r.range(i + 1);
            s.key_of_sequence(&r.verts[lo..=hi]).is_some()
        })
        .collect();
    let i = *cands.choose(rng)?;
    let mut u = r.clone();
    let next = u.beads.remove(i + 1);
    u.beads[i] += next;
    Some(u)
}

fn step(r: &Raw, s: &OrderedComplex, rng: &mut ChaCha8Rng) -> Option<Raw> {
    for _ in 0..8 {
        let next = match rng.gen_range(0..7) {
            0 => inflate(r, rng),
            1 => insert_collapsed_bead(r, rng),
            2 => split(r, rng),
            3 => insert_free_vertex(r, s, rng),
            4 => collapse_pair(r, rng),
            5 => drop_free_vertex(r, rng),
            _ => merge(r, s, rng),
        };
        if next.is_some() {
            return next;
        }
    }
    None
}

/// Starts from random simplices of `𝔠(s)` and walks random zig-zags of
/// necklace maps of length `<= max_len`. Every triple met must canonicalize
/// back to the start, and canonicalizing twice changes nothing. Runs until
/// at least `min_triples` triples have been checked.
pub fn zigzag_check(s: &OrderedComplex, seed: u64, min_triples: usize, max_len: usize) -> Result<ZigZagReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = s.vertex_count();
    let mut pool: Vec<MappingSimplex> = Vec::new();
    for a in 0..k {
        for b in 0..k {
            let space = mapping_space(s, a, b)?;
            for n in 0..=3 {
                pool.extend(space.all_simplices(n));
            }
        }
    }
    let mut report = ZigZagReport { zigzags: 0, triples: 0, failures: Vec::new() };
    if pool.is_empty() {
        return Ok(report);
    }
    while report.triples < min_triples {
        let start = pool.choose(&mut rng).unwrap();
        let mut current = Raw::from_simplex(start);
        report.zigzags += 1;
        for _ in 0..=max_len {
            let triple = current.to_triple(s)?;
            report.triples += 1;
            let canon = triple.canonicalize(s)?;
            if &canon != start {
                report.failures.push(format!("{triple:?} canonicalizes to {canon}, expected {start}"));
            } else if canon.to_triple().canonicalize(s)? != canon {
                report.failures.push(format!("canonicalize is not idempotent on {canon}"));
            }
            match step(&current, s, &mut rng) {
                Some(next) => current = next,
                None => break,
            }
        }
    }
    Ok(report)
}
