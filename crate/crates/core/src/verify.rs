//! Named verification checks behind a common trait, run by `verify`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use serde::Serialize;

use crate::complex::{
    is_ordered, is_simple_inclusion, product, standard, Complex, OrderedComplex, SimplicialSet, Subcomplex,
};
use crate::error::{Error, Result};
use crate::homotopy::{
    chain_count, chain_count_brute_force, comonad_level, homology, inner_horn_check, is_homology_point, pi0,
    NerveLevels,
};
use crate::necklace::Necklace;
use crate::oracle::{boolean_chain_counts, quotient_check, zigzag_check, RawTriple};
use crate::rigid::{categorify, coherent_nerve_truncated, induced_map, mapping_space, necklace_mapping_space, OrderedMap};

/// One verification suite.
pub trait Check: Sync {
    /// Short name used by `--only`.
    fn suite(&self) -> &'static str;
    fn description(&self) -> &'static str;
    /// Failure messages; empty when the check passes.
    fn run(&self) -> Result<Vec<String>>;
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub suite: &'static str,
    pub description: &'static str,
    pub passed: bool,
    pub failures: Vec<String>,
    pub millis: u128,
}

fn ordered(name: &str, params: &[usize]) -> Result<OrderedComplex> {
    match standard(name, params)? {
        Complex::Ordered(c) => Ok(c),
        Complex::Generated(_) => Err(Error::NotOrdered(format!("fixture {name} is not ordered"))),
    }
}

fn expect<T: PartialEq + std::fmt::Debug>(out: &mut Vec<String>, what: impl std::fmt::Display, got: T, want: T) {
    if got != want {
        out.push(format!("{what}: got {got:?}, expected {want:?}"));
    }
}

struct TwoTriangles;
impl Check for TwoTriangles {
    fn suite(&self) -> &'static str {
        "example54"
    }
    fn description(&self) -> &'static str {
        "mapping space (0,3) of two triangles: three vertices, two edges with a common final vertex"
    }
    fn run(&self) -> Result<Vec<String>> {
        let s = ordered("two_triangles", &[])?;
        let sp = mapping_space(&s, 0, 3)?;
        let mut out = Vec::new();
        expect(&mut out, "f-vector", sp.f_vector(), vec![3, 2]);
        let ends = sp.simplices(1).iter().map(|e| e.face(&s, 0)).collect::<Result<BTreeSet<_>>>()?;
        if ends.len() != 1 {
            out.push(format!("edges end at {} different vertices", ends.len()));
        } else {
            let end = ends.into_iter().next().unwrap();
            expect(&mut out, "common final vertex necklace", end.map().necklace().beads().to_vec(), vec![1, 1, 1]);
            expect(&mut out, "common final vertex image", end.map().vertices().to_vec(), vec![0, 1, 2, 3]);
        }
        Ok(out)
    }
}

/// Preferred-form necklaces with at most `max_vertices` vertices.
fn necklaces_up_to(max_vertices: usize) -> Vec<Necklace> {
    let mut out = vec![Necklace::point()];
    let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
    while let Some(prefix) = stack.pop() {
        let used: usize = prefix.iter().sum();
        for part in 1..max_vertices - used {
            let mut next = prefix.clone();
            next.push(part);
            out.push(Necklace::new(next.clone()).expect("small necklace"));
            stack.push(next);
        }
    }
    out.sort();
    out
}

struct Cube;
impl Check for Cube {
    fn suite(&self) -> &'static str {
        "cube"
    }
    fn description(&self) -> &'static str {
        "necklace mapping spaces are nerves of cubes: strict Boolean chain counts and homology points"
    }
    fn run(&self) -> Result<Vec<String>> {
        let mut out = Vec::new();
        let mut chains: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for t in necklaces_up_to(6) {
            let s = t.to_complex();
            for a in 0..t.vertex_count() {
                for b in a..t.vertex_count() {
                    let free = t.vertices_between(a, b).difference(t.joints_between(a, b)).len();
                    let want = match chains.entry(free) {
                        Entry::Occupied(e) => e.into_mut(),
                        Entry::Vacant(e) => e.insert(boolean_chain_counts(free)?),
                    };
                    let cube = necklace_mapping_space(&t, a, b)?;
                    let space = mapping_space(&s, a, b)?;
                    let tag = format!("{:?} ({a},{b})", t.beads());
                    expect(&mut out, format!("{tag} cube f-vector"), &cube.f_vector(), want);
                    expect(&mut out, format!("{tag} mapping space f-vector"), &space.f_vector(), want);
                    if !is_homology_point(&cube)? || !is_homology_point(space.complex())? {
                        out.push(format!("{tag} is not a homology point"));
                    }
                }
            }
        }
        Ok(out)
    }
}

struct Boundary;
impl Check for Boundary {
    fn suite(&self) -> &'static str {
        "boundary"
    }
    fn description(&self) -> &'static str {
        "boundaries agree with simplices off (0,n), give spheres at (0,n); inner horns give homology points"
    }
    fn run(&self) -> Result<Vec<String>> {
        let mut out = Vec::new();
        for n in 2..=4 {
            let full = OrderedComplex::simplex(n);
            let bd = ordered("boundary", &[n])?;
            for i in 0..=n {
                for j in 0..=n {
                    if (i, j) == (0, n) {
                        continue;
                    }
                    let (x, y) = (mapping_space(&full, i, j)?, mapping_space(&bd, i, j)?);
                    let top = x.f_vector().len().max(y.f_vector().len());
                    for d in 0..top {
                        let xs: BTreeSet<RawTriple> = x.simplices(d).iter().map(RawTriple::from).collect();
                        let ys: BTreeSet<RawTriple> = y.simplices(d).iter().map(RawTriple::from).collect();
                        if xs != ys {
                            out.push(format!("n={n} ({i},{j}) differs in dimension {d}"));
                        }
                    }
                }
            }
        }
        for n in 3..=4 {
            let sp = mapping_space(&ordered("boundary", &[n])?, 0, n)?;
            let mut want = vec![0; n - 1];
            want[0] += 1;
            want[n - 2] += 1;
            let h = homology(sp.complex(), n - 2)?;
            expect(&mut out, format!("boundary n={n} betti"), h.betti(), want);
            if !h.is_torsion_free() {
                out.push(format!("boundary n={n} has torsion"));
            }
        }
        for n in 2..=4 {
            for k in 1..n {
                let sp = mapping_space(&ordered("horn", &[n, k])?, 0, n)?;
                if !is_homology_point(sp.complex())? {
                    out.push(format!("horn ({n},{k}) at (0,{n}) is not a homology point"));
                }
            }
        }
        Ok(out)
    }
}

struct Comonad;
impl Check for Comonad {
    fn suite(&self) -> &'static str {
        "comonad"
    }
    fn description(&self) -> &'static str {
        "free-forgetful resolution levels of [n] count chains of subsets"
    }
    fn run(&self) -> Result<Vec<String>> {
        let mut out = Vec::new();
        for n in 0..=3 {
            for l in 0..=2 {
                for i in 0..=n {
                    for j in i..=n {
                        let got = comonad_level(n, l, i, j)?.count as u64;
                        let want = if i == j { 1 } else { chain_count(j - i - 1, l) };
                        expect(&mut out, format!("n={n} l={l} ({i},{j})"), got, want);
                        if i < j {
                            expect(&mut out, format!("brute force m={} l={l}", j - i - 1), chain_count_brute_force(j - i - 1, l)?, want);
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

pub const ZIGZAG_SEED: u64 = 0x5eed;

struct Canonical;
impl Check for Canonical {
    fn suite(&self) -> &'static str {
        "canonical"
    }
    fn description(&self) -> &'static str {
        "random zig-zags of necklace maps keep the canonical form; canonicalize is idempotent"
    }
    fn run(&self) -> Result<Vec<String>> {
        let mut out = Vec::new();
        let mut total = 0;
        for (i, s) in [ordered("two_triangles", &[])?, OrderedComplex::simplex(4)].iter().enumerate() {
            let r = zigzag_check(s, ZIGZAG_SEED + i as u64, 600, 4)?;
            total += r.triples;
            out.extend(r.failures.into_iter().take(5));
        }
        if total < 1000 {
            out.push(format!("only {total} triples checked"));
        }
        Ok(out)
    }
}

struct Quotient;
impl Check for Quotient {
    fn suite(&self) -> &'static str {
        "quotient"
    }
    fn description(&self) -> &'static str {
        "classes of raw triples under necklace maps match the enumerated mapping spaces"
    }
    fn run(&self) -> Result<Vec<String>> {
        let mut out = Vec::new();
        let inputs = [
            ("simplex 1", OrderedComplex::simplex(1)),
            ("simplex 2", OrderedComplex::simplex(2)),
            ("simplex 3", OrderedComplex::simplex(3)),
            ("boundary 3", ordered("boundary", &[3])?),
            ("horn 3:1", ordered("horn", &[3, 1])?),
            ("horn 3:2", ordered("horn", &[3, 2])?),
            ("two_triangles", ordered("two_triangles", &[])?),
            ("square", ordered("prism", &[1, 1])?),
        ];
        for (name, s) in &inputs {
            let r = quotient_check(s, 2)?;
            if !r.passed() {
                out.push(format!("{name}: {} classes, {} expected", r.classes, r.expected));
                out.extend(r.mismatches.into_iter().take(3));
            }
        }
        Ok(out)
    }
}

struct Laws;
impl Check for Laws {
    fn suite(&self) -> &'static str {
        "laws"
    }
    fn description(&self) -> &'static str {
        "composition is associative, unital and simplicial"
    }
    fn run(&self) -> Result<Vec<String>> {
        let mut out = Vec::new();
        for (name, s) in [("two_triangles", ordered("two_triangles", &[])?), ("simplex 4", OrderedComplex::simplex(4))] {
            let cat = categorify(&s)?;
            out.extend(cat.check_laws()?.into_iter().take(5).map(|v| format!("{name}: {v}")));
        }
        Ok(out)
    }
}

struct Products;
impl Check for Products {
    fn suite(&self) -> &'static str {
        "product"
    }
    fn description(&self) -> &'static str {
        "mapping spaces of products of simplices are homology points and match the factors on components"
    }
    fn run(&self) -> Result<Vec<String>> {
        let mut out = Vec::new();
        let e = OrderedComplex::simplex(1);
        let cases = [
            ("Δ¹×Δ¹", e.clone(), e.clone()),
            ("Δ²×Δ¹", OrderedComplex::simplex(2), e.clone()),
            ("Δ¹×Δ¹×Δ¹", product(&e, &e).complex, e.clone()),
        ];
        for (name, x, y) in &cases {
            let p = product(x, y);
            let px = OrderedMap::new(&p.complex, x, p.left.clone())?;
            let py = OrderedMap::new(&p.complex, y, p.right.clone())?;
            let n = p.complex.vertex_count();
            for a in 0..n {
                for b in 0..n {
                    if !p.complex.order().leq(a, b) {
                        continue;
                    }
                    let tag = format!("{name} ({a},{b})");
                    let sp = mapping_space(&p.complex, a, b)?;
                    if !is_homology_point(sp.complex())? {
                        out.push(format!("{tag} is not a homology point"));
                    }
                    let sx = mapping_space(x, p.left[a], p.left[b])?;
                    let sy = mapping_space(y, p.right[a], p.right[b])?;
                    let (cx, cy, cp) = (component_of(sx.complex()), component_of(sy.complex()), pi0(sp.complex()));
                    let mut image = BTreeSet::new();
                    for comp in &cp {
                        let m = &sp.simplices(0)[comp[0]];
                        let kx = sx.key_of(&induced_map(&px, x, m)?).ok_or_else(|| Error::InvalidSimplicialMap(format!("{tag}: projection leaves the space")))?;
                        let ky = sy.key_of(&induced_map(&py, y, m)?).ok_or_else(|| Error::InvalidSimplicialMap(format!("{tag}: projection leaves the space")))?;
                        image.insert((cx[kx.gen], cy[ky.gen]));
                    }
                    let pairs = pi0(sx.complex()).len() * pi0(sy.complex()).len();
                    if image.len() != cp.len() || image.len() != pairs {
                        out.push(format!("{tag}: {} components map onto {} of {pairs} pairs", cp.len(), image.len()));
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Component index of each vertex.
fn component_of<S: SimplicialSet + ?Sized>(s: &S) -> Vec<usize> {
    let mut out = vec![0; s.vertex_count()];
    for (c, comp) in pi0(s).iter().enumerate() {
        for &v in comp {
            out[v] = c;
        }
    }
    out
}

struct Simple;
impl Check for Simple {
    fn suite(&self) -> &'static str {
        "simple"
    }
    fn description(&self) -> &'static str {
        "four of the five edges of the square are simple inclusions; the loop is not ordered"
    }
    fn run(&self) -> Result<Vec<String>> {
        let mut out = Vec::new();
        let sq = ordered("prism", &[1, 1])?;
        let edges = sq.simplices(1).to_vec();
        let mut simple = 0;
        for edge in &edges {
            let sub = Subcomplex::from_chains(&sq, std::slice::from_ref(edge))?;
            if is_simple_inclusion(&sub, &sq).holds() {
                simple += 1;
            }
        }
        expect(&mut out, "edges", edges.len(), 5);
        expect(&mut out, "simple edges", simple, 4);
        if is_ordered(&standard("loop", &[])?).holds() {
            out.push("the loop is reported ordered".into());
        }
        Ok(out)
    }
}

struct Nerve;
impl Check for Nerve {
    fn suite(&self) -> &'static str {
        "nerve"
    }
    fn description(&self) -> &'static str {
        "truncated coherent nerve of the interval is the nerve of [1] and fills its inner horns"
    }
    fn run(&self) -> Result<Vec<String>> {
        let mut out = Vec::new();
        let cat = categorify(&OrderedComplex::simplex(1))?;
        let levels = coherent_nerve_truncated(&cat, 3)?;
        expect(&mut out, "level sizes", levels.iter().map(|l| l.functors.len()).collect(), vec![2, 3, 4, 5]);
        let report = inner_horn_check(&NerveLevels(&levels), 3)?;
        expect(&mut out, "horn failures", report.failures.len(), 0);
        Ok(out)
    }
}

static CHECKS: &[&dyn Check] =
    &[&TwoTriangles, &Cube, &Boundary, &Comonad, &Canonical, &Quotient, &Laws, &Products, &Simple, &Nerve];

pub fn checks() -> &'static [&'static dyn Check] {
    CHECKS
}

/// Runs every check, or only the suite named by `only`.
pub fn run(only: Option<&str>) -> Result<Vec<CheckResult>> {
    if let Some(name) = only {
        if !CHECKS.iter().any(|c| c.suite() == name) {
            return Err(Error::UnknownSuite(name.to_string()));
        }
    }
    let mut results = Vec::new();
    for check in CHECKS.iter().filter(|c| only.is_none_or(|n| c.suite() == n)) {
        let start = Instant::now();
        let failures = check.run()?;
        results.push(CheckResult {
            suite: check.suite(),
            description: check.description(),
            passed: failures.is_empty(),
            failures,
            millis: start.elapsed().as_millis(),
        });
    }
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_are_unique() {
        let names: BTreeSet<_> = checks().iter().map(|c| c.suite()).collect();
        assert_eq!(names.len(), checks().len());
        assert!(matches!(run(Some("nope")), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn necklace_listing() {
        assert_eq!(necklaces_up_to(3).len(), 4);
        assert_eq!(necklaces_up_to(6).len(), 32);
    }

    #[test]
    fn quick_suites_pass() {
        for name in ["example54", "comonad", "simple", "nerve"] {
            let r = run(Some(name)).unwrap();
            assert!(r[0].passed, "{name}: {:?}", r[0].failures);
        }
    }
}
