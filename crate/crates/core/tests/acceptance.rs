//! One line per acceptance criterion; exits nonzero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use necklace_core::complex::{is_ordered, is_simple_inclusion, product, standard, OrderedComplex, SimplicialSet, Subcomplex};
use necklace_core::homotopy::{chain_count, comonad_level, homology, inner_horn_check, is_homology_point, pi0, NerveLevels};
use necklace_core::necklace::Necklace;
use necklace_core::oracle::{boolean_chain_counts, quotient_check, zigzag_check, RawTriple};
use necklace_core::rigid::{categorify, coherent_nerve_truncated, induced_map, mapping_space, necklace_mapping_space, OrderedMap};

type Outcome = Result<(), String>;

fn ordered(name: &str, params: &[usize]) -> OrderedComplex {
    standard(name, params).unwrap().as_ordered().unwrap().clone()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn two_triangles_space() -> Outcome {
    let s = ordered("two_triangles", &[]);
    let sp = mapping_space(&s, 0, 3).map_err(|e| e.to_string())?;
    ensure(sp.f_vector() == [3, 2], || format!("f-vector {:?}", sp.f_vector()))?;
    let ends: BTreeSet<_> = sp.simplices(1).iter().map(|e| e.face(&s, 0).unwrap()).collect();
    ensure(ends.len() == 1, || "edges do not share their final vertex".into())?;
    let end = ends.into_iter().next().unwrap();
    ensure(end.map().necklace().beads() == [1, 1, 1] && end.map().vertices() == [0, 1, 2, 3], || format!("final vertex {end}"))
}

/// Strict chains in the Boolean lattice on N elements, N = 0..=4.
const BOOLEAN_CHAINS: [&[usize]; 5] = [&[1], &[2, 1], &[4, 5, 2], &[8, 19, 18, 6], &[16, 65, 110, 84, 24]];

fn necklaces(max_vertices: usize) -> Vec<Necklace> {
    let mut out = vec![Necklace::point()];
    let mut frontier = vec![Vec::<usize>::new()];
    while let Some(prefix) = frontier.pop() {
        let used: usize = prefix.iter().sum();
        for part in 1..max_vertices - used {
            let mut next = prefix.clone();
            next.push(part);
            out.push(Necklace::new(next.clone()).unwrap());
            frontier.push(next);
        }
    }
    out
}

fn necklace_cubes() -> Outcome {
    for (m, frozen) in BOOLEAN_CHAINS.iter().enumerate() {
        let counted = boolean_chain_counts(m).map_err(|e| e.to_string())?;
        ensure(counted == *frozen, || format!("Boolean chains on {m} elements: {counted:?}"))?;
    }
    let ts = necklaces(6);
    ensure(ts.len() == 32, || format!("{} necklaces", ts.len()))?;
    for t in ts {
        let s = t.to_complex();
        for a in 0..t.vertex_count() {
            for b in a..t.vertex_count() {
                let free = t.vertices_between(a, b).difference(t.joints_between(a, b)).len();
                let want = BOOLEAN_CHAINS[free];
                let cube = necklace_mapping_space(&t, a, b).map_err(|e| e.to_string())?;
                let sp = mapping_space(&s, a, b).map_err(|e| e.to_string())?;
                let tag = format!("{:?} ({a},{b})", t.beads());
                ensure(cube.f_vector() == want, || format!("{tag}: cube {:?}", cube.f_vector()))?;
                ensure(sp.f_vector() == want, || format!("{tag}: mapping space {:?}", sp.f_vector()))?;
                ensure(is_homology_point(sp.complex()).unwrap(), || format!("{tag}: not a homology point"))?;
            }
        }
    }
    Ok(())
}

fn boundaries_and_horns() -> Outcome {
    for n in 2..=4 {
        let (full, bd) = (OrderedComplex::simplex(n), ordered("boundary", &[n]));
        for i in 0..=n {
            for j in 0..=n {
                if (i, j) == (0, n) {
                    continue;
                }
                let (x, y) = (mapping_space(&full, i, j).unwrap(), mapping_space(&bd, i, j).unwrap());
                ensure(x.f_vector() == y.f_vector(), || format!("n={n} ({i},{j}) f-vectors differ"))?;
                for d in 0..x.f_vector().len() {
                    let xs: BTreeSet<RawTriple> = x.simplices(d).iter().map(RawTriple::from).collect();
                    let ys: BTreeSet<RawTriple> = y.simplices(d).iter().map(RawTriple::from).collect();
                    ensure(xs == ys, || format!("n={n} ({i},{j}) differs in dimension {d}"))?;
                }
            }
        }
    }
    for (n, betti) in [(3, vec![1, 1]), (4, vec![1, 0, 1])] {
        let sp = mapping_space(&ordered("boundary", &[n]), 0, n).unwrap();
        let h = homology(sp.complex(), n - 2).unwrap();
        ensure(h.betti() == betti && h.is_torsion_free(), || format!("boundary n={n}: {h:?}"))?;
    }
    for n in 2..=4 {
        for k in 1..n {
            let sp = mapping_space(&ordered("horn", &[n, k]), 0, n).unwrap();
            ensure(is_homology_point(sp.complex()).unwrap(), || format!("horn ({n},{k}) not a homology point"))?;
        }
    }
    Ok(())
}

fn comonad() -> Outcome {
    for n in 0..=3 {
        for l in 0..=2 {
            for i in 0..=n {
                for j in i..=n {
                    let got = comonad_level(n, l, i, j).unwrap().count as u64;
                    let want = if i == j { 1 } else { (l as u64 + 2).pow((j - i - 1) as u32) };
                    ensure(got == want && (i == j || chain_count(j - i - 1, l) == want), || {
                        format!("n={n} l={l} ({i},{j}): {got} vs {want}")
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn canonical_form() -> Outcome {
    let mut total = 0;
    for (seed, s) in [(1, ordered("two_triangles", &[])), (2, OrderedComplex::simplex(4))] {
        let r = zigzag_check(&s, seed, 600, 4).map_err(|e| e.to_string())?;
        ensure(r.failures.is_empty(), || r.failures[0].clone())?;
        total += r.triples;
    }
    ensure(total >= 1000, || format!("only {total} triples"))
}

fn quotient() -> Outcome {
    // Class counts across all endpoint pairs, flags of length <= 3.
    let cases = [
        ("simplex 3", OrderedComplex::simplex(3), Some(68)),
        ("boundary 3", ordered("boundary", &[3]), Some(63)),
        ("horn 3:1", ordered("horn", &[3, 1]), Some(60)),
        ("two_triangles", ordered("two_triangles", &[]), Some(54)),
        ("horn 3:2", ordered("horn", &[3, 2]), None),
        ("square", ordered("prism", &[1, 1]), None),
        ("simplex 2", OrderedComplex::simplex(2), None),
    ];
    for (name, s, classes) in cases {
        let r = quotient_check(&s, 2).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{name}: {:?}", r.mismatches.first()))?;
        if let Some(c) = classes {
            ensure(r.classes == c, || format!("{name}: {} classes", r.classes))?;
        }
    }
    Ok(())
}

fn laws() -> Outcome {
    for s in [ordered("two_triangles", &[]), OrderedComplex::simplex(4)] {
        let v = categorify(&s).unwrap().check_laws().unwrap();
        ensure(v.is_empty(), || v[0].to_string())?;
    }
    Ok(())
}

fn products() -> Outcome {
    let e = OrderedComplex::simplex(1);
    for (x, y) in [(e.clone(), e.clone()), (OrderedComplex::simplex(2), e.clone()), (product(&e, &e).complex, e.clone())] {
        let p = product(&x, &y);
        let (px, py) = (OrderedMap::new(&p.complex, &x, p.left.clone()).unwrap(), OrderedMap::new(&p.complex, &y, p.right.clone()).unwrap());
        for a in 0..p.complex.vertex_count() {
            for b in 0..p.complex.vertex_count() {
                if !p.complex.order().leq(a, b) {
                    continue;
                }
                let sp = mapping_space(&p.complex, a, b).unwrap();
                ensure(is_homology_point(sp.complex()).unwrap(), || format!("({a},{b}) not a homology point"))?;
                let (sx, sy) = (mapping_space(&x, p.left[a], p.left[b]).unwrap(), mapping_space(&y, p.right[a], p.right[b]).unwrap());
                ensure(pi0(sx.complex()).len() == 1 && pi0(sy.complex()).len() == 1, || "disconnected factor".into())?;
                for m in sp.simplices(0) {
                    let ok = sx.key_of(&induced_map(&px, &x, m).unwrap()).is_some() && sy.key_of(&induced_map(&py, &y, m).unwrap()).is_some();
                    ensure(ok, || format!("projection of {m} leaves the factor space"))?;
                }
            }
        }
    }
    Ok(())
}

fn simple_inclusions() -> Outcome {
    let sq = ordered("prism", &[1, 1]);
    let edges = sq.simplices(1).to_vec();
    let simple = edges
        .iter()
        .filter(|e| is_simple_inclusion(&Subcomplex::from_chains(&sq, std::slice::from_ref(*e)).unwrap(), &sq).holds())
        .count();
    ensure(edges.len() == 5 && simple == 4, || format!("{simple} of {} edges simple", edges.len()))?;
    ensure(!is_ordered(&standard("loop", &[]).unwrap()).holds(), || "loop reported ordered".into())
}

fn coherent_nerve() -> Outcome {
    let levels = coherent_nerve_truncated(&categorify(&OrderedComplex::simplex(1)).unwrap(), 3).unwrap();
    let sizes: Vec<usize> = levels.iter().map(|l| l.functors.len()).collect();
    ensure(sizes == [2, 3, 4, 5], || format!("levels {sizes:?}"))?;
    let r = inner_horn_check(&NerveLevels(&levels), 3).unwrap();
    ensure(r.failures.is_empty(), || format!("{} unfillable horns", r.failures.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("two triangles mapping space", two_triangles_space),
        ("necklace mapping spaces are cubes", necklace_cubes),
        ("boundary and horn mapping spaces", boundaries_and_horns),
        ("comonad levels count chains", comonad),
        ("canonical form under zig-zags", canonical_form),
        ("quotient oracle", quotient),
        ("simplicial category laws", laws),
        ("products of simplices", products),
        ("simple inclusion census", simple_inclusions),
        ("coherent nerve of the interval", coherent_nerve),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({ms} ms): {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
