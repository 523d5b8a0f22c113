use necklace_core::complex::{OrderedComplex, SimplicialSet};
use necklace_core::homotopy::homology;
use necklace_core::oracle::{quotient_check, zigzag_check};
use necklace_core::rigid::{compose, mapping_space};
use proptest::prelude::*;

/// Random ordered complexes on `n` vertices: each maximal chain is a random
/// subset of `0..n` read in increasing order.
fn ordered_complex(n: usize) -> impl Strategy<Value = OrderedComplex> {
    proptest::collection::vec(1u64..(1 << n), 1..4).prop_map(move |masks| {
        let chains: Vec<Vec<usize>> = masks.iter().map(|m| (0..n).filter(|v| m & 1 << v != 0).collect()).collect();
        OrderedComplex::with_vertex_count(n, &chains).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn quotient_matches_enumeration(s in ordered_complex(4)) {
        let r = quotient_check(&s, 1).unwrap();
        prop_assert!(r.passed(), "{:?}", r.mismatches.first());
    }

    #[test]
    fn zigzags_keep_canonical_form(seed in any::<u64>()) {
        let r = zigzag_check(&OrderedComplex::simplex(3), seed, 40, 4).unwrap();
        prop_assert!(r.failures.is_empty(), "{:?}", r.failures.first());
    }

    #[test]
    fn euler_characteristic(s in ordered_complex(5)) {
        let top = s.max_dim().unwrap();
        let h = homology(&s, top).unwrap();
        let chi_f: i64 = s.f_vector().iter().enumerate().map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) }).sum();
        let chi_h: i64 = h.betti().iter().enumerate().map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
        prop_assert_eq!(chi_f, chi_h);
    }

    #[test]
    fn mapping_space_faces_commute(s in ordered_complex(5), a in 0usize..5, b in 0usize..5) {
        let sp = mapping_space(&s, a, b).unwrap();
        for n in 2..sp.f_vector().len() {
            for m in sp.simplices(n) {
                for j in 1..=n {
                    for i in 0..j {
                        let lhs = m.face(&s, j).unwrap().face(&s, i).unwrap();
                        let rhs = m.face(&s, i).unwrap().face(&s, j - 1).unwrap();
                        prop_assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn composition_is_associative(s in ordered_complex(5), dim in 0usize..3) {
        let n = s.vertex_count();
        for a in 0..n {
            for b in a..n {
                for c in b..n {
                    for d in c..n {
                        let (f, g, h) = (mapping_space(&s, a, b).unwrap(), mapping_space(&s, b, c).unwrap(), mapping_space(&s, c, d).unwrap());
                        let (fs, gs, hs) = (f.all_simplices(dim), g.all_simplices(dim), h.all_simplices(dim));
                        for x in fs.iter().take(3) {
                            for y in gs.iter().take(3) {
                                for z in hs.iter().take(3) {
                                    let left = compose(&s, z, &compose(&s, y, x).unwrap()).unwrap();
                                    let right = compose(&s, &compose(&s, z, y).unwrap(), x).unwrap();
                                    prop_assert_eq!(left, right);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}
