use super::*;
use crate::partition::{enumerate_biweights, partitions};

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

fn bw(s: &str) -> BiWeight {
    s.parse().unwrap()
}

/// Forget the monomial structure so homs are found by the dense solver.
fn densify(m: &ModuleRep) -> ModuleRep {
    ModuleRep::new(m.p(), m.degree(), m.dim(), m.gens().to_vec(), None).unwrap()
}

#[test]
fn tensor_space_signs() {
    let v = tensor_space(1, 1, 2, 3).unwrap();
    assert_eq!(v.dim(), 4);
    // v2⊗v2 is word (1,1) = index 3; v1⊗v2 is index 1, v2⊗v1 index 2
    assert_eq!(v.gens()[0].row(3), &[0, 0, 0, 2]);
    assert_eq!(v.gens()[0].row(1), &[0, 0, 1, 0]);
    v.check().unwrap();
    assert_eq!(v.grading().unwrap(), &[0, 1, 1, 0]);
}

#[test]
fn tensor_space_at_two_is_unsigned() {
    let v = tensor_space(1, 2, 3, 2).unwrap();
    let u = tensor_space(3, 0, 3, 2).unwrap();
    assert_eq!(v.gens(), u.gens());
}

#[test]
fn relations_hold_for_constructions() {
    for p in [3u32, 5] {
        tensor_space(2, 1, 4, p).unwrap().check().unwrap();
        for w in enumerate_biweights(2, 2, 4) {
            signed_perm_module(&w, p).unwrap().check().unwrap();
        }
        for l in partitions(5) {
            specht_module(&l, p).unwrap().check().unwrap();
        }
    }
}

#[test]
fn signed_perm_dims() {
    assert_eq!(signed_perm_module(&bw("2,1|1"), 3).unwrap().dim(), 12);
    let t = signed_perm_module(&bw("4|-"), 3).unwrap();
    assert_eq!(t.dim(), 1);
    assert!(t.gens().iter().all(|g| g.get(0, 0) == 1));
    assert_eq!(signed_perm_module(&bw("2,0|3"), 3).unwrap().grading().unwrap()[0], 1);
    for (m, n, d) in [(1, 1, 3), (2, 1, 4), (1, 2, 3), (2, 2, 3)] {
        let total: usize = enumerate_biweights(m, n, d).iter().map(|w| signed_perm_module(w, 3).unwrap().dim()).sum();
        assert_eq!(total, (m + n).pow(d as u32));
    }
}

#[test]
fn specht_dims_follow_hook_formula() {
    assert_eq!(specht_module(&part("3"), 3).unwrap().dim(), 1);
    assert_eq!(specht_module(&part("2,1"), 3).unwrap().dim(), 2);
    assert_eq!(specht_module(&part("3,1,1"), 3).unwrap().dim(), 6);
    for n in 1..=6 {
        for l in partitions(n) {
            assert_eq!(specht_module(&l, 5).unwrap().dim() as u128, l.hook_dimension(), "{l}");
        }
    }
}

#[test]
fn simple_module_dims() {
    assert_eq!(simple_module(&part("4"), 3).unwrap().dim(), 1);
    assert_eq!(simple_module(&part("2,1"), 3).unwrap().dim(), 1);
    assert_eq!(simple_module(&part("2,1"), 5).unwrap().dim(), 2);
    assert_eq!(specht_gram(&part("2,1"), 3).unwrap().rank(), 1);
    assert!(matches!(simple_module(&part("1,1,1"), 3), Err(Error::NotPRegular(..))));
    // known dims of the simples of Σ_5 at p = 3
    let dims: Vec<usize> = ["5", "4,1", "3,2", "3,1,1", "2,2,1"]
        .iter()
        .map(|s| simple_module(&part(s), 3).unwrap().dim())
        .collect();
    assert_eq!(dims, vec![1, 4, 1, 6, 4]);
}

#[test]
fn tensor_sign_examples() {
    let t = trivial_module(3, 5).unwrap();
    let s = tensor_sign(&t);
    assert!(s.gens().iter().all(|g| g.get(0, 0) == 4));
    assert_eq!(tensor_sign(&s).gens(), t.gens());
    let sp = specht_module(&part("2,1"), 5).unwrap();
    assert!(is_isomorphic(&tensor_sign(&sp), &sp, 0).unwrap());
}

#[test]
fn hom_examples() {
    let m = signed_perm_module(&bw("3|-"), 3).unwrap();
    assert_eq!(hom_space(&m, &m).unwrap().dim(), 1);
    let m = signed_perm_module(&bw("1,1|-"), 3).unwrap();
    assert_eq!(hom_space(&m, &m).unwrap().dim(), 2);
    let t = trivial_module(3, 3).unwrap();
    assert_eq!(hom_space(&t, &sign_module(3, 3).unwrap()).unwrap().dim(), 0);
    let other = trivial_module(2, 3).unwrap();
    assert!(matches!(hom_space(&t, &other), Err(Error::DegreeMismatch(3, 2))));
    let other = trivial_module(3, 5).unwrap();
    assert!(matches!(hom_space(&t, &other), Err(Error::FieldMismatch(3, 5))));
}

#[test]
fn orbit_homs_match_dense_solver() {
    let ws = enumerate_biweights(2, 1, 3);
    for p in [3u32, 5] {
        for a in &ws {
            for b in &ws {
                let ma = signed_perm_module(a, p).unwrap();
                let mb = signed_perm_module(b, p).unwrap();
                let h = hom_space(&ma, &mb).unwrap();
                for x in &h.basis {
                    assert!(HomSpace::is_intertwiner(&ma, &mb, x));
                }
                let dense = hom_space(&densify(&ma), &densify(&mb)).unwrap();
                assert_eq!(h.dim(), dense.dim(), "{a} -> {b} at p={p}");
            }
        }
    }
}

#[test]
fn hom_dims_independent_of_odd_prime() {
    for d in 2..=5 {
        let ws = enumerate_biweights(1, 1, d);
        for a in &ws {
            for b in &ws {
                let dims: Vec<usize> = [3u32, 5, 7]
                    .iter()
                    .map(|&p| {
                        hom_space(&signed_perm_module(a, p).unwrap(), &signed_perm_module(b, p).unwrap()).unwrap().dim()
                    })
                    .collect();
                assert!(dims.windows(2).all(|w| w[0] == w[1]), "{a} {b}: {dims:?}");
            }
        }
    }
}

#[test]
fn decompose_examples() {
    let dec = decompose(&signed_perm_module(&bw("1,1|-"), 3).unwrap(), 0).unwrap();
    assert_eq!(dec.signature(), vec![(1, 1), (1, 1)]);
    let dec = decompose(&signed_perm_module(&bw("2,1|-"), 3).unwrap(), 0).unwrap();
    assert_eq!(dec.signature(), vec![(3, 1)]);
    assert_eq!(dec.summands[0].end_dim, 2);
    let dec = decompose(&signed_perm_module(&bw("2,0|3"), 3).unwrap(), 0).unwrap();
    assert_eq!(dec.signature(), vec![(4, 1), (6, 1)]);
    assert!(dec.summands.iter().all(|s| s.end_dim == 1));
}

#[test]
fn decompose_invariants() {
    for w in ["1,1,1|-", "2,1|1", "1,1|1,1", "3|2"] {
        let m = signed_perm_module(&bw(w), 3).unwrap();
        let a = decompose(&m, 0).unwrap();
        let total: usize = a.summands.iter().map(|s| s.multiplicity * s.module.dim()).sum();
        assert_eq!(total, m.dim());
        for s in &a.summands {
            s.module.check().unwrap();
        }
        for seed in [1u64, 17, 99] {
            assert_eq!(decompose(&m, seed).unwrap().signature(), a.signature(), "{w}");
        }
    }
}

#[test]
fn semisimple_range_regular_module() {
    // M^{(1^3)} is the regular module; at p = 5 multiplicities are f^λ
    let dec = decompose(&perm_module(&part("1,1,1"), 5).unwrap(), 3).unwrap();
    assert_eq!(dec.signature(), vec![(1, 1), (1, 1), (2, 2)]);
    for l in partitions(4) {
        let s = specht_module(&l, 7).unwrap();
        let d = decompose(&s, 0).unwrap();
        assert_eq!(d.summands.len(), 1);
        assert_eq!(d.summands[0].end_dim, 1);
    }
}

#[test]
fn isomorphism_examples() {
    let m = signed_perm_module(&bw("2,1|1"), 3).unwrap();
    assert!(is_isomorphic(&m, &m, 0).unwrap());
    assert!(!is_isomorphic(&trivial_module(3, 3).unwrap(), &sign_module(3, 3).unwrap(), 0).unwrap());
    // permuting the even part of the weight gives an isomorphic module
    let a = signed_perm_module(&bw("1,2|1"), 3).unwrap();
    assert!(is_isomorphic(&m, &a, 0).unwrap());
}

#[test]
fn sign_twist_swaps_weights() {
    for (a, b) in [("2,1|1", "1|2,1"), ("2|1", "1|2"), ("1,1|-", "-|1,1")] {
        let ma = signed_perm_module(&bw(a), 3).unwrap();
        let mb = signed_perm_module(&bw(b), 3).unwrap();
        assert!(is_isomorphic(&tensor_sign(&ma), &mb, 0).unwrap(), "{a} vs {b}");
    }
}

#[test]
fn young_module_examples() {
    assert_eq!(young_module(&part("3"), 3, 0).unwrap().dim(), 1);
    let y = young_module(&part("1,1,1"), 5, 0).unwrap();
    assert!(is_isomorphic(&y, &sign_module(3, 5).unwrap(), 0).unwrap());
    let y = young_module(&part("2,1,1"), 3, 0).unwrap();
    let dec = decompose(&signed_perm_module(&bw("2,1|1"), 3).unwrap(), 0).unwrap();
    let hits: Vec<usize> = dec
        .summands
        .iter()
        .filter(|s| decompose::indecomposables_isomorphic(&s.module, &y).unwrap())
        .map(|s| s.multiplicity)
        .collect();
    assert_eq!(hits, vec![1]);
}

#[test]
fn mullineux_matches_sign_twist_of_simples() {
    for p in [3u32, 5] {
        for n in 1..=5 {
            for l in partitions(n).into_iter().filter(|l| l.is_p_regular(p as usize)) {
                let m = l.mullineux(p).unwrap();
                let twisted = tensor_sign(&simple_module(&l, p).unwrap());
                let target = simple_module(&m, p).unwrap();
                assert!(is_isomorphic(&twisted, &target, 0).unwrap(), "p={p} λ={l} m(λ)={m}");
            }
        }
    }
}

#[test]
fn duality_examples() {
    let t = duality_intertwiner(1, 1, 2, 3).unwrap();
    // v1⊗v2 (index 1) ↦ +ṽ2⊗ṽ1 (index 2); v2⊗v1 (index 2) ↦ -ṽ1⊗ṽ2 (index 1)
    assert_eq!(t.get(1, 2), 1);
    assert_eq!(t.get(2, 1), 2);
    assert!(matches!(duality_intertwiner(1, 1, 2, 2), Err(Error::NonOddPrime(2))));
    for (m, n, d, p) in [(2, 1, 3, 3), (1, 2, 4, 5), (2, 2, 3, 3)] {
        let t = duality_intertwiner(m, n, d, p).unwrap();
        assert!(t.is_invertible());
        let v = tensor_sign(&tensor_space(m, n, d, p).unwrap());
        let w = tensor_space(n, m, d, p).unwrap();
        assert!(HomSpace::is_intertwiner(&v, &w, &t));
    }
}

#[test]
fn json_round_trip() {
    let m = signed_perm_module(&bw("2|1"), 3).unwrap();
    let back = ModuleRep::from_json(&m.to_json()).unwrap();
    assert_eq!(back, m);
}

#[test]
fn jucys_murphy_contents_on_specht() {
    // on S^λ in characteristic p > d, L_k has eigenvalues given by contents
    let s = specht_module(&part("2,1"), 5).unwrap();
    let l2 = s.jucys_murphy(2);
    let l3 = s.jucys_murphy(3);
    assert_eq!(l2.mul(&l3), l3.mul(&l2));
    let trace2 = l2.trace();
    let trace3 = l3.trace();
    // standard tableaux 12/3 and 13/2: contents (1,-1) and (-1,1)
    assert_eq!(trace2, 0);
    assert_eq!(trace3, 0);
}

#[test]
fn census_counts_pairs_of_partitions() {
    use crate::partition::partition_count;
    for (p, max_d) in [(3u32, 4usize), (5, 5)] {
        for d in 1..=max_d {
            let want: usize = (0..=d / p as usize).map(|j| partition_count(d - p as usize * j) * partition_count(j)).sum();
            assert_eq!(signed_young_census(d, p, 0).unwrap().len(), want, "d={d} p={p}");
        }
    }
    // repeated modules add nothing
    let m = signed_perm_module(&bw("2,1|1"), 3).unwrap();
    let once = distinct_summands(std::slice::from_ref(&m), 0).unwrap().len();
    assert_eq!(distinct_summands(&[m.clone(), m], 0).unwrap().len(), once);
}
