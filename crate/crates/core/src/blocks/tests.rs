use super::*;
use crate::partition::p_core;
use crate::symmod::{hom_space, young_module};

fn p_of(parts: &[usize]) -> Partition {
    Partition::from_unsorted(parts.to_vec())
}

fn label(l: &[usize], mu: &[usize], p: u32) -> SignedYoungLabel {
    SignedYoungLabel::new(p_of(l), p_of(mu), p)
}

/// Labels of degree `d` whose shapes fit `(m|n)`.
fn fitting_labels(m: usize, n: usize, d: usize, p: u32) -> Vec<SignedYoungLabel> {
    let pu = p as usize;
    let mut out = Vec::new();
    for j in 0..=d / pu {
        for mu in partitions(j).into_iter().filter(|x| x.len() <= n) {
            for lambda in partitions(d - pu * j).into_iter().filter(|x| x.len() <= m) {
                out.push(SignedYoungLabel::new(lambda, mu.clone(), p));
            }
        }
    }
    out
}

/// Brute force over `Σ_m`: `λ_i − i ≡ ν_{σ(i)} − σ(i)` for some `σ`.
fn nakayama_match(l: &Partition, v: &Partition, m: usize, p: u32) -> bool {
    let c = |x: &Partition, i: usize| (x.part(i) as i64 - i as i64).rem_euclid(p as i64);
    fn rec(i: usize, m: usize, used: &mut Vec<bool>, ok: &dyn Fn(usize, usize) -> bool) -> bool {
        if i == m {
            return true;
        }
        for j in 0..m {
            if !used[j] && ok(i, j) {
                used[j] = true;
                if rec(i + 1, m, used, ok) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    rec(0, m, &mut vec![false; m], &|i, j| c(l, i) == c(v, j))
}

#[test]
fn theta_examples() {
    assert_eq!(theta(2, 1).entries, vec![-1, -2, 1]);
    assert_eq!(theta(1, 1).entries, vec![-1, 0]);
    assert_eq!(theta(3, 2).entries, vec![-1, -2, -3, 2, 1]);
    assert!(theta(0, 0).entries.is_empty());
}

#[test]
fn r_value_examples() {
    let xi = XWeight::new(2, 1, vec![2, 1, 3]).unwrap();
    assert_eq!(r_values(&xi, 3).unwrap(), vec![1, -1, -4]);
    let z = XWeight::zero(3, 2);
    let t = theta(3, 2).entries;
    assert_eq!(r_values(&z, 5).unwrap(), vec![t[0], t[1], t[2], -t[3], -t[4]]);
    for i in 0..5 {
        let shift = r_values(&z.plus_epsilon(i), 5).unwrap()[i] - r_values(&z, 5).unwrap()[i];
        assert_eq!(shift, if i < 3 { 1 } else { -1 });
    }
    assert!(matches!(r_values(&z, 6), Err(Error::NonPrime(6))));
    assert!(XWeight::new(1, 1, vec![0]).is_err());
    let w = XWeight::from_label(&label(&[2, 1], &[1], 3), 2, 1).unwrap();
    assert_eq!(w.entries, vec![2, 1, 3]);
    assert!(matches!(XWeight::from_label(&label(&[1, 1, 1], &[], 3), 2, 1), Err(Error::ShapeOverflow(_))));
}

#[test]
fn residue_count_identities() {
    for p in [3u32, 5] {
        for (m, n) in [(3, 3), (2, 1), (4, 2)] {
            for d in 0..=7 {
                for l in fitting_labels(m, n, d, p) {
                    let c = central_char_data(&l, m, n).unwrap();
                    let pu = p as usize;
                    assert_eq!(c.b_prime.iter().sum::<usize>(), m);
                    assert_eq!(c.b.iter().sum::<usize>(), m + n);
                    for r in 0..pu {
                        assert_eq!(c.a_prime[r], c.b_prime[(r + pu - 1) % pu]);
                    }
                    // the odd indices contribute a label-independent correction
                    let offset: Vec<i64> = (0..pu)
                        .map(|r| {
                            i64::from(r == residue(-(m as i64), p)) - i64::from(r == residue(n as i64 - m as i64, p))
                        })
                        .collect();
                    let gap: Vec<i64> = c.diff().iter().zip(c.diff_prime()).map(|(a, b)| a - b).collect();
                    assert_eq!(gap, offset);
                }
            }
        }
    }
}

#[test]
fn equivalence_chain_is_exhaustive() {
    let (m, n, p) = (3, 3, 3u32);
    let labels: Vec<SignedYoungLabel> = (0..=6).flat_map(|d| fitting_labels(m, n, d, p)).collect();
    let data: Vec<CentralCharData> = labels.iter().map(|l| central_char_data(l, m, n).unwrap()).collect();
    let mut agreements = 0;
    for (i, a) in labels.iter().enumerate() {
        for (j, b) in labels.iter().enumerate() {
            let full = data[i].diff() == data[j].diff();
            let even = data[i].diff_prime() == data[j].diff_prime();
            let bp = data[i].b_prime == data[j].b_prime;
            let sigma = nakayama_match(&a.lambda, &b.lambda, m, p);
            let cores = p_core(&a.lambda, p).unwrap().0 == p_core(&b.lambda, p).unwrap().0;
            assert!(full == even && even == bp && bp == sigma && sigma == cores, "{a} vs {b}");
            agreements += usize::from(cores);
        }
    }
    assert!(agreements > labels.len());
}

#[test]
fn same_central_character_examples() {
    let four = label(&[4], &[], 3);
    assert!(same_central_character(&four, &four, 3, 3, 3).unwrap());
    assert!(same_central_character(&four, &label(&[2, 2], &[], 3), 3, 3, 3).unwrap());
    // (2,1,1) has no 3-hook, so it is its own 3-core
    assert!(!same_central_character(&four, &label(&[2, 1, 1], &[], 3), 3, 3, 3).unwrap());
    assert!(!same_central_character(&label(&[4], &[], 5), &label(&[3, 1], &[], 5), 4, 4, 5).unwrap());
    // padding ∅ by 1^3
    assert!(same_central_character(&label(&[], &[1], 3), &label(&[3], &[], 3), 3, 3, 3).unwrap());
    let small = label(&[1], &[1], 3);
    assert!(matches!(same_central_character(&small, &four, 3, 3, 3), Err(Error::ShapeOverflow(_))));
    assert!(same_central_character(&small, &four, 4, 3, 3).unwrap());
    assert!(matches!(same_central_character(&four, &four, 3, 3, 5), Err(Error::FieldMismatch(5, 3))));
}

#[test]
fn padding_leaves_even_counts_unchanged() {
    for p in [3u32, 5] {
        let m = 12;
        for d in 0..=6 {
            for l in partitions(d) {
                let base = label(l.parts(), &[], p);
                let padded = pad_columns(&base, 1);
                let before = central_char_data(&base, m, 1).unwrap();
                let after = central_char_data(&padded, m, 1).unwrap();
                assert_eq!(before.b_prime, after.b_prime);
                assert_eq!(block_of_signed_young(&base).core, block_of_signed_young(&padded).core);
            }
        }
    }
}

#[test]
fn block_examples() {
    assert_eq!(block_of_signed_young(&label(&[1], &[1], 3)), BlockLabel { core: p_of(&[1]), weight: 1 });
    assert_eq!(block_of_signed_young(&label(&[2, 1], &[], 5)), BlockLabel { core: p_of(&[2, 1]), weight: 0 });
    assert_eq!(block_of_signed_young(&label(&[6], &[], 3)), BlockLabel { core: Partition::empty(), weight: 2 });
}

#[test]
fn young_module_linkage_matches_cores() {
    let p = 3;
    for d in 1..=5 {
        let parts = partitions(d);
        let ys: Vec<_> = parts.iter().map(|l| young_module(l, p, 11).unwrap()).collect();
        let k = parts.len();
        // union-find over nonzero Hom in either direction
        let mut root: Vec<usize> = (0..k).collect();
        fn find(r: &mut Vec<usize>, x: usize) -> usize {
            if r[x] != x {
                let top = find(r, r[x]);
                r[x] = top;
            }
            r[x]
        }
        for i in 0..k {
            for j in 0..k {
                if i != j && hom_space(&ys[i], &ys[j]).unwrap().dim() > 0 {
                    let (a, b) = (find(&mut root, i), find(&mut root, j));
                    root[a] = b;
                }
            }
        }
        for i in 0..k {
            for j in 0..k {
                let linked = find(&mut root, i) == find(&mut root, j);
                let lab_i = SignedYoungLabel::new(parts[i].clone(), Partition::empty(), p);
                let lab_j = SignedYoungLabel::new(parts[j].clone(), Partition::empty(), p);
                let same = block_of_signed_young(&lab_i).core == block_of_signed_young(&lab_j).core;
                assert_eq!(linked, same, "d={d}: {} vs {}", parts[i], parts[j]);
            }
        }
    }
}

#[test]
fn defect_one_examples() {
    let c = defect_one_catalog(&p_of(&[1]), 3).unwrap();
    assert_eq!(c.chain, vec![p_of(&[4]), p_of(&[2, 2]), p_of(&[1, 1, 1, 1])]);
    assert_eq!(c.signed_young_count(), 4);
    assert_eq!(c.twisted, label(&[1], &[1], 3));
    let c = defect_one_catalog(&Partition::empty(), 3).unwrap();
    assert_eq!(c.chain, vec![p_of(&[3]), p_of(&[2, 1]), p_of(&[1, 1, 1])]);
    assert_eq!(c.patterns[0].layers, vec![vec![1]]);
    assert_eq!(c.patterns[1].layers, vec![vec![1], vec![2], vec![1]]);
    assert_eq!(c.patterns[1].end_dim(), 2);
    assert_eq!(c.patterns[2].layers, vec![vec![2], vec![1], vec![2]]);
    assert_eq!(c.patterns[3].layers, vec![vec![2]]);
    let c = defect_one_catalog(&Partition::empty(), 5).unwrap();
    assert_eq!(c.patterns[2].layers, vec![vec![2], vec![3, 1], vec![2]]);
    assert_eq!(c.patterns.iter().map(LoewyPattern::composition_length).collect::<Vec<_>>(), vec![1, 3, 4, 4, 3, 1]);
    assert!(matches!(defect_one_catalog(&p_of(&[3]), 3), Err(Error::NotACore(_, 3))));
    assert!(matches!(defect_one_catalog(&Partition::empty(), 2), Err(Error::NonOddPrime(2))));
}

#[test]
fn defect_one_chain_shape() {
    for p in [3u32, 5, 7] {
        let pu = p as usize;
        for size in 0..=9 {
            for tau in partitions(size).into_iter().filter(|t| t.is_p_core(pu)) {
                let c = defect_one_catalog(&tau, p).unwrap();
                assert_eq!(c.chain.len(), pu);
                for w in c.chain.windows(2) {
                    assert!(w[0] != w[1] && w[0].dominates(&w[1]).unwrap());
                }
                let mut first = tau.parts().to_vec();
                if first.is_empty() {
                    first.push(0);
                }
                first[0] += pu;
                assert_eq!(c.chain[0], p_of(&first));
                let mut last = tau.parts().to_vec();
                last.extend(std::iter::repeat_n(1, pu));
                assert_eq!(c.chain[pu - 1], p_of(&last));
                // p+1 signed labels of degree |τ|+p land in this block
                let d = size + pu;
                let count = fitting_labels(d, 1, d, p)
                    .iter()
                    .filter(|l| block_of_signed_young(l).core == tau)
                    .count();
                assert_eq!(count, c.signed_young_count());
            }
        }
    }
}
