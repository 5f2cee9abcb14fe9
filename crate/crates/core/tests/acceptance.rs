//! Acceptance run: one line per criterion, nonzero exit if any fails.
//! `cargo test --test acceptance -- --slow` adds the p=3 stretch cases.

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use superschur::blocks::{central_char_data, defect_one_catalog, same_central_character, CentralCharData};
use superschur::field::Span;
use superschur::partition::{p_core, partition_count, partitions};
use superschur::quiver::{
    a_tilde, chain_assignment, chain_order, check_relations, is_presentation, named_quiver, path_algebra,
    separated_verdict,
};
use superschur::reptype::{classify_schur, classify_super, computed_semisimple, RepType};
use superschur::schursuper::{dim_formula, end_of_summands, schur_super, SchurSuper};
use superschur::supersmash::{smash, SmashAlgebra};
use superschur::symmod::{decompose, hom_space, is_isomorphic, signed_perm_module, young_module};
use superschur::{AlgModule, BiWeight, ModuleRep, Partition, QuiverPresentation, SignedYoungLabel, Verdict};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn part(v: &[usize]) -> Partition {
    Partition::from_unsorted(v.to_vec())
}

// ---------------------------------------------------------------- 1

/// Verdicts written out case by case, independent of the library's control flow.
fn schur_table(m: usize, d: usize, p: u32) -> RepType {
    use RepType::*;
    if p == 0 || m == 1 {
        return Semisimple;
    }
    match (p, m) {
        (2, 2) => match d {
            0 | 1 | 3 => Semisimple,
            2 | 5 | 7 => Finite,
            4 | 9 | 11 => Tame,
            _ => Wild,
        },
        (2, _) => match d {
            0 | 1 => Semisimple,
            2 | 3 => Finite,
            _ => Wild,
        },
        (3, 2) => match d {
            0..=2 => Semisimple,
            3..=8 => Finite,
            9..=11 => Tame,
            _ => Wild,
        },
        (3, 3) => match d {
            0..=2 => Semisimple,
            3..=5 => Finite,
            7 | 8 => Tame,
            _ => Wild,
        },
        (3, _) => match d {
            0..=2 => Semisimple,
            3..=5 => Finite,
            _ => Wild,
        },
        (p, 2) => {
            let p = p as usize;
            if d < p {
                Semisimple
            } else if d < p * p {
                Finite
            } else {
                Wild
            }
        }
        (p, _) => {
            let p = p as usize;
            if d < p {
                Semisimple
            } else if d < 2 * p {
                Finite
            } else {
                Wild
            }
        }
    }
}

fn super_table(m: usize, n: usize, d: usize, p: u32) -> RepType {
    use RepType::*;
    if p == 2 {
        return schur_table(m + n, d, 2);
    }
    if m == 0 || n == 0 {
        return schur_table(m + n, d, p);
    }
    if p == 0 {
        return Semisimple;
    }
    let p = p as usize;
    match (m, n) {
        (1, 1) if !d.is_multiple_of(p) || d == 0 => Semisimple,
        (1, 1) => Finite,
        _ if d < p => Semisimple,
        _ if d < 2 * p => Finite,
        _ => Wild,
    }
}

fn criterion_1() -> Outcome {
    let mut points = 0;
    for p in [0u32, 2, 3, 5, 7] {
        for m in 0..=5usize {
            for n in 0..=5usize {
                for d in 0..=30usize {
                    if m + n == 0 {
                        continue;
                    }
                    points += 1;
                    let v = classify_super(m, n, d, p).map_err(err)?;
                    ensure(v == super_table(m, n, d, p), || format!("super ({m}|{n},{d}) p={p}: {v}"))?;
                    if n == 0 && m > 0 {
                        let c = classify_schur(m, d, p).map_err(err)?;
                        ensure(c == schur_table(m, d, p), || format!("schur ({m},{d}) p={p}: {c}"))?;
                    }
                    ensure(v == classify_super(n, m, d, p).map_err(err)?, || format!("symmetry at ({m}|{n},{d}) p={p}"))?;
                    if m >= 1 && n >= 1 && p != 2 {
                        ensure(v != RepType::Tame, || format!("tame super verdict at ({m}|{n},{d}) p={p}"))?;
                    }
                    if v == RepType::Wild && m >= 1 && n >= 1 {
                        for (m2, n2) in [(m + 1, n), (m, n + 1)] {
                            ensure(classify_super(m2, n2, d, p).map_err(err)? == RepType::Wild, || {
                                format!("monotonicity ({m}|{n},{d}) -> ({m2}|{n2}) p={p}")
                            })?;
                        }
                    }
                }
            }
        }
        if p > 2 {
            for d in 0..=30 {
                if classify_super(2, 1, d, p).map_err(err)? == RepType::Wild {
                    for c in 1..=4 {
                        let d2 = d + c * p as usize;
                        ensure(classify_super(2, 1, d2, p).map_err(err)? == RepType::Wild, || {
                            format!("periodicity {d} -> {d2} p={p}")
                        })?;
                    }
                }
            }
        }
    }
    ensure(classify_schur(2, 11, 2).map_err(err)? == RepType::Tame, || "S(2,11) at p=2".into())?;
    Ok(format!("{points} grid points"))
}

// ---------------------------------------------------------------- 2, 3

/// `(m, n, d)` with `m, n ≤ 5`, `1 ≤ d` and `(m+n)^d ≤ 729`; `d ≤ 12` when `m+n = 1`.
fn small_grid() -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for m in 0..=5usize {
        for n in 0..=5usize {
            if m + n == 0 {
                continue;
            }
            let mut d = 1;
            while d <= 12 && ((m + n) as u128).pow(d as u32) <= 729 {
                out.push((m, n, d));
                d += 1;
            }
        }
    }
    out
}

fn criterion_2() -> Outcome {
    let grid = small_grid();
    for p in [3u32, 5] {
        for &(m, n, d) in &grid {
            let got = SchurSuper::new(m, n, d, p).map_err(err)?.dim() as u128;
            let want = dim_formula(m, n, d);
            ensure(got == want, || format!("({m}|{n},{d}) p={p}: commutant {got}, formula {want}"))?;
        }
    }
    for d in 1..=6 {
        for p in [3u32, 5] {
            let got = SchurSuper::new(1, 1, d, p).map_err(err)?.dim();
            ensure(got == 4 * d, || format!("S(1|1,{d}) p={p}: {got}"))?;
        }
    }
    ensure(grid.iter().all(|&(m, n, _)| dim_formula(m, n, 0) == 1), || "degree zero".into())?;
    let big = SchurSuper::new(2, 1, 6, 3).map_err(err)?.dim();
    ensure(big == 1289 && dim_formula(2, 1, 6) == 1289, || format!("S(2|1,6): {big}"))?;
    Ok(format!("{} points per prime", grid.len()))
}

fn criterion_3() -> Outcome {
    let mut checked = 0;
    let mut full = 0;
    for p in [3u32, 5] {
        for (m, n, d) in small_grid() {
            let predicted = classify_super(m, n, d, p).map_err(err)? == RepType::Semisimple;
            let computed = computed_semisimple(m, n, d, p).map_err(err)?;
            ensure(predicted == computed, || format!("({m}|{n},{d}) p={p}: computed {computed}"))?;
            // the whole algebra where it is small
            if dim_formula(m, n, d) <= 200 {
                let direct = schur_super(m, n, d, p).map_err(err)?.is_semisimple();
                ensure(direct == computed, || format!("({m}|{n},{d}) p={p}: full algebra {direct}"))?;
                full += 1;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} points, {full} also on the full algebra"))
}

// ---------------------------------------------------------------- 4

fn chain_cartan(d: usize) -> Vec<Vec<usize>> {
    let mut c = vec![vec![0; d + 1]; d + 1];
    for i in 0..=d {
        c[i][i] = if i == 0 || i == d { 1 } else { 2 };
        if i < d {
            c[i][i + 1] = 1;
            c[i + 1][i] = 1;
        }
    }
    c
}

fn criterion_4() -> Outcome {
    for (p, d) in [(3u32, 3usize), (5, 5)] {
        let a = schur_super(1, 1, d, p).map_err(err)?;
        let data = a.idempotent_data(0).map_err(err)?;
        ensure(data.class_count() == d + 1, || format!("d={d}: {} idempotents", data.class_count()))?;
        let arrows = a.gabriel_arrows(&data);
        let gabriel = QuiverPresentation::from_arrow_matrix(&arrows);
        ensure(gabriel.is_isomorphic_to(&a_tilde(d).map_err(err)?), || format!("d={d}: quiver is not the chain"))?;
        let order = chain_order(&arrows).ok_or_else(|| format!("d={d}: no chain order"))?;
        let cartan = a.cartan_from(&data);
        let reordered: Vec<Vec<usize>> = order.iter().map(|&i| order.iter().map(|&j| cartan[i][j]).collect()).collect();
        ensure(reordered == chain_cartan(d), || format!("d={d}: Cartan {reordered:?}"))?;
        let powers = a.radical_powers();
        ensure(a.loewy_length() == Some(3), || format!("d={d}: radical powers {:?}", powers.iter().map(Vec::len).collect::<Vec<_>>()))?;
        let chain: Vec<Vec<u32>> = order.iter().map(|&i| data.idempotents[i].clone()).collect();
        let assign = chain_assignment(&a, &chain).ok_or_else(|| format!("d={d}: no arrow assignment"))?;
        let q = a_tilde(d).map_err(err)?;
        ensure(check_relations(&a, &q, &chain, &assign).map_err(err)?, || format!("d={d}: relations"))?;
        ensure(is_presentation(&a, &q, &chain, &assign).map_err(err)?, || format!("d={d}: not surjective"))?;
        let pd = path_algebra(&q, p).map_err(err)?.dim();
        ensure(pd == 4 * d && a.dim() == 4 * d, || format!("d={d}: dims {pd}, {}", a.dim()))?;
    }
    Ok("(3,3) and (5,5)".into())
}

// ---------------------------------------------------------------- 5, 6

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn criterion_5() -> Outcome {
    let mut seen = Vec::new();
    for a in [2usize, 4] {
        let m = signed_perm_module(&BiWeight::new(vec![a, 0], vec![3]), 3).map_err(err)?;
        let dec = decompose(&m, 0).map_err(err)?;
        let mut dims: Vec<usize> = dec.pieces.iter().map(ModuleRep::dim).collect();
        dims.sort_unstable();
        let mut want = vec![binom(a + 2, a), binom(a + 2, a - 1)];
        want.sort_unstable();
        ensure(dims == want, || format!("a={a}: dims {dims:?}, expected {want:?}"))?;
        ensure(dec.summands.iter().all(|s| s.end_dim == 1), || format!("a={a}: non-trivial endomorphisms"))?;
        seen.push(format!("{dims:?}"));
    }
    Ok(seen.join(" "))
}

fn criterion_6() -> Outcome {
    let y = young_module(&part(&[2, 1, 1]), 3, 0).map_err(err)?;
    let m = signed_perm_module(&BiWeight::new(vec![2, 1], vec![1]), 3).map_err(err)?;
    let dec = decompose(&m, 0).map_err(err)?;
    let mut mult = 0;
    for s in &dec.summands {
        if s.module.dim() == y.dim() && is_isomorphic(&s.module, &y, 0).map_err(err)? {
            mult += s.multiplicity;
        }
    }
    ensure(mult == 1, || format!("multiplicity {mult}"))?;
    Ok(format!("dim Y = {}, M = {:?}", y.dim(), dec.signature()))
}

// ---------------------------------------------------------------- 7

/// The summand of `module` isomorphic to `target`.
fn matching_summand(module: &ModuleRep, target: &ModuleRep) -> Result<ModuleRep, String> {
    let dec = decompose(module, 0).map_err(err)?;
    for s in dec.summands {
        if s.module.dim() == target.dim() && is_isomorphic(&s.module, target, 0).map_err(err)? {
            return Ok(s.module);
        }
    }
    Err(format!("no summand of dimension {}", target.dim()))
}

fn criterion_7() -> Outcome {
    let p = 3;
    let mut mods = Vec::new();
    for (lambda, weight) in [
        (vec![6], None),
        (vec![5, 1], None),
        (vec![4, 1, 1], Some(BiWeight::new(vec![4, 1], vec![1]))),
        (vec![3, 3], None),
        (vec![3, 2, 1], Some(BiWeight::new(vec![3, 2], vec![1]))),
    ] {
        let label = part(&lambda).to_string();
        let y = young_module(&part(&lambda), p, 0).map_err(err)?;
        let y = match weight {
            Some(w) => matching_summand(&signed_perm_module(&w, p).map_err(err)?, &y)?,
            None => y,
        };
        mods.push(y.with_label(label));
    }
    let dims: Vec<usize> = mods.iter().map(ModuleRep::dim).collect();
    let e = end_of_summands(&mods).map_err(err)?;
    let data = e.idempotent_data(0).map_err(err)?;
    ensure(data.class_count() == 5, || format!("{} vertices", data.class_count()))?;
    let q = QuiverPresentation::from_arrow_matrix(&e.gabriel_arrows(&data));
    let l = named_quiver("L").map_err(err)?;
    ensure(q.is_isomorphic_to(&l), || format!("quiver {:?} is not L", q.arrow_matrix()))?;
    ensure(separated_verdict(&l) == Verdict::Wild, || "L is not wild".into())?;
    Ok(format!("summand dims {dims:?}, dim End = {}", e.dim()))
}

// ---------------------------------------------------------------- 8, 10

/// Non-isomorphic indecomposable summands over all `M^{(λ|μ)}` of degree `d`.
fn census(d: usize, p: u32) -> Result<Vec<ModuleRep>, String> {
    let mut reps: Vec<ModuleRep> = Vec::new();
    for k in 0..=d {
        for lambda in partitions(k) {
            for mu in partitions(d - k) {
                let w = BiWeight::new(lambda.parts().to_vec(), mu.parts().to_vec());
                let dec = decompose(&signed_perm_module(&w, p).map_err(err)?, 0).map_err(err)?;
                for s in dec.summands {
                    let mut new = true;
                    for r in reps.iter().filter(|r| r.dim() == s.module.dim()) {
                        if is_isomorphic(r, &s.module, 0).map_err(err)? {
                            new = false;
                            break;
                        }
                    }
                    if new {
                        reps.push(s.module);
                    }
                }
            }
        }
    }
    Ok(reps)
}

fn criterion_8() -> Outcome {
    let p = 3u32;
    let mut counts = Vec::new();
    for d in 1..=5 {
        let got = census(d, p)?.len();
        let want: usize = (0..=d / 3).map(|j| partition_count(d - 3 * j) * partition_count(j)).sum();
        ensure(got == want, || format!("d={d}: {got} classes, expected {want}"))?;
        counts.push(got);
    }
    Ok(format!("classes {counts:?} for d = 1..5"))
}

fn endo_dim(m: &ModuleRep) -> Result<usize, String> {
    Ok(hom_space(m, m).map_err(err)?.dim())
}

fn criterion_10() -> Outcome {
    let p = 3u32;
    let mut report = Vec::new();
    for tau in [part(&[1]), Partition::empty()] {
        let d = tau.size() + p as usize;
        let catalog = defect_one_catalog(&tau, p).map_err(err)?;
        // projective Young modules of the block
        let mut projectives = Vec::new();
        for l in partitions(d) {
            if l.is_p_restricted(p as usize) && p_core(&l, p).map_err(err)?.0 == tau {
                projectives.push(young_module(&l, p, 0).map_err(err)?);
            }
        }
        let mut in_block = Vec::new();
        for m in census(d, p)? {
            let mut linked = false;
            for y in &projectives {
                if hom_space(y, &m).map_err(err)?.dim() > 0 {
                    linked = true;
                    break;
                }
            }
            if linked {
                in_block.push(endo_dim(&m)?);
            }
        }
        ensure(in_block.len() == catalog.signed_young_count(), || {
            format!("τ={tau}: {} block summands, expected {}", in_block.len(), catalog.signed_young_count())
        })?;
        let mut got = in_block.clone();
        got.sort_unstable();
        let mut want: Vec<usize> = catalog.patterns.iter().map(|l| l.end_dim()).collect();
        let predicted = want.clone();
        want.sort_unstable();
        ensure(got == want, || format!("τ={tau}: End dims {in_block:?}, predicted {predicted:?}"))?;
        let name = if tau.is_empty() { "∅".to_string() } else { tau.to_string() };
        report.push(format!("τ={name}: End dims {predicted:?}"));
    }
    Ok(report.join(", "))
}

// ---------------------------------------------------------------- 9

fn nakayama_match(l: &Partition, v: &Partition, m: usize, p: u32) -> bool {
    let c = |x: &Partition, i: usize| (x.part(i) as i64 - i as i64).rem_euclid(p as i64);
    let mut left: Vec<i64> = (0..m).map(|i| c(l, i)).collect();
    let mut right: Vec<i64> = (0..m).map(|i| c(v, i)).collect();
    left.sort_unstable();
    right.sort_unstable();
    left == right
}

fn padded(label: &SignedYoungLabel, to: usize) -> SignedYoungLabel {
    let mut parts = label.lambda.parts().to_vec();
    parts.extend(std::iter::repeat_n(1, to - label.lambda.size()));
    SignedYoungLabel::new(Partition::from_unsorted(parts), label.mu.clone(), label.p)
}

fn criterion_9() -> Outcome {
    let (m, n, p) = (3usize, 3usize, 3u32);
    let mut pairs = 0;
    for d in 0..=6 {
        let mut labels = Vec::new();
        for j in 0..=d / 3 {
            for mu in partitions(j).into_iter().filter(|x| x.len() <= n) {
                for lambda in partitions(d - 3 * j).into_iter().filter(|x| x.len() <= m) {
                    labels.push(SignedYoungLabel::new(lambda, mu.clone(), p));
                }
            }
        }
        let data: Vec<CentralCharData> = labels.iter().map(|l| central_char_data(l, m, n)).collect::<Result<_, _>>().map_err(err)?;
        let wide = m + d;
        for (i, a) in labels.iter().enumerate() {
            for (j, b) in labels.iter().enumerate() {
                let full = data[i].diff() == data[j].diff();
                let even = data[i].diff_prime() == data[j].diff_prime();
                let size = a.lambda.size().max(b.lambda.size());
                let pa = central_char_data(&padded(a, size), wide, n).map_err(err)?;
                let pb = central_char_data(&padded(b, size), wide, n).map_err(err)?;
                let bp = pa.b_prime == pb.b_prime;
                let sigma = nakayama_match(&a.lambda, &b.lambda, m, p);
                let cores = p_core(&a.lambda, p).map_err(err)?.0 == p_core(&b.lambda, p).map_err(err)?.0;
                ensure(full == even && even == bp && bp == sigma && sigma == cores, || {
                    format!("{a} vs {b}: {full} {even} {bp} {sigma} {cores}")
                })?;
                let padded_test = same_central_character(a, b, wide, n, p).map_err(err)?;
                ensure(padded_test == cores, || format!("{a} vs {b}: padded comparison {padded_test}"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} label pairs"))
}

// ---------------------------------------------------------------- 11

fn criterion_11() -> Outcome {
    let mut report = Vec::new();
    for p in [3u32, 5] {
        let a = path_algebra(&a_tilde(p as usize).map_err(err)?, p).map_err(err)?.algebra;
        for s in 0..=p as usize {
            let r = a.projective_resolution(s, 10, 0).map_err(err)?;
            ensure(r.dims.len() == 11 && r.dims.iter().all(|&x| x > 0), || format!("p={p} simple {s}: {:?}", r.dims))?;
            let (start, len) = r.period.ok_or_else(|| format!("p={p} simple {s}: no period in {:?}", r.dims))?;
            if s == 0 {
                report.push(format!("p={p} Ω-dims {:?} period {len} from {start}", r.dims));
            }
        }
    }
    Ok(report.join("; "))
}

// ---------------------------------------------------------------- 12

/// Submodule generated by `v`.
fn cyclic(m: &AlgModule, v: Vec<u32>, p: u32) -> Vec<Vec<u32>> {
    let mut span = Span::new(p, m.dim());
    let mut queue = vec![v];
    while let Some(w) = queue.pop() {
        if span.insert(w.clone()) {
            for g in m.action() {
                queue.push(g.vec_mul(&w));
            }
        }
    }
    span.into_basis()
}

fn smash_identities(b: &SmashAlgebra, m: &AlgModule, seed: u64) -> Result<(), String> {
    let n = b.restrict(m);
    let ind = b.induce(&n);
    ensure(ind.dim() == 2 * m.dim(), || "dimension does not double".into())?;
    let back = b.restrict(&b.induce(&n));
    ensure(back.is_isomorphic(&n.direct_sum(&b.delta_twist(&n)), seed), || "res ind N ≇ N ⊕ N^δ".into())?;
    ensure(b.verify_induce_restrict(m), || "explicit ind res M ≅ M ⊕ M^ζ fails".into())?;
    for s in m.summands(seed).map_err(err)? {
        let c = b.count_restriction_summands(&s, seed).map_err(err)?;
        ensure(c == 1 || c == 2, || format!("restriction has {c} summands"))?;
    }
    Ok(())
}

fn criterion_12() -> Outcome {
    let p = 3;
    let b = smash(&schur_super(1, 1, 3, p).map_err(err)?).map_err(err)?;
    let pims = AlgModule::regular(b.algebra()).summands(0).map_err(err)?;
    for (i, pim) in pims.iter().enumerate() {
        smash_identities(&b, pim, 0).map_err(|e| format!("projective {i}: {e}"))?;
    }
    let mut dims = Vec::new();
    for seed in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let module = loop {
            let a = &pims[rng.gen_range(0..pims.len())];
            let c = &pims[rng.gen_range(0..pims.len())];
            let host = if a.dim() + c.dim() <= 8 && rng.gen_bool(0.5) { a.direct_sum(c) } else { a.clone() };
            let v: Vec<u32> = (0..host.dim()).map(|_| rng.gen_range(0..p)).collect();
            if v.iter().all(|&x| x == 0) {
                continue;
            }
            let sub = cyclic(&host, v, p);
            let m = if rng.gen_bool(0.5) || sub.len() == host.dim() {
                host.submodule(&sub).map_err(err)?
            } else {
                host.quotient(&sub).map_err(err)?
            };
            if (1..=8).contains(&m.dim()) {
                break m;
            }
        };
        module.check(b.algebra()).map_err(err)?;
        smash_identities(&b, &module, seed).map_err(|e| format!("random module {seed}: {e}"))?;
        dims.push(module.dim());
    }
    let mut hist: HashMap<usize, usize> = HashMap::new();
    for d in dims {
        *hist.entry(d).or_default() += 1;
    }
    let mut hist: Vec<_> = hist.into_iter().collect();
    hist.sort_unstable();
    Ok(format!("{} projectives, random dims {hist:?}", pims.len()))
}

// ---------------------------------------------------------------- 13

fn criterion_13(flagship: bool, slow: bool) -> Outcome {
    for name in ["L", "Q", "H"] {
        let q = named_quiver(name).map_err(err)?;
        ensure(separated_verdict(&q) == Verdict::Wild, || format!("{name} is not wild"))?;
    }
    ensure(flagship, || "criterion 7 failed".into())?;
    if !slow {
        return Ok("L, Q, H wild; flagship case passed; stretch skipped (pass --slow)".into());
    }
    let mut notes = Vec::new();
    for (d, name) in [(7usize, "Q"), (8, "H")] {
        let found = stretch_quiver(d, name)?;
        notes.push(format!("d={d}: {found}"));
    }
    Ok(notes.join("; "))
}

/// Gabriel quiver of the basic algebra of `S(2|1,d)` at `p = 3`, blockwise,
/// compared with the named presentation.
fn stretch_quiver(d: usize, name: &str) -> Result<String, String> {
    let p = 3;
    let mut reps: Vec<ModuleRep> = Vec::new();
    for c in 0..=d {
        for a in (0..=d - c).rev() {
            let b = d - c - a;
            if b > a {
                continue;
            }
            let w = BiWeight::new(vec![a, b], vec![c]);
            let dec = decompose(&signed_perm_module(&w, p).map_err(err)?, 0).map_err(err)?;
            for s in dec.summands {
                let mut new = true;
                for r in reps.iter().filter(|r| r.dim() == s.module.dim()) {
                    if is_isomorphic(r, &s.module, 0).map_err(err)? {
                        new = false;
                        break;
                    }
                }
                if new {
                    reps.push(s.module);
                }
            }
        }
    }
    let e_alg = end_of_summands(&reps).map_err(err)?;
    let data = e_alg.idempotent_data(0).map_err(err)?;
    let arrows = e_alg.gabriel_arrows(&data);
    let target = named_quiver(name).map_err(err)?;
    let whole = QuiverPresentation::from_arrow_matrix(&arrows);
    let wild = separated_verdict(&whole) == Verdict::Wild;
    // connected components of the Gabriel quiver
    let k = arrows.len();
    let mut comp: Vec<usize> = (0..k).collect();
    fn root(c: &mut [usize], x: usize) -> usize {
        if c[x] != x {
            let r = root(c, c[x]);
            c[x] = r;
        }
        c[x]
    }
    for i in 0..k {
        for j in 0..k {
            if arrows[i][j] > 0 {
                let (a, b) = (root(&mut comp, i), root(&mut comp, j));
                comp[a] = b;
            }
        }
    }
    // corners on vertex subsets of one component
    let size = target.vertices().len();
    let reps: Vec<&Vec<u32>> = data.representatives.iter().map(|&i| &data.idempotents[i]).collect();
    let mut matched = 0;
    let mut tried = 0;
    for r in 0..k {
        let verts: Vec<usize> = (0..k).filter(|&i| root(&mut comp, i) == r).collect();
        if verts.len() < size {
            continue;
        }
        for subset in subsets(&verts, size) {
            let mut e = vec![0u32; e_alg.dim()];
            for &v in &subset {
                e = e_alg.add(&e, reps[v]);
            }
            let corner = e_alg.corner(&e).map_err(err)?;
            let cd = corner.idempotent_data(0).map_err(err)?;
            tried += 1;
            if QuiverPresentation::from_arrow_matrix(&corner.gabriel_arrows(&cd)).is_isomorphic_to(&target) {
                matched += 1;
            }
        }
    }
    ensure(wild, || format!("S(2|1,{d}) quiver not wild"))?;
    ensure(matched > 0, || format!("no {size}-vertex corner of S(2|1,{d}) has quiver {name}"))?;
    Ok(format!("{k} vertices, wild; {matched} of {tried} {size}-vertex corners have quiver {name}"))
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = subsets(&items[1..], k - 1);
    for s in &mut out {
        s.insert(0, items[0]);
    }
    out.extend(subsets(&items[1..], k));
    out
}

// ----------------------------------------------------------------

fn run(n: usize, title: &str, budget: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = f();
    let t = start.elapsed();
    let over = t > budget;
    let ok = outcome.is_ok() && !over;
    let detail = match outcome {
        Ok(s) if over => format!("{s}; over budget {budget:?}"),
        Ok(s) => s,
        Err(e) => e,
    };
    println!("criterion {n:>2} [{title}]: {} ({:.1}s) {detail}", if ok { "PASS" } else { "FAIL" }, t.as_secs_f64());
    ok
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let slow = args.iter().any(|a| a == "--slow");
    // libtest flags such as --list must not trigger a run
    if args.iter().any(|a| a == "--list") {
        println!("acceptance: test");
        return ExitCode::SUCCESS;
    }
    let s = Duration::from_secs;
    let mut results = vec![
        run(1, "classifier fidelity", s(1), criterion_1),
        run(2, "dimension agreement", s(120), criterion_2),
        run(3, "semisimplicity agreement", s(120), criterion_3),
        run(4, "S(1|1,d) chain presentation", s(60), criterion_4),
        run(5, "hook decompositions", s(60), criterion_5),
        run(6, "Young module in M^(2,1|1)", s(60), criterion_6),
    ];
    let flagship = run(7, "End of five signed Young modules ≅ L", s(600), criterion_7);
    results.push(flagship);
    results.push(run(8, "signed Young census", s(300), criterion_8));
    results.push(run(9, "central character chain", s(60), criterion_9));
    results.push(run(10, "defect-one block count", s(120), criterion_10));
    results.push(run(11, "periodic resolutions", s(60), criterion_11));
    results.push(run(12, "smash product identities", s(60), criterion_12));
    let budget = if slow { s(3600) } else { s(60) };
    results.push(run(13, "substitutes", budget, || criterion_13(flagship, slow)));
    let passed = results.iter().filter(|&&b| b).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
