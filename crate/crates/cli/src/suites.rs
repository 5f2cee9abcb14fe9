//! Named verification suites.

use serde_json::json;

use superschur::blocks::{central_char_data, defect_one_catalog, same_central_character};
use superschur::partition::{p_core, partition_count, partitions};
use superschur::quiver::{
    a_tilde, chain_assignment, chain_order, check_relations, is_presentation, named_quiver, path_algebra,
    separated_verdict,
};
use superschur::reptype::{classify_super, computed_semisimple, RepType};
use superschur::schursuper::{end_of_summands, schur_super, SchurSuper};
use superschur::supersmash::smash;
use superschur::symmod::{
    decompose, distinct_summands, hom_space, is_isomorphic, signed_perm_module, signed_young_census, young_module,
};
use superschur::{AlgModule, BiWeight, ModuleRep, Partition, QuiverPresentation, SignedYoungLabel, Verdict};

use crate::report::Report;
use crate::{Ctx, Failure, Outcome};

pub struct Params {
    pub d: Option<usize>,
    pub p: Option<u32>,
    pub a: Option<usize>,
    pub tau: Option<String>,
    pub max_d: Option<usize>,
    pub steps: Option<usize>,
}

pub const SUITES: &[&str] = &[
    "prop-2.2.3",
    "eq-indiso",
    "prop-3.5.1",
    "prop-3.6.1",
    "thm-4.1.2",
    "sec-4.4",
    "thm-4.2.1-count",
    "lemma-5.2-chain",
    "cor-5.2.9",
    "lemma-5.3-count",
    "thm-5.1.1-resolution",
    "thm-1.3.1-grid",
    "sec-4.5",
    "sec-4.6",
];

pub fn run(suite: &str, params: &Params, ctx: &Ctx) -> Outcome {
    let p = params.p.unwrap_or(3);
    let mut r = Report::new(&format!("verify {suite}"), json!({"p": p, "d": params.d, "seed": ctx.seed}));
    let seed = ctx.seed;
    match suite {
        "prop-2.2.3" => restriction_counts(&mut r, params.d.unwrap_or(3), p, seed)?,
        "eq-indiso" => induce_restrict(&mut r, params.d.unwrap_or(3), p, seed)?,
        "prop-3.5.1" => young_in_signed(&mut r, p, seed)?,
        "prop-3.6.1" => hooks(&mut r, params.a.unwrap_or(2), p, seed)?,
        "thm-4.1.2" => chain_algebra(&mut r, params.d.unwrap_or(p as usize), p, seed)?,
        "sec-4.4" => flagship(&mut r, seed)?,
        "thm-4.2.1-count" => census(&mut r, params.d.unwrap_or(4), p, seed)?,
        "lemma-5.2-chain" => residue_chain(&mut r, params.d.unwrap_or(6), p)?,
        "cor-5.2.9" => linkage(&mut r, params.d.unwrap_or(4), p, seed)?,
        "lemma-5.3-count" => defect_one(&mut r, params.tau.as_deref().unwrap_or("1"), p, seed)?,
        "thm-5.1.1-resolution" => resolutions(&mut r, p, params.steps.unwrap_or(10), seed)?,
        "thm-1.3.1-grid" => grid(&mut r, p, params.max_d.unwrap_or(6))?,
        "sec-4.5" | "sec-4.6" => {
            let (d, name) = if suite == "sec-4.5" { (7, "Q") } else { (8, "H") };
            if ctx.slow {
                stretch(&mut r, d, name, seed)?;
            } else {
                r.skip(format!("S(2|1,{d}) at p=3 against {name}"), "needs --slow");
            }
        }
        _ => return Err(Failure::Usage(format!("unknown suite {suite:?}; known: {}", SUITES.join(", ")))),
    }
    Ok(r)
}

fn restriction_counts(r: &mut Report, d: usize, p: u32, seed: u64) -> Result<(), Failure> {
    let b = smash(&schur_super(1, 1, d, p)?)?;
    let pims = AlgModule::regular(b.algebra()).summands(seed)?;
    let counts = pims.iter().map(|m| b.count_restriction_summands(m, seed)).collect::<Result<Vec<_>, _>>()?;
    r.check("restriction of each projective has 1 or 2 summands", counts.iter().all(|&c| c == 1 || c == 2), format!("{counts:?}"));
    Ok(())
}

fn induce_restrict(r: &mut Report, d: usize, p: u32, seed: u64) -> Result<(), Failure> {
    let a = schur_super(1, 1, d, p)?;
    let b = smash(&a)?;
    let mut modules = AlgModule::regular(b.algebra()).summands(seed)?;
    for n in AlgModule::regular(&a).summands(seed)? {
        let ind = b.induce(&n);
        r.check("dim ind N = 2 dim N", ind.dim() == 2 * n.dim(), format!("dim N = {}", n.dim()));
        let back = b.restrict(&ind);
        r.check("res ind N ≅ N ⊕ N^δ", back.is_isomorphic(&n.direct_sum(&b.delta_twist(&n)), seed), "");
        modules.push(ind);
    }
    let ok = modules.iter().filter(|m| b.verify_induce_restrict(m)).count();
    r.check("ind res M ≅ M ⊕ M^ζ by the explicit map", ok == modules.len(), format!("{ok}/{}", modules.len()));
    Ok(())
}

fn young_in_signed(r: &mut Report, p: u32, seed: u64) -> Result<(), Failure> {
    let y = young_module(&"2,1,1".parse()?, p, seed)?;
    let dec = decompose(&signed_perm_module(&"2,1|1".parse()?, p)?, seed)?;
    let mut mult = 0;
    for s in &dec.summands {
        if is_isomorphic(&s.module, &y, seed)? {
            mult += s.multiplicity;
        }
    }
    r.check("Y^(2,1,1) | M^(2,1|1) with multiplicity 1", mult == 1, format!("multiplicity {mult}"));
    Ok(())
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn hooks(r: &mut Report, a: usize, p: u32, seed: u64) -> Result<(), Failure> {
    let w = BiWeight::new(vec![a, 0], vec![p as usize]);
    let dec = decompose(&signed_perm_module(&w, p)?, seed)?;
    let mut dims: Vec<usize> = dec.pieces.iter().map(ModuleRep::dim).collect();
    dims.sort_unstable();
    let d = a + p as usize;
    let mut want = vec![binom(d - 1, a), binom(d - 1, a - 1)];
    want.sort_unstable();
    r.check(format!("M^({a},0|{p}) splits into hooks"), dims == want, format!("dims {dims:?}, expected {want:?}"));
    r.check("each summand has End = k", dec.summands.iter().all(|s| s.end_dim == 1), "");
    Ok(())
}

fn chain_algebra(r: &mut Report, d: usize, p: u32, seed: u64) -> Result<(), Failure> {
    let a = schur_super(1, 1, d, p)?;
    let data = a.idempotent_data(seed)?;
    r.check("d+1 primitive idempotents", data.class_count() == d + 1, format!("{}", data.class_count()));
    let arrows = a.gabriel_arrows(&data);
    let q = a_tilde(d)?;
    r.check("Gabriel quiver ≅ doubled chain", QuiverPresentation::from_arrow_matrix(&arrows).is_isomorphic_to(&q), "");
    r.check("rad³ = 0, rad² ≠ 0", a.loewy_length() == Some(3), "");
    let Some(order) = chain_order(&arrows) else {
        r.check("chain ordering", false, "arrows do not form a chain");
        return Ok(());
    };
    let chain: Vec<Vec<u32>> = order.iter().map(|&i| data.idempotents[i].clone()).collect();
    let cartan = a.cartan_from(&data);
    let tridiagonal = order.iter().enumerate().all(|(x, &i)| {
        order.iter().enumerate().all(|(y, &j)| {
            let want = if x == y { if x == 0 || x == d { 1 } else { 2 } } else if x.abs_diff(y) == 1 { 1 } else { 0 };
            cartan[i][j] == want
        })
    });
    r.check("Cartan matrix tridiagonal (1,2,…,2,1)", tridiagonal, "");
    match chain_assignment(&a, &chain) {
        Some(assign) => {
            r.check("relations hold and dimensions agree", check_relations(&a, &q, &chain, &assign)?, "");
            r.check("presentation is an isomorphism", is_presentation(&a, &q, &chain, &assign)?, "");
        }
        None => {
            r.check("arrow assignment", false, "no compatible arrows");
        }
    }
    let pd = path_algebra(&q, p)?.dim();
    r.check("dim = 4d", pd == 4 * d && a.dim() == 4 * d, format!("path algebra {pd}, S {}", a.dim()));
    Ok(())
}

/// The five modules `Y^(6), Y^(5,1), Y^(4,1,1), Y^(3,3), Y^(3,2,1)` at `p = 3`.
pub fn flagship_modules(seed: u64) -> Result<Vec<ModuleRep>, Failure> {
    let p = 3;
    let mut mods = Vec::new();
    for (lambda, host) in [("6", None), ("5,1", None), ("4,1,1", Some("4,1|1")), ("3,3", None), ("3,2,1", Some("3,2|1"))] {
        let y = young_module(&lambda.parse()?, p, seed)?;
        let y = match host {
            Some(w) => {
                let dec = decompose(&signed_perm_module(&w.parse()?, p)?, seed)?;
                let mut found = None;
                for s in dec.summands {
                    if is_isomorphic(&s.module, &y, seed)? {
                        found = Some(s.module);
                        break;
                    }
                }
                found.ok_or_else(|| Failure::Compute(format!("Y^({lambda}) is not a summand of M^({w})")))?
            }
            None => y,
        };
        mods.push(y.with_label(format!("Y({lambda})")));
    }
    Ok(mods)
}

fn flagship(r: &mut Report, seed: u64) -> Result<(), Failure> {
    let e = end_of_summands(&flagship_modules(seed)?)?;
    let data = e.idempotent_data(seed)?;
    let q = QuiverPresentation::from_arrow_matrix(&e.gabriel_arrows(&data));
    let l = named_quiver("L")?;
    r.check("End(⊕Y) is basic on 5 vertices", data.class_count() == 5, format!("dim End = {}", e.dim()));
    r.check("Gabriel quiver ≅ L", q.is_isomorphic_to(&l), format!("{:?}", q.arrow_matrix()));
    r.check("L is wild", separated_verdict(&l) == Verdict::Wild, "");
    Ok(())
}

fn census(r: &mut Report, d: usize, p: u32, seed: u64) -> Result<(), Failure> {
    let got = signed_young_census(d, p, seed)?.len();
    let pu = p as usize;
    let want: usize = (0..=d / pu).map(|j| partition_count(d - pu * j) * partition_count(j)).sum();
    r.check("distinct indecomposable summands = Σ P(d−pj)P(j)", got == want, format!("{got} vs {want}"));
    Ok(())
}

fn residue_chain(r: &mut Report, max_d: usize, p: u32) -> Result<(), Failure> {
    let (m, n) = (3usize, 3usize);
    let pu = p as usize;
    let mut labels = Vec::new();
    for d in 0..=max_d {
        for j in 0..=d / pu {
            for mu in partitions(j).into_iter().filter(|x| x.len() <= n) {
                for lambda in partitions(d - pu * j).into_iter().filter(|x| x.len() <= m) {
                    labels.push(SignedYoungLabel::new(lambda, mu.clone(), p));
                }
            }
        }
    }
    let sigma = |a: &Partition, b: &Partition| {
        let res = |x: &Partition| {
            let mut v: Vec<i64> = (0..m).map(|i| (x.part(i) as i64 - i as i64).rem_euclid(p as i64)).collect();
            v.sort_unstable();
            v
        };
        res(a) == res(b)
    };
    let mut bad = [0usize; 4];
    let mut pairs = 0;
    for a in &labels {
        let ca = central_char_data(a, m, n)?;
        let core_a = p_core(&a.lambda, p)?.0;
        for b in labels.iter().filter(|b| b.degree() == a.degree()) {
            let cb = central_char_data(b, m, n)?;
            let cores = core_a == p_core(&b.lambda, p)?.0;
            let full = ca.diff() == cb.diff();
            let even = ca.diff_prime() == cb.diff_prime();
            let padded = same_central_character(a, b, m + max_d, n, p)?;
            bad[0] += usize::from(full != even);
            bad[1] += usize::from(even != padded);
            bad[2] += usize::from(padded != sigma(&a.lambda, &b.lambda));
            bad[3] += usize::from(sigma(&a.lambda, &b.lambda) != cores);
            pairs += 1;
        }
    }
    let names = ["A−B ⇔ A′−B′", "A′−B′ ⇔ padded data", "padded data ⇔ residue matching", "residue matching ⇔ equal cores"];
    for (name, count) in names.iter().zip(bad) {
        r.check(*name, count == 0, format!("{count} counterexamples in {pairs} pairs"));
    }
    Ok(())
}

fn linkage(r: &mut Report, d: usize, p: u32, seed: u64) -> Result<(), Failure> {
    let parts = partitions(d);
    let ys = parts.iter().map(|l| young_module(l, p, seed)).collect::<Result<Vec<_>, _>>()?;
    let mut bad = 0;
    for i in 0..parts.len() {
        for j in 0..parts.len() {
            let linked = hom_space(&ys[i], &ys[j])?.dim() > 0;
            let block = |l: &Partition| superschur::blocks::block_of_signed_young(&SignedYoungLabel::new(l.clone(), Partition::empty(), p));
            if linked && block(&parts[i]) != block(&parts[j]) {
                bad += 1;
            }
        }
    }
    r.check("nonzero Hom between Young modules only within a block", bad == 0, format!("{bad} violations"));
    Ok(())
}

fn defect_one(r: &mut Report, tau: &str, p: u32, seed: u64) -> Result<(), Failure> {
    let tau: Partition = tau.parse()?;
    let catalog = defect_one_catalog(&tau, p)?;
    let d = tau.size() + p as usize;
    let mut projectives = Vec::new();
    for l in partitions(d) {
        if l.is_p_restricted(p as usize) && p_core(&l, p)?.0 == tau {
            projectives.push(young_module(&l, p, seed)?);
        }
    }
    let mut ends = Vec::new();
    for m in signed_young_census(d, p, seed)? {
        let mut linked = false;
        for y in &projectives {
            if hom_space(y, &m)?.dim() > 0 {
                linked = true;
                break;
            }
        }
        if linked {
            ends.push(hom_space(&m, &m)?.dim());
        }
    }
    r.check("p+1 signed Young modules in the block", ends.len() == catalog.signed_young_count(), format!("found {}", ends.len()));
    let mut predicted: Vec<usize> = catalog.patterns.iter().map(|l| l.end_dim()).collect();
    ends.sort_unstable();
    predicted.sort_unstable();
    r.check("End dimensions match the Loewy patterns", ends == predicted, format!("{ends:?} vs {predicted:?}"));
    Ok(())
}

fn resolutions(r: &mut Report, p: u32, steps: usize, seed: u64) -> Result<(), Failure> {
    let a = path_algebra(&a_tilde(p as usize)?, p)?.algebra;
    for s in 0..=p as usize {
        let res = a.projective_resolution(s, steps, seed)?;
        let nonzero = res.dims.len() == steps + 1 && res.dims.iter().all(|&x| x > 0);
        r.check(format!("simple {s}: {steps} nonzero syzygies"), nonzero, format!("{:?}", res.dims));
        r.check(format!("simple {s}: periodic"), res.period.is_some(), format!("{:?}", res.period));
    }
    Ok(())
}

fn grid(r: &mut Report, p: u32, max_d: usize) -> Result<(), Failure> {
    let mut bad = Vec::new();
    let mut points = 0;
    for m in 0..=5usize {
        for n in 0..=5usize {
            if m + n == 0 {
                continue;
            }
            let mut d = 1;
            while d <= max_d && ((m + n) as u128).pow(d as u32) <= 729 {
                let predicted = classify_super(m, n, d, p)? == RepType::Semisimple;
                if computed_semisimple(m, n, d, p)? != predicted {
                    bad.push(format!("({m}|{n},{d})"));
                }
                points += 1;
                d += 1;
            }
        }
    }
    r.check("semisimple verdicts match the computed radical", bad.is_empty(), format!("{points} points; {}", bad.join(" ")));
    Ok(())
}

/// Basic algebra of `S(2|1,d)` at `p = 3` and its 6-vertex corners.
fn stretch(r: &mut Report, d: usize, name: &str, seed: u64) -> Result<(), Failure> {
    let p = 3;
    let s = SchurSuper::new(2, 1, d, p)?;
    let modules =
        s.sorted_weights().into_iter().map(|w| signed_perm_module(&s.weights[w], p)).collect::<Result<Vec<_>, _>>()?;
    let reps = distinct_summands(&modules, seed)?;
    let e = end_of_summands(&reps)?;
    let data = e.idempotent_data(seed)?;
    let q = QuiverPresentation::from_arrow_matrix(&e.gabriel_arrows(&data));
    r.check(format!("S(2|1,{d}) is wild"), separated_verdict(&q) == Verdict::Wild, format!("{} simples", data.class_count()));
    let target = named_quiver(name)?;
    r.check(format!("{name} is wild"), separated_verdict(&target) == Verdict::Wild, "");
    let corners = e.corner_quivers(&data, target.vertices().len(), seed)?;
    let hits: Vec<Vec<String>> = corners
        .iter()
        .filter(|(_, a)| QuiverPresentation::from_arrow_matrix(a).is_isomorphic_to(&target))
        .map(|(vs, _)| vs.iter().map(|&v| data.labels[data.representatives[v]].clone()).collect())
        .collect();
    r.check(format!("some corner has quiver {name}"), !hits.is_empty(), format!("{} of {} corners: {hits:?}", hits.len(), corners.len()));
    Ok(())
}
