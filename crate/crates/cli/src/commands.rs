use serde_json::json;

use superschur::blocks::{block_of_signed_young, central_char_data, defect_one_catalog};
use superschur::quiver::{separated_verdict, Arrow};
use superschur::reptype::{explain_schur, explain_super};
use superschur::schursuper::{dim_formula, end_of_summands, verify_duality, verify_truncation, SchurSuper};
use superschur::symmod::{decompose, signed_perm_module, young_module};
use superschur::{BiWeight, GradedAlgebra, ModuleRep, Partition, QuiverPresentation, SignedYoungLabel};

use crate::report::Report;
use crate::{suites, Command, Ctx, Failure, Format, Outcome};

pub fn dispatch(cmd: &Command, ctx: &Ctx) -> Outcome {
    match cmd {
        Command::Classify { m, n, d, p, classical, explain } => classify(*m, *n, *d, *p, *classical, *explain),
        Command::Dim { m, n, d, p } => dim(*m, *n, *d, *p),
        Command::Build { m, n, d, p } => build(*m, *n, *d, *p, ctx),
        Command::VerifyDuality { m, n, d, p } => {
            let mut r = Report::new("verify-duality", json!({"m": m, "n": n, "d": d, "p": p}));
            let ok = verify_duality(*m, *n, *d, *p)?;
            r.result = json!(ok);
            r.check("S(m|n,d) ≅ S(n|m,d)", ok, "");
            Ok(r)
        }
        Command::VerifyTruncation { m, n, m2, n2, d, p } => {
            let mut r = Report::new("verify-truncation", json!({"m": m, "n": n, "m2": m2, "n2": n2, "d": d, "p": p}));
            let ok = verify_truncation(*m, *n, *m2, *n2, *d, *p)?;
            r.result = json!(ok);
            r.check("corner = S(m|n,d)", ok, "");
            Ok(r)
        }
        Command::Quiver { m, n, d, p, summands, format } => quiver(*m, *n, *d, *p, summands.as_deref(), *format, ctx),
        Command::Decompose { biweight, p } => decompose_cmd(biweight, *p, ctx),
        Command::Blocks { p, label, tau, m, n } => blocks(*p, label.as_deref(), tau.as_deref(), *m, *n),
        Command::Verify { suite, d, p, a, tau, max_d, steps } => {
            let params = suites::Params { d: *d, p: *p, a: *a, tau: tau.clone(), max_d: *max_d, steps: *steps };
            suites::run(suite, &params, ctx)
        }
    }
}

fn classify(m: usize, n: usize, d: usize, p: u32, classical: bool, explain: bool) -> Outcome {
    let (command, inputs) = if classical {
        ("classify", json!({"m": m, "d": d, "p": p, "classical": true}))
    } else {
        ("classify", json!({"m": m, "n": n, "d": d, "p": p}))
    };
    let mut r = Report::new(command, inputs);
    let (verdict, why) = if classical {
        let (v, why) = explain_schur(m, d, p)?;
        (v, why.to_string())
    } else {
        explain_super(m, n, d, p)?
    };
    r.result = if explain { json!(format!("{verdict}\ncase: {why}")) } else { json!(verdict.to_string()) };
    Ok(r)
}

fn dim(m: usize, n: usize, d: usize, p: Option<u32>) -> Outcome {
    let mut r = Report::new("dim", json!({"m": m, "n": n, "d": d, "p": p}));
    let formula = dim_formula(m, n, d);
    r.result = json!(formula.to_string());
    if let Some(p) = p {
        let computed = SchurSuper::new(m, n, d, p)?.dim() as u128;
        r.check("commutant=formula", computed == formula, format!("commutant {computed}"));
    }
    Ok(r)
}

fn build(m: usize, n: usize, d: usize, p: u32, ctx: &Ctx) -> Outcome {
    let mut r = Report::new("build", json!({"m": m, "n": n, "d": d, "p": p}));
    let s = SchurSuper::new(m, n, d, p)?;
    let basic = s.basic_corner()?;
    let semisimple = s.corner_semisimple(&s.sorted_weights())?;
    r.result = json!({
        "dim": s.dim(),
        "even_dim": s.even_dim(),
        "odd_dim": s.dim() - s.even_dim(),
        "weights": s.weights.len(),
        "basic_corner_dim": basic.dim(),
        "semisimple": semisimple,
    });
    r.check("dim = formula", s.dim() as u128 == dim_formula(m, n, d), "");
    if ctx.dump.is_some() {
        ctx.dump(&s.algebra()?.to_json())?;
    }
    Ok(r)
}

/// Parse `;`-separated summand specifications of degree `d`.
fn parse_summands(spec: &str, d: usize, p: u32, seed: u64) -> Result<Vec<ModuleRep>, Failure> {
    let mut out = Vec::new();
    for item in spec.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let module = if item.contains('|') {
            let w: BiWeight = item.parse()?;
            signed_perm_module(&w, p)?.with_label(format!("M({item})"))
        } else {
            let lambda: Partition = item.parse()?;
            young_module(&lambda, p, seed)?.with_label(format!("Y({item})"))
        };
        if module.degree() != d {
            return Err(Failure::Usage(format!("summand {item} has degree {}, expected {d}", module.degree())));
        }
        out.push(module);
    }
    if out.is_empty() {
        return Err(Failure::Usage("no summands given".into()));
    }
    Ok(out)
}

/// Gabriel quiver with vertices named by the chosen idempotents.
pub fn labeled_quiver(a: &GradedAlgebra, seed: u64) -> Result<QuiverPresentation, Failure> {
    let data = a.idempotent_data(seed)?;
    let counts = a.gabriel_arrows(&data);
    let names = data.representative_labels();
    let mut arrows = Vec::new();
    for (i, row) in counts.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            for k in 0..c {
                arrows.push(Arrow { source: i, target: j, label: format!("a{i}_{j}_{k}") });
            }
        }
    }
    Ok(QuiverPresentation::new(names, arrows, Vec::new())?)
}

fn quiver(m: usize, n: usize, d: usize, p: u32, summands: Option<&str>, format: Format, ctx: &Ctx) -> Outcome {
    let mut r = Report::new("quiver", json!({"m": m, "n": n, "d": d, "p": p, "summands": summands}));
    let algebra = match summands {
        Some(spec) => end_of_summands(&parse_summands(spec, d, p, ctx.seed)?)?,
        None => SchurSuper::new(m, n, d, p)?.basic_corner()?,
    };
    let q = labeled_quiver(&algebra, ctx.seed)?;
    let verdict = separated_verdict(&q);
    r.result = json!({
        "vertices": q.vertices(),
        "arrows": q.arrow_matrix(),
        "verdict": verdict.to_string(),
    });
    if format == Format::Dot {
        r.raw = Some(format!("{}// separated-quiver verdict: {verdict}\n", q.to_dot()));
    }
    if ctx.dump.is_some() {
        ctx.dump(&algebra.to_json())?;
    }
    Ok(r)
}

fn decompose_cmd(biweight: &str, p: u32, ctx: &Ctx) -> Outcome {
    let mut r = Report::new("decompose", json!({"biweight": biweight, "p": p}));
    let w: BiWeight = biweight.parse()?;
    let module = signed_perm_module(&w, p)?;
    let dec = decompose(&module, ctx.seed)?;
    let mut dims: Vec<usize> = dec.pieces.iter().map(ModuleRep::dim).collect();
    dims.sort_unstable_by(|a, b| b.cmp(a));
    let classes: Vec<_> = dec
        .summands
        .iter()
        .map(|s| json!({"dim": s.module.dim(), "multiplicity": s.multiplicity, "end_dim": s.end_dim}))
        .collect();
    r.result = json!({"dim": module.dim(), "dims": dims, "summands": classes});
    r.check("dims sum to dim M", dims.iter().sum::<usize>() == module.dim(), "");
    if ctx.dump.is_some() {
        ctx.dump(&json!(dec.pieces.iter().map(ModuleRep::to_json).collect::<Vec<_>>()))?;
    }
    Ok(r)
}

fn blocks(p: u32, label: Option<&str>, tau: Option<&str>, m: Option<usize>, n: Option<usize>) -> Outcome {
    let mut r = Report::new("blocks", json!({"p": p, "label": label, "tau": tau, "m": m, "n": n}));
    if label.is_none() && tau.is_none() {
        return Err(Failure::Usage("give --label and/or --tau".into()));
    }
    let mut result = serde_json::Map::new();
    if let Some(l) = label {
        let (lambda, mu) = l.split_once('|').ok_or_else(|| Failure::Usage(format!("label {l:?} needs '|'")))?;
        let label = SignedYoungLabel::new(lambda.parse()?, mu.parse()?, p);
        result.insert("block".into(), json!(block_of_signed_young(&label)));
        if let (Some(m), Some(n)) = (m, n) {
            result.insert("central_character".into(), json!(central_char_data(&label, m, n)?));
        }
    }
    if let Some(t) = tau {
        result.insert("defect_one".into(), json!(defect_one_catalog(&t.parse()?, p)?));
    }
    r.result = serde_json::Value::Object(result);
    Ok(r)
}
