//! Text format: `vertex a b c; arrow f: a->b; rel f.g = 0; rel f.g = 2*h.k - x.y;`

use std::fmt;
use std::str::FromStr;

use super::{Arrow, QuiverPresentation, Relation};
use crate::error::{Error, Result};

type Terms = Vec<(i64, Vec<usize>)>;

fn parse_side(q: &QuiverPresentation, side: &str) -> Result<Terms> {
    let side = side.trim();
    if side == "0" {
        return Ok(Vec::new());
    }
    let mut terms = Vec::new();
    let mut sign = 1i64;
    let mut rest = side;
    loop {
        rest = rest.trim_start();
        if let Some(r) = rest.strip_prefix('-') {
            sign = -sign;
            rest = r;
            continue;
        }
        if let Some(r) = rest.strip_prefix('+') {
            rest = r;
            continue;
        }
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let (term, tail) = rest.split_at(end);
        let term = term.trim();
        if term.is_empty() {
            return Err(Error::Parse(format!("empty term in {side:?}")));
        }
        let (coef, path) = match term.split_once('*') {
            Some((c, w)) if c.trim().parse::<i64>().is_ok() => (c.trim().parse::<i64>().unwrap(), w.trim()),
            _ => (1, term),
        };
        let arrows = path
            .split('.')
            .map(|l| q.arrow_index(l.trim()).ok_or_else(|| Error::UnknownName(l.trim().to_string())))
            .collect::<Result<Vec<usize>>>()?;
        terms.push((sign * coef, arrows));
        sign = 1;
        rest = tail;
        if rest.trim().is_empty() {
            break;
        }
    }
    Ok(terms)
}

impl FromStr for QuiverPresentation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut q = QuiverPresentation { vertices: Vec::new(), arrows: Vec::new(), relations: Vec::new() };
        let stripped: String = s.lines().map(|l| l.split('#').next().unwrap_or("")).collect::<Vec<_>>().join("\n");
        for stmt in stripped.split(';').map(str::trim).filter(|x| !x.is_empty()) {
            let (kw, body) = stmt.split_once(char::is_whitespace).unwrap_or((stmt, ""));
            match kw {
                "vertex" | "vertices" => q.vertices.extend(body.split_whitespace().map(str::to_string)),
                "arrow" => {
                    let (label, ends) =
                        body.split_once(':').ok_or_else(|| Error::Parse(format!("expected `label: a->b` in {stmt:?}")))?;
                    let (a, b) =
                        ends.split_once("->").ok_or_else(|| Error::Parse(format!("expected `a->b` in {stmt:?}")))?;
                    let idx = |v: &str| q.vertex_index(v.trim()).ok_or_else(|| Error::UnknownName(v.trim().to_string()));
                    let arrow = Arrow { source: idx(a)?, target: idx(b)?, label: label.trim().to_string() };
                    q.arrows.push(arrow);
                }
                "rel" => {
                    let sides: Vec<Terms> = body.split('=').map(|x| parse_side(&q, x)).collect::<Result<_>>()?;
                    if sides.len() < 2 {
                        return Err(Error::Parse(format!("relation without `=` in {stmt:?}")));
                    }
                    for pair in sides.windows(2) {
                        q.relations.push(Relation::equal(pair[0].clone(), pair[1].clone()));
                    }
                }
                other => return Err(Error::Parse(format!("unknown statement {other:?}"))),
            }
        }
        q.validate()?;
        Ok(q)
    }
}

impl fmt::Display for QuiverPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertex {};", self.vertices.join(" "))?;
        for a in &self.arrows {
            writeln!(f, "arrow {}: {}->{};", a.label, self.vertices[a.source], self.vertices[a.target])?;
        }
        for r in &self.relations {
            let mut s = String::new();
            for (k, (c, path)) in r.terms.iter().enumerate() {
                let word: Vec<&str> = path.iter().map(|&a| self.arrows[a].label.as_str()).collect();
                let sign = if *c < 0 { "-" } else if k > 0 { "+" } else { "" };
                let joiner = if k > 0 { " " } else { "" };
                s.push_str(&format!("{joiner}{sign}{}", if k > 0 && !sign.is_empty() { " " } else { "" }));
                if c.abs() != 1 {
                    s.push_str(&format!("{}*", c.abs()));
                }
                s.push_str(&word.join("."));
            }
            if s.is_empty() {
                s.push('0');
            }
            writeln!(f, "rel {s} = 0;")?;
        }
        Ok(())
    }
}
