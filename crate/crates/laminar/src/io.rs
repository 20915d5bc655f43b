//! Line-oriented file formats: laminations, generator lists, measures,
//! planar trees and ping-pong tables.  Writers emit a canonical form
//! that parses back to the same value; parsers accept blank lines and
//! `#` comments.

use crate::circle::{CirclePoint, Leaf, Model, OpenInterval, ProjPoint};
use crate::group::{MarkedGroup, PingPongTable};
use crate::homeo::{Homeo, MobiusMap, PLHomeo};
use crate::lamination::FiniteLamination;
use crate::measure::FiniteSupportMeasure;
use crate::ordertree::{PlanarOrderTree, VertexKind};
use crate::surd::QuadExt;
use crate::{Error, Result};
use num::{BigInt, BigRational, One, Signed};
use std::collections::BTreeMap;
use std::str::FromStr;

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Numbered non-blank, non-comment lines (1-based).
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_rational(s: &str, line: usize) -> Result<BigRational> {
    BigRational::from_str(s).map_err(|_| err(line, format!("bad rational `{}`", s)))
}

fn parse_model(s: &str, line: usize) -> Result<Model> {
    match s {
        "angle" => Ok(Model::Angle),
        "projective" => Ok(Model::Projective),
        other => Err(err(line, format!("unknown model `{}`", other))),
    }
}

pub fn model_name(m: Model) -> &'static str {
    match m {
        Model::Angle => "angle",
        Model::Projective => "projective",
    }
}

/// Point literal: angle model takes a rational `p/q`; the projective
/// model additionally accepts `inf` and quadratic literals
/// `(a+b*sqrt(d))/c` (or `-` instead of `+`) with integer a, b, c, d.
pub fn parse_point(s: &str, model: Model, line: usize) -> Result<CirclePoint> {
    match model {
        Model::Angle => Ok(CirclePoint::angle(parse_rational(s, line)?)),
        Model::Projective => {
            if s == "inf" {
                return Ok(CirclePoint::infinity());
            }
            if let Some(rest) = s.strip_prefix('(') {
                return parse_surd(rest, line);
            }
            Ok(CirclePoint::projective(parse_rational(s, line)?))
        }
    }
}

/// Body of `(a+b*sqrt(d))/c` after the opening parenthesis.
fn parse_surd(rest: &str, line: usize) -> Result<CirclePoint> {
    let bad = || err(line, "bad quadratic literal; expected (a+b*sqrt(d))/c");
    // the radicand has its own parenthesis, so cut at the last one
    let (body, tail) = rest.rsplit_once(')').ok_or_else(bad)?;
    let c: BigInt = match tail.strip_prefix('/') {
        Some(denom) => denom.parse().map_err(|_| bad())?,
        None if tail.is_empty() => BigInt::one(),
        None => return Err(bad()),
    };
    if c <= BigInt::from(0) {
        return Err(bad());
    }
    // split off the radical term: a on the left, signed b*sqrt(d) right
    let idx = body[1..]
        .find(['+', '-'])
        .map(|i| i + 1)
        .ok_or_else(bad)?;
    let a: BigInt = body[..idx].parse().map_err(|_| bad())?;
    let sign = if body.as_bytes()[idx] == b'+' { 1 } else { -1 };
    let radical = &body[idx + 1..];
    let (b_str, d_str) = radical.split_once("*sqrt(").ok_or_else(bad)?;
    let b: BigInt = b_str.parse().map_err(|_| bad())?;
    let d: u64 = d_str
        .strip_suffix(')')
        .and_then(|d| d.parse().ok())
        .ok_or_else(bad)?;
    let x = QuadExt::new(
        BigRational::new(a, c.clone()),
        BigRational::new(b * sign, c),
        d,
    );
    Ok(CirclePoint::surd(x))
}

pub fn format_point(p: &CirclePoint) -> String {
    match p {
        CirclePoint::Angle(q) => q.to_string(),
        CirclePoint::Projective(ProjPoint::Infinity) => "inf".to_string(),
        CirclePoint::Projective(ProjPoint::Finite(x)) => {
            if let Some(q) = x.as_rational() {
                q.to_string()
            } else {
                // common integer denominator for both coefficients
                let (ra, rb) = (x.rational_part(), x.radical_coeff());
                let c = ra.denom() * rb.denom() / num::integer::gcd(
                    ra.denom().clone(),
                    rb.denom().clone(),
                );
                let a = ra.numer() * (&c / ra.denom());
                let b = rb.numer() * (&c / rb.denom());
                let sign = if b.is_negative() { '-' } else { '+' };
                format!(
                    "({}{}{}*sqrt({}))/{}",
                    a,
                    sign,
                    b.abs(),
                    x.radicand(),
                    c
                )
            }
        }
    }
}

// ---------------------------------------------------------------------------
// laminations
// ---------------------------------------------------------------------------

pub fn parse_lamination(text: &str) -> Result<FiniteLamination> {
    let mut model = None;
    let mut leaves = Vec::new();
    for (n, line) in content_lines(text) {
        let mut words = line.split_whitespace();
        match words.next() {
            Some("model") => {
                let m = words.next().ok_or_else(|| err(n, "missing model name"))?;
                model = Some(parse_model(m, n)?);
            }
            Some("leaf") => {
                let model = model.ok_or_else(|| err(n, "leaf before model line"))?;
                let u = words.next().ok_or_else(|| err(n, "leaf needs two points"))?;
                let v = words.next().ok_or_else(|| err(n, "leaf needs two points"))?;
                leaves.push(
                    Leaf::new(parse_point(u, model, n)?, parse_point(v, model, n)?)
                        .map_err(|e| err(n, e.to_string()))?,
                );
            }
            Some(other) => return Err(err(n, format!("unknown directive `{}`", other))),
            None => unreachable!(),
        }
        if words.next().is_some() {
            return Err(err(n, "trailing tokens"));
        }
    }
    FiniteLamination::new(leaves).map_err(|e| err(0, e.to_string()))
}

pub fn write_lamination(lam: &FiniteLamination) -> String {
    let mut out = format!("model {}\n", model_name(lam.model()));
    for leaf in lam.leaves() {
        let (u, v) = leaf.endpoints();
        out.push_str(&format!("leaf {} {}\n", format_point(u), format_point(v)));
    }
    out
}

// ---------------------------------------------------------------------------
// generator lists
// ---------------------------------------------------------------------------

pub fn parse_group(text: &str) -> Result<MarkedGroup> {
    let mut gens = Vec::new();
    for (n, line) in content_lines(text) {
        let mut words = line.split_whitespace();
        let homeo = match words.next() {
            Some("mobius") => {
                let mut entry = |what: &str| -> Result<i64> {
                    words
                        .next()
                        .and_then(|w| w.parse().ok())
                        .ok_or_else(|| err(n, format!("mobius needs integer {}", what)))
                };
                let (a, b, c, d) = (entry("a")?, entry("b")?, entry("c")?, entry("d")?);
                Homeo::Mobius(
                    MobiusMap::from_ints(a, b, c, d).map_err(|e| err(n, e.to_string()))?,
                )
            }
            Some("pl") => {
                let mut pts = Vec::new();
                for w in words.by_ref() {
                    let inner = w
                        .strip_prefix('(')
                        .and_then(|w| w.strip_suffix(')'))
                        .ok_or_else(|| err(n, "pl points look like (x,y)"))?;
                    let (x, y) = inner
                        .split_once(',')
                        .ok_or_else(|| err(n, "pl points look like (x,y)"))?;
                    pts.push((parse_rational(x, n)?, parse_rational(y, n)?));
                }
                Homeo::PL(PLHomeo::new(&pts).map_err(|e| err(n, e.to_string()))?)
            }
            Some(other) => return Err(err(n, format!("unknown generator kind `{}`", other))),
            None => unreachable!(),
        };
        if words.next().is_some() {
            return Err(err(n, "trailing tokens"));
        }
        gens.push((format!("g{}", gens.len()), homeo));
    }
    MarkedGroup::new(gens).map_err(|e| err(0, e.to_string()))
}

pub fn write_group(group: &MarkedGroup) -> String {
    let mut out = String::new();
    for g in group.generators() {
        match g {
            Homeo::Mobius(m) => {
                let (a, b, c, d) = m.entries();
                out.push_str(&format!("mobius {} {} {} {}\n", a, b, c, d));
            }
            Homeo::PL(p) => {
                out.push_str("pl");
                for (x, y) in p.breakpoints() {
                    out.push_str(&format!(" ({},{})", x, y));
                }
                out.push('\n');
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// measures
// ---------------------------------------------------------------------------

pub fn parse_measure(text: &str) -> Result<FiniteSupportMeasure> {
    let mut model = None;
    let mut atoms = Vec::new();
    for (n, line) in content_lines(text) {
        let mut words = line.split_whitespace();
        match words.next() {
            Some("model") => {
                let m = words.next().ok_or_else(|| err(n, "missing model name"))?;
                model = Some(parse_model(m, n)?);
            }
            Some("atom") => {
                let model = model.ok_or_else(|| err(n, "atom before model line"))?;
                let p = words.next().ok_or_else(|| err(n, "atom needs point and weight"))?;
                let w = words.next().ok_or_else(|| err(n, "atom needs point and weight"))?;
                atoms.push((parse_point(p, model, n)?, parse_rational(w, n)?));
            }
            Some(other) => return Err(err(n, format!("unknown directive `{}`", other))),
            None => unreachable!(),
        }
        if words.next().is_some() {
            return Err(err(n, "trailing tokens"));
        }
    }
    FiniteSupportMeasure::new(atoms).map_err(|e| err(0, e.to_string()))
}

pub fn write_measure(mu: &FiniteSupportMeasure) -> String {
    let mut out = format!("model {}\n", model_name(mu.model()));
    for (p, w) in mu.atoms() {
        out.push_str(&format!("atom {} {}\n", format_point(p), w));
    }
    out
}

// ---------------------------------------------------------------------------
// planar trees
// ---------------------------------------------------------------------------

pub fn parse_tree(text: &str) -> Result<PlanarOrderTree> {
    let mut kinds: BTreeMap<usize, VertexKind> = BTreeMap::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut cyclic: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut linear: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let id = |w: Option<&str>, n: usize| -> Result<usize> {
        w.and_then(|w| w.parse().ok())
            .ok_or_else(|| err(n, "expected a vertex id"))
    };
    for (n, line) in content_lines(text) {
        let mut words = line.split_whitespace();
        match words.next() {
            Some("vertex") => {
                let v = id(words.next(), n)?;
                let kind = match words.next() {
                    Some("ordinary") => VertexKind::Ordinary,
                    Some("singular") => VertexKind::Singular,
                    Some("cataclysm") => VertexKind::Cataclysm,
                    _ => return Err(err(n, "vertex kind must be ordinary|singular|cataclysm")),
                };
                if kinds.insert(v, kind).is_some() {
                    return Err(err(n, format!("vertex {} declared twice", v)));
                }
            }
            Some("edge") => {
                edges.push((id(words.next(), n)?, id(words.next(), n)?));
            }
            Some(dir @ ("cyclic" | "linear")) => {
                let head = words.next().unwrap_or("");
                let v: usize = head
                    .strip_suffix(':')
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| err(n, format!("{} needs `<id>:`", dir)))?;
                let list: Vec<usize> = words
                    .by_ref()
                    .map(|w| w.parse().map_err(|_| err(n, "expected a vertex id")))
                    .collect::<Result<_>>()?;
                let map = if dir == "cyclic" { &mut cyclic } else { &mut linear };
                map.insert(v, list);
            }
            Some(other) => return Err(err(n, format!("unknown directive `{}`", other))),
            None => unreachable!(),
        }
        if words.next().is_some() {
            return Err(err(n, "trailing tokens"));
        }
    }
    let count = kinds.len();
    if kinds.keys().enumerate().any(|(i, &v)| i != v) {
        return Err(err(0, "vertex ids must be 0..n contiguous"));
    }
    // default rotation is ascending neighbor order; cyclic lines override
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); count];
    for &(u, v) in &edges {
        if u >= count || v >= count {
            return Err(err(0, "edge references an undeclared vertex"));
        }
        rotation[u].push(v);
        rotation[v].push(u);
    }
    for r in &mut rotation {
        r.sort();
    }
    for (v, order) in cyclic {
        if v >= count {
            return Err(err(0, "cyclic order references an undeclared vertex"));
        }
        rotation[v] = order;
    }
    PlanarOrderTree::new(kinds.into_values().collect(), rotation, linear)
        .map_err(|e| err(0, e.to_string()))
}

pub fn write_tree(tree: &PlanarOrderTree) -> String {
    let mut out = String::new();
    for v in 0..tree.vertex_count() {
        let kind = match tree.kind(v) {
            VertexKind::Ordinary => "ordinary",
            VertexKind::Singular => "singular",
            VertexKind::Cataclysm => "cataclysm",
        };
        out.push_str(&format!("vertex {} {}\n", v, kind));
    }
    for v in 0..tree.vertex_count() {
        let mut nbrs: Vec<usize> = tree.neighbors(v).iter().copied().filter(|&u| v < u).collect();
        nbrs.sort();
        for u in nbrs {
            out.push_str(&format!("edge {} {}\n", v, u));
        }
    }
    for v in 0..tree.vertex_count() {
        let nbrs = tree.neighbors(v);
        let mut sorted = nbrs.to_vec();
        sorted.sort();
        if nbrs != sorted.as_slice() {
            let list: Vec<String> = nbrs.iter().map(|u| u.to_string()).collect();
            out.push_str(&format!("cyclic {}: {}\n", v, list.join(" ")));
        }
    }
    for v in 0..tree.vertex_count() {
        if let Some(order) = tree.linear_order(v) {
            let list: Vec<String> = order.iter().map(|u| u.to_string()).collect();
            out.push_str(&format!("linear {}: {}\n", v, list.join(" ")));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// ping-pong tables
// ---------------------------------------------------------------------------

pub fn parse_pingpong_table(text: &str) -> Result<PingPongTable> {
    let mut model = None;
    let mut arcs: BTreeMap<&str, OpenInterval> = BTreeMap::new();
    for (n, line) in content_lines(text) {
        let mut words = line.split_whitespace();
        match words.next() {
            Some("model") => {
                let m = words.next().ok_or_else(|| err(n, "missing model name"))?;
                model = Some(parse_model(m, n)?);
            }
            Some(name @ ("A+" | "A-" | "B+" | "B-")) => {
                let model = model.ok_or_else(|| err(n, "arc before model line"))?;
                let lit = words.next().ok_or_else(|| err(n, "arc needs (u,v)"))?;
                let inner = lit
                    .strip_prefix('(')
                    .and_then(|w| w.strip_suffix(')'))
                    .ok_or_else(|| err(n, "arc literal looks like (u,v)"))?;
                let (u, v) = inner
                    .split_once(',')
                    .ok_or_else(|| err(n, "arc literal looks like (u,v)"))?;
                let arc = OpenInterval::new(
                    parse_point(u, model, n)?,
                    parse_point(v, model, n)?,
                )
                .map_err(|e| err(n, e.to_string()))?;
                let key = ["A+", "A-", "B+", "B-"]
                    .iter()
                    .find(|&&k| k == name)
                    .unwrap();
                if arcs.insert(key, arc).is_some() {
                    return Err(err(n, format!("arc {} declared twice", name)));
                }
            }
            Some(other) => return Err(err(n, format!("unknown directive `{}`", other))),
            None => unreachable!(),
        }
        if words.next().is_some() {
            return Err(err(n, "trailing tokens"));
        }
    }
    let mut take = |k: &str| {
        arcs.remove(k)
            .ok_or_else(|| err(0, format!("missing arc {}", k)))
    };
    Ok(PingPongTable {
        a_plus: take("A+")?,
        a_minus: take("A-")?,
        b_plus: take("B+")?,
        b_minus: take("B-")?,
    })
}

pub fn write_pingpong_table(table: &PingPongTable) -> String {
    let arc = |i: &OpenInterval| format!("({},{})", format_point(i.start()), format_point(i.end()));
    format!(
        "model {}\nA+ {}\nA- {}\nB+ {}\nB- {}\n",
        model_name(table.a_plus.model()),
        arc(&table.a_plus),
        arc(&table.a_minus),
        arc(&table.b_plus),
        arc(&table.b_minus),
    )
}
