//! Line-oriented text formats.
//!
//! ```text
//! mcsc <n> <m> <e>
//! s <id> <k> <e1> ... <ek>      (m lines)
//! e <u> <v>                     (e lines)
//!
//! cds <n> <e>
//! e <u> <v>                     (e lines)
//!
//! solution <k>
//! <id1> ... <idk>
//! ```
//!
//! `#` starts a comment; blank lines are ignored. The writers emit the
//! canonical form: subsets in id order with sorted elements, edges sorted
//! by `(min, max)`.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::cds::CdsGraph;
use crate::error::{Error, Result};
use crate::instance::{Instance, SubsetId};

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Non-empty lines with comments removed, paired with 1-based line numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

fn num(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| err(line, format!("expected {what}, found `{tok}`")))
}

fn header<'a>(
    it: &mut impl Iterator<Item = (usize, Vec<&'a str>)>,
    tag: &str,
    fields: &[&str],
) -> Result<(usize, Vec<usize>)> {
    let (line, toks) = it.next().ok_or_else(|| err(1, format!("missing `{tag}` header")))?;
    if toks[0] != tag || toks.len() != fields.len() + 1 {
        return Err(err(line, format!("expected header `{tag} {}`", fields.join(" "))));
    }
    let vals = fields
        .iter()
        .zip(&toks[1..])
        .map(|(f, t)| num(t, line, f))
        .collect::<Result<_>>()?;
    Ok((line, vals))
}

fn edge_line(toks: &[&str], line: usize, count: usize, seen: &mut BTreeSet<(usize, usize)>) -> Result<(usize, usize)> {
    if toks.len() != 3 {
        return Err(err(line, "edge line must be `e <u> <v>`"));
    }
    let u = num(toks[1], line, "vertex id")?;
    let v = num(toks[2], line, "vertex id")?;
    for x in [u, v] {
        if x >= count {
            return Err(err(line, format!("vertex {x} out of range (count {count})")));
        }
    }
    if u == v {
        return Err(err(line, format!("self-loop on {u}")));
    }
    if !seen.insert((u.min(v), u.max(v))) {
        return Err(err(line, format!("duplicate edge {u}-{v}")));
    }
    Ok((u, v))
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut it = lines(text);
    let (head_line, h) = header(&mut it, "mcsc", &["<n>", "<m>", "<e>"])?;
    let (n, m, e) = (h[0], h[1], h[2]);
    let mut subsets: Vec<Option<Vec<usize>>> = vec![None; m];
    let mut edges = Vec::with_capacity(e);
    let mut seen = BTreeSet::new();
    let mut last = head_line;
    for (line, toks) in it {
        last = line;
        match toks[0] {
            "s" => {
                if toks.len() < 3 {
                    return Err(err(line, "subset line must be `s <id> <k> <elements...>`"));
                }
                let id = num(toks[1], line, "subset id")?;
                let k = num(toks[2], line, "subset size")?;
                if id >= m {
                    return Err(err(line, format!("subset id {id} out of range (m = {m})")));
                }
                if subsets[id].is_some() {
                    return Err(err(line, format!("subset {id} defined twice")));
                }
                if toks.len() != 3 + k {
                    return Err(err(line, format!("subset {id} declares {k} elements but lists {}", toks.len() - 3)));
                }
                let mut elems = Vec::with_capacity(k);
                let mut uniq = BTreeSet::new();
                for t in &toks[3..] {
                    let x = num(t, line, "element id")?;
                    if x >= n {
                        return Err(err(line, format!("element {x} out of range (n = {n})")));
                    }
                    if !uniq.insert(x) {
                        return Err(err(line, format!("element {x} repeated in subset {id}")));
                    }
                    elems.push(x);
                }
                subsets[id] = Some(elems);
            }
            "e" => {
                if edges.len() == e {
                    return Err(err(line, format!("more than {e} edges")));
                }
                edges.push(edge_line(&toks, line, m, &mut seen)?);
            }
            other => return Err(err(line, format!("unknown record `{other}`"))),
        }
    }
    if let Some(missing) = subsets.iter().position(Option::is_none) {
        return Err(err(last, format!("subset {missing} missing")));
    }
    if edges.len() != e {
        return Err(err(last, format!("expected {e} edges, found {}", edges.len())));
    }
    let subsets = subsets.into_iter().map(Option::unwrap).collect();
    Instance::new(n, subsets, &edges).map_err(|e| err(head_line, e.to_string()))
}

pub fn write_instance(inst: &Instance) -> String {
    let mut out = String::new();
    writeln!(out, "mcsc {} {} {}", inst.n(), inst.m(), inst.edges().len()).unwrap();
    for (i, s) in inst.subsets().iter().enumerate() {
        write!(out, "s {i} {}", s.len()).unwrap();
        for e in s {
            write!(out, " {e}").unwrap();
        }
        out.push('\n');
    }
    for (u, v) in inst.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

pub fn parse_cds(text: &str) -> Result<CdsGraph> {
    let mut it = lines(text);
    let (head_line, h) = header(&mut it, "cds", &["<n>", "<e>"])?;
    let (n, e) = (h[0], h[1]);
    let mut edges = Vec::with_capacity(e);
    let mut seen = BTreeSet::new();
    let mut last = head_line;
    for (line, toks) in it {
        last = line;
        if toks[0] != "e" {
            return Err(err(line, format!("unknown record `{}`", toks[0])));
        }
        if edges.len() == e {
            return Err(err(line, format!("more than {e} edges")));
        }
        edges.push(edge_line(&toks, line, n, &mut seen)?);
    }
    if edges.len() != e {
        return Err(err(last, format!("expected {e} edges, found {}", edges.len())));
    }
    CdsGraph::new(n, &edges).map_err(|e| err(head_line, e.to_string()))
}

pub fn write_cds(h: &CdsGraph) -> String {
    let mut out = format!("cds {} {}\n", h.vertex_count(), h.edges().len());
    for (u, v) in h.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

/// Parses a solution file. Ids are checked against an instance by the caller.
pub fn parse_solution(text: &str) -> Result<BTreeSet<SubsetId>> {
    let mut it = lines(text);
    let (head_line, h) = header(&mut it, "solution", &["<k>"])?;
    let mut ids = BTreeSet::new();
    let mut last = head_line;
    for (line, toks) in it {
        last = line;
        for t in toks {
            let id = num(t, line, "subset id")?;
            if !ids.insert(SubsetId(id)) {
                return Err(err(line, format!("subset {id} listed twice")));
            }
        }
    }
    if ids.len() != h[0] {
        return Err(err(last, format!("expected {} ids, found {}", h[0], ids.len())));
    }
    Ok(ids)
}

pub fn write_solution(ids: &BTreeSet<SubsetId>) -> String {
    let list: Vec<String> = ids.iter().map(ToString::to_string).collect();
    format!("solution {}\n{}\n", ids.len(), list.join(" "))
}
