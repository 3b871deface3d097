//! Line-oriented text formats for targets, instances and formulas.
//!
//! Blank lines and lines starting with `#` or `c` are comments.
//!
//! ```text
//! h <n>           target with colours 1..=n
//! e <u> <v>       edge (loop when u = v)
//!
//! g <m>           instance graph on vertices 1..=m
//! e <u> <v>       edge
//! l <v> <c>...    list of vertex v (omitted: every colour)
//!
//! f <nvars>       formula over variables 1..=nvars
//! p <v> | n <v>   unit clause
//! i <a> <b>       a implies b
//! ```

use std::collections::HashSet;
use std::fmt::Write as _;

use listhom::graph::{ColourGraph, ColourSet, Instance, InstanceGraph, ListAssignment};
use listhom::oracles::{Clause, ImplicationFormula};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

type Record = (usize, String, Vec<usize>);
type ListRecord = (usize, usize, Vec<usize>);

/// Non-comment lines as `(line number, tag, numeric arguments)`.
fn records(text: &str) -> Result<Vec<Record>, ParseError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut words = raw.split_whitespace();
        let Some(tag) = words.next() else { continue };
        if tag.starts_with('#') || tag == "c" {
            continue;
        }
        let args = words
            .map(|w| {
                w.parse::<usize>()
                    .map_err(|_| err(line, format!("`{w}` is not a non-negative integer")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        out.push((line, tag.to_string(), args));
    }
    Ok(out)
}

fn header(recs: &[Record], want: &str) -> Result<usize, ParseError> {
    match recs.first() {
        Some((line, tag, args)) if tag == want => match args.as_slice() {
            [n] => Ok(*n),
            _ => Err(err(
                *line,
                format!("header `{want}` takes exactly one number"),
            )),
        },
        Some((line, tag, _)) => Err(err(
            *line,
            format!("expected header `{want}`, found `{tag}`"),
        )),
        None => Err(err(0, format!("missing header `{want}`"))),
    }
}

fn pair(line: usize, tag: &str, args: &[usize]) -> Result<(usize, usize), ParseError> {
    match args {
        [a, b] => Ok((*a, *b)),
        _ => Err(err(line, format!("`{tag}` takes exactly two numbers"))),
    }
}

fn single(line: usize, tag: &str, args: &[usize]) -> Result<usize, ParseError> {
    match args {
        [a] => Ok(*a),
        _ => Err(err(line, format!("`{tag}` takes exactly one number"))),
    }
}

pub fn parse_h(text: &str) -> Result<ColourGraph, ParseError> {
    let recs = records(text)?;
    let n = header(&recs, "h")?;
    ColourGraph::empty(n).map_err(|e| err(recs[0].0, e.to_string()))?;
    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    for (line, tag, args) in &recs[1..] {
        if tag != "e" {
            return Err(err(
                *line,
                format!("unknown record `{tag}` in a target file"),
            ));
        }
        let (u, v) = pair(*line, tag, args)?;
        if let Some(&c) = [u, v].iter().find(|&&c| c == 0 || c > n) {
            return Err(err(*line, format!("colour {c} is out of range 1..={n}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(*line, format!("edge {{{u}, {v}}} appears twice")));
        }
        edges.push((u, v));
    }
    ColourGraph::from_edges(n, &edges).map_err(|e| err(0, e.to_string()))
}

pub fn write_h(h: &ColourGraph) -> String {
    let mut out = format!("h {}\n", h.n());
    for (u, v) in h.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

fn graph_records(
    recs: &[Record],
    allow_lists: bool,
) -> Result<(InstanceGraph, Vec<ListRecord>), ParseError> {
    let m = header(recs, "g")?;
    let mut edges = Vec::new();
    let mut lists = Vec::new();
    for (line, tag, args) in &recs[1..] {
        match tag.as_str() {
            "e" => edges.push((*line, pair(*line, tag, args)?)),
            "l" if allow_lists => {
                let (&v, colours) = args
                    .split_first()
                    .ok_or_else(|| err(*line, "`l` needs a vertex"))?;
                lists.push((*line, v, colours.to_vec()));
            }
            "l" => return Err(err(*line, "lists are not used by this command")),
            other => {
                return Err(err(
                    *line,
                    format!("unknown record `{other}` in an instance file"),
                ))
            }
        }
    }
    let mut seen = HashSet::new();
    for &(line, (u, v)) in &edges {
        if let Some(&x) = [u, v].iter().find(|&&x| x == 0 || x > m) {
            return Err(err(line, format!("vertex {x} is out of range 1..={m}")));
        }
        if u == v {
            return Err(err(
                line,
                format!("instance graphs are loop-free, found loop on vertex {u}"),
            ));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(line, format!("edge {{{u}, {v}}} appears twice")));
        }
    }
    let all: Vec<(usize, usize)> = edges.into_iter().map(|(_, e)| e).collect();
    let g = InstanceGraph::new(m, &all).map_err(|x| err(0, x.to_string()))?;
    Ok((g, lists))
}

/// Instance file against a target with `n` colours.
pub fn parse_instance(text: &str, n: usize) -> Result<Instance, ParseError> {
    let recs = records(text)?;
    let (g, lists) = graph_records(&recs, true)?;
    let m = g.vertex_count();
    let mut sets = vec![None; m];
    for (line, v, colours) in lists {
        if v == 0 || v > m {
            return Err(err(line, format!("vertex {v} is out of range 1..={m}")));
        }
        if sets[v - 1].is_some() {
            return Err(err(line, format!("vertex {v} has two lists")));
        }
        if let Some(&c) = colours.iter().find(|&&c| c == 0 || c > n) {
            return Err(err(line, format!("colour {c} is out of range 1..={n}")));
        }
        sets[v - 1] = Some(colours.into_iter().collect::<ColourSet>());
    }
    let full = ColourSet::full(n);
    let sets = sets.into_iter().map(|s| s.unwrap_or(full)).collect();
    let lists = ListAssignment::new(sets, n).map_err(|e| err(0, e.to_string()))?;
    Instance::new(g, lists, n).map_err(|e| err(0, e.to_string()))
}

/// Instance file without `l` records, for the Ising commands.
pub fn parse_graph(text: &str) -> Result<InstanceGraph, ParseError> {
    let recs = records(text)?;
    Ok(graph_records(&recs, false)?.0)
}

pub fn write_graph(g: &InstanceGraph) -> String {
    let mut out = format!("g {}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

/// Lists equal to the full colour set are left implicit.
pub fn write_instance(inst: &Instance) -> String {
    let mut out = write_graph(&inst.graph);
    let full = ColourSet::full(inst.colour_count);
    for v in 1..=inst.graph.vertex_count() {
        let set = inst.lists.get(v);
        if set != full {
            write!(out, "l {v}").unwrap();
            for c in set.iter() {
                write!(out, " {c}").unwrap();
            }
            out.push('\n');
        }
    }
    out
}

pub fn parse_formula(text: &str) -> Result<ImplicationFormula, ParseError> {
    let recs = records(text)?;
    let nvars = header(&recs, "f")?;
    let mut f = ImplicationFormula::new(nvars);
    for (line, tag, args) in &recs[1..] {
        let clause = match tag.as_str() {
            "p" => Clause::Pos(single(*line, tag, args)?),
            "n" => Clause::Neg(single(*line, tag, args)?),
            "i" => {
                let (a, b) = pair(*line, tag, args)?;
                Clause::Imp(a, b)
            }
            other => {
                return Err(err(
                    *line,
                    format!("unknown record `{other}` in a formula file"),
                ))
            }
        };
        f.push(clause).map_err(|e| err(*line, e.to_string()))?;
    }
    Ok(f)
}

pub fn write_formula(f: &ImplicationFormula) -> String {
    let mut out = format!("f {}\n", f.var_count());
    for clause in f.clauses() {
        match *clause {
            Clause::Pos(v) => writeln!(out, "p {v}"),
            Clause::Neg(v) => writeln!(out, "n {v}"),
            Clause::Imp(a, b) => writeln!(out, "i {a} {b}"),
        }
        .unwrap();
    }
    out
}
