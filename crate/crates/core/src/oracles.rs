//! Exact counters used as ground truth by the gadget and reduction checks.
//!
//! Both backtracking counters split the not-yet-assigned part of the problem
//! into connected components after every assignment and multiply the
//! component counts. Results are exact big integers; no floating point is
//! involved anywhere.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::graph::{ColourGraph, ColourSet, Instance, InstanceGraph};

pub type BigCount = BigUint;

/// Ising components are enumerated spin by spin, so they are capped.
pub const MAX_ISING_COMPONENT: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("instance is bound to {instance} colours but H has {graph}")]
    ArityMismatch { instance: usize, graph: usize },
    #[error("lambda must lie strictly between 0 and 1, got {0}")]
    LambdaOutOfRange(String),
    #[error(
        "Ising component with {0} vertices exceeds the enumeration cap of {MAX_ISING_COMPONENT}"
    )]
    IsingTooLarge(usize),
    #[error("variable {var} is out of range 1..={var_count}")]
    VariableOutOfRange { var: usize, var_count: usize },
}

// ---------------------------------------------------------------------------
// list H-colourings

/// Number of maps `sigma: V(G) -> colours` with `sigma(v)` in `S_v` for every
/// vertex and adjacent images for every edge.
pub fn count_list_hcol(h: &ColourGraph, inst: &Instance) -> Result<BigCount, OracleError> {
    if inst.colour_count != h.n() {
        return Err(OracleError::ArityMismatch {
            instance: inst.colour_count,
            graph: h.n(),
        });
    }
    let g = &inst.graph;
    let mut search = ListSearch {
        h,
        g,
        domain: inst.lists.as_slice().to_vec(),
        active: vec![true; g.vertex_count()],
    };
    let all: Vec<usize> = (1..=g.vertex_count()).collect();
    Ok(search.count(&all))
}

struct ListSearch<'a> {
    h: &'a ColourGraph,
    g: &'a InstanceGraph,
    domain: Vec<ColourSet>,
    active: Vec<bool>,
}

impl ListSearch<'_> {
    fn count(&mut self, verts: &[usize]) -> BigUint {
        let mut total = BigUint::one();
        for comp in self.components(verts) {
            let c = self.count_component(&comp);
            if c.is_zero() {
                return c;
            }
            total *= c;
        }
        total
    }

    /// Components of the subgraph induced on the active vertices of `verts`.
    fn components(&self, verts: &[usize]) -> Vec<Vec<usize>> {
        let mut seen: Vec<usize> = Vec::new();
        let mut mark = std::collections::HashSet::new();
        let mut out = Vec::new();
        for &start in verts {
            if !self.active[start - 1] || !mark.insert(start) {
                continue;
            }
            seen.clear();
            seen.push(start);
            let mut i = 0;
            while i < seen.len() {
                let u = seen[i];
                i += 1;
                for &w in self.g.neighbours(u) {
                    if self.active[w - 1] && mark.insert(w) {
                        seen.push(w);
                    }
                }
            }
            out.push(seen.clone());
        }
        out
    }

    fn active_degree(&self, v: usize) -> usize {
        self.g
            .neighbours(v)
            .iter()
            .filter(|&&w| self.active[w - 1])
            .count()
    }

    fn count_component(&mut self, comp: &[usize]) -> BigUint {
        if comp.len() == 1 {
            return BigUint::from(self.domain[comp[0] - 1].len());
        }
        let pivot = *comp
            .iter()
            .max_by_key(|&&v| (self.active_degree(v), std::cmp::Reverse(v)))
            .unwrap();
        self.active[pivot - 1] = false;
        let rest: Vec<usize> = comp.iter().copied().filter(|&v| v != pivot).collect();
        let mut total = BigUint::zero();
        let mut saved: Vec<(usize, ColourSet)> = Vec::new();
        for colour in self.domain[pivot - 1].iter() {
            let allowed = self.h.neighbours(colour);
            saved.clear();
            let mut feasible = true;
            for &w in self.g.neighbours(pivot) {
                if !self.active[w - 1] {
                    continue;
                }
                saved.push((w, self.domain[w - 1]));
                let narrowed = self.domain[w - 1].intersection(allowed);
                self.domain[w - 1] = narrowed;
                if narrowed.is_empty() {
                    feasible = false;
                    break;
                }
            }
            if feasible {
                total += self.count(&rest);
            }
            for &(w, d) in saved.iter().rev() {
                self.domain[w - 1] = d;
            }
        }
        self.active[pivot - 1] = true;
        total
    }
}

// ---------------------------------------------------------------------------
// antiferromagnetic Ising partition function

/// `Z_lambda(G)`: sum over `+-1` spin assignments of `lambda` raised to the
/// number of monochromatic edges. Requires `0 < lambda < 1`.
pub fn ising_partition(
    g: &InstanceGraph,
    lambda: &BigRational,
) -> Result<BigRational, OracleError> {
    if *lambda <= BigRational::zero() || *lambda >= BigRational::one() {
        return Err(OracleError::LambdaOutOfRange(lambda.to_string()));
    }
    let mut z = BigRational::one();
    for comp in g.connected_components() {
        let poly = monochromatic_polynomial(g, &comp)?;
        let mut value = BigRational::zero();
        let mut power = BigRational::one();
        for coeff in poly {
            value += &power * BigRational::from_integer(BigInt::from(coeff));
            power *= lambda;
        }
        z *= value;
    }
    Ok(z)
}

/// Coefficient `k` counts spin assignments of the component with exactly `k`
/// monochromatic edges.
fn monochromatic_polynomial(g: &InstanceGraph, comp: &[usize]) -> Result<Vec<u64>, OracleError> {
    if comp.len() > MAX_ISING_COMPONENT {
        return Err(OracleError::IsingTooLarge(comp.len()));
    }
    let mut index = std::collections::HashMap::new();
    for (i, &v) in comp.iter().enumerate() {
        index.insert(v, i);
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter_map(|&(u, v)| Some((*index.get(&u)?, *index.get(&v)?)))
        .collect();
    let mut poly = vec![0u64; edges.len() + 1];
    for spins in 0u64..(1u64 << comp.len()) {
        let mono = edges
            .iter()
            .filter(|&&(a, b)| (spins >> a) & 1 == (spins >> b) & 1)
            .count();
        poly[mono] += 1;
    }
    Ok(poly)
}

// ---------------------------------------------------------------------------
// #1p1nSAT

/// A clause with at most one positive and at most one negative literal.
/// Variables are 1-indexed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Clause {
    /// `(x)`
    Pos(usize),
    /// `(not x)`
    Neg(usize),
    /// `(not a or b)`, i.e. `a` implies `b`.
    Imp(usize, usize),
}

impl Clause {
    pub fn vars(self) -> (usize, Option<usize>) {
        match self {
            Clause::Pos(v) | Clause::Neg(v) => (v, None),
            Clause::Imp(a, b) => (a, Some(b)),
        }
    }

    pub fn satisfied_by(self, assignment: &[bool]) -> bool {
        match self {
            Clause::Pos(v) => assignment[v - 1],
            Clause::Neg(v) => !assignment[v - 1],
            Clause::Imp(a, b) => !assignment[a - 1] || assignment[b - 1],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ImplicationFormula {
    var_count: usize,
    clauses: Vec<Clause>,
}

impl ImplicationFormula {
    pub fn new(var_count: usize) -> Self {
        ImplicationFormula {
            var_count,
            clauses: Vec::new(),
        }
    }

    pub fn with_clauses(var_count: usize, clauses: Vec<Clause>) -> Result<Self, OracleError> {
        let mut f = ImplicationFormula::new(var_count);
        for c in clauses {
            f.push(c)?;
        }
        Ok(f)
    }

    pub fn push(&mut self, clause: Clause) -> Result<(), OracleError> {
        let (a, b) = clause.vars();
        for v in std::iter::once(a).chain(b) {
            if v == 0 || v > self.var_count {
                return Err(OracleError::VariableOutOfRange {
                    var: v,
                    var_count: self.var_count,
                });
            }
        }
        self.clauses.push(clause);
        Ok(())
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    /// `assignment[v - 1]` is the value of variable `v`.
    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.satisfied_by(assignment))
    }
}

/// Number of satisfying 0/1 assignments.
pub fn count_1p1n(f: &ImplicationFormula) -> BigCount {
    let n = f.var_count;
    let mut search = SatSearch {
        implies: vec![Vec::new(); n],
        implied_by: vec![Vec::new(); n],
        value: vec![None; n],
        trail: Vec::new(),
    };
    let mut units = Vec::new();
    for &c in &f.clauses {
        match c {
            Clause::Pos(v) => units.push((v, true)),
            Clause::Neg(v) => units.push((v, false)),
            Clause::Imp(a, b) => {
                if a != b {
                    search.implies[a - 1].push(b);
                    search.implied_by[b - 1].push(a);
                }
            }
        }
    }
    for (v, val) in units {
        if !search.assign(v, val) {
            return BigUint::zero();
        }
    }
    let all: Vec<usize> = (1..=n).collect();
    search.count(&all)
}

struct SatSearch {
    implies: Vec<Vec<usize>>,
    implied_by: Vec<Vec<usize>>,
    value: Vec<Option<bool>>,
    trail: Vec<usize>,
}

impl SatSearch {
    /// Sets `v` and propagates along implications. Returns `false` on a
    /// conflict; the trail then holds the partial propagation for undoing.
    fn assign(&mut self, v: usize, val: bool) -> bool {
        let mut stack = vec![(v, val)];
        while let Some((x, xv)) = stack.pop() {
            match self.value[x - 1] {
                Some(cur) if cur == xv => continue,
                Some(_) => return false,
                None => {}
            }
            self.value[x - 1] = Some(xv);
            self.trail.push(x);
            if xv {
                stack.extend(self.implies[x - 1].iter().map(|&b| (b, true)));
            } else {
                stack.extend(self.implied_by[x - 1].iter().map(|&a| (a, false)));
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().unwrap();
            self.value[x - 1] = None;
        }
    }

    fn free_neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.implies[v - 1]
            .iter()
            .chain(self.implied_by[v - 1].iter())
            .copied()
            .filter(|&w| self.value[w - 1].is_none())
    }

    fn count(&mut self, vars: &[usize]) -> BigUint {
        let mut mark = std::collections::HashSet::new();
        let mut comps = Vec::new();
        for &start in vars {
            if self.value[start - 1].is_some() || !mark.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                let next: Vec<usize> = self
                    .free_neighbours(u)
                    .filter(|w| mark.insert(*w))
                    .collect();
                comp.extend(next);
            }
            comps.push(comp);
        }
        let mut total = BigUint::one();
        for comp in comps {
            let c = self.count_component(&comp);
            if c.is_zero() {
                return c;
            }
            total *= c;
        }
        total
    }

    fn count_component(&mut self, comp: &[usize]) -> BigUint {
        if comp.len() == 1 {
            return BigUint::from(2u32);
        }
        let pivot = *comp
            .iter()
            .max_by_key(|&&v| (self.free_neighbours(v).count(), std::cmp::Reverse(v)))
            .unwrap();
        let mut total = BigUint::zero();
        for val in [false, true] {
            let mark = self.trail.len();
            if self.assign(pivot, val) {
                total += self.count(comp);
            }
            self.undo_to(mark);
        }
        total
    }
}
