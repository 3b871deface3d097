//! Target graphs, instance graphs and colour lists.
//!
//! Colours and instance vertices are 1-indexed throughout the public API.
//! A target graph `H` is small and stored as one neighbourhood bitmask per
//! colour; an instance graph `G` may be large and uses adjacency lists.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Largest colour count a [`ColourGraph`] can hold.
pub const MAX_COLOURS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a colour graph needs at least one colour")]
    NoColours,
    #[error("{0} colours requested, at most {MAX_COLOURS} are supported")]
    TooManyColours(usize),
    #[error("colour {colour} is out of range 1..={n}")]
    ColourOutOfRange { colour: usize, n: usize },
    #[error("vertex {vertex} is out of range 1..={m}")]
    VertexOutOfRange { vertex: usize, m: usize },
    #[error("edge {{{0}, {1}}} appears twice")]
    DuplicateEdge(usize, usize),
    #[error("instance graphs are loop-free, found loop on vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("adjacency matrix must be square")]
    NotSquare,
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("list assignment covers {lists} vertices but the graph has {vertices}")]
    ListCountMismatch { lists: usize, vertices: usize },
}

/// A set of colours drawn from `1..=MAX_COLOURS`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ColourSet(u64);

impl ColourSet {
    pub const EMPTY: ColourSet = ColourSet(0);

    /// All colours `1..=n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_COLOURS);
        if n == MAX_COLOURS {
            ColourSet(u64::MAX)
        } else {
            ColourSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(colour: usize) -> Self {
        debug_assert!((1..=MAX_COLOURS).contains(&colour));
        ColourSet(1u64 << (colour - 1))
    }

    pub fn from_bits(bits: u64) -> Self {
        ColourSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, colour: usize) -> bool {
        (1..=MAX_COLOURS).contains(&colour) && self.0 & (1u64 << (colour - 1)) != 0
    }

    pub fn insert(&mut self, colour: usize) {
        self.0 |= ColourSet::singleton(colour).0;
    }

    pub fn remove(&mut self, colour: usize) {
        self.0 &= !ColourSet::singleton(colour).0;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn intersection(self, other: ColourSet) -> ColourSet {
        ColourSet(self.0 & other.0)
    }

    pub fn union(self, other: ColourSet) -> ColourSet {
        ColourSet(self.0 | other.0)
    }

    pub fn is_subset(self, other: ColourSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Colours in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let c = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(c + 1)
            }
        })
    }

    /// Largest colour in the set, if any.
    pub fn max_colour(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(64 - self.0.leading_zeros() as usize)
        }
    }
}

impl FromIterator<usize> for ColourSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = ColourSet::EMPTY;
        for c in iter {
            set.insert(c);
        }
        set
    }
}

impl fmt::Debug for ColourSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ColourSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reflexivity {
    Reflexive,
    Irreflexive,
    Mixed,
}

/// A two-colouring of a graph's vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    in_left: Vec<bool>,
}

impl Bipartition {
    pub fn is_left(&self, v: usize) -> bool {
        self.in_left[v - 1]
    }
}

/// BFS two-colouring over vertices `1..=count`; each component's smallest
/// vertex lands on the left.
fn two_colour<F, I>(count: usize, neighbours: F) -> Option<Bipartition>
where
    F: Fn(usize) -> I,
    I: IntoIterator<Item = usize>,
{
    let mut side: Vec<Option<bool>> = vec![None; count];
    for start in 1..=count {
        if side[start - 1].is_some() {
            continue;
        }
        side[start - 1] = Some(true);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let su = side[u - 1].unwrap();
            for w in neighbours(u) {
                match side[w - 1] {
                    None => {
                        side[w - 1] = Some(!su);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let in_left: Vec<bool> = side.into_iter().map(|s| s.unwrap()).collect();
    let left = (1..=count).filter(|&v| in_left[v - 1]).collect();
    let right = (1..=count).filter(|&v| !in_left[v - 1]).collect();
    Some(Bipartition {
        left,
        right,
        in_left,
    })
}

fn components<F, I>(count: usize, neighbours: F) -> Vec<Vec<usize>>
where
    F: Fn(usize) -> I,
    I: IntoIterator<Item = usize>,
{
    let mut seen = vec![false; count];
    let mut out = Vec::new();
    for start in 1..=count {
        if seen[start - 1] {
            continue;
        }
        seen[start - 1] = true;
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for w in neighbours(u) {
                if !seen[w - 1] {
                    seen[w - 1] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// The target graph `H` over colours `1..=n`. A loop on colour `i` is an
/// adjacency of `i` with itself.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ColourGraph {
    n: usize,
    rows: Vec<ColourSet>,
}

impl ColourGraph {
    /// Edgeless graph on `n` colours.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoColours);
        }
        if n > MAX_COLOURS {
            return Err(GraphError::TooManyColours(n));
        }
        Ok(ColourGraph {
            n,
            rows: vec![ColourSet::EMPTY; n],
        })
    }

    /// Builds a graph from an edge list; `(v, v)` is a loop. Repeated edges
    /// are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut h = ColourGraph::empty(n)?;
        for &(u, v) in edges {
            for c in [u, v] {
                if c == 0 || c > n {
                    return Err(GraphError::ColourOutOfRange { colour: c, n });
                }
            }
            if h.adjacent(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            h.rows[u - 1].insert(v);
            h.rows[v - 1].insert(u);
        }
        Ok(h)
    }

    pub fn from_matrix(matrix: &[Vec<bool>]) -> Result<Self, GraphError> {
        let n = matrix.len();
        let mut h = ColourGraph::empty(n)?;
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(GraphError::NotSquare);
            }
            for (j, &x) in row.iter().enumerate() {
                if x != matrix[j][i] {
                    return Err(GraphError::NotSymmetric(i + 1, j + 1));
                }
                if x {
                    h.rows[i].insert(j + 1);
                }
            }
        }
        Ok(h)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn colours(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n && self.rows[u - 1].contains(v)
    }

    /// Neighbourhood of `u`, including `u` itself when it carries a loop.
    pub fn neighbours(&self, u: usize) -> ColourSet {
        self.rows[u - 1]
    }

    pub fn has_loop(&self, u: usize) -> bool {
        self.adjacent(u, u)
    }

    /// Edges `(u, v)` with `u <= v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for v in self.rows[u - 1].iter().filter(|&v| v >= u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Dense 0/1 adjacency matrix.
    pub fn matrix(&self) -> Vec<Vec<bool>> {
        (1..=self.n)
            .map(|u| (1..=self.n).map(|v| self.adjacent(u, v)).collect())
            .collect()
    }

    /// Same graph with a loop added on every colour.
    pub fn with_loops(&self) -> ColourGraph {
        let mut h = self.clone();
        for u in 1..=self.n {
            h.rows[u - 1].insert(u);
        }
        h
    }

    /// Same graph with every loop removed.
    pub fn without_loops(&self) -> ColourGraph {
        let mut h = self.clone();
        for u in 1..=self.n {
            h.rows[u - 1].remove(u);
        }
        h
    }

    /// Relabels colours: colour `v` becomes `perm[v - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> ColourGraph {
        assert_eq!(perm.len(), self.n, "relabelling must cover every colour");
        let mut h = ColourGraph {
            n: self.n,
            rows: vec![ColourSet::EMPTY; self.n],
        };
        for (u, v) in self.edges() {
            let (pu, pv) = (perm[u - 1], perm[v - 1]);
            h.rows[pu - 1].insert(pv);
            h.rows[pv - 1].insert(pu);
        }
        h
    }

    /// Disjoint union; colours of `other` are shifted up by `self.n()`.
    pub fn disjoint_union(&self, other: &ColourGraph) -> Result<ColourGraph, GraphError> {
        let shift = self.n;
        let mut edges = self.edges();
        edges.extend(
            other
                .edges()
                .into_iter()
                .map(|(u, v)| (u + shift, v + shift)),
        );
        ColourGraph::from_edges(self.n + other.n, &edges)
    }

    /// Maximal connected colour sets, each sorted, ordered by smallest member.
    /// Loops do not affect connectivity.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        components(self.n, |u| {
            let mut nb = self.rows[u - 1];
            nb.remove(u);
            nb.iter()
        })
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Subgraph induced on `verts`, relabelled `1..=|verts|` in ascending
    /// order of the original labels. Loops are kept.
    pub fn induced_subgraph(&self, verts: &[usize]) -> Result<ColourGraph, GraphError> {
        if verts.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        let mut sorted = verts.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &v in &sorted {
            if v == 0 || v > self.n {
                return Err(GraphError::ColourOutOfRange {
                    colour: v,
                    n: self.n,
                });
            }
        }
        let mut h = ColourGraph::empty(sorted.len())?;
        for (a, &u) in sorted.iter().enumerate() {
            for (b, &v) in sorted.iter().enumerate() {
                if self.adjacent(u, v) {
                    h.rows[a].insert(b + 1);
                }
            }
        }
        Ok(h)
    }

    pub fn reflexivity(&self) -> Reflexivity {
        let loops = (1..=self.n).filter(|&u| self.has_loop(u)).count();
        if loops == self.n {
            Reflexivity::Reflexive
        } else if loops == 0 {
            Reflexivity::Irreflexive
        } else {
            Reflexivity::Mixed
        }
    }

    /// Two-colouring of an irreflexive graph; `None` when there is a loop or
    /// an odd cycle.
    pub fn bipartition(&self) -> Option<Bipartition> {
        if (1..=self.n).any(|u| self.has_loop(u)) {
            return None;
        }
        two_colour(self.n, |u| self.rows[u - 1].iter())
    }

    /// Graph distances from `source` (loops ignored); `None` if unreachable.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source - 1] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u - 1].unwrap();
            for w in self.rows[u - 1].iter() {
                if dist[w - 1].is_none() {
                    dist[w - 1] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

impl fmt::Debug for ColourGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColourGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// A simple loop-free instance graph on vertices `1..=m`.
#[derive(Clone, PartialEq, Eq)]
pub struct InstanceGraph {
    m: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl InstanceGraph {
    /// Edges are normalised to `(min, max)` and kept in input order.
    pub fn new(m: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = InstanceGraph {
            m,
            edges: Vec::with_capacity(edges.len()),
            adj: vec![Vec::new(); m],
        };
        for &(u, v) in edges {
            g.push_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn edgeless(m: usize) -> Self {
        InstanceGraph {
            m,
            edges: Vec::new(),
            adj: vec![Vec::new(); m],
        }
    }

    pub(crate) fn add_vertex(&mut self) -> usize {
        self.m += 1;
        self.adj.push(Vec::new());
        self.m
    }

    pub(crate) fn push_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for x in [u, v] {
            if x == 0 || x > self.m {
                return Err(GraphError::VertexOutOfRange {
                    vertex: x,
                    m: self.m,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let (a, b) = (u.min(v), u.max(v));
        if self.adj[a - 1].contains(&b) {
            return Err(GraphError::DuplicateEdge(a, b));
        }
        self.adj[a - 1].push(b);
        self.adj[b - 1].push(a);
        self.edges.push((a, b));
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        components(self.m, |u| self.adj[u - 1].iter().copied())
    }

    /// Two-colouring with each component's smallest vertex on the left;
    /// `None` if the graph has an odd cycle.
    pub fn bipartition(&self) -> Option<Bipartition> {
        two_colour(self.m, |u| self.adj[u - 1].iter().copied())
    }
}

impl fmt::Debug for InstanceGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "InstanceGraph(m={}, edges={:?})", self.m, self.edges)
    }
}

/// Allowed colour set `S_v` for each instance vertex. Empty sets are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ListAssignment {
    sets: Vec<ColourSet>,
}

impl ListAssignment {
    pub fn full(m: usize, n: usize) -> Self {
        ListAssignment {
            sets: vec![ColourSet::full(n); m],
        }
    }

    pub fn new(sets: Vec<ColourSet>, n: usize) -> Result<Self, GraphError> {
        for set in &sets {
            if let Some(c) = set.max_colour() {
                if c > n {
                    return Err(GraphError::ColourOutOfRange { colour: c, n });
                }
            }
        }
        Ok(ListAssignment { sets })
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn get(&self, v: usize) -> ColourSet {
        self.sets[v - 1]
    }

    pub fn set(&mut self, v: usize, colours: ColourSet) {
        self.sets[v - 1] = colours;
    }

    pub(crate) fn push(&mut self, colours: ColourSet) {
        self.sets.push(colours);
    }

    pub fn as_slice(&self) -> &[ColourSet] {
        &self.sets
    }
}

/// A list H-colouring instance `(G, S)` bound to a colour count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: InstanceGraph,
    pub lists: ListAssignment,
    pub colour_count: usize,
}

impl Instance {
    pub fn new(
        graph: InstanceGraph,
        lists: ListAssignment,
        colour_count: usize,
    ) -> Result<Self, GraphError> {
        if lists.len() != graph.vertex_count() {
            return Err(GraphError::ListCountMismatch {
                lists: lists.len(),
                vertices: graph.vertex_count(),
            });
        }
        if colour_count == 0 {
            return Err(GraphError::NoColours);
        }
        if colour_count > MAX_COLOURS {
            return Err(GraphError::TooManyColours(colour_count));
        }
        for set in lists.as_slice() {
            if let Some(c) = set.max_colour() {
                if c > colour_count {
                    return Err(GraphError::ColourOutOfRange {
                        colour: c,
                        n: colour_count,
                    });
                }
            }
        }
        Ok(Instance {
            graph,
            lists,
            colour_count,
        })
    }

    /// Every vertex may take every colour.
    pub fn full_lists(graph: InstanceGraph, colour_count: usize) -> Result<Self, GraphError> {
        let lists = ListAssignment::full(graph.vertex_count(), colour_count);
        Instance::new(graph, lists, colour_count)
    }
}
