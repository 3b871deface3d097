//! Trichotomy classification of a target graph with dual certificates.
//!
//! Bipartite permutation graphs and proper interval graphs are recognised
//! twice: once by searching for a staircase ordering of the (bi)adjacency
//! matrix and once by searching for an excluded induced subgraph. The two
//! searches are independent so each can be used to check the other.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::graph::{ColourGraph, Reflexivity};
use crate::named;

/// Row/column orderings that put a matrix of `H` into staircase form.
///
/// `rows` and `cols` hold colour labels in matrix order. For an adjacency
/// certificate `rows == cols`. `alpha[i]`/`beta[i]` are the 1-based first and
/// last columns holding a 1 in row `i`; an all-zero row reports `0` for both.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StaircaseForm {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

impl StaircaseForm {
    /// The permuted 0/1 matrix `M[i][j] = adj(rows[i], cols[j])`.
    pub fn matrix(&self, h: &ColourGraph) -> Vec<Vec<bool>> {
        self.rows
            .iter()
            .map(|&r| self.cols.iter().map(|&c| h.adjacent(r, c)).collect())
            .collect()
    }

    fn bounds_match(&self, h: &ColourGraph) -> bool {
        match is_staircase(&self.matrix(h)) {
            Some((a, b)) => a == self.alpha && b == self.beta,
            None => false,
        }
    }

    /// Checks that this is a biadjacency certificate for `h`: `rows` and
    /// `cols` split the colours into two independent sides and the permuted
    /// biadjacency matrix is in staircase form with the recorded bounds.
    pub fn certifies_biadjacency(&self, h: &ColourGraph) -> bool {
        let mut seen = vec![0u8; h.n()];
        for &c in self.rows.iter().chain(&self.cols) {
            if c == 0 || c > h.n() {
                return false;
            }
            seen[c - 1] += 1;
        }
        if seen.iter().any(|&x| x != 1) {
            return false;
        }
        let independent = |side: &[usize]| {
            side.iter()
                .all(|&u| side.iter().all(|&v| !h.adjacent(u, v)))
        };
        independent(&self.rows) && independent(&self.cols) && self.bounds_match(h)
    }

    /// Checks that this is an adjacency certificate for reflexive `h`.
    pub fn certifies_adjacency(&self, h: &ColourGraph) -> bool {
        if self.rows != self.cols || self.rows.len() != h.n() {
            return false;
        }
        let mut sorted = self.rows.clone();
        sorted.sort_unstable();
        sorted == (1..=h.n()).collect::<Vec<_>>()
            && h.reflexivity() == Reflexivity::Reflexive
            && self.bounds_match(h)
    }

    fn relabel(&self, map: &[usize]) -> StaircaseForm {
        StaircaseForm {
            rows: self.rows.iter().map(|&c| map[c - 1]).collect(),
            cols: self.cols.iter().map(|&c| map[c - 1]).collect(),
            alpha: self.alpha.clone(),
            beta: self.beta.clone(),
        }
    }
}

/// Excluded induced subgraphs of the two hereditary classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PatternKind {
    X3,
    X2,
    T2,
    /// Irreflexive cycle of length other than four.
    CycleNe4(usize),
    Claw,
    Net,
    S3,
    /// Reflexive cycle of length at least four.
    CycleGe4(usize),
}

impl PatternKind {
    /// Excluded for bipartite permutation graphs (irreflexive patterns).
    pub fn is_bipartite_permutation_kind(self) -> bool {
        matches!(
            self,
            PatternKind::X3 | PatternKind::X2 | PatternKind::T2 | PatternKind::CycleNe4(_)
        )
    }

    /// Whether the kind names a real pattern (cycle lengths in range).
    pub fn is_valid(self) -> bool {
        match self {
            PatternKind::CycleNe4(l) => l >= 3 && l != 4,
            PatternKind::CycleGe4(l) => l >= 4,
            _ => true,
        }
    }

    /// The pattern graph, looped exactly when it is a proper-interval pattern.
    pub fn pattern(self) -> ColourGraph {
        assert!(self.is_valid(), "invalid pattern kind {self}");
        match self {
            PatternKind::X3 => named::x3(),
            PatternKind::X2 => named::x2(),
            PatternKind::T2 => named::t2(),
            PatternKind::CycleNe4(l) => named::cycle(l),
            PatternKind::Claw => named::claw().with_loops(),
            PatternKind::Net => named::net().with_loops(),
            PatternKind::S3 => named::s3().with_loops(),
            PatternKind::CycleGe4(l) => named::cycle(l).with_loops(),
        }
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternKind::X3 => write!(f, "x3"),
            PatternKind::X2 => write!(f, "x2"),
            PatternKind::T2 => write!(f, "t2"),
            PatternKind::CycleNe4(l) => write!(f, "cycle-ne4:{l}"),
            PatternKind::Claw => write!(f, "claw"),
            PatternKind::Net => write!(f, "net"),
            PatternKind::S3 => write!(f, "s3"),
            PatternKind::CycleGe4(l) => write!(f, "cycle-ge4:{l}"),
        }
    }
}

impl FromStr for PatternKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().to_ascii_lowercase();
        let kind = match s.as_str() {
            "x3" => PatternKind::X3,
            "x2" => PatternKind::X2,
            "t2" => PatternKind::T2,
            "claw" => PatternKind::Claw,
            "net" => PatternKind::Net,
            "s3" => PatternKind::S3,
            other => {
                let (name, len) = other
                    .split_once(':')
                    .ok_or_else(|| format!("unknown pattern kind `{other}`"))?;
                let len: usize = len
                    .parse()
                    .map_err(|_| format!("bad cycle length `{len}`"))?;
                match name {
                    "cycle-ne4" => PatternKind::CycleNe4(len),
                    "cycle-ge4" => PatternKind::CycleGe4(len),
                    _ => return Err(format!("unknown pattern kind `{other}`")),
                }
            }
        };
        if kind.is_valid() {
            Ok(kind)
        } else {
            Err(format!("invalid cycle length in `{s}`"))
        }
    }
}

/// An induced copy of an excluded pattern: pattern vertex `k` sits on colour
/// `embedding[k - 1]` of the host.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExcludedWitness {
    pub kind: PatternKind,
    pub embedding: Vec<usize>,
}

impl ExcludedWitness {
    /// Re-induces the embedding in `h` and compares against the pattern,
    /// adjacency, non-adjacency and loops included.
    pub fn revalidate(&self, h: &ColourGraph) -> bool {
        if !self.kind.is_valid() {
            return false;
        }
        let pattern = self.kind.pattern();
        embedding_matches(&pattern, h, &self.embedding)
    }

    fn relabel(&self, map: &[usize]) -> ExcludedWitness {
        ExcludedWitness {
            kind: self.kind,
            embedding: self.embedding.iter().map(|&c| map[c - 1]).collect(),
        }
    }
}

fn embedding_matches(pattern: &ColourGraph, h: &ColourGraph, embedding: &[usize]) -> bool {
    if embedding.len() != pattern.n() || embedding.iter().any(|&c| c == 0 || c > h.n()) {
        return false;
    }
    let mut sorted = embedding.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != embedding.len() {
        return false;
    }
    pattern.colours().all(|a| {
        pattern
            .colours()
            .all(|b| pattern.adjacent(a, b) == h.adjacent(embedding[a - 1], embedding[b - 1]))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Complexity {
    PolyTime,
    BisEquivalent,
    SatEquivalent,
}

impl fmt::Display for Complexity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Complexity::PolyTime => "PolyTime",
            Complexity::BisEquivalent => "BisEquivalent",
            Complexity::SatEquivalent => "SatEquivalent",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Certificate {
    CompleteReflexive,
    CompleteBipartiteIrreflexive,
    StaircaseBiadjacency {
        form: StaircaseForm,
    },
    StaircaseAdjacency {
        form: StaircaseForm,
    },
    Excluded {
        witness: ExcludedWitness,
    },
    /// Induced `K2'`: an edge with a loop on exactly one endpoint.
    MixedLoops {
        unlooped: usize,
        looped: usize,
    },
    /// Disconnected target; see the per-component results.
    Components,
}

impl Certificate {
    fn relabel(&self, map: &[usize]) -> Certificate {
        match self {
            Certificate::StaircaseBiadjacency { form } => Certificate::StaircaseBiadjacency {
                form: form.relabel(map),
            },
            Certificate::StaircaseAdjacency { form } => Certificate::StaircaseAdjacency {
                form: form.relabel(map),
            },
            Certificate::Excluded { witness } => Certificate::Excluded {
                witness: witness.relabel(map),
            },
            Certificate::MixedLoops { unlooped, looped } => Certificate::MixedLoops {
                unlooped: map[unlooped - 1],
                looped: map[looped - 1],
            },
            other => other.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentClassification {
    pub colours: Vec<usize>,
    pub result: TrichotomyResult,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrichotomyResult {
    pub class: Complexity,
    pub certificate: Certificate,
    /// Smallest degree bound from which hardness is proven; `None` for
    /// polynomial-time targets.
    pub degree_threshold: Option<u32>,
    /// Filled only for disconnected targets, in original colour labels.
    pub components: Vec<ComponentClassification>,
}

// ---------------------------------------------------------------------------
// staircase form

/// Checks staircase form of `mat` as given. Returns 1-based `(alpha, beta)`
/// per row; all-zero rows report `0` and so may only precede nonzero rows.
pub fn is_staircase(mat: &[Vec<bool>]) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut alpha = Vec::with_capacity(mat.len());
    let mut beta = Vec::with_capacity(mat.len());
    for row in mat {
        let first = row.iter().position(|&x| x);
        let (a, b) = match first {
            None => (0, 0),
            Some(f) => {
                let last = row.iter().rposition(|&x| x).unwrap();
                if row[f..=last].iter().any(|&x| !x) {
                    return None;
                }
                (f + 1, last + 1)
            }
        };
        if let (Some(&pa), Some(&pb)) = (alpha.last(), beta.last()) {
            if a < pa || b < pb {
                return None;
            }
        }
        alpha.push(a);
        beta.push(b);
    }
    Some((alpha, beta))
}

/// Backtracking over orderings of `count` items such that every set (bitmask
/// over items) stays contiguous. `twin_of[x]` names an earlier identical item
/// that must be placed first. `accept` is tried on every complete ordering.
fn search_orderings(
    count: usize,
    sets: &[u64],
    twin_of: &[Option<usize>],
    accept: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    struct State<'a> {
        sets: &'a [u64],
        totals: Vec<u32>,
        placed: Vec<u32>,
        last_in: Vec<bool>,
        used: u64,
        order: Vec<usize>,
    }

    fn rec(
        st: &mut State<'_>,
        count: usize,
        twin_of: &[Option<usize>],
        accept: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if st.order.len() == count {
            return accept(&st.order);
        }
        for x in 0..count {
            if st.used >> x & 1 == 1 {
                continue;
            }
            if let Some(t) = twin_of[x] {
                if st.used >> t & 1 == 0 {
                    continue;
                }
            }
            let ok = st.sets.iter().enumerate().all(|(s, &mask)| {
                let inside = mask >> x & 1 == 1;
                let placed = st.placed[s];
                if inside {
                    placed == 0 || st.last_in[s]
                } else {
                    placed == 0 || placed == st.totals[s]
                }
            });
            if !ok {
                continue;
            }
            let saved_last = st.last_in.clone();
            for (s, &mask) in st.sets.iter().enumerate() {
                let inside = mask >> x & 1 == 1;
                if inside {
                    st.placed[s] += 1;
                }
                st.last_in[s] = inside;
            }
            st.used |= 1 << x;
            st.order.push(x);
            if rec(st, count, twin_of, accept) {
                return true;
            }
            st.order.pop();
            st.used &= !(1 << x);
            for (s, &mask) in st.sets.iter().enumerate() {
                if mask >> x & 1 == 1 {
                    st.placed[s] -= 1;
                }
            }
            st.last_in = saved_last;
        }
        false
    }

    let mut st = State {
        sets,
        totals: sets.iter().map(|m| m.count_ones()).collect(),
        placed: vec![0; sets.len()],
        last_in: vec![false; sets.len()],
        used: 0,
        order: Vec::with_capacity(count),
    };
    rec(&mut st, count, twin_of, accept)
}

fn twins(signatures: &[u64]) -> Vec<Option<usize>> {
    (0..signatures.len())
        .map(|x| (0..x).rev().find(|&y| signatures[y] == signatures[x]))
        .collect()
}

/// Row and column orderings putting the biadjacency matrix of an irreflexive
/// bipartite `h` into staircase form; `None` if `h` is not a bipartite
/// permutation graph (or not irreflexive bipartite at all).
pub fn find_staircase_biadjacency(h: &ColourGraph) -> Option<StaircaseForm> {
    let bip = h.bipartition()?;
    let (zero_rows, rows): (Vec<usize>, Vec<usize>) =
        bip.left.iter().partition(|&&u| h.neighbours(u).is_empty());
    let cols = &bip.right;
    // sets[s] = rows adjacent to column s
    let sets: Vec<u64> = cols
        .iter()
        .map(|&c| {
            rows.iter()
                .enumerate()
                .filter(|(_, &r)| h.adjacent(r, c))
                .fold(0u64, |m, (i, _)| m | 1 << i)
        })
        .collect();
    let row_sig: Vec<u64> = rows.iter().map(|&r| h.neighbours(r).bits()).collect();
    let twin_of = twins(&row_sig);
    let mut found = None;
    search_orderings(rows.len(), &sets, &twin_of, &mut |order| {
        let ordered_rows: Vec<usize> = zero_rows
            .iter()
            .copied()
            .chain(order.iter().map(|&i| rows[i]))
            .collect();
        let mut keyed: Vec<((usize, usize), usize)> = cols
            .iter()
            .map(|&c| {
                let hits: Vec<usize> = order
                    .iter()
                    .enumerate()
                    .filter(|(_, &i)| h.adjacent(rows[i], c))
                    .map(|(p, _)| p + 1)
                    .collect();
                let key = match (hits.first(), hits.last()) {
                    (Some(&a), Some(&b)) => (a, b),
                    _ => (0, 0),
                };
                (key, c)
            })
            .collect();
        keyed.sort_unstable();
        let ordered_cols: Vec<usize> = keyed.into_iter().map(|(_, c)| c).collect();
        let form = StaircaseForm {
            rows: ordered_rows,
            cols: ordered_cols,
            alpha: Vec::new(),
            beta: Vec::new(),
        };
        match is_staircase(&form.matrix(h)) {
            Some((alpha, beta)) => {
                found = Some(StaircaseForm {
                    alpha,
                    beta,
                    ..form
                });
                true
            }
            None => false,
        }
    });
    found
}

/// A vertex ordering putting the adjacency matrix of reflexive `h` into
/// staircase form; `None` if `h` is not a proper interval graph (or not
/// reflexive).
pub fn find_staircase_adjacency(h: &ColourGraph) -> Option<StaircaseForm> {
    if h.reflexivity() != Reflexivity::Reflexive {
        return None;
    }
    let n = h.n();
    let sets: Vec<u64> = h.colours().map(|c| h.neighbours(c).bits()).collect();
    let twin_of = twins(&sets);
    let mut found = None;
    search_orderings(n, &sets, &twin_of, &mut |order| {
        let labels: Vec<usize> = order.iter().map(|&i| i + 1).collect();
        let form = StaircaseForm {
            rows: labels.clone(),
            cols: labels,
            alpha: Vec::new(),
            beta: Vec::new(),
        };
        match is_staircase(&form.matrix(h)) {
            Some((alpha, beta)) => {
                found = Some(StaircaseForm {
                    alpha,
                    beta,
                    ..form
                });
                true
            }
            None => false,
        }
    });
    found
}

// ---------------------------------------------------------------------------
// excluded induced subgraphs

/// First induced embedding of `pattern` in `host`, exploring pattern vertices
/// in label order and host colours in ascending order.
pub fn find_induced_embedding(pattern: &ColourGraph, host: &ColourGraph) -> Option<Vec<usize>> {
    fn rec(
        pattern: &ColourGraph,
        host: &ColourGraph,
        map: &mut Vec<usize>,
        used: &mut u64,
    ) -> bool {
        let k = map.len() + 1;
        if k > pattern.n() {
            return true;
        }
        for c in host.colours() {
            if *used >> (c - 1) & 1 == 1 || pattern.has_loop(k) != host.has_loop(c) {
                continue;
            }
            let consistent = map
                .iter()
                .enumerate()
                .all(|(j, &img)| pattern.adjacent(k, j + 1) == host.adjacent(c, img));
            if !consistent {
                continue;
            }
            map.push(c);
            *used |= 1 << (c - 1);
            if rec(pattern, host, map, used) {
                return true;
            }
            *used &= !(1 << (c - 1));
            map.pop();
        }
        false
    }
    if pattern.n() > host.n() {
        return None;
    }
    let mut map = Vec::with_capacity(pattern.n());
    let mut used = 0u64;
    rec(pattern, host, &mut map, &mut used).then_some(map)
}

fn find_kind(h: &ColourGraph, kind: PatternKind) -> Option<ExcludedWitness> {
    find_induced_embedding(&kind.pattern(), h).map(|embedding| ExcludedWitness { kind, embedding })
}

/// Searches `h` for one specific pattern kind.
pub fn find_witness_of_kind(h: &ColourGraph, kind: PatternKind) -> Option<ExcludedWitness> {
    if !kind.is_valid() {
        return None;
    }
    find_kind(h, kind)
}

/// Excluded subgraph for bipartite permutation graphs. Search order: cycles
/// of length `3, 5, 6, ...`, then `X3`, `X2`, `T2`. Requires irreflexive `h`.
pub fn find_excluded_bp(h: &ColourGraph) -> Option<ExcludedWitness> {
    if h.reflexivity() != Reflexivity::Irreflexive {
        return None;
    }
    (3..=h.n())
        .filter(|&l| l != 4)
        .map(PatternKind::CycleNe4)
        .chain([PatternKind::X3, PatternKind::X2, PatternKind::T2])
        .find_map(|kind| find_kind(h, kind))
}

/// Excluded subgraph for proper interval graphs. Search order: claw, net,
/// `S3`, then cycles of length `4, 5, ...`. Requires reflexive `h`.
pub fn find_excluded_pi(h: &ColourGraph) -> Option<ExcludedWitness> {
    if h.reflexivity() != Reflexivity::Reflexive {
        return None;
    }
    [PatternKind::Claw, PatternKind::Net, PatternKind::S3]
        .into_iter()
        .chain((4..=h.n()).map(PatternKind::CycleGe4))
        .find_map(|kind| find_kind(h, kind))
}

/// Shortest odd cycle of an irreflexive graph. A shortest odd cycle has no
/// chord, so it is induced.
pub fn find_odd_cycle(h: &ColourGraph) -> Option<ExcludedWitness> {
    if h.reflexivity() != Reflexivity::Irreflexive {
        return None;
    }
    (3..=h.n())
        .step_by(2)
        .map(PatternKind::CycleNe4)
        .find_map(|kind| find_kind(h, kind))
}

// ---------------------------------------------------------------------------
// predicates and small induced patterns

pub fn is_complete_reflexive(h: &ColourGraph) -> bool {
    h.colours().all(|u| h.colours().all(|v| h.adjacent(u, v)))
}

/// Connected irreflexive `K_{a,b}`; the single unlooped vertex counts.
pub fn is_complete_bipartite_irreflexive(h: &ColourGraph) -> bool {
    if !h.is_connected() {
        return false;
    }
    match h.bipartition() {
        Some(bip) => bip
            .left
            .iter()
            .all(|&u| bip.right.iter().all(|&v| h.adjacent(u, v))),
        None => false,
    }
}

/// Edge `(u, v)`, `u < v`, with a loop on exactly one endpoint. Requires
/// connected `h` with mixed loops.
pub fn find_induced_k2prime(h: &ColourGraph) -> Option<(usize, usize)> {
    if h.reflexivity() != Reflexivity::Mixed || !h.is_connected() {
        return None;
    }
    h.edges()
        .into_iter()
        .find(|&(u, v)| u != v && h.has_loop(u) != h.has_loop(v))
}

/// Closest non-adjacent pair, in lexicographic order among ties.
fn closest_non_adjacent(
    h: &ColourGraph,
    eligible: impl Fn(usize, usize) -> bool,
) -> Option<(usize, usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for i in h.colours() {
        let dist = h.distances_from(i);
        for j in i + 1..=h.n() {
            if h.adjacent(i, j) || !eligible(i, j) {
                continue;
            }
            if let Some(d) = dist[j - 1] {
                if best.is_none_or(|(bd, _, _)| d < bd) {
                    best = Some((d, i, j));
                }
            }
        }
    }
    best
}

/// Induced reflexive path `(i, k, j)` in a reflexive, connected, non-complete
/// `h`: the closest non-adjacent pair is at distance two.
pub fn find_induced_p3star(h: &ColourGraph) -> Option<(usize, usize, usize)> {
    if h.reflexivity() != Reflexivity::Reflexive || !h.is_connected() || is_complete_reflexive(h) {
        return None;
    }
    let (d, i, j) = closest_non_adjacent(h, |_, _| true)?;
    debug_assert_eq!(d, 2);
    let common = h.neighbours(i).intersection(h.neighbours(j));
    let k = common.iter().find(|&k| k != i && k != j)?;
    Some((i, k, j))
}

/// Induced `P4` in an irreflexive, connected, bipartite graph that is not
/// complete bipartite: the closest non-adjacent pair on opposite sides is at
/// distance three, and a shortest path between them is induced.
pub fn find_induced_p4(h: &ColourGraph) -> Option<[usize; 4]> {
    let bip = h.bipartition()?;
    if !h.is_connected() || is_complete_bipartite_irreflexive(h) {
        return None;
    }
    let (d, i, j) = closest_non_adjacent(h, |a, b| bip.is_left(a) != bip.is_left(b))?;
    debug_assert_eq!(d, 3);
    let to_j = h.distances_from(j);
    let a = h.neighbours(i).iter().find(|&a| to_j[a - 1] == Some(2))?;
    let b = h.neighbours(a).iter().find(|&b| to_j[b - 1] == Some(1))?;
    Some([i, a, b, j])
}

// ---------------------------------------------------------------------------
// classification

const BIS_THRESHOLD: u32 = 6;
const MIXED_SAT_THRESHOLD: u32 = 6;
const PURE_SAT_THRESHOLD: u32 = 3;

fn classify_connected(h: &ColourGraph) -> (Complexity, Certificate, Option<u32>) {
    match h.reflexivity() {
        Reflexivity::Mixed => {
            let (u, v) =
                find_induced_k2prime(h).expect("connected mixed graph contains an induced K2'");
            let (unlooped, looped) = if h.has_loop(u) { (v, u) } else { (u, v) };
            (
                Complexity::SatEquivalent,
                Certificate::MixedLoops { unlooped, looped },
                Some(MIXED_SAT_THRESHOLD),
            )
        }
        Reflexivity::Reflexive => {
            if is_complete_reflexive(h) {
                (Complexity::PolyTime, Certificate::CompleteReflexive, None)
            } else if let Some(form) = find_staircase_adjacency(h) {
                (
                    Complexity::BisEquivalent,
                    Certificate::StaircaseAdjacency { form },
                    Some(BIS_THRESHOLD),
                )
            } else {
                let witness = find_excluded_pi(h)
                    .expect("reflexive graph without staircase ordering has an excluded subgraph");
                (
                    Complexity::SatEquivalent,
                    Certificate::Excluded { witness },
                    Some(PURE_SAT_THRESHOLD),
                )
            }
        }
        Reflexivity::Irreflexive => {
            if is_complete_bipartite_irreflexive(h) {
                (
                    Complexity::PolyTime,
                    Certificate::CompleteBipartiteIrreflexive,
                    None,
                )
            } else if h.bipartition().is_none() {
                let witness = find_odd_cycle(h).expect("non-bipartite graph has an odd cycle");
                (
                    Complexity::SatEquivalent,
                    Certificate::Excluded { witness },
                    Some(PURE_SAT_THRESHOLD),
                )
            } else if let Some(form) = find_staircase_biadjacency(h) {
                (
                    Complexity::BisEquivalent,
                    Certificate::StaircaseBiadjacency { form },
                    Some(BIS_THRESHOLD),
                )
            } else {
                let witness = find_excluded_bp(h)
                    .expect("bipartite graph without staircase form has an excluded subgraph");
                (
                    Complexity::SatEquivalent,
                    Certificate::Excluded { witness },
                    Some(PURE_SAT_THRESHOLD),
                )
            }
        }
    }
}

/// Classifies `h` into the trichotomy. A disconnected target is classified
/// component by component and takes the hardest component class.
pub fn classify(h: &ColourGraph) -> TrichotomyResult {
    let comps = h.connected_components();
    if comps.len() == 1 {
        let (class, certificate, degree_threshold) = classify_connected(h);
        return TrichotomyResult {
            class,
            certificate,
            degree_threshold,
            components: Vec::new(),
        };
    }
    let components: Vec<ComponentClassification> = comps
        .into_iter()
        .map(|colours| {
            let sub = h.induced_subgraph(&colours).expect("component is nonempty");
            let (class, certificate, degree_threshold) = classify_connected(&sub);
            ComponentClassification {
                result: TrichotomyResult {
                    class,
                    certificate: certificate.relabel(&colours),
                    degree_threshold,
                    components: Vec::new(),
                },
                colours,
            }
        })
        .collect();
    let class = components.iter().map(|c| c.result.class).max().unwrap();
    let degree_threshold = components
        .iter()
        .filter(|c| c.result.class == class)
        .filter_map(|c| c.result.degree_threshold)
        .min();
    TrichotomyResult {
        class,
        certificate: Certificate::Components,
        degree_threshold,
        components,
    }
}
