//! Path gadgets, their interaction matrices, symmetrisation, thickening and
//! the edge-replacement reduction from the antiferromagnetic Ising model.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{ColourGraph, ColourSet, GraphError, Instance, InstanceGraph, ListAssignment};
use crate::oracles::{count_list_hcol, BigCount, OracleError};

/// Largest thickening level that will be materialised.
pub const MAX_THICKEN_LEVEL: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("a path gadget needs at least two pairs, got {0}")]
    TooShort(usize),
    #[error("pair {index} repeats colour {colour}")]
    RepeatedColour { index: usize, colour: usize },
    #[error("path gadget violates its walk, crossing or end conditions on H")]
    InvalidGadget,
    #[error("symmetrisation needs a strictly positive interaction matrix, got {0}")]
    NonPositive(InteractionMatrix),
    #[error("permutation is not a transposing automorphism for the gadget")]
    BadAutomorphism,
    #[error("gadgets of length two would create parallel edges when symmetrised")]
    LengthTwo,
    #[error("no colours r', s' separate the terminal colours {0} and {1}")]
    ConditionUnavailable(usize, usize),
    #[error("({0}, {1}) does not separate the terminal colours")]
    NotSeparating(usize, usize),
    #[error("thickening level {t} exceeds the cap of {MAX_THICKEN_LEVEL}")]
    LevelTooLarge { t: u32 },
    #[error("reduction needs an interaction matrix [[a, b], [b, a]] with 0 < a < b, got {0}")]
    NotAntiferromagnetic(InteractionMatrix),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Sequence of ordered colour pairs `(i_k, j_k)`, `k = 1..=L`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PathGadget {
    pairs: Vec<(usize, usize)>,
}

impl PathGadget {
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self, GadgetError> {
        if pairs.len() < 2 {
            return Err(GadgetError::TooShort(pairs.len()));
        }
        if let Some((k, &(i, _))) = pairs.iter().enumerate().find(|(_, (i, j))| i == j) {
            return Err(GadgetError::RepeatedColour {
                index: k + 1,
                colour: i,
            });
        }
        Ok(PathGadget { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `(r, s) = (i_1, j_1)`.
    pub fn terminal_colours(&self) -> (usize, usize) {
        self.pairs[0]
    }

    /// The unordered list `{i_k, j_k}` of each path vertex.
    pub fn lists(&self) -> Vec<ColourSet> {
        self.pairs
            .iter()
            .map(|&(i, j)| [i, j].into_iter().collect())
            .collect()
    }

    /// Every colour mentioned by some pair.
    pub fn support(&self) -> ColourSet {
        self.lists()
            .into_iter()
            .fold(ColourSet::EMPTY, ColourSet::union)
    }

    /// Applies a colour permutation (`perm[c - 1]` is the image of `c`).
    pub fn map_colours(&self, perm: &[usize]) -> PathGadget {
        PathGadget {
            pairs: self
                .pairs
                .iter()
                .map(|&(i, j)| (perm[i - 1], perm[j - 1]))
                .collect(),
        }
    }
}

impl fmt::Display for PathGadget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, (i, j)) in self.pairs.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{{{i},{j}}}")?;
        }
        f.write_str(")")
    }
}

/// A 2x2 matrix of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InteractionMatrix {
    pub entries: [[BigUint; 2]; 2],
}

impl InteractionMatrix {
    pub fn new(entries: [[BigUint; 2]; 2]) -> Self {
        InteractionMatrix { entries }
    }

    pub fn from_u64(m: [[u64; 2]; 2]) -> Self {
        InteractionMatrix {
            entries: m.map(|row| row.map(BigUint::from)),
        }
    }

    pub fn identity() -> Self {
        InteractionMatrix::from_u64([[1, 0], [0, 1]])
    }

    pub fn get(&self, a: usize, b: usize) -> &BigUint {
        &self.entries[a][b]
    }

    pub fn det(&self) -> BigInt {
        let [[a, b], [c, d]] = &self.entries;
        BigInt::from(a * d) - BigInt::from(b * c)
    }

    pub fn swap_columns(&self) -> Self {
        let [[a, b], [c, d]] = self.entries.clone();
        InteractionMatrix {
            entries: [[b, a], [d, c]],
        }
    }

    pub fn mul(&self, other: &InteractionMatrix) -> Self {
        let e = |i: usize, j: usize| {
            &self.entries[i][0] * &other.entries[0][j] + &self.entries[i][1] * &other.entries[1][j]
        };
        InteractionMatrix {
            entries: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries[0][1] == self.entries[1][0]
    }

    pub fn is_positive(&self) -> bool {
        self.entries.iter().flatten().all(|x| !x.is_zero())
    }

    pub fn pow_entries(&self, exp: u32) -> Self {
        InteractionMatrix {
            entries: self.entries.clone().map(|row| row.map(|x| x.pow(exp))),
        }
    }
}

impl fmt::Display for InteractionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = &self.entries;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

impl Serialize for InteractionMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|x| x.to_string()).collect())
            .collect();
        rows.serialize(serializer)
    }
}

/// An explicit gadget: graph, lists and two terminals whose lists are both
/// `{r, s}`. `interaction` is the matrix the construction claims, indexed in
/// the order `(r, s)` at both terminals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetGraph {
    pub graph: InstanceGraph,
    pub lists: ListAssignment,
    pub terminals: (usize, usize),
    pub terminal_colours: (usize, usize),
    pub colour_count: usize,
    pub interaction: InteractionMatrix,
}

impl GadgetGraph {
    fn terminal_list(&self) -> ColourSet {
        [self.terminal_colours.0, self.terminal_colours.1]
            .into_iter()
            .collect()
    }

    /// Degree of the two terminals.
    pub fn terminal_degrees(&self) -> (usize, usize) {
        (
            self.graph.degree(self.terminals.0),
            self.graph.degree(self.terminals.1),
        )
    }

    /// Largest degree over non-terminal vertices.
    pub fn max_internal_degree(&self) -> usize {
        (1..=self.graph.vertex_count())
            .filter(|&v| v != self.terminals.0 && v != self.terminals.1)
            .map(|v| self.graph.degree(v))
            .max()
            .unwrap_or(0)
    }

    /// Whether both terminals carry exactly the two terminal colours.
    pub fn terminal_lists_ok(&self) -> bool {
        let want = self.terminal_list();
        want.len() == 2
            && self.lists.get(self.terminals.0) == want
            && self.lists.get(self.terminals.1) == want
    }
}

/// Accumulates vertices, edges and lists while stitching gadget copies.
struct Builder {
    graph: InstanceGraph,
    lists: ListAssignment,
}

impl Builder {
    fn new() -> Self {
        Builder {
            graph: InstanceGraph::edgeless(0),
            lists: ListAssignment::default(),
        }
    }

    fn vertex(&mut self, list: ColourSet) -> usize {
        self.lists.push(list);
        self.graph.add_vertex()
    }

    fn edge(&mut self, u: usize, v: usize) -> Result<(), GadgetError> {
        Ok(self.graph.push_edge(u, v)?)
    }

    /// Copies `gg` in, mapping its terminals onto `t1`, `t2`.
    fn embed(&mut self, gg: &GadgetGraph, t1: usize, t2: usize) -> Result<(), GadgetError> {
        let mut map = vec![0; gg.graph.vertex_count()];
        for v in 1..=gg.graph.vertex_count() {
            map[v - 1] = if v == gg.terminals.0 {
                t1
            } else if v == gg.terminals.1 {
                t2
            } else {
                self.vertex(gg.lists.get(v))
            };
        }
        for &(u, v) in gg.graph.edges() {
            self.edge(map[u - 1], map[v - 1])?;
        }
        Ok(())
    }

    fn finish(
        self,
        terminals: (usize, usize),
        terminal_colours: (usize, usize),
        colour_count: usize,
        interaction: InteractionMatrix,
    ) -> GadgetGraph {
        GadgetGraph {
            graph: self.graph,
            lists: self.lists,
            terminals,
            terminal_colours,
            colour_count,
            interaction,
        }
    }
}

// ---------------------------------------------------------------------------
// path gadgets

fn in_range(h: &ColourGraph, g: &PathGadget) -> bool {
    g.pairs
        .iter()
        .all(|&(i, j)| (1..=h.n()).contains(&i) && (1..=h.n()).contains(&j))
}

/// Checks the walk, crossing and end conditions of `g` on `h`.
pub fn validate_gadget(h: &ColourGraph, g: &PathGadget) -> bool {
    if !in_range(h, g) {
        return false;
    }
    let walks = g.pairs.windows(2).all(|w| {
        let ((i, j), (i2, j2)) = (w[0], w[1]);
        h.adjacent(i, i2) && h.adjacent(j, j2)
    });
    let no_cross = g.pairs.windows(2).all(|w| {
        let ((i, j), (i2, j2)) = (w[0], w[1]);
        !(h.adjacent(i, j2) && h.adjacent(j, i2))
    });
    let (i1, j1) = g.pairs[0];
    let (il, jl) = g.pairs[g.pairs.len() - 1];
    walks && no_cross && i1 == jl && j1 == il
}

fn check(h: &ColourGraph, g: &PathGadget) -> Result<(), GadgetError> {
    if validate_gadget(h, g) {
        Ok(())
    } else {
        Err(GadgetError::InvalidGadget)
    }
}

fn step_matrix(
    h: &ColourGraph,
    (i, j): (usize, usize),
    (i2, j2): (usize, usize),
) -> InteractionMatrix {
    let a = |u: usize, v: usize| u64::from(h.adjacent(u, v));
    InteractionMatrix::from_u64([[a(i, i2), a(i, j2)], [a(j, i2), a(j, j2)]])
}

/// `(D', D)`: the ordered product of the 2x2 adjacency blocks along the path,
/// and the same matrix with its columns swapped.
pub fn interaction_matrix(
    h: &ColourGraph,
    g: &PathGadget,
) -> Result<(InteractionMatrix, InteractionMatrix), GadgetError> {
    check(h, g)?;
    let dprime = g
        .pairs
        .windows(2)
        .fold(InteractionMatrix::identity(), |acc, w| {
            acc.mul(&step_matrix(h, w[0], w[1]))
        });
    let d = dprime.swap_columns();
    Ok((dprime, d))
}

/// The gadget realised as a path `1 - 2 - ... - L` with lists `{i_k, j_k}`.
pub fn path_gadget_graph(h: &ColourGraph, g: &PathGadget) -> Result<GadgetGraph, GadgetError> {
    let (_, d) = interaction_matrix(h, g)?;
    let mut b = Builder::new();
    for list in g.lists() {
        b.vertex(list);
    }
    for k in 1..g.len() {
        b.edge(k, k + 1)?;
    }
    Ok(b.finish((1, g.len()), g.terminal_colours(), h.n(), d))
}

/// Counts list colourings of `gg` with each terminal pinned to each terminal
/// colour in turn.
pub fn interaction_matrix_bruteforce(
    h: &ColourGraph,
    gg: &GadgetGraph,
) -> Result<InteractionMatrix, GadgetError> {
    let colours = [gg.terminal_colours.0, gg.terminal_colours.1];
    let mut entries: [[BigUint; 2]; 2] = Default::default();
    for (a, &ca) in colours.iter().enumerate() {
        for (b, &cb) in colours.iter().enumerate() {
            let mut lists = gg.lists.clone();
            lists.set(gg.terminals.0, ColourSet::singleton(ca));
            lists.set(gg.terminals.1, ColourSet::singleton(cb));
            let inst = Instance::new(gg.graph.clone(), lists, gg.colour_count)?;
            entries[a][b] = count_list_hcol(h, &inst)?;
        }
    }
    Ok(InteractionMatrix::new(entries))
}

// ---------------------------------------------------------------------------
// symmetrisation

/// Involutive automorphism of `h` exchanging `r` and `s`, lexicographically
/// first by image vector.
pub fn find_transposing_automorphism(h: &ColourGraph, r: usize, s: usize) -> Option<Vec<usize>> {
    fn consistent(h: &ColourGraph, perm: &[usize], v: usize) -> bool {
        let w = perm[v - 1];
        if h.has_loop(v) != h.has_loop(w) || h.neighbours(v).len() != h.neighbours(w).len() {
            return false;
        }
        (1..=perm.len()).all(|x| perm[x - 1] == 0 || h.adjacent(v, x) == h.adjacent(w, perm[x - 1]))
    }

    fn rec(h: &ColourGraph, perm: &mut Vec<usize>, v: usize) -> bool {
        if v > h.n() {
            return true;
        }
        if perm[v - 1] != 0 {
            return rec(h, perm, v + 1);
        }
        for w in v..=h.n() {
            if perm[w - 1] != 0 {
                continue;
            }
            perm[v - 1] = w;
            perm[w - 1] = v;
            if consistent(h, perm, v) && consistent(h, perm, w) && rec(h, perm, v + 1) {
                return true;
            }
            perm[v - 1] = 0;
            perm[w - 1] = 0;
        }
        false
    }

    if r == s || r == 0 || s == 0 || r > h.n() || s > h.n() {
        return None;
    }
    let mut perm = vec![0; h.n()];
    perm[r - 1] = s;
    perm[s - 1] = r;
    if !consistent(h, &perm, r) || !consistent(h, &perm, s) {
        return None;
    }
    rec(h, &mut perm, 1).then_some(perm)
}

/// Whether `pi` is an involution of the colours exchanging the gadget's
/// terminal colours and preserving adjacency (loops included) on its support.
pub fn is_transposing_for(h: &ColourGraph, g: &PathGadget, pi: &[usize]) -> bool {
    if pi.len() != h.n() || pi.iter().any(|&c| c == 0 || c > h.n()) {
        return false;
    }
    if (1..=h.n()).any(|c| pi[pi[c - 1] - 1] != c) {
        return false;
    }
    let (r, s) = g.terminal_colours();
    if pi[r - 1] != s {
        return false;
    }
    let support: Vec<usize> = g.support().iter().collect();
    support.iter().all(|&x| {
        support
            .iter()
            .all(|&y| h.adjacent(x, y) == h.adjacent(pi[x - 1], pi[y - 1]))
    })
}

/// Parallel composition of the path gadget and its image under `pi`, the
/// first vertices identified and the last vertices identified. Returns the
/// composite with `D*_{ab} = D_{ab} D_{(3-a)(3-b)}`.
pub fn symmetrize(
    h: &ColourGraph,
    g: &PathGadget,
    pi: &[usize],
) -> Result<(GadgetGraph, InteractionMatrix), GadgetError> {
    let (_, d) = interaction_matrix(h, g)?;
    if !d.is_positive() {
        return Err(GadgetError::NonPositive(d));
    }
    if !in_range(h, g) || !is_transposing_for(h, g, pi) {
        return Err(GadgetError::BadAutomorphism);
    }
    let image = g.map_colours(pi);
    if !validate_gadget(h, &image) {
        return Err(GadgetError::BadAutomorphism);
    }
    if g.len() == 2 {
        return Err(GadgetError::LengthTwo);
    }
    let [[d11, d12], [d21, d22]] = &d.entries;
    let dstar = InteractionMatrix::new([[d11 * d22, d12 * d21], [d21 * d12, d22 * d11]]);

    let (r, s) = g.terminal_colours();
    let terminal_list: ColourSet = [r, s].into_iter().collect();
    let mut b = Builder::new();
    let (t1, t2) = (b.vertex(terminal_list), b.vertex(terminal_list));
    b.embed(&path_gadget_graph(h, g)?, t1, t2)?;
    b.embed(&path_gadget_graph(h, &image)?, t1, t2)?;
    Ok((b.finish((t1, t2), (r, s), h.n(), dstar.clone()), dstar))
}

// ---------------------------------------------------------------------------
// thickening

/// Colours `(r', s')` with `r ~ r'`, `r !~ s'`, `s ~ s'`, `s !~ r'`, scanning
/// `r'` then `s'` in ascending order.
pub fn check_cond_h(h: &ColourGraph, r: usize, s: usize) -> Option<(usize, usize)> {
    if r == s {
        return None;
    }
    let rp = h
        .colours()
        .find(|&c| h.adjacent(r, c) && !h.adjacent(s, c))?;
    let sp = h
        .colours()
        .find(|&c| h.adjacent(s, c) && !h.adjacent(r, c))?;
    Some((rp, sp))
}

/// Whether `r ~ r'`, `r !~ s'`, `s ~ s'` and `s !~ r'`.
pub fn is_separating_pair(
    h: &ColourGraph,
    (r, s): (usize, usize),
    (rp, sp): (usize, usize),
) -> bool {
    let ok = |c: usize| (1..=h.n()).contains(&c);
    ok(r)
        && ok(s)
        && ok(rp)
        && ok(sp)
        && rp != sp
        && h.adjacent(r, rp)
        && !h.adjacent(r, sp)
        && h.adjacent(s, sp)
        && !h.adjacent(s, rp)
}

fn with_pendants(
    h: &ColourGraph,
    gg: &GadgetGraph,
    colours: (usize, usize),
    interaction: InteractionMatrix,
    copies: usize,
) -> Result<GadgetGraph, GadgetError> {
    let mut b = Builder::new();
    let inner: ColourSet = [gg.terminal_colours.0, gg.terminal_colours.1]
        .into_iter()
        .collect();
    let outer: ColourSet = [colours.0, colours.1].into_iter().collect();
    let (x, y) = (b.vertex(inner), b.vertex(inner));
    for _ in 0..copies {
        b.embed(gg, x, y)?;
    }
    let (u, v) = (b.vertex(outer), b.vertex(outer));
    b.edge(u, x)?;
    b.edge(y, v)?;
    Ok(b.finish((u, v), colours, h.n(), interaction))
}

/// Bounded-degree gadget of level `t`. Level 0 hangs a pendant terminal with
/// list `{r', s'}` off each terminal of `base`; level `t + 1` places two
/// copies of level `t` in parallel and hangs fresh pendants whose lists
/// alternate between `{r, s}` and `{r', s'}`. The claimed matrix is the
/// entrywise `2^t` power of the base matrix.
pub fn thicken(
    h: &ColourGraph,
    base: &GadgetGraph,
    rp_sp: (usize, usize),
    t: u32,
) -> Result<GadgetGraph, GadgetError> {
    if t > MAX_THICKEN_LEVEL {
        return Err(GadgetError::LevelTooLarge { t });
    }
    let rs = base.terminal_colours;
    if !is_separating_pair(h, rs, rp_sp) {
        return Err(GadgetError::NotSeparating(rp_sp.0, rp_sp.1));
    }
    if !base.interaction.is_positive() {
        return Err(GadgetError::NonPositive(base.interaction.clone()));
    }
    let mut current = with_pendants(h, base, rp_sp, base.interaction.clone(), 1)?;
    for level in 0..t {
        let colours = if level % 2 == 0 { rs } else { rp_sp };
        let squared = current.interaction.pow_entries(2);
        current = with_pendants(h, &current, colours, squared, 2)?;
    }
    Ok(current)
}

// ---------------------------------------------------------------------------
// reduction from the Ising model

/// Replaces every edge `{u, v}` of `g` by a fresh copy of `gg` with its
/// terminals on `u` and `v`. Every original vertex gets the terminal list.
/// With interaction `[[a, b], [b, a]]` the list count equals
/// `b^|E| * Z_{a/b}(g)`.
pub fn reduce_ising_to_listhcol(
    g: &InstanceGraph,
    gg: &GadgetGraph,
) -> Result<(Instance, BigRational, BigCount), GadgetError> {
    let m = &gg.interaction;
    let (a, b) = (m.get(0, 0), m.get(0, 1));
    if !m.is_symmetric() || m.get(1, 1) != a || a.is_zero() || a >= b || !gg.terminal_lists_ok() {
        return Err(GadgetError::NotAntiferromagnetic(m.clone()));
    }
    let terminal_list = gg.terminal_list();
    let mut builder = Builder::new();
    for _ in 0..g.vertex_count() {
        builder.vertex(terminal_list);
    }
    for &(u, v) in g.edges() {
        builder.embed(gg, u, v)?;
    }
    let inst = Instance::new(builder.graph, builder.lists, gg.colour_count)?;
    let lambda = BigRational::new(BigInt::from(a.clone()), BigInt::from(b.clone()));
    let scale = num_traits::pow(b.clone(), g.edge_count());
    Ok((inst, lambda, scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use crate::oracles::ising_partition;
    use num_traits::One;

    fn gadget(pairs: &[(usize, usize)]) -> PathGadget {
        PathGadget::new(pairs.to_vec()).unwrap()
    }

    fn x3_gadget() -> PathGadget {
        gadget(&[(1, 2), (4, 7), (3, 6), (4, 5), (2, 1)])
    }

    fn m(e: [[u64; 2]; 2]) -> InteractionMatrix {
        InteractionMatrix::from_u64(e)
    }

    #[test]
    fn construction_checks() {
        assert_eq!(PathGadget::new(vec![(1, 2)]), Err(GadgetError::TooShort(1)));
        assert_eq!(
            PathGadget::new(vec![(1, 2), (3, 3)]),
            Err(GadgetError::RepeatedColour {
                index: 2,
                colour: 3
            })
        );
        assert_eq!(x3_gadget().to_string(), "({1,2},{4,7},{3,6},{4,5},{2,1})");
    }

    #[test]
    fn validation() {
        assert!(validate_gadget(&named::x3(), &x3_gadget()));
        assert!(!validate_gadget(&named::claw(), &x3_gadget()));
        assert!(validate_gadget(
            &named::cycle(3),
            &gadget(&[(1, 2), (2, 1)])
        ));
        // crossing step on a triangle
        assert!(!validate_gadget(
            &named::cycle(3),
            &gadget(&[(1, 2), (3, 1), (2, 1)])
        ));
    }

    #[test]
    fn matrices_from_products() {
        let (dp, d) = interaction_matrix(&named::x3(), &x3_gadget()).unwrap();
        assert_eq!(dp, m([[2, 3], [3, 5]]));
        assert_eq!(d, m([[3, 2], [5, 3]]));
        assert_eq!(dp.det(), BigInt::from(1));
        assert_eq!(d.det(), BigInt::from(-1));

        let (dp, d) = interaction_matrix(&named::cycle(3), &gadget(&[(1, 2), (2, 1)])).unwrap();
        assert_eq!((dp, d), (m([[1, 0], [0, 1]]), m([[0, 1], [1, 0]])));

        assert!(interaction_matrix(&named::claw(), &x3_gadget()).is_err());
    }

    #[test]
    fn brute_force_agrees_on_paths() {
        let h = named::x3();
        let gg = path_gadget_graph(&h, &x3_gadget()).unwrap();
        assert_eq!(
            interaction_matrix_bruteforce(&h, &gg).unwrap(),
            m([[3, 2], [5, 3]])
        );
        let c3 = named::cycle(3);
        let gg = path_gadget_graph(&c3, &gadget(&[(1, 2), (2, 1)])).unwrap();
        assert_eq!(
            interaction_matrix_bruteforce(&c3, &gg).unwrap(),
            m([[0, 1], [1, 0]])
        );
    }

    #[test]
    fn automorphisms() {
        assert_eq!(
            find_transposing_automorphism(&named::x3(), 1, 2),
            Some(vec![2, 1, 3, 4, 7, 6, 5])
        );
        assert_eq!(
            find_transposing_automorphism(&named::claw(), 1, 2),
            Some(vec![2, 1, 3, 4])
        );
        assert_eq!(find_transposing_automorphism(&named::path(4), 1, 3), None);
        assert_eq!(
            find_transposing_automorphism(&named::k2_prime(), 1, 2),
            None
        );
        assert_eq!(find_transposing_automorphism(&named::claw(), 2, 2), None);
    }

    #[test]
    fn symmetrised_x3() {
        let h = named::x3();
        let pi = find_transposing_automorphism(&h, 1, 2).unwrap();
        let (gg, dstar) = symmetrize(&h, &x3_gadget(), &pi).unwrap();
        assert_eq!(dstar, m([[9, 10], [10, 9]]));
        assert_eq!(interaction_matrix_bruteforce(&h, &gg).unwrap(), dstar);
        assert_eq!(gg.terminal_degrees(), (2, 2));
        assert_eq!(gg.max_internal_degree(), 2);
        assert!(dstar.det() < BigInt::zero());
    }

    #[test]
    fn symmetrize_rejections() {
        let h = named::x3();
        let identity: Vec<usize> = (1..=7).collect();
        assert_eq!(
            symmetrize(&h, &x3_gadget(), &identity).unwrap_err(),
            GadgetError::BadAutomorphism
        );
        let c3 = named::cycle(3);
        let (_, d) = interaction_matrix(&c3, &gadget(&[(1, 2), (2, 1)])).unwrap();
        assert_eq!(
            symmetrize(&c3, &gadget(&[(1, 2), (2, 1)]), &[2, 1, 3]).unwrap_err(),
            GadgetError::NonPositive(d)
        );
    }

    #[test]
    fn condition_pairs() {
        assert_eq!(check_cond_h(&named::x2(), 1, 2), Some((5, 7)));
        assert_eq!(check_cond_h(&named::s3().with_loops(), 1, 2), Some((4, 6)));
        assert_eq!(check_cond_h(&named::cycle(3), 1, 2), Some((2, 1)));
        assert_eq!(check_cond_h(&named::complete_reflexive(3), 1, 2), None);
    }

    #[test]
    fn thickened_x3() {
        let h = named::x3();
        let pi = find_transposing_automorphism(&h, 1, 2).unwrap();
        let (base, _) = symmetrize(&h, &x3_gadget(), &pi).unwrap();
        let rp_sp = check_cond_h(&h, 1, 2).unwrap();
        assert_eq!(rp_sp, (5, 7));

        let t0 = thicken(&h, &base, rp_sp, 0).unwrap();
        assert_eq!(t0.terminal_colours, (5, 7));
        assert_eq!(t0.interaction, m([[9, 10], [10, 9]]));
        assert_eq!(
            interaction_matrix_bruteforce(&h, &t0).unwrap(),
            t0.interaction
        );

        let t1 = thicken(&h, &base, rp_sp, 1).unwrap();
        assert_eq!(t1.terminal_colours, (1, 2));
        assert_eq!(
            interaction_matrix_bruteforce(&h, &t1).unwrap(),
            m([[81, 100], [100, 81]])
        );
        assert_eq!(
            (t1.terminal_degrees(), t1.max_internal_degree()),
            ((1, 1), 3)
        );

        assert_eq!(
            thicken(&h, &base, rp_sp, 9).unwrap_err(),
            GadgetError::LevelTooLarge { t: 9 }
        );
        assert_eq!(
            thicken(&h, &base, (7, 5), 0).unwrap_err(),
            GadgetError::NotSeparating(7, 5)
        );
    }

    #[test]
    fn ising_edge_replacement() {
        let h = named::x3();
        let pi = find_transposing_automorphism(&h, 1, 2).unwrap();
        let (gg, _) = symmetrize(&h, &x3_gadget(), &pi).unwrap();

        let k2 = InstanceGraph::new(2, &[(1, 2)]).unwrap();
        let (inst, lambda, scale) = reduce_ising_to_listhcol(&k2, &gg).unwrap();
        assert_eq!(count_list_hcol(&h, &inst).unwrap(), BigUint::from(38u32));
        assert_eq!(lambda, BigRational::new(9.into(), 10.into()));
        assert_eq!(scale, BigUint::from(10u32));

        let single = InstanceGraph::edgeless(1);
        let (inst, _, scale) = reduce_ising_to_listhcol(&single, &gg).unwrap();
        assert_eq!(count_list_hcol(&h, &inst).unwrap(), BigUint::from(2u32));
        assert_eq!(scale, BigUint::one());

        let p3 = InstanceGraph::new(3, &[(1, 2), (2, 3)]).unwrap();
        let (inst, lambda, scale) = reduce_ising_to_listhcol(&p3, &gg).unwrap();
        let z = ising_partition(&p3, &lambda).unwrap();
        assert_eq!(
            BigRational::from_integer(count_list_hcol(&h, &inst).unwrap().into()),
            z * BigRational::from_integer(scale.into())
        );
    }

    #[test]
    fn ising_rejects_non_antiferromagnetic() {
        let h = named::x3();
        let gg = path_gadget_graph(&h, &x3_gadget()).unwrap();
        let k2 = InstanceGraph::new(2, &[(1, 2)]).unwrap();
        assert_eq!(
            reduce_ising_to_listhcol(&k2, &gg).unwrap_err(),
            GadgetError::NotAntiferromagnetic(m([[3, 2], [5, 3]]))
        );
    }
}
