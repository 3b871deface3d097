//! Small named target graphs. Labels follow the usual figure conventions, so
//! the excluded patterns line up with their path gadgets in [`crate::catalog`].

use crate::graph::ColourGraph;

fn build(n: usize, edges: &[(usize, usize)]) -> ColourGraph {
    ColourGraph::from_edges(n, edges).expect("named graph edge list is valid")
}

/// Edge `1-2` with a loop on `2`.
pub fn k2_prime() -> ColourGraph {
    build(2, &[(1, 2), (2, 2)])
}

/// Colour `2` joined to `1`, `3`, `4`; loops on `2`, `3`, `4`.
pub fn two_wrench() -> ColourGraph {
    build(4, &[(1, 2), (2, 3), (2, 4), (2, 2), (3, 3), (4, 4)])
}

/// Reflexive path `1-2-3`.
pub fn p3_star() -> ColourGraph {
    path(3).with_loops()
}

/// Irreflexive path `1-2-...-n`.
pub fn path(n: usize) -> ColourGraph {
    let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    build(n, &edges)
}

/// Irreflexive cycle `1-2-...-n-1`, `n >= 3`.
pub fn cycle(n: usize) -> ColourGraph {
    assert!(n >= 3, "cycles need at least three vertices");
    let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    edges.push((1, n));
    build(n, &edges)
}

pub fn complete_reflexive(n: usize) -> ColourGraph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u..=n {
            edges.push((u, v));
        }
    }
    build(n, &edges)
}

/// Irreflexive `K_{a,b}` with sides `1..=a` and `a+1..=a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> ColourGraph {
    let mut edges = Vec::new();
    for u in 1..=a {
        for v in a + 1..=a + b {
            edges.push((u, v));
        }
    }
    build(a + b, &edges)
}

/// Centre `4`, leaves `1`, `2`, `3` (irreflexive).
pub fn claw() -> ColourGraph {
    build(4, &[(4, 1), (4, 2), (4, 3)])
}

/// Triangle `1-2-4` with pendants `5-1`, `6-2`, `3-4` (irreflexive).
pub fn net() -> ColourGraph {
    build(6, &[(5, 1), (1, 4), (4, 2), (2, 6), (3, 4), (1, 2)])
}

/// Inner triangle `1-2-5`, outer vertices `3`, `4`, `6` (irreflexive).
pub fn s3() -> ColourGraph {
    build(
        6,
        &[
            (4, 1),
            (1, 3),
            (3, 2),
            (2, 6),
            (6, 5),
            (5, 4),
            (1, 2),
            (2, 5),
            (5, 1),
        ],
    )
}

pub fn x3() -> ColourGraph {
    build(
        7,
        &[
            (6, 5),
            (5, 1),
            (1, 4),
            (4, 2),
            (2, 7),
            (7, 6),
            (6, 4),
            (4, 3),
        ],
    )
}

pub fn x2() -> ColourGraph {
    build(7, &[(1, 6), (6, 2), (2, 7), (2, 4), (4, 3), (4, 1), (1, 5)])
}

pub fn t2() -> ColourGraph {
    build(7, &[(6, 1), (1, 5), (5, 4), (4, 3), (5, 2), (2, 7)])
}
