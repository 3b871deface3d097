use num_bigint::BigUint;
use proptest::prelude::*;

use listhom::graph::{ColourGraph, ColourSet, Instance, InstanceGraph, ListAssignment};
use listhom::named;
use listhom::oracles::{count_1p1n, count_list_hcol, Clause};
use listhom::recognizer::{find_staircase_adjacency, find_staircase_biadjacency};
use listhom::reductions::{
    build_staircase_encoding, decode_assignment, encode_colouring, reduce_listhcol_to_1p1n,
    reduce_p4_to_p3star, StaircaseEncoding,
};

fn staircase_targets() -> Vec<ColourGraph> {
    vec![
        named::path(4),
        named::path(5),
        named::p3_star(),
        named::path(4).with_loops(),
        named::complete_bipartite(2, 2),
        ColourGraph::from_edges(6, &[(1, 4), (1, 5), (2, 4), (2, 5), (2, 6), (3, 6)]).unwrap(),
        ColourGraph::from_edges(5, &[(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (3, 5)])
            .unwrap()
            .with_loops(),
    ]
}

fn encoding(h: &ColourGraph) -> StaircaseEncoding {
    let sf = find_staircase_biadjacency(h)
        .or_else(|| find_staircase_adjacency(h))
        .expect("target is staircase");
    build_staircase_encoding(h, &sf).unwrap()
}

fn arb_instance(n: usize) -> impl Strategy<Value = Instance> {
    (1..=7usize)
        .prop_flat_map(move |m| {
            let pairs: Vec<(usize, usize)> = (1..=m)
                .flat_map(|u| (u + 1..=m).map(move |v| (u, v)))
                .collect();
            let len = pairs.len();
            (
                Just(m),
                prop::sample::subsequence(pairs, 0..=len.min(9)),
                prop::collection::vec(prop::collection::vec(any::<bool>(), n), m),
            )
        })
        .prop_map(move |(m, edges, bits)| {
            let g = InstanceGraph::new(m, &edges).unwrap();
            let sets: Vec<ColourSet> = bits
                .iter()
                .map(|row| (1..=n).filter(|&c| row[c - 1]).collect())
                .collect();
            Instance::new(g, ListAssignment::new(sets, n).unwrap(), n).unwrap()
        })
}

fn arb_target_and_instance() -> impl Strategy<Value = (ColourGraph, Instance)> {
    (0..staircase_targets().len()).prop_flat_map(|k| {
        let h = staircase_targets()[k].clone();
        let n = h.n();
        (Just(h), arb_instance(n))
    })
}

fn arb_bipartite_graph() -> impl Strategy<Value = InstanceGraph> {
    (1..=8usize)
        .prop_flat_map(|m| {
            (
                Just(m),
                prop::collection::vec(any::<bool>(), m),
                prop::collection::vec(any::<bool>(), m * m),
            )
        })
        .prop_map(|(m, side, bits)| {
            let mut edges = Vec::new();
            for u in 1..=m {
                for v in u + 1..=m {
                    if side[u - 1] != side[v - 1] && bits[(u - 1) * m + v - 1] {
                        edges.push((u, v));
                    }
                }
            }
            InstanceGraph::new(m, &edges).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn formula_counts_match((h, inst) in arb_target_and_instance()) {
        let enc = encoding(&h);
        let (f, _) = reduce_listhcol_to_1p1n(&enc, &inst).unwrap();
        prop_assert_eq!(count_1p1n(&f), count_list_hcol(&h, &inst).unwrap());
    }

    #[test]
    fn clause_counts((h, inst) in arb_target_and_instance()) {
        let enc = encoding(&h);
        prop_assume!(inst.graph.bipartition().is_some() || h.has_loop(1));
        let (f, vmap) = reduce_listhcol_to_1p1n(&enc, &inst).unwrap();
        let q = enc.q;
        let m = inst.graph.vertex_count();
        let forbidden: usize = (1..=m).map(|u| q - inst.lists.get(u).len()).sum();
        prop_assert_eq!(f.clauses().len(), (q + 2) * m + 2 * q * inst.graph.edge_count() + forbidden);
        prop_assert_eq!(f.var_count(), m * (q + 1));
        prop_assert_eq!(vmap.var_count(), f.var_count());
    }

    #[test]
    fn colourings_round_trip((h, inst) in arb_target_and_instance(), pick in any::<u64>()) {
        let enc = encoding(&h);
        let (f, vmap) = reduce_listhcol_to_1p1n(&enc, &inst).unwrap();
        let m = inst.graph.vertex_count();
        // a random map, kept only if it is a list colouring
        let mut seed = pick;
        let sigma: Vec<usize> = (0..m)
            .map(|_| {
                seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (seed >> 33) as usize % h.n() + 1
            })
            .collect();
        let valid = (1..=m).all(|u| inst.lists.get(u).contains(sigma[u - 1]))
            && inst.graph.edges().iter().all(|&(u, v)| h.adjacent(sigma[u - 1], sigma[v - 1]));
        let x = encode_colouring(&enc, &vmap, &sigma).unwrap();
        prop_assert_eq!(f.is_satisfied_by(&x), valid);
        prop_assert_eq!(decode_assignment(&enc, &vmap, &x).unwrap(), sigma);
    }

    #[test]
    fn p4_identity_on_bipartite_graphs(g in arb_bipartite_graph()) {
        let direct = count_list_hcol(&named::path(4), &Instance::full_lists(g.clone(), 4).unwrap()).unwrap();
        let (inst, multiplier) = reduce_p4_to_p3star(&g);
        let listed = count_list_hcol(&named::p3_star(), &inst).unwrap();
        prop_assert_eq!(&multiplier, &BigUint::from(2u32).pow(g.connected_components().len() as u32));
        prop_assert_eq!(direct, multiplier * listed);
    }
}

#[test]
fn edge_clauses_follow_the_fixed_orientation() {
    let h = named::path(4);
    let enc = encoding(&h);
    // vertex 2 is on the right, so the edge is oriented 1 -> 2
    let inst = Instance::full_lists(InstanceGraph::new(2, &[(2, 1)]).unwrap(), 4).unwrap();
    let (f, vmap) = reduce_listhcol_to_1p1n(&enc, &inst).unwrap();
    let first_edge_clause = f.clauses()[2 * (enc.q + 2)];
    assert_eq!(
        first_edge_clause,
        Clause::Imp(vmap.var(1, 0), vmap.var(2, enc.alpha[0] - 1))
    );
    assert!(vmap.uses_columns[1] && !vmap.uses_columns[0]);
}
