//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use listhom::catalog::{build_report, gadget_catalog, identity_witness, standard_kinds};
use listhom::gadgets::{
    check_cond_h, interaction_matrix_bruteforce, reduce_ising_to_listhcol, symmetrize, thicken,
    InteractionMatrix,
};
use listhom::graph::{ColourGraph, ColourSet, Instance, InstanceGraph, ListAssignment};
use listhom::named;
use listhom::oracles::{count_1p1n, count_list_hcol, ising_partition, Clause, ImplicationFormula};
use listhom::recognizer::{
    classify, find_excluded_bp, find_excluded_pi, find_staircase_adjacency,
    find_staircase_biadjacency, Complexity, PatternKind,
};
use listhom::reductions::{
    build_staircase_encoding, decode_assignment, encode_colouring, reduce_listhcol_to_1p1n,
    reduce_p4_to_p3star,
};

type Outcome = Result<String, String>;

fn m(e: [[u64; 2]; 2]) -> InteractionMatrix {
    InteractionMatrix::from_u64(e)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn expected_dprime(kind: PatternKind) -> InteractionMatrix {
    match kind {
        PatternKind::X3 | PatternKind::Claw | PatternKind::Net => m([[2, 3], [3, 5]]),
        PatternKind::X2 => m([[5, 8], [8, 13]]),
        PatternKind::T2 => m([[5, 7], [7, 10]]),
        PatternKind::S3 => m([[1, 1], [1, 2]]),
        PatternKind::CycleNe4(q) if q % 2 == 0 => m([[1, 2], [1, 3]]),
        PatternKind::CycleNe4(_) => m([[2, 1], [1, 1]]),
        PatternKind::CycleGe4(_) => m([[1, 2], [1, 3]]),
    }
}

fn criterion_1() -> Outcome {
    for kind in standard_kinds() {
        let (h, w) = identity_witness(kind);
        let r = build_report(&h, &w, None).map_err(|e| format!("{kind}: {e}"))?;
        ensure(r.dprime == expected_dprime(kind), || {
            format!("{kind}: D' = {}", r.dprime)
        })?;
        ensure(r.d == r.d_bruteforce, || {
            format!("{kind}: D = {} vs brute force {}", r.d, r.d_bruteforce)
        })?;
    }
    Ok(format!(
        "{} gadgets reproduce D' and agree with brute force",
        standard_kinds().len()
    ))
}

fn criterion_2() -> Outcome {
    for kind in standard_kinds() {
        let (h, w) = identity_witness(kind);
        let r = build_report(&h, &w, None).map_err(|e| format!("{kind}: {e}"))?;
        ensure(r.dprime.det() == BigInt::from(1), || {
            format!("{kind}: det D' = {}", r.dprime.det())
        })?;
        ensure(r.d.det() == BigInt::from(-1), || {
            format!("{kind}: det D = {}", r.d.det())
        })?;
        ensure(r.dstar.is_symmetric(), || {
            format!("{kind}: D* = {} not symmetric", r.dstar)
        })?;
        ensure(r.dstar.det() < BigInt::zero(), || {
            format!("{kind}: det D* = {}", r.dstar.det())
        })?;
        ensure(r.dstar == r.dstar_bruteforce, || {
            format!("{kind}: D* brute force {}", r.dstar_bruteforce)
        })?;
    }
    Ok("det D' = 1, det D = -1, D* symmetric with negative determinant".into())
}

fn criterion_3() -> Outcome {
    let expect = [
        (PatternKind::X3, [[9, 10], [10, 9]]),
        (PatternKind::X2, [[64, 65], [65, 64]]),
        (PatternKind::T2, [[49, 50], [50, 49]]),
        (PatternKind::CycleNe4(6), [[2, 3], [3, 2]]),
        (PatternKind::CycleNe4(8), [[2, 3], [3, 2]]),
        (PatternKind::CycleNe4(3), [[1, 2], [2, 1]]),
        (PatternKind::CycleNe4(5), [[1, 2], [2, 1]]),
        (PatternKind::CycleNe4(7), [[1, 2], [2, 1]]),
    ];
    for (kind, want) in expect {
        let (h, w) = identity_witness(kind);
        let r = build_report(&h, &w, None).map_err(|e| format!("{kind}: {e}"))?;
        ensure(r.dstar == m(want), || format!("{kind}: D* = {}", r.dstar))?;
        ensure(r.dstar_bruteforce == m(want), || {
            format!("{kind}: brute-force D* = {}", r.dstar_bruteforce)
        })?;
    }
    Ok(format!("{} symmetrised matrices match", expect.len()))
}

fn criterion_4() -> Outcome {
    let mut checked = 0;
    let mut c3_note = String::new();
    for kind in standard_kinds() {
        let (h, w) = identity_witness(kind);
        let entry = gadget_catalog(&w).map_err(|e| e.to_string())?;
        let (r, s) = entry.terminal_colours;
        let Some(pair) = check_cond_h(&h, r, s) else {
            if kind == PatternKind::CycleNe4(3) {
                c3_note = "; C3 admits no separating pair".into();
            }
            continue;
        };
        if kind == PatternKind::CycleNe4(3) {
            c3_note = format!("; C3 is separated by {pair:?}");
        }
        let pi = entry.host_automorphism(h.n());
        let (base, dstar) =
            symmetrize(&h, &entry.gadget, &pi).map_err(|e| format!("{kind}: {e}"))?;
        for t in 0..=2u32 {
            let gg = thicken(&h, &base, pair, t).map_err(|e| format!("{kind} t={t}: {e}"))?;
            let want = dstar.pow_entries(1 << t);
            let brute = interaction_matrix_bruteforce(&h, &gg).map_err(|e| e.to_string())?;
            ensure(brute == want, || {
                format!("{kind} t={t}: brute force {brute}, expected {want}")
            })?;
            ensure(gg.interaction == want, || {
                format!("{kind} t={t}: claimed {}", gg.interaction)
            })?;
            ensure(gg.terminal_degrees() == (1, 1), || {
                format!("{kind} t={t}: terminals {:?}", gg.terminal_degrees())
            })?;
            ensure(gg.max_internal_degree() <= 3, || {
                format!("{kind} t={t}: internal degree {}", gg.max_internal_degree())
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} thickened gadgets verified{c3_note}"))
}

fn random_graph(rng: &mut ChaCha8Rng, max_vertices: usize, max_edges: usize) -> InstanceGraph {
    let m = rng.gen_range(1..=max_vertices);
    let mut pairs: Vec<(usize, usize)> = (1..=m)
        .flat_map(|u| (u + 1..=m).map(move |v| (u, v)))
        .collect();
    let keep = rng.gen_range(0..=pairs.len().min(max_edges));
    for i in 0..keep {
        let j = rng.gen_range(i..pairs.len());
        pairs.swap(i, j);
    }
    pairs.truncate(keep);
    InstanceGraph::new(m, &pairs).unwrap()
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let graphs: Vec<InstanceGraph> = (0..30).map(|_| random_graph(&mut rng, 6, 8)).collect();
    for (kind, a, b) in [(PatternKind::X3, 9u32, 10u32), (PatternKind::Claw, 9, 10)] {
        let (h, w) = identity_witness(kind);
        let r = build_report(&h, &w, None).map_err(|e| e.to_string())?;
        ensure(
            r.dstar == m([[a.into(), b.into()], [b.into(), a.into()]]),
            || format!("{kind}: D* = {}", r.dstar),
        )?;
        for g in &graphs {
            let (inst, lambda, scale) =
                reduce_ising_to_listhcol(g, &r.symmetrised).map_err(|e| e.to_string())?;
            ensure(lambda == BigRational::new(a.into(), b.into()), || {
                format!("{kind}: lambda {lambda}")
            })?;
            ensure(scale == BigUint::from(b).pow(g.edge_count() as u32), || {
                format!("{kind}: scale {scale}")
            })?;
            let count = count_list_hcol(&h, &inst).map_err(|e| e.to_string())?;
            let z = ising_partition(g, &lambda).map_err(|e| e.to_string())?;
            let rhs = z * BigRational::from_integer(BigInt::from(scale));
            ensure(
                BigRational::from_integer(BigInt::from(count.clone())) == rhs,
                || format!("{kind}: {g:?} gives {count} but b^|E| Z = {rhs}"),
            )?;
        }
    }
    Ok("60 edge-replacement identities hold exactly".into())
}

/// Every list colouring of `inst`, up to `cap` of them.
fn colourings(h: &ColourGraph, inst: &Instance, cap: usize) -> Vec<Vec<usize>> {
    fn rec(
        h: &ColourGraph,
        inst: &Instance,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) {
        if out.len() >= cap {
            return;
        }
        let v = cur.len() + 1;
        if v > inst.graph.vertex_count() {
            out.push(cur.clone());
            return;
        }
        for c in inst.lists.get(v).iter() {
            if inst
                .graph
                .neighbours(v)
                .iter()
                .all(|&w| w > cur.len() || h.adjacent(c, cur[w - 1]))
            {
                cur.push(c);
                rec(h, inst, cur, out, cap);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(h, inst, &mut Vec::new(), &mut out, cap);
    out
}

fn random_instance(rng: &mut ChaCha8Rng, n: usize) -> Instance {
    let m = rng.gen_range(1..=8);
    let mut edges = Vec::new();
    for u in 1..=m {
        for v in u + 1..=m {
            if rng.gen_bool(0.3) {
                edges.push((u, v));
            }
        }
    }
    let g = InstanceGraph::new(m, &edges).unwrap();
    let sets = (0..m)
        .map(|_| (1..=n).filter(|_| rng.gen_bool(0.7)).collect::<ColourSet>())
        .collect();
    Instance::new(g, ListAssignment::new(sets, n).unwrap(), n).unwrap()
}

fn criterion_6() -> Outcome {
    let six =
        ColourGraph::from_edges(6, &[(1, 4), (1, 5), (2, 4), (2, 5), (2, 6), (3, 6)]).unwrap();
    let targets = [
        ("P4", named::path(4)),
        ("reflexive P3", named::p3_star()),
        ("reflexive P4", named::path(4).with_loops()),
        ("six-vertex staircase", six),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut round_trips = 0usize;
    for (name, h) in &targets {
        let sf = find_staircase_biadjacency(h)
            .or_else(|| find_staircase_adjacency(h))
            .ok_or_else(|| format!("{name}: no staircase form"))?;
        let enc = build_staircase_encoding(h, &sf).map_err(|e| format!("{name}: {e}"))?;
        for trial in 0..50 {
            let inst = random_instance(&mut rng, h.n());
            let (f, vmap) = reduce_listhcol_to_1p1n(&enc, &inst).map_err(|e| e.to_string())?;
            let want = count_list_hcol(h, &inst).map_err(|e| e.to_string())?;
            let got = count_1p1n(&f);
            ensure(got == want, || {
                format!("{name} trial {trial}: formula {got}, oracle {want}")
            })?;
            for sigma in colourings(h, &inst, 500) {
                let x = encode_colouring(&enc, &vmap, &sigma).map_err(|e| e.to_string())?;
                ensure(f.is_satisfied_by(&x), || {
                    format!("{name} trial {trial}: {sigma:?} encodes to a non-model")
                })?;
                let back = decode_assignment(&enc, &vmap, &x).map_err(|e| e.to_string())?;
                ensure(back == sigma, || {
                    format!("{name} trial {trial}: {sigma:?} decodes to {back:?}")
                })?;
                round_trips += 1;
            }
        }
    }
    Ok(format!(
        "200 instances count-equal, {round_trips} colourings round-trip"
    ))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let p4 = named::path(4);
    let p3 = named::p3_star();
    for trial in 0..30 {
        let m = rng.gen_range(1..=8);
        let side: Vec<bool> = (0..m).map(|_| rng.gen_bool(0.5)).collect();
        let mut edges = Vec::new();
        for u in 1..=m {
            for v in u + 1..=m {
                if side[u - 1] != side[v - 1] && rng.gen_bool(0.4) {
                    edges.push((u, v));
                }
            }
        }
        let g = InstanceGraph::new(m, &edges).unwrap();
        let direct = count_list_hcol(&p4, &Instance::full_lists(g.clone(), 4).unwrap())
            .map_err(|e| e.to_string())?;
        let (inst, multiplier) = reduce_p4_to_p3star(&g);
        let listed = count_list_hcol(&p3, &inst).map_err(|e| e.to_string())?;
        let components = g.connected_components().len() as u32;
        ensure(multiplier == BigUint::from(2u32).pow(components), || {
            format!("trial {trial}: multiplier {multiplier}")
        })?;
        ensure(direct == &multiplier * &listed, || {
            format!("trial {trial}: {direct} != {multiplier} * {listed}")
        })?;
    }
    Ok("30 bipartite graphs satisfy the orientation-corrected identity".into())
}

fn criterion_8() -> Outcome {
    use Complexity::*;
    let union = named::complete_reflexive(3)
        .disjoint_union(&named::path(4))
        .unwrap();
    let fixtures: Vec<(&str, ColourGraph, Complexity, Option<u32>)> = vec![
        ("K2'", named::k2_prime(), SatEquivalent, Some(6)),
        ("2-wrench", named::two_wrench(), SatEquivalent, Some(6)),
        ("P4", named::path(4), BisEquivalent, Some(6)),
        ("reflexive P3", named::p3_star(), BisEquivalent, Some(6)),
        ("reflexive K5", named::complete_reflexive(5), PolyTime, None),
        ("C4", named::cycle(4), PolyTime, None),
        ("C6", named::cycle(6), SatEquivalent, Some(3)),
        (
            "reflexive claw",
            named::claw().with_loops(),
            SatEquivalent,
            Some(3),
        ),
        ("reflexive K3 + P4", union, BisEquivalent, Some(6)),
    ];
    for (name, h, class, threshold) in &fixtures {
        let r = classify(h);
        ensure(
            r.class == *class && r.degree_threshold == *threshold,
            || format!("{name}: got {} / {:?}", r.class, r.degree_threshold),
        )?;
    }
    Ok(format!(
        "{} fixtures classified as expected",
        fixtures.len()
    ))
}

fn criterion_9() -> Outcome {
    let mut bipartite = 0usize;
    for a in 1..=6usize {
        for b in 1..=(7 - a) {
            for mask in 0u32..(1 << (a * b)) {
                let edges: Vec<(usize, usize)> = (0..a * b)
                    .filter(|&k| mask >> k & 1 == 1)
                    .map(|k| (k / b + 1, a + k % b + 1))
                    .collect();
                let h = ColourGraph::from_edges(a + b, &edges).unwrap();
                if !h.is_connected() {
                    continue;
                }
                bipartite += 1;
                let staircase = find_staircase_biadjacency(&h);
                let excluded = find_excluded_bp(&h);
                ensure(staircase.is_some() != excluded.is_some(), || {
                    format!(
                        "bipartite {edges:?}: staircase {} / excluded {}",
                        staircase.is_some(),
                        excluded.is_some()
                    )
                })?;
                if let Some(sf) = staircase {
                    ensure(sf.certifies_biadjacency(&h), || {
                        format!("bipartite {edges:?}: bad certificate")
                    })?;
                }
                if let Some(w) = excluded {
                    ensure(w.revalidate(&h), || {
                        format!("bipartite {edges:?}: bad witness")
                    })?;
                }
            }
        }
    }
    let mut reflexive = 0usize;
    for n in 1..=6usize {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let mut edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            edges.extend((1..=n).map(|v| (v, v)));
            let h = ColourGraph::from_edges(n, &edges).unwrap();
            if !h.is_connected() {
                continue;
            }
            reflexive += 1;
            let staircase = find_staircase_adjacency(&h);
            let excluded = find_excluded_pi(&h);
            ensure(staircase.is_some() != excluded.is_some(), || {
                format!(
                    "reflexive {edges:?}: staircase {} / excluded {}",
                    staircase.is_some(),
                    excluded.is_some()
                )
            })?;
            if let Some(sf) = staircase {
                ensure(sf.certifies_adjacency(&h), || {
                    format!("reflexive {edges:?}: bad certificate")
                })?;
            }
            if let Some(w) = excluded {
                ensure(w.revalidate(&h), || {
                    format!("reflexive {edges:?}: bad witness")
                })?;
            }
        }
    }
    Ok(format!(
        "{bipartite} bipartite and {reflexive} reflexive labelled graphs agree"
    ))
}

fn criterion_10() -> Outcome {
    let k2 = InstanceGraph::new(2, &[(1, 2)]).unwrap();
    let c1 = count_list_hcol(
        &named::k2_prime(),
        &Instance::full_lists(k2.clone(), 2).unwrap(),
    )
    .unwrap();
    ensure(c1 == BigUint::from(3u32), || format!("K2' on K2: {c1}"))?;
    let c2 = count_list_hcol(
        &named::p3_star(),
        &Instance::full_lists(k2.clone(), 3).unwrap(),
    )
    .unwrap();
    ensure(c2 == BigUint::from(7u32), || {
        format!("reflexive P3 on K2: {c2}")
    })?;
    let z = ising_partition(&k2, &BigRational::new(9.into(), 10.into())).unwrap();
    ensure(z == BigRational::new(19.into(), 5.into()), || {
        format!("Z(K2, 9/10) = {z}")
    })?;
    let chain = ImplicationFormula::with_clauses(
        3,
        vec![
            Clause::Pos(1),
            Clause::Neg(3),
            Clause::Imp(2, 1),
            Clause::Imp(3, 2),
        ],
    )
    .unwrap();
    let c3 = count_1p1n(&chain);
    ensure(c3 == BigUint::from(2u32), || format!("chain formula: {c3}"))?;
    Ok("3, 7, 19/5, 2".into())
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("catalog matrix reproduction", criterion_1),
        ("determinant invariants", criterion_2),
        ("symmetrised matrices", criterion_3),
        ("thickening", criterion_4),
        ("Ising reduction identity", criterion_5),
        ("#1p1nSAT reduction", criterion_6),
        ("P4 to reflexive P3 identity", criterion_7),
        ("classification fixtures", criterion_8),
        ("characterisation cross-check", criterion_9),
        ("oracle spot values", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
