use std::fmt::Write as _;

use listhom::catalog::{
    gadget_catalog, identity_witness, report_for_entry, standard_kinds, CatalogEntry,
};
use listhom::gadgets::reduce_ising_to_listhcol;
use listhom::graph::{ColourGraph, ColourSet, Instance, InstanceGraph, ListAssignment};
use listhom::named;
use listhom::oracles::{count_1p1n, count_list_hcol, ising_partition};
use listhom::recognizer::{
    classify, find_staircase_adjacency, find_staircase_biadjacency, Complexity,
};
use listhom::reductions::{build_staircase_encoding, reduce_listhcol_to_1p1n, reduce_p4_to_p3star};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 2024;

/// Every standard catalogue entry on its own pattern graph.
pub fn default_catalog() -> Vec<(ColourGraph, CatalogEntry)> {
    standard_kinds()
        .into_iter()
        .map(|kind| {
            let (h, w) = identity_witness(kind);
            let entry = gadget_catalog(&w).expect("standard kinds are catalogued");
            (h, entry)
        })
        .collect()
}

struct Log {
    text: String,
    failures: usize,
}

impl Log {
    fn record(&mut self, ok: bool, what: &str) {
        if !ok {
            self.failures += 1;
        }
        writeln!(self.text, "{} {what}", if ok { "ok  " } else { "FAIL" }).unwrap();
    }
}

fn random_graph(rng: &mut ChaCha8Rng, max_m: usize, p: f64) -> InstanceGraph {
    let m = rng.gen_range(1..=max_m);
    let mut edges = Vec::new();
    for u in 1..=m {
        for v in u + 1..=m {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    InstanceGraph::new(m, &edges).unwrap()
}

/// Runs the catalogue, classification and seeded reduction checks. Returns
/// the log and whether everything passed.
pub fn run_selftest(catalog: &[(ColourGraph, CatalogEntry)], seed: u64) -> (String, bool) {
    let mut log = Log {
        text: String::new(),
        failures: 0,
    };

    for (h, entry) in catalog {
        let name = entry.kind.to_string();
        match report_for_entry(h, entry.clone(), Some(1)) {
            Ok(report) => {
                let problems = report.mismatches();
                let line = if problems.is_empty() {
                    format!(
                        "gadget {name}: D' = {}, D* = {}",
                        report.dprime, report.dstar
                    )
                } else {
                    format!("gadget {name}: {}", problems.join("; "))
                };
                log.record(problems.is_empty(), &line);
            }
            Err(e) => log.record(false, &format!("gadget {name}: {e}")),
        }
    }

    let union = named::complete_reflexive(3)
        .disjoint_union(&named::path(4))
        .unwrap();
    let fixtures = [
        ("K2'", named::k2_prime(), Complexity::SatEquivalent),
        ("2-wrench", named::two_wrench(), Complexity::SatEquivalent),
        ("P4", named::path(4), Complexity::BisEquivalent),
        ("reflexive P3", named::p3_star(), Complexity::BisEquivalent),
        (
            "reflexive K5",
            named::complete_reflexive(5),
            Complexity::PolyTime,
        ),
        ("C4", named::cycle(4), Complexity::PolyTime),
        ("C6", named::cycle(6), Complexity::SatEquivalent),
        (
            "reflexive claw",
            named::claw().with_loops(),
            Complexity::SatEquivalent,
        ),
        ("reflexive K3 + P4", union, Complexity::BisEquivalent),
    ];
    for (name, h, want) in fixtures {
        let got = classify(&h).class;
        log.record(got == want, &format!("classify {name}: {got}"));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (name, h) in [("P4", named::path(4)), ("reflexive P3", named::p3_star())] {
        let sf = find_staircase_biadjacency(&h)
            .or_else(|| find_staircase_adjacency(&h))
            .unwrap();
        let enc = build_staircase_encoding(&h, &sf).unwrap();
        let mut ok = true;
        for _ in 0..20 {
            let g = random_graph(&mut rng, 6, 0.4);
            let sets = (0..g.vertex_count())
                .map(|_| {
                    (1..=h.n())
                        .filter(|_| rng.gen_bool(0.7))
                        .collect::<ColourSet>()
                })
                .collect();
            let inst = Instance::new(g, ListAssignment::new(sets, h.n()).unwrap(), h.n()).unwrap();
            let (f, _) = reduce_listhcol_to_1p1n(&enc, &inst).unwrap();
            ok &= count_1p1n(&f) == count_list_hcol(&h, &inst).unwrap();
        }
        log.record(
            ok,
            &format!("#1p1nSAT reduction over {name}: 20 random instances"),
        );
    }

    let (x3, w) = identity_witness(listhom::recognizer::PatternKind::X3);
    let entry = gadget_catalog(&w).unwrap();
    let mut ok = true;
    if let Ok(report) = report_for_entry(&x3, entry, None) {
        for _ in 0..20 {
            let g = random_graph(&mut rng, 5, 0.5);
            match reduce_ising_to_listhcol(&g, &report.symmetrised) {
                Ok((inst, lambda, scale)) => {
                    let lhs = BigRational::from_integer(BigInt::from(
                        count_list_hcol(&x3, &inst).unwrap(),
                    ));
                    let rhs = ising_partition(&g, &lambda).unwrap()
                        * BigRational::from_integer(BigInt::from(scale));
                    ok &= lhs == rhs;
                }
                Err(_) => ok = false,
            }
        }
    } else {
        ok = false;
    }
    log.record(
        ok,
        "Ising edge replacement with the X3 gadget: 20 random graphs",
    );

    let mut ok = true;
    for _ in 0..20 {
        let m = rng.gen_range(1..=7);
        let side: Vec<bool> = (0..m).map(|_| rng.gen_bool(0.5)).collect();
        let mut edges = Vec::new();
        for u in 1..=m {
            for v in u + 1..=m {
                if side[u - 1] != side[v - 1] && rng.gen_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        let g = InstanceGraph::new(m, &edges).unwrap();
        let direct = count_list_hcol(
            &named::path(4),
            &Instance::full_lists(g.clone(), 4).unwrap(),
        )
        .unwrap();
        let (inst, multiplier) = reduce_p4_to_p3star(&g);
        let listed: BigUint = count_list_hcol(&named::p3_star(), &inst).unwrap();
        ok &= direct == multiplier * listed;
    }
    log.record(
        ok,
        "P4 to reflexive P3 reduction: 20 random bipartite graphs",
    );

    let passed = log.failures == 0;
    writeln!(log.text, "{} failure(s), seed {seed}", log.failures).unwrap();
    (log.text, passed)
}
