//! Path gadgets for every excluded pattern, in the witness's host labels.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::gadgets::{
    check_cond_h, find_transposing_automorphism, interaction_matrix, interaction_matrix_bruteforce,
    is_separating_pair, path_gadget_graph, symmetrize, thicken, GadgetError, GadgetGraph,
    InteractionMatrix, PathGadget,
};
use crate::graph::ColourGraph;
use crate::recognizer::{ExcludedWitness, PatternKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("no gadget for pattern kind {0}")]
    UnsupportedKind(PatternKind),
    #[error("witness embedding has {got} colours, pattern {kind} needs {want}")]
    EmbeddingSize {
        kind: PatternKind,
        got: usize,
        want: usize,
    },
    #[error("pattern {0} has no automorphism exchanging its terminal colours")]
    NoAutomorphism(PatternKind),
    #[error(transparent)]
    Gadget(#[from] GadgetError),
}

/// A catalogued gadget. `gadget`, `terminal_colours` and `cond_h` are in host
/// labels; `pattern_automorphism` is in pattern labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub kind: PatternKind,
    pub embedding: Vec<usize>,
    pub gadget: PathGadget,
    pub expected_dprime: InteractionMatrix,
    pub terminal_colours: (usize, usize),
    pub cond_h: (usize, usize),
    pub pattern_automorphism: Vec<usize>,
}

impl CatalogEntry {
    /// The pattern automorphism carried to the host, identity off the
    /// embedding.
    pub fn host_automorphism(&self, n: usize) -> Vec<usize> {
        let mut perm: Vec<usize> = (1..=n).collect();
        for (k, &c) in self.embedding.iter().enumerate() {
            perm[c - 1] = self.embedding[self.pattern_automorphism[k] - 1];
        }
        perm
    }
}

struct Raw {
    pairs: Vec<(usize, usize)>,
    dprime: [[u64; 2]; 2],
    cond_h: (usize, usize),
}

fn even_cycle(q: usize) -> Raw {
    let mut pairs: Vec<_> = (1..=q - 2)
        .map(|k| (if k % 2 == 1 { 1 } else { 2 }, k + 2))
        .collect();
    pairs.push((3, 1));
    Raw {
        pairs,
        dprime: [[1, 2], [1, 3]],
        cond_h: (q, 4),
    }
}

fn odd_cycle(q: usize) -> Raw {
    let l = 2 * q - 2;
    let pairs = (1..=l)
        .map(|k| {
            let i = if k % 2 == 1 { 1 } else { 2 };
            let j = if k == l {
                1
            } else if k < q {
                k + 1
            } else {
                2 * q - 1 - k
            };
            (i, j)
        })
        .collect();
    Raw {
        pairs,
        dprime: [[2, 1], [1, 1]],
        cond_h: (2, 1),
    }
}

fn reflexive_cycle(q: usize) -> Raw {
    let mut pairs: Vec<_> = (1..q).map(|k| (1, k + 1)).collect();
    pairs.push((2, 1));
    Raw {
        pairs,
        dprime: [[1, 2], [1, 3]],
        cond_h: (q, 3),
    }
}

fn raw(kind: PatternKind) -> Result<Raw, CatalogError> {
    let fixed = |pairs: &[(usize, usize)], dprime, cond_h| Raw {
        pairs: pairs.to_vec(),
        dprime,
        cond_h,
    };
    Ok(match kind {
        PatternKind::X3 => fixed(
            &[(1, 2), (4, 7), (3, 6), (4, 5), (2, 1)],
            [[2, 3], [3, 5]],
            (5, 7),
        ),
        PatternKind::X2 => fixed(
            &[(1, 2), (4, 7), (3, 2), (4, 6), (3, 1), (4, 5), (2, 1)],
            [[5, 8], [8, 13]],
            (5, 7),
        ),
        PatternKind::T2 => fixed(
            &[(1, 2), (5, 7), (4, 2), (3, 5), (4, 1), (5, 6), (2, 1)],
            [[5, 7], [7, 10]],
            (6, 7),
        ),
        PatternKind::Claw => fixed(
            &[(1, 2), (4, 2), (3, 4), (4, 1), (2, 1)],
            [[2, 3], [3, 5]],
            (1, 2),
        ),
        PatternKind::Net => fixed(
            &[(1, 2), (4, 6), (3, 2), (3, 1), (4, 5), (2, 1)],
            [[2, 3], [3, 5]],
            (5, 6),
        ),
        PatternKind::S3 => fixed(
            &[(1, 2), (3, 6), (3, 5), (3, 4), (2, 1)],
            [[1, 1], [1, 2]],
            (4, 6),
        ),
        PatternKind::CycleNe4(q) if q >= 6 && q % 2 == 0 => even_cycle(q),
        PatternKind::CycleNe4(q) if q >= 3 && q % 2 == 1 => odd_cycle(q),
        PatternKind::CycleGe4(q) if q >= 4 => reflexive_cycle(q),
        other => return Err(CatalogError::UnsupportedKind(other)),
    })
}

/// The catalogued gadget for `witness`, translated through its embedding.
pub fn gadget_catalog(witness: &ExcludedWitness) -> Result<CatalogEntry, CatalogError> {
    let kind = witness.kind;
    let raw = raw(kind)?;
    let pattern = kind.pattern();
    if witness.embedding.len() != pattern.n() {
        return Err(CatalogError::EmbeddingSize {
            kind,
            got: witness.embedding.len(),
            want: pattern.n(),
        });
    }
    let gadget = PathGadget::new(raw.pairs)?;
    let (r, s) = gadget.terminal_colours();
    let pattern_automorphism =
        find_transposing_automorphism(&pattern, r, s).ok_or(CatalogError::NoAutomorphism(kind))?;
    let map = |c: usize| witness.embedding[c - 1];
    Ok(CatalogEntry {
        kind,
        embedding: witness.embedding.clone(),
        gadget: PathGadget::new(
            gadget
                .pairs()
                .iter()
                .map(|&(i, j)| (map(i), map(j)))
                .collect(),
        )?,
        expected_dprime: InteractionMatrix::from_u64(raw.dprime),
        terminal_colours: (map(r), map(s)),
        cond_h: (map(raw.cond_h.0), map(raw.cond_h.1)),
        pattern_automorphism,
    })
}

/// Everything derived from a catalogue entry on a host graph, each claimed
/// matrix paired with its brute-force count.
#[derive(Debug, Clone)]
pub struct GadgetReport {
    pub entry: CatalogEntry,
    pub dprime: InteractionMatrix,
    pub d: InteractionMatrix,
    pub d_bruteforce: InteractionMatrix,
    pub symmetrised: GadgetGraph,
    pub dstar: InteractionMatrix,
    pub dstar_bruteforce: InteractionMatrix,
    /// `(r', s')` found by search on the host.
    pub cond_h: Option<(usize, usize)>,
    pub catalogue_pair_separates: bool,
    pub thickened: Option<(u32, GadgetGraph, InteractionMatrix)>,
}

impl GadgetReport {
    /// Problems found when comparing claims with counts; empty means verified.
    pub fn mismatches(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut expect = |ok: bool, what: String| {
            if !ok {
                out.push(what);
            }
        };
        expect(
            self.dprime == self.entry.expected_dprime,
            format!(
                "D' = {} but catalogue says {}",
                self.dprime, self.entry.expected_dprime
            ),
        );
        expect(
            self.dprime.det() == BigInt::from(1),
            format!("det D' = {}", self.dprime.det()),
        );
        expect(
            self.d.det() == BigInt::from(-1),
            format!("det D = {}", self.d.det()),
        );
        expect(
            self.d == self.d_bruteforce,
            format!("D = {} but brute force gives {}", self.d, self.d_bruteforce),
        );
        expect(
            self.dstar == self.dstar_bruteforce,
            format!(
                "D* = {} but brute force gives {}",
                self.dstar, self.dstar_bruteforce
            ),
        );
        expect(
            self.dstar.is_symmetric(),
            format!("D* = {} is not symmetric", self.dstar),
        );
        expect(
            self.dstar.det() < BigInt::zero(),
            format!("det D* = {} is not negative", self.dstar.det()),
        );
        expect(
            self.cond_h.is_some(),
            "no separating pair for the terminal colours".into(),
        );
        expect(
            self.catalogue_pair_separates,
            format!("catalogue pair {:?} does not separate", self.entry.cond_h),
        );
        if let Some((t, gg, brute)) = &self.thickened {
            let want = self.dstar.pow_entries(1 << t);
            expect(
                gg.interaction == want,
                format!("D*_{t} claimed {} but expected {want}", gg.interaction),
            );
            expect(
                *brute == want,
                format!("D*_{t} brute force gives {brute}, expected {want}"),
            );
            expect(
                gg.terminal_degrees() == (1, 1),
                format!("terminal degrees {:?}", gg.terminal_degrees()),
            );
            expect(
                gg.max_internal_degree() <= 3,
                format!("internal degree {}", gg.max_internal_degree()),
            );
        }
        out
    }
}

/// Builds the gadget for `witness` on `h`, symmetrises it and optionally
/// thickens it to level `t`, counting every stage by brute force.
pub fn build_report(
    h: &ColourGraph,
    witness: &ExcludedWitness,
    t: Option<u32>,
) -> Result<GadgetReport, CatalogError> {
    let entry = gadget_catalog(witness)?;
    report_for_entry(h, entry, t)
}

/// As [`build_report`] for an explicit (possibly hand-edited) entry.
pub fn report_for_entry(
    h: &ColourGraph,
    entry: CatalogEntry,
    t: Option<u32>,
) -> Result<GadgetReport, CatalogError> {
    let (dprime, d) = interaction_matrix(h, &entry.gadget)?;
    let d_bruteforce = interaction_matrix_bruteforce(h, &path_gadget_graph(h, &entry.gadget)?)?;
    let pi = entry.host_automorphism(h.n());
    let (symmetrised, dstar) = symmetrize(h, &entry.gadget, &pi)?;
    let dstar_bruteforce = interaction_matrix_bruteforce(h, &symmetrised)?;
    let (r, s) = entry.terminal_colours;
    let cond_h = check_cond_h(h, r, s);
    let catalogue_pair_separates = is_separating_pair(h, (r, s), entry.cond_h);
    let thickened = match (t, cond_h) {
        (Some(t), Some(pair)) => {
            let gg = thicken(h, &symmetrised, pair, t)?;
            let brute = interaction_matrix_bruteforce(h, &gg)?;
            Some((t, gg, brute))
        }
        (Some(_), None) => return Err(GadgetError::ConditionUnavailable(r, s).into()),
        (None, _) => None,
    };
    Ok(GadgetReport {
        entry,
        dprime,
        d,
        d_bruteforce,
        symmetrised,
        dstar,
        dstar_bruteforce,
        cond_h,
        catalogue_pair_separates,
        thickened,
    })
}

/// The pattern kinds covered by the standard verification sweep.
pub fn standard_kinds() -> Vec<PatternKind> {
    let mut kinds = vec![PatternKind::X3, PatternKind::X2, PatternKind::T2];
    kinds.extend([6, 8].map(PatternKind::CycleNe4));
    kinds.extend([3, 5, 7].map(PatternKind::CycleNe4));
    kinds.extend([PatternKind::Claw, PatternKind::Net, PatternKind::S3]);
    kinds.extend([4, 5, 6].map(PatternKind::CycleGe4));
    kinds
}

/// The pattern graph together with the identity witness on it.
pub fn identity_witness(kind: PatternKind) -> (ColourGraph, ExcludedWitness) {
    let h = kind.pattern();
    let embedding = h.colours().collect();
    (h, ExcludedWitness { kind, embedding })
}
