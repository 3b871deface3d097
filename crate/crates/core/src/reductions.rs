//! Count-preserving compilers: list colourings over a staircase target to
//! `#1p1nSAT`, and `P4`-colourings to list colourings over the reflexive path.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{
    ColourGraph, ColourSet, GraphError, Instance, InstanceGraph, ListAssignment, Reflexivity,
};
use crate::named;
use crate::oracles::{BigCount, Clause, ImplicationFormula, OracleError};
use crate::recognizer::{is_staircase, StaircaseForm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("staircase form does not certify the target graph")]
    NotCertified,
    #[error("block matrix of the target is not in staircase form without zero rows")]
    NotStaircase,
    #[error("encoding has {encoding} colours but the instance is bound to {instance}")]
    ArityMismatch { encoding: usize, instance: usize },
    #[error("assignment has {got} variables, expected {want}")]
    AssignmentLength { got: usize, want: usize },
    #[error("levels of vertex {0} are not a decreasing chain starting true and ending false")]
    NonMonotone(usize),
    #[error("colouring has {got} entries, expected {want}")]
    ColouringLength { got: usize, want: usize },
    #[error("colour {0} is not a colour of the target")]
    UnknownColour(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EncodingMode {
    /// `A = diag(B, B^T)` for an irreflexive bipartite target.
    Bipartite,
    /// `A` is the adjacency matrix of a reflexive target.
    Reflexive,
}

/// Staircase matrix `A[i][j] = adj(r_i, c_j)` over all `q` colours.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StaircaseEncoding {
    pub q: usize,
    pub r_order: Vec<usize>,
    pub c_order: Vec<usize>,
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
    pub mode: EncodingMode,
    pub matrix: Vec<Vec<bool>>,
}

/// Builds the block staircase matrix from a certificate of `h`.
pub fn build_staircase_encoding(
    h: &ColourGraph,
    sf: &StaircaseForm,
) -> Result<StaircaseEncoding, ReductionError> {
    let (mode, r_order, c_order) = match h.reflexivity() {
        Reflexivity::Reflexive if sf.certifies_adjacency(h) => {
            (EncodingMode::Reflexive, sf.rows.clone(), sf.cols.clone())
        }
        Reflexivity::Irreflexive if sf.certifies_biadjacency(h) => {
            let r: Vec<usize> = sf.rows.iter().chain(&sf.cols).copied().collect();
            let c: Vec<usize> = sf.cols.iter().chain(&sf.rows).copied().collect();
            (EncodingMode::Bipartite, r, c)
        }
        _ => return Err(ReductionError::NotCertified),
    };
    let matrix: Vec<Vec<bool>> = r_order
        .iter()
        .map(|&r| c_order.iter().map(|&c| h.adjacent(r, c)).collect())
        .collect();
    let (alpha, beta) = is_staircase(&matrix).ok_or(ReductionError::NotStaircase)?;
    if alpha.contains(&0) {
        return Err(ReductionError::NotStaircase);
    }
    Ok(StaircaseEncoding {
        q: h.n(),
        r_order,
        c_order,
        alpha,
        beta,
        mode,
        matrix,
    })
}

/// Vertex-major numbering of the level variables `x^u_i`, `0 <= i <= q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VariableMap {
    pub q: usize,
    pub m: usize,
    /// Whether vertex `u` reads its colour from the column order.
    pub uses_columns: Vec<bool>,
}

impl VariableMap {
    pub fn var(&self, u: usize, i: usize) -> usize {
        (u - 1) * (self.q + 1) + i + 1
    }

    /// Inverse of [`VariableMap::var`].
    pub fn level_of(&self, var: usize) -> (usize, usize) {
        ((var - 1) / (self.q + 1) + 1, (var - 1) % (self.q + 1))
    }

    pub fn var_count(&self) -> usize {
        self.m * (self.q + 1)
    }

    fn order<'a>(&self, enc: &'a StaircaseEncoding, u: usize) -> &'a [usize] {
        if self.uses_columns[u - 1] {
            &enc.c_order
        } else {
            &enc.r_order
        }
    }
}

/// Formula whose models correspond one-to-one with the list colourings of
/// `inst`: `x^u_i` holds exactly when the colour of `u` sits at a level above
/// `i` in the order of `u`'s side.
pub fn reduce_listhcol_to_1p1n(
    enc: &StaircaseEncoding,
    inst: &Instance,
) -> Result<(ImplicationFormula, VariableMap), ReductionError> {
    if inst.colour_count != enc.q {
        return Err(ReductionError::ArityMismatch {
            encoding: enc.q,
            instance: inst.colour_count,
        });
    }
    let g = &inst.graph;
    let m = g.vertex_count();
    let q = enc.q;
    let bip = match enc.mode {
        EncodingMode::Bipartite => g.bipartition(),
        EncodingMode::Reflexive => None,
    };
    let uses_columns = (1..=m)
        .map(|u| bip.as_ref().is_some_and(|b| !b.is_left(u)))
        .collect();
    let vmap = VariableMap { q, m, uses_columns };
    let x = |u: usize, i: usize| vmap.var(u, i);
    let mut clauses = Vec::new();

    for u in 1..=m {
        clauses.push(Clause::Pos(x(u, 0)));
        clauses.push(Clause::Neg(x(u, q)));
        for j in 1..=q {
            clauses.push(Clause::Imp(x(u, j), x(u, j - 1)));
        }
    }

    let bipartite_ok = enc.mode == EncodingMode::Reflexive || bip.is_some();
    if bipartite_ok {
        for &(a, b) in g.edges() {
            let (u, v) = match &bip {
                Some(bp) if !bp.is_left(a) => (b, a),
                _ => (a, b),
            };
            for i in 1..=q {
                clauses.push(Clause::Imp(x(u, i - 1), x(v, enc.alpha[i - 1] - 1)));
                clauses.push(Clause::Imp(x(v, enc.beta[i - 1]), x(u, i)));
            }
        }
    }

    for u in 1..=m {
        let allowed = inst.lists.get(u);
        for (j, &colour) in vmap.order(enc, u).iter().enumerate() {
            if !allowed.contains(colour) {
                clauses.push(Clause::Imp(x(u, j), x(u, j + 1)));
            }
        }
    }

    if !bipartite_ok && m > 0 {
        clauses.push(Clause::Pos(x(1, 0)));
        clauses.push(Clause::Neg(x(1, 0)));
    }

    let formula = ImplicationFormula::with_clauses(vmap.var_count(), clauses)?;
    Ok((formula, vmap))
}

/// Reads the colouring back from a model: vertex `u` at level `j` (exactly
/// `j` leading true variables) takes the `j`-th colour of its order.
pub fn decode_assignment(
    enc: &StaircaseEncoding,
    vmap: &VariableMap,
    assignment: &[bool],
) -> Result<Vec<usize>, ReductionError> {
    if assignment.len() != vmap.var_count() {
        return Err(ReductionError::AssignmentLength {
            got: assignment.len(),
            want: vmap.var_count(),
        });
    }
    (1..=vmap.m)
        .map(|u| {
            let levels: Vec<bool> = (0..=vmap.q)
                .map(|i| assignment[vmap.var(u, i) - 1])
                .collect();
            let j = levels.iter().take_while(|&&b| b).count();
            if j == 0 || j > vmap.q || levels[j..].iter().any(|&b| b) {
                return Err(ReductionError::NonMonotone(u));
            }
            Ok(vmap.order(enc, u)[j - 1])
        })
        .collect()
}

/// The model corresponding to a colouring under the level interpretation.
pub fn encode_colouring(
    enc: &StaircaseEncoding,
    vmap: &VariableMap,
    colouring: &[usize],
) -> Result<Vec<bool>, ReductionError> {
    if colouring.len() != vmap.m {
        return Err(ReductionError::ColouringLength {
            got: colouring.len(),
            want: vmap.m,
        });
    }
    let mut out = vec![false; vmap.var_count()];
    for (u, &c) in (1..=vmap.m).zip(colouring) {
        let j = vmap
            .order(enc, u)
            .iter()
            .position(|&x| x == c)
            .ok_or(ReductionError::UnknownColour(c))?
            + 1;
        for i in 0..j {
            out[vmap.var(u, i) - 1] = true;
        }
    }
    Ok(out)
}

/// List instance over the reflexive path with `{1, 2}` on one side of a
/// fixed bipartition and `{2, 3}` on the other. The number of `P4`-colourings
/// of `g` is `multiplier` times its count. Non-bipartite `g` yields empty
/// lists and multiplier one.
pub fn reduce_p4_to_p3star(g: &InstanceGraph) -> (Instance, BigCount) {
    let m = g.vertex_count();
    let n = named::p3_star().n();
    let (sets, multiplier) = match g.bipartition() {
        Some(bip) => {
            let low: ColourSet = [1, 2].into_iter().collect();
            let high: ColourSet = [2, 3].into_iter().collect();
            let sets = (1..=m)
                .map(|v| if bip.is_left(v) { low } else { high })
                .collect();
            (
                sets,
                BigUint::from(2u32).pow(g.connected_components().len() as u32),
            )
        }
        None => (vec![ColourSet::EMPTY; m], BigUint::one()),
    };
    let lists = ListAssignment::new(sets, n).expect("lists use colours of the reflexive path");
    let inst = Instance::new(g.clone(), lists, n).expect("lists cover every vertex");
    (inst, multiplier)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{count_1p1n, count_list_hcol};
    use crate::recognizer::{find_staircase_adjacency, find_staircase_biadjacency};

    fn bits(rows: &[&[u8]]) -> Vec<Vec<bool>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| x == 1).collect())
            .collect()
    }

    fn p4_encoding() -> (ColourGraph, StaircaseEncoding) {
        let h = named::path(4);
        let sf = find_staircase_biadjacency(&h).unwrap();
        let enc = build_staircase_encoding(&h, &sf).unwrap();
        (h, enc)
    }

    fn p3_encoding() -> (ColourGraph, StaircaseEncoding) {
        let h = named::p3_star();
        let sf = find_staircase_adjacency(&h).unwrap();
        let enc = build_staircase_encoding(&h, &sf).unwrap();
        (h, enc)
    }

    #[test]
    fn encodings() {
        let (_, enc) = p4_encoding();
        assert_eq!(enc.q, 4);
        assert_eq!(
            enc.matrix,
            bits(&[&[1, 0, 0, 0], &[1, 1, 0, 0], &[0, 0, 1, 1], &[0, 0, 0, 1]])
        );
        assert_eq!(enc.r_order, vec![1, 3, 2, 4]);
        assert_eq!(enc.c_order, vec![2, 4, 1, 3]);

        let (_, enc) = p3_encoding();
        assert_eq!(enc.matrix, bits(&[&[1, 1, 0], &[1, 1, 1], &[0, 1, 1]]));
        assert_eq!(enc.r_order, vec![1, 2, 3]);
        assert_eq!(enc.mode, EncodingMode::Reflexive);

        let k2 = named::path(2);
        let enc = build_staircase_encoding(&k2, &find_staircase_biadjacency(&k2).unwrap()).unwrap();
        assert_eq!(
            (enc.q, enc.alpha.clone(), enc.beta.clone()),
            (2, vec![1, 2], vec![1, 2])
        );
        assert_eq!(enc.matrix, bits(&[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn uncertified_forms_are_rejected() {
        let (h, _) = p4_encoding();
        let bogus = StaircaseForm {
            rows: vec![1, 2],
            cols: vec![3, 4],
            alpha: vec![1, 1],
            beta: vec![1, 2],
        };
        assert_eq!(
            build_staircase_encoding(&h, &bogus).unwrap_err(),
            ReductionError::NotCertified
        );
        let sf = find_staircase_adjacency(&named::p3_star()).unwrap();
        assert_eq!(
            build_staircase_encoding(&h, &sf).unwrap_err(),
            ReductionError::NotCertified
        );
    }

    #[test]
    fn model_counts_match() {
        let k2 = InstanceGraph::new(2, &[(1, 2)]).unwrap();
        let (h, enc) = p3_encoding();
        let inst = Instance::full_lists(k2.clone(), 3).unwrap();
        let (f, _) = reduce_listhcol_to_1p1n(&enc, &inst).unwrap();
        assert_eq!(count_1p1n(&f), BigUint::from(7u32));
        assert_eq!(count_list_hcol(&h, &inst).unwrap(), BigUint::from(7u32));

        let (_, enc) = p4_encoding();
        let inst = Instance::full_lists(k2, 4).unwrap();
        let (f, _) = reduce_listhcol_to_1p1n(&enc, &inst).unwrap();
        assert_eq!(count_1p1n(&f), BigUint::from(6u32));

        let (_, enc) = p3_encoding();
        let inst = Instance::full_lists(InstanceGraph::edgeless(1), 3).unwrap();
        let (f, _) = reduce_listhcol_to_1p1n(&enc, &inst).unwrap();
        assert_eq!(count_1p1n(&f), BigUint::from(3u32));
    }

    #[test]
    fn odd_instance_in_bipartite_mode_is_unsatisfiable() {
        let (_, enc) = p4_encoding();
        let c3 = InstanceGraph::new(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        let inst = Instance::full_lists(c3, 4).unwrap();
        let (f, _) = reduce_listhcol_to_1p1n(&enc, &inst).unwrap();
        assert_eq!(count_1p1n(&f), BigUint::from(0u32));
    }

    #[test]
    fn arity_is_checked() {
        let (_, enc) = p3_encoding();
        let inst = Instance::full_lists(InstanceGraph::edgeless(1), 4).unwrap();
        assert_eq!(
            reduce_listhcol_to_1p1n(&enc, &inst).unwrap_err(),
            ReductionError::ArityMismatch {
                encoding: 3,
                instance: 4
            }
        );
    }

    #[test]
    fn decoding_levels() {
        let (_, enc) = p3_encoding();
        let vmap = VariableMap {
            q: 3,
            m: 1,
            uses_columns: vec![false],
        };
        assert_eq!(
            decode_assignment(&enc, &vmap, &[true, false, false, false]).unwrap(),
            vec![1]
        );
        assert_eq!(
            decode_assignment(&enc, &vmap, &[true, true, false, false]).unwrap(),
            vec![2]
        );
        assert_eq!(
            decode_assignment(&enc, &vmap, &[true, true, true, true]).unwrap_err(),
            ReductionError::NonMonotone(1)
        );
        assert_eq!(
            decode_assignment(&enc, &vmap, &[true, false, true, false]).unwrap_err(),
            ReductionError::NonMonotone(1)
        );
        assert_eq!(
            encode_colouring(&enc, &vmap, &[3]).unwrap(),
            vec![true, true, true, false]
        );
        assert_eq!(vmap.level_of(vmap.var(1, 2)), (1, 2));
    }

    #[test]
    fn p4_to_p3star_examples() {
        let p4 = named::path(4);
        let p3 = named::p3_star();
        let cases = [
            (InstanceGraph::new(2, &[(1, 2)]).unwrap(), 3u32, 2u32),
            (InstanceGraph::edgeless(1), 2, 2),
            (InstanceGraph::new(4, &[(1, 2), (3, 4)]).unwrap(), 9, 4),
        ];
        for (g, listed, mult) in cases {
            let (inst, multiplier) = reduce_p4_to_p3star(&g);
            let count = count_list_hcol(&p3, &inst).unwrap();
            assert_eq!(
                (count.clone(), multiplier.clone()),
                (BigUint::from(listed), BigUint::from(mult))
            );
            let direct = count_list_hcol(&p4, &Instance::full_lists(g, 4).unwrap()).unwrap();
            assert_eq!(direct, multiplier * count);
        }
        let c3 = InstanceGraph::new(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        let (inst, multiplier) = reduce_p4_to_p3star(&c3);
        assert_eq!(count_list_hcol(&p3, &inst).unwrap(), BigUint::from(0u32));
        assert_eq!(multiplier, BigUint::one());
    }
}
