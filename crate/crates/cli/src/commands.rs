use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use listhom::catalog::{build_report, gadget_catalog, CatalogError, GadgetReport};
use listhom::gadgets::{reduce_ising_to_listhcol, GadgetError, GadgetGraph};
use listhom::graph::{ColourGraph, GraphError};
use listhom::oracles::{count_1p1n, count_list_hcol, ising_partition, OracleError};
use listhom::recognizer::{
    classify, find_staircase_adjacency, find_staircase_biadjacency, find_witness_of_kind,
    Certificate, ExcludedWitness, PatternKind, TrichotomyResult,
};
use listhom::reductions::{build_staircase_encoding, reduce_listhcol_to_1p1n, ReductionError};
use num_rational::BigRational;
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::formats::{self, ParseError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{0}")]
    Usage(String),
    /// A claimed value disagreed with its independent check.
    #[error("verification failed:\n{0}")]
    Mismatch(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Gadget(#[from] GadgetError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Mismatch(_) => 1,
            _ => 2,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn parsed<T>(path: &Path, r: Result<T, ParseError>) -> Result<T, CliError> {
    r.map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_h(path: &Path) -> Result<ColourGraph, CliError> {
    parsed(path, formats::parse_h(&read(path)?))
}

fn sidecar(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".json");
    PathBuf::from(name)
}

fn pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serialises")
}

fn describe_certificate(c: &Certificate) -> String {
    match c {
        Certificate::CompleteReflexive => "complete reflexive graph".into(),
        Certificate::CompleteBipartiteIrreflexive => "complete bipartite irreflexive graph".into(),
        Certificate::StaircaseBiadjacency { form } => format!(
            "staircase biadjacency, rows {:?}, columns {:?}",
            form.rows, form.cols
        ),
        Certificate::StaircaseAdjacency { form } => {
            format!("staircase adjacency, order {:?}", form.rows)
        }
        Certificate::Excluded { witness } => {
            format!(
                "induced {} on colours {:?}",
                witness.kind, witness.embedding
            )
        }
        Certificate::MixedLoops { unlooped, looped } => {
            format!("induced K2' on edge {unlooped}-{looped} (loop on {looped})")
        }
        Certificate::Components => "disconnected, see components".into(),
    }
}

fn describe(r: &TrichotomyResult, out: &mut String, indent: &str) {
    writeln!(out, "{indent}class: {}", r.class).unwrap();
    match r.degree_threshold {
        Some(d) => writeln!(out, "{indent}degree threshold: {d}").unwrap(),
        None => writeln!(out, "{indent}degree threshold: none").unwrap(),
    }
    writeln!(
        out,
        "{indent}certificate: {}",
        describe_certificate(&r.certificate)
    )
    .unwrap();
    for c in &r.components {
        writeln!(out, "{indent}component {:?}:", c.colours).unwrap();
        describe(&c.result, out, &format!("{indent}  "));
    }
}

pub fn cmd_classify(h_file: &Path, as_json: bool) -> Result<String, CliError> {
    let h = load_h(h_file)?;
    let r = classify(&h);
    if as_json {
        return Ok(pretty(
            &json!({ "colours": h.n(), "edges": h.edges(), "result": r }),
        ));
    }
    let mut out = String::new();
    describe(&r, &mut out, "");
    Ok(out)
}

pub fn cmd_count(h_file: &Path, instance_file: &Path) -> Result<String, CliError> {
    let h = load_h(h_file)?;
    let inst = parsed(
        instance_file,
        formats::parse_instance(&read(instance_file)?, h.n()),
    )?;
    Ok(format!("{}\n", count_list_hcol(&h, &inst)?))
}

pub fn parse_lambda(text: &str) -> Result<BigRational, CliError> {
    text.trim()
        .parse::<BigRational>()
        .map_err(|_| CliError::Usage(format!("`{text}` is not a rational p/q")))
}

pub fn cmd_ising(g_file: &Path, lambda: &str) -> Result<String, CliError> {
    let g = parsed(g_file, formats::parse_graph(&read(g_file)?))?;
    let lambda = parse_lambda(lambda)?;
    Ok(format!("{}\n", ising_partition(&g, &lambda)?))
}

pub fn cmd_count_sat(formula_file: &Path) -> Result<String, CliError> {
    let f = parsed(formula_file, formats::parse_formula(&read(formula_file)?))?;
    Ok(format!("{}\n", count_1p1n(&f)))
}

/// First catalogued excluded subgraph in the classification of `h`, or the
/// first induced copy of `kind` when one is requested.
pub fn select_witness(
    h: &ColourGraph,
    kind: Option<PatternKind>,
) -> Result<ExcludedWitness, CliError> {
    if let Some(kind) = kind {
        return find_witness_of_kind(h, kind)
            .ok_or_else(|| CliError::Usage(format!("H has no induced {kind}")));
    }
    let r = classify(h);
    let mut certs = vec![r.certificate.clone()];
    certs.extend(r.components.iter().map(|c| c.result.certificate.clone()));
    certs
        .into_iter()
        .find_map(|c| match c {
            Certificate::Excluded { witness } if gadget_catalog(&witness).is_ok() => Some(witness),
            _ => None,
        })
        .ok_or_else(|| {
            CliError::Usage(format!(
                "no catalogued excluded subgraph: H is {} ({})",
                r.class,
                describe_certificate(&r.certificate)
            ))
        })
}

fn verified(report: &GadgetReport) -> Result<(), CliError> {
    let problems = report.mismatches();
    if problems.is_empty() {
        Ok(())
    } else {
        Err(CliError::Mismatch(problems.join("\n")))
    }
}

pub fn cmd_gadget(
    h_file: &Path,
    kind: Option<PatternKind>,
    t: Option<u32>,
    as_json: bool,
) -> Result<String, CliError> {
    let h = load_h(h_file)?;
    let witness = select_witness(&h, kind)?;
    let report = build_report(&h, &witness, t)?;
    let problems = report.mismatches();
    let out = if as_json {
        pretty(&json!({
            "witness": witness,
            "gadget": report.entry.gadget,
            "terminal_colours": report.entry.terminal_colours,
            "dprime": report.dprime,
            "d": report.d,
            "d_bruteforce": report.d_bruteforce,
            "dstar": report.dstar,
            "dstar_bruteforce": report.dstar_bruteforce,
            "separating_pair": report.cond_h,
            "thickened": report.thickened.as_ref().map(|(t, gg, brute)| json!({
                "t": t,
                "vertices": gg.graph.vertex_count(),
                "claimed": gg.interaction,
                "bruteforce": brute,
            })),
            "verified": problems.is_empty(),
            "mismatches": problems,
        }))
    } else {
        let mut out = String::new();
        writeln!(
            out,
            "witness: {} on colours {:?}",
            witness.kind, witness.embedding
        )
        .unwrap();
        writeln!(out, "gadget: {}", report.entry.gadget).unwrap();
        writeln!(out, "D'  = {}", report.dprime).unwrap();
        writeln!(
            out,
            "D   = {} (brute force {})",
            report.d, report.d_bruteforce
        )
        .unwrap();
        writeln!(
            out,
            "D*  = {} (brute force {})",
            report.dstar, report.dstar_bruteforce
        )
        .unwrap();
        if let Some((rp, sp)) = report.cond_h {
            writeln!(out, "separating pair: ({rp}, {sp})").unwrap();
        }
        if let Some((t, gg, brute)) = &report.thickened {
            writeln!(
                out,
                "D*_{t} = {} (brute force {brute}, {} vertices)",
                gg.interaction,
                gg.graph.vertex_count()
            )
            .unwrap();
        }
        if problems.is_empty() {
            out.push_str("verified\n");
        }
        out
    };
    if problems.is_empty() {
        Ok(out)
    } else {
        Err(CliError::Mismatch(format!("{out}{}", problems.join("\n"))))
    }
}

pub fn cmd_reduce_sat(h_file: &Path, instance_file: &Path, out: &Path) -> Result<String, CliError> {
    let h = load_h(h_file)?;
    let inst = parsed(
        instance_file,
        formats::parse_instance(&read(instance_file)?, h.n()),
    )?;
    let sf = find_staircase_biadjacency(&h)
        .or_else(|| find_staircase_adjacency(&h))
        .ok_or_else(|| CliError::Usage("H has no staircase form".into()))?;
    let enc = build_staircase_encoding(&h, &sf)?;
    let (f, vmap) = reduce_listhcol_to_1p1n(&enc, &inst)?;
    write(out, &formats::write_formula(&f))?;
    let side = sidecar(out);
    write(
        &side,
        &pretty(&json!({ "encoding": enc, "variables": vmap })),
    )?;
    Ok(format!(
        "wrote {} ({} variables, {} clauses) and {}\n",
        out.display(),
        f.var_count(),
        f.clauses().len(),
        side.display()
    ))
}

fn ising_gadget(
    h: &ColourGraph,
    t: Option<u32>,
) -> Result<(ExcludedWitness, GadgetReport, GadgetGraph), CliError> {
    let witness = select_witness(h, None)?;
    let report = build_report(h, &witness, t)?;
    verified(&report)?;
    let gg = match &report.thickened {
        Some((_, gg, _)) => gg.clone(),
        None => report.symmetrised.clone(),
    };
    Ok((witness, report, gg))
}

pub fn cmd_reduce_ising(
    g_file: &Path,
    h_file: &Path,
    t: Option<u32>,
    out: &Path,
) -> Result<String, CliError> {
    let g = parsed(g_file, formats::parse_graph(&read(g_file)?))?;
    let h = load_h(h_file)?;
    let (witness, report, gg) = ising_gadget(&h, t)?;
    let (inst, lambda, scale) = reduce_ising_to_listhcol(&g, &gg)?;
    write(out, &formats::write_instance(&inst))?;
    let side = sidecar(out);
    write(
        &side,
        &pretty(&json!({
            "lambda": lambda.to_string(),
            "scale": scale.to_string(),
            "witness": witness,
            "gadget": report.entry.gadget,
            "thickening": t,
            "interaction": gg.interaction,
            "terminal_colours": gg.terminal_colours,
        })),
    )?;
    Ok(format!(
        "wrote {} ({} vertices, lambda {lambda}, scale {scale}) and {}\n",
        out.display(),
        inst.graph.vertex_count(),
        side.display()
    ))
}
