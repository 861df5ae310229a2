use std::collections::BTreeMap;
use std::io::Read;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use tropbasis_core::tropical::{
    compute_bm, enumerate_minimal_bases, greedy_minimal_basis, has_unique_minimal_basis,
    is_tropical_basis, pasting_closure, GreedyTrace,
};
use tropbasis_core::{
    catalog, cycle_matroid, dual, gf2_matroid, has_u24_minor, induced_cycles, rank_and_bases,
    splitting_edge_cuts, symdiff_counterexample, BinaryMethod, CatalogName, CircuitMatroid, Error,
    ElementSet, Limits,
};

use crate::args::{Command, MethodArg};
use crate::error::CliError;
use crate::files::{
    lists, parse_gf2, parse_graph, parse_matroid, parse_subset, read_source, MatroidOut, SubsetOut,
    TOOL_VERSION,
};

/// A command result rendered both ways; the caller picks one.
pub struct Report {
    pub json: String,
    pub text: String,
}

fn report<T: Serialize>(value: &T, text: String) -> Result<Report, CliError> {
    let json = serde_json::to_string(value).map_err(|e| CliError::input("serialize", e.to_string()))?;
    Ok(Report { json, text })
}

fn fmt_sets(sets: &[ElementSet]) -> String {
    sets.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
}

fn matroid_text(m: &CircuitMatroid) -> String {
    let mut out = format!("n = {}, {} circuits\n", m.n(), m.circuit_count());
    for c in m.circuits() {
        out.push_str(&format!("  {c}\n"));
    }
    out
}

fn matroid_report(m: &CircuitMatroid, map: Option<Vec<usize>>) -> Result<Report, CliError> {
    let mut text = matroid_text(m);
    if let Some(map) = &map {
        text.push_str(&format!("element map (new -> old): {map:?}\n"));
    }
    report(&MatroidOut::new(m, map), text)
}

fn load_matroid(path: &str, stdin: &mut dyn Read) -> Result<CircuitMatroid, CliError> {
    parse_matroid(&read_source(path, stdin)?)
}

#[derive(Serialize)]
struct InfoOut {
    format: &'static str,
    tool_version: &'static str,
    n: usize,
    circuit_count: usize,
    /// `[size, count]` pairs, ascending by size.
    circuit_sizes: Vec<[usize; 2]>,
    simple: bool,
    uniform: Option<[usize; 2]>,
    rank: Option<usize>,
}

#[derive(Serialize)]
struct MinorOut {
    delete: Vec<usize>,
    contract: Vec<usize>,
}

#[derive(Serialize)]
struct BinaryOut {
    format: &'static str,
    tool_version: &'static str,
    method: &'static str,
    binary: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    symdiff_counterexample: Option<Option<[Vec<usize>; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    u24_minor: Option<Option<MinorOut>>,
}

#[derive(Serialize)]
struct BasisCheckOut {
    format: &'static str,
    tool_version: &'static str,
    is_basis: bool,
    witness: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct BmMemberOut {
    circuit: Vec<usize>,
    witness: Vec<usize>,
}

#[derive(Serialize)]
struct BmOut {
    format: &'static str,
    tool_version: &'static str,
    n: usize,
    members: Vec<BmMemberOut>,
}

#[derive(Serialize)]
struct TraceOut {
    format: &'static str,
    tool_version: &'static str,
    order: Vec<Vec<usize>>,
    kept: Vec<Vec<usize>>,
    removed: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct UniqueOut {
    format: &'static str,
    tool_version: &'static str,
    unique: bool,
    bm: Vec<Vec<usize>>,
    greedy_basis: Vec<Vec<usize>>,
    removed: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct BasesOut {
    format: &'static str,
    tool_version: &'static str,
    count: usize,
    unique: bool,
    bm: Vec<Vec<usize>>,
    bases: Vec<Vec<Vec<usize>>>,
}

fn trace_report(trace: &GreedyTrace) -> Result<Report, CliError> {
    let text = format!(
        "minimal tropical basis ({} circuits): {}\nremoved in order: {}\n",
        trace.kept.len(),
        fmt_sets(&trace.kept),
        fmt_sets(&trace.removed)
    );
    report(
        &TraceOut {
            format: "greedy-trace/v1",
            tool_version: TOOL_VERSION,
            order: lists(&trace.order),
            kept: lists(&trace.kept),
            removed: lists(&trace.removed),
        },
        text,
    )
}

fn set_arg(elements: &[usize], n: usize) -> Result<ElementSet, CliError> {
    ElementSet::from_elements(elements.iter().copied(), n).map_err(|e| CliError::usage(e.to_string()))
}

pub fn execute(command: Command, limits: &Limits, stdin: &mut dyn Read) -> Result<Report, CliError> {
    match command {
        Command::Validate { file } => matroid_report(&load_matroid(&file, stdin)?, None),

        Command::Info { file } => {
            let m = load_matroid(&file, stdin)?;
            let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
            for c in m.circuits() {
                *sizes.entry(c.len()).or_default() += 1;
            }
            let rank = match rank_and_bases(&m, limits) {
                Ok((r, _)) => Some(r),
                Err(Error::LimitExceeded { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            let out = InfoOut {
                format: "matroid-info/v1",
                tool_version: TOOL_VERSION,
                n: m.n(),
                circuit_count: m.circuit_count(),
                circuit_sizes: sizes.iter().map(|(&s, &c)| [s, c]).collect(),
                simple: m.is_simple(),
                uniform: m.is_uniform().map(|(d, n)| [d, n]),
                rank,
            };
            let text = format!(
                "n = {}\ncircuits = {} (by size: {:?})\nsimple = {}\nuniform = {}\nrank = {}\n",
                out.n,
                out.circuit_count,
                out.circuit_sizes,
                out.simple,
                out.uniform.map_or("no".to_string(), |[d, n]| format!("U_{{{d},{n}}}")),
                rank.map_or("(over cap)".to_string(), |r| r.to_string()),
            );
            report(&out, text)
        }

        Command::Simplify { file } => {
            let (s, map) = load_matroid(&file, stdin)?.simplify();
            matroid_report(&s, Some(map))
        }

        Command::Delete { elements, file } => {
            let m = load_matroid(&file, stdin)?;
            let (d, map) = m.delete_mapped(set_arg(&elements, m.n())?)?;
            matroid_report(&d, Some(map))
        }

        Command::Contract { elements, file } => {
            let m = load_matroid(&file, stdin)?;
            let (c, map) = m.contract_mapped(set_arg(&elements, m.n())?)?;
            matroid_report(&c, Some(map))
        }

        Command::Dual { file } => matroid_report(&dual(&load_matroid(&file, stdin)?, limits)?, None),

        Command::IsBinary { method, file } => {
            let m = load_matroid(&file, stdin)?;
            let method = match method {
                MethodArg::Symdiff => BinaryMethod::SymDiff,
                MethodArg::Minor => BinaryMethod::Minor,
                MethodArg::Cross => BinaryMethod::CrossCheck,
            };
            let counterexample = (method != BinaryMethod::Minor).then(|| symdiff_counterexample(&m));
            let minor = match method {
                BinaryMethod::SymDiff => None,
                _ => Some(has_u24_minor(&m, limits)?),
            };
            let binary = match (counterexample, &minor) {
                (Some(c), Some(mr)) => {
                    let (symdiff, minor) = (c.is_none(), mr.is_none());
                    if symdiff != minor {
                        return Err(Error::MethodDisagreement { symdiff, minor }.into());
                    }
                    symdiff
                }
                (Some(c), None) => c.is_none(),
                (None, Some(mr)) => mr.is_none(),
                (None, None) => unreachable!("at least one method runs"),
            };
            let out = BinaryOut {
                format: "binary-check/v1",
                tool_version: TOOL_VERSION,
                method: match method {
                    BinaryMethod::SymDiff => "symdiff",
                    BinaryMethod::Minor => "minor",
                    BinaryMethod::CrossCheck => "cross",
                },
                binary,
                symdiff_counterexample: counterexample.map(|c| c.map(|(a, b)| [a.to_vec(), b.to_vec()])),
                u24_minor: minor.as_ref().map(|r| {
                    r.as_ref().map(|r| MinorOut {
                        delete: r.delete_set.to_vec(),
                        contract: r.contract_set.to_vec(),
                    })
                }),
            };
            let mut text = format!("binary = {binary}\n");
            if let Some(Some((a, b))) = counterexample {
                text.push_str(&format!("{a} △ {b} is not a disjoint union of circuits\n"));
            }
            if let Some(Some(r)) = &minor {
                text.push_str(&format!(
                    "U_{{2,4}} minor: delete {} contract {}\n",
                    r.delete_set, r.contract_set
                ));
            }
            report(&out, text)
        }

        Command::Catalog { name } => {
            let name: CatalogName = name.parse()?;
            matroid_report(&catalog(name)?, None)
        }

        Command::FromGraph { file } => {
            let g = parse_graph(&read_source(&file, stdin)?)?;
            matroid_report(&cycle_matroid(&g, limits)?, None)
        }

        Command::FromGf2 { file } => {
            let m = parse_gf2(&read_source(&file, stdin)?)?;
            matroid_report(&gf2_matroid(&m, limits)?, None)
        }

        Command::IsBasis { basis, matroid } => {
            let m = load_matroid(&matroid, stdin)?;
            let family = parse_subset(&read_source(&basis, stdin)?, m.n())?;
            let check = is_tropical_basis(&m, &family, limits)?;
            let witness = check.witness.map(|w| w.ones);
            let text = match witness {
                None => "is_basis = true\n".to_string(),
                Some(w) => format!("is_basis = false\nwitness support: {w}\n"),
            };
            report(
                &BasisCheckOut {
                    format: "basis-check/v1",
                    tool_version: TOOL_VERSION,
                    is_basis: check.is_basis,
                    witness: witness.map(|w| w.to_vec()),
                },
                text,
            )
        }

        Command::Bm { file } => {
            let m = load_matroid(&file, stdin)?;
            let bm = compute_bm(&m, limits)?;
            let mut text = format!("B_M has {} circuits\n", bm.members.len());
            for member in &bm.members {
                text.push_str(&format!("  {}  witness {}\n", member.circuit, member.witness.ones));
            }
            let members = bm
                .members
                .iter()
                .map(|x| BmMemberOut {
                    circuit: x.circuit.to_vec(),
                    witness: x.witness.ones.to_vec(),
                })
                .collect();
            report(
                &BmOut {
                    format: "bm-result/v1",
                    tool_version: TOOL_VERSION,
                    n: m.n(),
                    members,
                },
                text,
            )
        }

        Command::MinimalBasis {
            order,
            shuffle_seed,
            file,
        } => {
            let m = load_matroid(&file, stdin)?;
            let order = match (order, shuffle_seed) {
                (Some(path), _) => parse_subset(&read_source(&path, stdin)?, m.n())?,
                (None, Some(seed)) => {
                    let mut o = m.circuits().to_vec();
                    o.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
                    o
                }
                (None, None) => m.circuits().to_vec(),
            };
            trace_report(&greedy_minimal_basis(&m, &order, limits)?)
        }

        Command::Unique { file } => {
            let m = load_matroid(&file, stdin)?;
            let r = has_unique_minimal_basis(&m, limits)?;
            let bm = r.bm.circuits();
            let text = format!(
                "unique = {}\nB_M: {}\ngreedy basis: {}\n",
                r.unique,
                fmt_sets(&bm),
                fmt_sets(&r.trace.kept)
            );
            report(
                &UniqueOut {
                    format: "unique-result/v1",
                    tool_version: TOOL_VERSION,
                    unique: r.unique,
                    bm: lists(&bm),
                    greedy_basis: lists(&r.trace.kept),
                    removed: lists(&r.trace.removed),
                },
                text,
            )
        }

        Command::EnumerateBases { file } => {
            let m = load_matroid(&file, stdin)?;
            let bases = enumerate_minimal_bases(&m, limits)?;
            let bm = compute_bm(&m, limits)?.circuits();
            let mut text = format!("{} minimal tropical bases\nB_M: {}\n", bases.len(), fmt_sets(&bm));
            for b in &bases {
                text.push_str(&format!("  [{}] {}\n", b.len(), fmt_sets(b)));
            }
            report(
                &BasesOut {
                    format: "minimal-bases/v1",
                    tool_version: TOOL_VERSION,
                    count: bases.len(),
                    unique: bases.len() == 1,
                    bm: lists(&bm),
                    bases: bases.iter().map(|b| lists(b)).collect(),
                },
                text,
            )
        }

        Command::Closure { seed_set, matroid } => {
            let m = load_matroid(&matroid, stdin)?;
            let seed = parse_subset(&read_source(&seed_set, stdin)?, m.n())?;
            let closure = pasting_closure(&m, &seed)?;
            let complete = closure.len() == m.circuit_count();
            let text = format!(
                "closure ({} of {} circuits): {}\n",
                closure.len(),
                m.circuit_count(),
                fmt_sets(&closure)
            );
            let mut out = SubsetOut::new(&closure);
            out.complete = Some(complete);
            report(&out, text)
        }

        Command::InducedCycles { file } => {
            let g = parse_graph(&read_source(&file, stdin)?)?;
            let cycles = induced_cycles(&g, limits)?;
            let text = format!("{} induced cycles: {}\n", cycles.len(), fmt_sets(&cycles));
            report(&SubsetOut::new(&cycles), text)
        }

        Command::SplittingCuts { file } => {
            let g = parse_graph(&read_source(&file, stdin)?)?;
            let cuts = splitting_edge_cuts(&g, limits)?;
            let text = format!("{} splitting cuts: {}\n", cuts.len(), fmt_sets(&cuts));
            report(&SubsetOut::new(&cuts), text)
        }
    }
}
