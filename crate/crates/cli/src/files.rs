//! On-disk JSON schemas. Element lists are 1-based; readers accept any
//! order and canonicalize, writers always emit ascending lists.

use std::io::Read;

use serde::{Deserialize, Serialize};
use tropbasis_core::{validate_circuits, CircuitMatroid, ElementSet, Gf2Matrix, Graph};

use crate::error::CliError;

pub const MATROID_FORMAT: &str = "matroid-circuits/v1";
pub const GRAPH_FORMAT: &str = "graph/v1";
pub const GF2_FORMAT: &str = "gf2-matrix/v1";
pub const SUBSET_FORMAT: &str = "circuit-subset/v1";

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Deserialize)]
struct MatroidFile {
    format: String,
    n: usize,
    circuits: Vec<Vec<usize>>,
}

#[derive(Debug, Deserialize)]
struct GraphFile {
    format: String,
    vertices: usize,
    edges: Vec<[usize; 2]>,
}

#[derive(Debug, Deserialize)]
struct Gf2File {
    format: String,
    rows: Vec<String>,
}

#[derive(Debug, Deserialize)]
struct SubsetFile {
    format: String,
    circuits: Vec<Vec<usize>>,
}

/// Reads a path, or standard input for `-`.
pub fn read_source(path: &str, stdin: &mut dyn Read) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        stdin
            .read_to_string(&mut buf)
            .map_err(|e| CliError::input("io", format!("reading standard input: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::input("io", format!("reading {path}: {e}")))
    }
}

fn parse_json<'a, T: Deserialize<'a>>(text: &'a str, what: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::input("parse", format!("{what}: {e}")))
}

fn expect_format(found: &str, expected: &str) -> Result<(), CliError> {
    if found != expected {
        return Err(CliError::input(
            "format",
            format!("expected format {expected:?}, found {found:?}"),
        ));
    }
    Ok(())
}

pub fn element_set(list: &[usize], n: usize) -> Result<ElementSet, CliError> {
    Ok(ElementSet::from_elements(list.iter().copied(), n)?)
}

pub fn parse_matroid(text: &str) -> Result<CircuitMatroid, CliError> {
    let file: MatroidFile = parse_json(text, "matroid file")?;
    expect_format(&file.format, MATROID_FORMAT)?;
    let circuits = file
        .circuits
        .iter()
        .map(|c| element_set(c, file.n))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(validate_circuits(file.n, &circuits)?)
}

pub fn parse_graph(text: &str) -> Result<Graph, CliError> {
    let file: GraphFile = parse_json(text, "graph file")?;
    expect_format(&file.format, GRAPH_FORMAT)?;
    Ok(Graph::new(file.vertices, file.edges.iter().map(|[u, v]| (*u, *v)).collect())?)
}

pub fn parse_gf2(text: &str) -> Result<Gf2Matrix, CliError> {
    let file: Gf2File = parse_json(text, "GF(2) matrix file")?;
    expect_format(&file.format, GF2_FORMAT)?;
    Ok(Gf2Matrix::from_rows(&file.rows)?)
}

/// Element sets of a circuit-subset file; membership in a particular
/// matroid is checked by the library call that consumes them.
pub fn parse_subset(text: &str, n: usize) -> Result<Vec<ElementSet>, CliError> {
    let file: SubsetFile = parse_json(text, "circuit-subset file")?;
    expect_format(&file.format, SUBSET_FORMAT)?;
    file.circuits.iter().map(|c| element_set(c, n)).collect()
}

pub fn lists(sets: &[ElementSet]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.to_vec()).collect()
}

#[derive(Debug, Serialize)]
pub struct MatroidOut {
    pub format: &'static str,
    pub tool_version: &'static str,
    pub n: usize,
    pub circuits: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element_map: Option<Vec<usize>>,
}

impl MatroidOut {
    pub fn new(m: &CircuitMatroid, element_map: Option<Vec<usize>>) -> Self {
        MatroidOut {
            format: MATROID_FORMAT,
            tool_version: TOOL_VERSION,
            n: m.n(),
            circuits: lists(m.circuits()),
            element_map,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SubsetOut {
    pub format: &'static str,
    pub tool_version: &'static str,
    pub circuits: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complete: Option<bool>,
}

impl SubsetOut {
    pub fn new(sets: &[ElementSet]) -> Self {
        SubsetOut {
            format: SUBSET_FORMAT,
            tool_version: TOOL_VERSION,
            circuits: lists(sets),
            complete: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matroid_parse_canonicalizes() {
        let m = parse_matroid(r#"{"format":"matroid-circuits/v1","n":4,"circuits":[[4,3,2],[1,2,3],[4,1,3],[1,2,4]]}"#)
            .unwrap();
        assert_eq!(m.circuits()[0], ElementSet::from([1, 2, 3]));
        assert_eq!(m.is_uniform(), Some((2, 4)));
    }

    #[test]
    fn unknown_fields_are_ignored() {
        let m = parse_matroid(r#"{"format":"matroid-circuits/v1","tool_version":"9","n":2,"circuits":[]}"#).unwrap();
        assert_eq!(m.n(), 2);
    }

    #[test]
    fn wrong_format_tag_is_rejected() {
        let err = parse_matroid(r#"{"format":"graph/v1","n":2,"circuits":[]}"#).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn graph_and_matrix_files() {
        let g = parse_graph(r#"{"format":"graph/v1","vertices":3,"edges":[[1,2],[2,3],[3,1]]}"#).unwrap();
        assert_eq!(g.edge_count(), 3);
        let m = parse_gf2(r#"{"format":"gf2-matrix/v1","rows":["101","011"]}"#).unwrap();
        assert_eq!(m.col_count(), 3);
        assert!(parse_gf2(r#"{"format":"gf2-matrix/v1","rows":["10","011"]}"#).is_err());
    }

    #[test]
    fn duplicate_element_in_list_is_rejected() {
        assert!(parse_matroid(r#"{"format":"matroid-circuits/v1","n":3,"circuits":[[1,1,2]]}"#).is_err());
    }
}
