//! Loading graphs from the command line.

use std::fs;
use std::path::Path;

use indom::{FamilySpec, Graph};

use crate::args::{FamilyArgs, InputArgs};
use crate::CliError;

/// A graph together with a short label for human output.
pub struct Loaded {
    pub label: String,
    pub graph: Graph,
}

pub fn load(input: &InputArgs) -> Result<Loaded, CliError> {
    if let Some(text) = &input.graph6 {
        return Ok(Loaded { label: text.clone(), graph: Graph::from_graph6(text)? });
    }
    if let Some(path) = &input.file {
        return Ok(Loaded { label: path.display().to_string(), graph: read_graph_file(path)? });
    }
    let spec = family_spec(&input.family)?;
    Ok(Loaded { label: spec.to_string(), graph: spec.graph()? })
}

pub fn family_spec(args: &FamilyArgs) -> Result<FamilySpec, CliError> {
    let name = args.family.as_deref().ok_or_else(|| CliError::Usage("--family is required".into()))?;
    Ok(FamilySpec::from_parts(name, args.n, args.m, args.q, args.k, args.parts.as_deref())?)
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// Reads a graph6 line or an edge list. The two are told apart by the first
/// meaningful character: graph6 uses bytes 63..=126, edge lists start with
/// a decimal vertex count.
pub fn read_graph_file(path: &Path) -> Result<Graph, CliError> {
    let text = read_text(path)?;
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if first.starts_with(|c: char| c.is_ascii_digit()) || first.is_empty() {
        Ok(Graph::from_edge_list(&text)?)
    } else {
        Ok(Graph::from_graph6(first)?)
    }
}
