//! Shared loading helpers: profiles, Turtle files, schema documents.

use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use opskit::schema::{graph_to_schema, OntologySchema, Profile};
use opskit::turtle::parse_turtle;
use opskit::{Graph, Iri};

/// Builds the named profile, honoring the `OPS_BASE_IRI` environment
/// variable as a base override.
pub fn schema_for(profile_name: &str) -> Result<OntologySchema> {
    let profile: Profile = profile_name
        .parse()
        .map_err(|message: String| anyhow!("{message}"))?;
    match std::env::var("OPS_BASE_IRI") {
        Ok(value) => {
            let base = Iri::new(value.trim())
                .with_context(|| "OPS_BASE_IRI is not a usable IRI".to_owned())?;
            Ok(profile.build_at(base))
        }
        Err(_) => Ok(profile.build()),
    }
}

/// Parses one Turtle file; diagnostics go to stderr, the error to the exit
/// code.
pub fn graph_from_file(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    match parse_turtle(&text) {
        Ok((graph, _)) => Ok(graph),
        Err(diagnostics) => {
            for d in &diagnostics {
                eprintln!("{}:{d}", path.display());
            }
            bail!(
                "{} did not parse ({} diagnostic(s))",
                path.display(),
                diagnostics.len()
            )
        }
    }
}

/// Parses and merges several Turtle files into one graph.
pub fn merge_files(paths: &[PathBuf]) -> Result<Graph> {
    let mut graph = Graph::new();
    for path in paths {
        graph.merge(&graph_from_file(path)?);
    }
    Ok(graph)
}

/// Reads a schema document: Turtle first, then declaration reconstruction.
pub fn schema_from_file(path: &Path) -> Result<OntologySchema> {
    let graph = graph_from_file(path)?;
    graph_to_schema(&graph)
        .with_context(|| format!("{} is not a schema document", path.display()))
}
