//! The immutable state every request handler shares.

use std::path::PathBuf;

use opskit::ld::ServiceConfig;
use opskit::reason::materialize;
use opskit::schema::{ops_prefix_map, schema_to_graph, OntologySchema};
use opskit::turtle::{parse_turtle, ParseDiagnostic};
use opskit::{Graph, Iri, PrefixMap};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ServeError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {} parse diagnostic(s)", path.display(), diagnostics.len())]
    Parse {
        path: PathBuf,
        diagnostics: Vec<ParseDiagnostic>,
    },
    #[error("bind {addr}: {source}")]
    Bind {
        addr: String,
        source: std::io::Error,
    },
    #[error("server runtime: {0}")]
    Runtime(std::io::Error),
}

/// Everything a handler needs, computed once. The graph already unions the
/// schema's own triples with the data files, materialized when inference is
/// on, so handlers never reason per request.
pub struct Snapshot {
    pub base: Iri,
    pub schema: OntologySchema,
    pub graph: Graph,
    pub prefixes: PrefixMap,
    /// scheme plus authority of `base`; request paths are resolved under it.
    pub origin: String,
}

impl Snapshot {
    /// Loads the configured profile and data files.
    pub fn build(config: &ServiceConfig) -> Result<Snapshot, ServeError> {
        let schema = config.profile.build_at(config.base.clone());
        let mut data = Graph::new();
        for path in &config.data {
            let text = std::fs::read_to_string(path).map_err(|source| ServeError::Io {
                path: path.clone(),
                source,
            })?;
            let (file_graph, _) = parse_turtle(&text).map_err(|diagnostics| ServeError::Parse {
                path: path.clone(),
                diagnostics,
            })?;
            data.merge(&file_graph);
        }
        Ok(Snapshot::from_parts(schema, &data, config.inference))
    }

    /// Assembles a snapshot from an already loaded schema and data graph.
    pub fn from_parts(schema: OntologySchema, data: &Graph, inference: bool) -> Snapshot {
        let base = schema.base().clone();
        let mut graph = schema_to_graph(&schema);
        graph.merge(data);
        if inference {
            graph = materialize(&graph, &schema);
        }
        let prefixes = ops_prefix_map(&base);
        let origin = origin_of(&base);
        Snapshot {
            base,
            schema,
            graph,
            prefixes,
            origin,
        }
    }
}

/// `scheme://authority` of an IRI, the whole IRI when it has no path.
fn origin_of(iri: &Iri) -> String {
    let text = iri.as_str();
    match text.find("://") {
        Some(at) => match text[at + 3..].find('/') {
            Some(slash) => text[..at + 3 + slash].to_owned(),
            None => text.to_owned(),
        },
        None => text.to_owned(),
    }
}
