//! Toolkit for publishing the OPS social participation vocabulary as linked data.
//!
//! The crate is organised around a small RDF core and a set of layers that
//! build on it:
//!
//! * [`rdf`] — terms, triples, and an indexed in-memory graph
//! * [`turtle`] — a Turtle subset parser and a deterministic serializer
//! * [`schema`] — the OPS vocabulary itself, as typed declarations plus
//!   conversions to and from RDF
//! * [`reason`] — subclass closure, forward-chaining materialization, and
//!   consistency checks
//! * [`sparql`] — a basic-graph-pattern query engine with TSV and JSON results
//! * [`triplify`] — CSV to RDF conversion driven by a mapping spec
//! * [`ld`] — resource descriptions, content negotiation, and service
//!   configuration for the HTTP front-end
//!
//! Everything is deterministic: graphs iterate in term order, serialization is
//! byte-stable, and query results are sorted. Two runs over the same inputs
//! produce identical bytes.

pub mod ld;
pub mod rdf;
pub mod reason;
pub mod schema;
pub mod sparql;
pub mod triplify;
pub mod turtle;

pub use rdf::{BlankNode, Graph, Iri, Literal, PrefixMap, RdfError, Subject, Term, Triple};
