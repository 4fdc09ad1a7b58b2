//! The OPS vocabulary as typed declarations.
//!
//! The ontology ships in three profiles. `core` is the published vocabulary:
//! 14 classes and 12 object properties, aligned to BFO and FOAF upper
//! classes, with no restrictions. `restricted` layers the 12 historical
//! existential restrictions back on top of core. `expanded` layers the
//! example expansion on top of core instead: 17 subclasses of Organization
//! and Executor, three more properties, six disjointness pairs, and two
//! defined classes.
//!
//! A schema converts losslessly to RDF and back ([`schema_to_graph`],
//! [`graph_to_schema`]), diffs against another schema ([`diff_schemas`]),
//! and is immutable once built, so it can be shared freely across threads.

mod decl;
mod diff;
mod graph;
mod meta;
mod profiles;
pub mod vocab;

pub use decl::{
    ClassDecl, DefinedClassDecl, DisjointnessDecl, Labels, OntologySchema, Profile, PropertyDecl,
    RestrictionDecl, RestrictionKind, SchemaError,
};
pub use diff::{diff_schemas, ChangeReport, Rename};
pub use graph::{detect_base, graph_to_schema, ops_prefix_map, schema_to_graph};
pub use meta::{alternate_name, intended_usage};
pub use profiles::{
    build_ops_core, build_ops_core_at, build_ops_expanded, build_ops_expanded_at,
    build_ops_restricted, build_ops_restricted_at, build_vcps_fixture,
};
