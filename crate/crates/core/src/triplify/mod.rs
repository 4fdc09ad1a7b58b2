//! CSV-to-RDF conversion driven by a mapping spec.
//!
//! A mapping spec names, per entity, a subject IRI template over the CSV
//! columns, an ontology class, and per-column object rules (plain, typed,
//! or language-tagged literals, or IRI templates for links). Ingestion
//! emits one type triple per kept row application plus one triple per
//! non-empty mapped cell.
//!
//! Dirty rows never abort a run. A cell with whitespace under an IRI
//! template, an empty subject column, or a subject that is not an IRI
//! skips that application and the report records the row and reason.
//! Properties must resolve in the schema or be whitelisted, and columns
//! must exist in the header; those are errors up front, not skips.

mod ingest;
mod spec;

pub use ingest::{ingest_csv, IngestReport, RowSkip, SkipReason};
pub use spec::{
    parse_mapping_spec, ColumnRule, EntityMapping, ExpandFailure, MappingError, MappingSpec,
    ObjectKind, Template,
};
