//! SELECT queries over one basic graph pattern.
//!
//! The grammar is the slice the toolkit's datasets call for: optional
//! `PREFIX` declarations, `SELECT [DISTINCT]` with a variable list or `*`,
//! one `WHERE { ... }` group of dot-separated triple patterns, and an
//! optional positive `LIMIT`. Keywords are case-insensitive, variables are
//! `?`-prefixed, `a` abbreviates `rdf:type` in predicate position, and
//! literals may appear in object position only. OPTIONAL, FILTER, UNION,
//! property paths, and aggregation are out of scope.
//!
//! Evaluation is a nested-loop join over the patterns left to right, with
//! bag semantics unless DISTINCT. There is no ORDER BY; instead rows always
//! come back sorted by term order, so equal inputs give byte-equal output
//! and LIMIT is meaningful. Results serialize as tab-separated text or the
//! SPARQL-results JSON shape.

mod ast;
mod eval;
mod parse;
mod results;

pub use ast::{PatternTerm, Projection, Query, TriplePattern};
pub use eval::evaluate;
pub use parse::{parse_query, parse_query_with_prefixes};
pub use results::ResultTable;
