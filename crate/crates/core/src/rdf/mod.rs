//! RDF terms, triples, and an indexed in-memory graph.
//!
//! Terms follow the RDF 1.1 abstract syntax restricted to what the toolkit
//! needs: IRIs, blank nodes, and literals with an optional language tag or
//! datatype. Typing makes the structural rules unrepresentable rather than
//! checked: a [`Triple`] subject is a [`Subject`] (never a literal) and its
//! predicate is always an [`Iri`].
//!
//! [`Graph`] is a set of triples held in three permutation indexes so that
//! any single-pattern lookup is a prefix scan. All collections are ordered,
//! which makes iteration, serialization, and query output deterministic.

mod graph;
mod iso;
mod prefix;
mod term;

pub use graph::Graph;
pub use prefix::PrefixMap;
pub use term::{BlankNode, Iri, Literal, RdfError, Subject, Term, Triple};
