//! Forward-chaining inference and validation over a graph, driven by a
//! schema.
//!
//! [`materialize`] computes the least fixpoint of four rules: subclass type
//! propagation (over schema edges plus any `rdfs:subClassOf` triples in the
//! data itself), range-based typing, inverse-property materialization, and
//! defined-class classification. It never mutates its input and is
//! idempotent and monotone.
//!
//! [`check_disjointness`] and [`validate_restrictions`] report
//! [`Violation`]s over an already materialized graph. Restriction checking
//! is a closed-world lint: an individual missing a required edge is flagged,
//! where OWL's open-world reading would merely assume the edge exists
//! somewhere unseen.

mod closure;
mod materialize;
mod validate;

pub use closure::{subclass_closure, ClosureTable};
pub use materialize::materialize;
pub use validate::{
    check_disjointness, validate_restrictions, violations_to_json, violations_to_text, Violation,
    ViolationKind,
};
