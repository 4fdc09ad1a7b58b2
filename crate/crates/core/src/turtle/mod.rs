//! Turtle subset reader and writer.
//!
//! The reader covers the slice of Turtle the toolkit emits and consumes:
//! `@prefix` and `@base` directives, predicate-object and object lists,
//! the `a` keyword, IRIs, prefixed names, `_:` blank node labels, and
//! plain, language-tagged, typed, and triple-quoted string literals with
//! the `\" \\ \n \t \r` and `\uXXXX`/`\UXXXXXXXX` escapes.
//!
//! Collections `( ... )`, blank node property lists `[ ... ]`, numeric and
//! boolean shorthand, and single-quoted strings are out of scope; each is
//! rejected with a diagnostic naming the construct. Parsing recovers at the
//! next statement terminator and collects up to [`MAX_DIAGNOSTICS`]
//! diagnostics before giving up.
//!
//! The writer is deterministic: prefix directives sorted by prefix name,
//! subject blocks sorted by term, predicates by expanded IRI, objects by
//! term order. Equal graph and prefix map in, identical bytes out.

mod parse;
mod serialize;

pub use parse::{
    parse_turtle, parse_turtle_bytes, DiagnosticKind, ParseDiagnostic, MAX_DIAGNOSTICS,
};
pub use serialize::serialize_turtle;
pub(crate) use serialize::term_str;
