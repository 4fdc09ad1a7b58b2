//! Linked-data plumbing behind the HTTP service.
//!
//! Dereferencing an IRI answers with its [`ResourceDescription`]: the
//! triples it points out of, the triples pointing into it, and its labels.
//! [`negotiate`] picks the response format from the Accept header, with
//! Turtle as the machine default. The HTML rendering embeds its Turtle
//! source in a marked block so both formats provably carry the same
//! triples. [`ServiceConfig`] is the flat key=value file the `serve`
//! command reads.
//!
//! The HTTP layer itself lives in the server crate; everything here is
//! plain functions over graphs so it tests without sockets.

mod config;
mod describe;
mod html;
mod negotiate;

pub use config::{parse_service_config, ConfigError, ServiceConfig};
pub use describe::{describe, describe_graph, ResourceDescription};
pub use html::{extract_turtle_block, html_page};
pub use negotiate::{negotiate, Format};
