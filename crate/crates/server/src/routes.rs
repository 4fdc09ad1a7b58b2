//! Route table and request handlers.
//!
//! Three surfaces: `/health`, `/sparql` (GET query parameter or POST form
//! field), and a fallback that treats any other path as a resource to
//! dereference under the configured base's origin. Handlers only read the
//! shared [`Snapshot`], so identical requests produce identical bytes.

use std::collections::HashMap;
use std::sync::Arc;

use axum::extract::{Query, State};
use axum::http::{header, HeaderMap, StatusCode, Uri};
use axum::response::{IntoResponse, Response};
use axum::routing::get;
use axum::{Form, Router};
use opskit::ld::{describe_graph, html_page, negotiate, Format};
use opskit::sparql::{evaluate, parse_query_with_prefixes};
use opskit::Iri;

use crate::snapshot::Snapshot;

pub fn router(snapshot: Arc<Snapshot>) -> Router {
    Router::new()
        .route("/health", get(health))
        .route("/sparql", get(sparql_get).post(sparql_post))
        .fallback(dereference)
        .with_state(snapshot)
}

async fn health() -> &'static str {
    "ok"
}

fn accept_header(headers: &HeaderMap) -> String {
    headers
        .get(header::ACCEPT)
        .and_then(|value| value.to_str().ok())
        .unwrap_or("")
        .to_owned()
}

fn run_query(snapshot: &Snapshot, text: &str, accept: &str) -> Response {
    let query = match parse_query_with_prefixes(text, &snapshot.prefixes) {
        Ok(query) => query,
        Err(diagnostics) => {
            let body: String = diagnostics.iter().map(|d| format!("{d}\n")).collect();
            return (StatusCode::BAD_REQUEST, body).into_response();
        }
    };
    let table = evaluate(&query, &snapshot.graph);
    match negotiate(accept) {
        Format::SparqlJson => (
            StatusCode::OK,
            [(header::CONTENT_TYPE, Format::SparqlJson.media_type())],
            table.to_sparql_json().to_string(),
        )
            .into_response(),
        _ => (
            StatusCode::OK,
            [(header::CONTENT_TYPE, Format::Tsv.media_type())],
            table.to_tsv(),
        )
            .into_response(),
    }
}

async fn sparql_get(
    State(snapshot): State<Arc<Snapshot>>,
    headers: HeaderMap,
    Query(params): Query<HashMap<String, String>>,
) -> Response {
    match params.get("query") {
        Some(text) => run_query(&snapshot, text, &accept_header(&headers)),
        None => (StatusCode::BAD_REQUEST, "missing query parameter\n").into_response(),
    }
}

async fn sparql_post(
    State(snapshot): State<Arc<Snapshot>>,
    headers: HeaderMap,
    Form(params): Form<HashMap<String, String>>,
) -> Response {
    match params.get("query") {
        Some(text) => run_query(&snapshot, text, &accept_header(&headers)),
        None => (StatusCode::BAD_REQUEST, "missing query form field\n").into_response(),
    }
}

async fn dereference(
    State(snapshot): State<Arc<Snapshot>>,
    headers: HeaderMap,
    uri: Uri,
) -> Response {
    let not_found =
        |detail: String| (StatusCode::NOT_FOUND, detail).into_response();
    let Some(path) = percent_decode(uri.path()) else {
        return not_found("no such resource\n".to_owned());
    };
    let focus = match Iri::new(format!("{}{}", snapshot.origin, path)) {
        Ok(iri) => iri,
        Err(_) => return not_found("no such resource\n".to_owned()),
    };
    let description = describe_graph(&focus, &snapshot.graph);
    if description.is_empty() {
        return not_found(format!("no data about {focus}\n"));
    }
    match negotiate(&accept_header(&headers)) {
        Format::Html => (
            StatusCode::OK,
            [(header::CONTENT_TYPE, Format::Html.media_type())],
            html_page(&description, &snapshot.prefixes),
        )
            .into_response(),
        _ => (
            StatusCode::OK,
            [(header::CONTENT_TYPE, Format::Turtle.media_type())],
            description.to_turtle(&snapshot.prefixes),
        )
            .into_response(),
    }
}

/// Decodes `%XX` escapes; returns None on malformed escapes or bytes that
/// do not form UTF-8.
fn percent_decode(text: &str) -> Option<String> {
    let bytes = text.as_bytes();
    let mut out = Vec::with_capacity(bytes.len());
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'%' {
            let hex = bytes.get(i + 1..i + 3)?;
            let hi = (hex[0] as char).to_digit(16)?;
            let lo = (hex[1] as char).to_digit(16)?;
            out.push((hi * 16 + lo) as u8);
            i += 3;
        } else {
            out.push(bytes[i]);
            i += 1;
        }
    }
    String::from_utf8(out).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn percent_decoding_handles_escapes_and_rejects_junk() {
        assert_eq!(percent_decode("/plain"), Some("/plain".to_owned()));
        assert_eq!(percent_decode("/a%20b"), Some("/a b".to_owned()));
        assert_eq!(percent_decode("/caf%C3%A9"), Some("/café".to_owned()));
        assert_eq!(percent_decode("/bad%GG"), None);
        assert_eq!(percent_decode("/cut%2"), None);
        assert_eq!(percent_decode("/lone%C3"), None);
    }
}
