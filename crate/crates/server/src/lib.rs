//! HTTP front-end for the OPS toolkit: dereferenceable resource IRIs with
//! content negotiation, a SPARQL endpoint, and a health probe.
//!
//! The server owns no mutable state. Configuration is loaded once into a
//! [`Snapshot`] (schema triples unioned with the data files, materialized
//! when inference is on) and shared behind an [`std::sync::Arc`] by every
//! handler. Reloading means building a new snapshot and a new router.
//!
//! Resource paths resolve against the origin of the configured base IRI:
//! with base `http://purl.org/socialparticipation/ops`, a request for
//! `/socialparticipation/ops/SocialActor` describes the class IRI, and any
//! other IRI under the same host is reachable the same way.

mod routes;
mod snapshot;

use std::sync::Arc;

use opskit::ld::ServiceConfig;

pub use routes::router;
pub use snapshot::{ServeError, Snapshot};

/// Serves an already bound listener until the process ends.
pub async fn serve_on(
    listener: tokio::net::TcpListener,
    snapshot: Arc<Snapshot>,
) -> Result<(), ServeError> {
    axum::serve(listener, router(snapshot))
        .await
        .map_err(ServeError::Runtime)
}

/// Builds the snapshot, binds, and blocks the calling thread on the server.
/// Prints one line with the bound address once listening.
pub fn run_blocking(config: &ServiceConfig) -> Result<(), ServeError> {
    let snapshot = Arc::new(Snapshot::build(config)?);
    let runtime = tokio::runtime::Builder::new_multi_thread()
        .enable_all()
        .build()
        .map_err(ServeError::Runtime)?;
    runtime.block_on(async move {
        let listener = tokio::net::TcpListener::bind(&config.bind)
            .await
            .map_err(|source| ServeError::Bind {
                addr: config.bind.clone(),
                source,
            })?;
        let addr = listener.local_addr().map_err(ServeError::Runtime)?;
        println!("listening on http://{addr}");
        serve_on(listener, snapshot).await
    })
}
