//! Microbenchmarks over the hot paths: graph storage, Turtle codecs,
//! schema construction, reasoning, and query evaluation. All inputs are
//! seeded so runs compare like against like.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use opskit::reason::{materialize, subclass_closure};
use opskit::schema::{build_ops_expanded, ops_prefix_map, schema_to_graph, vocab, Profile};
use opskit::sparql::{evaluate, parse_query_with_prefixes, Query};
use opskit::turtle::{parse_turtle, serialize_turtle};
use opskit::{Graph, Iri, Literal, Triple};

const ACTORS: usize = 300;

/// A participation network shaped like real seed data: each actor starts
/// or supports a cause, causes carry actions, actions produce results.
fn synthetic_graph() -> Graph {
    let schema = build_ops_expanded();
    let ops = |name: &str| schema.iri_of(name).expect("declared name");
    let node = |kind: &str, i: usize| Iri::new(format!("http://bench.example/{kind}{i}")).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0xbe9c);
    let mut graph = Graph::new();

    let causes = ACTORS / 10;
    for c in 0..causes {
        graph.insert(Triple::new(node("cause", c), vocab::rdf_type(), ops("Cause")));
        graph.insert(Triple::new(node("cause", c), ops("action"), node("action", c)));
        graph.insert(Triple::new(node("action", c), ops("produces"), node("result", c)));
        graph.insert(Triple::new(
            node("action", c),
            ops("belongsTo"),
            node("scope", c % 4),
        ));
    }
    for a in 0..ACTORS {
        let class = if a % 3 == 0 { "Organization" } else { "Person" };
        graph.insert(Triple::new(node("actor", a), vocab::rdf_type(), ops(class)));
        graph.insert(Triple::new(
            node("actor", a),
            vocab::rdfs_label(),
            Literal::lang(format!("integrante {a}"), "pt-br").unwrap(),
        ));
        let cause = node("cause", rng.random_range(0..causes));
        let verb = if rng.random_bool(0.3) { "starts" } else { "supports" };
        graph.insert(Triple::new(node("actor", a), ops(verb), cause));
        if rng.random_bool(0.5) {
            graph.insert(Triple::new(
                node("actor", a),
                ops("executes"),
                node("action", rng.random_range(0..causes)),
            ));
        }
    }
    graph
}

fn join_query() -> Query {
    let schema = build_ops_expanded();
    let text = "select ?s ?s2 ?o where {?s a ops:Cause . ?s ops:action ?s2 . ?s2 ops:produces ?o}";
    parse_query_with_prefixes(text, &ops_prefix_map(schema.base())).expect("query parses")
}

fn bench_graph(c: &mut Criterion) {
    let triples: Vec<Triple> = synthetic_graph().iter().collect();
    c.bench_function("graph/insert", |b| {
        b.iter_batched(
            || triples.clone(),
            |batch| {
                let mut graph = Graph::new();
                for triple in batch {
                    graph.insert(triple);
                }
                graph
            },
            BatchSize::SmallInput,
        )
    });

    let graph = synthetic_graph();
    let schema = build_ops_expanded();
    let person = schema.iri_of("Person").unwrap();
    c.bench_function("graph/match_by_type", |b| {
        b.iter(|| {
            black_box(graph.matching(
                None,
                Some(&vocab::rdf_type()),
                Some(&opskit::Term::Iri(person.clone())),
            ))
        })
    });
}

fn bench_turtle(c: &mut Criterion) {
    let schema = build_ops_expanded();
    let prefixes = ops_prefix_map(schema.base());
    let graph = synthetic_graph();
    let text = serialize_turtle(&graph, &prefixes);

    c.bench_function("turtle/parse", |b| {
        b.iter(|| parse_turtle(black_box(&text)).unwrap())
    });
    c.bench_function("turtle/serialize", |b| {
        b.iter(|| serialize_turtle(black_box(&graph), &prefixes))
    });
}

fn bench_schema(c: &mut Criterion) {
    c.bench_function("schema/build_expanded", |b| {
        b.iter(|| Profile::Expanded.build())
    });

    let schema = build_ops_expanded();
    c.bench_function("schema/to_graph", |b| b.iter(|| schema_to_graph(&schema)));
    c.bench_function("reason/subclass_closure", |b| {
        b.iter(|| subclass_closure(&schema).unwrap())
    });
}

fn bench_reason(c: &mut Criterion) {
    let schema = build_ops_expanded();
    let graph = synthetic_graph();
    c.bench_function("reason/materialize", |b| {
        b.iter(|| materialize(black_box(&graph), &schema))
    });
}

fn bench_query(c: &mut Criterion) {
    let schema = build_ops_expanded();
    let graph = materialize(&synthetic_graph(), &schema);
    let query = join_query();
    c.bench_function("sparql/three_pattern_join", |b| {
        b.iter(|| evaluate(black_box(&query), &graph))
    });
}

criterion_group!(
    benches,
    bench_graph,
    bench_turtle,
    bench_schema,
    bench_reason,
    bench_query
);
criterion_main!(benches);
