//! Strategies for random instance graphs over the expanded vocabulary.
//!
//! The pools are deliberately tiny: eight named individuals, a few blank
//! nodes, the classes with interesting ancestry, and the properties that
//! carry ranges or inverses. Small pools make the generated graphs collide
//! enough that subclass chains, inverse edges, and defined classes all fire.
//!
//! Included only by the suites that need schema-aware data; the generic
//! term strategies live in `common/mod.rs`.

// Each test binary uses its own subset of these helpers.
#![allow(dead_code)]

use opskit::schema::{build_ops_expanded, vocab};
use opskit::{BlankNode, Graph, Iri, Literal, Subject, Triple};
use proptest::prelude::*;
use proptest::sample::select;

const CLASS_NAMES: [&str; 10] = [
    "Person",
    "Organization",
    "Executor",
    "VoluntaryExecutor",
    "Mob",
    "SocialNetwork",
    "GiantMob",
    "Cause",
    "Action",
    "Theme",
];

const DEFINED_NAMES: [&str; 2] = ["PaidExecutor", "DownloadedMob"];

const PROPERTY_NAMES: [&str; 9] = [
    "theme",
    "belongsTo",
    "action",
    "starts",
    "executes",
    "supports",
    "receivesFrom",
    "paysTo",
    "convoquedBy",
];

/// A class the schema knows nothing about; data-level `rdfs:subClassOf`
/// edges are the only way it joins the hierarchy.
pub fn foreign_class() -> Iri {
    Iri::new("http://ext.example/Member").unwrap()
}

pub fn class_pool(include_defined: bool) -> Vec<Iri> {
    let s = build_ops_expanded();
    let mut pool: Vec<Iri> = CLASS_NAMES.iter().map(|n| s.iri_of(n).unwrap()).collect();
    if include_defined {
        pool.extend(DEFINED_NAMES.iter().map(|n| s.iri_of(n).unwrap()));
    }
    pool.push(foreign_class());
    pool
}

pub fn property_pool() -> Vec<Iri> {
    let s = build_ops_expanded();
    PROPERTY_NAMES.iter().map(|n| s.iri_of(n).unwrap()).collect()
}

pub fn arb_individual() -> impl Strategy<Value = Subject> {
    prop_oneof![
        4 => (0u8..8).prop_map(|i| Subject::Iri(Iri::new(format!("http://d.example/i{i}")).unwrap())),
        1 => (0u8..4).prop_map(|i| Subject::Blank(BlankNode::new(format!("x{i}")).unwrap())),
    ]
}

/// One data triple: a type assertion, a property edge between individuals,
/// a data-level subclass edge between pool classes (cycles and foreign
/// hooks included), or a property edge onto a literal.
///
/// `include_defined` admits the defined classes in type assertions and as
/// subclass-edge targets. The classification soundness properties pass
/// `false` so that membership in a defined class can only come from the
/// rules, never from raw data.
pub fn arb_instance_triple(include_defined: bool) -> impl Strategy<Value = Triple> {
    let classes = class_pool(include_defined);
    let props = property_pool();
    prop_oneof![
        3 => (arb_individual(), select(classes.clone()))
            .prop_map(|(x, c)| Triple::new(x, vocab::rdf_type(), c)),
        4 => (arb_individual(), select(props.clone()), arb_individual())
            .prop_map(|(s, p, o)| Triple::new(s, p, o.to_term())),
        1 => (select(classes.clone()), select(classes))
            .prop_map(|(a, b)| Triple::new(a, vocab::rdfs_sub_class_of(), b)),
        1 => (arb_individual(), select(props), "[a-z ]{0,8}")
            .prop_map(|(s, p, text)| Triple::new(s, p, Literal::plain(text))),
    ]
}

pub fn arb_instance_graph(max_triples: usize, include_defined: bool) -> impl Strategy<Value = Graph> {
    proptest::collection::vec(arb_instance_triple(include_defined), 0..=max_triples).prop_map(
        |triples| {
            let mut g = Graph::new();
            for t in triples {
                g.insert(t);
            }
            g
        },
    )
}

