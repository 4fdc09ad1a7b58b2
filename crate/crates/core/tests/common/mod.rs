//! Proptest strategies shared by the property suites.
//!
//! Pools are kept small on purpose: with a handful of node and predicate
//! names, random graphs collide enough for joins, merges, and inference
//! rules to actually fire.

// Each test binary uses its own subset of these helpers.
#![allow(dead_code)]

use opskit::{BlankNode, Graph, Iri, Literal, Subject, Term, Triple};
use proptest::prelude::*;

pub fn arb_node_iri() -> impl Strategy<Value = Iri> {
    (0u8..12).prop_map(|i| Iri::new(format!("http://t.example/n{i}")).unwrap())
}

pub fn arb_predicate() -> impl Strategy<Value = Iri> {
    (0u8..6).prop_map(|i| Iri::new(format!("http://t.example/p{i}")).unwrap())
}

pub fn arb_blank() -> impl Strategy<Value = BlankNode> {
    (0u8..6).prop_map(|i| BlankNode::new(format!("b{i}")).unwrap())
}

pub fn arb_literal() -> impl Strategy<Value = Literal> {
    prop_oneof![
        "[a-zA-Z0-9 ]{0,12}".prop_map(Literal::plain),
        prop_oneof![
            Just("line\nbreak"),
            Just("quote\"inside"),
            Just("back\\slash"),
            Just("tab\there \u{e9}"),
        ]
        .prop_map(Literal::plain),
        ("[a-zA-Z]{1,8}", prop_oneof![Just("en"), Just("pt-br"), Just("es")])
            .prop_map(|(s, tag)| Literal::lang(s, tag).unwrap()),
        "[0-9]{1,4}".prop_map(|s| {
            Literal::typed(
                s,
                Iri::new("http://www.w3.org/2001/XMLSchema#integer").unwrap(),
            )
        }),
    ]
}

pub fn arb_subject() -> impl Strategy<Value = Subject> {
    prop_oneof![
        3 => arb_node_iri().prop_map(Subject::Iri),
        1 => arb_blank().prop_map(Subject::Blank),
    ]
}

pub fn arb_term() -> impl Strategy<Value = Term> {
    prop_oneof![
        3 => arb_node_iri().prop_map(Term::Iri),
        1 => arb_blank().prop_map(Term::Blank),
        2 => arb_literal().prop_map(Term::Literal),
    ]
}

pub fn arb_triple() -> impl Strategy<Value = Triple> {
    (arb_subject(), arb_predicate(), arb_term()).prop_map(|(s, p, o)| Triple::new(s, p, o))
}

pub fn arb_graph(max_triples: usize) -> impl Strategy<Value = Graph> {
    proptest::collection::vec(arb_triple(), 0..=max_triples).prop_map(|triples| {
        let mut g = Graph::new();
        for t in triples {
            g.insert(t);
        }
        g
    })
}

/// The triples of a graph as a sorted list, for set-wise comparison.
pub fn triple_set(g: &Graph) -> Vec<Triple> {
    g.iter().collect()
}
