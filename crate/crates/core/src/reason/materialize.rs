//! Least-fixpoint materialization of the inference rules.

use std::collections::{BTreeMap, BTreeSet};

use crate::rdf::{Graph, Iri, Term, Triple};
use crate::schema::{vocab, OntologySchema};

struct PropertyMeta {
    domain: Option<Iri>,
    range: Option<Iri>,
    inverse: Option<Iri>,
}

struct DefinedMeta {
    class: Iri,
    base: Iri,
    property: Iri,
    filler: Iri,
}

/// Returns a new graph extended with everything the schema entails:
///
/// 1. `(x, rdf:type, C')` for each `(x, rdf:type, C)` with `C'` an ancestor
///    of `C` — over the schema's subclass edges joined with any
///    `rdfs:subClassOf` triples between IRIs in the data itself, so foreign
///    vocabularies can hook their classes under the schema's.
/// 2. `(x, rdf:type, D)` and `(o, rdf:type, R)` for property domains and
///    ranges (no shipped profile declares a domain, but the rule runs).
/// 3. `(b, q, a)` for each `(a, p, b)` with `q` the declared inverse of `p`.
/// 4. `(x, rdf:type, D)` for each defined class `D = B and (p some F)`
///    satisfied by `x`, judged against the growing graph so rules feed each
///    other.
///
/// The input is never mutated. The result is a least fixpoint, so the
/// function is idempotent and monotone, and cyclic subclass data cannot make
/// it diverge.
pub fn materialize(graph: &Graph, schema: &OntologySchema) -> Graph {
    let rdf_type = vocab::rdf_type();

    let mut direct: BTreeMap<Iri, BTreeSet<Iri>> = BTreeMap::new();
    for class in schema.classes() {
        let entry = direct
            .entry(schema.iri_of(&class.name).expect("declared class"))
            .or_default();
        for superclass in &class.superclasses {
            entry.insert(schema.iri_of(superclass).expect("validated reference"));
        }
        entry.extend(class.upper.iter().cloned());
    }
    for t in graph.matching(None, Some(&vocab::rdfs_sub_class_of()), None) {
        if let (Some(a), Term::Iri(b)) = (t.subject.as_iri(), &t.object) {
            direct.entry(a.clone()).or_default().insert(b.clone());
        }
    }
    let ancestors = transitive(direct);

    let mut properties: BTreeMap<Iri, PropertyMeta> = BTreeMap::new();
    for p in schema.properties() {
        let resolve =
            |name: &Option<String>| name.as_ref().map(|n| schema.iri_of(n).expect("validated"));
        properties.insert(
            schema.iri_of(&p.name).expect("declared property"),
            PropertyMeta {
                domain: resolve(&p.domain),
                range: resolve(&p.range),
                inverse: resolve(&p.inverse),
            },
        );
    }

    let defined: Vec<DefinedMeta> = schema
        .defined_classes()
        .map(|d| DefinedMeta {
            class: schema.iri_of(&d.name).expect("validated"),
            base: schema.iri_of(&d.base_class).expect("validated"),
            property: schema.iri_of(&d.property).expect("validated"),
            filler: schema.iri_of(&d.filler).expect("validated"),
        })
        .collect();

    let mut out = graph.clone();
    loop {
        let mut pending: Vec<Triple> = Vec::new();

        for t in out.matching(None, Some(&rdf_type), None) {
            let Term::Iri(class) = &t.object else { continue };
            let Some(above) = ancestors.get(class) else { continue };
            for ancestor in above {
                pending.push(Triple::new(
                    t.subject.clone(),
                    rdf_type.clone(),
                    ancestor.clone(),
                ));
            }
        }

        for t in out.iter() {
            let Some(meta) = properties.get(&t.predicate) else { continue };
            if let Some(domain) = &meta.domain {
                pending.push(Triple::new(t.subject.clone(), rdf_type.clone(), domain.clone()));
            }
            if let Some(range) = &meta.range {
                if let Ok(object) = crate::rdf::Subject::try_from(t.object.clone()) {
                    pending.push(Triple::new(object, rdf_type.clone(), range.clone()));
                }
            }
            if let Some(inverse) = &meta.inverse {
                if let Ok(object) = crate::rdf::Subject::try_from(t.object.clone()) {
                    pending.push(Triple::new(object, inverse.clone(), t.subject.to_term()));
                }
            }
        }

        for def in &defined {
            for t in out.matching(None, Some(&rdf_type), Some(&Term::Iri(def.base.clone()))) {
                let satisfied = out
                    .matching(Some(&t.subject.to_term()), Some(&def.property), None)
                    .into_iter()
                    .any(|edge| match crate::rdf::Subject::try_from(edge.object) {
                        Ok(y) => out.contains(&Triple::new(
                            y,
                            rdf_type.clone(),
                            def.filler.clone(),
                        )),
                        Err(_) => false,
                    });
                if satisfied {
                    pending.push(Triple::new(t.subject, rdf_type.clone(), def.class.clone()));
                }
            }
        }

        let mut changed = false;
        for t in pending {
            changed |= out.insert(t);
        }
        if !changed {
            return out;
        }
    }
}

/// Transitive closure of an edge map; tolerates cycles.
fn transitive(direct: BTreeMap<Iri, BTreeSet<Iri>>) -> BTreeMap<Iri, BTreeSet<Iri>> {
    let mut closure = direct;
    let keys: Vec<Iri> = closure.keys().cloned().collect();
    loop {
        let mut changed = false;
        for key in &keys {
            let current = closure.get(key).expect("keyed").clone();
            let mut grown = current.clone();
            for mid in &current {
                if let Some(next) = closure.get(mid) {
                    grown.extend(next.iter().cloned());
                }
            }
            if grown.len() != current.len() {
                closure.insert(key.clone(), grown);
                changed = true;
            }
        }
        if !changed {
            return closure;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rdf::{Literal, Subject};
    use crate::schema::{build_ops_core, build_ops_expanded};

    fn iri(text: &str) -> Iri {
        Iri::new(text).unwrap()
    }

    fn ops(schema: &OntologySchema, name: &str) -> Iri {
        schema.iri_of(name).unwrap()
    }

    fn typed(g: &Graph, x: &Iri, class: &Iri) -> bool {
        g.contains(&Triple::new(x.clone(), vocab::rdf_type(), class.clone()))
    }

    #[test]
    fn person_is_typed_up_the_hierarchy() {
        let s = build_ops_core();
        let alice = iri("http://data.example/alice");
        let mut g = Graph::new();
        g.insert(Triple::new(alice.clone(), vocab::rdf_type(), ops(&s, "Person")));
        let m = materialize(&g, &s);
        assert!(typed(&m, &alice, &ops(&s, "SocialActor")));
        assert!(typed(&m, &alice, &vocab::bfo_material_entity()));
        assert!(typed(&m, &alice, &vocab::foaf_person()));
        assert_eq!(m.len(), 4);
    }

    #[test]
    fn range_types_the_object() {
        let s = build_ops_core();
        let mut g = Graph::new();
        g.insert(Triple::new(
            iri("http://data.example/c"),
            ops(&s, "theme"),
            iri("http://data.example/t"),
        ));
        let m = materialize(&g, &s);
        assert!(typed(&m, &iri("http://data.example/t"), &ops(&s, "Theme")));
        assert!(typed(
            &m,
            &iri("http://data.example/t"),
            &vocab::bfo_independent_continuant()
        ));
        assert_eq!(m.len(), 3);
    }

    #[test]
    fn inverse_edges_materialize_both_ways() {
        let s = build_ops_expanded();
        let bob = iri("http://data.example/bob");
        let acme = iri("http://data.example/acme");
        let mut g = Graph::new();
        g.insert(Triple::new(bob.clone(), ops(&s, "receivesFrom"), acme.clone()));
        let m = materialize(&g, &s);
        assert!(m.contains(&Triple::new(acme.clone(), ops(&s, "paysTo"), bob.clone())));

        let mut h = Graph::new();
        h.insert(Triple::new(acme.clone(), ops(&s, "paysTo"), bob.clone()));
        let n = materialize(&h, &s);
        assert!(n.contains(&Triple::new(bob, ops(&s, "receivesFrom"), acme)));
    }

    #[test]
    fn defined_class_fires_through_the_fixpoint() {
        let s = build_ops_expanded();
        let bob = iri("http://data.example/bob");
        let acme = iri("http://data.example/acme");
        let mut g = Graph::new();
        g.insert(Triple::new(bob.clone(), vocab::rdf_type(), ops(&s, "Executor")));
        g.insert(Triple::new(bob.clone(), ops(&s, "receivesFrom"), acme.clone()));
        g.insert(Triple::new(acme.clone(), vocab::rdf_type(), ops(&s, "Organization")));
        let m = materialize(&g, &s);
        // Organization lifts acme to SocialActor, which licenses PaidExecutor.
        assert!(typed(&m, &acme, &ops(&s, "SocialActor")));
        assert!(typed(&m, &bob, &ops(&s, "PaidExecutor")));

        let mut without_edge = Graph::new();
        without_edge.insert(Triple::new(bob.clone(), vocab::rdf_type(), ops(&s, "Executor")));
        without_edge.insert(Triple::new(acme.clone(), vocab::rdf_type(), ops(&s, "Organization")));
        let n = materialize(&without_edge, &s);
        assert!(!typed(&n, &bob, &ops(&s, "PaidExecutor")));
    }

    #[test]
    fn data_level_subclass_edges_participate() {
        let s = build_ops_core();
        let participant = iri("http://opa.example/Participant");
        let x = iri("http://data.example/x");
        let mut g = Graph::new();
        g.insert(Triple::new(
            participant.clone(),
            vocab::rdfs_sub_class_of(),
            ops(&s, "SocialActor"),
        ));
        g.insert(Triple::new(x.clone(), vocab::rdf_type(), participant));
        let m = materialize(&g, &s);
        assert!(typed(&m, &x, &ops(&s, "SocialActor")));
        assert!(!typed(&g, &x, &ops(&s, "SocialActor")));
    }

    #[test]
    fn cyclic_subclass_data_terminates() {
        let s = build_ops_core();
        let a = iri("http://data.example/A");
        let b = iri("http://data.example/B");
        let x = iri("http://data.example/x");
        let mut g = Graph::new();
        g.insert(Triple::new(a.clone(), vocab::rdfs_sub_class_of(), b.clone()));
        g.insert(Triple::new(b.clone(), vocab::rdfs_sub_class_of(), a.clone()));
        g.insert(Triple::new(x.clone(), vocab::rdf_type(), a.clone()));
        let m = materialize(&g, &s);
        assert!(typed(&m, &x, &b));
        assert!(typed(&m, &x, &a));
    }

    #[test]
    fn literal_objects_are_never_typed_or_inverted() {
        let s = build_ops_expanded();
        let mut g = Graph::new();
        g.insert(Triple::new(
            iri("http://data.example/c"),
            ops(&s, "theme"),
            Literal::plain("urban mobility"),
        ));
        g.insert(Triple::new(
            iri("http://data.example/bob"),
            ops(&s, "receivesFrom"),
            Literal::plain("acme"),
        ));
        let m = materialize(&g, &s);
        assert_eq!(m.len(), g.len());
    }

    #[test]
    fn idempotent_and_monotone_on_a_sample() {
        let s = build_ops_expanded();
        let mut g = Graph::new();
        g.insert(Triple::new(
            iri("http://data.example/bob"),
            vocab::rdf_type(),
            ops(&s, "Executor"),
        ));
        g.insert(Triple::new(
            iri("http://data.example/bob"),
            ops(&s, "receivesFrom"),
            iri("http://data.example/acme"),
        ));
        g.insert(Triple::new(
            iri("http://data.example/acme"),
            vocab::rdf_type(),
            ops(&s, "Person"),
        ));
        let once = materialize(&g, &s);
        let twice = materialize(&once, &s);
        assert_eq!(once, twice);

        for t in g.iter() {
            assert!(once.contains(&t));
        }

        let mut smaller = Graph::new();
        smaller.insert(
            g.iter().next().unwrap(),
        );
        let small_m = materialize(&smaller, &s);
        for t in small_m.iter() {
            assert!(once.contains(&t), "monotonicity broken at {t:?}");
        }
    }

    #[test]
    fn blank_nodes_flow_through_all_rules() {
        let s = build_ops_expanded();
        let b = crate::rdf::BlankNode::new("actor1").unwrap();
        let mut g = Graph::new();
        g.insert(Triple::new(
            b.clone(),
            ops(&s, "theme"),
            crate::rdf::BlankNode::new("t1").unwrap(),
        ));
        g.insert(Triple::new(
            iri("http://data.example/acme"),
            ops(&s, "paysTo"),
            b.clone(),
        ));
        let m = materialize(&g, &s);
        let t1 = Subject::Blank(crate::rdf::BlankNode::new("t1").unwrap());
        assert!(m.contains(&Triple::new(t1, vocab::rdf_type(), ops(&s, "Theme"))));
        assert!(m.contains(&Triple::new(
            b,
            ops(&s, "receivesFrom"),
            iri("http://data.example/acme"),
        )));
    }
}
