//! Reflexive-transitive closure of the schema's subclass relation.

use std::collections::{BTreeMap, BTreeSet};

use crate::rdf::Iri;
use crate::schema::{OntologySchema, SchemaError};

/// Every schema class mapped to its full ancestor set: itself, every
/// declared superclass transitively, and every upper-ontology alignment
/// reachable along the way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureTable {
    ancestors: BTreeMap<Iri, BTreeSet<Iri>>,
}

impl ClosureTable {
    /// The ancestor set of a schema class, or `None` for IRIs the schema
    /// does not declare (upper-ontology classes included).
    pub fn ancestors(&self, class: &Iri) -> Option<&BTreeSet<Iri>> {
        self.ancestors.get(class)
    }

    /// Reflexive subclass test. Unknown IRIs are only subclasses of
    /// themselves.
    pub fn is_subclass_of(&self, sub: &Iri, sup: &Iri) -> bool {
        if sub == sup {
            return true;
        }
        self.ancestors.get(sub).is_some_and(|a| a.contains(sup))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Iri, &BTreeSet<Iri>)> {
        self.ancestors.iter()
    }

    pub fn len(&self) -> usize {
        self.ancestors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ancestors.is_empty()
    }
}

/// Builds the closure table for a schema.
///
/// The schema's own validation already rejects subclass cycles; the check
/// here makes the function total on hand-assembled schemas too.
pub fn subclass_closure(schema: &OntologySchema) -> Result<ClosureTable, SchemaError> {
    let mut memo: BTreeMap<String, BTreeSet<Iri>> = BTreeMap::new();
    let mut on_stack: BTreeSet<String> = BTreeSet::new();
    let mut table = BTreeMap::new();
    for class in schema.classes() {
        let set = ancestors_of(schema, &class.name, &mut memo, &mut on_stack)?;
        table.insert(schema.iri_of(&class.name).expect("declared class"), set);
    }
    Ok(ClosureTable { ancestors: table })
}

fn ancestors_of(
    schema: &OntologySchema,
    name: &str,
    memo: &mut BTreeMap<String, BTreeSet<Iri>>,
    on_stack: &mut BTreeSet<String>,
) -> Result<BTreeSet<Iri>, SchemaError> {
    if let Some(done) = memo.get(name) {
        return Ok(done.clone());
    }
    if !on_stack.insert(name.to_owned()) {
        return Err(SchemaError::SubclassCycle(name.to_owned()));
    }
    let class = schema.class(name).ok_or_else(|| SchemaError::DanglingReference {
        context: "subclass closure".to_owned(),
        name: name.to_owned(),
    })?;
    let mut set = BTreeSet::new();
    set.insert(schema.iri_of(name).expect("declared class"));
    set.extend(class.upper.iter().cloned());
    for superclass in &class.superclasses {
        set.extend(ancestors_of(schema, superclass, memo, on_stack)?);
    }
    on_stack.remove(name);
    memo.insert(name.to_owned(), set.clone());
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schema::{build_ops_core, build_ops_expanded, vocab};

    fn iri(schema: &OntologySchema, name: &str) -> Iri {
        schema.iri_of(name).unwrap()
    }

    #[test]
    fn giant_mob_reaches_social_actor() {
        let s = build_ops_expanded();
        let table = subclass_closure(&s).unwrap();
        let anc = table.ancestors(&iri(&s, "GiantMob")).unwrap();
        for name in ["GiantMob", "Mob", "InformalOrganization", "Organization", "SocialActor"] {
            assert!(anc.contains(&iri(&s, name)), "missing {name}");
        }
        assert!(anc.contains(&vocab::bfo_material_entity()));
        assert!(anc.contains(&vocab::foaf_organization()));
        assert_eq!(anc.len(), 7);
    }

    #[test]
    fn cause_has_itself_and_upper_only() {
        let s = build_ops_core();
        let table = subclass_closure(&s).unwrap();
        let anc = table.ancestors(&iri(&s, "Cause")).unwrap();
        let expected: BTreeSet<Iri> =
            [iri(&s, "Cause"), vocab::bfo_dependent_continuant()].into_iter().collect();
        assert_eq!(anc, &expected);
    }

    #[test]
    fn closure_is_reflexive_and_transitive() {
        let s = build_ops_expanded();
        let table = subclass_closure(&s).unwrap();
        for (class, anc) in table.iter() {
            assert!(anc.contains(class), "not reflexive at {class}");
            for a in anc {
                if let Some(higher) = table.ancestors(a) {
                    assert!(
                        higher.is_subset(anc),
                        "not transitive: {a} under {class}"
                    );
                }
            }
        }
    }

    #[test]
    fn unknown_iris_are_only_their_own_subclass() {
        let s = build_ops_core();
        let table = subclass_closure(&s).unwrap();
        let foreign = Iri::new("http://elsewhere.example/C").unwrap();
        assert!(table.is_subclass_of(&foreign, &foreign));
        assert!(!table.is_subclass_of(&foreign, &iri(&s, "SocialActor")));
        assert_eq!(table.ancestors(&foreign), None);
    }

    /// Independent oracle: boolean matrix closure by repeated squaring.
    #[test]
    fn closure_matches_matrix_squaring_on_expanded() {
        let s = build_ops_expanded();
        let table = subclass_closure(&s).unwrap();

        let mut nodes: Vec<Iri> = Vec::new();
        let mut index: BTreeMap<Iri, usize> = BTreeMap::new();
        let intern = |iri: Iri, nodes: &mut Vec<Iri>, index: &mut BTreeMap<Iri, usize>| {
            *index.entry(iri.clone()).or_insert_with(|| {
                nodes.push(iri);
                nodes.len() - 1
            })
        };
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for class in s.classes() {
            let from = intern(iri(&s, &class.name), &mut nodes, &mut index);
            for superclass in &class.superclasses {
                let to = intern(iri(&s, superclass), &mut nodes, &mut index);
                edges.push((from, to));
            }
            for upper in &class.upper {
                let to = intern(upper.clone(), &mut nodes, &mut index);
                edges.push((from, to));
            }
        }
        let n = nodes.len();
        let mut reach = vec![vec![false; n]; n];
        for i in 0..n {
            reach[i][i] = true;
        }
        for (a, b) in edges {
            reach[a][b] = true;
        }
        loop {
            let mut next = reach.clone();
            for i in 0..n {
                for k in 0..n {
                    if reach[i][k] {
                        for (j, cell) in next[i].iter_mut().enumerate() {
                            *cell = *cell || reach[k][j];
                        }
                    }
                }
            }
            if next == reach {
                break;
            }
            reach = next;
        }

        for class in s.classes() {
            let i = index[&iri(&s, &class.name)];
            let expected: BTreeSet<Iri> = (0..n)
                .filter(|j| reach[i][*j])
                .map(|j| nodes[j].clone())
                .collect();
            assert_eq!(
                table.ancestors(&iri(&s, &class.name)).unwrap(),
                &expected,
                "mismatch at {}",
                class.name
            );
        }
    }

    #[test]
    fn hand_built_cycle_is_reported() {
        let mut s = OntologySchema::new(Iri::new("http://x.example/o").unwrap());
        for (name, superclass) in [("A", "B"), ("B", "A")] {
            s.add_class(crate::schema::ClassDecl {
                name: name.to_owned(),
                labels: crate::schema::Labels::new("a", "b", "c"),
                comment: "test".to_owned(),
                superclasses: [superclass.to_owned()].into_iter().collect(),
                upper: BTreeSet::new(),
            })
            .unwrap();
        }
        assert!(matches!(
            subclass_closure(&s),
            Err(SchemaError::SubclassCycle(_))
        ));
    }
}
