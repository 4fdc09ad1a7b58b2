//! The RDF encoding of a schema and its inverse.
//!
//! `schema_to_graph` and `graph_to_schema` are mutual inverses on every
//! schema that validates. The reader additionally normalizes the legacy
//! min-cardinality-1 spelling of existential restrictions and skips triples
//! it does not recognize, so hand-maintained files can carry extra
//! annotations without breaking the round trip.

use std::collections::BTreeMap;

use super::decl::{
    ClassDecl, DefinedClassDecl, DisjointnessDecl, Labels, OntologySchema, PropertyDecl,
    RestrictionDecl, SchemaError,
};
use super::vocab;
use crate::rdf::{BlankNode, Graph, Iri, Literal, PrefixMap, Term, Triple};

/// The prefix bindings every published profile document uses.
pub fn ops_prefix_map(base: &Iri) -> PrefixMap {
    let mut p = PrefixMap::new();
    p.bind("ops", Iri::new(format!("{}/", base.as_str())).expect("base slash"));
    p.bind("rdf", Iri::new(vocab::RDF_NS).expect("constant"));
    p.bind("rdfs", Iri::new(vocab::RDFS_NS).expect("constant"));
    p.bind("owl", Iri::new(vocab::OWL_NS).expect("constant"));
    p.bind("foaf", Iri::new(vocab::FOAF_NS).expect("constant"));
    p.bind("snap", Iri::new(vocab::BFO_SNAP_NS).expect("constant"));
    p.bind("span", Iri::new(vocab::BFO_SPAN_NS).expect("constant"));
    p
}

/// The unique subject declared `a owl:Ontology`, when there is exactly one.
pub fn detect_base(graph: &Graph) -> Option<Iri> {
    match ontology_headers(graph).as_slice() {
        [one] => Some(one.clone()),
        _ => None,
    }
}

fn ontology_headers(graph: &Graph) -> Vec<Iri> {
    graph
        .matching(
            None,
            Some(&vocab::rdf_type()),
            Some(&Term::Iri(vocab::owl_ontology())),
        )
        .into_iter()
        .filter_map(|t| t.subject.as_iri().cloned())
        .collect()
}

/// Encodes a schema as an RDF graph. Blank node ids are derived from the
/// declarations they encode, so the output is identical across runs.
pub fn schema_to_graph(schema: &OntologySchema) -> Graph {
    let mut g = Graph::new();
    g.insert(Triple::new(
        schema.base().clone(),
        vocab::rdf_type(),
        vocab::owl_ontology(),
    ));

    for class in schema.classes() {
        let iri = schema.iri_of(&class.name).expect("declared class");
        g.insert(Triple::new(iri.clone(), vocab::rdf_type(), vocab::owl_class()));
        insert_labels(&mut g, &iri, &class.labels);
        g.insert(Triple::new(
            iri.clone(),
            vocab::rdfs_comment(),
            Literal::lang(class.comment.as_str(), "en").expect("constant tag"),
        ));
        for superclass in &class.superclasses {
            g.insert(Triple::new(
                iri.clone(),
                vocab::rdfs_sub_class_of(),
                schema.iri_of(superclass).expect("validated reference"),
            ));
        }
        for upper in &class.upper {
            g.insert(Triple::new(iri.clone(), vocab::rdfs_sub_class_of(), upper.clone()));
        }
    }

    for property in schema.properties() {
        let iri = schema.iri_of(&property.name).expect("declared property");
        g.insert(Triple::new(
            iri.clone(),
            vocab::rdf_type(),
            vocab::owl_object_property(),
        ));
        insert_labels(&mut g, &iri, &property.labels);
        if let Some(domain) = &property.domain {
            g.insert(Triple::new(
                iri.clone(),
                vocab::rdfs_domain(),
                schema.iri_of(domain).expect("validated reference"),
            ));
        }
        if let Some(range) = &property.range {
            g.insert(Triple::new(
                iri.clone(),
                vocab::rdfs_range(),
                schema.iri_of(range).expect("validated reference"),
            ));
        }
        if let Some(inverse) = &property.inverse {
            g.insert(Triple::new(
                iri.clone(),
                vocab::owl_inverse_of(),
                schema.iri_of(inverse).expect("validated reference"),
            ));
        }
    }

    for r in schema.restrictions() {
        let node = BlankNode::new(restriction_node_id(r)).expect("generated id");
        g.insert(Triple::new(
            schema.iri_of(&r.on_class).expect("validated reference"),
            vocab::rdfs_sub_class_of(),
            node.clone(),
        ));
        g.insert(Triple::new(node.clone(), vocab::rdf_type(), vocab::owl_restriction()));
        g.insert(Triple::new(
            node.clone(),
            vocab::owl_on_property(),
            schema.iri_of(&r.property).expect("validated reference"),
        ));
        g.insert(Triple::new(
            node,
            vocab::owl_some_values_from(),
            schema.iri_of(&r.filler).expect("validated reference"),
        ));
    }

    for d in schema.disjointness() {
        g.insert(Triple::new(
            schema.iri_of(&d.first).expect("validated reference"),
            vocab::owl_disjoint_with(),
            schema.iri_of(&d.second).expect("validated reference"),
        ));
    }

    for def in schema.defined_classes() {
        let head = BlankNode::new(format!("def{}", def.name)).expect("generated id");
        let list1 = BlankNode::new(format!("def{}List1", def.name)).expect("generated id");
        let list2 = BlankNode::new(format!("def{}List2", def.name)).expect("generated id");
        let restr = BlankNode::new(format!("def{}Restr", def.name)).expect("generated id");
        g.insert(Triple::new(
            schema.iri_of(&def.name).expect("validated reference"),
            vocab::owl_equivalent_class(),
            head.clone(),
        ));
        g.insert(Triple::new(head.clone(), vocab::rdf_type(), vocab::owl_class()));
        g.insert(Triple::new(head, vocab::owl_intersection_of(), list1.clone()));
        g.insert(Triple::new(
            list1.clone(),
            vocab::rdf_first(),
            schema.iri_of(&def.base_class).expect("validated reference"),
        ));
        g.insert(Triple::new(list1, vocab::rdf_rest(), list2.clone()));
        g.insert(Triple::new(list2.clone(), vocab::rdf_first(), restr.clone()));
        g.insert(Triple::new(list2, vocab::rdf_rest(), vocab::rdf_nil()));
        g.insert(Triple::new(restr.clone(), vocab::rdf_type(), vocab::owl_restriction()));
        g.insert(Triple::new(
            restr.clone(),
            vocab::owl_on_property(),
            schema.iri_of(&def.property).expect("validated reference"),
        ));
        g.insert(Triple::new(
            restr,
            vocab::owl_some_values_from(),
            schema.iri_of(&def.filler).expect("validated reference"),
        ));
    }

    g
}

fn insert_labels(g: &mut Graph, iri: &Iri, labels: &Labels) {
    for (text, tag) in [
        (labels.pt_br.as_str(), "pt-br"),
        (labels.es.as_str(), "es"),
        (labels.en.as_str(), "en"),
    ] {
        g.insert(Triple::new(
            iri.clone(),
            vocab::rdfs_label(),
            Literal::lang(text, tag).expect("constant tag"),
        ));
    }
}

fn restriction_node_id(r: &RestrictionDecl) -> String {
    format!("restr{}{}{}", r.on_class, capitalize(&r.property), r.filler)
}

fn capitalize(name: &str) -> String {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) => c.to_ascii_uppercase().to_string() + chars.as_str(),
        None => String::new(),
    }
}

/// Reads a schema back out of its RDF encoding.
///
/// The graph must carry exactly one `owl:Ontology` header; declarations are
/// everything typed `owl:Class` or `owl:ObjectProperty` whose IRI sits
/// directly under the header IRI. Existential restrictions are accepted in
/// both the `owl:someValuesFrom` spelling and the legacy qualified
/// min-cardinality-1 spelling. Triples that match no known pattern are
/// ignored; the reconstructed schema is validated before it is returned.
pub fn graph_to_schema(graph: &Graph) -> Result<OntologySchema, SchemaError> {
    let headers = ontology_headers(graph);
    if headers.len() != 1 {
        return Err(SchemaError::BadOntologyHeader {
            count: headers.len(),
        });
    }
    let base = headers[0].clone();
    let mut s = OntologySchema::new(base.clone());

    let local = |iri: &Iri| -> Option<String> {
        iri.as_str()
            .strip_prefix(base.as_str())
            .and_then(|rest| rest.strip_prefix('/'))
            .map(str::to_owned)
    };

    let class_iris: Vec<Iri> = typed_subjects(graph, &vocab::owl_class())
        .into_iter()
        .filter(|iri| local(iri).is_some())
        .collect();
    let property_iris: Vec<Iri> = typed_subjects(graph, &vocab::owl_object_property())
        .into_iter()
        .filter(|iri| local(iri).is_some())
        .collect();

    for iri in &property_iris {
        let name = local(iri).expect("filtered");
        let context = format!("property {name}");
        let mut decl = PropertyDecl {
            name,
            labels: read_labels(graph, iri),
            domain: None,
            range: None,
            inverse: None,
        };
        decl.domain = read_local_object(graph, iri, &vocab::rdfs_domain(), &local, &context)?;
        decl.range = read_local_object(graph, iri, &vocab::rdfs_range(), &local, &context)?;
        decl.inverse = read_local_object(graph, iri, &vocab::owl_inverse_of(), &local, &context)?;
        s.add_property(decl)?;
    }

    let mut restrictions = Vec::new();
    let mut defined = Vec::new();
    for iri in &class_iris {
        let name = local(iri).expect("filtered");
        let mut decl = ClassDecl {
            name: name.clone(),
            labels: read_labels(graph, iri),
            comment: String::new(),
            superclasses: Default::default(),
            upper: Default::default(),
        };
        for t in graph.matching(Some(&Term::Iri(iri.clone())), Some(&vocab::rdfs_comment()), None)
        {
            if let Term::Literal(l) = &t.object {
                if l.language() == Some("en") && decl.comment.is_empty() {
                    decl.comment = l.lexical().to_owned();
                }
            }
        }
        for t in
            graph.matching(Some(&Term::Iri(iri.clone())), Some(&vocab::rdfs_sub_class_of()), None)
        {
            match &t.object {
                Term::Iri(o) => match local(o) {
                    Some(n) => {
                        decl.superclasses.insert(n);
                    }
                    None => {
                        decl.upper.insert(o.clone());
                    }
                },
                Term::Blank(b) => {
                    let (property, filler) =
                        parse_restriction_node(graph, b, &local, &format!("class {name}"))?;
                    restrictions.push(RestrictionDecl::existential(&name, &property, &filler));
                }
                Term::Literal(_) => {
                    return Err(SchemaError::MalformedRestriction(format!(
                        "class {name}: rdfs:subClassOf object is a literal"
                    )));
                }
            }
        }
        for t in graph.matching(
            Some(&Term::Iri(iri.clone())),
            Some(&vocab::owl_equivalent_class()),
            None,
        ) {
            let context = format!("defined class {name}");
            let Term::Blank(head) = &t.object else {
                return Err(SchemaError::MalformedRestriction(format!(
                    "{context}: owl:equivalentClass object must be an intersection node"
                )));
            };
            defined.push(parse_defined_class(graph, &name, head, &local, &context)?);
        }
        s.add_class(decl)?;
    }

    for r in restrictions {
        s.add_restriction(r);
    }
    for d in defined {
        s.add_defined_class(d);
    }
    for t in graph.matching(None, Some(&vocab::owl_disjoint_with()), None) {
        let (Some(a), Term::Iri(b)) = (t.subject.as_iri(), &t.object) else {
            continue;
        };
        if let (Some(first), Some(second)) = (local(a), local(b)) {
            s.add_disjointness(DisjointnessDecl::new(&first, &second));
        }
    }

    s.validate()?;
    Ok(s)
}

fn typed_subjects(graph: &Graph, class: &Iri) -> Vec<Iri> {
    graph
        .matching(None, Some(&vocab::rdf_type()), Some(&Term::Iri(class.clone())))
        .into_iter()
        .filter_map(|t| t.subject.as_iri().cloned())
        .collect()
}

fn read_labels(graph: &Graph, iri: &Iri) -> Labels {
    let mut by_lang: BTreeMap<String, String> = BTreeMap::new();
    for t in graph.matching(Some(&Term::Iri(iri.clone())), Some(&vocab::rdfs_label()), None) {
        if let Term::Literal(l) = &t.object {
            if let Some(lang) = l.language() {
                by_lang.entry(lang.to_owned()).or_insert_with(|| l.lexical().to_owned());
            }
        }
    }
    Labels {
        pt_br: by_lang.remove("pt-br").unwrap_or_default(),
        es: by_lang.remove("es").unwrap_or_default(),
        en: by_lang.remove("en").unwrap_or_default(),
    }
}

fn read_local_object(
    graph: &Graph,
    iri: &Iri,
    predicate: &Iri,
    local: &impl Fn(&Iri) -> Option<String>,
    context: &str,
) -> Result<Option<String>, SchemaError> {
    for t in graph.matching(Some(&Term::Iri(iri.clone())), Some(predicate), None) {
        let Term::Iri(o) = &t.object else { continue };
        return match local(o) {
            Some(name) => Ok(Some(name)),
            None => Err(SchemaError::DanglingReference {
                context: context.to_owned(),
                name: o.as_str().to_owned(),
            }),
        };
    }
    Ok(None)
}

/// Reads one existential restriction node: `owl:onProperty` plus either
/// `owl:someValuesFrom` or the qualified min-cardinality-1 pair.
fn parse_restriction_node(
    graph: &Graph,
    node: &BlankNode,
    local: &impl Fn(&Iri) -> Option<String>,
    context: &str,
) -> Result<(String, String), SchemaError> {
    let subject = Term::Blank(node.clone());
    if !graph.contains(&Triple::new(
        node.clone(),
        vocab::rdf_type(),
        vocab::owl_restriction(),
    )) {
        return Err(SchemaError::MalformedRestriction(format!(
            "{context}: blank node is not typed owl:Restriction"
        )));
    }

    let property_iri = first_iri_object(graph, &subject, &vocab::owl_on_property()).ok_or_else(
        || SchemaError::MalformedRestriction(format!("{context}: missing owl:onProperty")),
    )?;
    let property = local(&property_iri).ok_or_else(|| SchemaError::MalformedRestriction(
        format!("{context}: owl:onProperty {property_iri} is outside the ontology base"),
    ))?;

    let filler_iri = match first_iri_object(graph, &subject, &vocab::owl_some_values_from()) {
        Some(iri) => iri,
        None => {
            let one = Literal::typed("1", vocab::xsd_non_negative_integer());
            let has_min_one = graph.contains(&Triple::new(
                node.clone(),
                vocab::owl_min_qualified_cardinality(),
                one,
            ));
            if !has_min_one {
                return Err(SchemaError::MalformedRestriction(format!(
                    "{context}: expected owl:someValuesFrom or owl:minQualifiedCardinality 1"
                )));
            }
            first_iri_object(graph, &subject, &vocab::owl_on_class()).ok_or_else(|| {
                SchemaError::MalformedRestriction(format!(
                    "{context}: min-cardinality form is missing owl:onClass"
                ))
            })?
        }
    };
    let filler = local(&filler_iri).ok_or_else(|| SchemaError::MalformedRestriction(
        format!("{context}: filler {filler_iri} is outside the ontology base"),
    ))?;
    Ok((property, filler))
}

fn parse_defined_class(
    graph: &Graph,
    name: &str,
    head: &BlankNode,
    local: &impl Fn(&Iri) -> Option<String>,
    context: &str,
) -> Result<DefinedClassDecl, SchemaError> {
    let list_head = first_term_object(graph, &Term::Blank(head.clone()), &vocab::owl_intersection_of())
        .ok_or_else(|| {
            SchemaError::MalformedRestriction(format!("{context}: missing owl:intersectionOf"))
        })?;
    let members = read_list(graph, &list_head, context)?;
    let [class_member, restr_member] = members.as_slice() else {
        return Err(SchemaError::MalformedRestriction(format!(
            "{context}: intersection must have exactly two members, found {}",
            members.len()
        )));
    };
    let (class_member, restr_member) = match (class_member, restr_member) {
        (Term::Iri(_), Term::Blank(_)) => (class_member, restr_member),
        (Term::Blank(_), Term::Iri(_)) => (restr_member, class_member),
        _ => {
            return Err(SchemaError::MalformedRestriction(format!(
                "{context}: intersection must pair one class IRI with one restriction node"
            )));
        }
    };
    let base_iri = class_member.as_iri().expect("matched above");
    let base_class = local(base_iri).ok_or_else(|| SchemaError::MalformedRestriction(
        format!("{context}: base class {base_iri} is outside the ontology base"),
    ))?;
    let restr_node = restr_member.as_blank().expect("matched above");
    let (property, filler) = parse_restriction_node(graph, restr_node, local, context)?;
    Ok(DefinedClassDecl::new(name, &base_class, &property, &filler))
}

/// Walks an `rdf:first`/`rdf:rest` list to `rdf:nil`.
fn read_list(graph: &Graph, head: &Term, context: &str) -> Result<Vec<Term>, SchemaError> {
    let mut members = Vec::new();
    let mut cursor = head.clone();
    let nil = Term::Iri(vocab::rdf_nil());
    // A list longer than the graph has a cycle.
    let mut budget = graph.len() + 1;
    while cursor != nil {
        if budget == 0 {
            return Err(SchemaError::MalformedRestriction(format!(
                "{context}: rdf list does not terminate"
            )));
        }
        budget -= 1;
        let first = first_term_object(graph, &cursor, &vocab::rdf_first()).ok_or_else(|| {
            SchemaError::MalformedRestriction(format!("{context}: list node missing rdf:first"))
        })?;
        members.push(first);
        cursor = first_term_object(graph, &cursor, &vocab::rdf_rest()).ok_or_else(|| {
            SchemaError::MalformedRestriction(format!("{context}: list node missing rdf:rest"))
        })?;
    }
    Ok(members)
}

fn first_iri_object(graph: &Graph, subject: &Term, predicate: &Iri) -> Option<Iri> {
    graph
        .matching(Some(subject), Some(predicate), None)
        .into_iter()
        .find_map(|t| t.object.as_iri().cloned())
}

fn first_term_object(graph: &Graph, subject: &Term, predicate: &Iri) -> Option<Term> {
    graph
        .matching(Some(subject), Some(predicate), None)
        .into_iter()
        .map(|t| t.object)
        .next()
}
