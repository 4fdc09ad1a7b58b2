//! Namespace constants and well-known IRIs.
//!
//! Upper-ontology class IRIs live here so they can be swapped in one place
//! if the upstream BFO or FOAF identifiers ever change.

use crate::rdf::Iri;

pub const RDF_NS: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
pub const RDFS_NS: &str = "http://www.w3.org/2000/01/rdf-schema#";
pub const OWL_NS: &str = "http://www.w3.org/2002/07/owl#";
pub const XSD_NS: &str = "http://www.w3.org/2001/XMLSchema#";
pub const FOAF_NS: &str = "http://xmlns.com/foaf/0.1/";
pub const BFO_SNAP_NS: &str = "http://www.ifomis.org/bfo/1.1/snap#";
pub const BFO_SPAN_NS: &str = "http://www.ifomis.org/bfo/1.1/span#";

/// Default base IRI of the published ontology.
pub const OPS_BASE: &str = "http://purl.org/socialparticipation/ops";

fn named(ns: &str, local: &str) -> Iri {
    Iri::new(format!("{ns}{local}")).expect("vocabulary IRI")
}

pub fn default_base() -> Iri {
    Iri::new(OPS_BASE).expect("vocabulary IRI")
}

pub fn rdf_type() -> Iri {
    named(RDF_NS, "type")
}

pub fn rdf_first() -> Iri {
    named(RDF_NS, "first")
}

pub fn rdf_rest() -> Iri {
    named(RDF_NS, "rest")
}

pub fn rdf_nil() -> Iri {
    named(RDF_NS, "nil")
}

pub fn rdfs_label() -> Iri {
    named(RDFS_NS, "label")
}

pub fn rdfs_comment() -> Iri {
    named(RDFS_NS, "comment")
}

pub fn rdfs_sub_class_of() -> Iri {
    named(RDFS_NS, "subClassOf")
}

pub fn rdfs_domain() -> Iri {
    named(RDFS_NS, "domain")
}

pub fn rdfs_range() -> Iri {
    named(RDFS_NS, "range")
}

pub fn owl_ontology() -> Iri {
    named(OWL_NS, "Ontology")
}

pub fn owl_class() -> Iri {
    named(OWL_NS, "Class")
}

pub fn owl_object_property() -> Iri {
    named(OWL_NS, "ObjectProperty")
}

pub fn owl_restriction() -> Iri {
    named(OWL_NS, "Restriction")
}

pub fn owl_on_property() -> Iri {
    named(OWL_NS, "onProperty")
}

pub fn owl_some_values_from() -> Iri {
    named(OWL_NS, "someValuesFrom")
}

pub fn owl_min_qualified_cardinality() -> Iri {
    named(OWL_NS, "minQualifiedCardinality")
}

pub fn owl_on_class() -> Iri {
    named(OWL_NS, "onClass")
}

pub fn owl_inverse_of() -> Iri {
    named(OWL_NS, "inverseOf")
}

pub fn owl_disjoint_with() -> Iri {
    named(OWL_NS, "disjointWith")
}

pub fn owl_equivalent_class() -> Iri {
    named(OWL_NS, "equivalentClass")
}

pub fn owl_intersection_of() -> Iri {
    named(OWL_NS, "intersectionOf")
}

pub fn xsd_non_negative_integer() -> Iri {
    named(XSD_NS, "nonNegativeInteger")
}

pub fn foaf_person() -> Iri {
    named(FOAF_NS, "Person")
}

pub fn foaf_organization() -> Iri {
    named(FOAF_NS, "Organization")
}

pub fn bfo_material_entity() -> Iri {
    named(BFO_SNAP_NS, "MaterialEntity")
}

pub fn bfo_dependent_continuant() -> Iri {
    named(BFO_SNAP_NS, "DependentContinuant")
}

pub fn bfo_independent_continuant() -> Iri {
    named(BFO_SNAP_NS, "IndependentContinuant")
}

pub fn bfo_processual_entity() -> Iri {
    named(BFO_SPAN_NS, "ProcessualEntity")
}

/// True for IRIs in the namespaces a schema may reference without declaring:
/// the upper ontologies plus the RDF, RDFS, and OWL vocabularies.
pub fn is_external_vocabulary(iri: &Iri) -> bool {
    [RDF_NS, RDFS_NS, OWL_NS, FOAF_NS, BFO_SNAP_NS, BFO_SPAN_NS]
        .iter()
        .any(|ns| iri.as_str().starts_with(ns))
}
