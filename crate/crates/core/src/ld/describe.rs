use std::collections::BTreeMap;

use crate::rdf::{Graph, Iri, PrefixMap, Term, Triple};
use crate::schema::{schema_to_graph, vocab, OntologySchema};
use crate::turtle::serialize_turtle;

/// Everything the dataset says about one IRI: its outbound triples, the
/// inbound ones (subclass arrows point into a class, so plain
/// concise-bounded-description would hide the taxonomy), and its labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResourceDescription {
    pub focus: Iri,
    pub outbound: Vec<Triple>,
    pub inbound: Vec<Triple>,
    /// Language tag (empty for plain literals) to label text.
    pub labels: BTreeMap<String, String>,
}

impl ResourceDescription {
    /// Empty means the focus occurs nowhere in subject or object position;
    /// the service answers 404 for these.
    pub fn is_empty(&self) -> bool {
        self.outbound.is_empty() && self.inbound.is_empty()
    }

    /// The description as one graph (outbound and inbound united).
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new();
        for t in self.outbound.iter().chain(&self.inbound) {
            g.insert(t.clone());
        }
        g
    }

    pub fn to_turtle(&self, prefixes: &PrefixMap) -> String {
        serialize_turtle(&self.to_graph(), prefixes)
    }
}

/// Describes `focus` against the union of a dataset and the schema's own
/// graph. Instance data and vocabulary both dereference this way.
pub fn describe(focus: &Iri, data: &Graph, schema: &OntologySchema) -> ResourceDescription {
    let mut union = schema_to_graph(schema);
    union.merge(data);
    describe_graph(focus, &union)
}

/// Describes `focus` in a prepared graph. Servers that already hold the
/// data-plus-schema union (optionally materialized) call this directly.
pub fn describe_graph(focus: &Iri, graph: &Graph) -> ResourceDescription {
    let focus_term = Term::Iri(focus.clone());
    let outbound = graph.matching(Some(&focus_term), None, None);
    let inbound = graph.matching(None, None, Some(&focus_term));
    let label_iri = vocab::rdfs_label();
    let mut labels = BTreeMap::new();
    for t in &outbound {
        if t.predicate == label_iri {
            if let Term::Literal(lit) = &t.object {
                labels.insert(
                    lit.language().unwrap_or("").to_owned(),
                    lit.lexical().to_owned(),
                );
            }
        }
    }
    ResourceDescription {
        focus: focus.clone(),
        outbound,
        inbound,
        labels,
    }
}
