use std::collections::BTreeMap;

use crate::rdf::{Graph, Iri, Term, Triple};
use crate::sparql::ast::{PatternTerm, Query, TriplePattern};
use crate::sparql::results::ResultTable;

type Binding = BTreeMap<String, Term>;

/// Evaluates a query over a graph snapshot.
///
/// Patterns join left to right by nested loops; every projected variable is
/// bound in every row because the parser requires it to occur in a pattern.
/// Rows come back sorted lexicographically by term order, deduplicated when
/// the query is DISTINCT, truncated after the sort when it has a LIMIT.
pub fn evaluate(query: &Query, graph: &Graph) -> ResultTable {
    let mut bindings: Vec<Binding> = vec![Binding::new()];
    for pattern in &query.patterns {
        let mut extended = Vec::new();
        for binding in &bindings {
            extend(binding, pattern, graph, &mut extended);
        }
        bindings = extended;
        if bindings.is_empty() {
            break;
        }
    }

    let header = query.header();
    let mut rows: Vec<Vec<Term>> = bindings
        .into_iter()
        .map(|b| {
            header
                .iter()
                .map(|v| b.get(v).cloned().expect("projected variables are bound"))
                .collect()
        })
        .collect();
    rows.sort();
    if query.distinct {
        rows.dedup();
    }
    if let Some(limit) = query.limit {
        rows.truncate(limit);
    }
    ResultTable { header, rows }
}

/// Pushes every extension of `binding` that matches `pattern` onto `out`.
fn extend(binding: &Binding, pattern: &TriplePattern, graph: &Graph, out: &mut Vec<Binding>) {
    let subject = resolve(&pattern.subject, binding);
    let predicate = resolve(&pattern.predicate, binding);
    let object = resolve(&pattern.object, binding);

    // A predicate slot resolved to a literal or blank node can never match:
    // predicates in the data are always IRIs.
    let predicate_iri: Option<&Iri> = match &predicate {
        Some(Term::Iri(iri)) => Some(iri),
        Some(_) => return,
        None => None,
    };

    for triple in graph.matching(subject.as_ref(), predicate_iri, object.as_ref()) {
        if let Some(extension) = bind_triple(binding, pattern, &triple) {
            out.push(extension);
        }
    }
}

/// The concrete term this slot requires, or `None` for an unbound variable.
fn resolve(slot: &PatternTerm, binding: &Binding) -> Option<Term> {
    match slot {
        PatternTerm::Term(t) => Some(t.clone()),
        PatternTerm::Variable(v) => binding.get(v).cloned(),
    }
}

/// Extends `binding` with the variables `pattern` binds against `triple`,
/// or fails when a repeated variable would need two different values.
fn bind_triple(binding: &Binding, pattern: &TriplePattern, triple: &Triple) -> Option<Binding> {
    let mut next = binding.clone();
    try_bind(&mut next, &pattern.subject, &triple.subject.to_term())?;
    try_bind(&mut next, &pattern.predicate, &Term::Iri(triple.predicate.clone()))?;
    try_bind(&mut next, &pattern.object, &triple.object)?;
    Some(next)
}

fn try_bind(binding: &mut Binding, slot: &PatternTerm, value: &Term) -> Option<()> {
    match slot {
        PatternTerm::Term(t) => (t == value).then_some(()),
        PatternTerm::Variable(v) => match binding.get(v) {
            Some(existing) => (existing == value).then_some(()),
            None => {
                binding.insert(v.clone(), value.clone());
                Some(())
            }
        },
    }
}
