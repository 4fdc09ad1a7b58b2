use std::collections::BTreeMap;

use super::term::{Iri, RdfError};

/// A prefix-to-namespace table for CURIE expansion and compaction.
///
/// Binding an already-bound prefix replaces the old namespace, matching
/// Turtle's last-definition-wins rule.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PrefixMap {
    map: BTreeMap<String, Iri>,
}

impl PrefixMap {
    pub fn new() -> PrefixMap {
        PrefixMap::default()
    }

    pub fn bind(&mut self, prefix: &str, namespace: Iri) {
        self.map.insert(prefix.to_owned(), namespace);
    }

    pub fn get(&self, prefix: &str) -> Option<&Iri> {
        self.map.get(prefix)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Bindings in prefix order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &Iri)> {
        self.map.iter().map(|(p, ns)| (p.as_str(), ns))
    }

    /// Expands `prefix:local` against the table. The result is validated as
    /// an IRI, so a local part with a space fails with `WhitespaceInIri`.
    pub fn expand(&self, qname: &str) -> Result<Iri, RdfError> {
        let Some((prefix, local)) = qname.split_once(':') else {
            return Err(RdfError::NotAPrefixedName(qname.to_owned()));
        };
        let Some(ns) = self.map.get(prefix) else {
            return Err(RdfError::UnknownPrefix(prefix.to_owned()));
        };
        Iri::new(format!("{}{}", ns.as_str(), local))
    }

    /// Compacts an IRI to `prefix:local` when some bound namespace is a
    /// prefix of it and the remainder is a safe local name. Prefers the
    /// longest matching namespace. Returns `None` when no binding applies.
    pub fn compact(&self, iri: &Iri) -> Option<String> {
        let mut best: Option<(&str, &str)> = None;
        for (prefix, ns) in &self.map {
            if let Some(local) = iri.as_str().strip_prefix(ns.as_str()) {
                if !safe_local(local) {
                    continue;
                }
                let better = match best {
                    Some((_, chosen)) => local.len() < chosen.len(),
                    None => true,
                };
                if better {
                    best = Some((prefix, local));
                }
            }
        }
        best.map(|(prefix, local)| format!("{prefix}:{local}"))
    }
}

/// Local names we are willing to write without angle brackets. Kept well
/// inside Turtle's PN_LOCAL so the serializer never emits something the
/// parser would split differently.
fn safe_local(local: &str) -> bool {
    let mut chars = local.chars();
    let head_ok = chars
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
    head_ok && chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-'))
}
