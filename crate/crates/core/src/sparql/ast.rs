use crate::rdf::{PrefixMap, Term};

/// One slot of a triple pattern: a named variable or a ground term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternTerm {
    /// Variable name without the `?` sigil.
    Variable(String),
    Term(Term),
}

impl PatternTerm {
    pub fn as_variable(&self) -> Option<&str> {
        match self {
            PatternTerm::Variable(v) => Some(v),
            PatternTerm::Term(_) => None,
        }
    }
}

/// A conjunctive pattern slot triple. Ground patterns are allowed; the
/// parser guarantees literals appear only in object position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriplePattern {
    pub subject: PatternTerm,
    pub predicate: PatternTerm,
    pub object: PatternTerm,
}

impl TriplePattern {
    pub fn variables(&self) -> impl Iterator<Item = &str> {
        [&self.subject, &self.predicate, &self.object]
            .into_iter()
            .filter_map(PatternTerm::as_variable)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Projection {
    /// `SELECT *`: every variable, in order of first appearance.
    Star,
    /// Variable names without the `?` sigil, in projection order.
    Variables(Vec<String>),
}

/// A parsed SELECT query over one basic graph pattern.
#[derive(Debug, Clone, PartialEq)]
pub struct Query {
    pub prefixes: PrefixMap,
    pub projection: Projection,
    pub patterns: Vec<TriplePattern>,
    pub distinct: bool,
    pub limit: Option<usize>,
}

impl Query {
    /// All pattern variables in order of first appearance.
    pub fn pattern_variables(&self) -> Vec<String> {
        let mut seen = Vec::new();
        for pattern in &self.patterns {
            for v in pattern.variables() {
                if !seen.iter().any(|s| s == v) {
                    seen.push(v.to_owned());
                }
            }
        }
        seen
    }

    /// The output column names, `?`-less, in output order.
    pub fn header(&self) -> Vec<String> {
        match &self.projection {
            Projection::Star => self.pattern_variables(),
            Projection::Variables(vars) => vars.clone(),
        }
    }
}
