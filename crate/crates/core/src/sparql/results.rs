use serde_json::{json, Value};

use crate::rdf::{PrefixMap, Term};
use crate::turtle::term_str;

/// A query solution set: one column per projected variable, one term per
/// column in every row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResultTable {
    /// Projected variable names, without the `?` sigil.
    pub header: Vec<String>,
    pub rows: Vec<Vec<Term>>,
}

impl ResultTable {
    /// Tab-separated text: a `?`-prefixed header line, then one row per
    /// line with terms in Turtle syntax (absolute IRIs in angle brackets).
    pub fn to_tsv(&self) -> String {
        let empty = PrefixMap::new();
        let mut out = String::new();
        let headed: Vec<String> = self.header.iter().map(|v| format!("?{v}")).collect();
        out.push_str(&headed.join("\t"));
        out.push('\n');
        for row in &self.rows {
            let rendered: Vec<String> = row.iter().map(|t| term_str(t, &empty)).collect();
            out.push_str(&rendered.join("\t"));
            out.push('\n');
        }
        out
    }

    /// The SPARQL-results JSON shape: `{head:{vars}, results:{bindings}}`,
    /// terms typed uri/literal/bnode with `xml:lang` and `datatype` where
    /// the literal carries one.
    pub fn to_sparql_json(&self) -> Value {
        let bindings: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = serde_json::Map::new();
                for (var, term) in self.header.iter().zip(row) {
                    obj.insert(var.clone(), term_json(term));
                }
                Value::Object(obj)
            })
            .collect();
        json!({
            "head": { "vars": self.header },
            "results": { "bindings": bindings },
        })
    }
}

fn term_json(term: &Term) -> Value {
    match term {
        Term::Iri(iri) => json!({ "type": "uri", "value": iri.as_str() }),
        Term::Blank(b) => json!({ "type": "bnode", "value": b.as_str() }),
        Term::Literal(lit) => {
            let mut obj = serde_json::Map::new();
            obj.insert("type".into(), json!("literal"));
            obj.insert("value".into(), json!(lit.lexical()));
            if let Some(tag) = lit.language() {
                obj.insert("xml:lang".into(), json!(tag));
            } else if let Some(dt) = lit.datatype() {
                obj.insert("datatype".into(), json!(dt.as_str()));
            }
            Value::Object(obj)
        }
    }
}
