use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde_json::{json, Value};

use crate::rdf::{Graph, Iri, Literal, Term, Triple};
use crate::schema::{vocab, OntologySchema};
use crate::triplify::spec::{ExpandFailure, MappingError, MappingSpec, ObjectKind};

/// Why one (row, entity) application emitted nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkipReason {
    /// The subject template hit an empty column.
    EmptySubjectColumn,
    /// A cell substituted into an IRI template contains whitespace.
    IriTemplateProducedWhitespace,
    /// The expanded subject text is not an IRI.
    InvalidIri,
}

impl SkipReason {
    pub fn as_str(self) -> &'static str {
        match self {
            SkipReason::EmptySubjectColumn => "emptySubjectColumn",
            SkipReason::IriTemplateProducedWhitespace => "iriTemplateProducedWhitespace",
            SkipReason::InvalidIri => "invalidIri",
        }
    }
}

/// One skipped mapping application; `row` is the 1-based data row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowSkip {
    pub row: usize,
    pub entity: String,
    pub reason: SkipReason,
    pub detail: String,
}

impl fmt::Display for RowSkip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "row {} [{}]: {}: {}",
            self.row,
            self.entity,
            self.reason.as_str(),
            self.detail
        )
    }
}

/// Ingest counters. `triples_emitted` counts emitted statements; the graph
/// keeps the distinct set, so it can be smaller. Every kept application
/// emits at least its type triple, hence
/// `triples_emitted >= rows_read - rows_skipped` whenever the spec has at
/// least one entity block.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IngestReport {
    pub rows_read: usize,
    pub triples_emitted: usize,
    pub rows_skipped: usize,
    pub skips: Vec<RowSkip>,
}

impl IngestReport {
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "rows read: {}\ntriples emitted: {}\nrows skipped: {}\n",
            self.rows_read, self.triples_emitted, self.rows_skipped
        );
        for skip in &self.skips {
            out.push_str("  ");
            out.push_str(&skip.to_string());
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let skips: Vec<Value> = self
            .skips
            .iter()
            .map(|s| {
                json!({
                    "row": s.row,
                    "entity": s.entity,
                    "reason": s.reason.as_str(),
                    "detail": s.detail,
                })
            })
            .collect();
        json!({
            "rowsRead": self.rows_read,
            "triplesEmitted": self.triples_emitted,
            "rowsSkipped": self.rows_skipped,
            "skips": skips,
        })
    }
}

/// Converts CSV text into typed RDF under a mapping spec.
///
/// Per data row and entity block: one type triple, plus one triple per
/// non-empty mapped column. Empty cells emit nothing. A whitespace-bearing
/// cell under an IRI template, an empty subject column, or a subject that
/// is no IRI skips that row's application entirely and records why; skips
/// never abort the run. Every rule property must be a schema property,
/// rdfs:label, rdfs:comment, or whitelisted in the spec, and every
/// referenced column must exist in the header; those are hard errors.
pub fn ingest_csv(
    spec: &MappingSpec,
    csv_text: &str,
    schema: &OntologySchema,
) -> Result<(Graph, IngestReport), MappingError> {
    check_properties(spec, schema)?;

    let mut reader = csv::ReaderBuilder::new().from_reader(csv_text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| MappingError::Csv(e.to_string()))?
        .clone();
    let header_names: Vec<&str> = headers.iter().collect();
    check_columns(spec, &header_names)?;

    let rdf_type = vocab::rdf_type();
    let mut graph = Graph::new();
    let mut report = IngestReport::default();

    for (index, record) in reader.records().enumerate() {
        let record = record.map_err(|e| MappingError::Csv(e.to_string()))?;
        let row_number = index + 1;
        report.rows_read += 1;
        let cells: BTreeMap<&str, &str> = header_names
            .iter()
            .copied()
            .zip(record.iter())
            .collect();
        let cell = |name: &str| cells.get(name).copied().unwrap_or("");

        for entity in &spec.entities {
            let skip = |reason: SkipReason, detail: String| RowSkip {
                row: row_number,
                entity: entity.name.clone(),
                reason,
                detail,
            };
            let subject_text = match entity.subject.expand(cell) {
                Ok(text) => text,
                Err(ExpandFailure::EmptyColumn(c)) => {
                    report.skips.push(skip(
                        SkipReason::EmptySubjectColumn,
                        format!("column {c:?} is empty"),
                    ));
                    continue;
                }
                Err(ExpandFailure::Whitespace(c)) => {
                    report.skips.push(skip(
                        SkipReason::IriTemplateProducedWhitespace,
                        format!("column {c:?} contains whitespace"),
                    ));
                    continue;
                }
            };
            let subject = match Iri::new(subject_text) {
                Ok(iri) => iri,
                Err(e) => {
                    report
                        .skips
                        .push(skip(SkipReason::InvalidIri, e.to_string()));
                    continue;
                }
            };

            // Build the whole application first so a dirty cell in any
            // rule leaves no partial output behind.
            let mut pending = vec![Triple::new(
                subject.clone(),
                rdf_type.clone(),
                entity.class.clone(),
            )];
            let mut skipped = None;
            for rule in &entity.rules {
                let value = cell(&rule.column);
                if value.is_empty() {
                    continue;
                }
                let object: Term = match &rule.kind {
                    ObjectKind::Literal => Literal::plain(value).into(),
                    ObjectKind::LangLiteral(tag) => Literal::lang(value, tag)
                        .expect("tag validated at spec parse")
                        .into(),
                    ObjectKind::TypedLiteral(dt) => Literal::typed(value, dt.clone()).into(),
                    ObjectKind::IriTemplate(template) => match template.expand(cell) {
                        Ok(text) => match Iri::new(text) {
                            Ok(iri) => iri.into(),
                            Err(e) => {
                                skipped = Some((SkipReason::InvalidIri, e.to_string()));
                                break;
                            }
                        },
                        // Another referenced column being empty drops this
                        // triple; only the rule's own column gates the row.
                        Err(ExpandFailure::EmptyColumn(_)) => continue,
                        Err(ExpandFailure::Whitespace(c)) => {
                            skipped = Some((
                                SkipReason::IriTemplateProducedWhitespace,
                                format!("column {c:?} contains whitespace"),
                            ));
                            break;
                        }
                    },
                };
                pending.push(Triple::new(subject.clone(), rule.property.clone(), object));
            }
            match skipped {
                Some((reason, detail)) => report.skips.push(skip(reason, detail)),
                None => {
                    report.triples_emitted += pending.len();
                    for triple in pending {
                        graph.insert(triple);
                    }
                }
            }
        }
    }
    report.rows_skipped = report.skips.len();
    Ok((graph, report))
}

fn check_properties(spec: &MappingSpec, schema: &OntologySchema) -> Result<(), MappingError> {
    let mut allowed: BTreeSet<Iri> = schema
        .properties()
        .filter_map(|p| schema.iri_of(&p.name))
        .collect();
    allowed.insert(vocab::rdfs_label());
    allowed.insert(vocab::rdfs_comment());
    allowed.extend(spec.allowed.iter().cloned());
    for entity in &spec.entities {
        for rule in &entity.rules {
            if !allowed.contains(&rule.property) {
                return Err(MappingError::UnknownProperty {
                    entity: entity.name.clone(),
                    property: rule.property.clone(),
                });
            }
        }
    }
    Ok(())
}

fn check_columns(spec: &MappingSpec, headers: &[&str]) -> Result<(), MappingError> {
    let missing = |entity: &str, column: &str| MappingError::UnknownColumn {
        entity: entity.to_owned(),
        column: column.to_owned(),
    };
    for entity in &spec.entities {
        for column in entity.subject.columns() {
            if !headers.contains(&column) {
                return Err(missing(&entity.name, column));
            }
        }
        for rule in &entity.rules {
            if !headers.contains(&rule.column.as_str()) {
                return Err(missing(&entity.name, &rule.column));
            }
            if let ObjectKind::IriTemplate(template) = &rule.kind {
                for column in template.columns() {
                    if !headers.contains(&column) {
                        return Err(missing(&entity.name, column));
                    }
                }
            }
        }
    }
    Ok(())
}
