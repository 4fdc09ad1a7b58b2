use std::collections::BTreeSet;
use std::fmt;

use crate::rdf::{Iri, PrefixMap};

/// One mapping-spec problem, or a spec/input mismatch found at ingest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MappingError {
    /// The spec file itself does not parse; 1-based line.
    Spec { line: usize, message: String },
    /// The spec references a column the CSV header does not have.
    UnknownColumn { entity: String, column: String },
    /// A rule's property is neither in the schema nor whitelisted.
    UnknownProperty { entity: String, property: Iri },
    /// The CSV reader rejected the input.
    Csv(String),
}

impl fmt::Display for MappingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MappingError::Spec { line, message } => {
                write!(f, "mapping spec line {line}: {message}")
            }
            MappingError::UnknownColumn { entity, column } => {
                write!(f, "[{entity}] references column {column:?}, which is not in the CSV header")
            }
            MappingError::UnknownProperty { entity, property } => {
                write!(
                    f,
                    "[{entity}] maps to <{}>, which is not a schema property and not whitelisted",
                    property.as_str()
                )
            }
            MappingError::Csv(message) => write!(f, "csv: {message}"),
        }
    }
}

impl std::error::Error for MappingError {}

/// A column-to-ontology mapping, parsed from the sectioned text format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MappingSpec {
    pub prefixes: PrefixMap,
    /// Properties allowed beyond the schema's own (rdfs:label and
    /// rdfs:comment are always allowed).
    pub allowed: BTreeSet<Iri>,
    pub entities: Vec<EntityMapping>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntityMapping {
    pub name: String,
    pub subject: Template,
    pub class: Iri,
    pub rules: Vec<ColumnRule>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnRule {
    /// The rule fires when this column's cell is non-empty.
    pub column: String,
    pub property: Iri,
    pub kind: ObjectKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObjectKind {
    Literal,
    LangLiteral(String),
    TypedLiteral(Iri),
    IriTemplate(Template),
}

/// An IRI template: literal text interleaved with `{column}` placeholders.
/// `{column:raw}` substitutes the cell as-is; plain placeholders
/// percent-encode everything but unreserved characters. Whitespace in a
/// substituted cell is always an error, encoded or not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Template {
    pub(crate) segments: Vec<Segment>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Segment {
    Text(String),
    Column { name: String, raw: bool },
}

/// Why a template could not be expanded for a row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExpandFailure {
    EmptyColumn(String),
    Whitespace(String),
}

impl Template {
    pub(crate) fn parse(text: &str, line: usize) -> Result<Template, MappingError> {
        let mut segments = Vec::new();
        let mut literal = String::new();
        let mut chars = text.chars();
        while let Some(c) = chars.next() {
            if c != '{' {
                literal.push(c);
                continue;
            }
            if !literal.is_empty() {
                segments.push(Segment::Text(std::mem::take(&mut literal)));
            }
            let mut inner = String::new();
            loop {
                match chars.next() {
                    Some('}') => break,
                    Some(c) => inner.push(c),
                    None => {
                        return Err(MappingError::Spec {
                            line,
                            message: format!("unclosed placeholder in template {text:?}"),
                        })
                    }
                }
            }
            let (name, raw) = match inner.strip_suffix(":raw") {
                Some(name) => (name, true),
                None => (inner.as_str(), false),
            };
            if name.is_empty() {
                return Err(MappingError::Spec {
                    line,
                    message: format!("empty placeholder in template {text:?}"),
                });
            }
            segments.push(Segment::Column {
                name: name.to_owned(),
                raw,
            });
        }
        if !literal.is_empty() {
            segments.push(Segment::Text(literal));
        }
        Ok(Template { segments })
    }

    /// Column names this template substitutes.
    pub fn columns(&self) -> impl Iterator<Item = &str> {
        self.segments.iter().filter_map(|s| match s {
            Segment::Column { name, .. } => Some(name.as_str()),
            Segment::Text(_) => None,
        })
    }

    /// Expands against a row; `cell` looks a column up by name.
    pub(crate) fn expand<'a>(
        &self,
        cell: impl Fn(&str) -> &'a str,
    ) -> Result<String, ExpandFailure> {
        let mut out = String::new();
        for segment in &self.segments {
            match segment {
                Segment::Text(t) => out.push_str(t),
                Segment::Column { name, raw } => {
                    let value = cell(name);
                    if value.is_empty() {
                        return Err(ExpandFailure::EmptyColumn(name.clone()));
                    }
                    if value.chars().any(char::is_whitespace) {
                        return Err(ExpandFailure::Whitespace(name.clone()));
                    }
                    if *raw {
                        out.push_str(value);
                    } else {
                        out.push_str(&percent_encode(value));
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Encodes every byte outside RFC 3986's unreserved set as %XX.
fn percent_encode(value: &str) -> String {
    let mut out = String::with_capacity(value.len());
    for b in value.bytes() {
        if b.is_ascii_alphanumeric() || matches!(b, b'-' | b'.' | b'_' | b'~') {
            out.push(b as char);
        } else {
            out.push_str(&format!("%{b:02X}"));
        }
    }
    out
}

/// Parses the sectioned mapping format.
///
/// Top level: `prefix.NAME=IRI` bindings and repeatable `allow=PROPERTY`
/// whitelist lines. Each `[entity]` block then takes `subject=TEMPLATE`,
/// `type=CLASS`, and any number of `col.COLUMN=PROPERTY[,KIND]` rules,
/// where KIND is `lang=TAG`, `typed=DATATYPE`, or `iri=TEMPLATE` (plain
/// literal when absent). Properties and classes are written as prefixed
/// names or `<absolute IRIs>`. Blank lines and `#` comments are ignored.
pub fn parse_mapping_spec(text: &str) -> Result<MappingSpec, MappingError> {
    let mut spec = MappingSpec {
        prefixes: PrefixMap::new(),
        allowed: BTreeSet::new(),
        entities: Vec::new(),
    };
    let mut current: Option<PartialEntity> = None;

    for (index, raw_line) in text.lines().enumerate() {
        let line = index + 1;
        let trimmed = raw_line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if let Some(name) = trimmed.strip_prefix('[') {
            let Some(name) = name.strip_suffix(']') else {
                return Err(MappingError::Spec {
                    line,
                    message: "expected a ']' closing the entity header".into(),
                });
            };
            let name = name.trim();
            if name.is_empty() {
                return Err(MappingError::Spec {
                    line,
                    message: "entity name is empty".into(),
                });
            }
            if let Some(done) = current.take() {
                spec.entities.push(done.finish()?);
            }
            if spec.entities.iter().any(|e| e.name == name) {
                return Err(MappingError::Spec {
                    line,
                    message: format!("entity [{name}] is declared twice"),
                });
            }
            current = Some(PartialEntity::new(name, line));
            continue;
        }
        let Some((key, value)) = trimmed.split_once('=') else {
            return Err(MappingError::Spec {
                line,
                message: format!("expected KEY=VALUE, found {trimmed:?}"),
            });
        };
        let key = key.trim();
        let value = value.trim();
        match &mut current {
            None => match key.split_once('.') {
                Some(("prefix", name)) => {
                    let ns = Iri::new(value).map_err(|e| MappingError::Spec {
                        line,
                        message: e.to_string(),
                    })?;
                    spec.prefixes.bind(name, ns);
                }
                _ if key == "allow" => {
                    let iri = resolve_iri(value, &spec.prefixes, line)?;
                    spec.allowed.insert(iri);
                }
                _ => {
                    return Err(MappingError::Spec {
                        line,
                        message: format!(
                            "unknown top-level key {key:?}; expected prefix.NAME or allow"
                        ),
                    })
                }
            },
            Some(entity) => match key.split_once('.') {
                Some(("col", column)) => {
                    if column.is_empty() {
                        return Err(MappingError::Spec {
                            line,
                            message: "column name is empty".into(),
                        });
                    }
                    if entity.rules.iter().any(|r| r.column == column) {
                        return Err(MappingError::Spec {
                            line,
                            message: format!("column {column:?} is mapped twice"),
                        });
                    }
                    let rule = parse_rule(column, value, &spec.prefixes, line)?;
                    entity.rules.push(rule);
                }
                _ if key == "subject" => {
                    entity.subject = Some(Template::parse(value, line)?);
                }
                _ if key == "type" => {
                    entity.class = Some(resolve_iri(value, &spec.prefixes, line)?);
                }
                _ => {
                    return Err(MappingError::Spec {
                        line,
                        message: format!(
                            "unknown key {key:?} in [{}]; expected subject, type, or col.COLUMN",
                            entity.name
                        ),
                    })
                }
            },
        }
    }
    if let Some(done) = current.take() {
        spec.entities.push(done.finish()?);
    }
    if spec.entities.is_empty() {
        return Err(MappingError::Spec {
            line: text.lines().count().max(1),
            message: "no [entity] blocks".into(),
        });
    }
    Ok(spec)
}

struct PartialEntity {
    name: String,
    line: usize,
    subject: Option<Template>,
    class: Option<Iri>,
    rules: Vec<ColumnRule>,
}

impl PartialEntity {
    fn new(name: &str, line: usize) -> PartialEntity {
        PartialEntity {
            name: name.to_owned(),
            line,
            subject: None,
            class: None,
            rules: Vec::new(),
        }
    }

    fn finish(self) -> Result<EntityMapping, MappingError> {
        let subject = self.subject.ok_or_else(|| MappingError::Spec {
            line: self.line,
            message: format!("[{}] has no subject= template", self.name),
        })?;
        let class = self.class.ok_or_else(|| MappingError::Spec {
            line: self.line,
            message: format!("[{}] has no type= class", self.name),
        })?;
        Ok(EntityMapping {
            name: self.name,
            subject,
            class,
            rules: self.rules,
        })
    }
}

fn parse_rule(
    column: &str,
    value: &str,
    prefixes: &PrefixMap,
    line: usize,
) -> Result<ColumnRule, MappingError> {
    let (property_text, kind_text) = match value.split_once(',') {
        Some((p, k)) => (p.trim(), Some(k.trim())),
        None => (value, None),
    };
    let property = resolve_iri(property_text, prefixes, line)?;
    let kind = match kind_text {
        None => ObjectKind::Literal,
        Some(k) => match k.split_once('=') {
            Some(("lang", tag)) => ObjectKind::LangLiteral(tag.trim().to_owned()),
            Some(("typed", dt)) => {
                ObjectKind::TypedLiteral(resolve_iri(dt.trim(), prefixes, line)?)
            }
            Some(("iri", template)) => {
                ObjectKind::IriTemplate(Template::parse(template.trim(), line)?)
            }
            _ => {
                return Err(MappingError::Spec {
                    line,
                    message: format!("unknown object kind {k:?}; expected lang=, typed=, or iri="),
                })
            }
        },
    };
    if let ObjectKind::LangLiteral(tag) = &kind {
        // Surface a bad tag at spec-parse time, not per row.
        crate::rdf::Literal::lang("x", tag).map_err(|e| MappingError::Spec {
            line,
            message: e.to_string(),
        })?;
    }
    Ok(ColumnRule {
        column: column.to_owned(),
        property,
        kind,
    })
}

/// `<absolute>` or a prefixed name against the spec's own bindings.
fn resolve_iri(text: &str, prefixes: &PrefixMap, line: usize) -> Result<Iri, MappingError> {
    if let Some(inner) = text.strip_prefix('<') {
        let Some(inner) = inner.strip_suffix('>') else {
            return Err(MappingError::Spec {
                line,
                message: format!("expected a '>' closing {text:?}"),
            });
        };
        return Iri::new(inner).map_err(|e| MappingError::Spec {
            line,
            message: e.to_string(),
        });
    }
    prefixes.expand(text).map_err(|e| MappingError::Spec {
        line,
        message: e.to_string(),
    })
}
