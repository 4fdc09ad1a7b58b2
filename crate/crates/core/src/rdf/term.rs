use std::fmt;

use thiserror::Error;

/// Datatype IRI that plain literals carry implicitly.
pub(crate) const XSD_STRING: &str = "http://www.w3.org/2001/XMLSchema#string";
pub(crate) const RDF_LANG_STRING: &str =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RdfError {
    #[error("IRI contains whitespace: {0:?}")]
    WhitespaceInIri(String),
    #[error("IRI has no scheme: {0:?}")]
    MissingScheme(String),
    #[error("unknown prefix {0:?}")]
    UnknownPrefix(String),
    #[error("{0:?} is not a prefixed name")]
    NotAPrefixedName(String),
    #[error("invalid blank node id {0:?}")]
    BadBlankNodeId(String),
    #[error("invalid language tag {0:?}")]
    BadLanguageTag(String),
}

/// An absolute IRI.
///
/// Validation is deliberately shallow: the text must contain no whitespace
/// and must start with an RFC 3987 scheme. Spaces in identifiers are the
/// defect this guards against; everything else is the author's business.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Iri(String);

impl Iri {
    pub fn new(text: impl Into<String>) -> Result<Iri, RdfError> {
        let text = text.into();
        if text
            .chars()
            .any(|c| matches!(c, ' ' | '\t' | '\n' | '\r'))
        {
            return Err(RdfError::WhitespaceInIri(text));
        }
        let Some(colon) = text.find(':') else {
            return Err(RdfError::MissingScheme(text));
        };
        let scheme = &text[..colon];
        let mut chars = scheme.chars();
        let head_ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic());
        let tail_ok = chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '+' | '-' | '.'));
        if head_ok && tail_ok {
            Ok(Iri(text))
        } else {
            Err(RdfError::MissingScheme(text))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Appends a path segment: `base.join("Person")` is `<base>/Person`.
    pub fn join(&self, segment: &str) -> Result<Iri, RdfError> {
        Iri::new(format!("{}/{}", self.0, segment))
    }
}

impl fmt::Display for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for Iri {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// A blank node identifier, scoped to the graph that holds it.
///
/// Ids are restricted to `[A-Za-z0-9_-]` with an alphanumeric or `_` head so
/// that every id this crate can hold also round-trips through Turtle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlankNode(String);

impl BlankNode {
    pub fn new(id: impl Into<String>) -> Result<BlankNode, RdfError> {
        let id = id.into();
        let mut chars = id.chars();
        let head_ok = chars
            .next()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_');
        let tail_ok = chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-'));
        if head_ok && tail_ok {
            Ok(BlankNode(id))
        } else {
            Err(RdfError::BadBlankNodeId(id))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for BlankNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "_:{}", self.0)
    }
}

/// A literal: lexical form plus at most one of a language tag or a datatype.
///
/// Construction normalizes the two RDF 1.1 identities: a literal typed as
/// `xsd:string` is stored as a plain literal, and language tags are
/// lowercased. Mutual exclusion of tag and datatype is enforced by the
/// constructors; the fields are not public.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    lexical: String,
    lang: Option<String>,
    datatype: Option<Iri>,
}

impl Literal {
    pub fn plain(lexical: impl Into<String>) -> Literal {
        Literal {
            lexical: lexical.into(),
            lang: None,
            datatype: None,
        }
    }

    pub fn lang(lexical: impl Into<String>, tag: &str) -> Result<Literal, RdfError> {
        let ok = !tag.is_empty()
            && tag.starts_with(|c: char| c.is_ascii_alphabetic())
            && !tag.ends_with('-')
            && !tag.contains("--")
            && tag.chars().all(|c| c.is_ascii_alphanumeric() || c == '-');
        if !ok {
            return Err(RdfError::BadLanguageTag(tag.to_owned()));
        }
        Ok(Literal {
            lexical: lexical.into(),
            lang: Some(tag.to_ascii_lowercase()),
            datatype: None,
        })
    }

    pub fn typed(lexical: impl Into<String>, datatype: Iri) -> Literal {
        if datatype.as_str() == XSD_STRING {
            return Literal::plain(lexical);
        }
        Literal {
            lexical: lexical.into(),
            lang: None,
            datatype: Some(datatype),
        }
    }

    pub fn lexical(&self) -> &str {
        &self.lexical
    }

    pub fn language(&self) -> Option<&str> {
        self.lang.as_deref()
    }

    /// The explicit datatype, if any. Plain and language-tagged literals
    /// return `None`; see [`Literal::effective_datatype`].
    pub fn datatype(&self) -> Option<&Iri> {
        self.datatype.as_ref()
    }

    /// The datatype under RDF 1.1 semantics: `xsd:string` for plain
    /// literals and `rdf:langString` for language-tagged ones.
    pub fn effective_datatype(&self) -> Iri {
        match (&self.lang, &self.datatype) {
            (Some(_), _) => Iri::new(RDF_LANG_STRING).expect("constant IRI"),
            (None, Some(dt)) => dt.clone(),
            (None, None) => Iri::new(XSD_STRING).expect("constant IRI"),
        }
    }
}

/// Any RDF node. The variant order gives the term ordering used everywhere:
/// IRIs, then blank nodes, then literals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Iri(Iri),
    Blank(BlankNode),
    Literal(Literal),
}

impl Term {
    pub fn as_iri(&self) -> Option<&Iri> {
        match self {
            Term::Iri(iri) => Some(iri),
            _ => None,
        }
    }

    pub fn as_blank(&self) -> Option<&BlankNode> {
        match self {
            Term::Blank(b) => Some(b),
            _ => None,
        }
    }

    pub fn as_literal(&self) -> Option<&Literal> {
        match self {
            Term::Literal(l) => Some(l),
            _ => None,
        }
    }

    pub fn is_blank(&self) -> bool {
        matches!(self, Term::Blank(_))
    }
}

impl From<Iri> for Term {
    fn from(iri: Iri) -> Term {
        Term::Iri(iri)
    }
}

impl From<BlankNode> for Term {
    fn from(b: BlankNode) -> Term {
        Term::Blank(b)
    }
}

impl From<Literal> for Term {
    fn from(l: Literal) -> Term {
        Term::Literal(l)
    }
}

impl From<Subject> for Term {
    fn from(s: Subject) -> Term {
        match s {
            Subject::Iri(iri) => Term::Iri(iri),
            Subject::Blank(b) => Term::Blank(b),
        }
    }
}

/// A node that may appear in subject position: an IRI or a blank node.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Subject {
    Iri(Iri),
    Blank(BlankNode),
}

impl Subject {
    pub fn as_iri(&self) -> Option<&Iri> {
        match self {
            Subject::Iri(iri) => Some(iri),
            _ => None,
        }
    }

    pub fn as_blank(&self) -> Option<&BlankNode> {
        match self {
            Subject::Blank(b) => Some(b),
            _ => None,
        }
    }

    pub fn is_blank(&self) -> bool {
        matches!(self, Subject::Blank(_))
    }

    pub fn to_term(&self) -> Term {
        self.clone().into()
    }
}

impl From<Iri> for Subject {
    fn from(iri: Iri) -> Subject {
        Subject::Iri(iri)
    }
}

impl From<BlankNode> for Subject {
    fn from(b: BlankNode) -> Subject {
        Subject::Blank(b)
    }
}

impl TryFrom<Term> for Subject {
    type Error = Term;

    /// Fails on literals, returning the term unchanged.
    fn try_from(t: Term) -> Result<Subject, Term> {
        match t {
            Term::Iri(iri) => Ok(Subject::Iri(iri)),
            Term::Blank(b) => Ok(Subject::Blank(b)),
            other => Err(other),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    pub subject: Subject,
    pub predicate: Iri,
    pub object: Term,
}

impl Triple {
    pub fn new(subject: impl Into<Subject>, predicate: Iri, object: impl Into<Term>) -> Triple {
        Triple {
            subject: subject.into(),
            predicate,
            object: object.into(),
        }
    }

    pub fn has_blank(&self) -> bool {
        self.subject.is_blank() || self.object.is_blank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iri_accepts_common_schemes() {
        for text in [
            "http://purl.org/socialparticipation/ops",
            "https://example.org/a#b",
            "urn:isbn:0451450523",
            "mailto:ana@example.org",
            "file:///tmp/x.ttl",
        ] {
            assert_eq!(Iri::new(text).unwrap().as_str(), text);
        }
    }

    #[test]
    fn iri_rejects_whitespace() {
        for text in ["http://x.org/a b", "http://x.org/\tb", "http://x.org/a\n"] {
            assert_eq!(
                Iri::new(text),
                Err(RdfError::WhitespaceInIri(text.to_owned()))
            );
        }
    }

    #[test]
    fn iri_rejects_missing_scheme() {
        for text in ["no-scheme", "/relative/path", ":leading", "1http://x"] {
            assert_eq!(
                Iri::new(text),
                Err(RdfError::MissingScheme(text.to_owned()))
            );
        }
    }

    #[test]
    fn literal_normalizes_xsd_string_to_plain() {
        let typed = Literal::typed("ok", Iri::new(XSD_STRING).unwrap());
        assert_eq!(typed, Literal::plain("ok"));
        assert_eq!(typed.datatype(), None);
    }

    #[test]
    fn literal_lowercases_language_tags() {
        let a = Literal::lang("Pessoa", "PT-BR").unwrap();
        let b = Literal::lang("Pessoa", "pt-br").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.language(), Some("pt-br"));
    }

    #[test]
    fn literal_rejects_bad_language_tags() {
        for tag in ["", "-en", "en-", "en--us", "1en", "en us"] {
            assert!(Literal::lang("x", tag).is_err(), "tag {tag:?}");
        }
    }

    #[test]
    fn effective_datatype_defaults() {
        assert_eq!(Literal::plain("x").effective_datatype().as_str(), XSD_STRING);
        assert_eq!(
            Literal::lang("x", "en").unwrap().effective_datatype().as_str(),
            RDF_LANG_STRING
        );
    }

    #[test]
    fn blank_node_ids_are_restricted() {
        assert!(BlankNode::new("b0").is_ok());
        assert!(BlankNode::new("restrInitiatorStarts").is_ok());
        assert!(BlankNode::new("_x").is_ok());
        assert!(BlankNode::new("").is_err());
        assert!(BlankNode::new("-x").is_err());
        assert!(BlankNode::new("a b").is_err());
    }

    #[test]
    fn term_order_is_iri_blank_literal() {
        let iri = Term::Iri(Iri::new("http://z.example/z").unwrap());
        let blank = Term::Blank(BlankNode::new("a").unwrap());
        let lit = Term::Literal(Literal::plain("a"));
        assert!(iri < blank && blank < lit);
    }

    #[test]
    fn subject_from_term_rejects_literals() {
        let lit = Term::Literal(Literal::plain("x"));
        assert!(Subject::try_from(lit).is_err());
    }
}
