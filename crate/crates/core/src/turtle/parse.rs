use std::fmt;

use crate::rdf::{BlankNode, Graph, Iri, Literal, PrefixMap, RdfError, Subject, Term, Triple};

/// Parsing stops after this many diagnostics.
pub const MAX_DIAGNOSTICS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagnosticKind {
    Syntax,
    BadIri,
    BadLiteral,
    UnknownPrefix,
}

impl fmt::Display for DiagnosticKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            DiagnosticKind::Syntax => "syntax",
            DiagnosticKind::BadIri => "bad-iri",
            DiagnosticKind::BadLiteral => "bad-literal",
            DiagnosticKind::UnknownPrefix => "unknown-prefix",
        };
        f.write_str(name)
    }
}

/// One parse problem, positioned at the 1-based line and column where the
/// offending token starts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDiagnostic {
    pub line: usize,
    pub column: usize,
    pub kind: DiagnosticKind,
    pub message: String,
}

impl fmt::Display for ParseDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}: {}", self.line, self.column, self.kind, self.message)
    }
}

/// Parses Turtle text into a graph and the prefix map it declared.
///
/// Blank node labels are preserved. Returns every collected diagnostic when
/// anything failed; the partially built graph is not exposed.
pub fn parse_turtle(text: &str) -> Result<(Graph, PrefixMap), Vec<ParseDiagnostic>> {
    let mut p = Parser::new(text);
    p.run();
    if p.diagnostics.is_empty() {
        Ok((p.graph, p.prefixes))
    } else {
        Err(p.diagnostics)
    }
}

/// Like [`parse_turtle`], with a UTF-8 check in front. The position of the
/// first invalid byte becomes the diagnostic position.
pub fn parse_turtle_bytes(bytes: &[u8]) -> Result<(Graph, PrefixMap), Vec<ParseDiagnostic>> {
    match std::str::from_utf8(bytes) {
        Ok(text) => parse_turtle(text),
        Err(e) => {
            let valid = &bytes[..e.valid_up_to()];
            let line = 1 + valid.iter().filter(|&&b| b == b'\n').count();
            let column = 1 + valid
                .iter()
                .rev()
                .take_while(|&&b| b != b'\n')
                .count();
            Err(vec![ParseDiagnostic {
                line,
                column,
                kind: DiagnosticKind::Syntax,
                message: "input is not valid UTF-8".to_owned(),
            }])
        }
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
    graph: Graph,
    prefixes: PrefixMap,
    base: Option<Iri>,
    diagnostics: Vec<ParseDiagnostic>,
}

/// Internal short-circuit: the diagnostic has already been recorded.
struct Halt;

type Parsed<T> = Result<T, Halt>;

impl Parser {
    fn new(text: &str) -> Parser {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            line: 1,
            column: 1,
            graph: Graph::new(),
            prefixes: PrefixMap::new(),
            base: None,
            diagnostics: Vec::new(),
        }
    }

    fn run(&mut self) {
        loop {
            self.skip_trivia();
            if self.at_end() || self.diagnostics.len() >= MAX_DIAGNOSTICS {
                break;
            }
            if self.parse_statement().is_err() {
                self.recover();
            }
        }
    }

    // -- cursor -----------------------------------------------------------

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_at(&self, ahead: usize) -> Option<char> {
        self.chars.get(self.pos + ahead).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    /// Puts back characters that cannot be newlines (used for trailing dots
    /// scanned past the end of a prefixed name).
    fn unbump(&mut self, n: usize) {
        self.pos -= n;
        self.column -= n;
    }

    fn skip_trivia(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == '#' {
                while let Some(c) = self.peek() {
                    if c == '\n' {
                        break;
                    }
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    fn here(&self) -> (usize, usize) {
        (self.line, self.column)
    }

    fn report(&mut self, at: (usize, usize), kind: DiagnosticKind, message: impl Into<String>) -> Halt {
        self.diagnostics.push(ParseDiagnostic {
            line: at.0,
            column: at.1,
            kind,
            message: message.into(),
        });
        Halt
    }

    /// Skips to just past the next `.` that sits outside a string literal.
    fn recover(&mut self) {
        while let Some(c) = self.peek() {
            match c {
                '.' => {
                    self.bump();
                    return;
                }
                '#' => {
                    while let Some(c) = self.peek() {
                        if c == '\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                '"' => {
                    // Swallow the whole string so a dot inside it is not
                    // mistaken for a statement terminator.
                    let _ = self.read_string_body();
                }
                _ => {
                    self.bump();
                }
            }
        }
    }

    // -- grammar ----------------------------------------------------------

    fn parse_statement(&mut self) -> Parsed<()> {
        if self.peek() == Some('@') {
            return self.parse_directive();
        }
        let subject = self.parse_subject()?;
        self.parse_predicate_object_list(&subject)?;
        self.expect_dot()
    }

    fn parse_directive(&mut self) -> Parsed<()> {
        let at = self.here();
        self.bump(); // '@'
        let word = self.read_bare_word();
        match word.as_str() {
            "prefix" => {
                self.skip_trivia();
                let at = self.here();
                let prefix = self.read_prefix_decl_name(at)?;
                self.skip_trivia();
                let ns = self.parse_iriref()?;
                self.prefixes.bind(&prefix, ns);
                self.expect_dot()
            }
            "base" => {
                self.skip_trivia();
                let iri = self.parse_iriref()?;
                self.base = Some(iri);
                self.expect_dot()
            }
            other => Err(self.report(
                at,
                DiagnosticKind::Syntax,
                format!("unknown directive @{other}; expected @prefix or @base"),
            )),
        }
    }

    /// Reads `name:` of a `@prefix` declaration; the name may be empty.
    fn read_prefix_decl_name(&mut self, at: (usize, usize)) -> Parsed<String> {
        let mut name = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.') {
                name.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if self.peek() == Some(':') {
            self.bump();
            Ok(name)
        } else {
            Err(self.report(at, DiagnosticKind::Syntax, "expected a prefix name ending in ':'"))
        }
    }

    fn parse_subject(&mut self) -> Parsed<Subject> {
        let at = self.here();
        match self.peek() {
            Some('<') => Ok(Subject::Iri(self.parse_iriref()?)),
            Some('_') if self.peek_at(1) == Some(':') => Ok(Subject::Blank(self.parse_blank()?)),
            Some('[') => Err(self.report(
                at,
                DiagnosticKind::Syntax,
                "blank node property lists [ ... ] are not supported",
            )),
            Some('(') => Err(self.report(
                at,
                DiagnosticKind::Syntax,
                "collections ( ... ) are not supported",
            )),
            Some(c) if is_pname_start(c) => Ok(Subject::Iri(self.parse_pname(at)?)),
            Some(c) => Err(self.report(
                at,
                DiagnosticKind::Syntax,
                format!("expected a subject, found {c:?}"),
            )),
            None => Err(self.report(at, DiagnosticKind::Syntax, "expected a subject, found end of input")),
        }
    }

    fn parse_predicate_object_list(&mut self, subject: &Subject) -> Parsed<()> {
        loop {
            self.skip_trivia();
            let predicate = self.parse_verb()?;
            loop {
                self.skip_trivia();
                let object = self.parse_object()?;
                self.graph
                    .insert(Triple::new(subject.clone(), predicate.clone(), object));
                self.skip_trivia();
                if self.peek() == Some(',') {
                    self.bump();
                } else {
                    break;
                }
            }
            // One or more ';' separators; a trailing ';' before '.' is fine.
            let mut separated = false;
            loop {
                self.skip_trivia();
                if self.peek() == Some(';') {
                    self.bump();
                    separated = true;
                } else {
                    break;
                }
            }
            self.skip_trivia();
            if !separated || self.peek() == Some('.') || self.at_end() {
                return Ok(());
            }
        }
    }

    fn parse_verb(&mut self) -> Parsed<Iri> {
        let at = self.here();
        if self.peek() == Some('a') && self.peek_at(1).is_none_or(is_delimiter) {
            self.bump();
            return Ok(rdf_type());
        }
        match self.peek() {
            Some('<') => self.parse_iriref(),
            Some(c) if is_pname_start(c) => self.parse_pname(at),
            Some(c) => Err(self.report(
                at,
                DiagnosticKind::Syntax,
                format!("expected a predicate, found {c:?}"),
            )),
            None => Err(self.report(at, DiagnosticKind::Syntax, "expected a predicate, found end of input")),
        }
    }

    fn parse_object(&mut self) -> Parsed<Term> {
        let at = self.here();
        match self.peek() {
            Some('<') => Ok(Term::Iri(self.parse_iriref()?)),
            Some('"') => Ok(Term::Literal(self.parse_literal()?)),
            Some('\'') => Err(self.report(
                at,
                DiagnosticKind::Syntax,
                "single-quoted strings are not supported; use double quotes",
            )),
            Some('_') if self.peek_at(1) == Some(':') => Ok(Term::Blank(self.parse_blank()?)),
            Some('[') => Err(self.report(
                at,
                DiagnosticKind::Syntax,
                "blank node property lists [ ... ] are not supported",
            )),
            Some('(') => Err(self.report(
                at,
                DiagnosticKind::Syntax,
                "collections ( ... ) are not supported",
            )),
            Some(c) if c.is_ascii_digit() || matches!(c, '+' | '-') => Err(self.report(
                at,
                DiagnosticKind::Syntax,
                "numeric shorthand is not supported; use a quoted typed literal",
            )),
            Some(c) if is_pname_start(c) => {
                let word_end = self.clone_lookahead_word();
                if word_end == "true" || word_end == "false" {
                    return Err(self.report(
                        at,
                        DiagnosticKind::Syntax,
                        "boolean shorthand is not supported; use a quoted typed literal",
                    ));
                }
                Ok(Term::Iri(self.parse_pname(at)?))
            }
            Some(c) => Err(self.report(
                at,
                DiagnosticKind::Syntax,
                format!("expected an object, found {c:?}"),
            )),
            None => Err(self.report(at, DiagnosticKind::Syntax, "expected an object, found end of input")),
        }
    }

    fn expect_dot(&mut self) -> Parsed<()> {
        self.skip_trivia();
        let at = self.here();
        match self.peek() {
            Some('.') => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.report(
                at,
                DiagnosticKind::Syntax,
                format!("expected '.', found {c:?}"),
            )),
            None => Err(self.report(at, DiagnosticKind::Syntax, "expected '.', found end of input")),
        }
    }

    // -- tokens -----------------------------------------------------------

    fn parse_iriref(&mut self) -> Parsed<Iri> {
        let at = self.here();
        if self.peek() != Some('<') {
            return Err(self.report(at, DiagnosticKind::Syntax, "expected '<'"));
        }
        self.bump();
        let mut text = String::new();
        loop {
            match self.peek() {
                Some('>') => {
                    self.bump();
                    break;
                }
                Some('\\') => {
                    self.bump();
                    match self.read_unicode_escape() {
                        Ok(Some(c)) => text.push(c),
                        Ok(None) => {
                            return Err(self.report(
                                at,
                                DiagnosticKind::BadIri,
                                "only \\u and \\U escapes are allowed in IRIs",
                            ))
                        }
                        Err(msg) => return Err(self.report(at, DiagnosticKind::BadIri, msg)),
                    }
                }
                Some('\n') | None => {
                    return Err(self.report(at, DiagnosticKind::BadIri, "unterminated IRI"));
                }
                Some(c) => {
                    text.push(c);
                    self.bump();
                }
            }
        }
        self.resolve_iri(&text, at)
    }

    /// Resolves against `@base` by concatenation when the text has no scheme
    /// of its own.
    fn resolve_iri(&mut self, text: &str, at: (usize, usize)) -> Parsed<Iri> {
        match Iri::new(text) {
            Ok(iri) => Ok(iri),
            Err(RdfError::MissingScheme(_)) => {
                if let Some(base) = &self.base {
                    match Iri::new(format!("{}{}", base.as_str(), text)) {
                        Ok(iri) => return Ok(iri),
                        Err(e) => return Err(self.report(at, DiagnosticKind::BadIri, e.to_string())),
                    }
                }
                Err(self.report(
                    at,
                    DiagnosticKind::BadIri,
                    format!("relative IRI {text:?} without a base"),
                ))
            }
            Err(e) => Err(self.report(at, DiagnosticKind::BadIri, e.to_string())),
        }
    }

    fn parse_pname(&mut self, at: (usize, usize)) -> Parsed<Iri> {
        let mut text = String::new();
        while let Some(c) = self.peek() {
            if is_pname_char(c) {
                text.push(c);
                self.bump();
            } else {
                break;
            }
        }
        // Trailing dots belong to the statement, not the name.
        let mut trailing = 0;
        while text.ends_with('.') {
            text.pop();
            trailing += 1;
        }
        self.unbump(trailing);
        if !text.contains(':') {
            return Err(self.report(
                at,
                DiagnosticKind::Syntax,
                format!("expected an IRI or prefixed name, found {text:?}"),
            ));
        }
        match self.prefixes.expand(&text) {
            Ok(iri) => Ok(iri),
            Err(RdfError::UnknownPrefix(p)) => Err(self.report(
                at,
                DiagnosticKind::UnknownPrefix,
                format!("prefix {p:?} is not declared"),
            )),
            Err(e) => Err(self.report(at, DiagnosticKind::BadIri, e.to_string())),
        }
    }

    fn parse_blank(&mut self) -> Parsed<BlankNode> {
        let at = self.here();
        self.bump(); // '_'
        self.bump(); // ':'
        let mut label = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || matches!(c, '_' | '-') {
                label.push(c);
                self.bump();
            } else {
                break;
            }
        }
        match BlankNode::new(label) {
            Ok(b) => Ok(b),
            Err(e) => Err(self.report(at, DiagnosticKind::Syntax, e.to_string())),
        }
    }

    fn parse_literal(&mut self) -> Parsed<Literal> {
        let at = self.here();
        let lexical = self.read_string_body().map_err(|msg| {
            self.report(at, DiagnosticKind::BadLiteral, msg)
        })?;
        match self.peek() {
            Some('@') => {
                self.bump();
                let mut tag = String::new();
                while let Some(c) = self.peek() {
                    if c.is_ascii_alphanumeric() || c == '-' {
                        tag.push(c);
                        self.bump();
                    } else {
                        break;
                    }
                }
                match Literal::lang(lexical, &tag) {
                    Ok(lit) => Ok(lit),
                    Err(e) => Err(self.report(at, DiagnosticKind::BadLiteral, e.to_string())),
                }
            }
            Some('^') if self.peek_at(1) == Some('^') => {
                self.bump();
                self.bump();
                self.skip_trivia();
                let dt_at = self.here();
                let datatype = match self.peek() {
                    Some('<') => self.parse_iriref()?,
                    Some(c) if is_pname_start(c) => self.parse_pname(dt_at)?,
                    _ => {
                        return Err(self.report(
                            dt_at,
                            DiagnosticKind::BadLiteral,
                            "expected a datatype IRI after '^^'",
                        ))
                    }
                };
                Ok(Literal::typed(lexical, datatype))
            }
            _ => Ok(Literal::plain(lexical)),
        }
    }

    /// Reads a `"..."` or `"""..."""` body, cursor on the opening quote.
    /// Returns the unescaped text or an error message.
    fn read_string_body(&mut self) -> Result<String, String> {
        self.bump(); // opening '"'
        let long = self.peek() == Some('"') && self.peek_at(1) == Some('"');
        if long {
            self.bump();
            self.bump();
        } else if self.peek() == Some('"') {
            // Empty short string.
            self.bump();
            return Ok(String::new());
        }
        let mut text = String::new();
        loop {
            match self.peek() {
                None => return Err("unterminated string literal".to_owned()),
                Some('"') => {
                    if long {
                        // In a run of n >= 3 quotes the last three terminate
                        // and the rest belong to the content.
                        let mut quotes = 0;
                        while self.peek() == Some('"') {
                            self.bump();
                            quotes += 1;
                        }
                        if quotes >= 3 {
                            for _ in 0..quotes - 3 {
                                text.push('"');
                            }
                            return Ok(text);
                        }
                        for _ in 0..quotes {
                            text.push('"');
                        }
                    } else {
                        self.bump();
                        return Ok(text);
                    }
                }
                Some('\n') if !long => {
                    return Err("newline in single-line string literal".to_owned());
                }
                Some('\\') => {
                    self.bump();
                    match self.peek() {
                        Some('"') => {
                            text.push('"');
                            self.bump();
                        }
                        Some('\\') => {
                            text.push('\\');
                            self.bump();
                        }
                        Some('n') => {
                            text.push('\n');
                            self.bump();
                        }
                        Some('t') => {
                            text.push('\t');
                            self.bump();
                        }
                        Some('r') => {
                            text.push('\r');
                            self.bump();
                        }
                        Some('u') | Some('U') => match self.read_unicode_escape() {
                            Ok(Some(c)) => text.push(c),
                            Ok(None) => unreachable!("peeked u or U"),
                            Err(msg) => return Err(msg),
                        },
                        Some(c) => {
                            return Err(format!("unsupported escape \\{c}"));
                        }
                        None => return Err("unterminated string literal".to_owned()),
                    }
                }
                Some(c) => {
                    text.push(c);
                    self.bump();
                }
            }
        }
    }

    /// Cursor is on `u` or `U` (after the backslash was consumed). Returns
    /// `Ok(None)` if the cursor is on something else.
    fn read_unicode_escape(&mut self) -> Result<Option<char>, String> {
        let width = match self.peek() {
            Some('u') => 4,
            Some('U') => 8,
            _ => return Ok(None),
        };
        self.bump();
        let mut value: u32 = 0;
        for _ in 0..width {
            let Some(d) = self.peek().and_then(|c| c.to_digit(16)) else {
                return Err(format!("\\u escape needs {width} hex digits"));
            };
            value = value * 16 + d;
            self.bump();
        }
        char::from_u32(value)
            .map(Some)
            .ok_or_else(|| format!("\\u escape U+{value:04X} is not a character"))
    }

    fn read_bare_word(&mut self) -> String {
        let mut word = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphabetic() {
                word.push(c);
                self.bump();
            } else {
                break;
            }
        }
        word
    }

    /// Peeks the bare word at the cursor without consuming it.
    fn clone_lookahead_word(&self) -> String {
        self.chars[self.pos..]
            .iter()
            .take_while(|c| c.is_ascii_alphanumeric())
            .collect()
    }
}

fn rdf_type() -> Iri {
    Iri::new("http://www.w3.org/1999/02/22-rdf-syntax-ns#type").expect("constant IRI")
}

fn is_delimiter(c: char) -> bool {
    c.is_whitespace() || matches!(c, '<' | '"' | '_' | '#')
}

fn is_pname_start(c: char) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, '_' | ':')
}

fn is_pname_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.' | ':')
}
