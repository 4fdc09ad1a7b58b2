use crate::rdf::{Iri, Literal, PrefixMap, RdfError, Term};
use crate::sparql::ast::{PatternTerm, Projection, Query, TriplePattern};
use crate::turtle::{DiagnosticKind, ParseDiagnostic};

/// Parses a SELECT query with no seed prefixes beyond what the text
/// declares.
pub fn parse_query(text: &str) -> Result<Query, Vec<ParseDiagnostic>> {
    parse_query_with_prefixes(text, &PrefixMap::new())
}

/// Parses a SELECT query; `seed` prefixes are visible to the query and may
/// be shadowed by its own PREFIX declarations. The service endpoint uses
/// this to make the ontology prefixes available without declarations.
pub fn parse_query_with_prefixes(
    text: &str,
    seed: &PrefixMap,
) -> Result<Query, Vec<ParseDiagnostic>> {
    let mut prefixes = PrefixMap::new();
    for (name, ns) in seed.iter() {
        prefixes.bind(name, ns.clone());
    }
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        line: 1,
        column: 1,
        prefixes,
    };
    match p.parse() {
        Ok(q) => Ok(q),
        Err(d) => Err(vec![d]),
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
    prefixes: PrefixMap,
}

/// Query parsing is fail-fast: the first diagnostic ends it. There is no
/// statement boundary to recover at inside a single SELECT.
type Parsed<T> = Result<T, ParseDiagnostic>;

impl Parser {
    fn parse(&mut self) -> Parsed<Query> {
        self.skip_trivia();
        while self.keyword_ahead("PREFIX") {
            self.parse_prefix_decl()?;
            self.skip_trivia();
        }
        if !self.keyword_ahead("SELECT") {
            return Err(self.error_here(DiagnosticKind::Syntax, "expected SELECT"));
        }
        self.consume_keyword();
        self.skip_trivia();
        let distinct = if self.keyword_ahead("DISTINCT") {
            self.consume_keyword();
            self.skip_trivia();
            true
        } else {
            false
        };
        let (projection, var_positions) = self.parse_projection()?;
        self.skip_trivia();
        if !self.keyword_ahead("WHERE") {
            return Err(self.error_here(DiagnosticKind::Syntax, "expected WHERE"));
        }
        self.consume_keyword();
        self.skip_trivia();
        let patterns = self.parse_group()?;
        self.skip_trivia();
        let limit = if self.keyword_ahead("LIMIT") {
            Some(self.parse_limit()?)
        } else {
            None
        };
        self.skip_trivia();
        if let Some(c) = self.peek() {
            return Err(self.error_here(
                DiagnosticKind::Syntax,
                format!("unexpected {c:?} after the query"),
            ));
        }
        let query = Query {
            prefixes: std::mem::take(&mut self.prefixes),
            projection,
            patterns,
            distinct,
            limit,
        };
        self.check_projection(&query, &var_positions)?;
        Ok(query)
    }

    /// Every projected variable must appear in some pattern; a query
    /// projecting a variable no pattern can bind would only ever be empty.
    fn check_projection(
        &self,
        query: &Query,
        var_positions: &[(usize, usize)],
    ) -> Parsed<()> {
        let Projection::Variables(vars) = &query.projection else {
            return Ok(());
        };
        let bound = query.pattern_variables();
        for (v, at) in vars.iter().zip(var_positions) {
            if !bound.contains(v) {
                return Err(self.error(
                    *at,
                    DiagnosticKind::Syntax,
                    format!("projected variable ?{v} does not appear in any pattern"),
                ));
            }
        }
        Ok(())
    }

    // -- cursor -----------------------------------------------------------

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

    fn error(
        &self,
        at: (usize, usize),
        kind: DiagnosticKind,
        message: impl Into<String>,
    ) -> ParseDiagnostic {
        ParseDiagnostic {
            line: at.0,
            column: at.1,
            kind,
            message: message.into(),
        }
    }

    fn error_here(&self, kind: DiagnosticKind, message: impl Into<String>) -> ParseDiagnostic {
        self.error(self.here(), kind, message)
    }

    /// True when the next token is `word`, case-insensitively, ending at a
    /// non-name character.
    fn keyword_ahead(&self, word: &str) -> bool {
        let mut i = 0;
        for expected in word.chars() {
            match self.peek_at(i) {
                Some(c) if c.eq_ignore_ascii_case(&expected) => i += 1,
                _ => return false,
            }
        }
        !self
            .peek_at(i)
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
    }

    /// Consumes the keyword that `keyword_ahead` just matched.
    fn consume_keyword(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
            self.bump();
        }
    }

    // -- grammar ----------------------------------------------------------

    fn parse_prefix_decl(&mut self) -> Parsed<()> {
        self.consume_keyword();
        self.skip_trivia();
        let at = self.here();
        let mut name = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.') {
                name.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if self.peek() != Some(':') {
            return Err(self.error(at, DiagnosticKind::Syntax, "expected a prefix name ending in ':'"));
        }
        self.bump();
        self.skip_trivia();
        let ns = self.parse_iriref()?;
        self.prefixes.bind(&name, ns);
        Ok(())
    }

    fn parse_projection(&mut self) -> Parsed<(Projection, Vec<(usize, usize)>)> {
        if self.peek() == Some('*') {
            self.bump();
            return Ok((Projection::Star, Vec::new()));
        }
        let mut vars = Vec::new();
        let mut positions = Vec::new();
        loop {
            self.skip_trivia();
            if self.peek() != Some('?') {
                break;
            }
            let at = self.here();
            let name = self.parse_variable()?;
            if vars.contains(&name) {
                return Err(self.error(
                    at,
                    DiagnosticKind::Syntax,
                    format!("variable ?{name} is projected twice"),
                ));
            }
            vars.push(name);
            positions.push(at);
        }
        if vars.is_empty() {
            return Err(self.error_here(
                DiagnosticKind::Syntax,
                "expected '*' or at least one ?variable after SELECT",
            ));
        }
        Ok((Projection::Variables(vars), positions))
    }

    fn parse_group(&mut self) -> Parsed<Vec<TriplePattern>> {
        let open_at = self.here();
        if self.peek() != Some('{') {
            return Err(self.error_here(DiagnosticKind::Syntax, "expected '{' after WHERE"));
        }
        self.bump();
        let mut patterns = Vec::new();
        loop {
            self.skip_trivia();
            match self.peek() {
                Some('}') => {
                    self.bump();
                    break;
                }
                None => {
                    return Err(self.error_here(
                        DiagnosticKind::Syntax,
                        "expected '}' to close the pattern group",
                    ))
                }
                _ => {
                    if !patterns.is_empty() {
                        // Patterns are separated by '.'; a trailing one
                        // before '}' is fine.
                        if self.peek() == Some('.') {
                            self.bump();
                            self.skip_trivia();
                            if self.peek() == Some('}') {
                                self.bump();
                                break;
                            }
                        } else {
                            return Err(self.error_here(
                                DiagnosticKind::Syntax,
                                "expected '.' between triple patterns",
                            ));
                        }
                    }
                    patterns.push(self.parse_pattern()?);
                }
            }
        }
        if patterns.is_empty() {
            return Err(self.error(open_at, DiagnosticKind::Syntax, "empty pattern group"));
        }
        Ok(patterns)
    }

    fn parse_pattern(&mut self) -> Parsed<TriplePattern> {
        let subject = self.parse_pattern_term(Position::Subject)?;
        self.skip_trivia();
        let predicate = self.parse_pattern_term(Position::Predicate)?;
        self.skip_trivia();
        let object = self.parse_pattern_term(Position::Object)?;
        Ok(TriplePattern {
            subject,
            predicate,
            object,
        })
    }

    fn parse_pattern_term(&mut self, position: Position) -> Parsed<PatternTerm> {
        let at = self.here();
        match self.peek() {
            Some('?') => Ok(PatternTerm::Variable(self.parse_variable()?)),
            Some('$') => Err(self.error(
                at,
                DiagnosticKind::Syntax,
                "variables use '?', not '$'",
            )),
            Some('<') => Ok(PatternTerm::Term(Term::Iri(self.parse_iriref()?))),
            Some('"') => {
                if position != Position::Object {
                    return Err(self.error(
                        at,
                        DiagnosticKind::Syntax,
                        format!("a literal cannot be a {}", position.name()),
                    ));
                }
                Ok(PatternTerm::Term(Term::Literal(self.parse_literal()?)))
            }
            Some('_') if self.peek_at(1) == Some(':') => Err(self.error(
                at,
                DiagnosticKind::Syntax,
                "blank nodes are not allowed in query patterns; use a variable",
            )),
            Some('a') if position == Position::Predicate && self.at_keyword_a() => {
                self.bump();
                Ok(PatternTerm::Term(Term::Iri(rdf_type())))
            }
            Some(c) if c.is_ascii_alphanumeric() || c == '_' || c == ':' => {
                Ok(PatternTerm::Term(Term::Iri(self.parse_pname(at)?)))
            }
            Some(c) => Err(self.error(
                at,
                DiagnosticKind::Syntax,
                format!("expected a {}, found {c:?}", position.name()),
            )),
            None => Err(self.error(
                at,
                DiagnosticKind::Syntax,
                format!("expected a {}, found end of input", position.name()),
            )),
        }
    }

    fn at_keyword_a(&self) -> bool {
        !self
            .peek_at(1)
            .is_some_and(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.' | ':'))
    }

    fn parse_variable(&mut self) -> Parsed<String> {
        let at = self.here();
        self.bump(); // '?'
        let mut name = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                name.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if name.is_empty() {
            return Err(self.error(at, DiagnosticKind::Syntax, "expected a variable name after '?'"));
        }
        Ok(name)
    }

    fn parse_iriref(&mut self) -> Parsed<Iri> {
        let at = self.here();
        self.bump(); // '<'
        let mut text = String::new();
        loop {
            match self.peek() {
                Some('>') => {
                    self.bump();
                    break;
                }
                Some('\n') | None => {
                    return Err(self.error(at, DiagnosticKind::BadIri, "unterminated IRI"));
                }
                Some(c) => {
                    text.push(c);
                    self.bump();
                }
            }
        }
        Iri::new(&text).map_err(|e| self.error(at, DiagnosticKind::BadIri, e.to_string()))
    }

    fn parse_pname(&mut self, at: (usize, usize)) -> Parsed<Iri> {
        let mut text = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.' | ':') {
                text.push(c);
                self.bump();
            } else {
                break;
            }
        }
        // A trailing dot is the pattern separator, not part of the name.
        let mut put_back = 0;
        while text.ends_with('.') {
            text.pop();
            put_back += 1;
        }
        self.pos -= put_back;
        self.column -= put_back;
        if !text.contains(':') {
            return Err(self.error(
                at,
                DiagnosticKind::Syntax,
                format!("expected an IRI or prefixed name, found {text:?}"),
            ));
        }
        match self.prefixes.expand(&text) {
            Ok(iri) => Ok(iri),
            Err(RdfError::UnknownPrefix(p)) => Err(self.error(
                at,
                DiagnosticKind::UnknownPrefix,
                format!("prefix {p:?} is not declared"),
            )),
            Err(e) => Err(self.error(at, DiagnosticKind::BadIri, e.to_string())),
        }
    }

    fn parse_literal(&mut self) -> Parsed<Literal> {
        let at = self.here();
        self.bump(); // opening '"'
        let mut text = String::new();
        loop {
            match self.peek() {
                Some('"') => {
                    self.bump();
                    break;
                }
                Some('\n') | None => {
                    return Err(self.error(at, DiagnosticKind::BadLiteral, "unterminated string literal"));
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
                        Some(c) => {
                            return Err(self.error(
                                at,
                                DiagnosticKind::BadLiteral,
                                format!("unsupported escape \\{c}"),
                            ));
                        }
                        None => {
                            return Err(self.error(
                                at,
                                DiagnosticKind::BadLiteral,
                                "unterminated string literal",
                            ));
                        }
                    }
                }
                Some(c) => {
                    text.push(c);
                    self.bump();
                }
            }
        }
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
                Literal::lang(text, &tag)
                    .map_err(|e| self.error(at, DiagnosticKind::BadLiteral, e.to_string()))
            }
            Some('^') if self.peek_at(1) == Some('^') => {
                self.bump();
                self.bump();
                let dt_at = self.here();
                let datatype = match self.peek() {
                    Some('<') => self.parse_iriref()?,
                    Some(c) if c.is_ascii_alphanumeric() || c == '_' || c == ':' => {
                        self.parse_pname(dt_at)?
                    }
                    _ => {
                        return Err(self.error(
                            dt_at,
                            DiagnosticKind::BadLiteral,
                            "expected a datatype IRI after '^^'",
                        ))
                    }
                };
                Ok(Literal::typed(text, datatype))
            }
            _ => Ok(Literal::plain(text)),
        }
    }

    fn parse_limit(&mut self) -> Parsed<usize> {
        self.consume_keyword();
        self.skip_trivia();
        let at = self.here();
        let mut digits = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                digits.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if digits.is_empty() {
            return Err(self.error(at, DiagnosticKind::Syntax, "expected a number after LIMIT"));
        }
        let n: usize = digits
            .parse()
            .map_err(|_| self.error(at, DiagnosticKind::Syntax, "LIMIT is out of range"))?;
        if n == 0 {
            return Err(self.error(at, DiagnosticKind::Syntax, "LIMIT must be positive"));
        }
        Ok(n)
    }
}

#[derive(PartialEq, Clone, Copy)]
enum Position {
    Subject,
    Predicate,
    Object,
}

impl Position {
    fn name(self) -> &'static str {
        match self {
            Position::Subject => "subject",
            Position::Predicate => "predicate",
            Position::Object => "object",
        }
    }
}

fn rdf_type() -> Iri {
    Iri::new("http://www.w3.org/1999/02/22-rdf-syntax-ns#type").expect("constant IRI")
}
