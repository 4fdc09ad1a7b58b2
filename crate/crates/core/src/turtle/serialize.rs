use crate::rdf::{Graph, Iri, Literal, PrefixMap, Subject, Term};

/// Writes a graph as Turtle, deterministically.
///
/// Layout: one `@prefix` directive per binding in prefix order, a blank
/// separator line, then one block per subject. Subjects are ordered IRIs
/// before blank nodes, each lexicographically; predicates sort by expanded
/// IRI (so `rdf:type`, written as `a`, sits at its expanded position);
/// objects sort in term order. Blank node labels are written as they are
/// stored. The output parses back to an equal graph and prefix map.
pub fn serialize_turtle(graph: &Graph, prefixes: &PrefixMap) -> String {
    let mut out = String::new();
    for (prefix, ns) in prefixes.iter() {
        out.push_str("@prefix ");
        out.push_str(prefix);
        out.push_str(": <");
        out.push_str(&escape_iri(ns.as_str()));
        out.push_str("> .\n");
    }
    if !prefixes.is_empty() && !graph.is_empty() {
        out.push('\n');
    }

    let subjects: Vec<&Subject> = graph.subjects().collect();
    for (i, subject) in subjects.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&subject_str(subject, prefixes));
        let preds: Vec<_> = graph.predicates_for(subject).collect();
        for (j, (predicate, objects)) in preds.iter().enumerate() {
            if j == 0 {
                out.push(' ');
            } else {
                out.push_str(" ;\n    ");
            }
            out.push_str(&predicate_str(predicate, prefixes));
            out.push(' ');
            let rendered: Vec<String> = objects.iter().map(|o| term_str(o, prefixes)).collect();
            out.push_str(&rendered.join(", "));
        }
        out.push_str(" .\n");
    }
    out
}

fn subject_str(subject: &Subject, prefixes: &PrefixMap) -> String {
    match subject {
        Subject::Iri(iri) => iri_str(iri, prefixes),
        Subject::Blank(b) => format!("_:{}", b.as_str()),
    }
}

fn predicate_str(predicate: &Iri, prefixes: &PrefixMap) -> String {
    if predicate.as_str() == "http://www.w3.org/1999/02/22-rdf-syntax-ns#type" {
        "a".to_owned()
    } else {
        iri_str(predicate, prefixes)
    }
}

pub(crate) fn term_str(term: &Term, prefixes: &PrefixMap) -> String {
    match term {
        Term::Iri(iri) => iri_str(iri, prefixes),
        Term::Blank(b) => format!("_:{}", b.as_str()),
        Term::Literal(lit) => literal_str(lit, prefixes),
    }
}

fn iri_str(iri: &Iri, prefixes: &PrefixMap) -> String {
    match prefixes.compact(iri) {
        Some(qname) => qname,
        None => format!("<{}>", escape_iri(iri.as_str())),
    }
}

fn literal_str(lit: &Literal, prefixes: &PrefixMap) -> String {
    let mut out = String::with_capacity(lit.lexical().len() + 2);
    out.push('"');
    for c in lit.lexical().chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04X}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    if let Some(tag) = lit.language() {
        out.push('@');
        out.push_str(tag);
    } else if let Some(dt) = lit.datatype() {
        out.push_str("^^");
        out.push_str(&iri_str(dt, prefixes));
    }
    out
}

/// IRIs are validated whitespace-free, but characters Turtle's IRIREF
/// excludes still need escaping so the output always re-parses.
fn escape_iri(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '<' | '>' | '"' | '{' | '}' | '|' | '^' | '`' | '\\' => {
                out.push_str(&format!("\\u{:04X}", c as u32));
            }
            c if (c as u32) < 0x21 => out.push_str(&format!("\\u{:04X}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rdf::{BlankNode, Triple};
    use crate::turtle::parse_turtle;

    fn iri(s: &str) -> Iri {
        Iri::new(s).unwrap()
    }

    fn sample() -> (Graph, PrefixMap) {
        let mut pm = PrefixMap::new();
        pm.bind("ex", iri("http://x.example/"));
        pm.bind("rdf", iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#"));
        let mut g = Graph::new();
        g.insert(Triple::new(
            iri("http://x.example/a"),
            iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type"),
            iri("http://x.example/C"),
        ));
        g.insert(Triple::new(
            iri("http://x.example/a"),
            iri("http://x.example/p"),
            Literal::lang("rótulo", "pt-br").unwrap(),
        ));
        g.insert(Triple::new(
            iri("http://x.example/a"),
            iri("http://x.example/p"),
            Literal::plain("plain"),
        ));
        g.insert(Triple::new(
            BlankNode::new("node").unwrap(),
            iri("http://x.example/q"),
            iri("http://x.example/a"),
        ));
        (g, pm)
    }

    #[test]
    fn output_is_stable_and_round_trips() {
        let (g, pm) = sample();
        let text = serialize_turtle(&g, &pm);
        assert_eq!(text, serialize_turtle(&g, &pm));
        let (g2, pm2) = parse_turtle(&text).unwrap();
        assert_eq!(g, g2);
        assert_eq!(pm, pm2);
    }

    #[test]
    fn layout_matches_expectation() {
        let (g, pm) = sample();
        let text = serialize_turtle(&g, &pm);
        let expected = concat!(
            "@prefix ex: <http://x.example/> .\n",
            "@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .\n",
            "\n",
            "ex:a a ex:C ;\n",
            "    ex:p \"plain\", \"rótulo\"@pt-br .\n",
            "\n",
            "_:node ex:q ex:a .\n"
        );
        assert_eq!(text, expected);
    }

    #[test]
    fn escapes_control_characters_and_quotes() {
        let mut g = Graph::new();
        g.insert(Triple::new(
            iri("http://x.example/a"),
            iri("http://x.example/p"),
            Literal::plain("line\nquote\" tab\t bell\u{7}"),
        ));
        let text = serialize_turtle(&g, &PrefixMap::new());
        assert!(text.contains("\\n") && text.contains("\\\"") && text.contains("\\t"));
        assert!(text.contains("\\u0007"));
        let (g2, _) = parse_turtle(&text).unwrap();
        assert_eq!(g, g2);
    }

    #[test]
    fn empty_graph_serializes_to_directives_only() {
        let mut pm = PrefixMap::new();
        pm.bind("ex", iri("http://x.example/"));
        assert_eq!(
            serialize_turtle(&Graph::new(), &pm),
            "@prefix ex: <http://x.example/> .\n"
        );
        assert_eq!(serialize_turtle(&Graph::new(), &PrefixMap::new()), "");
    }
}
