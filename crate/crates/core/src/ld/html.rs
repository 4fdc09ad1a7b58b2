use crate::ld::describe::ResourceDescription;
use crate::rdf::PrefixMap;

/// Renders a description as a small self-contained HTML page.
///
/// The page embeds the Turtle rendering verbatim (HTML-escaped) inside
/// `<pre id="turtle-description">`, so the HTML and Turtle answers for a
/// focus encode the same triples and tests can check that mechanically.
pub fn html_page(description: &ResourceDescription, prefixes: &PrefixMap) -> String {
    let iri = description.focus.as_str();
    let display_name = prefixes
        .compact(&description.focus)
        .unwrap_or_else(|| iri.to_owned());
    let heading = description
        .labels
        .get("en")
        .or_else(|| description.labels.get("pt-br"))
        .or_else(|| description.labels.values().next())
        .map(String::as_str)
        .unwrap_or(&display_name);
    let turtle = description.to_turtle(prefixes);

    let mut label_rows = String::new();
    for (lang, text) in &description.labels {
        let lang_cell = if lang.is_empty() { "-" } else { lang };
        label_rows.push_str(&format!(
            "      <tr><td>{}</td><td>{}</td></tr>\n",
            escape(lang_cell),
            escape(text)
        ));
    }
    let label_table = if label_rows.is_empty() {
        String::new()
    } else {
        format!(
            "    <table>\n      <tr><th>language</th><th>label</th></tr>\n{label_rows}    </table>\n"
        )
    };

    format!(
        concat!(
            "<!doctype html>\n",
            "<html lang=\"en\">\n",
            "  <head>\n",
            "    <meta charset=\"utf-8\">\n",
            "    <title>{title}</title>\n",
            "    <style>\n",
            "      body {{ font-family: sans-serif; margin: 2rem auto; max-width: 60rem; }}\n",
            "      pre {{ background: #f4f4f4; padding: 1rem; overflow-x: auto; }}\n",
            "      table {{ border-collapse: collapse; }}\n",
            "      td, th {{ border: 1px solid #999; padding: 0.2rem 0.6rem; text-align: left; }}\n",
            "    </style>\n",
            "  </head>\n",
            "  <body>\n",
            "    <h1>{heading}</h1>\n",
            "    <p><code>{iri}</code></p>\n",
            "{labels}",
            "    <h2>Description ({outbound} outbound, {inbound} inbound)</h2>\n",
            "    <pre id=\"turtle-description\">{turtle}</pre>\n",
            "  </body>\n",
            "</html>\n"
        ),
        title = escape(&display_name),
        heading = escape(heading),
        iri = escape(iri),
        labels = label_table,
        outbound = description.outbound.len(),
        inbound = description.inbound.len(),
        turtle = escape(&turtle),
    )
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            c => out.push(c),
        }
    }
    out
}

/// Recovers the Turtle block `html_page` embedded. Tests use this to prove
/// the HTML answer carries the same triples as the Turtle one.
pub fn extract_turtle_block(html: &str) -> Option<String> {
    let start = html.find("<pre id=\"turtle-description\">")? + "<pre id=\"turtle-description\">".len();
    let end = html[start..].find("</pre>")? + start;
    Some(unescape(&html[start..end]))
}

fn unescape(text: &str) -> String {
    text.replace("&lt;", "<")
        .replace("&gt;", ">")
        .replace("&amp;", "&")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ld::describe::describe;
    use crate::rdf::Graph;
    use crate::schema::{build_ops_core, ops_prefix_map};
    use crate::turtle::parse_turtle;

    #[test]
    fn embedded_block_re_parses_to_the_description_graph() {
        let schema = build_ops_core();
        let focus = schema.iri_of("SocialActor").unwrap();
        let d = describe(&focus, &Graph::new(), &schema);
        let prefixes = ops_prefix_map(schema.base());
        let page = html_page(&d, &prefixes);
        let block = extract_turtle_block(&page).unwrap();
        assert_eq!(block, d.to_turtle(&prefixes));
        let (parsed, _) = parse_turtle(&block).unwrap();
        assert_eq!(parsed, d.to_graph());
    }

    #[test]
    fn page_heading_prefers_the_english_label() {
        let schema = build_ops_core();
        let focus = schema.iri_of("Cause").unwrap();
        let d = describe(&focus, &Graph::new(), &schema);
        let page = html_page(&d, &ops_prefix_map(schema.base()));
        assert!(page.contains("<h1>Cause</h1>"), "{page}");
        assert!(page.contains("<title>ops:Cause</title>"), "{page}");
        assert!(page.contains("<tr><td>pt-br</td><td>Causa</td></tr>"));
    }

    #[test]
    fn markup_characters_in_content_are_escaped() {
        assert_eq!(escape("a <b> & c"), "a &lt;b&gt; &amp; c");
        assert_eq!(unescape(&escape("<x> & \"y\"")), "<x> & \"y\"");
    }
}
