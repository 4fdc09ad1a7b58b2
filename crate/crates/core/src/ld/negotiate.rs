/// Response formats the service can produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Turtle,
    Html,
    SparqlJson,
    Tsv,
}

impl Format {
    pub fn media_type(self) -> &'static str {
        match self {
            Format::Turtle => "text/turtle; charset=utf-8",
            Format::Html => "text/html; charset=utf-8",
            Format::SparqlJson => "application/sparql-results+json",
            Format::Tsv => "text/tab-separated-values; charset=utf-8",
        }
    }
}

/// Picks a format from an Accept header: the first recognized media range
/// wins, in the order the client listed them; q-values are ignored. An
/// empty or unrecognized header means Turtle, the machine default, so
/// anything that is not visibly a browser gets data.
pub fn negotiate(accept: &str) -> Format {
    for range in accept.split(',') {
        let media = range.split(';').next().unwrap_or("").trim().to_ascii_lowercase();
        if media.contains("turtle") {
            return Format::Turtle;
        }
        if media.contains("html") {
            return Format::Html;
        }
        if media == "application/sparql-results+json" || media == "application/json" {
            return Format::SparqlJson;
        }
        if media.contains("tab-separated") {
            return Format::Tsv;
        }
        if media.contains("rdf") {
            return Format::Turtle;
        }
    }
    Format::Turtle
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn browser_accept_header_gets_html() {
        assert_eq!(
            negotiate("text/html,application/xhtml+xml,application/xml;q=0.9,*/*;q=0.8"),
            Format::Html
        );
    }

    #[test]
    fn turtle_and_rdf_ranges_get_turtle() {
        assert_eq!(negotiate("text/turtle"), Format::Turtle);
        assert_eq!(negotiate("application/rdf+xml"), Format::Turtle);
        assert_eq!(negotiate("application/x-turtle;q=0.5"), Format::Turtle);
    }

    #[test]
    fn absent_or_unknown_defaults_to_turtle() {
        assert_eq!(negotiate(""), Format::Turtle);
        assert_eq!(negotiate("*/*"), Format::Turtle);
        assert_eq!(negotiate("image/png, audio/ogg"), Format::Turtle);
    }

    #[test]
    fn json_results_and_tsv_are_recognized() {
        assert_eq!(negotiate("application/sparql-results+json"), Format::SparqlJson);
        assert_eq!(negotiate("application/json"), Format::SparqlJson);
        assert_eq!(negotiate("text/tab-separated-values"), Format::Tsv);
    }

    #[test]
    fn first_recognized_range_wins() {
        assert_eq!(negotiate("application/json, text/html"), Format::SparqlJson);
        assert_eq!(negotiate("text/html, application/json"), Format::Html);
        assert_eq!(negotiate("image/png, text/turtle"), Format::Turtle);
        assert_eq!(negotiate("TEXT/HTML"), Format::Html);
    }
}
