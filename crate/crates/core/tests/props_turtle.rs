//! Writer/reader round-trip properties.

mod common;

use common::*;
use opskit::turtle::{parse_turtle, serialize_turtle};
use opskit::{Iri, PrefixMap};
use proptest::prelude::*;

fn t_prefixes() -> PrefixMap {
    let mut pm = PrefixMap::new();
    pm.bind("t", Iri::new("http://t.example/").unwrap());
    pm.bind("xsd", Iri::new("http://www.w3.org/2001/XMLSchema#").unwrap());
    pm
}

proptest! {
    #[test]
    fn round_trip_preserves_the_graph(g in arb_graph(50)) {
        for prefixes in [PrefixMap::new(), t_prefixes()] {
            let text = serialize_turtle(&g, &prefixes);
            let (parsed, parsed_prefixes) = parse_turtle(&text)
                .unwrap_or_else(|d| panic!("wrote unparseable Turtle: {d:?}\n{text}"));
            prop_assert_eq!(triple_set(&parsed), triple_set(&g), "{}", text);
            prop_assert_eq!(parsed_prefixes.len(), prefixes.len());
        }
    }

    #[test]
    fn serialization_is_deterministic(g in arb_graph(50)) {
        let prefixes = t_prefixes();
        let first = serialize_turtle(&g, &prefixes);
        let second = serialize_turtle(&g.clone(), &prefixes);
        prop_assert_eq!(first, second);
    }

    #[test]
    fn reserializing_a_parse_is_a_fixed_point(g in arb_graph(30)) {
        let prefixes = t_prefixes();
        let text = serialize_turtle(&g, &prefixes);
        let (parsed, pm) = parse_turtle(&text).unwrap();
        prop_assert_eq!(serialize_turtle(&parsed, &pm), text);
    }

    #[test]
    fn parser_never_panics(text in "\\PC{0,120}") {
        let _ = parse_turtle(&text);
    }

    #[test]
    fn parser_never_panics_on_statement_shaped_noise(
        head in "[<>a-z:/ .\"\\\\{}@^_-]{0,80}",
    ) {
        let _ = parse_turtle(&head);
    }
}
