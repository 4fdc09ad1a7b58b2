//! Violation reporting: disjointness conflicts and the closed-world
//! restriction lint.

use std::fmt;

use serde_json::{json, Value};

use crate::rdf::{Graph, Subject, Term, Triple};
use crate::schema::{vocab, OntologySchema};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ViolationKind {
    Disjointness,
    MissingRestrictionFiller,
}

impl ViolationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationKind::Disjointness => "disjointness",
            ViolationKind::MissingRestrictionFiller => "missingRestrictionFiller",
        }
    }
}

/// One finding against one individual. `detail` names the classes or the
/// restriction row involved; `message` is the full human-readable line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub focus: Subject,
    pub detail: String,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind.as_str(), self.message)
    }
}

fn subject_text(s: &Subject) -> String {
    match s {
        Subject::Iri(iri) => iri.as_str().to_owned(),
        Subject::Blank(b) => format!("_:{}", b.as_str()),
    }
}

/// One line per violation, in report order.
pub fn violations_to_text(violations: &[Violation]) -> String {
    let mut out = String::new();
    for v in violations {
        out.push_str(&v.to_string());
        out.push('\n');
    }
    out
}

/// JSON array of {kind, focus, detail, message}.
pub fn violations_to_json(violations: &[Violation]) -> Value {
    Value::Array(
        violations
            .iter()
            .map(|v| {
                json!({
                    "kind": v.kind.as_str(),
                    "focus": subject_text(&v.focus),
                    "detail": v.detail,
                    "message": v.message,
                })
            })
            .collect(),
    )
}

/// Reports every individual typed into both halves of a declared disjoint
/// pair: one violation per individual per pair. Expects `graph` to be
/// materialized already; only asserted types are read.
pub fn check_disjointness(graph: &Graph, schema: &OntologySchema) -> Vec<Violation> {
    let rdf_type = vocab::rdf_type();
    let mut violations = Vec::new();
    for pair in schema.disjointness() {
        let first = schema.iri_of(&pair.first).expect("validated");
        let second = schema.iri_of(&pair.second).expect("validated");
        for t in graph.matching(None, Some(&rdf_type), Some(&Term::Iri(first))) {
            let also_second =
                graph.contains(&Triple::new(t.subject.clone(), rdf_type.clone(), second.clone()));
            if !also_second {
                continue;
            }
            let focus = t.subject;
            violations.push(Violation {
                kind: ViolationKind::Disjointness,
                detail: format!("{} / {}", pair.first, pair.second),
                message: format!(
                    "{} is typed both {} and {}, which are declared disjoint",
                    subject_text(&focus),
                    pair.first,
                    pair.second
                ),
                focus,
            });
        }
    }
    violations
}

/// Closed-world restriction lint. For each restriction `C (p some F)` and
/// each individual typed `C`, reports a violation unless the individual has
/// a `p` edge to some node typed `F`. Run it on a materialized graph;
/// profiles without restrictions produce nothing.
pub fn validate_restrictions(graph: &Graph, schema: &OntologySchema) -> Vec<Violation> {
    let rdf_type = vocab::rdf_type();
    let mut violations = Vec::new();
    for r in schema.restrictions() {
        let on_class = schema.iri_of(&r.on_class).expect("validated");
        let property = schema.iri_of(&r.property).expect("validated");
        let filler = schema.iri_of(&r.filler).expect("validated");
        for t in graph.matching(None, Some(&rdf_type), Some(&Term::Iri(on_class.clone()))) {
            let satisfied = graph
                .matching(Some(&t.subject.to_term()), Some(&property), None)
                .into_iter()
                .any(|edge| match Subject::try_from(edge.object) {
                    Ok(y) => graph.contains(&Triple::new(y, rdf_type.clone(), filler.clone())),
                    Err(_) => false,
                });
            if satisfied {
                continue;
            }
            let focus = t.subject;
            violations.push(Violation {
                kind: ViolationKind::MissingRestrictionFiller,
                detail: format!("{} ({} some {})", r.on_class, r.property, r.filler),
                message: format!(
                    "{} is a {} but has no {} edge to a {}",
                    subject_text(&focus),
                    r.on_class,
                    r.property,
                    r.filler
                ),
                focus,
            });
        }
    }
    violations
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rdf::Iri;
    use crate::reason::materialize;
    use crate::schema::{build_ops_expanded, build_ops_restricted};

    fn iri(text: &str) -> Iri {
        Iri::new(text).unwrap()
    }

    fn ops(schema: &OntologySchema, name: &str) -> Iri {
        schema.iri_of(name).unwrap()
    }

    #[test]
    fn empty_graph_has_no_violations() {
        let s = build_ops_expanded();
        assert!(check_disjointness(&Graph::new(), &s).is_empty());
        assert!(validate_restrictions(&Graph::new(), &s).is_empty());
    }

    #[test]
    fn disjoint_pair_membership_is_one_violation() {
        let s = build_ops_expanded();
        let x = iri("http://data.example/x");
        let mut g = Graph::new();
        g.insert(Triple::new(x.clone(), vocab::rdf_type(), ops(&s, "PublicInstitution")));
        g.insert(Triple::new(x.clone(), vocab::rdf_type(), ops(&s, "PrivateInstitution")));
        let m = materialize(&g, &s);
        let violations = check_disjointness(&m, &s);
        assert_eq!(violations.len(), 1);
        let v = &violations[0];
        assert_eq!(v.kind, ViolationKind::Disjointness);
        assert_eq!(v.focus, crate::rdf::Subject::Iri(x));
        assert_eq!(v.detail, "PrivateInstitution / PublicInstitution");
        assert!(v.message.contains("PublicInstitution"), "{}", v.message);
    }

    #[test]
    fn non_disjoint_siblings_pass() {
        let s = build_ops_expanded();
        let x = iri("http://data.example/x");
        let mut g = Graph::new();
        g.insert(Triple::new(x.clone(), vocab::rdf_type(), ops(&s, "SmallWorldNetwork")));
        g.insert(Triple::new(x, vocab::rdf_type(), ops(&s, "FreeScaleNetwork")));
        let m = materialize(&g, &s);
        assert!(check_disjointness(&m, &s).is_empty());
    }

    #[test]
    fn missing_filler_is_flagged_and_satisfied_rows_pass() {
        let s = build_ops_restricted();
        let x = iri("http://data.example/x");
        let c = iri("http://data.example/c");
        let pc = iri("http://data.example/pc");
        let mut g = Graph::new();
        g.insert(Triple::new(x.clone(), vocab::rdf_type(), ops(&s, "Initiator")));
        // Initiator is also a SocialActor, so both rows fire.
        let m = materialize(&g, &s);
        let violations = validate_restrictions(&m, &s);
        let details: Vec<&str> = violations.iter().map(|v| v.detail.as_str()).collect();
        assert_eq!(
            details,
            vec![
                "Initiator (starts some Cause)",
                "SocialActor (trait some ParticipationCharacteristic)",
            ]
        );
        assert!(violations
            .iter()
            .all(|v| v.kind == ViolationKind::MissingRestrictionFiller));

        // Satisfying the lint closes a whole web: each typed filler has
        // rows of its own.
        let a = iri("http://data.example/a");
        let t = iri("http://data.example/t");
        let sol = iri("http://data.example/sol");
        let r = iri("http://data.example/r");
        let sc = iri("http://data.example/sc");
        let p = iri("http://data.example/p");
        g.insert(Triple::new(x.clone(), ops(&s, "starts"), c.clone()));
        g.insert(Triple::new(x.clone(), ops(&s, "trait"), pc.clone()));
        g.insert(Triple::new(pc, vocab::rdf_type(), ops(&s, "ParticipationCharacteristic")));
        g.insert(Triple::new(c.clone(), vocab::rdf_type(), ops(&s, "Cause")));
        g.insert(Triple::new(c.clone(), ops(&s, "action"), a.clone()));
        g.insert(Triple::new(c.clone(), ops(&s, "theme"), t));
        g.insert(Triple::new(c.clone(), ops(&s, "proposes"), sol.clone()));
        g.insert(Triple::new(a.clone(), ops(&s, "produces"), r.clone()));
        g.insert(Triple::new(a, ops(&s, "belongsTo"), sc));
        g.insert(Triple::new(r.clone(), vocab::rdf_type(), ops(&s, "Result")));
        g.insert(Triple::new(r, ops(&s, "contributesTo"), sol.clone()));
        g.insert(Triple::new(sol.clone(), vocab::rdf_type(), ops(&s, "Solution")));
        g.insert(Triple::new(sol, ops(&s, "solves"), p.clone()));
        g.insert(Triple::new(p.clone(), vocab::rdf_type(), ops(&s, "Problem")));
        g.insert(Triple::new(p, ops(&s, "generates"), c));
        let m = materialize(&g, &s);
        assert_eq!(validate_restrictions(&m, &s), vec![]);
    }

    #[test]
    fn filler_type_must_match() {
        let s = build_ops_restricted();
        let x = iri("http://data.example/x");
        let c = iri("http://data.example/c");
        let mut g = Graph::new();
        g.insert(Triple::new(x.clone(), vocab::rdf_type(), ops(&s, "Initiator")));
        // starts edge exists but the object is not a Cause.
        g.insert(Triple::new(x, ops(&s, "starts"), c.clone()));
        g.insert(Triple::new(c, vocab::rdf_type(), ops(&s, "Theme")));
        let m = materialize(&g, &s);
        let violations = validate_restrictions(&m, &s);
        assert!(violations
            .iter()
            .any(|v| v.detail == "Initiator (starts some Cause)"));
    }

    #[test]
    fn unrestricted_profile_never_flags() {
        let s = crate::schema::build_ops_core();
        let x = iri("http://data.example/x");
        let mut g = Graph::new();
        g.insert(Triple::new(x, vocab::rdf_type(), ops(&s, "Initiator")));
        let m = materialize(&g, &s);
        assert!(validate_restrictions(&m, &s).is_empty());
    }

    #[test]
    fn report_renderings() {
        let s = build_ops_expanded();
        let x = iri("http://data.example/x");
        let mut g = Graph::new();
        g.insert(Triple::new(x.clone(), vocab::rdf_type(), ops(&s, "VoluntaryExecutor")));
        g.insert(Triple::new(x, vocab::rdf_type(), ops(&s, "PaidExecutor")));
        let m = materialize(&g, &s);
        let violations = check_disjointness(&m, &s);
        assert_eq!(violations.len(), 1);

        let text = violations_to_text(&violations);
        assert!(text.starts_with("disjointness: http://data.example/x is typed both"));
        assert!(text.ends_with('\n'));

        let v = violations_to_json(&violations);
        assert_eq!(v[0]["kind"], "disjointness");
        assert_eq!(v[0]["focus"], "http://data.example/x");
        assert_eq!(v[0]["detail"], "PaidExecutor / VoluntaryExecutor");
    }
}
