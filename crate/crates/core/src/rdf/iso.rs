use std::collections::{BTreeMap, BTreeSet};

use super::graph::Graph;
use super::term::{BlankNode, Subject, Term, Triple};

/// Graph isomorphism under blank node relabeling.
///
/// Ground triples are compared as sets. Blank nodes are matched by a
/// backtracking search over label bijections, pruned by a per-node signature
/// (the multiset of incident triple shapes), which keeps the search trivial
/// for the schema-sized graphs this crate works with.
pub(crate) fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.len() != b.len() {
        return false;
    }

    let a_blank: BTreeSet<Triple> = a.iter().filter(Triple::has_blank).collect();
    let b_blank: BTreeSet<Triple> = b.iter().filter(Triple::has_blank).collect();
    if a_blank.len() != b_blank.len() {
        return false;
    }
    for t in a.iter() {
        if !t.has_blank() && !b.contains(&t) {
            return false;
        }
    }

    let a_ids: Vec<String> = a.blank_node_ids().into_iter().collect();
    let b_ids: Vec<String> = b.blank_node_ids().into_iter().collect();
    if a_ids.len() != b_ids.len() {
        return false;
    }
    if a_ids.is_empty() {
        return true;
    }

    let sig_a = signatures(&a_blank);
    let sig_b = signatures(&b_blank);
    let mut by_sig: BTreeMap<&Signature, Vec<&str>> = BTreeMap::new();
    for id in &b_ids {
        by_sig.entry(&sig_b[id]).or_default().push(id);
    }

    let mut candidates: Vec<(&str, &[&str])> = Vec::with_capacity(a_ids.len());
    for id in &a_ids {
        match by_sig.get(&sig_a[id]) {
            Some(matches) => candidates.push((id, matches)),
            None => return false,
        }
    }
    // Most constrained first keeps the search shallow.
    candidates.sort_by_key(|(id, matches)| (matches.len(), id.to_owned()));

    let mut triples_of: BTreeMap<&str, Vec<&Triple>> = BTreeMap::new();
    for t in &a_blank {
        if let Subject::Blank(bn) = &t.subject {
            triples_of.entry(id_of(bn, &a_ids)).or_default().push(t);
        }
        if let Term::Blank(bn) = &t.object {
            if !matches!(&t.subject, Subject::Blank(sb) if sb.as_str() == bn.as_str()) {
                triples_of.entry(id_of(bn, &a_ids)).or_default().push(t);
            }
        }
    }

    let mut mapping: BTreeMap<&str, &str> = BTreeMap::new();
    let mut used: BTreeSet<&str> = BTreeSet::new();
    assign(
        0,
        &candidates,
        &triples_of,
        &b_blank,
        &mut mapping,
        &mut used,
    )
}

fn id_of<'a>(bn: &BlankNode, ids: &'a [String]) -> &'a str {
    let i = ids
        .binary_search_by(|id| id.as_str().cmp(bn.as_str()))
        .expect("id collected from the same graph");
    &ids[i]
}

fn assign<'a>(
    depth: usize,
    candidates: &[(&'a str, &[&'a str])],
    triples_of: &BTreeMap<&str, Vec<&Triple>>,
    b_blank: &BTreeSet<Triple>,
    mapping: &mut BTreeMap<&'a str, &'a str>,
    used: &mut BTreeSet<&'a str>,
) -> bool {
    let Some((id, options)) = candidates.get(depth) else {
        // Every incident triple was checked as its last blank got mapped, and
        // an injective map over equal-sized sets makes the images equal.
        return true;
    };
    for option in options.iter() {
        if used.contains(option) {
            continue;
        }
        mapping.insert(id, option);
        used.insert(option);
        let consistent = triples_of
            .get(id)
            .into_iter()
            .flatten()
            .all(|t| match map_triple(t, mapping) {
                Some(image) => b_blank.contains(&image),
                None => true,
            });
        if consistent && assign(depth + 1, candidates, triples_of, b_blank, mapping, used) {
            return true;
        }
        mapping.remove(id);
        used.remove(option);
    }
    false
}

/// Applies the partial mapping; `None` while some blank is still unmapped.
fn map_triple(t: &Triple, mapping: &BTreeMap<&str, &str>) -> Option<Triple> {
    let subject = match &t.subject {
        Subject::Blank(bn) => {
            let target = mapping.get(bn.as_str())?;
            Subject::Blank(BlankNode::new(*target).expect("id from a live graph"))
        }
        s => s.clone(),
    };
    let object = match &t.object {
        Term::Blank(bn) => {
            let target = mapping.get(bn.as_str())?;
            Term::Blank(BlankNode::new(*target).expect("id from a live graph"))
        }
        o => o.clone(),
    };
    Some(Triple::new(subject, t.predicate.clone(), object))
}

type Signature = Vec<(u8, String, String)>;

/// For each blank node id, the sorted multiset of incident triple shapes.
/// Shapes are invariant under any blank relabeling, so matched nodes must
/// share a signature.
fn signatures(blank_triples: &BTreeSet<Triple>) -> BTreeMap<String, Signature> {
    let mut sigs: BTreeMap<String, Signature> = BTreeMap::new();
    for t in blank_triples {
        let pred = t.predicate.as_str().to_owned();
        let s_blank = t.subject.as_blank().map(|b| b.as_str().to_owned());
        let o_blank = t.object.as_blank().map(|b| b.as_str().to_owned());
        match (&s_blank, &o_blank) {
            (Some(s), Some(o)) if s == o => {
                sigs.entry(s.clone())
                    .or_default()
                    .push((2, pred.clone(), String::new()));
            }
            _ => {
                if let Some(s) = &s_blank {
                    sigs.entry(s.clone()).or_default().push((
                        0,
                        pred.clone(),
                        slot_shape(&t.object),
                    ));
                }
                if let Some(o) = &o_blank {
                    sigs.entry(o.clone()).or_default().push((
                        1,
                        pred.clone(),
                        slot_shape(&t.subject.to_term()),
                    ));
                }
            }
        }
    }
    for sig in sigs.values_mut() {
        sig.sort();
    }
    sigs
}

fn slot_shape(term: &Term) -> String {
    match term {
        Term::Blank(_) => "?".to_owned(),
        other => format!("{other:?}"),
    }
}

#[cfg(test)]
mod tests {
    use super::super::term::{Iri, Literal};
    use super::*;

    fn iri(s: &str) -> Iri {
        Iri::new(s).unwrap()
    }

    fn bn(id: &str) -> BlankNode {
        BlankNode::new(id).unwrap()
    }

    #[test]
    fn ground_graphs_compare_as_sets() {
        let mut a = Graph::new();
        a.insert(Triple::new(iri("http://x/s"), iri("http://x/p"), iri("http://x/o")));
        let mut b = Graph::new();
        b.insert(Triple::new(iri("http://x/s"), iri("http://x/p"), iri("http://x/o")));
        assert!(a.isomorphic(&b));
        b.insert(Triple::new(iri("http://x/s"), iri("http://x/p"), Literal::plain("o")));
        assert!(!a.isomorphic(&b));
    }

    #[test]
    fn relabeled_blanks_are_isomorphic() {
        let mut a = Graph::new();
        a.insert(Triple::new(bn("r1"), iri("http://x/p"), iri("http://x/o")));
        a.insert(Triple::new(iri("http://x/c"), iri("http://x/q"), bn("r1")));
        let mut b = Graph::new();
        b.insert(Triple::new(bn("other"), iri("http://x/p"), iri("http://x/o")));
        b.insert(Triple::new(iri("http://x/c"), iri("http://x/q"), bn("other")));
        assert!(a.isomorphic(&b));
    }

    #[test]
    fn structure_must_match_not_just_counts() {
        // Two blanks chained vs two blanks sharing a target.
        let mut a = Graph::new();
        a.insert(Triple::new(bn("x"), iri("http://x/p"), bn("y")));
        a.insert(Triple::new(bn("y"), iri("http://x/p"), iri("http://x/o")));
        let mut b = Graph::new();
        b.insert(Triple::new(bn("x"), iri("http://x/p"), iri("http://x/o")));
        b.insert(Triple::new(bn("y"), iri("http://x/p"), iri("http://x/o")));
        assert!(!a.isomorphic(&b));
    }

    #[test]
    fn self_loop_maps_to_self_loop() {
        let mut a = Graph::new();
        a.insert(Triple::new(bn("x"), iri("http://x/p"), bn("x")));
        let mut b = Graph::new();
        b.insert(Triple::new(bn("z"), iri("http://x/p"), bn("z")));
        assert!(a.isomorphic(&b));
        let mut c = Graph::new();
        c.insert(Triple::new(bn("x"), iri("http://x/p"), bn("y")));
        assert!(!a.isomorphic(&c));
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn swapped_roles_need_real_search() {
        // Symmetric pair: either bijection works, found by backtracking.
        let mut a = Graph::new();
        a.insert(Triple::new(bn("m"), iri("http://x/p"), bn("n")));
        a.insert(Triple::new(bn("n"), iri("http://x/p"), bn("m")));
        let mut b = Graph::new();
        b.insert(Triple::new(bn("u"), iri("http://x/p"), bn("v")));
        b.insert(Triple::new(bn("v"), iri("http://x/p"), bn("u")));
        assert!(a.isomorphic(&b));
    }
}
