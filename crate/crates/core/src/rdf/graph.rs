use std::collections::{BTreeMap, BTreeSet};

use super::iso;
use super::term::{BlankNode, Iri, Subject, Term, Triple};

/// An in-memory triple set with SPO, POS, and OSP permutation indexes.
///
/// The three indexes always hold exactly the same triples; `insert` and
/// `remove` update all of them together. Lookups for any fixed/wildcard
/// combination reduce to a prefix scan on whichever index leads with the
/// bound positions. Iteration order is the SPO term order, so everything
/// downstream (serialization, query evaluation) is deterministic.
///
/// Shared read access from several threads is safe (`&Graph` is `Sync`);
/// mutation requires exclusive access as usual.
///
/// Equality is triple-set equality, blank node labels included; use
/// [`Graph::isomorphic`] to compare up to blank node renaming.
#[derive(Debug, Clone, Default)]
pub struct Graph {
    spo: BTreeMap<Subject, BTreeMap<Iri, BTreeSet<Term>>>,
    pos: BTreeMap<Iri, BTreeMap<Term, BTreeSet<Subject>>>,
    osp: BTreeMap<Term, BTreeMap<Subject, BTreeSet<Iri>>>,
    len: usize,
}

impl Graph {
    pub fn new() -> Graph {
        Graph::default()
    }

    /// Inserts a triple. Returns `true` if the graph changed, `false` if the
    /// triple was already present.
    pub fn insert(&mut self, t: Triple) -> bool {
        let added = self
            .spo
            .entry(t.subject.clone())
            .or_default()
            .entry(t.predicate.clone())
            .or_default()
            .insert(t.object.clone());
        if !added {
            return false;
        }
        self.pos
            .entry(t.predicate.clone())
            .or_default()
            .entry(t.object.clone())
            .or_default()
            .insert(t.subject.clone());
        self.osp
            .entry(t.object)
            .or_default()
            .entry(t.subject)
            .or_default()
            .insert(t.predicate);
        self.len += 1;
        true
    }

    /// Removes a triple. Returns `true` if it was present. Empty index nodes
    /// are pruned so that structural equality stays meaningful.
    pub fn remove(&mut self, t: &Triple) -> bool {
        let removed = prune3(&mut self.spo, &t.subject, &t.predicate, &t.object);
        if !removed {
            return false;
        }
        prune3(&mut self.pos, &t.predicate, &t.object, &t.subject);
        prune3(&mut self.osp, &t.object, &t.subject, &t.predicate);
        self.len -= 1;
        true
    }

    pub fn contains(&self, t: &Triple) -> bool {
        self.spo
            .get(&t.subject)
            .and_then(|po| po.get(&t.predicate))
            .is_some_and(|objs| objs.contains(&t.object))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// All triples in subject, predicate, object order.
    pub fn iter(&self) -> impl Iterator<Item = Triple> + '_ {
        self.spo.iter().flat_map(|(s, po)| {
            po.iter().flat_map(move |(p, objs)| {
                objs.iter()
                    .map(move |o| Triple::new(s.clone(), p.clone(), o.clone()))
            })
        })
    }

    /// Distinct subjects, in order.
    pub fn subjects(&self) -> impl Iterator<Item = &Subject> {
        self.spo.keys()
    }

    /// Predicate-object pairs for one subject, in order.
    pub fn predicates_for(&self, s: &Subject) -> impl Iterator<Item = (&Iri, &BTreeSet<Term>)> {
        self.spo.get(s).into_iter().flat_map(|po| po.iter())
    }

    /// Triples matching a pattern; `None` is a wildcard. A literal in the
    /// subject slot matches nothing. Results come back in index order.
    pub fn matching(&self, s: Option<&Term>, p: Option<&Iri>, o: Option<&Term>) -> Vec<Triple> {
        let subject = match s {
            Some(Term::Iri(iri)) => Some(Subject::Iri(iri.clone())),
            Some(Term::Blank(b)) => Some(Subject::Blank(b.clone())),
            Some(Term::Literal(_)) => return Vec::new(),
            None => None,
        };
        match (subject, p, o) {
            (Some(s), Some(p), Some(o)) => {
                let t = Triple::new(s, p.clone(), o.clone());
                if self.contains(&t) {
                    vec![t]
                } else {
                    Vec::new()
                }
            }
            (Some(s), Some(p), None) => self
                .spo
                .get(&s)
                .and_then(|po| po.get(p))
                .into_iter()
                .flat_map(|objs| objs.iter())
                .map(|o| Triple::new(s.clone(), p.clone(), o.clone()))
                .collect(),
            (Some(s), None, Some(o)) => self
                .osp
                .get(o)
                .and_then(|sp| sp.get(&s))
                .into_iter()
                .flat_map(|preds| preds.iter())
                .map(|p| Triple::new(s.clone(), p.clone(), o.clone()))
                .collect(),
            (Some(s), None, None) => self
                .spo
                .get(&s)
                .into_iter()
                .flat_map(|po| po.iter())
                .flat_map(|(p, objs)| {
                    let s = s.clone();
                    objs.iter()
                        .map(move |o| Triple::new(s.clone(), p.clone(), o.clone()))
                })
                .collect(),
            (None, Some(p), Some(o)) => self
                .pos
                .get(p)
                .and_then(|os| os.get(o))
                .into_iter()
                .flat_map(|subs| subs.iter())
                .map(|s| Triple::new(s.clone(), p.clone(), o.clone()))
                .collect(),
            (None, Some(p), None) => self
                .pos
                .get(p)
                .into_iter()
                .flat_map(|os| os.iter())
                .flat_map(|(o, subs)| {
                    subs.iter()
                        .map(move |s| Triple::new(s.clone(), p.clone(), o.clone()))
                })
                .collect(),
            (None, None, Some(o)) => self
                .osp
                .get(o)
                .into_iter()
                .flat_map(|sp| sp.iter())
                .flat_map(|(s, preds)| {
                    preds
                        .iter()
                        .map(move |p| Triple::new(s.clone(), p.clone(), o.clone()))
                })
                .collect(),
            (None, None, None) => self.iter().collect(),
        }
    }

    /// All blank node ids used anywhere in the graph.
    pub fn blank_node_ids(&self) -> BTreeSet<String> {
        let mut ids = BTreeSet::new();
        for (s, po) in &self.spo {
            if let Subject::Blank(b) = s {
                ids.insert(b.as_str().to_owned());
            }
            for objs in po.values() {
                for o in objs {
                    if let Term::Blank(b) = o {
                        ids.insert(b.as_str().to_owned());
                    }
                }
            }
        }
        ids
    }

    /// Adds every triple of `other` to `self`.
    ///
    /// Blank node ids are graph-scoped: an id used by both graphs denotes two
    /// different nodes, so colliding ids from `other` are renamed to fresh
    /// `b{n}` ids before insertion. Non-colliding ids are kept. The renaming
    /// is deterministic for a given pair of graphs.
    pub fn merge(&mut self, other: &Graph) {
        let mine = self.blank_node_ids();
        let theirs = other.blank_node_ids();
        let mut rename: BTreeMap<String, BlankNode> = BTreeMap::new();
        let mut counter = 0usize;
        for id in theirs.intersection(&mine) {
            let fresh = loop {
                let candidate = format!("b{counter}");
                counter += 1;
                if !mine.contains(&candidate) && !theirs.contains(&candidate) {
                    break candidate;
                }
            };
            rename.insert(id.clone(), BlankNode::new(fresh).expect("generated id"));
        }
        for t in other.iter() {
            let subject = match t.subject {
                Subject::Blank(ref b) => match rename.get(b.as_str()) {
                    Some(fresh) => Subject::Blank(fresh.clone()),
                    None => t.subject.clone(),
                },
                ref s => s.clone(),
            };
            let object = match t.object {
                Term::Blank(ref b) => match rename.get(b.as_str()) {
                    Some(fresh) => Term::Blank(fresh.clone()),
                    None => t.object.clone(),
                },
                ref o => o.clone(),
            };
            self.insert(Triple::new(subject, t.predicate.clone(), object));
        }
    }

    /// Set union of two graphs, with the blank-node scoping of [`Graph::merge`].
    pub fn union(a: &Graph, b: &Graph) -> Graph {
        let mut g = a.clone();
        g.merge(b);
        g
    }

    /// True when the graphs are equal up to a bijective renaming of blank
    /// nodes. Ground triples must match exactly.
    pub fn isomorphic(&self, other: &Graph) -> bool {
        iso::isomorphic(self, other)
    }
}

/// Structural equality: exactly the same triple set, blank node ids included.
/// Use [`Graph::isomorphic`] to compare up to blank node renaming.
impl PartialEq for Graph {
    fn eq(&self, other: &Graph) -> bool {
        self.len == other.len && self.spo == other.spo
    }
}

impl Eq for Graph {}

impl Extend<Triple> for Graph {
    fn extend<I: IntoIterator<Item = Triple>>(&mut self, iter: I) {
        for t in iter {
            self.insert(t);
        }
    }
}

impl FromIterator<Triple> for Graph {
    fn from_iter<I: IntoIterator<Item = Triple>>(iter: I) -> Graph {
        let mut g = Graph::new();
        g.extend(iter);
        g
    }
}

/// Removes `c` from `map[a][b]`, pruning emptied inner nodes.
fn prune3<A, B, C>(map: &mut BTreeMap<A, BTreeMap<B, BTreeSet<C>>>, a: &A, b: &B, c: &C) -> bool
where
    A: Ord + Clone,
    B: Ord + Clone,
    C: Ord,
{
    let Some(inner) = map.get_mut(a) else {
        return false;
    };
    let Some(leaf) = inner.get_mut(b) else {
        return false;
    };
    if !leaf.remove(c) {
        return false;
    }
    if leaf.is_empty() {
        inner.remove(b);
    }
    if inner.is_empty() {
        map.remove(a);
    }
    true
}
