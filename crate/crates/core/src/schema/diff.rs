//! Schema comparison, used for migration checks between vocabulary
//! versions.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use super::decl::{Labels, OntologySchema, RestrictionDecl};

/// A declaration that moved to a new name. Detected when a removed and an
/// added declaration agree on at least two of their three labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rename {
    pub from: String,
    pub to: String,
}

/// What changed between two schemas. All lists are name-sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ChangeReport {
    pub added_classes: Vec<String>,
    pub removed_classes: Vec<String>,
    pub renamed_classes: Vec<Rename>,
    pub added_properties: Vec<String>,
    pub removed_properties: Vec<String>,
    pub renamed_properties: Vec<Rename>,
    pub added_restrictions: Vec<RestrictionDecl>,
    pub removed_restrictions: Vec<RestrictionDecl>,
}

impl ChangeReport {
    pub fn is_empty(&self) -> bool {
        self.added_classes.is_empty()
            && self.removed_classes.is_empty()
            && self.renamed_classes.is_empty()
            && self.added_properties.is_empty()
            && self.removed_properties.is_empty()
            && self.renamed_properties.is_empty()
            && self.added_restrictions.is_empty()
            && self.removed_restrictions.is_empty()
    }

    /// One change per line; `+` added, `-` removed, `~` renamed.
    pub fn render_text(&self) -> String {
        if self.is_empty() {
            return "no changes\n".to_owned();
        }
        let mut out = String::new();
        for r in &self.renamed_classes {
            out.push_str(&format!("~ class {} -> {}\n", r.from, r.to));
        }
        for name in &self.added_classes {
            out.push_str(&format!("+ class {name}\n"));
        }
        for name in &self.removed_classes {
            out.push_str(&format!("- class {name}\n"));
        }
        for r in &self.renamed_properties {
            out.push_str(&format!("~ property {} -> {}\n", r.from, r.to));
        }
        for name in &self.added_properties {
            out.push_str(&format!("+ property {name}\n"));
        }
        for name in &self.removed_properties {
            out.push_str(&format!("- property {name}\n"));
        }
        for r in &self.added_restrictions {
            out.push_str(&format!(
                "+ restriction {} ({} some {})\n",
                r.on_class, r.property, r.filler
            ));
        }
        for r in &self.removed_restrictions {
            out.push_str(&format!(
                "- restriction {} ({} some {})\n",
                r.on_class, r.property, r.filler
            ));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        fn restrictions(list: &[RestrictionDecl]) -> Value {
            Value::Array(
                list.iter()
                    .map(|r| {
                        json!({
                            "onClass": r.on_class,
                            "property": r.property,
                            "filler": r.filler,
                        })
                    })
                    .collect(),
            )
        }
        fn renames(list: &[Rename]) -> Value {
            Value::Array(
                list.iter()
                    .map(|r| json!({"from": r.from, "to": r.to}))
                    .collect(),
            )
        }
        json!({
            "classes": {
                "added": self.added_classes,
                "removed": self.removed_classes,
                "renamed": renames(&self.renamed_classes),
            },
            "properties": {
                "added": self.added_properties,
                "removed": self.removed_properties,
                "renamed": renames(&self.renamed_properties),
            },
            "restrictions": {
                "added": restrictions(&self.added_restrictions),
                "removed": restrictions(&self.removed_restrictions),
            },
        })
    }
}

/// Compares two schemas declaration by declaration. Names are matched
/// exactly; leftovers are paired into renames when their labels agree on at
/// least two of three translations, each declaration pairing at most once,
/// in name order.
pub fn diff_schemas(old: &OntologySchema, new: &OntologySchema) -> ChangeReport {
    let old_class_names: BTreeSet<&str> = old.classes().map(|c| c.name.as_str()).collect();
    let new_class_names: BTreeSet<&str> = new.classes().map(|c| c.name.as_str()).collect();
    let (added_classes, removed_classes, renamed_classes) = split_with_renames(
        old_class_names
            .difference(&new_class_names)
            .map(|n| (*n, &old.class(n).expect("listed").labels))
            .collect(),
        new_class_names
            .difference(&old_class_names)
            .map(|n| (*n, &new.class(n).expect("listed").labels))
            .collect(),
    );

    let old_prop_names: BTreeSet<&str> = old.properties().map(|p| p.name.as_str()).collect();
    let new_prop_names: BTreeSet<&str> = new.properties().map(|p| p.name.as_str()).collect();
    let (added_properties, removed_properties, renamed_properties) = split_with_renames(
        old_prop_names
            .difference(&new_prop_names)
            .map(|n| (*n, &old.property(n).expect("listed").labels))
            .collect(),
        new_prop_names
            .difference(&old_prop_names)
            .map(|n| (*n, &new.property(n).expect("listed").labels))
            .collect(),
    );

    let old_restrictions: BTreeSet<&RestrictionDecl> = old.restrictions().collect();
    let new_restrictions: BTreeSet<&RestrictionDecl> = new.restrictions().collect();

    ChangeReport {
        added_classes,
        removed_classes,
        renamed_classes,
        added_properties,
        removed_properties,
        renamed_properties,
        added_restrictions: new_restrictions
            .difference(&old_restrictions)
            .map(|r| (*r).clone())
            .collect(),
        removed_restrictions: old_restrictions
            .difference(&new_restrictions)
            .map(|r| (*r).clone())
            .collect(),
    }
}

fn label_overlap(a: &Labels, b: &Labels) -> usize {
    usize::from(a.pt_br == b.pt_br) + usize::from(a.es == b.es) + usize::from(a.en == b.en)
}

/// Pairs removals with additions whose labels overlap enough, returning
/// (added, removed, renamed).
fn split_with_renames(
    removed: Vec<(&str, &Labels)>,
    added: Vec<(&str, &Labels)>,
) -> (Vec<String>, Vec<String>, Vec<Rename>) {
    let mut taken = vec![false; added.len()];
    let mut renames = Vec::new();
    let mut still_removed = Vec::new();
    for (old_name, old_labels) in removed {
        let best = added
            .iter()
            .enumerate()
            .filter(|(i, _)| !taken[*i])
            .map(|(i, (name, labels))| (label_overlap(old_labels, labels), i, *name))
            .filter(|(overlap, _, _)| *overlap >= 2)
            .max_by_key(|(overlap, i, _)| (*overlap, std::cmp::Reverse(*i)));
        match best {
            Some((_, i, new_name)) => {
                taken[i] = true;
                renames.push(Rename {
                    from: old_name.to_owned(),
                    to: new_name.to_owned(),
                });
            }
            None => still_removed.push(old_name.to_owned()),
        }
    }
    let still_added = added
        .iter()
        .zip(&taken)
        .filter(|(_, taken)| !**taken)
        .map(|((name, _), _)| (*name).to_owned())
        .collect();
    (still_added, still_removed, renames)
}
