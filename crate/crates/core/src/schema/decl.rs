use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::vocab;
use crate::rdf::Iri;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SchemaError {
    #[error("invalid {role} name {name:?}")]
    BadName { role: &'static str, name: String },
    #[error("duplicate declaration {0:?}")]
    DuplicateName(String),
    #[error("{context} references unknown name {name:?}")]
    DanglingReference { context: String, name: String },
    #[error("{context} references {iri}, which is not a recognized external vocabulary")]
    ForeignIri { context: String, iri: Iri },
    #[error("subclass cycle through {0:?}")]
    SubclassCycle(String),
    #[error("malformed restriction: {0}")]
    MalformedRestriction(String),
    #[error("declaration {name:?} is incomplete: {detail}")]
    IncompleteDeclaration { name: String, detail: String },
    #[error("expected exactly one owl:Ontology subject, found {count}")]
    BadOntologyHeader { count: usize },
}

/// The three label translations every declaration carries.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Labels {
    pub pt_br: String,
    pub es: String,
    pub en: String,
}

impl Labels {
    pub fn new(pt_br: &str, es: &str, en: &str) -> Labels {
        Labels {
            pt_br: pt_br.to_owned(),
            es: es.to_owned(),
            en: en.to_owned(),
        }
    }

    /// True when all three translations are present.
    pub fn complete(&self) -> bool {
        !self.pt_br.is_empty() && !self.es.is_empty() && !self.en.is_empty()
    }
}

/// A class declaration. The IRI is always `base + "/" + name`, so only the
/// name is stored; in-schema superclasses are referenced by name and
/// upper-ontology alignments by full IRI.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ClassDecl {
    pub name: String,
    pub labels: Labels,
    pub comment: String,
    pub superclasses: BTreeSet<String>,
    pub upper: BTreeSet<Iri>,
}

/// An object property declaration. Domain, range, and inverse reference
/// other declarations by name; none of the shipped profiles sets a domain.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PropertyDecl {
    pub name: String,
    pub labels: Labels,
    pub domain: Option<String>,
    pub range: Option<String>,
    pub inverse: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RestrictionKind {
    Existential,
}

/// `on_class ⊑ ∃ property . filler`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RestrictionDecl {
    pub on_class: String,
    pub property: String,
    pub filler: String,
    pub kind: RestrictionKind,
}

impl RestrictionDecl {
    pub fn existential(on_class: &str, property: &str, filler: &str) -> RestrictionDecl {
        RestrictionDecl {
            on_class: on_class.to_owned(),
            property: property.to_owned(),
            filler: filler.to_owned(),
            kind: RestrictionKind::Existential,
        }
    }
}

/// An unordered disjointness pair, stored with `first < second`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DisjointnessDecl {
    pub first: String,
    pub second: String,
}

impl DisjointnessDecl {
    pub fn new(a: &str, b: &str) -> DisjointnessDecl {
        if a <= b {
            DisjointnessDecl {
                first: a.to_owned(),
                second: b.to_owned(),
            }
        } else {
            DisjointnessDecl {
                first: b.to_owned(),
                second: a.to_owned(),
            }
        }
    }
}

/// `name ≡ base_class ⊓ ∃ property . filler`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DefinedClassDecl {
    pub name: String,
    pub base_class: String,
    pub property: String,
    pub filler: String,
}

impl DefinedClassDecl {
    pub fn new(name: &str, base_class: &str, property: &str, filler: &str) -> DefinedClassDecl {
        DefinedClassDecl {
            name: name.to_owned(),
            base_class: base_class.to_owned(),
            property: property.to_owned(),
            filler: filler.to_owned(),
        }
    }
}

/// One ontology profile: classes, properties, and axioms under a base IRI.
///
/// Mutation goes through the `add_*` methods, which enforce naming rules and
/// name uniqueness; [`OntologySchema::validate`] checks the cross-reference
/// invariants (every referenced name declared, upper IRIs in a recognized
/// external vocabulary, subclass graph acyclic, labels complete).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OntologySchema {
    base: Iri,
    classes: BTreeMap<String, ClassDecl>,
    properties: BTreeMap<String, PropertyDecl>,
    restrictions: BTreeSet<RestrictionDecl>,
    disjointness: BTreeSet<DisjointnessDecl>,
    defined: BTreeSet<DefinedClassDecl>,
}

impl OntologySchema {
    pub fn new(base: Iri) -> OntologySchema {
        OntologySchema {
            base,
            classes: BTreeMap::new(),
            properties: BTreeMap::new(),
            restrictions: BTreeSet::new(),
            disjointness: BTreeSet::new(),
            defined: BTreeSet::new(),
        }
    }

    pub fn base(&self) -> &Iri {
        &self.base
    }

    /// The IRI of a declared class or property name.
    pub fn iri_of(&self, name: &str) -> Option<Iri> {
        if self.classes.contains_key(name) || self.properties.contains_key(name) {
            Some(self.base.join(name).expect("validated name"))
        } else {
            None
        }
    }

    /// The declaration name an IRI denotes, if it is `base/name` in this
    /// schema.
    pub fn name_of(&self, iri: &Iri) -> Option<&str> {
        let rest = iri.as_str().strip_prefix(self.base.as_str())?;
        let name = rest.strip_prefix('/')?;
        if self.classes.contains_key(name) {
            return Some(self.classes.get_key_value(name).expect("checked").0);
        }
        if self.properties.contains_key(name) {
            return Some(self.properties.get_key_value(name).expect("checked").0);
        }
        None
    }

    pub fn class(&self, name: &str) -> Option<&ClassDecl> {
        self.classes.get(name)
    }

    pub fn classes(&self) -> impl Iterator<Item = &ClassDecl> {
        self.classes.values()
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn property(&self, name: &str) -> Option<&PropertyDecl> {
        self.properties.get(name)
    }

    pub fn properties(&self) -> impl Iterator<Item = &PropertyDecl> {
        self.properties.values()
    }

    pub fn property_count(&self) -> usize {
        self.properties.len()
    }

    pub fn restrictions(&self) -> impl Iterator<Item = &RestrictionDecl> {
        self.restrictions.iter()
    }

    pub fn restriction_count(&self) -> usize {
        self.restrictions.len()
    }

    pub fn disjointness(&self) -> impl Iterator<Item = &DisjointnessDecl> {
        self.disjointness.iter()
    }

    pub fn disjointness_count(&self) -> usize {
        self.disjointness.len()
    }

    /// True when the two names are declared disjoint, in either order.
    pub fn disjoint(&self, a: &str, b: &str) -> bool {
        self.disjointness.contains(&DisjointnessDecl::new(a, b))
    }

    pub fn defined_classes(&self) -> impl Iterator<Item = &DefinedClassDecl> {
        self.defined.iter()
    }

    pub fn defined_class_count(&self) -> usize {
        self.defined.len()
    }

    pub fn add_class(&mut self, decl: ClassDecl) -> Result<(), SchemaError> {
        if !is_camel_case(&decl.name) {
            return Err(SchemaError::BadName {
                role: "class",
                name: decl.name,
            });
        }
        if self.classes.contains_key(&decl.name) || self.properties.contains_key(&decl.name) {
            return Err(SchemaError::DuplicateName(decl.name));
        }
        self.classes.insert(decl.name.clone(), decl);
        Ok(())
    }

    pub fn add_property(&mut self, decl: PropertyDecl) -> Result<(), SchemaError> {
        if !is_headless_camel_case(&decl.name) {
            return Err(SchemaError::BadName {
                role: "property",
                name: decl.name,
            });
        }
        if self.classes.contains_key(&decl.name) || self.properties.contains_key(&decl.name) {
            return Err(SchemaError::DuplicateName(decl.name));
        }
        self.properties.insert(decl.name.clone(), decl);
        Ok(())
    }

    pub fn add_restriction(&mut self, decl: RestrictionDecl) {
        self.restrictions.insert(decl);
    }

    pub fn add_disjointness(&mut self, decl: DisjointnessDecl) {
        self.disjointness.insert(decl);
    }

    pub fn add_defined_class(&mut self, decl: DefinedClassDecl) {
        self.defined.insert(decl);
    }

    /// Checks every cross-declaration invariant. Builders call this before
    /// handing a schema out; graph readers call it on reconstructed schemas.
    pub fn validate(&self) -> Result<(), SchemaError> {
        for class in self.classes.values() {
            if !class.labels.complete() {
                return Err(SchemaError::IncompleteDeclaration {
                    name: class.name.clone(),
                    detail: "missing one of the pt-br/es/en labels".to_owned(),
                });
            }
            if class.comment.is_empty() {
                return Err(SchemaError::IncompleteDeclaration {
                    name: class.name.clone(),
                    detail: "missing the English comment".to_owned(),
                });
            }
            for superclass in &class.superclasses {
                self.expect_class(superclass, &format!("class {}", class.name))?;
            }
            for upper in &class.upper {
                if !vocab::is_external_vocabulary(upper) {
                    return Err(SchemaError::ForeignIri {
                        context: format!("class {}", class.name),
                        iri: upper.clone(),
                    });
                }
            }
        }
        for property in self.properties.values() {
            if !property.labels.complete() {
                return Err(SchemaError::IncompleteDeclaration {
                    name: property.name.clone(),
                    detail: "missing one of the pt-br/es/en labels".to_owned(),
                });
            }
            let context = format!("property {}", property.name);
            if let Some(domain) = &property.domain {
                self.expect_class(domain, &context)?;
            }
            if let Some(range) = &property.range {
                self.expect_class(range, &context)?;
            }
            if let Some(inverse) = &property.inverse {
                self.expect_property(inverse, &context)?;
            }
        }
        for r in &self.restrictions {
            let context = format!("restriction on {}", r.on_class);
            self.expect_class(&r.on_class, &context)?;
            self.expect_property(&r.property, &context)?;
            self.expect_class(&r.filler, &context)?;
        }
        for d in &self.disjointness {
            let context = format!("disjointness {} / {}", d.first, d.second);
            if d.first == d.second {
                return Err(SchemaError::MalformedRestriction(format!(
                    "{context}: a class cannot be disjoint with itself"
                )));
            }
            self.expect_class(&d.first, &context)?;
            self.expect_class(&d.second, &context)?;
        }
        for def in &self.defined {
            let context = format!("defined class {}", def.name);
            self.expect_class(&def.name, &context)?;
            self.expect_class(&def.base_class, &context)?;
            self.expect_property(&def.property, &context)?;
            self.expect_class(&def.filler, &context)?;
        }
        self.check_acyclic()
    }

    fn expect_class(&self, name: &str, context: &str) -> Result<(), SchemaError> {
        if self.classes.contains_key(name) {
            Ok(())
        } else {
            Err(SchemaError::DanglingReference {
                context: context.to_owned(),
                name: name.to_owned(),
            })
        }
    }

    fn expect_property(&self, name: &str, context: &str) -> Result<(), SchemaError> {
        if self.properties.contains_key(name) {
            Ok(())
        } else {
            Err(SchemaError::DanglingReference {
                context: context.to_owned(),
                name: name.to_owned(),
            })
        }
    }

    fn check_acyclic(&self) -> Result<(), SchemaError> {
        // Colors: 0 unvisited, 1 on stack, 2 done.
        let mut color: BTreeMap<&str, u8> = BTreeMap::new();
        fn visit<'a>(
            schema: &'a OntologySchema,
            name: &'a str,
            color: &mut BTreeMap<&'a str, u8>,
        ) -> Result<(), SchemaError> {
            match color.get(name) {
                Some(1) => return Err(SchemaError::SubclassCycle(name.to_owned())),
                Some(2) => return Ok(()),
                _ => {}
            }
            color.insert(name, 1);
            if let Some(class) = schema.classes.get(name) {
                for superclass in &class.superclasses {
                    visit(schema, superclass, color)?;
                }
            }
            color.insert(name, 2);
            Ok(())
        }
        for name in self.classes.keys() {
            visit(self, name, &mut color)?;
        }
        Ok(())
    }
}

fn is_camel_case(name: &str) -> bool {
    let mut chars = name.chars();
    chars.next().is_some_and(|c| c.is_ascii_uppercase())
        && name.chars().all(|c| c.is_ascii_alphanumeric())
}

fn is_headless_camel_case(name: &str) -> bool {
    let mut chars = name.chars();
    chars.next().is_some_and(|c| c.is_ascii_lowercase())
        && name.chars().all(|c| c.is_ascii_alphanumeric())
}

/// The three shipped ontology profiles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Profile {
    #[default]
    Core,
    Restricted,
    Expanded,
}

impl Profile {
    pub fn as_str(self) -> &'static str {
        match self {
            Profile::Core => "core",
            Profile::Restricted => "restricted",
            Profile::Expanded => "expanded",
        }
    }

    pub fn build(self) -> OntologySchema {
        match self {
            Profile::Core => super::profiles::build_ops_core(),
            Profile::Restricted => super::profiles::build_ops_restricted(),
            Profile::Expanded => super::profiles::build_ops_expanded(),
        }
    }

    pub fn build_at(self, base: Iri) -> OntologySchema {
        match self {
            Profile::Core => super::profiles::build_ops_core_at(base),
            Profile::Restricted => super::profiles::build_ops_restricted_at(base),
            Profile::Expanded => super::profiles::build_ops_expanded_at(base),
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Profile {
    type Err = String;

    fn from_str(s: &str) -> Result<Profile, String> {
        match s {
            "core" => Ok(Profile::Core),
            "restricted" => Ok(Profile::Restricted),
            "expanded" => Ok(Profile::Expanded),
            other => Err(format!(
                "unknown profile {other:?}; expected core, restricted, or expanded"
            )),
        }
    }
}
