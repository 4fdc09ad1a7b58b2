//! The shipped ontology profiles and the predecessor-vocabulary fixture.

use std::collections::BTreeSet;

use super::decl::{
    ClassDecl, DefinedClassDecl, DisjointnessDecl, Labels, OntologySchema, PropertyDecl,
    RestrictionDecl,
};
use super::vocab;
use crate::rdf::Iri;

/// The published OPS vocabulary: 14 classes, 12 object properties, the
/// BFO/FOAF alignments, three ranges, and no restrictions.
pub fn build_ops_core() -> OntologySchema {
    build_ops_core_at(vocab::default_base())
}

pub fn build_ops_core_at(base: Iri) -> OntologySchema {
    let mut s = OntologySchema::new(base);
    add_core_classes(&mut s, &[]);
    add_core_properties(&mut s, &[]);
    s.validate().expect("core profile is well formed");
    s
}

/// Core plus the twelve historical existential restrictions.
pub fn build_ops_restricted() -> OntologySchema {
    build_ops_restricted_at(vocab::default_base())
}

pub fn build_ops_restricted_at(base: Iri) -> OntologySchema {
    let mut s = build_ops_core_at(base);
    for (on_class, property, filler) in CORE_RESTRICTIONS {
        s.add_restriction(RestrictionDecl::existential(on_class, property, filler));
    }
    s.validate().expect("restricted profile is well formed");
    s
}

/// Core plus the example expansion: 17 classes under Organization and
/// Executor, three properties, six disjointness pairs, and two defined
/// classes. Restrictions stay empty; the expansion builds on the published
/// profile, not the historical one.
pub fn build_ops_expanded() -> OntologySchema {
    build_ops_expanded_at(vocab::default_base())
}

pub fn build_ops_expanded_at(base: Iri) -> OntologySchema {
    let mut s = build_ops_core_at(base);
    add_expansion(&mut s);
    s.validate().expect("expanded profile is well formed");
    s
}

/// `on_class subClassOf (property some filler)` rows of the restricted
/// profile.
///
/// The historical table wrote one row against the dropped Role class
/// (an actor has some role); with Role gone, that row survives as the
/// trait/ParticipationCharacteristic pair, which is the same statement in
/// the published vocabulary.
const CORE_RESTRICTIONS: [(&str, &str, &str); 12] = [
    ("Initiator", "starts", "Cause"),
    ("Supporter", "supports", "Cause"),
    ("Executor", "executes", "Action"),
    ("Solution", "solves", "Problem"),
    ("SocialActor", "trait", "ParticipationCharacteristic"),
    ("Action", "produces", "Result"),
    ("Result", "contributesTo", "Solution"),
    ("Cause", "action", "Action"),
    ("Action", "belongsTo", "Scope"),
    ("Cause", "theme", "Theme"),
    ("Cause", "proposes", "Solution"),
    ("Problem", "generates", "Cause"),
];

fn add_core_classes(s: &mut OntologySchema, skip: &[&str]) {
    let material = vocab::bfo_material_entity();
    let dependent = vocab::bfo_dependent_continuant();
    let independent = vocab::bfo_independent_continuant();
    let processual = vocab::bfo_processual_entity();

    let rows: Vec<(&str, (&str, &str, &str), &str, Vec<&str>, Vec<Iri>)> = vec![
        (
            "Person",
            ("Pessoa", "Persona", "Person"),
            "a person (social actor is a person)",
            vec!["SocialActor"],
            vec![material.clone(), vocab::foaf_person()],
        ),
        (
            "Organization",
            ("Organização", "Organización", "Organization"),
            "social actor is a group of individuals, organized formally or informally \
             (e.g. movements, collectives)",
            vec!["SocialActor"],
            vec![material.clone(), vocab::foaf_organization()],
        ),
        (
            "Executor",
            ("Executor", "Ejecutor", "Executor"),
            "performs action directly and is responsible for results",
            vec!["SocialActor"],
            vec![material.clone()],
        ),
        (
            "Initiator",
            ("Iniciador", "Iniciador", "Initiator"),
            "originates cause, individually or collaboratively",
            vec!["SocialActor"],
            vec![material.clone()],
        ),
        (
            "Supporter",
            ("Apoiador", "Apoyador", "Supporter"),
            "supports cause with resources of any kind (e.g. cognitive, financial, equipments)",
            vec!["SocialActor"],
            vec![material.clone()],
        ),
        (
            "SocialActor",
            ("Ator Social", "Actor Social", "Social Actor"),
            "entity that might have a participatory role",
            vec![],
            vec![material.clone()],
        ),
        (
            "ParticipationCharacteristic",
            (
                "Característica de Participação",
                "Característica de Participación",
                "Participation Characteristic",
            ),
            "the way the participation of the specific actor is happening",
            vec![],
            vec![dependent.clone()],
        ),
        (
            "Cause",
            ("Causa", "Causa", "Cause"),
            "the motivation for Action",
            vec![],
            vec![dependent.clone()],
        ),
        (
            "Scope",
            ("Escopo", "Ambito", "Scope"),
            "the scope of Action",
            vec![],
            vec![dependent.clone()],
        ),
        (
            "Result",
            ("Resultado", "Resultado", "Result"),
            "the result obtained with action",
            vec![],
            vec![dependent.clone()],
        ),
        (
            "Solution",
            ("Solução", "Solución", "Solution"),
            "solution achieved with Action",
            vec![],
            vec![dependent.clone()],
        ),
        (
            "Problem",
            ("Problema", "Problema", "Problem"),
            "the problem that the Action aims to solve",
            vec![],
            vec![independent.clone()],
        ),
        (
            "Theme",
            ("Tema", "Tema", "Theme"),
            "the theme in focus by Action",
            vec![],
            vec![independent.clone()],
        ),
        (
            "Action",
            ("Ação", "Acción", "Action"),
            "what is done in terms of social participation",
            vec![],
            vec![processual.clone()],
        ),
    ];

    for (name, labels, comment, supers, upper) in rows {
        if skip.contains(&name) {
            continue;
        }
        add_class(s, name, labels, comment, &supers, &upper);
    }
}

fn add_core_properties(s: &mut OntologySchema, skip: &[&str]) {
    let rows: [(&str, (&str, &str, &str), Option<&str>); 12] = [
        ("theme", ("tema", "tema", "theme"), Some("Theme")),
        ("belongsTo", ("pertence ao", "pertence al", "belongs to"), Some("Scope")),
        ("action", ("ação", "acción", "action"), Some("Action")),
        ("supports", ("apoia", "apoya", "supports"), None),
        ("contributesTo", ("contribui para", "contribuye para", "contributes to"), None),
        ("executes", ("executa", "ejecuta", "executes"), None),
        ("generates", ("gera", "genera", "generates"), None),
        ("starts", ("inicia", "inicializa", "starts"), None),
        ("solves", ("soluciona", "resuelve", "solves"), None),
        ("produces", ("produz", "produce", "produces"), None),
        ("proposes", ("propõe", "propone", "proposes"), None),
        ("trait", ("traço", "rasgo", "trait"), None),
    ];
    for (name, labels, range) in rows {
        if skip.contains(&name) {
            continue;
        }
        add_property(s, name, labels, range, None);
    }
}

fn add_expansion(s: &mut OntologySchema) {
    add_class(
        s,
        "SocialNetwork",
        ("Rede Social", "Red Social", "Social Network"),
        "a social structure made up of social actors (such as individuals or organizations) \
         and a set of dyadic ties between these actors",
        &["Organization"],
        &[],
    );
    add_class(
        s,
        "FreeScaleNetwork",
        ("Rede Livre de Escala", "Red Libre de Escala", "Free Scale Network"),
        "a network whose connectivity follows a power law",
        &["SocialNetwork"],
        &[],
    );
    add_class(
        s,
        "ErdosRenyiNetwork",
        ("Rede Erdos-Renyi", "Red Erdos-Renyi", "Erdos-Renyi Network"),
        "also known as Poisson network, this network sets, with equal probability, an edge \
         between each pair of nodes",
        &["SocialNetwork"],
        &[],
    );
    add_class(
        s,
        "GeographicNetwork",
        ("Rede Geográfica", "Red Geográfica", "Geographic Network"),
        "a network whose connectivity is related to the distance of nodes in a metric space",
        &["SocialNetwork"],
        &[],
    );
    add_class(
        s,
        "SmallWorldNetwork",
        ("Rede de Mundo Pequeno", "Red de Mundo Pequeño", "Small World Network"),
        "a network where most nodes can be reached from other nodes with few hops or steps",
        &["SocialNetwork"],
        &[],
    );
    add_class(
        s,
        "InformalOrganization",
        ("Organização Informal", "Organización Informal", "Informal Organization"),
        "an organization that is not formalized",
        &["Organization"],
        &[],
    );
    add_class(
        s,
        "Mob",
        ("Multidão", "Multitud", "Mob"),
        "a crowd of individuals",
        &["InformalOrganization"],
        &[],
    );
    add_class(
        s,
        "GiantMob",
        ("Multidão Gigante", "Multitud Gigante", "Giant Mob"),
        "a crowd with more than 10,000 individuals",
        &["Mob"],
        &[],
    );
    add_class(
        s,
        "DownloadedMob",
        ("Multidão Convocada", "Multitud Convocada", "Downloaded Mob"),
        "a Mob convoqued by a network",
        &["Mob"],
        &[],
    );
    add_class(
        s,
        "Institution",
        ("Instituição", "Institución", "Institution"),
        "a mechanism of social order that governs a set of individuals",
        &["Organization"],
        &[],
    );
    add_class(
        s,
        "PublicInstitution",
        ("Instituição Pública", "Institución Pública", "Public Institution"),
        "an institution backed through public funds and controlled by the state",
        &["Institution"],
        &[],
    );
    add_class(
        s,
        "PrivateInstitution",
        ("Instituição Privada", "Institución Privada", "Private Institution"),
        "an institution backed through private fundings and controlled by private parties",
        &["Institution"],
        &[],
    );
    add_class(
        s,
        "AcademicInstitution",
        ("Instituição Acadêmica", "Institución Académica", "Academic Institution"),
        "an institution dedicated to education and research, which grants academic degrees",
        &["Institution"],
        &[],
    );
    add_class(
        s,
        "SpuriousInstitution",
        ("Instituição Espúria", "Institución Espuria", "Spurious Institution"),
        "an institution that holds prominent illegitimate or corrupt characteristics",
        &["Institution"],
        &[],
    );
    add_class(
        s,
        "ExoticInstitution",
        ("Instituição Exótica", "Institución Exótica", "Exotic Institution"),
        "an institution that does not fit previous classes or is characterized by very \
         unique traces",
        &["Institution"],
        &[],
    );
    add_class(
        s,
        "VoluntaryExecutor",
        ("Executor Voluntário", "Ejecutor Voluntario", "Voluntary Executor"),
        "an executor that receives no formal reward for the tasks",
        &["Executor"],
        &[],
    );
    add_class(
        s,
        "PaidExecutor",
        ("Executor Remunerado", "Ejecutor Remunerado", "Paid Executor"),
        "an Executor that receives formal reward for the tasks accomplished",
        &["Executor"],
        &[],
    );

    add_property(
        s,
        "receivesFrom",
        ("recebe de", "recibe de", "receives from"),
        None,
        Some("paysTo"),
    );
    add_property(s, "paysTo", ("paga a", "paga a", "pays to"), None, Some("receivesFrom"));
    add_property(
        s,
        "convoquedBy",
        ("convocado por", "convocado por", "convoqued by"),
        None,
        None,
    );

    s.add_disjointness(DisjointnessDecl::new("FreeScaleNetwork", "ErdosRenyiNetwork"));
    s.add_disjointness(DisjointnessDecl::new("FreeScaleNetwork", "GeographicNetwork"));
    s.add_disjointness(DisjointnessDecl::new("ErdosRenyiNetwork", "GeographicNetwork"));
    s.add_disjointness(DisjointnessDecl::new("InformalOrganization", "Institution"));
    s.add_disjointness(DisjointnessDecl::new("PublicInstitution", "PrivateInstitution"));
    s.add_disjointness(DisjointnessDecl::new("VoluntaryExecutor", "PaidExecutor"));

    s.add_defined_class(DefinedClassDecl::new(
        "PaidExecutor",
        "Executor",
        "receivesFrom",
        "SocialActor",
    ));
    s.add_defined_class(DefinedClassDecl::new(
        "DownloadedMob",
        "Mob",
        "convoquedBy",
        "SocialNetwork",
    ));
}

/// A reconstruction of the predecessor vocabulary, used as the diff example
/// and in migration tests. Relative to core it keeps the dropped Role class
/// and hasRole property, names contributesTo by its older composesSolution
/// name (same labels, so the diff sees a rename), and lacks
/// ParticipationCharacteristic and trait. Its ten restrictions are the
/// rows the predecessor actually carried.
pub fn build_vcps_fixture() -> OntologySchema {
    let base = Iri::new("http://lumii.lv/ontologies/Corais.owl").expect("fixture base");
    let mut s = OntologySchema::new(base);
    add_core_classes(&mut s, &["ParticipationCharacteristic"]);
    add_class(
        &mut s,
        "Role",
        ("Papel", "Papel", "Role"),
        "the role of the actor",
        &[],
        &[vocab::bfo_dependent_continuant()],
    );

    add_core_properties(&mut s, &["contributesTo", "trait"]);
    add_property(
        &mut s,
        "composesSolution",
        ("contribui para", "contribuye para", "contributes to"),
        None,
        None,
    );
    add_property(&mut s, "hasRole", ("tem papel", "tiene papel", "has role"), None, None);

    for (on_class, property, filler) in [
        ("Initiator", "starts", "Cause"),
        ("Supporter", "supports", "Cause"),
        ("Executor", "executes", "Action"),
        ("Solution", "solves", "Problem"),
        ("SocialActor", "hasRole", "Role"),
        ("Action", "produces", "Result"),
        ("Cause", "action", "Action"),
        ("Action", "belongsTo", "Scope"),
        ("Cause", "theme", "Theme"),
        ("Cause", "proposes", "Solution"),
    ] {
        s.add_restriction(RestrictionDecl::existential(on_class, property, filler));
    }
    s.validate().expect("fixture is well formed");
    s
}

fn add_class(
    s: &mut OntologySchema,
    name: &str,
    (pt_br, es, en): (&str, &str, &str),
    comment: &str,
    superclasses: &[&str],
    upper: &[Iri],
) {
    s.add_class(ClassDecl {
        name: name.to_owned(),
        labels: Labels::new(pt_br, es, en),
        comment: comment.to_owned(),
        superclasses: superclasses.iter().map(|n| (*n).to_owned()).collect(),
        upper: upper.iter().cloned().collect::<BTreeSet<Iri>>(),
    })
    .expect("profile class");
}

fn add_property(
    s: &mut OntologySchema,
    name: &str,
    (pt_br, es, en): (&str, &str, &str),
    range: Option<&str>,
    inverse: Option<&str>,
) {
    s.add_property(PropertyDecl {
        name: name.to_owned(),
        labels: Labels::new(pt_br, es, en),
        domain: None,
        range: range.map(str::to_owned),
        inverse: inverse.map(str::to_owned),
    })
    .expect("profile property");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schema::decl::Profile;

    #[test]
    fn core_counts() {
        let s = build_ops_core();
        assert_eq!(s.class_count(), 14);
        assert_eq!(s.property_count(), 12);
        assert_eq!(s.restriction_count(), 0);
        assert_eq!(s.disjointness_count(), 0);
        assert_eq!(s.defined_class_count(), 0);
    }

    #[test]
    fn every_declaration_carries_three_labels() {
        for profile in [Profile::Core, Profile::Restricted, Profile::Expanded] {
            let s = profile.build();
            for c in s.classes() {
                assert!(c.labels.complete(), "class {} labels", c.name);
                assert!(!c.comment.is_empty(), "class {} comment", c.name);
            }
            for p in s.properties() {
                assert!(p.labels.complete(), "property {} labels", p.name);
            }
        }
    }

    #[test]
    fn restricted_is_core_plus_twelve_restrictions() {
        let r = build_ops_restricted();
        let c = build_ops_core();
        assert_eq!(r.restriction_count(), 12);
        assert!(r.classes().eq(c.classes()));
        assert!(r.properties().eq(c.properties()));
        let on_social_actor: Vec<_> = r
            .restrictions()
            .filter(|x| x.on_class == "SocialActor")
            .collect();
        assert_eq!(on_social_actor.len(), 1);
        assert_eq!(on_social_actor[0].property, "trait");
        assert_eq!(on_social_actor[0].filler, "ParticipationCharacteristic");
    }

    #[test]
    fn expanded_counts() {
        let e = build_ops_expanded();
        assert_eq!(e.class_count(), 14 + 17);
        assert_eq!(e.property_count(), 12 + 3);
        assert_eq!(e.restriction_count(), 0);
        assert_eq!(e.disjointness_count(), 6);
        assert_eq!(e.defined_class_count(), 2);
    }

    #[test]
    fn expansion_inverses_are_mutual() {
        let e = build_ops_expanded();
        let receives = e.property("receivesFrom").unwrap();
        let pays = e.property("paysTo").unwrap();
        assert_eq!(receives.inverse.as_deref(), Some("paysTo"));
        assert_eq!(pays.inverse.as_deref(), Some("receivesFrom"));
    }

    #[test]
    fn core_ranges() {
        let s = build_ops_core();
        let ranged: Vec<(&str, &str)> = s
            .properties()
            .filter_map(|p| p.range.as_deref().map(|r| (p.name.as_str(), r)))
            .collect();
        assert_eq!(
            ranged,
            vec![("action", "Action"), ("belongsTo", "Scope"), ("theme", "Theme")]
        );
        assert!(s.properties().all(|p| p.domain.is_none()));
    }

    #[test]
    fn scope_labels() {
        let s = build_ops_core();
        let scope = s.class("Scope").unwrap();
        assert_eq!(scope.labels.pt_br, "Escopo");
        assert_eq!(scope.labels.es, "Ambito");
        assert_eq!(scope.labels.en, "Scope");
    }

    #[test]
    fn class_iris_hang_off_the_base() {
        let s = build_ops_core();
        assert_eq!(
            s.iri_of("SocialActor").unwrap().as_str(),
            "http://purl.org/socialparticipation/ops/SocialActor"
        );
        let other = build_ops_core_at(Iri::new("http://example.org/v").unwrap());
        assert_eq!(
            other.iri_of("SocialActor").unwrap().as_str(),
            "http://example.org/v/SocialActor"
        );
    }

    #[test]
    fn expansion_hierarchy_reaches_core() {
        let e = build_ops_expanded();
        for name in ["GiantMob", "DownloadedMob", "SpuriousInstitution", "SmallWorldNetwork"] {
            let mut cur = name.to_owned();
            let mut hops = 0;
            loop {
                let c = e.class(&cur).unwrap();
                match c.superclasses.iter().next() {
                    Some(next) => cur = next.clone(),
                    None => break,
                }
                hops += 1;
                assert!(hops < 10, "runaway hierarchy at {name}");
            }
            assert_eq!(cur, "SocialActor");
        }
    }

    #[test]
    fn vcps_fixture_shape() {
        let v = build_vcps_fixture();
        assert_eq!(v.class_count(), 14);
        assert!(v.class("Role").is_some());
        assert!(v.class("ParticipationCharacteristic").is_none());
        assert_eq!(v.property_count(), 12);
        assert!(v.property("hasRole").is_some());
        assert!(v.property("composesSolution").is_some());
        assert!(v.property("contributesTo").is_none());
        assert!(v.property("trait").is_none());
        assert_eq!(v.restriction_count(), 10);
        assert!(v
            .restrictions()
            .any(|r| r.on_class == "SocialActor" && r.property == "hasRole" && r.filler == "Role"));
        assert!(v.base().as_str().starts_with("http://lumii.lv/"));
    }

    #[test]
    fn profile_build_dispatch() {
        assert_eq!(Profile::Core.build().class_count(), 14);
        assert_eq!(Profile::Restricted.build().restriction_count(), 12);
        assert_eq!(Profile::Expanded.build().class_count(), 31);
    }
}
