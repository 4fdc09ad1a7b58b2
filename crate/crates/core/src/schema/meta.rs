//! Documentation-level annotations that the vocabulary publishes outside the
//! RDF encoding: suggested subject/object classes for each property and the
//! alternate spelling of the one property whose short name collides with a
//! reserved word in several host languages.

/// Suggested (subject class, object class) pairing for a property, as given
/// in the vocabulary documentation. These are usage hints, not domain or
/// range axioms; the reasoner never consumes them.
pub fn intended_usage(property: &str) -> Option<(&'static str, &'static str)> {
    Some(match property {
        "starts" => ("SocialActor", "Cause"),
        "supports" => ("SocialActor", "Cause"),
        "executes" => ("SocialActor", "Action"),
        "solves" => ("Solution", "Problem"),
        "produces" => ("Action", "Result"),
        "contributesTo" => ("Result", "Solution"),
        "action" => ("Cause", "Action"),
        "belongsTo" => ("Action", "Scope"),
        "theme" => ("Cause", "Theme"),
        "proposes" => ("Cause", "Solution"),
        "generates" => ("Problem", "Cause"),
        "trait" => ("SocialActor", "ParticipationCharacteristic"),
        "receivesFrom" => ("Executor", "SocialActor"),
        "paysTo" => ("SocialActor", "Executor"),
        "convoquedBy" => ("Mob", "SocialNetwork"),
        _ => return None,
    })
}

/// Longer synonym documented for properties whose short name is awkward in
/// some host languages. Only `trait` has one.
pub fn alternate_name(property: &str) -> Option<&'static str> {
    match property {
        "trait" => Some("hasParticipationCharacteristic"),
        _ => None,
    }
}
