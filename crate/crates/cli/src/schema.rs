//! Published JSON schemas (draft 2020-12). References between schemas use their `$id`.

pub const SCHEMAS: &[(&str, &str)] = &[
    ("polynomial", include_str!("../schemas/polynomial.json")),
    ("spectrum", include_str!("../schemas/spectrum.json")),
    ("class", include_str!("../schemas/class.json")),
    ("report", include_str!("../schemas/report.json")),
    ("diagnostic", include_str!("../schemas/diagnostic.json")),
    ("corpus_entry", include_str!("../schemas/corpus_entry.json")),
    ("join", include_str!("../schemas/join.json")),
    ("batch", include_str!("../schemas/batch.json")),
    ("spectra", include_str!("../schemas/spectra.json")),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    SCHEMAS.iter().map(|(name, _)| *name)
}

pub fn get(name: &str) -> Option<&'static str> {
    SCHEMAS.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

/// The `$id` a schema is registered under, e.g. `explab/report.json`.
pub fn id(name: &str) -> String {
    format!("explab/{name}.json")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schemas_parse_and_ids_match() {
        for (name, text) in SCHEMAS {
            let value: serde_json::Value = serde_json::from_str(text).unwrap();
            assert_eq!(value["$id"], id(name), "{name}");
        }
    }
}
