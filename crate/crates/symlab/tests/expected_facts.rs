use std::fs;
use std::path::PathBuf;

use symlab::facts::{expected_facts, sidecar_name};
use symlab_core::constructions::{catalog, CATALOG_NAMES};

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data")
}

/// Set `SYMLAB_BLESS=1` to rewrite the sidecars from the catalog.
#[test]
fn sidecars_match_the_catalog() {
    let bless = std::env::var_os("SYMLAB_BLESS").is_some();
    for name in CATALOG_NAMES {
        let entry = catalog(name, None).unwrap();
        let path = data_dir().join(sidecar_name(&entry));
        let expected = expected_facts(&entry);
        if bless {
            fs::write(&path, serde_json::to_string_pretty(&expected).unwrap() + "\n").unwrap();
        }
        let text = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let on_disk: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(on_disk, expected, "{}", path.display());
        assert!(path.with_extension("").with_extension("pres").exists(), "{}", path.display());
    }
}

#[test]
fn every_fact_has_a_provenance() {
    for name in CATALOG_NAMES {
        let facts = expected_facts(&catalog(name, None).unwrap());
        for (k, v) in facts.as_object().unwrap() {
            if let Some(obj) = v.as_object() {
                let p = obj["provenance"].as_str().unwrap();
                assert!(p == "stated" || p == "derived", "{name} {k}");
            }
        }
    }
}
