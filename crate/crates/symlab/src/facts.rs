//! Expected facts of catalog entries as JSON.
//!
//! Each entry in `crates/core/data` has a `<name>.expected.json` sidecar next
//! to its presentation. Every fact records its value and whether it is
//! stated in the source text or derived from stated facts.

use serde_json::{json, Value};
use symlab_core::constructions::{CatalogEntry, EvidenceTier, Fact, Provenance};

fn provenance(p: Provenance) -> &'static str {
    match p {
        Provenance::Stated => "stated",
        Provenance::Derived => "derived",
    }
}

fn fact<T>(f: &Fact<T>, value: impl Into<Value>) -> Value {
    json!({ "value": value.into(), "provenance": provenance(f.provenance) })
}

pub fn expected_facts(entry: &CatalogEntry) -> Value {
    let e = &entry.expected;
    json!({
        "entry": entry.name,
        "group_order": fact(&e.group_order, e.group_order.value.to_string()),
        "aut_hs_order": fact(&e.aut_hs_order, e.aut_hs_order.value),
        "aut_hs_type": e.aut_hs_type.as_ref().map(|t| fact(t, t.value.name())),
        "gamma_valency": fact(&e.gamma_valency, e.gamma_valency.value),
        "sigma_order": fact(&e.sigma_order, e.sigma_order.value.to_string()),
        "sigma_valency": fact(&e.sigma_valency, e.sigma_valency.value),
        "case": fact(&e.case, e.case.value.to_string()),
        "three_arc_regular": e.three_arc_regular,
        "evidence": match e.evidence {
            EvidenceTier::Full => "full",
            EvidenceTier::Structural => "structural",
        },
        "best_effort": e.best_effort,
    })
}

/// File name of the sidecar for `entry`, matching its presentation file.
pub fn sidecar_name(entry: &CatalogEntry) -> String {
    let stem: String = entry.name.replace('(', "-").replace(')', "");
    format!("{stem}.expected.json")
}
