//! Machine-readable run reports.
//!
//! Group orders are decimal strings because they outgrow JSON numbers. Maps
//! are ordered, so equal runs give byte-identical reports.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use symlab_core::classify::{Basis, CaseReport, EvidenceMode, Flag, SymmetryProfile};
use symlab_core::constructions::{PipelineReport, StageStatus};
use symlab_core::graph::{Basics, Diameter};
use symlab_core::group::GroupFingerprint;

/// Bumped whenever the layout of [`RunReport`] changes.
pub const SCHEMA_VERSION: u32 = 1;

/// The JSON schema for [`RunReport`].
pub const SCHEMA: &str = include_str!("../schema/run-report.schema.json");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: Vec<String>,
    pub tier: String,
    pub evidence: Option<String>,
    pub stages: Vec<StageJson>,
    pub profiles: Vec<ProfileJson>,
    pub facts: BTreeMap<String, Value>,
    pub criteria: Vec<CriterionJson>,
    pub discrepancies: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<BTreeMap<String, u64>>,
    pub error: Option<String>,
}

impl RunReport {
    pub fn new(command: Vec<String>, tier: &str) -> Self {
        RunReport {
            schema_version: SCHEMA_VERSION,
            command,
            tier: tier.to_string(),
            evidence: None,
            stages: Vec::new(),
            profiles: Vec::new(),
            facts: BTreeMap::new(),
            criteria: Vec::new(),
            discrepancies: Vec::new(),
            timing_ms: None,
            error: None,
        }
    }

    pub fn fact(&mut self, key: &str, value: impl Into<Value>) {
        self.facts.insert(key.to_string(), value.into());
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageJson {
    pub name: String,
    pub status: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagJson {
    pub value: bool,
    pub basis: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FingerprintJson {
    pub order: String,
    pub element_orders: Vec<(u64, u64)>,
    pub sampled: bool,
    pub center_order: Option<u64>,
    pub abelian_invariants: Option<Vec<u64>>,
    pub derived_length: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicsJson {
    pub order: usize,
    pub size: usize,
    pub valency: Option<usize>,
    pub girth: Option<u32>,
    /// A number, `"infinite"` or `"skipped"`.
    pub diameter: Value,
    pub connected: bool,
    pub bipartite: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseJson {
    pub label: String,
    pub basis: String,
    pub csh3: bool,
    pub ch3: bool,
    pub clique_graph_valency: Option<usize>,
    pub clique_graph_local_order: Option<String>,
    pub clique_graph_vertex_stabilizer: Option<String>,
    pub clique_graph_edge_stabilizer: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileJson {
    pub subject: String,
    pub mode: String,
    pub group_order: String,
    pub basics: BasicsJson,
    pub flags: BTreeMap<String, FlagJson>,
    pub locally_2kn: Option<usize>,
    pub vertex_stabilizer: FingerprintJson,
    pub edge_stabilizer: Option<FingerprintJson>,
    pub arc_stabilizer: Option<FingerprintJson>,
    pub local_action: Option<FingerprintJson>,
    pub local_kernel_order: Option<String>,
    pub check_vertex: Option<(u32, bool)>,
    pub case: Option<CaseJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionJson {
    pub id: u8,
    pub title: String,
    pub tier: String,
    pub status: String,
    pub blocking: bool,
    pub measured: String,
    pub checks: Vec<CheckJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

pub fn basis_name(b: Basis) -> &'static str {
    match b {
        Basis::Computed => "computed",
        Basis::LowerBound => "lower-bound",
        Basis::TheoryDerived => "theory-derived",
    }
}

pub fn mode_name(m: EvidenceMode) -> &'static str {
    match m {
        EvidenceMode::Full => "full",
        EvidenceMode::Structural => "structural",
    }
}

pub fn status_name(s: StageStatus) -> &'static str {
    match s {
        StageStatus::Pass => "pass",
        StageStatus::Fail => "fail",
        StageStatus::Skipped => "skipped",
    }
}

fn flag(f: Flag) -> FlagJson {
    FlagJson {
        value: f.value,
        basis: basis_name(f.basis).to_string(),
    }
}

pub fn fingerprint(f: &GroupFingerprint) -> FingerprintJson {
    FingerprintJson {
        order: f.order.to_string(),
        element_orders: f.element_orders.clone(),
        sampled: f.sampled,
        center_order: f.center_order,
        abelian_invariants: f.abelian_invariants.clone(),
        derived_length: f.derived_length,
    }
}

pub fn basics(b: &Basics) -> BasicsJson {
    BasicsJson {
        order: b.order,
        size: b.size,
        valency: b.valency,
        girth: b.girth,
        diameter: match b.diameter {
            Diameter::Finite(d) => Value::from(d),
            Diameter::Infinite => Value::from("infinite"),
            Diameter::Skipped => Value::from("skipped"),
        },
        connected: b.connected,
        bipartite: b.bipartition.is_some(),
    }
}

pub fn case(c: &CaseReport) -> CaseJson {
    let clique = c.clique.as_ref();
    let tag = |t: Option<symlab_core::classify::reference::NamedGroup>| t.map(|n| n.name().to_string());
    CaseJson {
        label: c.label.to_string(),
        basis: basis_name(c.basis).to_string(),
        csh3: c.csh3,
        ch3: c.ch3,
        clique_graph_valency: clique.and_then(|c| c.valency),
        clique_graph_local_order: clique.map(|c| c.local_order.to_string()),
        clique_graph_vertex_stabilizer: clique.and_then(|c| tag(c.tags.vertex)),
        clique_graph_edge_stabilizer: clique.and_then(|c| tag(c.tags.edge)),
    }
}

pub fn profile(subject: &str, p: &SymmetryProfile, b: &Basics, c: Option<&CaseReport>) -> ProfileJson {
    let mut flags = BTreeMap::new();
    let mut put = |k: &str, f: Flag| {
        flags.insert(k.to_string(), flag(f));
    };
    put("vertex-transitive", p.vertex_transitive);
    put("edge-transitive", p.edge_transitive);
    put("arc-transitive", p.arc_transitive);
    put("half-arc-transitive", p.half_arc_transitive);
    for s in 0..3 {
        put(&format!("{}-arc-transitive", s + 1), p.s_arc_transitive[s]);
        put(&format!("{}-arc-regular", s + 1), p.s_arc_regular[s]);
        put(&format!("{}-csh", s + 1), p.csh[s]);
        put(&format!("{}-ch", s + 1), p.ch[s]);
    }
    put("2-geodesic-transitive", p.geodesic_transitive_2);
    put("2-path-transitive", p.path_transitive_2);
    put("2-geodesic-path-transitive", p.geodesic_path_transitive_2);
    put("locally-3-transitive", p.locally_3_transitive);
    put("solvable", p.solvable);
    ProfileJson {
        subject: subject.to_string(),
        mode: mode_name(p.mode).to_string(),
        group_order: p.group_order.to_string(),
        basics: basics(b),
        flags,
        locally_2kn: p.locally_2kn,
        vertex_stabilizer: fingerprint(&p.vertex_stabilizer),
        edge_stabilizer: p.edge_stabilizer.as_ref().map(fingerprint),
        arc_stabilizer: p.arc_stabilizer.as_ref().map(fingerprint),
        local_action: p.local_action.as_ref().map(fingerprint),
        local_kernel_order: p.local_kernel_order.as_ref().map(|o| o.to_string()),
        check_vertex: p.check_vertex,
        case: c.map(case),
    }
}

/// Stages, measured facts and discrepancies of a pipeline run.
pub fn add_pipeline(report: &mut RunReport, p: &PipelineReport) {
    report.evidence = p.evidence.map(|m| mode_name(m).to_string());
    report.stages = p
        .stages
        .iter()
        .map(|s| StageJson {
            name: s.name.to_string(),
            status: status_name(s.status).to_string(),
            detail: s.detail.clone(),
        })
        .collect();
    report.discrepancies.extend(p.discrepancies.iter().cloned());
    report.fact("entry", p.entry.as_str());
    let big = |o: &Option<BigUint>| o.as_ref().map(|x| Value::from(x.to_string()));
    let opt = |o: Option<usize>| o.map(Value::from);
    let items: [(&str, Option<Value>); 14] = [
        ("group_order", big(&p.group_order)),
        ("a_order", opt(p.a_order)),
        ("b_order", opt(p.b_order)),
        ("gamma_order", p.gamma.as_ref().map(|g| Value::from(g.order()))),
        ("gamma_valency", opt(p.gamma_valency)),
        ("locally_2kn", opt(p.locally_2kn)),
        ("triangles", p.triangles.map(Value::from)),
        ("sigma_order", p.sigma.as_ref().map(|g| Value::from(g.order()))),
        ("sigma_valency", opt(p.sigma_valency)),
        ("sigma_bipartite", p.sigma_bipartite.map(Value::from)),
        ("aut_hs_order", big(&p.aut_hs_order)),
        ("aut_gamma_order", big(&p.aut_gamma_order)),
        ("aut_sigma_order", big(&p.aut_sigma_order)),
        ("normal_cayley", p.normal_cayley.map(Value::from)),
    ];
    for (k, v) in items {
        if let Some(v) = v {
            report.fact(k, v);
        }
    }
    if let Some(t) = p.aut_hs_type {
        report.fact("aut_hs_type", t.name());
    }
    if let Some(fp) = &p.aut_hs_fingerprint {
        report.fact("aut_hs_fingerprint", serde_json::to_value(fingerprint(fp)).expect("serializes"));
    }
    if let Some(bm) = &p.basis_maps {
        report.fact("basis_map_candidates", bm.candidates);
        report.fact("basis_map_accepted", bm.accepted);
    }
    if let Some(c) = &p.case {
        report.fact("case", c.label.to_string());
    }
    if let Some(ids) = &p.identities {
        let checks: Vec<Value> = ids
            .checks
            .iter()
            .map(|c| {
                serde_json::json!({
                    "name": c.name,
                    "lhs": c.lhs.to_string(),
                    "rhs": c.rhs.to_string(),
                    "holds": c.holds,
                })
            })
            .collect();
        report.fact("identities", checks);
    }
    if let (Some(prof), Some(g)) = (&p.profile, &p.gamma) {
        report.profiles.push(profile("gamma", prof, &g.basics(), p.case.as_ref()));
    }
}
