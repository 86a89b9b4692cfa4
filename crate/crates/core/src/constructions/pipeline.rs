//! From a catalog entry to its Cayley graph, clique graph and classification.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use super::basis_maps::{basis_map_automorphisms, BasisMapReport};
use super::identify;
use super::catalog::{CatalogEntry, EvidenceTier};
use crate::autgrp::{automorphism_group_with, DEFAULT_VERTEX_CAP};
use crate::classify::reference::NamedGroup;
use crate::classify::{
    classify_case, consistency_identities, induced_on_sets, profile, CaseReport, EvidenceMode, IdentityInputs,
    IdentityReport, SymmetryProfile,
};
use crate::error::{Error, Result};
use crate::fp::{aut_fixing_set_search, EnumOptions, RegularRep, DEFAULT_NODE_CAP};
use crate::graph::{cayley_graph, Graph};
use crate::group::{GroupFingerprint, PermGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tier {
    Fast,
    Full,
}

#[derive(Clone, Debug)]
pub struct PipelineOptions {
    pub tier: Tier,
    pub enumeration: EnumOptions,
    /// Largest Γ whose full automorphism group is computed.
    pub vertex_cap: usize,
    pub node_cap: u64,
    /// Realize groups marked best-effort instead of skipping them.
    pub realize_best_effort: bool,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            tier: Tier::Fast,
            enumeration: EnumOptions::default(),
            vertex_cap: DEFAULT_VERTEX_CAP,
            node_cap: DEFAULT_NODE_CAP,
            realize_best_effort: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StageStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stage {
    pub name: &'static str,
    pub status: StageStatus,
    pub detail: String,
}

/// Measurements of one pipeline run. Fields stay `None` when their stage
/// did not run.
#[derive(Clone, Debug)]
pub struct PipelineReport {
    pub entry: String,
    pub tier: Tier,
    pub evidence: Option<EvidenceMode>,
    pub stages: Vec<Stage>,
    pub discrepancies: Vec<String>,
    pub group_order: Option<BigUint>,
    pub a_order: Option<usize>,
    pub b_order: Option<usize>,
    pub gamma: Option<Graph>,
    pub gamma_valency: Option<usize>,
    pub locally_2kn: Option<usize>,
    pub triangles: Option<u64>,
    pub sigma: Option<Graph>,
    pub sigma_valency: Option<usize>,
    pub sigma_bipartite: Option<bool>,
    pub aut_hs_order: Option<BigUint>,
    pub aut_hs_fingerprint: Option<GroupFingerprint>,
    pub aut_hs_type: Option<NamedGroup>,
    pub aut_hs_nodes: Option<u64>,
    pub basis_maps: Option<BasisMapReport>,
    pub aut_gamma_order: Option<BigUint>,
    pub aut_sigma_order: Option<BigUint>,
    pub normal_cayley: Option<bool>,
    pub case: Option<CaseReport>,
    pub profile: Option<SymmetryProfile>,
    pub identities: Option<IdentityReport>,
}

impl PipelineReport {
    fn new(entry: &CatalogEntry, tier: Tier) -> Self {
        PipelineReport {
            entry: entry.name.clone(),
            tier,
            evidence: None,
            stages: Vec::new(),
            discrepancies: Vec::new(),
            group_order: None,
            a_order: None,
            b_order: None,
            gamma: None,
            gamma_valency: None,
            locally_2kn: None,
            triangles: None,
            sigma: None,
            sigma_valency: None,
            sigma_bipartite: None,
            aut_hs_order: None,
            aut_hs_fingerprint: None,
            aut_hs_type: None,
            aut_hs_nodes: None,
            basis_maps: None,
            aut_gamma_order: None,
            aut_sigma_order: None,
            normal_cayley: None,
            case: None,
            profile: None,
            identities: None,
        }
    }

    fn stage(&mut self, name: &'static str, ok: bool, detail: String) -> bool {
        let status = if ok { StageStatus::Pass } else { StageStatus::Fail };
        if !ok {
            self.discrepancies.push(format!("{name}: {detail}"));
        }
        self.stages.push(Stage { name, status, detail });
        ok
    }

    fn skip(&mut self, name: &'static str, detail: String) {
        self.stages.push(Stage {
            name,
            status: StageStatus::Skipped,
            detail,
        });
    }

    fn expect<T: PartialEq + core::fmt::Debug>(&mut self, what: &str, got: &T, want: &T) {
        if got != want {
            self.discrepancies.push(format!("{what}: expected {want:?}, measured {got:?}"));
        }
    }

    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty() && self.stages.iter().all(|s| s.status != StageStatus::Fail)
    }

    pub fn stage_status(&self, name: &str) -> Option<StageStatus> {
        self.stages.iter().find(|s| s.name == name).map(|s| s.status)
    }
}

/// Elements of the subgroup generated by `gens`, by closure under right
/// multiplication.
pub(crate) fn subgroup_elements(rep: &RegularRep, gens: &[u32]) -> Vec<u32> {
    let mut seen = vec![false; rep.order()];
    seen[0] = true;
    let mut out = vec![0u32];
    let mut i = 0;
    while i < out.len() {
        for &g in gens {
            let y = rep.mul(out[i], g);
            if !seen[y as usize] {
                seen[y as usize] = true;
                out.push(y);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

/// `S = (A ∪ B) - {1}` in `rep`, sorted, and the basis generators of `A`
/// then `B`.
pub fn connection_set(rep: &RegularRep, entry: &CatalogEntry) -> (Vec<u32>, Vec<u32>) {
    let tuple: Vec<u32> = entry.a_words.iter().chain(&entry.b_words).map(|w| rep.element_of(w)).collect();
    let (a_gens, b_gens) = tuple.split_at(entry.a_words.len());
    let mut set: Vec<u32> = subgroup_elements(rep, a_gens)
        .into_iter()
        .chain(subgroup_elements(rep, b_gens))
        .filter(|&x| x != 0)
        .collect();
    set.sort_unstable();
    set.dedup();
    (set, tuple)
}

/// Abelian, and every non-identity element has the same prime order.
fn is_elementary_abelian(rep: &RegularRep, elems: &[u32]) -> bool {
    let commute = elems
        .iter()
        .all(|&x| elems.iter().all(|&y| rep.mul(x, y) == rep.mul(y, x)));
    let orders: Vec<u64> = elems.iter().filter(|&&x| x != 0).map(|&x| rep.element_order(x)).collect();
    let prime = orders.first().copied().unwrap_or(1);
    commute && orders.iter().all(|&o| o == prime) && (2..prime).all(|d| prime % d != 0)
}

/// Checks that each vertex of Γ lies in exactly two cliques and that two
/// vertices are adjacent iff they share a clique, so `h ↦ {Ah, Bh}` is an
/// isomorphism from Γ onto the line graph of the clique graph.
fn line_graph_witness(gamma: &Graph, cliques: &[Vec<u32>]) -> bool {
    let mut containing = vec![Vec::new(); gamma.order()];
    for (i, c) in cliques.iter().enumerate() {
        for &v in c {
            containing[v as usize].push(i);
        }
    }
    if containing.iter().any(|c| c.len() != 2) {
        return false;
    }
    let mut pairs: Vec<&Vec<usize>> = containing.iter().collect();
    pairs.sort_unstable();
    if pairs.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    (0..gamma.order() as u32).all(|v| {
        let shared = |w: u32| containing[v as usize].iter().any(|c| containing[w as usize].contains(c));
        let degree_ok = containing[v as usize].iter().map(|&c| cliques[c].len() - 1).sum::<usize>() == gamma.degree(v);
        degree_ok && gamma.neighbors(v).iter().all(|&w| shared(w))
    })
}

/// Runs every stage on `entry`. Stage failures are recorded in the report;
/// an `Err` is returned only for malformed entries.
pub fn lemma_5_6_pipeline(entry: &CatalogEntry, opts: &PipelineOptions) -> Result<PipelineReport> {
    let mut rep_out = PipelineReport::new(entry, opts.tier);
    let r = &mut rep_out;
    let exp = &entry.expected;

    if exp.best_effort && !opts.realize_best_effort {
        r.skip("realize", "best-effort realization not requested".into());
        return presentation_only(entry, opts, rep_out);
    }
    let rep = match RegularRep::new(&entry.presentation, &opts.enumeration) {
        Ok(rep) => rep,
        Err(Error::Overflow { live }) => {
            r.skip(
                "realize",
                format!("coset enumeration overflowed at {live} live cosets; continuing without realization"),
            );
            return presentation_only(entry, opts, rep_out);
        }
        Err(e) => return Err(e),
    };
    let order = rep.order_big();
    r.group_order = Some(order.clone());
    let ok = order == exp.group_order.value;
    r.stage("realize", ok, format!("|H| = {order}"));
    if !ok {
        return Ok(rep_out);
    }

    // Subgroups A and B.
    let a_gens: Vec<u32> = entry.a_words.iter().map(|w| rep.element_of(w)).collect();
    let b_gens: Vec<u32> = entry.b_words.iter().map(|w| rep.element_of(w)).collect();
    let a = subgroup_elements(&rep, &a_gens);
    let b = subgroup_elements(&rep, &b_gens);
    r.a_order = Some(a.len());
    r.b_order = Some(b.len());
    let trivial_meet = a.iter().filter(|x| b.binary_search(x).is_ok()).count() == 1;
    let ab: Vec<u32> = a_gens.iter().chain(&b_gens).copied().collect();
    let generated = subgroup_elements(&rep, &ab).len() == rep.order();
    let elementary = is_elementary_abelian(&rep, &a) && is_elementary_abelian(&rep, &b);
    let ok = a.len() == b.len() && trivial_meet && generated && elementary;
    r.stage(
        "subgroups",
        ok,
        format!(
            "|A| = {}, |B| = {}, elementary abelian {elementary}, A ∩ B = 1 {trivial_meet}, <A,B> = H {generated}",
            a.len(),
            b.len()
        ),
    );
    if !ok {
        return Ok(rep_out);
    }
    let k = a.len();

    // Γ = Cay(H, S).
    let mut set: Vec<u32> = a.iter().chain(&b).copied().filter(|&x| x != 0).collect();
    set.sort_unstable();
    let gamma = cayley_graph(&rep, &set)?;
    let q = gamma.locally_2kn();
    r.gamma_valency = gamma.valency();
    r.locally_2kn = q;
    let triangles = gamma.count_triangles();
    r.triangles = Some(triangles);
    let ok = q == Some(k - 1) && gamma.is_connected();
    let local = q.map_or("not locally 2K_n".into(), |q| format!("locally 2K_{q}"));
    r.stage("cayley-graph", ok, format!("valency {}, {local}", r.gamma_valency.unwrap_or(0)));
    r.expect("Γ valency", &r.gamma_valency.clone(), &Some(exp.gamma_valency.value));
    if !ok {
        r.gamma = Some(gamma);
        return Ok(rep_out);
    }

    // Σ = C(Γ) with the action of R(H).
    let cliques = gamma.maximal_cliques()?;
    let sigma = gamma.clique_graph()?;
    r.sigma_valency = sigma.valency();
    let bip = sigma.bipartition().is_some();
    r.sigma_bipartite = Some(bip);
    let rh = induced_on_sets(rep.group(), &cliques)?;
    let orbits = rh.orbits().len();
    let u = 0u32;
    let v = sigma.neighbors(0)[0];
    let gu = rh.point_stabilizer(u)?.order();
    let gv = rh.point_stabilizer(v)?.order();
    let guv = rh.pointwise_stabilizer(&[u, v])?.order();
    let witness = line_graph_witness(&gamma, &cliques);
    let ok = r.sigma_valency == Some(k)
        && BigUint::from(sigma.order() * k) == 2u32 * &order
        && sigma.size() == rep.order()
        && bip
        && orbits == 2
        && gu == BigUint::from(k)
        && gv == BigUint::from(k)
        && guv == BigUint::from(1u32)
        && witness;
    r.stage(
        "clique-graph",
        ok,
        format!(
            "|V(Σ)| = {}, valency {}, bipartite {bip}, R(H) orbits {orbits}, |G_u| = {gu}, |G_v| = {gv}, |G_uv| = {guv}, Γ ≅ L(Σ) {witness}",
            sigma.order(),
            r.sigma_valency.unwrap_or(0)
        ),
    );
    r.expect("|V(Σ)|", &BigUint::from(sigma.order()), &exp.sigma_order.value);
    r.expect("Σ valency", &r.sigma_valency.clone(), &Some(exp.sigma_valency.value));

    // Aut(H, S).
    let tuple: Vec<u32> = a_gens.iter().chain(&b_gens).copied().collect();
    let aut = aut_fixing_set_search(&rep, &set, &tuple, opts.node_cap)?;
    let aut_order = aut.order();
    let fp = aut.on_set.fingerprint();
    let named = identify(&aut.on_set)?;
    r.aut_hs_order = Some(aut_order.clone());
    r.aut_hs_nodes = Some(aut.nodes);
    r.aut_hs_type = named;
    r.aut_hs_fingerprint = Some(fp);
    let mut ok = aut_order == BigUint::from(exp.aut_hs_order.value);
    if let Some(t) = &exp.aut_hs_type {
        ok &= named == Some(t.value);
    }
    r.stage(
        "aut-hs",
        ok,
        format!("|Aut(H,S)| = {aut_order}, type {}, {} search nodes", named.map_or("unidentified", |n| n.name()), aut.nodes),
    );

    // R(H) ⋊ Aut(H,S).
    let mut ngens = rep.group().generators().to_vec();
    ngens.extend(aut.group.generators().iter().cloned());
    let n_order = &order * &aut_order;
    let normalizer = PermGroup::with_known_order(rep.order(), ngens, &n_order)?;

    let identities = consistency_identities(&IdentityInputs {
        gamma_vertices: order.clone(),
        triangles: Some(BigUint::from(triangles)),
        q: q.unwrap_or(0),
        sigma_vertices: BigUint::from(sigma.order()),
        sigma_valency: k,
        h_order: order.clone(),
        aut_hs_order: aut_order.clone(),
        three_arc_regular: exp.three_arc_regular,
    });
    let summary: Vec<String> = identities
        .checks
        .iter()
        .map(|c| format!("{} {} = {} {}", c.name, c.lhs, c.rhs, if c.holds { "ok" } else { "FAILS" }))
        .collect();
    r.stage("identities", identities.all_hold(), summary.join("; "));
    r.identities = Some(identities);

    // Classification.
    let full = opts.tier == Tier::Full && exp.evidence == EvidenceTier::Full;
    if full && gamma.order() <= opts.vertex_cap {
        let autg = automorphism_group_with(&gamma, normalizer.generators(), opts.vertex_cap)?.group;
        let sigma_aut = automorphism_group_with(&sigma, &[], opts.vertex_cap)?.group;
        let normal = autg.normalizes(rep.group());
        r.aut_gamma_order = Some(autg.order());
        r.aut_sigma_order = Some(sigma_aut.order());
        r.normal_cayley = Some(normal);
        let ok = normal && autg.order() == n_order && sigma_aut.order() == autg.order();
        r.stage(
            "full-automorphisms",
            ok,
            format!(
                "|Aut(Γ)| = {}, |Aut(Σ)| = {}, R(H) normal {normal}",
                autg.order(),
                sigma_aut.order()
            ),
        );
        let case = classify_case(&gamma, &autg, EvidenceMode::Full)?;
        r.profile = Some(profile(&gamma, &autg, EvidenceMode::Full)?);
        r.evidence = Some(EvidenceMode::Full);
        r.stage("classify", case.label == exp.case.value, format!("{}", case.label));
        r.case = Some(case);
    } else {
        if full {
            r.skip(
                "full-automorphisms",
                format!("Γ has {} vertices, above the cap {}", gamma.order(), opts.vertex_cap),
            );
        }
        let case = classify_case(&gamma, &normalizer, EvidenceMode::Structural)?;
        r.profile = Some(profile(&gamma, &normalizer, EvidenceMode::Structural)?);
        r.evidence = Some(EvidenceMode::Structural);
        r.stage("classify", case.label == exp.case.value, format!("{} (structural)", case.label));
        r.case = Some(case);
    }
    r.gamma = Some(gamma);
    r.sigma = Some(sigma);
    Ok(rep_out)
}

/// Checks that need no realization of the whole group: `Aut(H,S)` from
/// candidate basis maps in a faithful coset action, and the counting
/// identities at the stated orders.
fn presentation_only(entry: &CatalogEntry, opts: &PipelineOptions, mut r: PipelineReport) -> Result<PipelineReport> {
    let exp = &entry.expected;
    match basis_map_automorphisms(entry, &opts.enumeration) {
        Ok(bm) => {
            let ok = bm.accepted == exp.aut_hs_order.value as usize
                && exp.aut_hs_type.as_ref().is_none_or(|t| bm.named == Some(t.value));
            r.aut_hs_order = Some(BigUint::from(bm.accepted));
            r.aut_hs_type = bm.named;
            r.aut_hs_fingerprint = Some(bm.group.fingerprint());
            r.stage(
                "aut-hs",
                ok,
                format!(
                    "{} of {} basis maps extend to automorphisms, type {}",
                    bm.accepted,
                    bm.candidates,
                    bm.named.map_or("unidentified", |n| n.name())
                ),
            );
            r.basis_maps = Some(bm);
        }
        Err(e) => {
            r.stage("aut-hs", false, format!("{e}"));
        }
    }
    let k = exp.sigma_valency.value;
    let aut_order = r.aut_hs_order.clone().unwrap_or_else(|| BigUint::from(exp.aut_hs_order.value));
    let identities = consistency_identities(&IdentityInputs {
        gamma_vertices: exp.group_order.value.clone(),
        triangles: None,
        q: k.saturating_sub(1),
        sigma_vertices: exp.sigma_order.value.clone(),
        sigma_valency: k,
        h_order: exp.group_order.value.clone(),
        aut_hs_order: aut_order,
        three_arc_regular: exp.three_arc_regular,
    });
    let summary: Vec<String> = identities
        .checks
        .iter()
        .map(|c| format!("{} {} = {}", c.name, c.lhs, c.rhs))
        .collect();
    r.stage("identities", identities.all_hold(), summary.join("; "));
    r.identities = Some(identities);
    Ok(r)
}
