//! Case analysis for locally `2K_n` graphs through their clique graphs.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::action::RootedAction;
use super::reference::NamedGroup;
use super::{csh_ch_from, edge_stabilizer, facts, induced_on_sets, local_action_of, Basis, EvidenceMode};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::{GroupFingerprint, PermGroup, ISO_SMALL_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseLabel {
    /// One of the cases 1 to 7 of the classification.
    Case(u8),
    /// The graph is 3-connected-homogeneous, so no case applies.
    ThreeCh,
    NotThreeCsh,
    /// 3-CSH and not 3-CH, but the clique graph fits no case.
    Unmatched,
}

impl core::fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CaseLabel::Case(k) => write!(f, "case {k}"),
            CaseLabel::ThreeCh => f.write_str("3-CH"),
            CaseLabel::NotThreeCsh => f.write_str("not 3-CSH"),
            CaseLabel::Unmatched => f.write_str("unmatched"),
        }
    }
}

/// Stabilizer types identified among the reference groups.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TypeTags {
    pub vertex: Option<NamedGroup>,
    pub edge: Option<NamedGroup>,
}

impl TypeTags {
    /// Vertex stabilizer `S3`, edge stabilizer `C4`.
    pub fn is_type_2_2(&self) -> bool {
        self.vertex == Some(NamedGroup::S3) && self.edge == Some(NamedGroup::C4)
    }

    /// Vertex stabilizer `Frob20 × C2`, edge stabilizer `M16`.
    pub fn is_type_q(&self) -> bool {
        self.vertex == Some(NamedGroup::Frob20xC2) && self.edge == Some(NamedGroup::M16)
    }
}

/// The clique graph and the action induced on it.
#[derive(Clone, Debug)]
pub struct CliqueGraphFacts {
    pub graph: Graph,
    pub group: PermGroup,
    pub valency: Option<usize>,
    pub s_arc_transitive: [bool; 3],
    pub s_arc_regular: [bool; 3],
    pub local_order: BigUint,
    pub local_two_transitive: bool,
    pub local_three_transitive: bool,
    pub local_solvable: bool,
    pub vertex_stabilizer: GroupFingerprint,
    pub edge_stabilizer: Option<GroupFingerprint>,
    pub tags: TypeTags,
}

#[derive(Clone, Debug)]
pub struct CaseReport {
    pub label: CaseLabel,
    pub basis: Basis,
    pub csh3: bool,
    pub ch3: bool,
    pub clique: Option<CliqueGraphFacts>,
}

const TAG_CANDIDATES: [NamedGroup; 9] = [
    NamedGroup::C4,
    NamedGroup::S3,
    NamedGroup::Frob20,
    NamedGroup::Frob20xC2,
    NamedGroup::M16,
    NamedGroup::C4WrC2,
    NamedGroup::A4xC3,
    NamedGroup::C3xC3xC2,
    NamedGroup::C3SqSwap,
];

/// The reference group isomorphic to `g`, if any, for `|g| <= ISO_SMALL_CAP`.
pub fn identify_named(g: &PermGroup) -> Result<Option<NamedGroup>> {
    let Some(order) = g.order().to_u64() else {
        return Ok(None);
    };
    if order > ISO_SMALL_CAP {
        return Ok(None);
    }
    for cand in TAG_CANDIDATES {
        let r = cand.realize()?;
        if r.order() == g.order() && r.is_isomorphic_small(g)? {
            return Ok(Some(cand));
        }
    }
    Ok(None)
}

/// Identifies the vertex and edge stabilizers at vertex 0 and its first neighbour.
pub fn stabilizer_type_tags(g: &Graph, a: &PermGroup) -> Result<TypeTags> {
    let ra = RootedAction::new(g, a, 0)?;
    tags_of(&ra)
}

fn tags_of(ra: &RootedAction<'_>) -> Result<TypeTags> {
    let vertex = identify_named(&ra.stabilizer)?;
    let edge = match ra.graph.neighbors(ra.root).first() {
        Some(&w) => identify_named(&edge_stabilizer(&ra.group, ra.root, w)?)?,
        None => None,
    };
    Ok(TypeTags { vertex, edge })
}

fn clique_graph_facts(g: &Graph, a: &PermGroup) -> Result<CliqueGraphFacts> {
    let cliques = g.maximal_cliques()?;
    let sigma = g.clique_graph()?;
    let group = induced_on_sets(a, &cliques)?;
    let ra = RootedAction::new(&sigma, &group, 0)?;
    let f = facts(&ra, &group)?;
    let local = local_action_of(&ra)?;
    let edge_stab = match sigma.neighbors(0).first() {
        Some(&w) => Some(edge_stabilizer(&ra.group, 0, w)?.fingerprint()),
        None => None,
    };
    let tags = tags_of(&ra)?;
    Ok(CliqueGraphFacts {
        valency: sigma.valency(),
        s_arc_transitive: f.s_arc,
        s_arc_regular: f.s_arc_regular,
        local_order: local.group.order(),
        local_two_transitive: local.two_transitive,
        local_three_transitive: local.three_transitive,
        local_solvable: local.group.is_solvable(),
        vertex_stabilizer: ra.stabilizer.fingerprint(),
        edge_stabilizer: edge_stab,
        tags,
        group: ra.group.clone(),
        graph: sigma,
    })
}

/// `Some(q)` when `k - 1 = q` is an odd prime power with `q ≡ 3 (mod 4)`.
fn case5_field(k: usize) -> Option<u64> {
    let q = k.checked_sub(1)? as u64;
    if q < 3 || q % 4 != 3 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
    }
    (r == 1).then_some(q)
}

fn match_case(c: &CliqueGraphFacts) -> CaseLabel {
    let Some(k) = c.valency else {
        return CaseLabel::Unmatched;
    };
    let local = c.local_order.to_u64();
    let reg3 = c.s_arc_regular[2];
    let tr3 = c.s_arc_transitive[2];
    if k == 4 && reg3 {
        return CaseLabel::Case(1);
    }
    if k == 5 && reg3 {
        return CaseLabel::Case(2);
    }
    if k == 8 && tr3 && matches!(local, Some(56 | 168)) && c.local_solvable {
        return CaseLabel::Case(3);
    }
    if k == 32 && local == Some(4960) {
        return CaseLabel::Case(4);
    }
    if k == 5 && c.tags.is_type_q() {
        return CaseLabel::Case(6);
    }
    if k == 3 && c.tags.is_type_2_2() {
        return CaseLabel::Case(7);
    }
    if let Some(q) = case5_field(k) {
        let need = BigUint::from(q * (q * q - 1) / 2);
        if (&c.local_order % need).is_zero()
            && c.local_two_transitive
            && !c.local_three_transitive
            && !c.local_solvable
        {
            return CaseLabel::Case(5);
        }
    }
    CaseLabel::Unmatched
}

/// Decides which case of the classification a graph falls under, using the
/// action of `a` on its maximal cliques. The graph must be locally `2K_n`
/// for a case label; other graphs get `ThreeCh` or `NotThreeCsh` only.
pub fn classify_case(g: &Graph, a: &PermGroup, mode: EvidenceMode) -> Result<CaseReport> {
    let ra = RootedAction::new(g, a, 0)?;
    let f = facts(&ra, a)?;
    let (csh, ch) = csh_ch_from(&f);
    let basis = match mode {
        EvidenceMode::Full => Basis::Computed,
        EvidenceMode::Structural => Basis::TheoryDerived,
    };
    let report = |label, clique| CaseReport {
        label,
        basis,
        csh3: csh[2],
        ch3: ch[2],
        clique,
    };
    if ch[2] {
        return Ok(report(CaseLabel::ThreeCh, None));
    }
    if !csh[2] {
        return Ok(report(CaseLabel::NotThreeCsh, None));
    }
    if g.locally_2kn().is_none() {
        return Err(Error::Inapplicable("case analysis needs a locally 2K_n graph".into()));
    }
    let clique = clique_graph_facts(g, a)?;
    Ok(report(match_case(&clique), Some(clique)))
}

#[cfg(test)]
mod tests {
    use super::case5_field;

    #[test]
    fn case5_valencies() {
        let got: alloc::vec::Vec<usize> = (0..40).filter(|&k| case5_field(k).is_some()).collect();
        assert_eq!(got, [4, 8, 12, 20, 24, 28, 32]);
    }
}
