//! Symmetry predicates of a graph relative to a group of automorphisms.
//!
//! Every predicate is decided by orbit counting. With the full automorphism
//! group the answers are exact. With a proper subgroup (structural evidence)
//! positive transitivity answers still hold for the full group, while
//! negative and exact-count answers hold only when the subgroup is the full
//! group; the [`Basis`] tag of each flag records which case applies.

mod action;
mod cases;
mod cayley;
mod identities;
pub mod reference;

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::graph::{Graph, ShapeKind};
use crate::group::{GroupFingerprint, PermGroup};
use crate::perm::Permutation;
use action::{RootedAction, Shape};

pub use cases::{classify_case, identify_named, stabilizer_type_tags, CaseLabel, CaseReport, CliqueGraphFacts, TypeTags};
pub use cayley::{find_regular_subgroup, normal_cayley_check, REGULAR_SEARCH_CAP};
pub use identities::{consistency_identities, IdentityCheck, IdentityInputs, IdentityReport};

/// Seed for the vertex used to cross-check local data.
const CHECK_VERTEX_SEED: u64 = 0x5eed_0c1a;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvidenceMode {
    /// The group is the full automorphism group.
    Full,
    /// The group is a known subgroup of the automorphism group.
    Structural,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    /// Computed from the full automorphism group.
    Computed,
    /// Witnessed by a subgroup, so it holds for the full group as well.
    LowerBound,
    /// Holds if the supplied subgroup is the full automorphism group.
    TheoryDerived,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Flag {
    pub value: bool,
    pub basis: Basis,
}

impl Flag {
    /// A flag that can only become true when the group grows.
    fn monotone(value: bool, mode: EvidenceMode) -> Flag {
        let basis = match (mode, value) {
            (EvidenceMode::Full, _) => Basis::Computed,
            (EvidenceMode::Structural, true) => Basis::LowerBound,
            (EvidenceMode::Structural, false) => Basis::TheoryDerived,
        };
        Flag { value, basis }
    }

    /// A flag that depends on the exact group.
    fn exact(value: bool, mode: EvidenceMode) -> Flag {
        let basis = match mode {
            EvidenceMode::Full => Basis::Computed,
            EvidenceMode::Structural => Basis::TheoryDerived,
        };
        Flag { value, basis }
    }
}

/// Transitivity on vertices, edges and arcs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Transitivity {
    pub vertex: bool,
    pub edge: bool,
    pub arc: bool,
    /// Index `s - 1` for `s = 1, 2, 3`.
    pub s_arc: [bool; 3],
    pub s_arc_regular: [bool; 3],
    pub half_arc: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeodesicFlags {
    pub geodesic_2: bool,
    pub path_2: bool,
    pub geodesic_path_2: bool,
    /// Edge-transitivity of the vertex stabilizer on the complement of the
    /// neighbourhood, when that criterion applies.
    pub local_criterion: Option<bool>,
}

/// The group induced on a neighbourhood by a vertex stabilizer.
#[derive(Clone, Debug)]
pub struct LocalAction {
    pub vertex: u32,
    /// Neighbours in the order used for the induced permutations.
    pub neighbors: Vec<u32>,
    pub group: PermGroup,
    pub kernel_order: BigUint,
    pub two_transitive: bool,
    pub three_transitive: bool,
}

#[derive(Clone, Debug)]
pub struct SymmetryProfile {
    pub mode: EvidenceMode,
    pub group_order: BigUint,
    pub vertex_transitive: Flag,
    pub edge_transitive: Flag,
    pub arc_transitive: Flag,
    pub s_arc_transitive: [Flag; 3],
    pub s_arc_regular: [Flag; 3],
    pub half_arc_transitive: Flag,
    pub geodesic_transitive_2: Flag,
    pub path_transitive_2: Flag,
    pub geodesic_path_transitive_2: Flag,
    pub locally_2kn: Option<usize>,
    pub locally_3_transitive: Flag,
    /// Index `k - 1` for `k = 1, 2, 3`.
    pub csh: [Flag; 3],
    pub ch: [Flag; 3],
    pub vertex_stabilizer: GroupFingerprint,
    pub edge_stabilizer: Option<GroupFingerprint>,
    pub arc_stabilizer: Option<GroupFingerprint>,
    pub local_action: Option<GroupFingerprint>,
    pub local_kernel_order: Option<BigUint>,
    pub solvable: Flag,
    /// Vertex used to cross-check local data, and whether it agreed with vertex 0.
    pub check_vertex: Option<(u32, bool)>,
}

/// Permutation of the edge `{u, w}` stabilizer: `A_{uw}` plus a swap if any.
pub fn edge_stabilizer(group: &PermGroup, u: u32, w: u32) -> Result<PermGroup> {
    let g = group.with_base(&[u, w])?;
    let arc = g.pointwise_stabilizer(&[u, w])?;
    let mut gens = arc.generators().to_vec();
    if let Some(t) = g.transversal(w) {
        // Elements mapping u to w are h·t with h fixing u; need w^h = u^(t^-1).
        let x = t.inverse().image(u);
        let stab_u = g.point_stabilizer(u)?.with_base(&[w])?;
        let h = if x == w { Some(stab_u.identity()) } else { stab_u.transversal(x) };
        if let Some(h) = h {
            gens.push(h.then(&t));
        }
    }
    let order = arc.order() * BigUint::from(if gens.len() > arc.generators().len() { 2u32 } else { 1 });
    PermGroup::with_known_order(group.degree(), gens, &order)
}

/// Orders `t` such that the group is `t`-transitive, up to `max`.
fn transitivity_degree(group: &PermGroup, points: usize, max: usize) -> Result<usize> {
    let mut fixed: Vec<u32> = Vec::new();
    let mut g = group.clone();
    for t in 0..max.min(points) {
        let p = t as u32;
        let orbit = g.orbit(p)?;
        if orbit.len() != points - t {
            return Ok(t);
        }
        fixed.push(p);
        g = group.pointwise_stabilizer(&fixed)?;
    }
    Ok(max)
}

pub fn local_action(g: &Graph, a: &PermGroup, u: u32) -> Result<LocalAction> {
    let ra = RootedAction::new(g, a, u)?;
    local_action_of(&ra)
}

fn local_action_of(ra: &RootedAction<'_>) -> Result<LocalAction> {
    let neighbors = ra.graph.neighbors(ra.root).to_vec();
    let k = neighbors.len();
    if k == 0 {
        return Ok(LocalAction {
            vertex: ra.root,
            neighbors,
            group: PermGroup::trivial(0),
            kernel_order: ra.stabilizer.order(),
            two_transitive: true,
            three_transitive: true,
        });
    }
    let blocks: Vec<Vec<u32>> = neighbors.iter().map(|&w| vec![w]).collect();
    let (group, kernel) = ra.stabilizer.induced_action(&blocks)?;
    let t = transitivity_degree(&group, k, 3)?;
    Ok(LocalAction {
        vertex: ra.root,
        neighbors,
        group,
        kernel_order: kernel.order(),
        two_transitive: t >= 2,
        three_transitive: t >= 3,
    })
}

fn orbit_count_global(g: &Graph, a: &PermGroup, shape: Shape) -> Result<usize> {
    let tuples: Vec<Vec<u32>> = match shape {
        Shape::Edge => g.edges().into_iter().map(|(u, v)| vec![u, v]).collect(),
        Shape::Kind(k) => g.enumerate_shapes(k)?.tuples,
    };
    if tuples.is_empty() {
        return Ok(0);
    }
    let index: hashbrown::HashMap<&[u32], usize> = tuples.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
    let mut uf = crate::group::UnionFind::new(tuples.len());
    let mut img = Vec::new();
    for (i, t) in tuples.iter().enumerate() {
        for p in a.generators() {
            img.clear();
            img.extend(t.iter().map(|&x| p.image(x)));
            shape.normalize(&mut img);
            let j = *index
                .get(img.as_slice())
                .ok_or_else(|| Error::Contract("group does not preserve the shapes".into()))?;
            uf.union(i, j);
        }
    }
    Ok(uf.classes().len())
}

/// Everything decided from one rooted action.
struct Facts {
    vt: bool,
    edge: bool,
    arc: bool,
    s_arc: [bool; 3],
    s_arc_regular: [bool; 3],
    geodesic_2: bool,
    geodesic_arcs: bool,
    path_2: bool,
    geodesic_path_2: bool,
    triangle: bool,
    ordered_triangle: bool,
    local_criterion: Option<bool>,
}

fn transitive(ra: &RootedAction<'_>, a: &PermGroup, shape: Shape) -> Result<bool> {
    if ra.vertex_transitive {
        ra.transitive_on(shape)
    } else {
        Ok(orbit_count_global(ra.graph, a, shape)? <= 1)
    }
}

fn facts(ra: &RootedAction<'_>, a: &PermGroup) -> Result<Facts> {
    let g = ra.graph;
    let vt = ra.vertex_transitive;
    let edge = transitive(ra, a, Shape::Edge)?;
    let mut s_arc = [false; 3];
    let mut s_arc_regular = [false; 3];
    let regular = g.valency().is_some();
    for s in 1..=3 {
        let t = regular && vt && transitive(ra, a, Shape::Kind(ShapeKind::Arc(s)))?;
        s_arc[s - 1] = t;
        if t && vt {
            let count = BigUint::from(g.order()) * BigUint::from(ra.shapes_per_root(Shape::Kind(ShapeKind::Arc(s)))?);
            s_arc_regular[s - 1] = count == a.order();
        }
    }
    let arc = vt && transitive(ra, a, Shape::Kind(ShapeKind::Arc(1)))?;
    let has_geodesic = if vt {
        !g.shapes_at(ShapeKind::Geodesic2, ra.root)?.is_empty()
    } else {
        !g.enumerate_shapes(ShapeKind::Geodesic2)?.is_empty()
    };
    let geodesic_arcs = transitive(ra, a, Shape::Kind(ShapeKind::Geodesic2))?;
    let geodesic_2 = has_geodesic && vt && arc && geodesic_arcs;
    let path_2 = transitive(ra, a, Shape::Kind(ShapeKind::Path2))?;
    let geodesic_path_2 = transitive(ra, a, Shape::Kind(ShapeKind::InducedPathTriple))?;
    let triangle = transitive(ra, a, Shape::Kind(ShapeKind::Triangle))?;
    let ordered_triangle = transitive(ra, a, Shape::Kind(ShapeKind::OrderedTriangle))?;

    let local_criterion = if vt && g.is_connected() && g.valency().is_some_and(|k| k >= 2) {
        Some(stabilizer_edge_transitive_on_local_complement(ra)?)
    } else {
        None
    };
    if let Some(local) = local_criterion {
        if local != geodesic_path_2 {
            return Err(Error::InvariantViolation(alloc::format!(
                "2-geodesic-path transitivity is {geodesic_path_2} globally but {local} by the local criterion"
            )));
        }
    }
    Ok(Facts {
        vt,
        edge,
        arc,
        s_arc,
        s_arc_regular,
        geodesic_2,
        geodesic_arcs,
        path_2,
        geodesic_path_2,
        triangle,
        ordered_triangle,
        local_criterion,
    })
}

/// Whether `A_u` is transitive on the non-adjacent pairs inside `Γ(u)`.
fn stabilizer_edge_transitive_on_local_complement(ra: &RootedAction<'_>) -> Result<bool> {
    let g = ra.graph;
    let nb = g.neighbors(ra.root);
    let mut pairs: Vec<Vec<u32>> = Vec::new();
    for (i, &x) in nb.iter().enumerate() {
        for &y in &nb[i + 1..] {
            if !g.adjacent(x, y) {
                pairs.push(vec![x, y]);
            }
        }
    }
    if pairs.is_empty() {
        return Ok(true);
    }
    let index: hashbrown::HashMap<&[u32], usize> = pairs.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
    let mut uf = crate::group::UnionFind::new(pairs.len());
    let mut img = Vec::new();
    for (i, t) in pairs.iter().enumerate() {
        for p in ra.stabilizer.generators() {
            img.clear();
            img.extend(t.iter().map(|&x| p.image(x)));
            img.sort_unstable();
            uf.union(i, index[img.as_slice()]);
        }
    }
    Ok(uf.classes().len() == 1)
}

pub fn transitivity_profile(g: &Graph, a: &PermGroup) -> Result<Transitivity> {
    let ra = RootedAction::new(g, a, 0)?;
    let f = facts(&ra, a)?;
    Ok(Transitivity {
        vertex: f.vt,
        edge: f.edge,
        arc: f.arc,
        s_arc: f.s_arc,
        s_arc_regular: f.s_arc_regular,
        half_arc: f.vt && f.edge && !f.arc,
    })
}

/// 2-geodesic, 2-path and 2-geodesic-path transitivity. The last is also
/// decided by the local criterion, and a disagreement is an error.
pub fn geodesic_and_path_transitivity(g: &Graph, a: &PermGroup) -> Result<GeodesicFlags> {
    let ra = RootedAction::new(g, a, 0)?;
    let f = facts(&ra, a)?;
    Ok(GeodesicFlags {
        geodesic_2: f.geodesic_2,
        path_2: f.path_2,
        geodesic_path_2: f.geodesic_path_2,
        local_criterion: f.local_criterion,
    })
}

fn csh_ch_from(f: &Facts) -> ([bool; 3], [bool; 3]) {
    let csh2 = f.vt && f.edge;
    let ch2 = f.vt && f.arc;
    let csh3 = csh2 && f.geodesic_path_2 && f.triangle;
    let ch3 = ch2 && csh3 && f.geodesic_arcs && f.ordered_triangle;
    ([f.vt, csh2, csh3], [f.vt, ch2, ch3])
}

/// `(k-CSH, k-CH)` for `k <= 3`.
pub fn csh_ch_status(g: &Graph, a: &PermGroup, k: usize) -> Result<(bool, bool)> {
    if !(1..=3).contains(&k) {
        return Err(Error::Domain(alloc::format!("connected-homogeneity is decided for k <= 3, not {k}")));
    }
    let ra = RootedAction::new(g, a, 0)?;
    let f = facts(&ra, a)?;
    let (csh, ch) = csh_ch_from(&f);
    Ok((csh[k - 1], ch[k - 1]))
}

/// The full profile. `mode` states whether `a` is the full automorphism group.
pub fn profile(g: &Graph, a: &PermGroup, mode: EvidenceMode) -> Result<SymmetryProfile> {
    if g.order() == 0 {
        return Err(Error::Input("empty graph".into()));
    }
    let ra = RootedAction::new(g, a, 0)?;
    let f = facts(&ra, a)?;
    let (csh, ch) = csh_ch_from(&f);
    let local = local_action_of(&ra)?;
    let u = ra.root;
    let edge_stab = match g.neighbors(u).first() {
        Some(&w) => Some(edge_stabilizer(&ra.group, u, w)?),
        None => None,
    };
    let arc_stab = match g.neighbors(u).first() {
        Some(&w) => Some(ra.group.pointwise_stabilizer(&[u, w])?),
        None => None,
    };
    let check_vertex = if g.order() > 1 {
        let mut rng = ChaCha8Rng::seed_from_u64(CHECK_VERTEX_SEED);
        let v = 1 + (rng.next_u64() % (g.order() as u64 - 1)) as u32;
        let rb = RootedAction::new(g, a, v)?;
        let lb = local_action_of(&rb)?;
        let agree = rb.stabilizer.order() == ra.stabilizer.order()
            && lb.group.order() == local.group.order()
            && lb.kernel_order == local.kernel_order;
        Some((v, agree))
    } else {
        None
    };
    let m = |v| Flag::monotone(v, mode);
    let e = |v| Flag::exact(v, mode);
    let half = f.vt && f.edge && !f.arc;
    Ok(SymmetryProfile {
        mode,
        group_order: a.order(),
        vertex_transitive: m(f.vt),
        edge_transitive: m(f.edge),
        arc_transitive: m(f.arc),
        s_arc_transitive: f.s_arc.map(m),
        s_arc_regular: f.s_arc_regular.map(e),
        half_arc_transitive: e(half),
        geodesic_transitive_2: m(f.geodesic_2),
        path_transitive_2: m(f.path_2),
        geodesic_path_transitive_2: m(f.geodesic_path_2),
        locally_2kn: g.locally_2kn(),
        locally_3_transitive: m(local.three_transitive && f.vt),
        csh: csh.map(m),
        ch: ch.map(m),
        vertex_stabilizer: ra.stabilizer.fingerprint(),
        edge_stabilizer: edge_stab.map(|s| s.fingerprint()),
        arc_stabilizer: arc_stab.map(|s| s.fingerprint()),
        local_action: Some(local.group.fingerprint()),
        local_kernel_order: Some(local.kernel_order),
        solvable: e(a.is_solvable()),
        check_vertex,
    })
}

/// Induced action on a family of vertex sets (for example maximal cliques).
/// `order` is the order of `a`; the action must be faithful.
pub fn induced_on_sets(a: &PermGroup, sets: &[Vec<u32>]) -> Result<PermGroup> {
    let index: hashbrown::HashMap<&[u32], u32> = sets.iter().enumerate().map(|(i, s)| (s.as_slice(), i as u32)).collect();
    let mut gens = Vec::with_capacity(a.generators().len());
    let mut img: Vec<u32> = Vec::new();
    for p in a.generators() {
        let mut images = Vec::with_capacity(sets.len());
        for s in sets {
            img.clear();
            img.extend(s.iter().map(|&x| p.image(x)));
            img.sort_unstable();
            let j = *index
                .get(img.as_slice())
                .ok_or_else(|| Error::Contract("group does not permute the sets".into()))?;
            images.push(j);
        }
        gens.push(Permutation::from_images(images)?);
    }
    PermGroup::with_known_order(sets.len(), gens, &a.order()).map_err(|e| match e {
        Error::InvariantViolation(_) => Error::Structure("action on the sets is not faithful".into()),
        other => other,
    })
}

#[cfg(test)]
mod tests;
