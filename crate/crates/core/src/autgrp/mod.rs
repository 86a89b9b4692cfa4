//! Graph automorphism groups and canonical forms by individualization and
//! refinement.
//!
//! The search tree starts from the degree partition refined to an equitable
//! one. A node individualizes a vertex of the first smallest non-singleton
//! cell and refines again. Automorphisms come from comparing leaves with the
//! first leaf; whole subtrees are skipped using the group found so far.

mod partition;

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::PermGroup;
use crate::perm::Permutation;
use partition::Partition;

/// Largest graph the search accepts by default.
pub const DEFAULT_VERTEX_CAP: usize = 5000;
/// Search nodes allowed before giving up.
pub const DEFAULT_SEARCH_NODE_CAP: u64 = 10_000_000;

#[derive(Clone, Debug)]
pub struct Automorphisms {
    pub group: PermGroup,
    /// Search-tree nodes visited.
    pub nodes: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    /// Canonical position of each vertex.
    pub labeling: Vec<u32>,
    /// Adjacency of the relabeled graph. Two graphs are isomorphic iff their
    /// certificates are equal.
    pub certificate: Vec<u8>,
}

pub fn automorphism_group(g: &Graph) -> Result<Automorphisms> {
    automorphism_group_with(g, &[], DEFAULT_VERTEX_CAP)
}

/// Automorphism group, seeded with automorphisms already known (checked).
pub fn automorphism_group_with(g: &Graph, seeds: &[Permutation], vertex_cap: usize) -> Result<Automorphisms> {
    let n = g.order();
    if n > vertex_cap {
        return Err(Error::Unsupported(alloc::format!(
            "automorphism search is limited to {vertex_cap} vertices, graph has {n}"
        )));
    }
    for s in seeds {
        if s.degree() != n || !g.preserves_adjacency(s.images()) {
            return Err(Error::Contract("seed is not an automorphism of the graph".into()));
        }
    }
    let mut search = Search::new(g);
    let group = search.automorphisms(seeds.to_vec())?;
    Ok(Automorphisms {
        group,
        nodes: search.nodes,
    })
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let aut = automorphism_group(g)?;
    canonical_form_with(g, &aut.group)
}

/// Canonical form given the full automorphism group of `g`.
pub fn canonical_form_with(g: &Graph, aut: &PermGroup) -> Result<CanonicalForm> {
    if aut.degree() != g.order() {
        return Err(Error::Structure("group degree differs from graph order".into()));
    }
    let mut search = Search::new(g);
    let root = search.root();
    let mut best: Option<Best> = None;
    let trace = vec![root.invariant(g)];
    search.canonical_dfs(&root, &mut Vec::new(), trace, aut, &mut best)?;
    let best = best.expect("the search tree has a leaf");
    let mut certificate = Vec::with_capacity(4 * best.adjacency.len() + 4);
    certificate.extend_from_slice(&(g.order() as u32).to_le_bytes());
    for x in &best.adjacency {
        certificate.extend_from_slice(&x.to_le_bytes());
    }
    Ok(CanonicalForm {
        labeling: best.labeling,
        certificate,
    })
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.size() != b.size() {
        return Ok(false);
    }
    let mut da: Vec<usize> = (0..a.order() as u32).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.order() as u32).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(canonical_form(a)?.certificate == canonical_form(b)?.certificate)
}

struct Best {
    trace: Vec<u64>,
    adjacency: Vec<u32>,
    labeling: Vec<u32>,
}

/// One node of the first path.
struct PathNode {
    part: Partition,
    target: Vec<u32>,
    chosen: u32,
}

struct Search<'g> {
    g: &'g Graph,
    nodes: u64,
    node_cap: u64,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph) -> Self {
        Search {
            g,
            nodes: 0,
            node_cap: DEFAULT_SEARCH_NODE_CAP,
        }
    }

    fn root(&self) -> Partition {
        let mut p = Partition::by_degree(self.g);
        let starts = p.cell_starts();
        p.refine(self.g, &starts);
        p
    }

    fn child(&mut self, p: &Partition, v: u32) -> Result<Partition> {
        self.nodes += 1;
        if self.nodes > self.node_cap {
            return Err(Error::Unsupported(alloc::format!(
                "automorphism search exceeded {} nodes",
                self.node_cap
            )));
        }
        let mut c = p.clone();
        let s = c.individualize(v);
        c.refine(self.g, &[s]);
        Ok(c)
    }

    fn automorphisms(&mut self, seeds: Vec<Permutation>) -> Result<PermGroup> {
        let n = self.g.order();
        let mut gens: Vec<Permutation> = seeds.into_iter().filter(|s| !s.is_identity()).collect();
        let mut found = PermGroup::new(n, gens.clone())?;

        // First path, always taking the first vertex of the target cell.
        let mut path: Vec<PathNode> = Vec::new();
        let mut invariants = Vec::new();
        let mut cur = self.root();
        while let Some(t) = cur.target_cell() {
            let target = cur.cell(t).to_vec();
            let chosen = target[0];
            let next = self.child(&cur, chosen)?;
            invariants.push(next.invariant(self.g));
            path.push(PathNode {
                part: cur,
                target,
                chosen,
            });
            cur = next;
        }
        let zeta = cur.elems;
        let chosen: Vec<u32> = path.iter().map(|p| p.chosen).collect();

        for level in (0..path.len()).rev() {
            let prefix = &chosen[..level];
            let mut targets = path[level].target.clone();
            targets.sort_unstable();
            let mut excluded = vec![false; n];
            let mut stab = found.pointwise_stabilizer(prefix)?;
            let mut orbit = membership(n, &stab.orbit(chosen[level])?);
            for &w in &targets {
                if orbit[w as usize] || excluded[w as usize] {
                    continue;
                }
                let node = self.child(&path[level].part, w)?;
                let mut seq = prefix.to_vec();
                seq.push(w);
                match self.find_equivalent(&node, &mut seq, &invariants, &zeta, &found)? {
                    Some(gamma) => {
                        gens.push(gamma);
                        found = PermGroup::new(n, gens.clone())?;
                        stab = found.pointwise_stabilizer(prefix)?;
                        orbit = membership(n, &stab.orbit(chosen[level])?);
                    }
                    None => {
                        for x in stab.orbit(w)? {
                            excluded[x as usize] = true;
                        }
                    }
                }
            }
        }
        Ok(found)
    }

    /// Looks below `node` for a leaf `λ` such that `ζ ↦ λ` is an automorphism.
    /// Children are compared with the first path by their invariants, and
    /// children in one orbit of the stabilizer of `seq` are tried once.
    fn find_equivalent(
        &mut self,
        node: &Partition,
        seq: &mut Vec<u32>,
        invariants: &[u64],
        zeta: &[u32],
        found: &PermGroup,
    ) -> Result<Option<Permutation>> {
        let depth = seq.len();
        if node.invariant(self.g) != invariants[depth - 1] {
            return Ok(None);
        }
        let Some(t) = node.target_cell() else {
            let mut images = vec![0u32; zeta.len()];
            for (i, &v) in zeta.iter().enumerate() {
                images[v as usize] = node.elems[i];
            }
            return self
                .g
                .preserves_adjacency(&images)
                .then(|| Permutation::from_images(images))
                .transpose();
        };
        if depth >= invariants.len() {
            return Ok(None);
        }
        let mut cell = node.cell(t).to_vec();
        cell.sort_unstable();
        let mut stab: Option<PermGroup> = None;
        let mut skip = vec![false; zeta.len()];
        for &u in &cell {
            if skip[u as usize] {
                continue;
            }
            let c = self.child(node, u)?;
            seq.push(u);
            let r = self.find_equivalent(&c, seq, invariants, zeta, found)?;
            seq.pop();
            if r.is_some() {
                return Ok(r);
            }
            if stab.is_none() {
                stab = Some(found.pointwise_stabilizer(seq)?);
            }
            for x in stab.as_ref().unwrap().orbit(u)? {
                skip[x as usize] = true;
            }
        }
        Ok(None)
    }

    fn canonical_dfs(
        &mut self,
        node: &Partition,
        seq: &mut Vec<u32>,
        trace: Vec<u64>,
        aut: &PermGroup,
        best: &mut Option<Best>,
    ) -> Result<()> {
        if let Some(b) = best.as_ref() {
            let k = trace.len().min(b.trace.len());
            if trace[..k] < b.trace[..k] {
                return Ok(());
            }
        }
        let Some(t) = node.target_cell() else {
            let labeling = node.positions().to_vec();
            let adjacency = relabeled_adjacency(self.g, node);
            let better = match best.as_ref() {
                None => true,
                Some(b) => match trace.cmp(&b.trace) {
                    Ordering::Greater => true,
                    Ordering::Less => false,
                    Ordering::Equal => adjacency > b.adjacency,
                },
            };
            if better {
                *best = Some(Best {
                    trace,
                    adjacency,
                    labeling,
                });
            }
            return Ok(());
        };
        let stab = aut.pointwise_stabilizer(seq)?;
        let mut cell = node.cell(t).to_vec();
        cell.sort_unstable();
        let mut seen = vec![false; self.g.order()];
        for &u in &cell {
            if seen[u as usize] {
                continue;
            }
            for x in stab.orbit(u)? {
                seen[x as usize] = true;
            }
            let c = self.child(node, u)?;
            let mut tr = trace.clone();
            tr.push(c.invariant(self.g));
            seq.push(u);
            self.canonical_dfs(&c, seq, tr, aut, best)?;
            seq.pop();
        }
        Ok(())
    }
}

fn membership(n: usize, points: &[u32]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &p in points {
        m[p as usize] = true;
    }
    m
}

/// Rows of the relabeled graph in canonical order, each as its degree
/// followed by the sorted neighbour positions.
fn relabeled_adjacency(g: &Graph, leaf: &Partition) -> Vec<u32> {
    let pos = leaf.positions();
    let mut out = Vec::with_capacity(g.order() + 2 * g.size());
    let mut row = Vec::new();
    for &v in &leaf.elems {
        row.clear();
        row.extend(g.neighbors(v).iter().map(|&w| pos[w as usize]));
        row.sort_unstable();
        out.push(row.len() as u32);
        out.extend_from_slice(&row);
    }
    out
}

#[cfg(test)]
mod tests;
