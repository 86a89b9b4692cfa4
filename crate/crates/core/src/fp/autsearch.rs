//! Automorphisms of a realized group that fix a generating set.
//!
//! An automorphism is determined by the images of a generating tuple, and an
//! automorphism preserving `S` sends the tuple into `S`. Candidates are built
//! one tuple entry at a time while the partial map is extended to the
//! subgroup generated so far; the extension must stay a well-defined injective
//! homomorphism that maps elements of `S` into `S` and non-elements outside
//! it. The group of solutions is assembled bottom-up over the tuple, trying one
//! image per orbit of the part of the group already found.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use super::realize::RegularRep;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

const UNDEF: u32 = u32::MAX;

/// Default bound on search nodes before the search gives up.
pub const DEFAULT_NODE_CAP: u64 = 10_000_000;

#[derive(Clone, Debug)]
pub struct AutFixingSet {
    /// The automorphisms acting on the elements of `H`.
    pub group: PermGroup,
    /// The same group acting on `set`, by position.
    pub on_set: PermGroup,
    pub set: Vec<u32>,
    /// The generating tuple in the order it was searched.
    pub tuple: Vec<u32>,
    /// Search nodes visited.
    pub nodes: u64,
}

impl AutFixingSet {
    pub fn order(&self) -> BigUint {
        self.on_set.order()
    }
}

/// `Aut(H, S)` for the realized group `rep`. `tuple` must lie in `set` and
/// generate `H`; `set` must be inverse-closed and avoid the identity.
pub fn aut_fixing_set_search(rep: &RegularRep, set: &[u32], tuple: &[u32], node_cap: u64) -> Result<AutFixingSet> {
    let n = rep.order();
    let mut set: Vec<u32> = set.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.iter().any(|&s| s as usize >= n) {
        return Err(Error::Domain("set element out of range".into()));
    }
    if set.contains(&0) {
        return Err(Error::Contract("set contains the identity".into()));
    }
    let mut index = vec![UNDEF; n];
    for (i, &s) in set.iter().enumerate() {
        index[s as usize] = i as u32;
    }
    if set.iter().any(|&s| index[rep.inverse(s) as usize] == UNDEF) {
        return Err(Error::Contract("set is not closed under inverses".into()));
    }
    if tuple.is_empty() || tuple.iter().any(|&t| (t as usize) >= n || index[t as usize] == UNDEF) {
        return Err(Error::Contract("generating tuple must be a nonempty subset of the set".into()));
    }

    let right: Vec<Permutation> = set.iter().map(|&s| rep.right_perm(s)).collect();
    let orders: Vec<u64> = set.iter().map(|&s| rep.element_order(s)).collect();
    let tuple = greedy_order(n, tuple, &index, &right)?;
    let tuple_idx: Vec<u32> = tuple.iter().map(|&t| index[t as usize]).collect();

    let mut ext = Extender::new(n, &index, &right);
    let mut state = Search {
        ext: &mut ext,
        tuple: &tuple_idx,
        orders: &orders,
        nodes: 0,
        cap: node_cap,
    };

    let k = tuple_idx.len();
    let mut gens_on_set: Vec<Permutation> = Vec::new();
    let mut gens_on_h: Vec<Permutation> = Vec::new();
    for level in (0..k).rev() {
        let found = PermGroup::new(set.len(), gens_on_set.clone())?;
        let fixed = &tuple_idx[..level];
        let below = found.pointwise_stabilizer(&tuple_idx[..=level])?;
        let mut current = found.pointwise_stabilizer(fixed)?;
        let mut reached = current.orbit(tuple_idx[level])?;
        let mut excluded = vec![false; set.len()];
        for y in 0..set.len() as u32 {
            if excluded[y as usize] || reached.binary_search(&y).is_ok() {
                continue;
            }
            if orders[y as usize] != orders[tuple_idx[level] as usize] {
                continue;
            }
            match state.find(level, y)? {
                Some(phi) => {
                    let on_set = Permutation::from_images(
                        set.iter().map(|&s| index[phi[s as usize] as usize]).collect(),
                    )?;
                    check_relators(rep, &phi)?;
                    gens_on_set.push(on_set);
                    gens_on_h.push(Permutation::from_images(phi)?);
                    let found = PermGroup::new(set.len(), gens_on_set.clone())?;
                    current = found.pointwise_stabilizer(fixed)?;
                    reached = current.orbit(tuple_idx[level])?;
                }
                None => {
                    for z in below.orbit(y)? {
                        excluded[z as usize] = true;
                    }
                }
            }
        }
    }

    let nodes = state.nodes;
    let on_set = PermGroup::new(set.len(), gens_on_set)?;
    let group = PermGroup::with_known_order(n, gens_on_h, &on_set.order())?;
    Ok(AutFixingSet {
        group,
        on_set,
        set,
        tuple,
        nodes,
    })
}

/// Reorders the tuple so that each prefix generates as large a subgroup as
/// possible; early levels then constrain the search the most.
fn greedy_order(n: usize, tuple: &[u32], index: &[u32], right: &[Permutation]) -> Result<Vec<u32>> {
    let mut rest: Vec<u32> = tuple.to_vec();
    rest.dedup();
    let mut chosen: Vec<u32> = vec![rest.remove(0)];
    let mut size = span_size(n, &chosen, index, right);
    while !rest.is_empty() {
        let mut best = 0;
        let mut best_size = 0;
        for (i, &t) in rest.iter().enumerate() {
            let mut trial = chosen.clone();
            trial.push(t);
            let s = span_size(n, &trial, index, right);
            if s > best_size {
                best = i;
                best_size = s;
            }
        }
        if best_size == size {
            break;
        }
        chosen.push(rest.remove(best));
        size = best_size;
    }
    if size != n {
        return Err(Error::Contract("tuple does not generate the group".into()));
    }
    Ok(chosen)
}

fn span_size(n: usize, gens: &[u32], index: &[u32], right: &[Permutation]) -> usize {
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = vec![0u32];
    let mut i = 0;
    while i < queue.len() {
        let g = queue[i];
        for &x in gens {
            let h = right[index[x as usize] as usize].image(g);
            if !seen[h as usize] {
                seen[h as usize] = true;
                queue.push(h);
            }
        }
        i += 1;
    }
    queue.len()
}

fn check_relators(rep: &RegularRep, phi: &[u32]) -> Result<()> {
    let images: Vec<u32> = (0..rep.presentation().num_generators() as u32)
        .map(|g| phi[rep.generator(g) as usize])
        .collect();
    match rep.first_failing_relator(&images)? {
        None => Ok(()),
        Some(i) => Err(Error::InvariantViolation(alloc::format!(
            "accepted map violates relator {i}"
        ))),
    }
}

/// A partial homomorphism defined on the subgroup generated by the tuple
/// entries assigned so far.
struct Extender<'a> {
    index: &'a [u32],
    right: &'a [Permutation],
    phi: Vec<u32>,
    used: Vec<bool>,
    elems: Vec<u32>,
    /// Assigned `(generator, image)` positions in the set.
    assigned: Vec<(u32, u32)>,
    marks: Vec<usize>,
}

impl<'a> Extender<'a> {
    fn new(n: usize, index: &'a [u32], right: &'a [Permutation]) -> Self {
        let mut phi = vec![UNDEF; n];
        let mut used = vec![false; n];
        phi[0] = 0;
        used[0] = true;
        Extender {
            index,
            right,
            phi,
            used,
            elems: vec![0],
            assigned: Vec::new(),
            marks: Vec::new(),
        }
    }

    #[inline]
    fn in_set(&self, x: u32) -> bool {
        self.index[x as usize] != UNDEF
    }

    #[inline]
    fn step(&mut self, g: u32, j: usize) -> bool {
        let (x, y) = self.assigned[j];
        let h = self.right[x as usize].image(g);
        let v = self.right[y as usize].image(self.phi[g as usize]);
        let cur = self.phi[h as usize];
        if cur != UNDEF {
            return cur == v;
        }
        if self.used[v as usize] || self.in_set(h) != self.in_set(v) {
            return false;
        }
        self.phi[h as usize] = v;
        self.used[v as usize] = true;
        self.elems.push(h);
        true
    }

    /// Assigns generator `x` the image `y` (positions in the set) and extends
    /// the map; on failure the state is left unchanged.
    fn push(&mut self, x: u32, y: u32) -> bool {
        let mark = self.elems.len();
        self.marks.push(mark);
        self.assigned.push((x, y));
        let j = self.assigned.len() - 1;
        let mut ok = true;
        for i in 0..mark {
            if !self.step(self.elems[i], j) {
                ok = false;
                break;
            }
        }
        let mut i = mark;
        while ok && i < self.elems.len() {
            let g = self.elems[i];
            for jj in 0..=j {
                if !self.step(g, jj) {
                    ok = false;
                    break;
                }
            }
            i += 1;
        }
        if !ok {
            self.pop();
        }
        ok
    }

    fn pop(&mut self) {
        let mark = self.marks.pop().unwrap();
        for &h in &self.elems[mark..] {
            self.used[self.phi[h as usize] as usize] = false;
            self.phi[h as usize] = UNDEF;
        }
        self.elems.truncate(mark);
        self.assigned.pop();
    }
}

struct Search<'a, 'b> {
    ext: &'a mut Extender<'b>,
    tuple: &'a [u32],
    orders: &'a [u64],
    nodes: u64,
    cap: u64,
}

impl Search<'_, '_> {
    /// Looks for an automorphism fixing the first `level` tuple entries and
    /// sending entry `level` to `y`; returns its images on all elements.
    fn find(&mut self, level: usize, y: u32) -> Result<Option<Vec<u32>>> {
        debug_assert!(self.ext.assigned.is_empty());
        for &t in &self.tuple[..level] {
            let ok = self.ext.push(t, t);
            debug_assert!(ok);
        }
        let result = if self.ext.push(self.tuple[level], y) {
            let r = self.extend(level + 1);
            self.ext.pop();
            r
        } else {
            Ok(None)
        };
        for _ in 0..level {
            self.ext.pop();
        }
        result
    }

    fn extend(&mut self, depth: usize) -> Result<Option<Vec<u32>>> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(Error::Unsupported(alloc::format!(
                "automorphism search exceeded {} nodes",
                self.cap
            )));
        }
        if depth == self.tuple.len() {
            return Ok(Some(self.ext.phi.clone()));
        }
        let x = self.tuple[depth];
        for z in 0..self.orders.len() as u32 {
            if self.orders[z as usize] != self.orders[x as usize] || self.ext.used[self.ext.right[z as usize].image(0) as usize] {
                continue;
            }
            if self.ext.push(x, z) {
                let r = self.extend(depth + 1);
                self.ext.pop();
                if let Some(phi) = r? {
                    return Ok(Some(phi));
                }
            }
        }
        Ok(None)
    }
}
