//! Regular subgroups and normality of the Cayley structure.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::autgrp::{automorphism_group_with, DEFAULT_VERTEX_CAP};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Search nodes allowed by [`find_regular_subgroup`].
pub const REGULAR_SEARCH_CAP: u64 = 1_000_000;

/// Largest vertex stabilizer enumerated by [`find_regular_subgroup`].
const STABILIZER_ELEMENT_CAP: u64 = 100_000;

/// Whether the regular subgroup `r` is normal in the full automorphism group.
pub fn normal_cayley_check(g: &Graph, r: &PermGroup) -> Result<bool> {
    if r.degree() != g.order() || !r.is_regular() {
        return Err(Error::Inapplicable("the subgroup is not regular on the vertices".into()));
    }
    let aut = automorphism_group_with(g, r.generators(), DEFAULT_VERTEX_CAP)?.group;
    Ok(aut.normalizes(r))
}

/// Every point orbit has length equal to the group order.
fn is_semiregular(h: &PermGroup) -> bool {
    let Some(order) = h.order().to_usize() else {
        return false;
    };
    h.orbits().iter().all(|o| o.len() == order)
}

/// All cycles of equal length.
fn is_semiregular_element(p: &Permutation) -> bool {
    let cycles = p.cycles();
    let len = cycles.first().map_or(1, |c| c.len());
    let moved: usize = cycles.iter().map(|c| c.len()).sum();
    cycles.iter().all(|c| c.len() == len) && (moved == p.degree() || len == 1)
}

/// A subgroup of `aut` acting regularly on the points, if one exists.
/// Exhaustive: grows a semiregular subgroup one element at a time, each new
/// element chosen to reach the first point outside the orbit of point 0.
pub fn find_regular_subgroup(aut: &PermGroup) -> Result<Option<PermGroup>> {
    let n = aut.degree();
    if n == 0 {
        return Ok(None);
    }
    if !aut.is_transitive() {
        return Ok(None);
    }
    let a = aut.with_base(&[0])?;
    let stab = a.point_stabilizer(0)?.elements(STABILIZER_ELEMENT_CAP)?;
    let mut nodes = 0u64;
    grow(&a, &stab, Vec::new(), &mut nodes)
}

fn grow(a: &PermGroup, stab: &[Permutation], gens: Vec<Permutation>, nodes: &mut u64) -> Result<Option<PermGroup>> {
    *nodes += 1;
    if *nodes > REGULAR_SEARCH_CAP {
        return Err(Error::Unsupported(alloc::format!(
            "regular subgroup search exceeded {REGULAR_SEARCH_CAP} nodes"
        )));
    }
    let n = a.degree();
    let r = PermGroup::new(n, gens.clone())?;
    let orbit = r.orbit(0)?;
    if orbit.len() == n {
        return Ok(Some(r));
    }
    let mut covered = alloc::vec![false; n];
    for &x in &orbit {
        covered[x as usize] = true;
    }
    let w = (0..n as u32).find(|&x| !covered[x as usize]).expect("orbit is not everything");
    let t = a.transversal(w).expect("the group is transitive");
    let nbig = BigUint::from(n);
    for h in stab {
        let g = h.then(&t);
        if !is_semiregular_element(&g) {
            continue;
        }
        let mut next = gens.clone();
        next.push(g);
        let candidate = PermGroup::new(n, next.clone())?;
        if &nbig % candidate.order() != BigUint::from(0u32) || !is_semiregular(&candidate) {
            continue;
        }
        if let Some(found) = grow(a, stab, next, nodes)? {
            return Ok(Some(found));
        }
    }
    Ok(None)
}
