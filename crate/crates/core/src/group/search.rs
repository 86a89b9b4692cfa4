//! Backtrack search for subgroups defined by a property of their elements.

use alloc::vec::Vec;

use num_bigint::BigUint;

use super::{PermGroup, UnionFind};
use crate::error::Result;
use crate::perm::Permutation;

pub(crate) enum Verdict {
    Reject,
    Continue,
    /// Every element of the current coset has the property.
    AcceptCoset,
}

/// Finds `K = { g in G : prop(g) }`, which must be a subgroup.
///
/// `prune(j, images)` sees the images of the first `j + 1` base points and
/// decides whether the coset can contain members of `K`. Cosets are scanned
/// level by level from the bottom of the chain; for each level one candidate
/// per orbit of the already-known part of `K` is tried.
pub(crate) fn subgroup_search<P, F>(
    group: &PermGroup,
    mut prune: P,
    mut prop: F,
    target: Option<&BigUint>,
) -> Result<PermGroup>
where
    P: FnMut(usize, &[u32]) -> Verdict,
    F: FnMut(&Permutation) -> bool,
{
    let n = group.degree;
    let levels = &group.chain.levels;
    let m = levels.len();
    let base = group.base();
    let mut k_gens: Vec<Permutation> = Vec::new();
    let mut k = PermGroup::trivial(n);
    for i in (0..m).rev() {
        if let Some(t) = target {
            if k.order() == *t {
                break;
            }
        }
        // Generators of K fixing b_0..b_i, i.e. of K^(i+1).
        let deeper: Vec<&Permutation> = k_gens
            .iter()
            .filter(|g| base[..=i].iter().all(|&b| g.image(b) == b))
            .collect();
        let mut uf = UnionFind::new(n);
        for g in &deeper {
            for &x in &levels[i].orbit {
                uf.union(x as usize, g.image(x) as usize);
            }
        }
        let mut tried = alloc::vec![false; n];
        let orbit = {
            let mut o = levels[i].orbit.clone();
            o.sort_unstable();
            o
        };
        let mut k_orbit = k_orbit_of_base(&k_gens, &base, i, n);
        for &gamma in &orbit {
            if gamma == base[i] {
                continue;
            }
            // Already realized by K^(i)?
            if k_orbit[gamma as usize] {
                continue;
            }
            let rep = uf.find(gamma as usize);
            if tried[rep] {
                continue;
            }
            tried[rep] = true;
            let mut images: Vec<u32> = base[..i].to_vec();
            images.push(gamma);
            match prune(i, &images) {
                Verdict::Reject => continue,
                Verdict::AcceptCoset => {
                    let cand = levels[i].rep(gamma);
                    if prop(&cand) {
                        k_gens.push(cand);
                        k = rebuild(n, &k_gens, &base)?;
                        k_orbit = k_orbit_of_base(&k_gens, &base, i, n);
                    }
                    continue;
                }
                Verdict::Continue => {}
            }
            let start = levels[i].rep(gamma);
            if let Some(found) = dfs(group, i + 1, &start, &mut images, &mut prune, &mut prop) {
                k_gens.push(found);
                k = rebuild(n, &k_gens, &base)?;
                k_orbit = k_orbit_of_base(&k_gens, &base, i, n);
            }
        }
    }
    Ok(k)
}

fn rebuild(n: usize, gens: &[Permutation], base: &[u32]) -> Result<PermGroup> {
    PermGroup::with_base_prefix(n, gens.to_vec(), base, None)
}

fn k_orbit_of_base(k_gens: &[Permutation], base: &[u32], i: usize, n: usize) -> Vec<bool> {
    let gens: Vec<&Permutation> = k_gens
        .iter()
        .filter(|g| base[..i].iter().all(|&b| g.image(b) == b))
        .collect();
    let mut seen = alloc::vec![false; n];
    seen[base[i] as usize] = true;
    let mut stack = alloc::vec![base[i]];
    while let Some(x) = stack.pop() {
        for g in &gens {
            let y = g.image(x);
            if !seen[y as usize] {
                seen[y as usize] = true;
                stack.push(y);
            }
        }
    }
    seen
}

fn dfs<P, F>(
    group: &PermGroup,
    j: usize,
    partial: &Permutation,
    images: &mut Vec<u32>,
    prune: &mut P,
    prop: &mut F,
) -> Option<Permutation>
where
    P: FnMut(usize, &[u32]) -> Verdict,
    F: FnMut(&Permutation) -> bool,
{
    let levels = &group.chain.levels;
    if j == levels.len() {
        return if prop(partial) { Some(partial.clone()) } else { None };
    }
    let level = &levels[j];
    for &beta in &level.orbit {
        images.push(partial.image(beta));
        let verdict = prune(j, images);
        let result = match verdict {
            Verdict::Reject => None,
            Verdict::AcceptCoset => {
                let cand = level.rep(beta).then(partial);
                if prop(&cand) {
                    Some(cand)
                } else {
                    None
                }
            }
            Verdict::Continue => {
                let next = level.rep(beta).then(partial);
                dfs(group, j + 1, &next, images, prune, prop)
            }
        };
        images.pop();
        if result.is_some() {
            return result;
        }
    }
    None
}

pub(crate) fn setwise_stabilizer(group: &PermGroup, set: &[u32]) -> Result<PermGroup> {
    let n = group.degree;
    let mut in_set = alloc::vec![false; n];
    for &p in set {
        in_set[p as usize] = true;
    }
    let size = in_set.iter().filter(|&&b| b).count();
    // Stabilizing a set is the same as stabilizing its complement.
    let (points, flag): (Vec<u32>, bool) = if size * 2 > n {
        ((0..n as u32).filter(|&x| !in_set[x as usize]).collect(), false)
    } else {
        ((0..n as u32).filter(|&x| in_set[x as usize]).collect(), true)
    };
    if points.is_empty() {
        return Ok(group.clone());
    }
    let member = |x: u32| in_set[x as usize] == flag;
    let order = group.order();
    let g = PermGroup::with_base_prefix(n, group.gens.clone(), &points, Some(&order))?;
    let t = points.len();
    let prune = |j: usize, images: &[u32]| {
        if j >= t {
            return Verdict::AcceptCoset;
        }
        if !member(images[j]) {
            Verdict::Reject
        } else if j + 1 == t {
            Verdict::AcceptCoset
        } else {
            Verdict::Continue
        }
    };
    let sorted: Vec<u32> = {
        let mut s = points.clone();
        s.sort_unstable();
        s
    };
    let prop = |p: &Permutation| p.image_of_set(&sorted) == sorted;
    subgroup_search(&g, prune, prop, None)
}
