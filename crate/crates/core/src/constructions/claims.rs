//! Executable checks of individual claims about the catalog groups.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigUint;

use super::basis_maps::definitions;
use crate::autgrp::is_isomorphic;
use crate::error::{Error, Result};
use crate::fp::{RegularRep, Word};
use crate::graph::{families, Graph};
use crate::group::PermGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapCheck {
    /// The map on the two generators, e.g. `a -> b, b -> a^2`.
    pub map: String,
    pub homomorphism: bool,
    /// `None` unless the map is a homomorphism.
    pub bijective: Option<bool>,
    /// The first relator the map violates, as source text.
    pub failing_relator: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionIiClaims {
    /// `a -> b, b -> a^2` is an automorphism.
    pub same_relations: MapCheck,
    /// `a -> b, b -> a` is not.
    pub swap: MapCheck,
    pub identity: MapCheck,
}

impl ConstructionIiClaims {
    pub fn all_hold(&self) -> bool {
        self.same_relations.homomorphism
            && self.same_relations.bijective == Some(true)
            && !self.swap.homomorphism
            && self.swap.failing_relator.is_some()
            && self.identity.homomorphism
            && self.identity.bijective == Some(true)
    }
}

/// Images of every generator when the basis generators `a`, `b` go to the
/// given words and the rest follow their defining equations.
fn extend_images(rep: &RegularRep, basis: &[u32], targets: &[Word]) -> Result<Vec<u32>> {
    let p = rep.presentation();
    let mut images = alloc::vec![0u32; p.num_generators()];
    let gens: Vec<u32> = (0..p.num_generators() as u32).map(|g| rep.generator(g)).collect();
    for (&g, w) in basis.iter().zip(targets) {
        images[g as usize] = rep.evaluate(w, &gens)?;
    }
    for (x, w) in definitions(p, basis)? {
        images[x as usize] = rep.evaluate(&w, &images)?;
    }
    Ok(images)
}

fn check_map(rep: &RegularRep, basis: &[u32], targets: &[&str]) -> Result<MapCheck> {
    let p = rep.presentation();
    let words: Vec<Word> = targets.iter().map(|t| p.parse_word(t)).collect::<Result<_>>()?;
    let images = extend_images(rep, basis, &words)?;
    let failing = rep.first_failing_relator(&images)?;
    let homomorphism = failing.is_none();
    let names = p.generators();
    let map = basis
        .iter()
        .zip(targets)
        .map(|(&g, t)| format!("{} -> {t}", names[g as usize]))
        .collect::<Vec<_>>()
        .join(", ");
    Ok(MapCheck {
        map,
        homomorphism,
        bijective: homomorphism.then(|| rep.endomorphism_perm(&images).is_some()),
        failing_relator: failing.map(|i| p.relators()[i].to_source(names)),
    })
}

/// Checks that `a -> b, b -> a^2` is an automorphism of the realized
/// Construction II group and that swapping `a` and `b` is not.
pub fn construction_ii_claims(rep: &RegularRep) -> Result<ConstructionIiClaims> {
    let p = rep.presentation();
    let basis: Vec<u32> = ["a", "b"]
        .iter()
        .map(|n| {
            p.generator_index(n)
                .ok_or_else(|| Error::Input(format!("presentation has no generator {n}")))
        })
        .collect::<Result<_>>()?;
    Ok(ConstructionIiClaims {
        same_relations: check_map(rep, &basis, &["b", "a^2"])?,
        swap: check_map(rep, &basis, &["b", "a"])?,
        identity: check_map(rep, &basis, &["a", "b"])?,
    })
}

/// For a connected graph of valency greater than 2 with an abelian group of
/// automorphisms acting regularly on edges, confirms the graph is `K_{k,k}`.
pub fn lemma_5_2_check(g: &Graph, group: &PermGroup) -> Result<bool> {
    let k = match g.valency() {
        Some(k) if k > 2 => k,
        _ => return Err(Error::Inapplicable("needs a regular graph of valency greater than 2".into())),
    };
    if !g.is_connected() {
        return Err(Error::Inapplicable("graph is disconnected".into()));
    }
    if group.degree() != g.order() || group.generators().iter().any(|s| !g.preserves_adjacency(s.images())) {
        return Err(Error::Contract("group does not act by automorphisms".into()));
    }
    if !group.is_abelian() {
        return Err(Error::Inapplicable("group is not abelian".into()));
    }
    let edges = g.edges();
    let key = |a: u32, b: u32| if a < b { (a, b) } else { (b, a) };
    let mut orbit = BTreeSet::from([edges[0]]);
    let mut stack = alloc::vec![edges[0]];
    while let Some((a, b)) = stack.pop() {
        for s in group.generators() {
            let e = key(s.image(a), s.image(b));
            if orbit.insert(e) {
                stack.push(e);
            }
        }
    }
    if orbit.len() != edges.len() || group.order() != BigUint::from(edges.len()) {
        return Err(Error::Inapplicable("group is not regular on edges".into()));
    }
    if !is_isomorphic(g, &families::complete_bipartite(k, k))? {
        return Err(Error::InvariantViolation(format!(
            "abelian edge-regular graph of valency {k} is not K_{{{k},{k}}}"
        )));
    }
    Ok(true)
}
