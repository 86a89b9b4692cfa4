//! `Aut(H, S)` for `S = (A ∪ B) - {1}` without realizing `H` regularly.
//!
//! `H` is represented faithfully on the cosets of `A`. An automorphism
//! fixing `S` permutes the two cliques `A` and `B` at the identity, so it is
//! determined by an ordered basis of `A` or `B` for the basis of `A`, and one
//! of the other subgroup for the basis of `B`. Such a map is onto because its
//! image contains `A ∪ B`. It is a homomorphism iff every relator holds on the
//! images, where generators defined by an equation `x = w` get the image of
//! `w`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;
use num_bigint::BigUint;

use super::catalog::CatalogEntry;
use crate::classify::reference::NamedGroup;
use crate::error::{Error, Result};
use crate::fp::{coset_action, evaluate_word, EnumOptions, FinitePresentation, Word};
use crate::group::{PermGroup, ISO_SMALL_CAP};
use crate::perm::Permutation;

/// A faithful permutation representation of `H` together with the basis
/// generators of `A` and `B`.
#[derive(Clone, Debug)]
pub struct BasisMapContext {
    presentation: FinitePresentation,
    /// Generator images on the cosets of `A`.
    gens: Vec<Permutation>,
    /// Generator indices of the bases of `A` and `B`, in that order.
    basis: Vec<u32>,
    rank: usize,
    /// Generators given by an equation in earlier ones, in resolution order.
    defined: Vec<(u32, Word)>,
    /// A base of the faithful action: an element of `H` is trivial iff it
    /// fixes these points.
    base: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct BasisMapReport {
    pub degree: usize,
    pub candidates: usize,
    pub accepted: usize,
    /// The accepted maps acting on the elements of `S`.
    pub group: PermGroup,
    pub named: Option<NamedGroup>,
}

fn single_generator(w: &Word) -> Option<u32> {
    match w.syllables() {
        [(g, 1)] => Some(*g),
        _ => None,
    }
}

/// Relators `x * w^-1` with `x` a generator absent from `w` give `x = w`.
pub(crate) fn definitions(p: &FinitePresentation, basis: &[u32]) -> Result<Vec<(u32, Word)>> {
    let mut known: Vec<bool> = (0..p.num_generators() as u32).map(|g| basis.contains(&g)).collect();
    let mut out = Vec::new();
    loop {
        let before = out.len();
        for r in p.relators() {
            let Some(&(x, 1)) = r.syllables().first() else {
                continue;
            };
            let rest = Word::from_syllables(r.syllables()[1..].iter().copied());
            if known[x as usize] || rest.syllables().iter().any(|&(g, _)| !known[g as usize]) {
                continue;
            }
            known[x as usize] = true;
            out.push((x, rest.inverse()));
        }
        if out.len() == before {
            break;
        }
    }
    if let Some(g) = known.iter().position(|&k| !k) {
        return Err(Error::Unsupported(format!(
            "generator {} is not determined by the basis",
            p.generators()[g]
        )));
    }
    Ok(out)
}

impl BasisMapContext {
    pub fn new(entry: &CatalogEntry, opts: &EnumOptions) -> Result<Self> {
        let p = &entry.presentation;
        let basis: Vec<u32> = entry
            .a_words
            .iter()
            .chain(&entry.b_words)
            .map(|w| single_generator(w).ok_or_else(|| Error::Unsupported("basis words must be generators".into())))
            .collect::<Result<_>>()?;
        if entry.a_words.len() != entry.b_words.len() {
            return Err(Error::Structure("A and B need bases of equal size".into()));
        }
        let (table, gens) = coset_action(p, &entry.a_words, opts)?;
        let faithful = PermGroup::with_known_order(table.len(), gens.clone(), &entry.expected.group_order.value);
        let base = match faithful {
            Ok(g) => g.base(),
            Err(Error::InvariantViolation(_)) => {
                return Err(Error::Structure(format!(
                    "the action on {} cosets of A does not have order {}",
                    table.len(),
                    entry.expected.group_order.value
                )))
            }
            Err(e) => return Err(e),
        };
        let defined = definitions(p, &basis)?;
        Ok(BasisMapContext {
            presentation: p.clone(),
            gens,
            rank: entry.a_words.len(),
            basis,
            defined,
            base,
        })
    }

    pub fn degree(&self) -> usize {
        self.gens.first().map_or(0, |g| g.degree())
    }

    fn basis_perms(&self, side: usize) -> Vec<Permutation> {
        self.basis[side * self.rank..(side + 1) * self.rank]
            .iter()
            .map(|&g| self.gens[g as usize].clone())
            .collect()
    }

    /// All generator images from images of the basis.
    fn extend(&self, basis_images: &[Permutation]) -> Result<Vec<Permutation>> {
        let mut images = vec![Permutation::identity(self.degree()); self.gens.len()];
        for (&g, img) in self.basis.iter().zip(basis_images) {
            images[g as usize] = img.clone();
        }
        for (x, w) in &self.defined {
            images[*x as usize] = evaluate_word(w, &images)?;
        }
        Ok(images)
    }

    /// Images lie in `H`, so a relator holds iff its value fixes the base.
    fn relators_hold(&self, images: &[Permutation]) -> Result<bool> {
        let inverses: Vec<Permutation> = images.iter().map(Permutation::inverse).collect();
        for r in self.presentation.relators() {
            for &b in &self.base {
                let mut x = b;
                for &(g, e) in r.syllables() {
                    let p = if e > 0 { &images[g as usize] } else { &inverses[g as usize] };
                    for _ in 0..e.unsigned_abs() {
                        x = p.image(x);
                    }
                }
                if x != b {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Whether the map sending the basis generators to `basis_images`, words
    /// in the generators of `H`, extends to an endomorphism of `H`.
    pub fn is_homomorphism(&self, basis_images: &[Word]) -> Result<bool> {
        if basis_images.len() != self.basis.len() {
            return Err(Error::Structure(format!(
                "expected {} basis images, got {}",
                self.basis.len(),
                basis_images.len()
            )));
        }
        let perms = basis_images
            .iter()
            .map(|w| evaluate_word(w, &self.gens))
            .collect::<Result<Vec<_>>>()?;
        self.relators_hold(&self.extend(&perms)?)
    }
}

/// Elements of the elementary abelian group with the given basis, indexed
/// by exponent vectors in mixed radix `p`.
fn span(basis: &[Permutation], p: u64) -> Vec<Permutation> {
    let mut out = vec![Permutation::identity(basis[0].degree())];
    for b in basis {
        let mut next = Vec::with_capacity(out.len() * p as usize);
        for k in 0..p {
            let bk = b.pow(k as i64);
            next.extend(out.iter().map(|x| x.then(&bk)));
        }
        out = next;
    }
    out
}

/// Ordered bases, as exponent-vector indices into `span`.
fn ordered_bases(elements: &[Permutation], rank: usize) -> Vec<Vec<usize>> {
    let n = elements.len();
    let mut out = Vec::new();
    let mut tuple = Vec::new();
    fn rec(elements: &[Permutation], rank: usize, n: usize, tuple: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if tuple.len() == rank {
            let gens: Vec<Permutation> = tuple.iter().map(|&i| elements[i].clone()).collect();
            let p = elements[1].order();
            let mut seen: Vec<Vec<u32>> = span(&gens, p).into_iter().map(|x| x.images().to_vec()).collect();
            seen.sort_unstable();
            seen.dedup();
            if seen.len() == n {
                out.push(tuple.clone());
            }
            return;
        }
        for i in 1..n {
            if !tuple.contains(&i) {
                tuple.push(i);
                rec(elements, rank, n, tuple, out);
                tuple.pop();
            }
        }
    }
    rec(elements, rank, n, &mut tuple, &mut out);
    out
}

/// Checks every basis map and returns the group of those that are
/// automorphisms, acting on `S`.
pub fn basis_map_automorphisms(entry: &CatalogEntry, opts: &EnumOptions) -> Result<BasisMapReport> {
    let ctx = BasisMapContext::new(entry, opts)?;
    let sides = [ctx.basis_perms(0), ctx.basis_perms(1)];
    let p = sides[0][0].order();
    if !crate::constructions::field::is_prime(p as u32) {
        return Err(Error::Structure("A is not elementary abelian".into()));
    }
    let elems = [span(&sides[0], p), span(&sides[1], p)];
    let bases = ordered_bases(&elems[0], ctx.rank);
    let mut s_index: HashMap<Vec<u32>, u32> = HashMap::new();
    let mut s_elems: Vec<(usize, usize)> = Vec::new();
    for (side, list) in elems.iter().enumerate() {
        for (i, x) in list.iter().enumerate().skip(1) {
            s_index.insert(x.images().to_vec(), s_elems.len() as u32);
            s_elems.push((side, i));
        }
    }
    let mut candidates = 0;
    let mut accepted = Vec::new();
    for swap in [false, true] {
        for ba in &bases {
            for bb in &bases {
                candidates += 1;
                let (ta, tb) = if swap { (1, 0) } else { (0, 1) };
                let images: Vec<Permutation> = ba
                    .iter()
                    .map(|&i| elems[ta][i].clone())
                    .chain(bb.iter().map(|&i| elems[tb][i].clone()))
                    .collect();
                if !ctx.relators_hold(&ctx.extend(&images)?)? {
                    continue;
                }
                // The action on S: the element with exponent vector e on
                // side t goes to the same combination of the images.
                let spans = [span(&images[..ctx.rank], p), span(&images[ctx.rank..], p)];
                let on_s: Vec<u32> = s_elems
                    .iter()
                    .map(|&(side, i)| s_index[spans[side][i].images()])
                    .collect();
                accepted.push(Permutation::from_images(on_s)?);
            }
        }
    }
    let group = PermGroup::new(s_elems.len(), accepted.clone())?;
    if group.order() != BigUint::from(accepted.len()) {
        return Err(Error::InvariantViolation(format!(
            "{} accepted basis maps generate a group of order {}",
            accepted.len(),
            group.order()
        )));
    }
    let named = if accepted.len() as u64 <= ISO_SMALL_CAP {
        crate::constructions::identify(&group)?
    } else {
        None
    };
    Ok(BasisMapReport {
        degree: ctx.degree(),
        candidates,
        accepted: accepted.len(),
        group,
        named,
    })
}
