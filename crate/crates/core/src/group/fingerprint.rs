//! Isomorphism invariants and exact isomorphism for small groups.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

use super::PermGroup;
use crate::error::{Error, Result};
use crate::perm::Permutation;

pub(crate) const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;
const SAMPLE_SIZE: usize = 10_000;
const SAMPLE_SEED: u64 = 0xf1e6_e5a1;

/// Largest order accepted by [`PermGroup::is_isomorphic_small`].
pub const ISO_SMALL_CAP: u64 = 256;

/// Invariant factors of a finite abelian group, as prime powers sorted ascending.
pub type AbelianInvariants = Vec<u64>;

/// Isomorphism invariants of a permutation group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFingerprint {
    pub order: BigUint,
    /// `(element order, count)` pairs sorted by element order.
    pub element_orders: Vec<(u64, u64)>,
    /// True when `element_orders` comes from random sampling.
    pub sampled: bool,
    pub center_order: Option<u64>,
    /// Abelianization as prime-power cyclic factors.
    pub abelian_invariants: Option<AbelianInvariants>,
    /// `None` when the group is not solvable.
    pub derived_length: Option<usize>,
}

impl GroupFingerprint {
    pub fn is_partial(&self) -> bool {
        self.sampled
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn fingerprint(g: &PermGroup, cap: u64) -> GroupFingerprint {
    let order = g.order();
    let derived = g.derived_series();
    let derived_length = if derived.last().unwrap().is_trivial() {
        Some(derived.len() - 1)
    } else {
        None
    };
    let small = order.to_u64().filter(|&o| o <= cap);
    match small {
        Some(_) => {
            let elements = g.elements(cap).expect("order within cap");
            let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
            for e in &elements {
                *counts.entry(e.order()).or_insert(0) += 1;
            }
            let center = elements
                .iter()
                .filter(|e| g.gens.iter().all(|s| e.then(s) == s.then(e)))
                .count() as u64;
            let commutator = if derived.len() > 1 {
                derived[1].clone()
            } else {
                g.clone()
            };
            let invariants = abelian_invariants(g, &commutator, &elements);
            GroupFingerprint {
                order,
                element_orders: counts.into_iter().collect(),
                sampled: false,
                center_order: Some(center),
                abelian_invariants: Some(invariants),
                derived_length,
            }
        }
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
            let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
            for _ in 0..SAMPLE_SIZE {
                *counts.entry(g.random_element(&mut rng).order()).or_insert(0) += 1;
            }
            GroupFingerprint {
                order,
                element_orders: counts.into_iter().collect(),
                sampled: true,
                center_order: None,
                abelian_invariants: None,
                derived_length,
            }
        }
    }
}

/// For each prime `p`, `#{g : g^(p^k) in G'} / |G'|` is the size of the
/// `p^k`-torsion of `G/G'`, from which the cyclic factors follow.
fn abelian_invariants(g: &PermGroup, commutator: &PermGroup, elements: &[Permutation]) -> Vec<u64> {
    let quotient = (g.order() / commutator.order()).to_u64().unwrap_or(0);
    let derived_order = commutator.order().to_u64().unwrap_or(1);
    let mut out = Vec::new();
    for p in prime_factors(quotient) {
        let mut exps: Vec<u32> = Vec::new(); // log_p |A[p^k]| for k = 0, 1, ...
        exps.push(0);
        let mut pk = 1u64;
        let mut part = 1u64;
        let mut q = quotient;
        while q.is_multiple_of(p) {
            q /= p;
            part *= p;
        }
        loop {
            pk *= p;
            let count = elements
                .iter()
                .filter(|e| commutator.contains(&e.pow(pk as i64)))
                .count() as u64
                / derived_order;
            let mut e = 0;
            let mut c = count;
            while c > 1 {
                c /= p;
                e += 1;
            }
            exps.push(e);
            if count == part {
                break;
            }
        }
        // d_k = #{factors with exponent >= k}
        let d: Vec<u32> = exps.windows(2).map(|w| w[1] - w[0]).collect();
        for k in 1..=d.len() {
            let here = d[k - 1] - d.get(k).copied().unwrap_or(0);
            for _ in 0..here {
                out.push(p.pow(k as u32));
            }
        }
    }
    out.sort_unstable();
    out
}

pub(crate) fn is_isomorphic_small(a: &PermGroup, b: &PermGroup) -> Result<bool> {
    let oa = a.order().to_u64().filter(|&o| o <= ISO_SMALL_CAP);
    let ob = b.order().to_u64().filter(|&o| o <= ISO_SMALL_CAP);
    let (oa, ob) = match (oa, ob) {
        (Some(x), Some(y)) => (x, y),
        _ => {
            return Err(Error::Unsupported(alloc::format!(
                "isomorphism test limited to order {ISO_SMALL_CAP}"
            )))
        }
    };
    if oa != ob {
        return Ok(false);
    }
    if a.fingerprint() != b.fingerprint() {
        return Ok(false);
    }
    let ea = a.elements(ISO_SMALL_CAP)?;
    let eb = b.elements(ISO_SMALL_CAP)?;
    let ia: HashMap<&Permutation, usize> = ea.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let ib: HashMap<&Permutation, usize> = eb.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let id_a = ia[&a.identity()];
    let id_b = ib[&b.identity()];

    // Greedy generating set, largest element orders first.
    let mut by_order: Vec<usize> = (0..ea.len()).collect();
    by_order.sort_by_key(|&i| core::cmp::Reverse(ea[i].order()));
    let mut gens: Vec<usize> = Vec::new();
    let mut span: HashSet<usize> = HashSet::new();
    span.insert(id_a);
    for &i in &by_order {
        if span.len() == ea.len() {
            break;
        }
        if span.contains(&i) {
            continue;
        }
        gens.push(i);
        span = closure(&ea, &ia, &gens, id_a);
    }

    let order_b: Vec<u64> = eb.iter().map(|e| e.order()).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let o = ea[g].order();
            (0..eb.len()).filter(|&j| order_b[j] == o).collect()
        })
        .collect();
    let mut assignment: Vec<usize> = Vec::new();
    Ok(extend_assignment(
        &ea, &ia, &eb, &ib, &gens, &candidates, &mut assignment, id_a, id_b,
    ))
}

fn closure(
    elements: &[Permutation],
    index: &HashMap<&Permutation, usize>,
    gens: &[usize],
    identity: usize,
) -> HashSet<usize> {
    let mut seen = HashSet::new();
    seen.insert(identity);
    let mut queue = vec![identity];
    while let Some(x) = queue.pop() {
        for &g in gens {
            let y = index[&elements[x].then(&elements[g])];
            if seen.insert(y) {
                queue.push(y);
            }
        }
    }
    seen
}

#[allow(clippy::too_many_arguments)]
fn extend_assignment(
    ea: &[Permutation],
    ia: &HashMap<&Permutation, usize>,
    eb: &[Permutation],
    ib: &HashMap<&Permutation, usize>,
    gens: &[usize],
    candidates: &[Vec<usize>],
    assignment: &mut Vec<usize>,
    id_a: usize,
    id_b: usize,
) -> bool {
    if !consistent_on_span(ea, ia, eb, ib, gens, assignment, id_a, id_b) {
        return false;
    }
    let j = assignment.len();
    if j == gens.len() {
        return true;
    }
    for &c in &candidates[j] {
        assignment.push(c);
        if extend_assignment(ea, ia, eb, ib, gens, candidates, assignment, id_a, id_b) {
            return true;
        }
        assignment.pop();
    }
    false
}

/// Extends the assignment along the subgroup spanned by the assigned
/// generators and checks it is a well-defined injective homomorphism there.
#[allow(clippy::too_many_arguments)]
fn consistent_on_span(
    ea: &[Permutation],
    ia: &HashMap<&Permutation, usize>,
    eb: &[Permutation],
    ib: &HashMap<&Permutation, usize>,
    gens: &[usize],
    assignment: &[usize],
    id_a: usize,
    id_b: usize,
) -> bool {
    let k = assignment.len();
    let mut phi = vec![usize::MAX; ea.len()];
    let mut used = vec![false; eb.len()];
    phi[id_a] = id_b;
    used[id_b] = true;
    let mut queue = vec![id_a];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for i in 0..k {
            let y = ia[&ea[x].then(&ea[gens[i]])];
            let fy = ib[&eb[phi[x]].then(&eb[assignment[i]])];
            if phi[y] == usize::MAX {
                if used[fy] {
                    return false;
                }
                used[fy] = true;
                phi[y] = fy;
                queue.push(y);
            } else if phi[y] != fy {
                return false;
            }
        }
    }
    true
}
