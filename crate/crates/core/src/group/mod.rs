//! Permutation groups backed by a stabilizer chain.

mod chain;
mod fingerprint;
mod search;

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand_core::RngCore;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use chain::Chain;

pub use fingerprint::{AbelianInvariants, GroupFingerprint, ISO_SMALL_CAP};

const BASE_CHANGE_SEED: u64 = 0x5157_a11e;
const DERIVED_SERIES_SEED: u64 = 0xde71_7ed5;
/// Consecutive sifted random elements before a randomized chain is accepted.
const DERIVED_SERIES_PATIENCE: usize = 40;
/// Longer than any derived series at the degrees handled here.
const DERIVED_SERIES_STEPS: u64 = 64;

/// A permutation group given by generators, with a base and strong
/// generating set computed at construction.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Permutation>,
    chain: Chain,
}

fn check_degrees(degree: usize, gens: &[Permutation]) -> Result<()> {
    for g in gens {
        if g.degree() != degree {
            return Err(Error::Structure(alloc::format!(
                "generator of degree {} in a group of degree {}",
                g.degree(),
                degree
            )));
        }
    }
    Ok(())
}

fn point_in_range(degree: usize, p: u32) -> Result<()> {
    if (p as usize) < degree {
        Ok(())
    } else {
        Err(Error::Domain(alloc::format!("point {p} outside 0..{degree}")))
    }
}

impl PermGroup {
    /// Builds the group generated by `gens` with deterministic Schreier-Sims.
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        check_degrees(degree, &gens)?;
        let gens: Vec<Permutation> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        let chain = Chain::schreier_sims(degree, &gens, &[]);
        Ok(PermGroup { degree, gens, chain })
    }

    /// Builds the group when its order is known in advance. Random Schreier
    /// generators are sifted until the chain reaches `order`; reaching it
    /// certifies the chain. Falls back to the deterministic algorithm, and
    /// reports an invariant violation if the claimed order is wrong.
    pub fn with_known_order(degree: usize, gens: Vec<Permutation>, order: &BigUint) -> Result<Self> {
        Self::with_base_prefix(degree, gens, &[], Some(order))
    }

    pub(crate) fn with_base_prefix(
        degree: usize,
        gens: Vec<Permutation>,
        prefix: &[u32],
        order: Option<&BigUint>,
    ) -> Result<Self> {
        check_degrees(degree, &gens)?;
        for &p in prefix {
            point_in_range(degree, p)?;
        }
        let gens: Vec<Permutation> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        let chain = match order {
            Some(target) => {
                match Chain::random_schreier_sims(degree, &gens, prefix, target, BASE_CHANGE_SEED) {
                    Some(c) => c,
                    None => {
                        let c = Chain::schreier_sims(degree, &gens, prefix);
                        if c.order() != *target {
                            return Err(Error::InvariantViolation(alloc::format!(
                                "claimed order {} but the group has order {}",
                                target,
                                c.order()
                            )));
                        }
                        c
                    }
                }
            }
            None => Chain::schreier_sims(degree, &gens, prefix),
        };
        Ok(PermGroup { degree, gens, chain })
    }

    /// A group known to act regularly: the chain has the single base point 0.
    /// The caller guarantees regularity, e.g. for the right regular
    /// representation read off a complete coset table.
    pub(crate) fn regular_unchecked(degree: usize, gens: Vec<Permutation>) -> Self {
        let gens: Vec<Permutation> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        let chain = Chain::with_single_level(degree, &gens);
        debug_assert!(degree <= 1 || chain.levels[0].orbit.len() == degree);
        PermGroup { degree, gens, chain }
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            gens: Vec::new(),
            chain: Chain::empty(degree),
        }
    }

    /// The symmetric group on `n` points.
    pub fn symmetric(n: usize) -> Self {
        if n < 2 {
            return Self::trivial(n);
        }
        let mut cyc: Vec<u32> = (1..n as u32).collect();
        cyc.push(0);
        let gens = vec![
            Permutation::from_images_unchecked(cyc),
            Permutation::from_cycles(n, &[&[0, 1]]).unwrap(),
        ];
        let mut order = BigUint::one();
        for k in 2..=n {
            order *= BigUint::from(k);
        }
        Self::with_known_order(n, gens, &order).expect("symmetric group order")
    }

    fn from_chain_tail(degree: usize, chain: &Chain, k: usize) -> Self {
        if k >= chain.levels.len() {
            return Self::trivial(degree);
        }
        let levels = chain.levels[k..].to_vec();
        let gens = levels[0].gens.clone();
        PermGroup {
            degree,
            gens,
            chain: Chain { degree, levels },
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn order(&self) -> BigUint {
        self.chain.order()
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    pub fn base(&self) -> Vec<u32> {
        self.chain.base()
    }

    pub fn is_trivial(&self) -> bool {
        self.chain.levels.iter().all(|l| l.orbit.len() == 1)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain.contains(g)
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    /// Orbit of `point`, sorted ascending.
    pub fn orbit(&self, point: u32) -> Result<Vec<u32>> {
        point_in_range(self.degree, point)?;
        let mut seen = vec![false; self.degree];
        seen[point as usize] = true;
        let mut orbit = vec![point];
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for g in &self.gens {
                let y = g.image(x);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        Ok(orbit)
    }

    /// All orbits, each sorted, ordered by smallest element.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut uf = UnionFind::new(self.degree);
        for g in &self.gens {
            for x in 0..self.degree {
                uf.union(x, g.image(x as u32) as usize);
            }
        }
        uf.classes()
            .into_iter()
            .map(|c| c.into_iter().map(|x| x as u32).collect())
            .collect()
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).map(|o| o.len() == self.degree).unwrap_or(false)
    }

    /// Transitive with trivial point stabilizers.
    pub fn is_regular(&self) -> bool {
        self.is_transitive() && self.order() == BigUint::from(self.degree)
    }

    /// Stabilizer of a single point, computed by base change.
    pub fn point_stabilizer(&self, point: u32) -> Result<PermGroup> {
        self.pointwise_stabilizer(&[point])
    }

    /// Subgroup fixing every listed point.
    pub fn pointwise_stabilizer(&self, points: &[u32]) -> Result<PermGroup> {
        for &p in points {
            point_in_range(self.degree, p)?;
        }
        let base = self.base();
        if base.len() >= points.len() && base[..points.len()] == *points {
            return Ok(Self::from_chain_tail(self.degree, &self.chain, points.len()));
        }
        let order = self.order();
        let g = Self::with_base_prefix(self.degree, self.gens.clone(), points, Some(&order))?;
        Ok(Self::from_chain_tail(self.degree, &g.chain, points.len()))
    }

    /// The same group with a chain whose base starts with `prefix`.
    pub fn with_base(&self, prefix: &[u32]) -> Result<PermGroup> {
        let base = self.base();
        if base.len() >= prefix.len() && base[..prefix.len()] == *prefix {
            return Ok(self.clone());
        }
        let order = self.order();
        Self::with_base_prefix(self.degree, self.gens.clone(), prefix, Some(&order))
    }

    /// An element mapping the first base point to `point`, if there is one.
    pub fn transversal(&self, point: u32) -> Option<Permutation> {
        let level = self.chain.levels.first()?;
        ((point as usize) < self.degree && level.in_orbit(point)).then(|| level.rep(point))
    }

    /// Subgroup mapping `set` onto itself.
    pub fn setwise_stabilizer(&self, set: &[u32]) -> Result<PermGroup> {
        if set.is_empty() {
            return Err(Error::Domain("setwise stabilizer of the empty set".into()));
        }
        for &p in set {
            point_in_range(self.degree, p)?;
        }
        search::setwise_stabilizer(self, set)
    }

    /// Action on an ordered list of blocks, returned together with the
    /// kernel (elements fixing every block setwise).
    pub fn induced_action(&self, blocks: &[Vec<u32>]) -> Result<(PermGroup, PermGroup)> {
        let n = self.degree;
        let m = blocks.len();
        let mut block_of = vec![u32::MAX; n];
        for (bi, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::Domain("empty block".into()));
            }
            for &p in b {
                point_in_range(n, p)?;
                if block_of[p as usize] != u32::MAX {
                    return Err(Error::Domain(alloc::format!("point {p} lies in two blocks")));
                }
                block_of[p as usize] = bi as u32;
            }
        }
        let mut induced = Vec::with_capacity(self.gens.len());
        let mut extended = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let mut imgs = Vec::with_capacity(m);
            for b in blocks {
                let target = block_of[g.image(b[0]) as usize];
                if target == u32::MAX
                    || blocks[target as usize].len() != b.len()
                    || b.iter().any(|&p| block_of[g.image(p) as usize] != target)
                {
                    return Err(Error::Contract("group does not permute the blocks".into()));
                }
                imgs.push(target);
            }
            let mut ext: Vec<u32> = g.images().to_vec();
            ext.extend(imgs.iter().map(|&t| t + n as u32));
            induced.push(Permutation::from_images(imgs)?);
            extended.push(Permutation::from_images_unchecked(ext));
        }
        let order = self.order();
        let prefix: Vec<u32> = (n as u32..(n + m) as u32).collect();
        let ext_group = Self::with_base_prefix(n + m, extended, &prefix, Some(&order))?;
        let ext_kernel = Self::from_chain_tail(n + m, &ext_group.chain, m);
        let kernel_gens: Vec<Permutation> = ext_kernel
            .gens
            .iter()
            .map(|g| Permutation::from_images_unchecked(g.images()[..n].to_vec()))
            .collect();
        let kernel_order = ext_kernel.order();
        let kernel = Self::with_known_order(n, kernel_gens, &kernel_order)?;
        let action = Self::with_known_order(m, induced, &(&order / &kernel_order))?;
        Ok((action, kernel))
    }

    /// Partitions a list of tuples into orbits under the componentwise action.
    /// Every image of a listed tuple must itself be listed.
    pub fn orbits_on_tuples(&self, tuples: &[Vec<u32>]) -> Result<Vec<Vec<usize>>> {
        let mut index: HashMap<&[u32], usize> = HashMap::with_capacity(tuples.len());
        for (i, t) in tuples.iter().enumerate() {
            for &p in t {
                point_in_range(self.degree, p)?;
            }
            index.entry(t.as_slice()).or_insert(i);
        }
        let mut uf = UnionFind::new(tuples.len());
        let mut img: Vec<u32> = Vec::new();
        for (i, t) in tuples.iter().enumerate() {
            for g in &self.gens {
                img.clear();
                img.extend(t.iter().map(|&p| g.image(p)));
                match index.get(img.as_slice()) {
                    Some(&j) => uf.union(i, j),
                    None => {
                        return Err(Error::Contract(
                            "tuple list is not closed under the group".into(),
                        ))
                    }
                }
            }
        }
        // Duplicate tuples share a class with their first occurrence.
        for (i, t) in tuples.iter().enumerate() {
            uf.union(i, index[t.as_slice()]);
        }
        Ok(uf.classes())
    }

    pub fn is_abelian(&self) -> bool {
        for (i, a) in self.gens.iter().enumerate() {
            for b in &self.gens[i + 1..] {
                if a.then(b) != b.then(a) {
                    return false;
                }
            }
        }
        true
    }

    /// Smallest subgroup containing `elements` and normalized by `self`.
    pub fn normal_closure(&self, elements: &[Permutation]) -> Result<PermGroup> {
        check_degrees(self.degree, elements)?;
        let mut gens: Vec<Permutation> = elements.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut h = Self::new(self.degree, gens.clone())?;
        let mut frontier = gens.clone();
        while !frontier.is_empty() {
            let mut fresh = Vec::new();
            for x in &frontier {
                for g in &self.gens {
                    let c = x.conjugate_by(g);
                    if !h.contains(&c) {
                        gens.push(c.clone());
                        fresh.push(c);
                        h = Self::new(self.degree, gens.clone())?;
                    }
                }
            }
            frontier = fresh;
        }
        Ok(h)
    }

    pub fn derived_subgroup(&self) -> PermGroup {
        let mut comms = Vec::new();
        for (i, a) in self.gens.iter().enumerate() {
            for b in &self.gens[i + 1..] {
                let c = a.commutator(b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms).expect("degrees agree")
    }

    /// Derived series down to its terminal member.
    pub fn derived_series(&self) -> Vec<PermGroup> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().unwrap();
            if last.is_trivial() {
                break;
            }
            let d = last.derived_subgroup();
            if d.order() == last.order() {
                break;
            }
            series.push(d);
        }
        series
    }

    /// Generating sets of the derived series, ending with an empty set for a
    /// solvable group or a repeated perfect member otherwise.
    ///
    /// Each set generates the derived member exactly: it contains the
    /// commutators of the previous generators and is closed under
    /// conjugation, tested against randomized chains that can only
    /// under-accept. Orders are never needed, which keeps this fast at large
    /// degree. Returns `None` if the randomized chains fail to recognise a
    /// perfect member within the step budget.
    fn derived_generator_series(&self) -> Option<Vec<Vec<Permutation>>> {
        let chain_for = |gens: &[Permutation], step: u64| {
            Chain::random_partial(self.degree, gens, DERIVED_SERIES_SEED ^ step, DERIVED_SERIES_PATIENCE)
        };
        let mut series = vec![self.gens.clone()];
        for step in 0..DERIVED_SERIES_STEPS {
            let last = series.last().unwrap();
            let mut pending: Vec<Permutation> = Vec::new();
            for (i, a) in last.iter().enumerate() {
                for b in &last[i + 1..] {
                    pending.push(a.commutator(b));
                }
            }
            // Only elements missing from the current chain are kept, so the
            // generating sets stay short.
            let mut gens: Vec<Permutation> = Vec::new();
            let mut chain = Chain::empty(self.degree);
            while !pending.is_empty() {
                let mut fresh = Vec::new();
                for c in pending {
                    if !chain.contains(&c) {
                        gens.push(c.clone());
                        fresh.push(c);
                        chain = chain_for(&gens, step);
                    }
                }
                pending = fresh.iter().flat_map(|x| last.iter().map(move |g| x.conjugate_by(g))).collect();
            }
            let perfect = !gens.is_empty() && last.iter().all(|g| chain.contains(g));
            let done = gens.is_empty() || perfect;
            series.push(gens);
            if done {
                return Some(series);
            }
        }
        None
    }

    pub fn is_solvable(&self) -> bool {
        match self.derived_generator_series() {
            Some(s) => s.last().unwrap().is_empty(),
            None => self.derived_series().last().unwrap().is_trivial(),
        }
    }

    /// Length of the derived series, `None` when the group is not solvable.
    pub fn derived_length(&self) -> Option<usize> {
        match self.derived_generator_series() {
            Some(s) if s.last().unwrap().is_empty() => Some(if self.is_trivial() { 0 } else { s.len() - 1 }),
            Some(_) => None,
            None => {
                let s = self.derived_series();
                s.last().unwrap().is_trivial().then(|| s.len() - 1)
            }
        }
    }

    /// Every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.gens.iter().all(|g| other.contains(g))
    }

    /// Every generator of `self` normalizes `h`.
    pub fn normalizes(&self, h: &PermGroup) -> bool {
        self.gens
            .iter()
            .all(|g| h.gens.iter().all(|x| h.contains(&x.conjugate_by(g))))
    }

    /// All elements, for groups no larger than `cap`.
    pub fn elements(&self, cap: u64) -> Result<Vec<Permutation>> {
        match self.order_u64() {
            Some(o) if o <= cap => {}
            _ => {
                return Err(Error::CapExceeded(alloc::format!(
                    "group of order {} exceeds element cap {cap}",
                    self.order()
                )))
            }
        }
        let transversals: Vec<Vec<Permutation>> = self
            .chain
            .levels
            .iter()
            .map(|l| l.orbit.iter().map(|&x| l.rep(x)).collect())
            .collect();
        let mut out = vec![self.identity()];
        // g = u_{m-1} ... u_1 u_0, built from the deepest level outward.
        for t in transversals.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * t.len());
            for x in &out {
                for u in t {
                    next.push(x.then(u));
                }
            }
            out = next;
        }
        Ok(out)
    }

    /// A uniformly distributed element.
    pub fn random_element<R: RngCore>(&self, rng: &mut R) -> Permutation {
        let mut g = self.identity();
        for l in self.chain.levels.iter().rev() {
            let x = l.orbit[(rng.next_u64() % l.orbit.len() as u64) as usize];
            g = g.then(&l.rep(x));
        }
        g
    }

    pub fn fingerprint(&self) -> GroupFingerprint {
        fingerprint::fingerprint(self, fingerprint::DEFAULT_ENUMERATION_CAP)
    }

    pub fn fingerprint_with_cap(&self, cap: u64) -> GroupFingerprint {
        fingerprint::fingerprint(self, cap)
    }

    /// Exact isomorphism test for groups of order at most [`ISO_SMALL_CAP`].
    pub fn is_isomorphic_small(&self, other: &PermGroup) -> Result<bool> {
        fingerprint::is_isomorphic_small(self, other)
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            // Smaller index wins so representatives are deterministic.
            if ra < rb {
                self.parent[rb] = ra;
            } else {
                self.parent[ra] = rb;
            }
        }
    }

    /// Classes ordered by smallest member, each sorted.
    pub fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut slot = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            let r = self.find(x);
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(x);
        }
        out
    }
}

#[cfg(test)]
mod tests;
