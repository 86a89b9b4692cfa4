//! Base and strong generating set with Schreier vectors.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::perm::Permutation;

const NOT_IN_ORBIT: u32 = u32::MAX;
const ROOT: u32 = u32::MAX - 1;

/// One level of a stabilizer chain: the group `G^(i)` fixing all earlier
/// base points, its generators, and the orbit of the base point.
#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base_point: u32,
    pub gens: Vec<Permutation>,
    pub inv_gens: Vec<Permutation>,
    /// For every point of the orbit, the index of the generator that first reached it.
    schreier: Vec<u32>,
    pub orbit: Vec<u32>,
}

impl Level {
    fn new(base_point: u32, degree: usize) -> Self {
        let mut schreier = vec![NOT_IN_ORBIT; degree];
        schreier[base_point as usize] = ROOT;
        Level {
            base_point,
            gens: Vec::new(),
            inv_gens: Vec::new(),
            schreier,
            orbit: vec![base_point],
        }
    }

    fn push_gen(&mut self, g: Permutation) {
        self.inv_gens.push(g.inverse());
        self.gens.push(g);
        self.rebuild_orbit();
    }

    fn rebuild_orbit(&mut self) {
        // Extends the existing tree; previous entries stay valid.
        let mut i = 0;
        while i < self.orbit.len() {
            let x = self.orbit[i];
            for (gi, g) in self.gens.iter().enumerate() {
                let y = g.image(x);
                if self.schreier[y as usize] == NOT_IN_ORBIT {
                    self.schreier[y as usize] = gi as u32;
                    self.orbit.push(y);
                }
            }
            i += 1;
        }
    }

    #[inline]
    pub fn in_orbit(&self, x: u32) -> bool {
        self.schreier[x as usize] != NOT_IN_ORBIT
    }

    /// Multiplies `h` on the right by `u_x^-1`, where `u_x` maps the base point to `x`.
    fn strip_rep(&self, h: &mut Permutation, x: u32) {
        let mut x = x;
        loop {
            let gi = self.schreier[x as usize];
            if gi == ROOT {
                break;
            }
            let inv = &self.inv_gens[gi as usize];
            *h = h.then(inv);
            x = inv.image(x);
        }
    }

    /// Coset representative mapping the base point to `x`.
    pub fn rep(&self, x: u32) -> Permutation {
        let n = self.schreier.len();
        let mut word = Vec::new();
        let mut y = x;
        loop {
            let gi = self.schreier[y as usize];
            if gi == ROOT {
                break;
            }
            word.push(gi as usize);
            y = self.inv_gens[gi as usize].image(y);
        }
        let mut r = Permutation::identity(n);
        for &gi in word.iter().rev() {
            r = r.then(&self.gens[gi]);
        }
        r
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Chain {
    pub degree: usize,
    pub levels: Vec<Level>,
}

/// Result of sifting an element through the chain.
pub(crate) struct Sifted {
    pub residue: Permutation,
    /// Level at which sifting stopped; equals `levels.len()` when all levels passed.
    pub drop_level: usize,
}

impl Chain {
    pub fn empty(degree: usize) -> Self {
        Chain {
            degree,
            levels: Vec::new(),
        }
    }

    pub fn order(&self) -> BigUint {
        let mut o = BigUint::from(1u32);
        for l in &self.levels {
            o *= BigUint::from(l.orbit.len());
        }
        o
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn sift_from(&self, g: &Permutation, start: usize) -> Sifted {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let x = h.image(level.base_point);
            if !level.in_orbit(x) {
                return Sifted {
                    residue: h,
                    drop_level: i,
                };
            }
            level.strip_rep(&mut h, x);
        }
        Sifted {
            residue: h,
            drop_level: self.levels.len(),
        }
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let s = self.sift_from(g, 0);
        s.drop_level == self.levels.len() && s.residue.is_identity()
    }

    /// Adds `h` as a strong generator at levels `from..=to`, creating a new
    /// level when `to == levels.len()`.
    fn add_strong_gen(&mut self, h: Permutation, from: usize, to: usize) {
        if to == self.levels.len() {
            let bp = h
                .first_moved_point()
                .expect("nontrivial residue must move a point");
            self.levels.push(Level::new(bp, self.degree));
        }
        for l in from..=to {
            self.levels[l].push_gen(h.clone());
        }
    }

    /// Chain for a regular group: base `[0]`, trivial stabilizer.
    pub fn with_single_level(degree: usize, gens: &[Permutation]) -> Self {
        if degree <= 1 || gens.is_empty() {
            return Chain::empty(degree);
        }
        let mut level = Level::new(0, degree);
        for g in gens {
            level.gens.push(g.clone());
            level.inv_gens.push(g.inverse());
        }
        level.rebuild_orbit();
        Chain {
            degree,
            levels: vec![level],
        }
    }

    /// Sets up levels for a base prefix and the given generators.
    fn init(degree: usize, gens: &[Permutation], base_prefix: &[u32]) -> Self {
        let mut chain = Chain::empty(degree);
        for &b in base_prefix {
            chain.levels.push(Level::new(b, degree));
        }
        for g in gens {
            if g.is_identity() {
                continue;
            }
            // Extend the base until g moves some base point.
            if chain.levels.iter().all(|l| g.image(l.base_point) == l.base_point) {
                let bp = g.first_moved_point().unwrap();
                chain.levels.push(Level::new(bp, degree));
            }
        }
        for g in gens {
            if g.is_identity() {
                continue;
            }
            chain.levels[0].gens.push(g.clone());
            chain.levels[0].inv_gens.push(g.inverse());
            // Strong generators for deeper levels are those fixing earlier base points.
            for i in 1..chain.levels.len() {
                if g.image(chain.levels[i - 1].base_point) == chain.levels[i - 1].base_point {
                    chain.levels[i].gens.push(g.clone());
                    chain.levels[i].inv_gens.push(g.inverse());
                } else {
                    break;
                }
            }
        }
        for l in chain.levels.iter_mut() {
            l.rebuild_orbit();
        }
        chain
    }

    /// Deterministic Schreier-Sims.
    pub fn schreier_sims(degree: usize, gens: &[Permutation], base_prefix: &[u32]) -> Self {
        let mut chain = Chain::init(degree, gens, base_prefix);
        if chain.levels.is_empty() {
            return chain;
        }
        // checked[i] = number of (orbit point, generator) pairs of level i already verified,
        // stored as (orbit prefix length, generator count) to avoid redundant rechecks.
        let mut checked: Vec<(usize, usize)> = vec![(0, 0); chain.levels.len()];
        let mut i = chain.levels.len();
        while i > 0 {
            let lvl = i - 1;
            let mut restart = None;
            'outer: loop {
                let (done_orbit, done_gens) = checked[lvl];
                let orbit_len = chain.levels[lvl].orbit.len();
                let ngens = chain.levels[lvl].gens.len();
                if done_orbit == orbit_len && done_gens == ngens {
                    break;
                }
                for oi in 0..orbit_len {
                    let beta = chain.levels[lvl].orbit[oi];
                    let first_gen = if oi < done_orbit { done_gens } else { 0 };
                    if first_gen >= ngens {
                        continue;
                    }
                    let u_beta = chain.levels[lvl].rep(beta);
                    for si in first_gen..ngens {
                        let s = &chain.levels[lvl].gens[si];
                        let img = s.image(beta);
                        let mut sg = u_beta.then(s);
                        chain.levels[lvl].strip_rep(&mut sg, img);
                        let sifted = chain.sift_from(&sg, lvl + 1);
                        if sifted.drop_level < chain.levels.len() || !sifted.residue.is_identity() {
                            let to = sifted.drop_level;
                            chain.add_strong_gen(sifted.residue, lvl + 1, to);
                            while checked.len() < chain.levels.len() {
                                checked.push((0, 0));
                            }
                            // Levels that received a new generator must be rechecked.
                            restart = Some(to + 1);
                            break 'outer;
                        }
                    }
                }
                checked[lvl] = (orbit_len, ngens);
            }
            match restart.take() {
                Some(next) => i = next,
                None => i -= 1,
            }
        }
        chain
    }

    /// Randomized Schreier-Sims that stops once the known order is reached.
    /// Returns `None` if the target is not reached within the iteration budget.
    pub fn random_schreier_sims(
        degree: usize,
        gens: &[Permutation],
        base_prefix: &[u32],
        target: &BigUint,
        seed: u64,
    ) -> Option<Self> {
        let mut chain = Chain::init(degree, gens, base_prefix);
        if chain.order() == *target {
            return Some(chain);
        }
        let nontrivial: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        if nontrivial.is_empty() {
            return None;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pr = ProductReplacement::new(&nontrivial, &mut rng);
        let mut misses = 0usize;
        while misses < 400 {
            let g = pr.next(&mut rng);
            let s = chain.sift_from(&g, 0);
            if s.drop_level < chain.levels.len() || !s.residue.is_identity() {
                // A residue at drop level j fixes the first j base points.
                chain.add_strong_gen(s.residue, 1, s.drop_level);
                misses = 0;
                let o = chain.order();
                if o == *target {
                    // A wrong claim could be met by a partial chain; a few
                    // extra sifts catch that and trigger the exact fallback.
                    for _ in 0..20 {
                        let g = pr.next(&mut rng);
                        let s = chain.sift_from(&g, 0);
                        if s.drop_level < chain.levels.len() || !s.residue.is_identity() {
                            return None;
                        }
                    }
                    return Some(chain);
                }
                if o > *target {
                    return None;
                }
            } else {
                misses += 1;
            }
        }
        None
    }
}

impl Chain {
    /// Randomized Schreier-Sims that stops after `patience` consecutive
    /// random elements sift through. Every element the chain accepts lies in
    /// the group; a member may be rejected if the chain is incomplete.
    pub fn random_partial(degree: usize, gens: &[Permutation], seed: u64, patience: usize) -> Self {
        let mut chain = Chain::init(degree, gens, &[]);
        let nontrivial: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        if nontrivial.is_empty() {
            return chain;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pr = ProductReplacement::new(&nontrivial, &mut rng);
        let mut misses = 0;
        while misses < patience {
            let g = pr.next(&mut rng);
            let s = chain.sift_from(&g, 0);
            if s.drop_level < chain.levels.len() || !s.residue.is_identity() {
                chain.add_strong_gen(s.residue, 1, s.drop_level);
                misses = 0;
            } else {
                misses += 1;
            }
        }
        chain
    }
}

/// Product-replacement random element generator.
pub(crate) struct ProductReplacement {
    state: Vec<Permutation>,
    acc: Permutation,
}

impl ProductReplacement {
    pub fn new(gens: &[Permutation], rng: &mut ChaCha8Rng) -> Self {
        let mut state: Vec<Permutation> = Vec::new();
        while state.len() < 10.max(gens.len()) {
            for g in gens {
                state.push(g.clone());
            }
        }
        let acc = Permutation::identity(gens[0].degree());
        let mut pr = ProductReplacement { state, acc };
        for _ in 0..50 {
            pr.next(rng);
        }
        pr
    }

    pub fn next(&mut self, rng: &mut ChaCha8Rng) -> Permutation {
        let n = self.state.len();
        let i = (rng.next_u32() as usize) % n;
        let mut j = (rng.next_u32() as usize) % n;
        if j == i {
            j = (j + 1) % n;
        }
        let new = if rng.next_u32() & 1 == 0 {
            self.state[i].then(&self.state[j])
        } else {
            self.state[i].then(&self.state[j].inverse())
        };
        self.state[i] = new;
        self.acc = self.acc.then(&self.state[i]);
        self.acc.clone()
    }
}
