//! A 3-arc-transitive group of automorphisms of `K_{q,q}`, `q = p^f`, whose
//! kernel on a neighbourhood is intransitive on the far side.
//!
//! `U = 0..q` and `W = q..2q` are copies of `GF(q)`. `AGL(1, q)` acts on `W`
//! and fixes `U`: translations `N`, `a: x ↦ ωx` and the Frobenius
//! `b: x ↦ x^p`. The involution `g` swaps `x ∈ U` with `x ∈ W`, so `h^g`
//! is the same map on `U`. With `r` a prime dividing `q - 1` and `f`, and
//! `r^ℓ` the exact power of `r` dividing `q - 1`,
//! `B = <N, a^{r^ℓ}, a^{(q-1)/r^ℓ} (b^{f/r})^g, g>`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigUint;

use super::field::{is_prime, Gf};
use crate::classify::transitivity_profile;
use crate::error::{Error, Result};
use crate::graph::{families, Graph};
use crate::group::PermGroup;
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prop14Report {
    pub p: u32,
    pub f: u32,
    pub r: u32,
    pub ell: u32,
    pub q: u32,
    pub group_order: BigUint,
    pub two_arc_transitive: bool,
    pub three_arc_transitive: bool,
    /// The pointwise stabilizer of `u` and `W`.
    pub kernel_order: BigUint,
    /// Orbit sizes of the kernel on `U - {u}`.
    pub kernel_orbits: Vec<usize>,
    /// `<(a^{r^ℓ})^g, (a^{(q-1)/r^ℓ})^g>`, the generators named for the kernel.
    pub named_kernel_order: BigUint,
    pub named_kernel_orbits: usize,
    /// `(q - 1) / r` and `r`, the order and orbit count claimed for the kernel.
    pub claimed_kernel_order: u64,
    pub claimed_orbits: u32,
    pub divergences: Vec<String>,
}

impl Prop14Report {
    /// Orbits of equal size whose number and size divide the kernel order.
    pub fn internally_consistent(&self) -> bool {
        let Some(&size) = self.kernel_orbits.first() else {
            return false;
        };
        let order = &self.kernel_order;
        self.kernel_orbits.iter().all(|&s| s == size)
            && size * self.kernel_orbits.len() == (self.q - 1) as usize
            && (order % BigUint::from(size)) == BigUint::from(0u32)
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The graph, the group `B` and the measurements.
pub fn prop_1_4_build(p: u32, f: u32, r: u32) -> Result<(Graph, PermGroup, Prop14Report)> {
    let field = Gf::new(p, f)?;
    let q = field.q;
    let d = gcd(q - 1, f);
    if !is_prime(r) || !d.is_multiple_of(r) {
        return Err(Error::Domain(format!(
            "r = {r} must be a prime dividing gcd(p^f - 1, f) = gcd({}, {f}) = {d}",
            q - 1
        )));
    }
    let mut ell = 0;
    let mut rl = 1u32;
    while (q - 1) % (rl * r) == 0 {
        rl *= r;
        ell += 1;
    }
    let n = 2 * q as usize;
    let on_w = |map: &dyn Fn(u32) -> u32| {
        let images: Vec<u32> = (0..q).chain((0..q).map(|x| q + map(x))).collect();
        Permutation::from_images(images)
    };
    let g = Permutation::from_images((q..2 * q).chain(0..q).collect())?;
    let conj = |h: &Permutation| g.then(h).then(&g);
    let omega = field.primitive;
    let a = on_w(&|x| field.mul(omega, x))?;
    let b = on_w(&|x| field.frobenius(x))?;
    let translations: Vec<Permutation> = (0..f)
        .map(|i| on_w(&|x| field.add(x, p.pow(i))))
        .collect::<Result<_>>()?;

    let x = (q - 1) / rl;
    let mut gens = translations;
    gens.push(a.pow(rl as i64));
    gens.push(a.pow(x as i64).then(&conj(&b.pow((f / r) as i64))));
    gens.push(g.clone());
    let group = PermGroup::new(n, gens)?;

    let graph = families::complete_bipartite(q as usize, q as usize);
    let t = transitivity_profile(&graph, &group)?;

    let u = 0u32;
    let mut fixed: Vec<u32> = (q..2 * q).collect();
    fixed.insert(0, u);
    let kernel = group.pointwise_stabilizer(&fixed)?;
    let mut kernel_orbits: Vec<usize> = kernel
        .orbits()
        .into_iter()
        .filter(|o| o.iter().all(|&v| v != u && v < q))
        .map(|o| o.len())
        .collect();
    kernel_orbits.sort_unstable();

    let named = PermGroup::new(n, alloc::vec![conj(&a.pow(rl as i64)), conj(&a.pow(x as i64))])?;
    let named_orbits = named
        .orbits()
        .into_iter()
        .filter(|o| o.iter().all(|&v| v != u && v < q))
        .count();

    let claimed_kernel_order = ((q - 1) / r) as u64;
    let mut divergences = Vec::new();
    if kernel.order() != BigUint::from(claimed_kernel_order) {
        divergences.push(format!(
            "kernel order {} differs from the claimed (q-1)/r = {claimed_kernel_order}",
            kernel.order()
        ));
    }
    if kernel_orbits.len() != r as usize {
        divergences.push(format!(
            "kernel has {} orbits on U - {{u}}, claimed {r}",
            kernel_orbits.len()
        ));
    }
    if named.order() != BigUint::from(claimed_kernel_order) {
        divergences.push(format!(
            "the named kernel generators generate a group of order {}, claimed {claimed_kernel_order}",
            named.order()
        ));
    }
    if !t.s_arc[2] {
        divergences.push("B is not 3-arc-transitive".into());
    }
    let report = Prop14Report {
        p,
        f,
        r,
        ell,
        q,
        group_order: group.order(),
        two_arc_transitive: t.s_arc[1],
        three_arc_transitive: t.s_arc[2],
        kernel_order: kernel.order(),
        kernel_orbits,
        named_kernel_order: named.order(),
        named_kernel_orbits: named_orbits,
        claimed_kernel_order,
        claimed_orbits: r,
        divergences,
    };
    Ok((graph, group, report))
}
