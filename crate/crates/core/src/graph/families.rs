//! Standard small graphs.

use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::Graph;

fn build(n: usize, edges: &[(u32, u32)]) -> Graph {
    Graph::from_edge_list(n, edges).expect("family edges are valid")
}

pub fn complete(n: usize) -> Graph {
    let mut e = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            e.push((u, v));
        }
    }
    build(n, &e)
}

/// Parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    let mut e = Vec::new();
    for u in 0..m as u32 {
        for v in 0..n as u32 {
            e.push((u, m as u32 + v));
        }
    }
    build(m + n, &e)
}

pub fn cycle(n: usize) -> Graph {
    let e: Vec<_> = (0..n as u32).map(|i| (i, (i + 1) % n as u32)).collect();
    build(n, &e)
}

pub fn path(n: usize) -> Graph {
    let e: Vec<_> = (1..n as u32).map(|i| (i - 1, i)).collect();
    build(n, &e)
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5u32 {
        e.push((i, (i + 1) % 5));
        e.push((5 + i, 5 + (i + 2) % 5));
        e.push((i, i + 5));
    }
    build(10, &e)
}

/// The `d`-dimensional hypercube.
pub fn hypercube(d: u32) -> Graph {
    let n = 1u32 << d;
    let mut e = Vec::new();
    for u in 0..n {
        for b in 0..d {
            let v = u ^ (1 << b);
            if u < v {
                e.push((u, v));
            }
        }
    }
    build(n as usize, &e)
}

/// Two `n`-cycles joined by a perfect matching.
pub fn prism(n: usize) -> Graph {
    let k = n as u32;
    let mut e = Vec::new();
    for i in 0..k {
        e.push((i, (i + 1) % k));
        e.push((k + i, k + (i + 1) % k));
        e.push((i, k + i));
    }
    build(2 * n, &e)
}

/// Erdős–Rényi graph with edge probability `p`, reproducible from `seed`.
pub fn random(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let threshold = (p.clamp(0.0, 1.0) * u32::MAX as f64) as u32;
    let mut e = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.next_u32() < threshold {
                e.push((u, v));
            }
        }
    }
    build(n, &e)
}
