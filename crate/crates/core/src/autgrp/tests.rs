use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::*;
use crate::graph::families::*;

/// Counts automorphisms by trying every permutation (Heap's algorithm).
fn brute_aut_count(g: &Graph) -> u64 {
    let n = g.order();
    let mut p: Vec<u32> = (0..n as u32).collect();
    let mut c = vec![0usize; n];
    let mut count = g.preserves_adjacency(&p) as u64;
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            count += g.preserves_adjacency(&p) as u64;
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    count
}

fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.order();
    if n != b.order() {
        return false;
    }
    let mut p: Vec<u32> = (0..n as u32).collect();
    let mut c = vec![0usize; n];
    if a.relabeled(&p) == *b {
        return true;
    }
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            if a.relabeled(&p) == *b {
                return true;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    false
}

fn order(g: &Graph) -> u64 {
    let a = automorphism_group(g).unwrap();
    for gen in a.group.generators() {
        assert!(g.preserves_adjacency(gen.images()));
    }
    a.group.order_u64().unwrap()
}

fn shuffled(g: &Graph, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut p: Vec<u32> = (0..g.order() as u32).collect();
    for i in (1..p.len()).rev() {
        p.swap(i, rng.next_u32() as usize % (i + 1));
    }
    g.relabeled(&p)
}

#[test]
fn known_automorphism_group_orders() {
    assert_eq!(order(&cycle(5)), 10);
    assert_eq!(order(&petersen()), 120);
    assert_eq!(order(&complete_bipartite(3, 3)), 72);
    assert_eq!(order(&hypercube(3)), 48);
    assert_eq!(order(&hypercube(4)), 384);
    assert_eq!(order(&complete(6)), 720);
    assert_eq!(order(&prism(5)), 20);
    assert_eq!(order(&petersen().line_graph().unwrap()), 120);
    assert_eq!(order(&path(5)), 2);
    assert_eq!(order(&Graph::from_edge_list(0, &[]).unwrap()), 1);
    // Two disjoint triangles.
    let tt = Graph::from_edge_list(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
    assert_eq!(order(&tt), 72);
}

#[test]
fn orders_match_brute_force_on_small_graphs() {
    for seed in 0..25 {
        let g = random(7, 0.45, seed);
        assert_eq!(order(&g), brute_aut_count(&g), "seed {seed}");
    }
    for g in [complete_bipartite(2, 4), prism(4), cycle(8)] {
        assert_eq!(order(&g), brute_aut_count(&g));
    }
}

#[test]
fn seeds_are_checked_and_used() {
    let g = petersen();
    let rot: Vec<u32> = (0..10).map(|v| if v < 5 { (v + 1) % 5 } else { 5 + (v - 5 + 1) % 5 }).collect();
    let seed = Permutation::from_images(rot).unwrap();
    let a = automorphism_group_with(&g, &[seed], DEFAULT_VERTEX_CAP).unwrap();
    assert_eq!(a.group.order(), BigUint::from(120u32));
    let bad = Permutation::from_cycles(10, &[&[0, 1]]).unwrap();
    assert!(matches!(automorphism_group_with(&g, &[bad], DEFAULT_VERTEX_CAP), Err(Error::Contract(_))));
    assert!(matches!(automorphism_group_with(&g, &[], 9), Err(Error::Unsupported(_))));
}

#[test]
fn certificates_survive_relabeling() {
    for g in [petersen(), hypercube(4), complete_bipartite(3, 3).line_graph().unwrap(), random(20, 0.3, 4)] {
        let c = canonical_form(&g).unwrap();
        for seed in 0..4 {
            let h = shuffled(&g, seed);
            let d = canonical_form(&h).unwrap();
            assert_eq!(c.certificate, d.certificate);
            // The labeling really produces the certified graph.
            assert_eq!(g.relabeled(&c.labeling), h.relabeled(&d.labeling));
        }
    }
}

#[test]
fn isomorphism_matches_brute_force() {
    for seed in 0..20 {
        let a = random(7, 0.5, seed);
        let b = random(7, 0.5, seed + 100);
        assert_eq!(is_isomorphic(&a, &b).unwrap(), brute_isomorphic(&a, &b), "seed {seed}");
        assert!(is_isomorphic(&a, &shuffled(&a, seed)).unwrap());
    }
}

#[test]
fn classic_isomorphisms() {
    let p = petersen();
    let c = p.line_graph().unwrap().clique_graph().unwrap();
    assert!(is_isomorphic(&c, &p).unwrap());
    // Same order, size and valency, different graphs.
    assert!(!is_isomorphic(&complete_bipartite(3, 3), &prism(3)).unwrap());
    assert!(!is_isomorphic(&cycle(6), &Graph::from_edge_list(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap()).unwrap());
}
