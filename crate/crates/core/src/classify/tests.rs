use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use super::*;
use crate::autgrp::{automorphism_group, is_isomorphic};
use crate::graph::families::*;

fn aut(g: &Graph) -> PermGroup {
    automorphism_group(g).unwrap().group
}

fn line(g: &Graph) -> Graph {
    g.line_graph().unwrap()
}

/// Orbit count of the whole group on a shape set, applying every element.
fn brute_orbits(g: &Graph, a: &PermGroup, kind: Option<ShapeKind>) -> usize {
    let tuples: Vec<Vec<u32>> = match kind {
        None => g.edges().into_iter().map(|(u, v)| vec![u, v]).collect(),
        Some(k) => g.enumerate_shapes(k).unwrap().tuples,
    };
    let elements = a.elements(50_000).unwrap();
    let mut seen = vec![false; tuples.len()];
    let mut orbits = 0;
    for i in 0..tuples.len() {
        if seen[i] {
            continue;
        }
        orbits += 1;
        for e in &elements {
            let mut img: Vec<u32> = tuples[i].iter().map(|&x| e.image(x)).collect();
            match kind {
                None | Some(ShapeKind::Triangle) | Some(ShapeKind::InducedPathTriple) => img.sort_unstable(),
                Some(ShapeKind::Path2) if img[0] > img[2] => img.swap(0, 2),
                _ => {}
            }
            let j = tuples.binary_search(&img).unwrap_or_else(|_| {
                tuples.iter().position(|t| *t == img).expect("image is a shape")
            });
            seen[j] = true;
        }
    }
    orbits
}

fn corpus() -> Vec<(&'static str, Graph)> {
    vec![
        ("K4", complete(4)),
        ("K5", complete(5)),
        ("K33", complete_bipartite(3, 3)),
        ("K44", complete_bipartite(4, 4)),
        ("K23", complete_bipartite(2, 3)),
        ("cube", hypercube(3)),
        ("petersen", petersen()),
        ("C6", cycle(6)),
        ("P3", path(3)),
        ("prism5", prism(5)),
        ("L(K33)", line(&complete_bipartite(3, 3))),
        ("L(K44)", line(&complete_bipartite(4, 4))),
        ("L(petersen)", line(&petersen())),
        ("L(cube)", line(&hypercube(3))),
        ("random", random(9, 0.5, 3)),
    ]
}

#[test]
fn transitivity_matches_brute_force_orbits() {
    let kinds = [
        ShapeKind::Arc(1),
        ShapeKind::Arc(2),
        ShapeKind::Arc(3),
        ShapeKind::Geodesic2,
        ShapeKind::Path2,
        ShapeKind::InducedPathTriple,
        ShapeKind::Triangle,
        ShapeKind::OrderedTriangle,
    ];
    for (name, g) in corpus() {
        let a = aut(&g);
        let ra = RootedAction::new(&g, &a, 0).unwrap();
        let vt = a.orbit(0).unwrap().len() == g.order();
        assert_eq!(ra.vertex_transitive, vt, "{name}");
        assert_eq!(transitive(&ra, &a, Shape::Edge).unwrap(), brute_orbits(&g, &a, None) <= 1, "{name} edges");
        for k in kinds {
            let want = brute_orbits(&g, &a, Some(k)) <= 1;
            assert_eq!(transitive(&ra, &a, Shape::Kind(k)).unwrap(), want, "{name} {k:?}");
        }
    }
}

#[test]
fn arc_regular_graphs() {
    for g in [petersen(), complete_bipartite(3, 3)] {
        let t = transitivity_profile(&g, &aut(&g)).unwrap();
        assert!(t.vertex && t.edge && t.arc && !t.half_arc);
        assert_eq!(t.s_arc, [true; 3]);
        assert_eq!(t.s_arc_regular, [false, false, true]);
    }
    let t = transitivity_profile(&hypercube(3), &aut(&hypercube(3))).unwrap();
    assert_eq!(t.s_arc, [true, true, false]);
    assert_eq!(t.s_arc_regular, [false, true, false]);
}

#[test]
fn non_vertex_transitive_graphs() {
    let g = path(3);
    let t = transitivity_profile(&g, &aut(&g)).unwrap();
    assert!(!t.vertex && t.edge && !t.arc);
    let f = geodesic_and_path_transitivity(&g, &aut(&g)).unwrap();
    assert!(f.path_2 && f.geodesic_path_2 && !f.geodesic_2);
    assert_eq!(f.local_criterion, None);
    assert_eq!(csh_ch_status(&g, &aut(&g), 1).unwrap(), (false, false));
}

#[test]
fn cycle_profile() {
    let g = cycle(6);
    let p = profile(&g, &aut(&g), EvidenceMode::Full).unwrap();
    assert!(p.arc_transitive.value && !p.half_arc_transitive.value);
    assert_eq!(p.arc_transitive.basis, Basis::Computed);
    assert!(p.geodesic_transitive_2.value);
    assert_eq!(p.s_arc_transitive.map(|f| f.value), [true; 3]);
    assert_eq!(p.csh.map(|f| f.value), [true; 3]);
    assert_eq!(p.ch.map(|f| f.value), [true; 3]);
    assert_eq!(p.check_vertex.map(|c| c.1), Some(true));
}

#[test]
fn local_actions() {
    let k4 = complete(4);
    let l = local_action(&k4, &aut(&k4), 0).unwrap();
    assert_eq!(l.group.order(), BigUint::from(6u32));
    assert!(l.two_transitive && l.three_transitive);
    assert_eq!(l.kernel_order, BigUint::from(1u32));

    let c = cycle(7);
    let l = local_action(&c, &aut(&c), 0).unwrap();
    assert_eq!(l.group.order(), BigUint::from(2u32));
    assert!(l.three_transitive);

    let q = hypercube(3);
    let l = local_action(&q, &aut(&q), 0).unwrap();
    assert!(l.three_transitive);
    let prism = prism(5);
    let l = local_action(&prism, &aut(&prism), 0).unwrap();
    assert!(!l.two_transitive);
}

#[test]
fn connected_homogeneity_implications() {
    let mut graphs = corpus();
    for seed in 0..12 {
        graphs.push(("random", random(8, 0.4, seed)));
    }
    for (name, g) in graphs {
        let a = aut(&g);
        let p = profile(&g, &a, EvidenceMode::Full).unwrap();
        for k in 0..3 {
            assert!(!p.ch[k].value || p.csh[k].value, "{name}: {k}-CH without CSH");
            if k > 0 {
                assert!(!p.csh[k].value || p.csh[k - 1].value, "{name}");
                assert!(!p.ch[k].value || p.ch[k - 1].value, "{name}");
            }
        }
        assert!(!p.arc_transitive.value || p.edge_transitive.value, "{name}");
        assert!(!p.geodesic_transitive_2.value || p.arc_transitive.value, "{name}");
        for s in 1..3 {
            assert!(!p.s_arc_transitive[s].value || p.s_arc_transitive[s - 1].value, "{name}");
        }
    }
}

#[test]
fn line_graphs_of_complete_bipartite_graphs_are_3ch() {
    for n in [3, 4] {
        let g = line(&complete_bipartite(n, n));
        assert_eq!(g.locally_2kn(), Some(n - 1));
        let a = aut(&g);
        assert_eq!(csh_ch_status(&g, &a, 3).unwrap(), (true, true));
        assert_eq!(classify_case(&g, &a, EvidenceMode::Full).unwrap().label, CaseLabel::ThreeCh);
    }
}

/// 3-CH iff the clique graph is 3-arc-transitive and locally 3-transitive.
#[test]
fn three_ch_through_the_clique_graph() {
    for sigma in [complete_bipartite(3, 3), complete_bipartite(4, 4), petersen(), hypercube(3), prism(5), cycle(6)] {
        let g = line(&sigma);
        assert!(g.locally_2kn().is_some());
        let ch3 = csh_ch_status(&g, &aut(&g), 3).unwrap().1;
        let c = g.clique_graph().unwrap();
        let ac = aut(&c);
        let t = transitivity_profile(&c, &ac).unwrap();
        let local = local_action(&c, &ac, 0).unwrap();
        assert_eq!(ch3, t.s_arc[2] && local.three_transitive);
    }
}

/// Σ s-arc-transitive iff L(Σ) is (s-1)-geodesic-transitive, s = 2, 3.
#[test]
fn arcs_of_a_graph_and_geodesics_of_its_line_graph() {
    for sigma in [complete_bipartite(3, 3), complete_bipartite(4, 4), hypercube(3), petersen(), prism(5), prism(4)] {
        let t = transitivity_profile(&sigma, &aut(&sigma)).unwrap();
        let l = line(&sigma);
        let al = aut(&l);
        let lt = transitivity_profile(&l, &al).unwrap();
        let lg = geodesic_and_path_transitivity(&l, &al).unwrap();
        assert_eq!(t.s_arc[1], lt.vertex && lt.arc);
        assert_eq!(t.s_arc[2], lg.geodesic_2);
    }
}

#[test]
fn clique_and_line_graph_duality() {
    for sigma in [complete_bipartite(3, 3), complete_bipartite(4, 4), petersen(), hypercube(3)] {
        let g = line(&sigma);
        let c = g.clique_graph().unwrap();
        assert!(is_isomorphic(&line(&c), &g).unwrap());
        assert_eq!(aut(&g).order(), aut(&c).order());
        assert_eq!(c.size(), g.order());
    }
}

/// For 3-CSH graphs the stabilizer of an edge uv has equal orbits on the
/// common neighbours (1, 2, 3 or 6 of them) and on the rest of Γ(u) (1 or 2).
#[test]
fn edge_stabilizer_orbits_on_neighbourhoods() {
    for (name, g) in corpus() {
        let a = aut(&g);
        if !csh_ch_status(&g, &a, 3).unwrap().0 || g.size() == 0 {
            continue;
        }
        let (u, v) = (0u32, g.neighbors(0)[0]);
        let guv = a.pointwise_stabilizer(&[u, v]).unwrap();
        let common: Vec<u32> = g.neighbors(u).iter().copied().filter(|&x| g.adjacent(x, v)).collect();
        let rest: Vec<u32> = g.neighbors(u).iter().copied().filter(|&x| x != v && !g.adjacent(x, v)).collect();
        for (set, allowed) in [(&common, &[1usize, 2, 3, 6][..]), (&rest, &[1, 2][..])] {
            if set.is_empty() {
                continue;
            }
            let mut sizes = Vec::new();
            let mut done = vec![false; g.order()];
            for &x in set.iter() {
                if !done[x as usize] {
                    let o = guv.orbit(x).unwrap();
                    o.iter().for_each(|&y| done[y as usize] = true);
                    sizes.push(o.len());
                }
            }
            assert!(sizes.iter().all(|&s| s == sizes[0]), "{name}: {sizes:?}");
            assert!(allowed.contains(&sizes.len()), "{name}: {sizes:?}");
        }
    }
}

#[test]
fn triangle_counts_of_locally_2kn_graphs() {
    for sigma in [complete_bipartite(3, 3), petersen(), complete_bipartite(4, 4)] {
        let g = line(&sigma);
        let q = g.locally_2kn().unwrap();
        let c = g.clique_graph().unwrap();
        let r = consistency_identities(&IdentityInputs {
            gamma_vertices: BigUint::from(g.order()),
            triangles: Some(BigUint::from(g.count_triangles())),
            q,
            sigma_vertices: BigUint::from(c.order()),
            sigma_valency: c.valency().unwrap(),
            h_order: BigUint::from(g.order()),
            aut_hs_order: BigUint::from(1u32),
            three_arc_regular: false,
        });
        assert!(r.get("triangles").unwrap().holds);
        assert!(r.get("clique-count").unwrap().holds);
    }
}

#[test]
fn counting_identities_from_orders() {
    let inputs = |h: u64, aut_hs: u64, sigma: u64, k: usize| IdentityInputs {
        gamma_vertices: BigUint::from(h),
        triangles: None,
        q: k - 1,
        sigma_vertices: BigUint::from(sigma),
        sigma_valency: k,
        h_order: BigUint::from(h),
        aut_hs_order: BigUint::from(aut_hs),
        three_arc_regular: true,
    };
    for (h, a, s, k, total) in [
        (125u64, 32u64, 50u64, 5usize, 4000u64),
        (3125, 32, 1250, 5, 100_000),
        (1 << 17, 18, 65536, 4, 2_359_296),
    ] {
        let r = consistency_identities(&inputs(h, a, s, k));
        assert!(r.all_hold());
        assert_eq!(r.get("three-arc-count").unwrap().lhs, BigUint::from(total));
    }
    let r = consistency_identities(&inputs(125, 16, 50, 5));
    assert!(!r.all_hold());
    assert!(!r.get("three-arc-count").unwrap().holds);
}

#[test]
fn stabilizer_tags() {
    let k4 = complete(4);
    let t = stabilizer_type_tags(&k4, &aut(&k4)).unwrap();
    assert_eq!(t.vertex, Some(reference::NamedGroup::S3));
    assert!(!t.is_type_2_2() && !t.is_type_q());
    let k33 = complete_bipartite(3, 3);
    let t = stabilizer_type_tags(&k33, &aut(&k33)).unwrap();
    assert!(!t.is_type_2_2());
    let e = edge_stabilizer(&aut(&k33), 0, 3).unwrap();
    assert_eq!(e.order(), BigUint::from(8u32));
}

#[test]
fn edge_stabilizers_by_brute_force() {
    for g in [petersen(), complete_bipartite(3, 3), hypercube(3), prism(5), cycle(6)] {
        let a = aut(&g);
        let (u, w) = (0u32, g.neighbors(0)[0]);
        let want = a
            .elements(50_000)
            .unwrap()
            .iter()
            .filter(|e| {
                let mut s = [e.image(u), e.image(w)];
                s.sort_unstable();
                s == [u.min(w), u.max(w)]
            })
            .count();
        assert_eq!(edge_stabilizer(&a, u, w).unwrap().order(), BigUint::from(want));
    }
}

#[test]
fn reference_groups_have_the_right_orders() {
    use reference::NamedGroup::*;
    for (g, order) in [
        (C4, 4u32),
        (S3, 6),
        (Frob20, 20),
        (Frob20xC2, 40),
        (M16, 16),
        (C4WrC2, 32),
        (A4xC3, 36),
        (C3xC3xC2, 18),
        (C3SqSwap, 18),
    ] {
        let r = g.realize().unwrap();
        assert_eq!(r.order(), BigUint::from(order), "{}", g.name());
        assert!(r.is_regular());
    }
    assert!(!M16.realize().unwrap().is_abelian());
    assert!(!C3xC3xC2.realize().unwrap().is_isomorphic_small(&C3SqSwap.realize().unwrap()).unwrap());
}

#[test]
fn regular_subgroups() {
    assert!(find_regular_subgroup(&aut(&petersen())).unwrap().is_none());
    for g in [complete_bipartite(3, 3), hypercube(3), cycle(7), prism(5), complete(5)] {
        let r = find_regular_subgroup(&aut(&g)).unwrap().expect("a Cayley graph");
        assert!(r.is_regular());
        assert!(r.generators().iter().all(|p| g.preserves_adjacency(p.images())));
    }
    assert!(find_regular_subgroup(&aut(&path(3))).unwrap().is_none());
}

#[test]
fn normal_cayley_graphs() {
    let c5 = cycle(5);
    let rot = PermGroup::new(5, vec![Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap()]).unwrap();
    assert!(normal_cayley_check(&c5, &rot).unwrap());
    // K4 = Cay(C4, {1,2,3}); the rotations are not normal in S4.
    let k4 = complete(4);
    let c4 = PermGroup::new(4, vec![Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap()]).unwrap();
    assert!(!normal_cayley_check(&k4, &c4).unwrap());
    let trivial = PermGroup::trivial(5);
    assert!(matches!(normal_cayley_check(&c5, &trivial), Err(Error::Inapplicable(_))));
}

#[test]
fn structural_mode_tags() {
    let c5 = cycle(5);
    let rot = PermGroup::new(5, vec![Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap()]).unwrap();
    let p = profile(&c5, &rot, EvidenceMode::Structural).unwrap();
    assert_eq!(p.vertex_transitive, Flag { value: true, basis: Basis::LowerBound });
    assert_eq!(p.edge_transitive, Flag { value: true, basis: Basis::LowerBound });
    assert_eq!(p.arc_transitive, Flag { value: false, basis: Basis::TheoryDerived });
    assert_eq!(p.half_arc_transitive.basis, Basis::TheoryDerived);
    assert!(p.half_arc_transitive.value);
}

#[test]
fn bad_groups_are_rejected() {
    let g = cycle(5);
    let wrong = PermGroup::new(5, vec![Permutation::from_cycles(5, &[&[0, 2]]).unwrap()]).unwrap();
    assert!(matches!(profile(&g, &wrong, EvidenceMode::Full), Err(Error::Contract(_))));
    let small = PermGroup::trivial(4);
    assert!(matches!(profile(&g, &small, EvidenceMode::Full), Err(Error::Structure(_))));
    assert!(matches!(csh_ch_status(&g, &aut(&g), 4), Err(Error::Domain(_))));
}

#[test]
fn case_labels_outside_the_case_analysis() {
    let g = complete_bipartite(3, 3);
    assert_eq!(classify_case(&g, &aut(&g), EvidenceMode::Full).unwrap().label, CaseLabel::ThreeCh);
    let p = prism(5);
    assert_eq!(classify_case(&p, &aut(&p), EvidenceMode::Full).unwrap().label, CaseLabel::NotThreeCsh);
    let q = hypercube(3);
    assert_eq!(classify_case(&q, &aut(&q), EvidenceMode::Full).unwrap().label, CaseLabel::ThreeCh);
}
