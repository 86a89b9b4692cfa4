use alloc::vec;
use alloc::vec::Vec;

use super::families::*;
use super::*;

/// Shortest cycle by trying every start vertex and every simple path.
fn brute_girth(g: &Graph) -> Option<u32> {
    fn dfs(g: &Graph, start: u32, path: &mut Vec<u32>, best: &mut u32) {
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if w == start && path.len() >= 3 {
                *best = (*best).min(path.len() as u32);
            } else if !path.contains(&w) && (path.len() as u32) < *best {
                path.push(w);
                dfs(g, start, path, best);
                path.pop();
            }
        }
    }
    let mut best = u32::MAX;
    for s in 0..g.order() as u32 {
        dfs(g, s, &mut vec![s], &mut best);
    }
    (best != u32::MAX).then_some(best)
}

#[test]
fn edge_list_validation() {
    assert!(Graph::from_edge_list(3, &[(0, 0)]).is_err());
    assert!(Graph::from_edge_list(3, &[(0, 3)]).is_err());
    let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (1, 2), (0, 2)]).unwrap();
    assert_eq!(g.size(), 3);
    assert!(g.is_complete());
}

#[test]
fn basics_of_small_graphs() {
    let b = complete(4).basics();
    assert_eq!((b.regular, b.valency, b.girth, b.diameter, b.connected), (true, Some(3), Some(3), Diameter::Finite(1), true));
    assert!(b.bipartition.is_none());
    let b = complete_bipartite(3, 3).basics();
    assert_eq!((b.valency, b.girth, b.diameter), (Some(3), Some(4), Diameter::Finite(2)));
    assert_eq!(b.bipartition.unwrap().0, vec![0, 1, 2]);
    assert_eq!(path(4).girth(), None);
    for g in [petersen(), hypercube(3), prism(5), cycle(7), random(9, 0.4, 3)] {
        assert_eq!(g.girth(), brute_girth(&g));
    }
    assert_eq!(petersen().girth(), Some(5));
    let two = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
    assert_eq!(two.basics().diameter, Diameter::Infinite);
}

#[test]
fn line_graphs() {
    let t = complete(3).line_graph().unwrap();
    assert!(t.is_complete() && t.order() == 3);
    let l = complete_bipartite(3, 3).line_graph().unwrap();
    assert_eq!((l.order(), l.valency()), (9, Some(4)));
    assert_eq!(l.locally_2kn(), Some(2));
    let lp = petersen().line_graph().unwrap();
    assert_eq!((lp.order(), lp.valency()), (15, Some(4)));
    assert_eq!(lp.locally_2kn(), Some(2));
    assert_eq!(lp.labels().unwrap()[0], Label::Edge(0, 1));
    assert!(Graph::from_edge_list(2, &[]).unwrap().line_graph().is_err());
    // The octahedron is locally a 4-cycle.
    assert_eq!(complete(4).line_graph().unwrap().locally_2kn(), None);
}

#[test]
fn local_subgraphs() {
    let k4 = complete(4);
    assert!(k4.local_subgraph(0).unwrap().is_complete());
    let l = complete_bipartite(3, 3).line_graph().unwrap();
    let loc = l.local_subgraph(0).unwrap();
    assert_eq!((loc.order(), loc.size(), loc.components().len()), (4, 2, 2));
    let co = l.local_complement(0).unwrap();
    assert_eq!(co.size(), 4);
    assert!(co.bipartition().is_some() && co.valency() == Some(2));
    assert!(k4.local_subgraph(9).is_err());
}

#[test]
fn clique_graph_inverts_line_graph_counts() {
    for g in [complete_bipartite(3, 3), petersen(), complete_bipartite(4, 4), hypercube(3)] {
        let l = g.line_graph().unwrap();
        let c = l.clique_graph().unwrap();
        assert_eq!(c.order(), g.order());
        assert_eq!(c.size(), g.size());
        assert_eq!(c.size(), l.order());
        // Each clique is the star of a host vertex.
        for lab in c.labels().unwrap() {
            let Label::Set(s) = lab else { panic!() };
            let mut common: Option<Vec<u32>> = None;
            for &e in s {
                let Label::Edge(a, b) = l.labels().unwrap()[e as usize] else { panic!() };
                common = Some(match common {
                    None => vec![a, b],
                    Some(c) => c.into_iter().filter(|&x| x == a || x == b).collect(),
                });
            }
            assert_eq!(common.unwrap().len(), 1);
        }
    }
}

#[test]
fn bron_kerbosch_matches_fast_path() {
    let g = petersen().line_graph().unwrap();
    let fast = g.maximal_cliques().unwrap();
    let mut slow = g.bron_kerbosch();
    slow.sort();
    assert_eq!(fast, slow);
    // A graph that is not locally a union of cliques.
    let g = random(12, 0.5, 11);
    let cl = g.maximal_cliques().unwrap();
    for c in &cl {
        for (i, &a) in c.iter().enumerate() {
            for &b in &c[i + 1..] {
                assert!(g.adjacent(a, b));
            }
        }
        for v in 0..12u32 {
            if !c.contains(&v) {
                assert!(c.iter().any(|&x| !g.adjacent(x, v)));
            }
        }
    }
}

#[test]
fn quotients() {
    let c6 = cycle(6);
    let part = vec![vec![0, 3], vec![1, 4], vec![2, 5]];
    let q = c6.quotient_graph(&part).unwrap();
    assert!(q.graph.is_complete() && q.graph.order() == 3);
    assert!(q.is_normal_cover);
    let k33 = complete_bipartite(3, 3);
    let q = k33.quotient_graph(&[vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
    assert_eq!(q.graph.valency(), Some(1));
    assert!(!q.is_normal_cover);
    let singles: Vec<Vec<u32>> = (0..6).map(|v| vec![v]).collect();
    let q = k33.quotient_graph(&singles).unwrap();
    assert!(q.graph == k33 && q.is_normal_cover);
    assert!(k33.quotient_graph(&[vec![0, 1]]).is_err());
    assert!(k33.quotient_graph(&[vec![0, 1, 2, 3, 4, 5], vec![0]]).is_err());
}

#[test]
fn shape_counts_follow_regular_formulas() {
    for g in [complete(4), complete(5), complete_bipartite(3, 3), petersen(), hypercube(3), complete_bipartite(3, 3).line_graph().unwrap()] {
        let e = g.size();
        let k = g.valency().unwrap();
        let mut expected = 2 * e;
        for s in 1..=3 {
            let arcs = g.enumerate_shapes(ShapeKind::Arc(s)).unwrap();
            assert_eq!(arcs.len(), expected);
            expected *= k - 1;
        }
        let two_arcs = g.enumerate_shapes(ShapeKind::Arc(2)).unwrap().len();
        let geo = g.enumerate_shapes(ShapeKind::Geodesic2).unwrap().len();
        let ordered_tri = g.enumerate_shapes(ShapeKind::OrderedTriangle).unwrap().len();
        let tri = g.enumerate_shapes(ShapeKind::Triangle).unwrap().len();
        assert_eq!(two_arcs, geo + ordered_tri);
        assert_eq!(ordered_tri, 6 * tri);
        assert_eq!(tri as u64, g.count_triangles());
        assert_eq!(g.enumerate_shapes(ShapeKind::Path2).unwrap().len() * 2, two_arcs);
        assert_eq!(g.enumerate_shapes(ShapeKind::InducedPathTriple).unwrap().len() * 2, geo);
    }
    assert_eq!(complete_bipartite(3, 3).enumerate_shapes(ShapeKind::Arc(3)).unwrap().len(), 72);
    assert_eq!(petersen().enumerate_shapes(ShapeKind::Arc(3)).unwrap().len(), 120);
    assert_eq!(complete_bipartite(3, 3).line_graph().unwrap().count_triangles(), 6);
    assert!(petersen().enumerate_shapes(ShapeKind::Arc(4)).is_err());
}

#[test]
fn shapes_at_cover_every_shape() {
    let g = petersen().line_graph().unwrap();
    for kind in [ShapeKind::Path2, ShapeKind::Triangle, ShapeKind::InducedPathTriple] {
        let all = g.enumerate_shapes(kind).unwrap();
        for t in &all.tuples {
            for &v in t {
                assert!(g.shapes_at(kind, v).unwrap().contains(t));
            }
        }
    }
}

#[test]
fn relabel_and_preservation() {
    let g = petersen();
    let rot: Vec<u32> = (0..10).map(|v| if v < 5 { (v + 1) % 5 } else { 5 + (v - 5 + 1) % 5 }).collect();
    assert!(g.preserves_adjacency(&rot));
    assert!(g.relabeled(&rot) == g);
    let swap: Vec<u32> = (0..10).map(|v| match v { 0 => 1, 1 => 0, x => x }).collect();
    assert!(!g.preserves_adjacency(&swap));
}
