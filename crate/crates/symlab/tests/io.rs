use symlab::io::{edge_list, graph_json, parse_edge_list, parse_graph_json, parse_group_json};
use symlab_core::graph::families;

#[test]
fn edge_list_round_trip() {
    let g = families::petersen();
    let back = parse_edge_list(&edge_list(&g)).unwrap();
    assert_eq!(back.edges(), g.edges());
}

#[test]
fn edge_list_order_and_comments() {
    let g = parse_edge_list("# a path with an isolated vertex\nvertices 4\n0 1\n1 2  # middle\n").unwrap();
    assert_eq!(g.order(), 4);
    assert_eq!(g.size(), 2);
    let h = parse_edge_list("0 1\n1 5\n").unwrap();
    assert_eq!(h.order(), 6);
    assert!(parse_edge_list("0 1 2\n").is_err());
    assert!(parse_edge_list("0 x\n").is_err());
}

#[test]
fn graph_json_round_trip() {
    let g = parse_graph_json(r#"{"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [3, 0]]}"#).unwrap();
    assert_eq!(g.valency(), Some(2));
    let back = parse_graph_json(&graph_json(&g)).unwrap();
    assert_eq!(back.edges(), g.edges());
    let lk33 = families::complete_bipartite(3, 3).line_graph().unwrap();
    let back = parse_graph_json(&graph_json(&lk33)).unwrap();
    assert_eq!(back.labels(), lk33.labels());
}

#[test]
fn group_json() {
    let g = parse_group_json(r#"{"degree": 4, "generators": [[1, 2, 3, 0]]}"#).unwrap();
    assert_eq!(g.order_u64(), Some(4));
    assert!(parse_group_json(r#"{"degree": 3, "generators": [[0, 0, 1]]}"#).is_err());
    assert!(parse_group_json(r#"{"degree": 3, "generators": [[0, 1]]}"#).is_err());
}
