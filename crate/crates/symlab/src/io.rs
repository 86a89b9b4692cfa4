//! Graph and group files.
//!
//! Graphs are read from JSON (`{"n": 4, "edges": [[0, 1], ...]}`) or from a
//! plain edge list with one `u v` pair per line. An edge list may start with
//! `vertices N` to fix the order; otherwise it is one more than the largest
//! vertex. `#` starts a comment in edge lists.
//!
//! Groups are JSON objects `{"degree": n, "generators": [[images], ...]}`,
//! each generator given by the images of `0..n`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use symlab_core::graph::Label;
use symlab_core::{Error, Graph, PermGroup, Permutation, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LabelJson {
    Vertex(u32),
    Edge([u32; 2]),
    Set(Vec<u32>),
}

impl From<&Label> for LabelJson {
    fn from(l: &Label) -> Self {
        match l {
            Label::Vertex(v) => LabelJson::Vertex(*v),
            Label::Edge(u, v) => LabelJson::Edge([*u, *v]),
            Label::Set(s) => LabelJson::Set(s.clone()),
        }
    }
}

impl From<LabelJson> for Label {
    fn from(l: LabelJson) -> Self {
        match l {
            LabelJson::Vertex(v) => Label::Vertex(v),
            LabelJson::Edge([u, v]) => Label::Edge(u, v),
            LabelJson::Set(s) => Label::Set(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[u32; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<LabelJson>>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        GraphJson {
            n: g.order(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            labels: g.labels().map(|ls| ls.iter().map(LabelJson::from).collect()),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let edges: Vec<(u32, u32)> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        let g = Graph::from_edge_list(self.n, &edges)?;
        match &self.labels {
            Some(ls) => g.with_labels(ls.iter().cloned().map(Label::from).collect()),
            None => Ok(g),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupJson {
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

pub fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut order: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let bad = || Error::Input(format!("edge list line {}: cannot parse '{line}'", i + 1));
        match fields.as_slice() {
            ["vertices", n] if order.is_none() && edges.is_empty() => {
                order = Some(n.parse().map_err(|_| bad())?);
            }
            [u, v] => edges.push((u.parse().map_err(|_| bad())?, v.parse().map_err(|_| bad())?)),
            _ => return Err(bad()),
        }
    }
    let n = order.unwrap_or_else(|| edges.iter().map(|&(u, v): &(u32, u32)| u.max(v) as usize + 1).max().unwrap_or(0));
    Graph::from_edge_list(n, &edges)
}

pub fn edge_list(g: &Graph) -> String {
    let mut out = format!("vertices {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_graph_json(text: &str) -> Result<Graph> {
    let parsed: GraphJson = serde_json::from_str(text).map_err(|e| Error::Input(format!("graph JSON: {e}")))?;
    parsed.to_graph()
}

/// Reads a graph, choosing the format by the `.json` extension.
pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = read(path)?;
    if path.extension().is_some_and(|e| e == "json") {
        parse_graph_json(&text)
    } else {
        parse_edge_list(&text)
    }
}

pub fn graph_json(g: &Graph) -> String {
    let mut s = serde_json::to_string_pretty(&GraphJson::from_graph(g)).expect("graph JSON serializes");
    s.push('\n');
    s
}

pub fn parse_group_json(text: &str) -> Result<PermGroup> {
    let parsed: GroupJson = serde_json::from_str(text).map_err(|e| Error::Input(format!("group JSON: {e}")))?;
    let gens = parsed
        .generators
        .into_iter()
        .map(|images| {
            if images.len() != parsed.degree {
                return Err(Error::Input(format!(
                    "generator has {} images, degree is {}",
                    images.len(),
                    parsed.degree
                )));
            }
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(parsed.degree, gens)
}

pub fn read_group(path: &Path) -> Result<PermGroup> {
    parse_group_json(&read(path)?)
}

pub fn group_json(g: &PermGroup) -> String {
    let j = GroupJson {
        degree: g.degree(),
        generators: g.generators().iter().map(|p| p.images().to_vec()).collect(),
    };
    serde_json::to_string(&j).expect("group JSON serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use symlab_core::graph::families;

    #[test]
    fn edge_list_round_trip() {
        let g = families::petersen();
        assert_eq!(parse_edge_list(&edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_without_header_and_with_isolated_vertices() {
        let g = parse_edge_list("# a path\n0 1\n1 2 # tail\n\n").unwrap();
        assert_eq!((g.order(), g.size()), (3, 2));
        let h = parse_edge_list("vertices 5\n0 1\n").unwrap();
        assert_eq!((h.order(), h.size()), (5, 1));
        assert!(parse_edge_list("0 1 2\n").is_err());
        assert!(parse_edge_list("0 x\n").is_err());
        assert!(parse_edge_list("vertices 2\n0 5\n").is_err());
    }

    #[test]
    fn json_keeps_labels() {
        let g = families::complete_bipartite(3, 3).line_graph().unwrap();
        let back = parse_graph_json(&graph_json(&g)).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.labels(), g.labels());
    }

    #[test]
    fn group_round_trip_and_bad_degree() {
        let g = PermGroup::symmetric(4);
        let back = parse_group_json(&group_json(&g)).unwrap();
        assert_eq!(back.order(), g.order());
        assert!(parse_group_json(r#"{"degree": 3, "generators": [[1, 0]]}"#).is_err());
        assert!(parse_group_json(r#"{"degree": 2, "generators": [[0, 0]]}"#).is_err());
    }
}
