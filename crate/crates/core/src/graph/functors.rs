use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::{Graph, Label};
use crate::error::{Error, Result};

/// Bron–Kerbosch is only attempted up to this many vertices.
pub const CLIQUE_ENUMERATION_LIMIT: usize = 2000;

/// A quotient graph together with the cell of each quotient vertex.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub graph: Graph,
    /// True when the quotient has the same valency as the host graph.
    pub is_normal_cover: bool,
}

impl Graph {
    /// Vertices are the edges of `self` in lexicographic order, adjacent when
    /// they share an endpoint.
    pub fn line_graph(&self) -> Result<Graph> {
        let edges = self.edges();
        if edges.is_empty() {
            return Err(Error::Input("line graph of an edgeless graph".into()));
        }
        let index: HashMap<(u32, u32), u32> = edges.iter().enumerate().map(|(i, &e)| (e, i as u32)).collect();
        let key = |a: u32, b: u32| if a < b { (a, b) } else { (b, a) };
        let mut adj = vec![Vec::new(); edges.len()];
        for v in 0..self.order() as u32 {
            let incident: Vec<u32> = self.neighbors(v).iter().map(|&w| index[&key(v, w)]).collect();
            for (i, &e) in incident.iter().enumerate() {
                for &f in &incident[i + 1..] {
                    adj[e as usize].push(f);
                    adj[f as usize].push(e);
                }
            }
        }
        let labels = edges.iter().map(|&(u, v)| Label::Edge(u, v)).collect();
        Graph::from_adjacency_unchecked(adj).with_labels(labels)
    }

    /// Maximal cliques, sorted, as vertex sets.
    pub fn maximal_cliques(&self) -> Result<Vec<Vec<u32>>> {
        let mut cliques = match self.local_clique_decomposition() {
            Some(c) => c,
            None => {
                if self.order() > CLIQUE_ENUMERATION_LIMIT {
                    return Err(Error::CapExceeded(alloc::format!(
                        "clique enumeration is limited to {CLIQUE_ENUMERATION_LIMIT} vertices"
                    )));
                }
                self.bron_kerbosch()
            }
        };
        cliques.sort_unstable();
        cliques.dedup();
        Ok(cliques)
    }

    /// When every neighbourhood is a disjoint union of cliques, the maximal
    /// cliques are `{v}` joined with each neighbourhood component.
    fn local_clique_decomposition(&self) -> Option<Vec<Vec<u32>>> {
        let mut out = Vec::new();
        for v in 0..self.order() as u32 {
            if self.degree(v) == 0 {
                out.push(vec![v]);
                continue;
            }
            for comp in self.neighbourhood_components(v) {
                // A component is a clique iff each member sees all the others.
                let k = comp.len();
                let inside = comp
                    .iter()
                    .all(|&x| comp.iter().filter(|&&y| y != x && self.adjacent(x, y)).count() == k - 1);
                if !inside {
                    return None;
                }
                if v < comp[0] {
                    let mut c = comp;
                    c.push(v);
                    c.sort_unstable();
                    out.push(c);
                }
            }
        }
        Some(out)
    }

    /// Components of `[Γ(v)]` as sorted vertex lists of `self`.
    fn neighbourhood_components(&self, v: u32) -> Vec<Vec<u32>> {
        let nb = self.neighbors(v);
        let mut seen = vec![false; nb.len()];
        let mut comps = Vec::new();
        for s in 0..nb.len() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let x = nb[comp[i]];
                for (j, &y) in nb.iter().enumerate() {
                    if !seen[j] && self.adjacent(x, y) {
                        seen[j] = true;
                        comp.push(j);
                    }
                }
                i += 1;
            }
            let mut c: Vec<u32> = comp.into_iter().map(|j| nb[j]).collect();
            c.sort_unstable();
            comps.push(c);
        }
        comps
    }

    pub(crate) fn bron_kerbosch(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let p: Vec<u32> = (0..self.order() as u32).collect();
        self.bk(&mut Vec::new(), p, Vec::new(), &mut out);
        out
    }

    fn bk(&self, r: &mut Vec<u32>, p: Vec<u32>, x: Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if p.is_empty() {
            if x.is_empty() {
                let mut c = r.clone();
                c.sort_unstable();
                out.push(c);
            }
            return;
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&w| self.adjacent(u, w)).count())
            .unwrap();
        let candidates: Vec<u32> = p.iter().copied().filter(|&v| !self.adjacent(pivot, v)).collect();
        let mut p = p;
        let mut x = x;
        for v in candidates {
            let np = p.iter().copied().filter(|&w| self.adjacent(v, w)).collect();
            let nx = x.iter().copied().filter(|&w| self.adjacent(v, w)).collect();
            r.push(v);
            self.bk(r, np, nx, out);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }

    /// Maximal cliques as vertices, adjacent when they share a vertex.
    pub fn clique_graph(&self) -> Result<Graph> {
        let cliques = self.maximal_cliques()?;
        let mut containing = vec![Vec::new(); self.order()];
        for (i, c) in cliques.iter().enumerate() {
            for &v in c {
                containing[v as usize].push(i as u32);
            }
        }
        let mut adj = vec![Vec::new(); cliques.len()];
        for list in &containing {
            for (i, &a) in list.iter().enumerate() {
                for &b in &list[i + 1..] {
                    adj[a as usize].push(b);
                    adj[b as usize].push(a);
                }
            }
        }
        let labels = cliques.into_iter().map(Label::Set).collect();
        Graph::from_adjacency_unchecked(adj).with_labels(labels)
    }

    /// `[Γ(v)]`, labelled by the original vertices.
    pub fn local_subgraph(&self, v: u32) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.induced_subgraph(self.neighbors(v)))
    }

    /// `[Γ(v)]^c`, labelled by the original vertices.
    pub fn local_complement(&self, v: u32) -> Result<Graph> {
        Ok(self.local_subgraph(v)?.complement())
    }

    /// `Some(n)` iff every neighbourhood induces two disjoint copies of `K_n`.
    pub fn locally_2kn(&self) -> Option<usize> {
        let k = self.valency()?;
        if k < 2 || k % 2 != 0 || self.order() == 0 {
            return None;
        }
        let n = k / 2;
        for v in 0..self.order() as u32 {
            let comps = self.neighbourhood_components(v);
            if comps.len() != 2 {
                return None;
            }
            for c in &comps {
                if c.len() != n {
                    return None;
                }
                if c.iter().any(|&x| c.iter().any(|&y| x != y && !self.adjacent(x, y))) {
                    return None;
                }
            }
        }
        Some(n)
    }

    /// Vertices are the cells of `partition`, adjacent when some edge joins them.
    pub fn quotient_graph(&self, partition: &[Vec<u32>]) -> Result<Quotient> {
        let n = self.order();
        let mut cell = vec![u32::MAX; n];
        for (i, c) in partition.iter().enumerate() {
            if c.is_empty() {
                return Err(Error::Input("partition has an empty cell".into()));
            }
            for &v in c {
                if v as usize >= n || cell[v as usize] != u32::MAX {
                    return Err(Error::Input(alloc::format!("vertex {v} is out of range or in two cells")));
                }
                cell[v as usize] = i as u32;
            }
        }
        if cell.contains(&u32::MAX) {
            return Err(Error::Input("partition does not cover every vertex".into()));
        }
        let mut adj = vec![Vec::new(); partition.len()];
        for (u, v) in self.edges() {
            let (a, b) = (cell[u as usize], cell[v as usize]);
            if a != b {
                adj[a as usize].push(b);
                adj[b as usize].push(a);
            }
        }
        let graph = Graph::from_adjacency_unchecked(adj);
        let labels = partition
            .iter()
            .map(|c| {
                let mut c = c.clone();
                c.sort_unstable();
                Label::Set(c)
            })
            .collect();
        let graph = graph.with_labels(labels)?;
        let is_normal_cover = match (self.valency(), graph.valency()) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        };
        Ok(Quotient {
            graph,
            is_normal_cover,
        })
    }

    pub(crate) fn check_vertex(&self, v: u32) -> Result<()> {
        if (v as usize) < self.order() {
            Ok(())
        } else {
            Err(Error::Domain(alloc::format!("vertex {v} out of range 0..{}", self.order())))
        }
    }
}
