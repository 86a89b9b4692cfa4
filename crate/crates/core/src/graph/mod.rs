//! Finite simple undirected graphs and the functors used on them.

mod basics;
mod cayley;
pub mod families;
mod functors;
mod shapes;

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub use basics::{Basics, Diameter, DIAMETER_LIMIT};
pub use cayley::cayley_graph;
pub use functors::{Quotient, CLIQUE_ENUMERATION_LIMIT};
pub use shapes::{ShapeKind, ShapeSet};

/// Graphs up to this order also keep adjacency as bit rows.
pub const BIT_ROW_LIMIT: usize = 1 << 14;

/// Where a vertex came from, when a functor built the graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    /// A vertex of the host graph.
    Vertex(u32),
    /// An edge `{u, v}` of the host graph, `u < v`.
    Edge(u32, u32),
    /// A vertex set of the host graph, sorted.
    Set(Vec<u32>),
}

#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    bits: Option<Vec<u64>>,
    words: usize,
    labels: Option<Vec<Label>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge list; duplicates collapse.
    pub fn from_edge_list(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(Error::Input(alloc::format!("edge {{{u}, {v}}} has an endpoint outside 0..{n}")));
            }
            if u == v {
                return Err(Error::Input(alloc::format!("loop at vertex {u}")));
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        Ok(Self::from_adjacency_unchecked(adj))
    }

    /// Sorts and deduplicates the rows; the caller guarantees symmetry and no loops.
    pub(crate) fn from_adjacency_unchecked(mut adj: Vec<Vec<u32>>) -> Self {
        for row in adj.iter_mut() {
            row.sort_unstable();
            row.dedup();
        }
        let n = adj.len();
        let words = n.div_ceil(64);
        let bits = (n <= BIT_ROW_LIMIT).then(|| {
            let mut b = vec![0u64; n * words];
            for (u, row) in adj.iter().enumerate() {
                for &v in row {
                    b[u * words + (v as usize >> 6)] |= 1 << (v & 63);
                }
            }
            b
        });
        Graph {
            adj,
            bits,
            words,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<Label>) -> Result<Self> {
        if labels.len() != self.order() {
            return Err(Error::Input("label count differs from vertex count".into()));
        }
        let mut sorted = labels.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Input("labels must be distinct".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[Label]> {
        self.labels.as_deref()
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    #[inline]
    pub fn adjacent(&self, u: u32, v: u32) -> bool {
        match &self.bits {
            Some(b) => b[u as usize * self.words + (v as usize >> 6)] >> (v & 63) & 1 == 1,
            None => self.adj[u as usize].binary_search(&v).is_ok(),
        }
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.size());
        for (u, row) in self.adj.iter().enumerate() {
            for &v in row {
                if (u as u32) < v {
                    out.push((u as u32, v));
                }
            }
        }
        out
    }

    /// The valency if the graph is regular (0 for the empty graph).
    pub fn valency(&self) -> Option<usize> {
        let k = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|r| r.len() == k).then_some(k)
    }

    /// Image of the graph under a vertex relabeling `v -> perm[v]`.
    pub fn relabeled(&self, perm: &[u32]) -> Graph {
        let mut adj = vec![Vec::new(); self.order()];
        for (u, row) in self.adj.iter().enumerate() {
            adj[perm[u] as usize] = row.iter().map(|&v| perm[v as usize]).collect();
        }
        Graph::from_adjacency_unchecked(adj)
    }

    /// True iff `perm` maps edges to edges (and hence non-edges to non-edges).
    pub fn preserves_adjacency(&self, perm: &[u32]) -> bool {
        perm.len() == self.order()
            && self.adj.iter().enumerate().all(|(u, row)| {
                let pu = perm[u];
                row.iter().all(|&v| self.adjacent(pu, perm[v as usize]))
            })
    }

    /// Induced subgraph on `vertices` (in the given order); labels point back.
    pub fn induced_subgraph(&self, vertices: &[u32]) -> Graph {
        let mut pos = hashbrown::HashMap::with_capacity(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            pos.insert(v, i as u32);
        }
        let adj = vertices
            .iter()
            .map(|&v| self.neighbors(v).iter().filter_map(|w| pos.get(w).copied()).collect())
            .collect();
        let mut g = Graph::from_adjacency_unchecked(adj);
        g.labels = Some(vertices.iter().map(|&v| Label::Vertex(v)).collect());
        g
    }

    /// Complement graph; labels are kept.
    pub fn complement(&self) -> Graph {
        let n = self.order() as u32;
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && !self.adjacent(u, v)).collect())
            .collect();
        let mut g = Graph::from_adjacency_unchecked(adj);
        g.labels = self.labels.clone();
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s as u32];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                for &v in self.neighbors(u) {
                    if !seen[v as usize] {
                        seen[v as usize] = true;
                        comp.push(v);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    /// Breadth-first distances from `s`; unreachable vertices get `u32::MAX`.
    pub fn distances_from(&self, s: u32) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.order()];
        dist[s as usize] = 0;
        let mut queue = vec![s];
        let mut i = 0;
        while i < queue.len() {
            let u = queue[i];
            for &v in self.neighbors(u) {
                if dist[v as usize] == u32::MAX {
                    dist[v as usize] = dist[u as usize] + 1;
                    queue.push(v);
                }
            }
            i += 1;
        }
        dist
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.adj.iter().all(|r| r.len() + 1 == n)
    }
}

#[cfg(test)]
mod tests;
