use alloc::vec;
use alloc::vec::Vec;

use super::Graph;

/// Diameter is only computed up to this many vertices.
pub const DIAMETER_LIMIT: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diameter {
    Finite(u32),
    /// The graph is disconnected.
    Infinite,
    /// Too many vertices to compute.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basics {
    pub order: usize,
    pub size: usize,
    pub regular: bool,
    pub valency: Option<usize>,
    /// `None` for forests.
    pub girth: Option<u32>,
    pub diameter: Diameter,
    pub connected: bool,
    /// The two colour classes when the graph is bipartite.
    pub bipartition: Option<(Vec<u32>, Vec<u32>)>,
}

impl Graph {
    pub fn basics(&self) -> Basics {
        let valency = self.valency();
        let connected = self.is_connected();
        let diameter = if !connected {
            Diameter::Infinite
        } else if self.order() > DIAMETER_LIMIT {
            Diameter::Skipped
        } else {
            Diameter::Finite(self.diameter_exact())
        };
        Basics {
            order: self.order(),
            size: self.size(),
            regular: valency.is_some(),
            valency,
            girth: self.girth(),
            diameter,
            connected,
            bipartition: self.bipartition(),
        }
    }

    fn diameter_exact(&self) -> u32 {
        (0..self.order() as u32)
            .map(|s| self.distances_from(s).into_iter().max().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    /// Length of a shortest cycle, `None` if there is none.
    pub fn girth(&self) -> Option<u32> {
        let n = self.order();
        let mut best = u32::MAX;
        let mut dist = vec![u32::MAX; n];
        let mut parent = vec![u32::MAX; n];
        let mut touched: Vec<u32> = Vec::new();
        for s in 0..n as u32 {
            for &t in &touched {
                dist[t as usize] = u32::MAX;
            }
            touched.clear();
            dist[s as usize] = 0;
            parent[s as usize] = u32::MAX;
            touched.push(s);
            let mut i = 0;
            while i < touched.len() {
                let u = touched[i];
                let du = dist[u as usize];
                // A cycle through s found at this depth is at least 2*du+1 long.
                if 2 * du + 1 >= best {
                    break;
                }
                for &v in self.neighbors(u) {
                    if dist[v as usize] == u32::MAX {
                        dist[v as usize] = du + 1;
                        parent[v as usize] = u;
                        touched.push(v);
                    } else if parent[u as usize] != v {
                        best = best.min(du + dist[v as usize] + 1);
                    }
                }
                i += 1;
            }
            if best == 3 {
                break;
            }
        }
        (best != u32::MAX).then_some(best)
    }

    /// Two-colouring, when one exists.
    pub fn bipartition(&self) -> Option<(Vec<u32>, Vec<u32>)> {
        let n = self.order();
        let mut colour = vec![u8::MAX; n];
        for s in 0..n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut stack = vec![s as u32];
            while let Some(u) = stack.pop() {
                for &v in self.neighbors(u) {
                    if colour[v as usize] == u8::MAX {
                        colour[v as usize] = 1 - colour[u as usize];
                        stack.push(v);
                    } else if colour[v as usize] == colour[u as usize] {
                        return None;
                    }
                }
            }
        }
        let (a, b): (Vec<u32>, Vec<u32>) = (0..n as u32).partition(|&v| colour[v as usize] == 0);
        Some((a, b))
    }
}
