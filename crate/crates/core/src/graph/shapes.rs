use alloc::vec;
use alloc::vec::Vec;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShapeKind {
    /// `s`-arcs `(v0, ..., vs)` without immediate backtracking, `1 <= s <= 3`.
    Arc(usize),
    /// 2-arcs `(u, v, w)` with `u` and `w` at distance 2.
    Geodesic2,
    /// 2-arcs up to reversal, stored with first entry below the last.
    Path2,
    /// Vertex sets of induced paths on three vertices, sorted.
    InducedPathTriple,
    /// Vertex sets of triangles, sorted.
    Triangle,
    /// Triangles as ordered triples (all six orderings).
    OrderedTriangle,
}

impl ShapeKind {
    /// Ordered kinds are tuples; the others are sets or tuples up to reversal.
    pub fn is_ordered(self) -> bool {
        matches!(self, ShapeKind::Arc(_) | ShapeKind::Geodesic2 | ShapeKind::OrderedTriangle)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeSet {
    pub kind: ShapeKind,
    pub tuples: Vec<Vec<u32>>,
}

impl ShapeSet {
    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }
}

impl Graph {
    /// Every shape of the given kind, in lexicographic order.
    pub fn enumerate_shapes(&self, kind: ShapeKind) -> Result<ShapeSet> {
        check_kind(kind)?;
        let mut tuples = Vec::new();
        for v in 0..self.order() as u32 {
            for t in self.shapes_at(kind, v)? {
                if owner(kind, &t) == v {
                    tuples.push(t);
                }
            }
        }
        tuples.sort_unstable();
        Ok(ShapeSet { kind, tuples })
    }

    /// Shapes rooted at `v`: ordered kinds starting at `v`, unordered kinds
    /// containing `v`. Sorted.
    pub fn shapes_at(&self, kind: ShapeKind, v: u32) -> Result<Vec<Vec<u32>>> {
        check_kind(kind)?;
        self.check_vertex(v)?;
        let mut out = Vec::new();
        match kind {
            ShapeKind::Arc(s) => {
                let mut walk = vec![v];
                self.extend_arcs(&mut walk, s, &mut out);
            }
            ShapeKind::Geodesic2 | ShapeKind::OrderedTriangle => {
                let want_edge = kind == ShapeKind::OrderedTriangle;
                for &u in self.neighbors(v) {
                    for &w in self.neighbors(u) {
                        if w != v && self.adjacent(v, w) == want_edge {
                            out.push(vec![v, u, w]);
                        }
                    }
                }
            }
            ShapeKind::Path2 => {
                // v as an end or as the middle.
                for &u in self.neighbors(v) {
                    for &w in self.neighbors(u) {
                        if w != v {
                            out.push(ordered_path(v, u, w));
                        }
                    }
                }
                let nb = self.neighbors(v);
                for (i, &x) in nb.iter().enumerate() {
                    for &y in &nb[i + 1..] {
                        out.push(vec![x, v, y]);
                    }
                }
            }
            ShapeKind::InducedPathTriple | ShapeKind::Triangle => {
                let want_edge = kind == ShapeKind::Triangle;
                for &u in self.neighbors(v) {
                    for &w in self.neighbors(u) {
                        if w != v && self.adjacent(v, w) == want_edge {
                            out.push(sorted3(v, u, w));
                        }
                    }
                }
                if !want_edge {
                    let nb = self.neighbors(v);
                    for (i, &x) in nb.iter().enumerate() {
                        for &y in &nb[i + 1..] {
                            if !self.adjacent(x, y) {
                                out.push(sorted3(x, v, y));
                            }
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    fn extend_arcs(&self, walk: &mut Vec<u32>, s: usize, out: &mut Vec<Vec<u32>>) {
        if walk.len() == s + 1 {
            out.push(walk.clone());
            return;
        }
        let last = *walk.last().unwrap();
        let prev = if walk.len() >= 2 { Some(walk[walk.len() - 2]) } else { None };
        for &w in self.neighbors(last) {
            if Some(w) != prev {
                walk.push(w);
                self.extend_arcs(walk, s, out);
                walk.pop();
            }
        }
    }

    /// Number of triangles, by scanning each edge's common neighbours.
    pub fn count_triangles(&self) -> u64 {
        let mut count = 0u64;
        for u in 0..self.order() as u32 {
            for &v in self.neighbors(u) {
                if v <= u {
                    continue;
                }
                for &w in self.neighbors(v) {
                    if w > v && self.adjacent(u, w) {
                        count += 1;
                    }
                }
            }
        }
        count
    }
}

fn check_kind(kind: ShapeKind) -> Result<()> {
    match kind {
        ShapeKind::Arc(s) if !(1..=3).contains(&s) => {
            Err(Error::Domain(alloc::format!("arc length {s} outside 1..=3")))
        }
        _ => Ok(()),
    }
}

/// The vertex through which a shape is listed exactly once.
fn owner(kind: ShapeKind, t: &[u32]) -> u32 {
    if kind.is_ordered() {
        t[0]
    } else {
        *t.iter().min().unwrap()
    }
}

fn ordered_path(a: u32, b: u32, c: u32) -> Vec<u32> {
    if a < c {
        vec![a, b, c]
    } else {
        vec![c, b, a]
    }
}

fn sorted3(a: u32, b: u32, c: u32) -> Vec<u32> {
    let mut t = vec![a, b, c];
    t.sort_unstable();
    t
}
