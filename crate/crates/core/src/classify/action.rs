//! Orbit counting on shapes through the stabilizer of a root vertex.
//!
//! For a vertex-transitive group `A`, orbits of `A` on ordered shapes are in
//! bijection with orbits of `A_v` on the shapes starting at `v`. Unordered
//! shapes through `v` that are equivalent under `A` may only be equivalent
//! through elements moving `v`; those are found by mapping each other vertex
//! of a shape to `v` with a transversal element.

use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, ShapeKind};
use crate::group::{PermGroup, UnionFind};
use crate::perm::Permutation;

/// The shapes whose orbits are counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Shape {
    Edge,
    Kind(ShapeKind),
}

impl Shape {
    fn is_ordered(self) -> bool {
        match self {
            Shape::Edge => false,
            Shape::Kind(k) => k.is_ordered(),
        }
    }

    pub(crate) fn normalize(self, t: &mut [u32]) {
        match self {
            Shape::Edge | Shape::Kind(ShapeKind::Triangle) | Shape::Kind(ShapeKind::InducedPathTriple) => t.sort_unstable(),
            Shape::Kind(ShapeKind::Path2)
                if t[0] > t[2] => {
                    t.swap(0, 2);
                }
            _ => {}
        }
    }
}

/// A group of automorphisms of a graph, prepared at a root vertex.
pub(crate) struct RootedAction<'a> {
    pub graph: &'a Graph,
    /// The group, with a base starting at `root`.
    pub group: PermGroup,
    pub root: u32,
    pub stabilizer: PermGroup,
    pub vertex_transitive: bool,
}

impl<'a> RootedAction<'a> {
    pub fn new(graph: &'a Graph, group: &PermGroup, root: u32) -> Result<Self> {
        if group.degree() != graph.order() {
            return Err(Error::Structure("group degree differs from graph order".into()));
        }
        for g in group.generators() {
            if !graph.preserves_adjacency(g.images()) {
                return Err(Error::Contract("group element does not preserve adjacency".into()));
            }
        }
        graph.check_vertex(root)?;
        let group = group.with_base(&[root])?;
        let stabilizer = group.point_stabilizer(root)?;
        let vertex_transitive = group.orbit(root)?.len() == graph.order();
        Ok(RootedAction {
            graph,
            group,
            root,
            stabilizer,
            vertex_transitive,
        })
    }

    fn shapes(&self, shape: Shape) -> Result<Vec<Vec<u32>>> {
        let v = self.root;
        Ok(match shape {
            Shape::Edge => self
                .graph
                .neighbors(v)
                .iter()
                .map(|&w| if v < w { alloc::vec![v, w] } else { alloc::vec![w, v] })
                .collect(),
            Shape::Kind(k) => self.graph.shapes_at(k, v)?,
        })
    }

    /// Number of orbits of the whole group on the shapes through the root
    /// (for ordered shapes: starting at the root).
    pub fn orbits_at_root(&self, shape: Shape) -> Result<usize> {
        let tuples = self.shapes(shape)?;
        if tuples.is_empty() {
            return Ok(0);
        }
        let index: HashMap<&[u32], usize> = tuples.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
        let mut uf = UnionFind::new(tuples.len());
        let mut img: Vec<u32> = Vec::new();
        let join = |uf: &mut UnionFind, i: usize, g: &Permutation, img: &mut Vec<u32>| -> Result<()> {
            img.clear();
            img.extend(tuples[i].iter().map(|&p| g.image(p)));
            shape.normalize(img);
            match index.get(img.as_slice()) {
                Some(&j) => {
                    uf.union(i, j);
                    Ok(())
                }
                None => Err(Error::InvariantViolation("shape image is not a shape through the root".into())),
            }
        };
        for i in 0..tuples.len() {
            for g in self.stabilizer.generators() {
                join(&mut uf, i, g, &mut img)?;
            }
        }
        if !shape.is_ordered() {
            let reps: Vec<usize> = uf.classes().into_iter().map(|c| c[0]).collect();
            for i in reps {
                for &w in &tuples[i] {
                    if w == self.root {
                        continue;
                    }
                    if let Some(t) = self.group.transversal(w) {
                        join(&mut uf, i, &t.inverse(), &mut img)?;
                    }
                }
            }
        }
        Ok(uf.classes().len())
    }

    /// Transitive on all shapes of this kind; vacuously true when there are none.
    pub fn transitive_on(&self, shape: Shape) -> Result<bool> {
        if !self.vertex_transitive {
            return Ok(false);
        }
        Ok(self.orbits_at_root(shape)? <= 1)
    }

    /// Number of shapes of a kind in the whole graph, assuming the counts at
    /// every vertex agree (true for vertex-transitive graphs).
    pub fn shapes_per_root(&self, shape: Shape) -> Result<usize> {
        Ok(self.shapes(shape)?.len())
    }
}
