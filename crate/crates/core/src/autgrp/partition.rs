//! Ordered partitions with equitable refinement.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// An ordered partition of the vertices. Cells are contiguous ranges of
/// `elems` and are identified by their start position.
#[derive(Clone, Debug)]
pub(crate) struct Partition {
    pub elems: Vec<u32>,
    pos: Vec<u32>,
    /// Start position of the cell holding each vertex.
    cell_of: Vec<u32>,
    /// End position of each cell, indexed by its start.
    end: Vec<u32>,
    pub cells: usize,
}

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    (h ^ x).wrapping_mul(0x0100_0000_01b3).rotate_left(29) ^ 0x9e37_79b9_7f4a_7c15
}

impl Partition {
    /// Cells by degree, lowest first.
    pub fn by_degree(g: &Graph) -> Self {
        let n = g.order();
        let mut elems: Vec<u32> = (0..n as u32).collect();
        elems.sort_by_key(|&v| (g.degree(v), v));
        let mut p = Partition {
            elems,
            pos: vec![0; n],
            cell_of: vec![0; n],
            end: vec![0; n],
            cells: 0,
        };
        let mut s = 0;
        while s < n {
            let d = g.degree(p.elems[s]);
            let mut e = s;
            while e < n && g.degree(p.elems[e]) == d {
                e += 1;
            }
            p.set_cell(s, e);
            s = e;
        }
        p
    }

    fn set_cell(&mut self, s: usize, e: usize) {
        for i in s..e {
            let v = self.elems[i];
            self.pos[v as usize] = i as u32;
            self.cell_of[v as usize] = s as u32;
        }
        self.end[s] = e as u32;
        self.cells += 1;
    }

    pub fn is_discrete(&self) -> bool {
        self.cells == self.elems.len()
    }

    pub fn cell_starts(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.cells);
        let mut s = 0usize;
        while s < self.elems.len() {
            out.push(s as u32);
            s = self.end[s] as usize;
        }
        out
    }

    pub fn cell(&self, start: u32) -> &[u32] {
        &self.elems[start as usize..self.end[start as usize] as usize]
    }

    /// Position of each vertex; a labeling once the partition is discrete.
    pub fn positions(&self) -> &[u32] {
        &self.pos
    }

    /// First smallest non-singleton cell.
    pub fn target_cell(&self) -> Option<u32> {
        let mut best: Option<(u32, u32)> = None;
        for s in self.cell_starts() {
            let size = self.end[s as usize] - s;
            if size > 1 && best.is_none_or(|(_, b)| size < b) {
                best = Some((s, size));
            }
        }
        best.map(|(s, _)| s)
    }

    /// Splits `v` off the front of its cell; returns the new singleton's start.
    pub fn individualize(&mut self, v: u32) -> u32 {
        let s = self.cell_of[v as usize] as usize;
        let e = self.end[s] as usize;
        debug_assert!(e - s > 1);
        let p = self.pos[v as usize] as usize;
        self.elems.swap(s, p);
        self.cells -= 1;
        self.set_cell(s, s + 1);
        self.set_cell(s + 1, e);
        s as u32
    }

    /// Refines to the coarsest equitable partition below the current one,
    /// starting from the given splitter cells.
    pub fn refine(&mut self, g: &Graph, splitters: &[u32]) {
        let n = self.elems.len();
        let mut in_queue = vec![false; n];
        let mut queue: Vec<u32> = Vec::new();
        for &s in splitters {
            if !in_queue[s as usize] {
                in_queue[s as usize] = true;
                queue.push(s);
            }
        }
        let mut count = vec![0u32; n];
        let mut touched_vertices: Vec<u32> = Vec::new();
        let mut touched_cells: Vec<u32> = Vec::new();
        let mut cell_touched = vec![false; n];
        let mut head = 0;
        while head < queue.len() && !self.is_discrete() {
            let w = queue[head];
            head += 1;
            in_queue[w as usize] = false;
            let we = self.end[w as usize];
            for i in w..we {
                let x = self.elems[i as usize];
                for &y in g.neighbors(x) {
                    if count[y as usize] == 0 {
                        touched_vertices.push(y);
                        let c = self.cell_of[y as usize];
                        if !cell_touched[c as usize] {
                            cell_touched[c as usize] = true;
                            touched_cells.push(c);
                        }
                    }
                    count[y as usize] += 1;
                }
            }
            touched_cells.sort_unstable();
            for &c in &touched_cells {
                let s = c as usize;
                cell_touched[s] = false;
                let e = self.end[s] as usize;
                if e - s == 1 {
                    continue;
                }
                self.elems[s..e].sort_unstable_by_key(|&v| (count[v as usize], v));
                let first = count[self.elems[s] as usize];
                if first == count[self.elems[e - 1] as usize] {
                    continue;
                }
                // Split into fragments of equal count.
                self.cells -= 1;
                let mut frags: Vec<(usize, usize)> = Vec::new();
                let mut a = s;
                while a < e {
                    let k = count[self.elems[a] as usize];
                    let mut b = a;
                    while b < e && count[self.elems[b] as usize] == k {
                        b += 1;
                    }
                    frags.push((a, b));
                    a = b;
                }
                for &(a, b) in &frags {
                    self.set_cell(a, b);
                }
                if in_queue[s] {
                    for &(a, _) in &frags[1..] {
                        in_queue[a] = true;
                        queue.push(a as u32);
                    }
                } else {
                    let largest = frags
                        .iter()
                        .enumerate()
                        .max_by_key(|(i, &(a, b))| (b - a, usize::MAX - i))
                        .map(|(i, _)| i)
                        .unwrap();
                    for (i, &(a, _)) in frags.iter().enumerate() {
                        if i != largest {
                            in_queue[a] = true;
                            queue.push(a as u32);
                        }
                    }
                }
            }
            for &v in &touched_vertices {
                count[v as usize] = 0;
            }
            touched_vertices.clear();
            touched_cells.clear();
        }
    }

    /// Isomorphism invariant of an equitable partition: the cell sizes and
    /// the quotient matrix, hashed.
    pub fn invariant(&self, g: &Graph) -> u64 {
        let mut h = self.cells as u64;
        let mut row: Vec<(u32, u32)> = Vec::new();
        for s in self.cell_starts() {
            h = mix(h, (self.end[s as usize] - s) as u64);
            let rep = self.elems[s as usize];
            row.clear();
            for &y in g.neighbors(rep) {
                let c = self.cell_of[y as usize];
                match row.iter_mut().find(|(cc, _)| *cc == c) {
                    Some(e) => e.1 += 1,
                    None => row.push((c, 1)),
                }
            }
            row.sort_unstable();
            for &(c, k) in &row {
                h = mix(h, ((c as u64) << 32) | k as u64);
            }
            h = mix(h, u64::MAX);
        }
        h
    }
}
