//! Todd-Coxeter coset enumeration.
//!
//! The default strategy is relator-based (HLT): every live coset scans every
//! relator, defining new cosets to close gaps, and then fills its row. When
//! the table is full, a lookahead pass scans without defining, coincident
//! cosets are merged and the table is compacted. The Felsch strategy instead
//! defines cosets in row order and processes a deduction stack.

use alloc::vec;
use alloc::vec::Vec;

use super::presentation::FinitePresentation;
use super::word::Word;

const UNDEF: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Hlt,
    Felsch,
}

#[derive(Clone, Debug)]
pub struct EnumOptions {
    pub max_cosets: usize,
    pub strategy: Strategy,
}

pub const DEFAULT_MAX_COSETS: usize = 4_000_000;

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            max_cosets: DEFAULT_MAX_COSETS,
            strategy: Strategy::Hlt,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Complete,
    Overflow { live: usize },
}

/// Counters reported alongside a table.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumStats {
    pub total_defined: usize,
    pub max_live: usize,
    pub lookaheads: usize,
}

/// A coset table. Columns are generators and inverses; a generator known to
/// be an involution shares one column with its inverse. Complete tables are
/// standardized: cosets are numbered in breadth-first discovery order from
/// coset 0, scanning columns in generator order.
#[derive(Clone, Debug)]
pub struct CosetTable {
    status: Status,
    stats: EnumStats,
    ncols: usize,
    col_of: Vec<[u32; 2]>,
    inv_col: Vec<u32>,
    col_letter: Vec<(u32, bool)>,
    rows: usize,
    data: Vec<u32>,
    parent: Vec<u32>,
    parent_col: Vec<u32>,
}

impl CosetTable {
    pub fn status(&self) -> Status {
        self.status
    }

    pub fn is_complete(&self) -> bool {
        self.status == Status::Complete
    }

    pub fn stats(&self) -> EnumStats {
        self.stats
    }

    /// Number of cosets (the index, when complete).
    pub fn len(&self) -> usize {
        self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0
    }

    pub fn num_generators(&self) -> usize {
        self.col_of.len()
    }

    pub fn num_columns(&self) -> usize {
        self.ncols
    }

    pub fn column(&self, generator: u32, inverse: bool) -> u32 {
        self.col_of[generator as usize][inverse as usize]
    }

    pub fn inverse_column(&self, col: u32) -> u32 {
        self.inv_col[col as usize]
    }

    /// Generator and direction of a column (involution columns report `false`).
    pub fn column_letter(&self, col: u32) -> (u32, bool) {
        self.col_letter[col as usize]
    }

    #[inline]
    pub fn entry(&self, coset: u32, col: u32) -> u32 {
        self.data[coset as usize * self.ncols + col as usize]
    }

    /// Coset reached from `coset` by the generator (or its inverse).
    pub fn act(&self, coset: u32, generator: u32, inverse: bool) -> u32 {
        self.entry(coset, self.column(generator, inverse))
    }

    /// Coset reached by tracing a word.
    pub fn trace(&self, coset: u32, word: &Word) -> u32 {
        let mut c = coset;
        for (g, inv) in word.letters() {
            c = self.act(c, g, inv);
        }
        c
    }

    /// Parent coset and column in the breadth-first spanning tree.
    pub fn parent(&self, coset: u32) -> Option<(u32, u32)> {
        if coset == 0 {
            None
        } else {
            Some((self.parent[coset as usize], self.parent_col[coset as usize]))
        }
    }

    /// Columns spelling the canonical word of a coset, from coset 0.
    pub fn word_columns(&self, coset: u32) -> Vec<u32> {
        let mut cols = Vec::new();
        let mut c = coset;
        while c != 0 {
            cols.push(self.parent_col[c as usize]);
            c = self.parent[c as usize];
        }
        cols.reverse();
        cols
    }

    /// Canonical (breadth-first discovery) word of a coset.
    pub fn word_of(&self, coset: u32) -> Word {
        Word::from_letters(self.word_columns(coset).into_iter().map(|c| self.col_letter[c as usize]))
    }
}

/// Column layout derived from the presentation.
struct Layout {
    ncols: usize,
    col_of: Vec<[u32; 2]>,
    inv_col: Vec<u32>,
    col_letter: Vec<(u32, bool)>,
}

fn layout(p: &FinitePresentation) -> Layout {
    let n = p.num_generators();
    let mut involution = vec![false; n];
    for r in p.relators() {
        if let [(g, e)] = r.syllables() {
            if e.abs() == 2 {
                involution[*g as usize] = true;
            }
        }
    }
    let mut col_of = Vec::with_capacity(n);
    let mut inv_col = Vec::new();
    let mut col_letter = Vec::new();
    for (g, &inv) in involution.iter().enumerate() {
        let c = inv_col.len() as u32;
        if inv {
            col_of.push([c, c]);
            inv_col.push(c);
            col_letter.push((g as u32, false));
        } else {
            col_of.push([c, c + 1]);
            inv_col.push(c + 1);
            inv_col.push(c);
            col_letter.push((g as u32, false));
            col_letter.push((g as u32, true));
        }
    }
    Layout {
        ncols: inv_col.len(),
        col_of,
        inv_col,
        col_letter,
    }
}

/// Converts a word to columns, freely and cyclically reduced at column level.
fn word_columns(l: &Layout, w: &Word, cyclic: bool) -> Vec<u32> {
    let mut out: Vec<u32> = Vec::new();
    for (g, inv) in w.letters() {
        let c = l.col_of[g as usize][inv as usize];
        if out.last().is_some_and(|&last| l.inv_col[last as usize] == c) {
            out.pop();
        } else {
            out.push(c);
        }
    }
    if cyclic {
        while out.len() >= 2 && l.inv_col[out[0] as usize] == *out.last().unwrap() {
            out.pop();
            out.remove(0);
        }
    }
    out
}

struct Enumerator {
    ncols: usize,
    inv: Vec<u32>,
    table: Vec<u32>,
    forward: Vec<u32>,
    next: usize,
    live: usize,
    max: usize,
    queue: Vec<u32>,
    felsch: bool,
    deductions: Vec<(u32, u32)>,
    stats: EnumStats,
}

/// Signals that the table has no free row.
struct Full;

impl Enumerator {
    fn new(ncols: usize, inv: Vec<u32>, max: usize, felsch: bool) -> Self {
        let mut e = Enumerator {
            ncols,
            inv,
            table: Vec::new(),
            forward: Vec::new(),
            next: 0,
            live: 0,
            max: max.max(1),
            queue: Vec::new(),
            felsch,
            deductions: Vec::new(),
            stats: EnumStats::default(),
        };
        e.new_row();
        e
    }

    fn new_row(&mut self) -> u32 {
        let c = self.next as u32;
        self.table.extend(core::iter::repeat_n(UNDEF, self.ncols));
        self.forward.push(c);
        self.next += 1;
        self.live += 1;
        self.stats.total_defined += 1;
        self.stats.max_live = self.stats.max_live.max(self.live);
        c
    }

    #[inline]
    fn get(&self, c: u32, x: u32) -> u32 {
        self.table[c as usize * self.ncols + x as usize]
    }

    #[inline]
    fn set(&mut self, c: u32, x: u32, v: u32) {
        self.table[c as usize * self.ncols + x as usize] = v;
    }

    #[inline]
    fn alive(&self, c: u32) -> bool {
        self.forward[c as usize] == c
    }

    fn define(&mut self, c: u32, x: u32) -> Result<u32, Full> {
        if self.next >= self.max {
            return Err(Full);
        }
        let d = self.new_row();
        self.set(c, x, d);
        let ix = self.inv[x as usize];
        self.set(d, ix, c);
        if self.felsch {
            self.deductions.push((c, x));
        }
        Ok(d)
    }

    fn find(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.forward[r as usize] != r {
            r = self.forward[r as usize];
        }
        let mut x = c;
        while self.forward[x as usize] != r {
            let nx = self.forward[x as usize];
            self.forward[x as usize] = r;
            x = nx;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let a = self.find(a);
        let b = self.find(b);
        if a == b {
            return;
        }
        let (keep, kill) = if a < b { (a, b) } else { (b, a) };
        self.forward[kill as usize] = keep;
        self.live -= 1;
        self.queue.push(kill);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for x in 0..self.ncols as u32 {
                let d = self.get(g, x);
                if d == UNDEF {
                    continue;
                }
                let ix = self.inv[x as usize];
                if self.get(d, ix) == g {
                    self.set(d, ix, UNDEF);
                }
                let mu = self.find(g);
                let nu = self.find(d);
                let mx = self.get(mu, x);
                if mx != UNDEF {
                    self.merge(nu, mx);
                } else {
                    let nix = self.get(nu, ix);
                    if nix != UNDEF {
                        self.merge(mu, nix);
                    } else {
                        self.set(mu, x, nu);
                        self.set(nu, ix, mu);
                        if self.felsch {
                            self.deductions.push((mu, x));
                        }
                    }
                }
            }
        }
        self.queue.clear();
    }

    /// Scans `w` from `c`, filling gaps by defining cosets when `fill` is set.
    fn scan(&mut self, c: u32, w: &[u32], fill: bool) -> Result<(), Full> {
        let mut f = c;
        let mut b = c;
        let mut i: isize = 0;
        let mut j: isize = w.len() as isize - 1;
        loop {
            while i <= j {
                let nf = self.get(f, w[i as usize]);
                if nf == UNDEF {
                    break;
                }
                f = nf;
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i {
                let nb = self.get(b, self.inv[w[j as usize] as usize]);
                if nb == UNDEF {
                    break;
                }
                b = nb;
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                let x = w[i as usize];
                self.set(f, x, b);
                self.set(b, self.inv[x as usize], f);
                if self.felsch {
                    self.deductions.push((f, x));
                }
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, w[i as usize])?;
        }
    }

    /// Renumbers live cosets consecutively. Returns the old-to-new map.
    fn compact(&mut self) -> Vec<u32> {
        let mut map = vec![UNDEF; self.next];
        let mut k = 0u32;
        for c in 0..self.next {
            if self.forward[c] == c as u32 {
                map[c] = k;
                k += 1;
            }
        }
        let ncols = self.ncols;
        let mut table = Vec::with_capacity(k as usize * ncols);
        for c in 0..self.next {
            if map[c] == UNDEF {
                continue;
            }
            for x in 0..ncols {
                let v = self.table[c * ncols + x];
                table.push(if v == UNDEF { UNDEF } else { map[v as usize] });
            }
        }
        self.table = table;
        self.next = k as usize;
        self.live = k as usize;
        self.forward = (0..k).collect();
        self.deductions.clear();
        map
    }

    fn lookahead(&mut self, relators: &[Vec<u32>]) {
        self.stats.lookaheads += 1;
        let mut c = 0;
        while c < self.next {
            let cc = c as u32;
            if self.alive(cc) {
                for r in relators {
                    // Scanning without filling never needs a new row.
                    let _ = self.scan(cc, r, false);
                    if !self.alive(cc) {
                        break;
                    }
                }
            }
            c += 1;
        }
    }

    /// First live coset with index at least `c` after a compaction map.
    fn remap_cursor(map: &[u32], c: usize) -> usize {
        map[c..]
            .iter()
            .find(|&&m| m != UNDEF)
            .map(|&m| m as usize)
            .unwrap_or_else(|| map.iter().filter(|&&m| m != UNDEF).count())
    }

    fn relieve(&mut self, relators: &[Vec<u32>], cursor: usize) -> Option<usize> {
        self.lookahead(relators);
        let map = self.compact();
        // Give up when lookahead recovers less than a sliver of the table.
        if self.next + self.max / 64 >= self.max {
            return None;
        }
        Some(Self::remap_cursor(&map, cursor))
    }

    fn run_hlt(&mut self, subgroup: &[Vec<u32>], relators: &[Vec<u32>]) -> bool {
        'subgroup: loop {
            for w in subgroup {
                if self.scan(0, w, true).is_err() {
                    if self.relieve(relators, 0).is_none() {
                        return false;
                    }
                    continue 'subgroup;
                }
            }
            break;
        }
        let mut c = 0usize;
        while c < self.next {
            let cc = c as u32;
            let mut full = false;
            if self.alive(cc) {
                for r in relators {
                    if self.scan(cc, r, true).is_err() {
                        full = true;
                        break;
                    }
                    if !self.alive(cc) {
                        break;
                    }
                }
                if !full && self.alive(cc) {
                    for x in 0..self.ncols as u32 {
                        if self.get(cc, x) == UNDEF && self.define(cc, x).is_err() {
                            full = true;
                            break;
                        }
                    }
                }
            }
            if full {
                match self.relieve(relators, c) {
                    Some(nc) => c = nc,
                    None => return false,
                }
                continue;
            }
            c += 1;
        }
        true
    }

    fn process_deductions(&mut self, by_first: &[Vec<Vec<u32>>]) {
        while let Some((d, x)) = self.deductions.pop() {
            if !self.alive(d) {
                continue;
            }
            for k in 0..by_first[x as usize].len() {
                if !self.alive(d) {
                    break;
                }
                let w = by_first[x as usize][k].clone();
                let _ = self.scan(d, &w, false);
            }
            let e = self.get(d, x);
            if e == UNDEF || !self.alive(e) {
                continue;
            }
            let ix = self.inv[x as usize];
            if ix == x {
                continue;
            }
            for k in 0..by_first[ix as usize].len() {
                if !self.alive(e) {
                    break;
                }
                let w = by_first[ix as usize][k].clone();
                let _ = self.scan(e, &w, false);
            }
        }
    }

    fn run_felsch(&mut self, subgroup: &[Vec<u32>], relators: &[Vec<u32>]) -> bool {
        let mut by_first: Vec<Vec<Vec<u32>>> = vec![Vec::new(); self.ncols];
        for r in relators {
            for k in 0..r.len() {
                let mut conj = r[k..].to_vec();
                conj.extend_from_slice(&r[..k]);
                if !by_first[conj[0] as usize].contains(&conj) {
                    by_first[conj[0] as usize].push(conj);
                }
            }
        }
        for w in subgroup {
            if self.scan(0, w, true).is_err() {
                return false;
            }
            self.process_deductions(&by_first);
        }
        // Relators through coset 0 are not reached by deductions alone.
        for r in relators {
            if self.scan(0, r, true).is_err() {
                return false;
            }
            self.process_deductions(&by_first);
        }
        let mut c = 0usize;
        while c < self.next {
            let cc = c as u32;
            if self.alive(cc) {
                for x in 0..self.ncols as u32 {
                    if !self.alive(cc) {
                        break;
                    }
                    if self.get(cc, x) != UNDEF {
                        continue;
                    }
                    if self.next >= self.max {
                        if self.live == self.next {
                            return false;
                        }
                        let map = self.compact();
                        c = Self::remap_cursor(&map, c);
                        break;
                    }
                    let _ = self.define(cc, x);
                    self.process_deductions(&by_first);
                }
                if c < self.next && self.alive(c as u32) && (0..self.ncols as u32).any(|x| self.get(c as u32, x) == UNDEF) {
                    continue;
                }
            }
            c += 1;
        }
        true
    }
}

/// Enumerates the cosets of the subgroup generated by `subgroup` in the
/// group presented by `p`. Overflow is reported through the table status.
pub fn todd_coxeter(p: &FinitePresentation, subgroup: &[Word], opts: &EnumOptions) -> CosetTable {
    let l = layout(p);
    let mut relators: Vec<Vec<u32>> = p
        .relators()
        .iter()
        .map(|r| word_columns(&l, r, true))
        .filter(|r| !r.is_empty())
        .collect();
    relators.sort_by_key(|r| r.len());
    relators.dedup();
    let subgroup: Vec<Vec<u32>> = subgroup
        .iter()
        .map(|w| word_columns(&l, w, false))
        .filter(|w| !w.is_empty())
        .collect();
    let felsch = opts.strategy == Strategy::Felsch;
    let mut e = Enumerator::new(l.ncols, l.inv_col.clone(), opts.max_cosets, felsch);
    let done = if felsch {
        e.run_felsch(&subgroup, &relators)
    } else {
        e.run_hlt(&subgroup, &relators)
    };
    if !done {
        let live = e.live;
        return CosetTable {
            status: Status::Overflow { live },
            stats: e.stats,
            ncols: l.ncols,
            col_of: l.col_of,
            inv_col: l.inv_col,
            col_letter: l.col_letter,
            rows: 0,
            data: Vec::new(),
            parent: Vec::new(),
            parent_col: Vec::new(),
        };
    }
    e.compact();
    standardize(e, l)
}

fn standardize(e: Enumerator, l: Layout) -> CosetTable {
    let n = e.next;
    let ncols = l.ncols;
    let mut order: Vec<u32> = Vec::with_capacity(n);
    let mut new_index = vec![UNDEF; n];
    let mut parent = vec![0u32; n];
    let mut parent_col = vec![0u32; n];
    new_index[0] = 0;
    order.push(0);
    let mut head = 0;
    while head < order.len() {
        let old = order[head];
        for x in 0..ncols {
            let t = e.table[old as usize * ncols + x];
            if new_index[t as usize] == UNDEF {
                new_index[t as usize] = order.len() as u32;
                parent[order.len()] = head as u32;
                parent_col[order.len()] = x as u32;
                order.push(t);
            }
        }
        head += 1;
    }
    debug_assert_eq!(order.len(), n);
    let mut data = Vec::with_capacity(n * ncols);
    for &old in &order {
        for x in 0..ncols {
            data.push(new_index[e.table[old as usize * ncols + x] as usize]);
        }
    }
    CosetTable {
        status: Status::Complete,
        stats: e.stats,
        ncols,
        col_of: l.col_of,
        inv_col: l.inv_col,
        col_letter: l.col_letter,
        rows: n,
        data,
        parent,
        parent_col,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn enumerate(src: &str, strategy: Strategy) -> CosetTable {
        let p = FinitePresentation::parse(src).unwrap();
        todd_coxeter(&p, &[], &EnumOptions { strategy, ..Default::default() })
    }

    fn assert_closed(p: &FinitePresentation, t: &CosetTable) {
        for c in 0..t.len() as u32 {
            for r in p.relators() {
                assert_eq!(t.trace(c, r), c);
            }
        }
    }

    #[test]
    fn cyclic_group() {
        let t = enumerate("gens a; rel a^5", Strategy::Hlt);
        assert!(t.is_complete());
        assert_eq!(t.len(), 5);
    }

    #[test]
    fn symmetric_group_s3() {
        for s in [Strategy::Hlt, Strategy::Felsch] {
            let src = "gens a b; rel a^3, b^2, (a*b)^2";
            let t = enumerate(src, s);
            assert_eq!(t.len(), 6);
            assert_closed(&FinitePresentation::parse(src).unwrap(), &t);
        }
    }

    #[test]
    fn subgroup_index() {
        let p = FinitePresentation::parse("gens a b; rel a^3, b^2, (a*b)^2").unwrap();
        let t = todd_coxeter(&p, &[Word::generator(1)], &EnumOptions::default());
        assert_eq!(t.len(), 3);
        let t = todd_coxeter(&p, &[Word::generator(0)], &EnumOptions::default());
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn dihedral_and_heisenberg() {
        for n in [3u32, 7, 12, 25] {
            let t = enumerate(&alloc::format!("gens r s; rel r^{n}, s^2, (s*r)^2"), Strategy::Hlt);
            assert_eq!(t.len() as u32, 2 * n);
        }
        for p in [2u32, 3, 5] {
            let t = enumerate(
                &alloc::format!("gens a b c; rel a^{p}, b^{p}, c^{p}, c = [a,b], [a,c], [b,c]"),
                Strategy::Felsch,
            );
            assert_eq!(t.len() as u32, p * p * p);
        }
    }

    #[test]
    fn overflow_is_reported() {
        let p = FinitePresentation::parse("gens a b; rel [a,b]").unwrap();
        for strategy in [Strategy::Hlt, Strategy::Felsch] {
            let t = todd_coxeter(&p, &[], &EnumOptions { max_cosets: 500, strategy });
            assert!(matches!(t.status(), Status::Overflow { .. }));
        }
    }

    #[test]
    fn canonical_words_trace_back() {
        let p = FinitePresentation::parse("gens a b; rel a^4, b^2, (a*b)^2").unwrap();
        let t = todd_coxeter(&p, &[], &EnumOptions::default());
        assert_eq!(t.len(), 8);
        for c in 0..t.len() as u32 {
            assert_eq!(t.trace(0, &t.word_of(c)), c);
        }
        assert_eq!(t.word_of(0), Word::identity());
    }

    #[test]
    fn relator_order_does_not_matter() {
        let p = FinitePresentation::parse(
            "gens a b c d e; rel a^5, b^5, c^5, d^5, e^5; rel c = [a,b], d = [a,c], e = [b,c]; rel [a,d], [b,d], [a,e], [b,e]",
        )
        .unwrap();
        let mut rels: Vec<Word> = p.relators().to_vec();
        let base = todd_coxeter(&p, &[], &EnumOptions::default()).len();
        assert_eq!(base, 3125);
        for shift in [1usize, 4, 7] {
            rels.rotate_left(shift);
            rels.reverse();
            let q = p.with_relators(rels.clone()).unwrap();
            for strategy in [Strategy::Hlt, Strategy::Felsch] {
                let t = todd_coxeter(&q, &[], &EnumOptions { strategy, ..Default::default() });
                assert_eq!(t.len(), base);
            }
        }
    }
}
