//! Concrete realizations of finitely presented groups.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use super::coset::{todd_coxeter, CosetTable, EnumOptions, Status};
use super::presentation::FinitePresentation;
use super::word::Word;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Permutation images of the generators acting on the cosets of a subgroup.
pub fn coset_action(p: &FinitePresentation, subgroup: &[Word], opts: &EnumOptions) -> Result<(CosetTable, Vec<Permutation>)> {
    let table = todd_coxeter(p, subgroup, opts);
    if let Status::Overflow { live } = table.status() {
        return Err(Error::Overflow { live });
    }
    let n = table.len();
    let gens = (0..p.num_generators() as u32)
        .map(|g| Permutation::from_images_unchecked((0..n as u32).map(|c| table.act(c, g, false)).collect()))
        .collect();
    Ok((table, gens))
}

/// The right regular representation of a finite group given by a
/// presentation. Elements are identified with cosets of the trivial subgroup;
/// coset 0 is the identity and every element has a canonical word.
#[derive(Clone, Debug)]
pub struct RegularRep {
    presentation: FinitePresentation,
    table: CosetTable,
    group: PermGroup,
}

impl RegularRep {
    pub fn new(p: &FinitePresentation, opts: &EnumOptions) -> Result<Self> {
        let (table, gens) = coset_action(p, &[], opts)?;
        let group = PermGroup::regular_unchecked(table.len(), gens);
        Ok(RegularRep {
            presentation: p.clone(),
            table,
            group,
        })
    }

    pub fn presentation(&self) -> &FinitePresentation {
        &self.presentation
    }

    pub fn table(&self) -> &CosetTable {
        &self.table
    }

    /// `R(H)` acting on the elements by right multiplication.
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn order_big(&self) -> BigUint {
        BigUint::from(self.order())
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn generator(&self, g: u32) -> u32 {
        self.table.act(0, g, false)
    }

    pub fn element_of(&self, w: &Word) -> u32 {
        self.table.trace(0, w)
    }

    pub fn word_of(&self, x: u32) -> Word {
        self.table.word_of(x)
    }

    /// `x * y`.
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        let mut c = x;
        for col in self.table.word_columns(y) {
            c = self.table.entry(c, col);
        }
        c
    }

    pub fn inverse(&self, x: u32) -> u32 {
        let mut c = 0;
        for col in self.table.word_columns(x).into_iter().rev() {
            c = self.table.entry(c, self.table.inverse_column(col));
        }
        c
    }

    pub fn pow(&self, x: u32, k: i64) -> u32 {
        let base = if k < 0 { self.inverse(x) } else { x };
        let m = Multiplier::new(self, base);
        let mut c = 0;
        for _ in 0..k.unsigned_abs() {
            c = m.apply(c);
        }
        c
    }

    pub fn element_order(&self, x: u32) -> u64 {
        let m = Multiplier::new(self, x);
        let mut c = m.apply(0);
        let mut k = 1;
        while c != 0 {
            c = m.apply(c);
            k += 1;
        }
        k
    }

    /// `[x, y] = x^-1 y^-1 x y`.
    pub fn commutator(&self, x: u32, y: u32) -> u32 {
        let xi = self.inverse(x);
        let yi = self.inverse(y);
        self.mul(self.mul(self.mul(xi, yi), x), y)
    }

    /// Right multiplication `c -> c * x` as a permutation.
    pub fn right_perm(&self, x: u32) -> Permutation {
        let m = Multiplier::new(self, x);
        Permutation::from_images_unchecked((0..self.order() as u32).map(|c| m.apply(c)).collect())
    }

    /// Left multiplication `c -> x * c` as a permutation, built along the
    /// breadth-first tree: `x * c = (x * parent(c)) * letter(c)`.
    pub fn left_perm(&self, x: u32) -> Permutation {
        let n = self.order();
        let mut img = vec![0u32; n];
        img[0] = x;
        for c in 1..n as u32 {
            let (p, col) = self.table.parent(c).unwrap();
            img[c as usize] = self.table.entry(img[p as usize], col);
        }
        Permutation::from_images_unchecked(img)
    }

    /// Evaluates a word with generator `i` sent to element `images[i]`.
    pub fn evaluate(&self, w: &Word, images: &[u32]) -> Result<u32> {
        if images.len() != self.presentation.num_generators() {
            return Err(Error::Structure("image count differs from generator count".into()));
        }
        let mut c = 0;
        for &(g, e) in w.syllables() {
            let y = if e < 0 { self.inverse(images[g as usize]) } else { images[g as usize] };
            let m = Multiplier::new(self, y);
            for _ in 0..e.unsigned_abs() {
                c = m.apply(c);
            }
        }
        Ok(c)
    }

    /// Index of the first relator not sent to the identity by the map
    /// `generator i -> images[i]`, or `None` if the map is a homomorphism.
    pub fn first_failing_relator(&self, images: &[u32]) -> Result<Option<usize>> {
        for (i, r) in self.presentation.relators().iter().enumerate() {
            if self.evaluate(r, images)? != 0 {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// The permutation of elements induced by an endomorphism given on
    /// generators; `None` if it is not bijective. The caller must already
    /// know that the map respects the relators.
    pub fn endomorphism_perm(&self, images: &[u32]) -> Option<Permutation> {
        let n = self.order();
        let ncols = self.table.num_columns();
        let mult: Vec<Multiplier> = (0..ncols as u32)
            .map(|col| {
                let (g, inv) = self.table.column_letter(col);
                let y = images[g as usize];
                // Involution columns serve both directions.
                let y = if inv { self.inverse(y) } else { y };
                Multiplier::new(self, y)
            })
            .collect();
        let mut img = vec![0u32; n];
        let mut used = vec![false; n];
        used[0] = true;
        for c in 1..n as u32 {
            let (p, col) = self.table.parent(c).unwrap();
            let v = mult[col as usize].apply(img[p as usize]);
            if used[v as usize] {
                return None;
            }
            used[v as usize] = true;
            img[c as usize] = v;
        }
        Some(Permutation::from_images_unchecked(img))
    }
}

/// Right multiplication by a fixed element, precompiled to table columns.
struct Multiplier<'a> {
    table: &'a CosetTable,
    cols: Vec<u32>,
}

impl<'a> Multiplier<'a> {
    fn new(rep: &'a RegularRep, y: u32) -> Self {
        Multiplier {
            table: &rep.table,
            cols: rep.table.word_columns(y),
        }
    }

    #[inline]
    fn apply(&self, x: u32) -> u32 {
        let mut c = x;
        for &col in &self.cols {
            c = self.table.entry(c, col);
        }
        c
    }
}

/// Evaluates a word in permutations, generator `i` sent to `images[i]`.
pub fn evaluate_word(w: &Word, images: &[Permutation]) -> Result<Permutation> {
    let degree = images.first().map(|p| p.degree()).unwrap_or(0);
    if images.iter().any(|p| p.degree() != degree) {
        return Err(Error::Structure("images of different degrees".into()));
    }
    let mut acc = Permutation::identity(degree);
    for &(g, e) in w.syllables() {
        let img = images
            .get(g as usize)
            .ok_or_else(|| Error::Structure("word uses a generator without an image".into()))?;
        acc = acc.then(&img.pow(e as i64));
    }
    Ok(acc)
}

/// True iff every relator evaluates to the identity.
pub fn check_homomorphism(p: &FinitePresentation, images: &[Permutation]) -> Result<bool> {
    Ok(first_failing_relator(p, images)?.is_none())
}

pub fn first_failing_relator(p: &FinitePresentation, images: &[Permutation]) -> Result<Option<usize>> {
    if images.len() != p.num_generators() {
        return Err(Error::Structure("image count differs from generator count".into()));
    }
    for (i, r) in p.relators().iter().enumerate() {
        if !evaluate_word(r, images)?.is_identity() {
            return Ok(Some(i));
        }
    }
    Ok(None)
}
