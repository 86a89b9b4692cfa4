use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

/// A freely reduced word: a sequence of `(generator, exponent)` syllables with
/// nonzero exponents and no two adjacent syllables on the same generator.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    syllables: Vec<(u32, i32)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(g: u32) -> Self {
        Word {
            syllables: alloc::vec![(g, 1)],
        }
    }

    /// Builds a word from syllables, applying free reduction.
    pub fn from_syllables<I: IntoIterator<Item = (u32, i32)>>(syllables: I) -> Self {
        let mut w = Word::identity();
        for (g, e) in syllables {
            w.push(g, e);
        }
        w
    }

    /// Builds a word from single letters `(generator, inverse?)`.
    pub fn from_letters<I: IntoIterator<Item = (u32, bool)>>(letters: I) -> Self {
        Word::from_syllables(letters.into_iter().map(|(g, inv)| (g, if inv { -1 } else { 1 })))
    }

    fn push(&mut self, g: u32, e: i32) {
        if e == 0 {
            return;
        }
        if let Some(last) = self.syllables.last_mut() {
            if last.0 == g {
                last.1 += e;
                if last.1 == 0 {
                    self.syllables.pop();
                }
                return;
            }
        }
        self.syllables.push((g, e));
    }

    pub fn syllables(&self) -> &[(u32, i32)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters, counting `x^k` as `|k|` letters.
    pub fn len(&self) -> usize {
        self.syllables.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Expands into letters `(generator, inverse?)`.
    pub fn letters(&self) -> Vec<(u32, bool)> {
        let mut out = Vec::with_capacity(self.len());
        for &(g, e) in &self.syllables {
            for _ in 0..e.unsigned_abs() {
                out.push((g, e < 0));
            }
        }
        out
    }

    /// Largest generator index used, if any.
    pub fn max_generator(&self) -> Option<u32> {
        self.syllables.iter().map(|&(g, _)| g).max()
    }

    pub fn inverse(&self) -> Word {
        Word {
            syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &(g, e) in &other.syllables {
            w.push(g, e);
        }
        w
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::identity();
        for _ in 0..k.unsigned_abs() {
            w = w.mul(&base);
        }
        w
    }

    /// `[x, y] = x^-1 y^-1 x y`.
    pub fn commutator(x: &Word, y: &Word) -> Word {
        x.inverse().mul(&y.inverse()).mul(x).mul(y)
    }

    /// Removes matching first/last syllables until the word is cyclically reduced.
    pub fn cyclically_reduced(&self) -> Word {
        let mut s = self.syllables.clone();
        loop {
            if s.len() >= 2 && s[0].0 == s[s.len() - 1].0 {
                let last = s.pop().unwrap();
                s[0].1 += last.1;
                if s[0].1 == 0 {
                    s.remove(0);
                }
                continue;
            }
            break;
        }
        Word { syllables: s }
    }

    /// Renders the word with generator names: `a^2*b^-1*[..]` style, `1` for the identity.
    pub fn to_source(&self, names: &[String]) -> String {
        if self.syllables.is_empty() {
            return String::from("1");
        }
        let mut out = String::new();
        for (i, &(g, e)) in self.syllables.iter().enumerate() {
            if i > 0 {
                out.push('*');
            }
            out.push_str(&names[g as usize]);
            if e != 1 {
                let _ = write!(out, "^{e}");
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_reduction() {
        let w = Word::from_syllables([(0, 2), (1, 1), (1, -1), (0, -2)]);
        assert!(w.is_identity());
        let a = Word::generator(0);
        assert!(a.mul(&a.inverse()).is_identity());
        assert_eq!(a.pow(3).len(), 3);
    }

    #[test]
    fn commutator_letters() {
        let c = Word::commutator(&Word::generator(0), &Word::generator(1));
        assert_eq!(c.letters(), alloc::vec![(0, true), (1, true), (0, false), (1, false)]);
    }

    #[test]
    fn cyclic_reduction() {
        let w = Word::from_syllables([(0, 1), (1, 2), (0, -1)]);
        assert_eq!(w.cyclically_reduced(), Word::from_syllables([(1, 2)]));
        let w = Word::from_syllables([(0, 2), (1, 1), (0, 1)]);
        assert_eq!(w.cyclically_reduced(), Word::from_syllables([(0, 3), (1, 1)]));
    }
}
