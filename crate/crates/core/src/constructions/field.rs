//! Small finite fields `GF(p^f)` as polynomials over `GF(p)`.
//!
//! Elements are encoded as integers `0..q` by their base-`p` coefficient
//! digits, so addition is digit-wise and `0..p` is the prime field.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Gf {
    pub p: u32,
    pub f: u32,
    pub q: u32,
    /// Monic modulus, coefficients from degree 0 up to `f - 1`.
    pub modulus: Vec<u32>,
    mul: Vec<u32>,
    add: Vec<u32>,
    /// A generator of the multiplicative group.
    pub primitive: u32,
}

pub(crate) fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn digits(x: u32, p: u32, f: u32) -> Vec<u32> {
    let mut d = vec![0; f as usize];
    let mut x = x;
    for c in d.iter_mut() {
        *c = x % p;
        x /= p;
    }
    d
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Product of two residues modulo the monic polynomial `x^f + modulus`.
fn poly_mul(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let f = modulus.len();
    let mut prod = vec![0u32; 2 * f];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for k in (f..2 * f).rev() {
        let c = prod[k];
        if c != 0 {
            prod[k] = 0;
            for (i, &m) in modulus.iter().enumerate() {
                prod[k - f + i] = (prod[k - f + i] + (p - m) * c) % p;
            }
        }
    }
    prod.truncate(f);
    prod
}

impl Gf {
    /// The field of order `p^f`, with the lexicographically first irreducible
    /// modulus and the smallest primitive element.
    pub fn new(p: u32, f: u32) -> Result<Gf> {
        if !is_prime(p) || f == 0 {
            return Err(Error::Domain(alloc::format!("GF({p}^{f}) needs a prime p and f >= 1")));
        }
        let q = p
            .checked_pow(f)
            .filter(|&q| q <= 1 << 16)
            .ok_or_else(|| Error::Unsupported(alloc::format!("field GF({p}^{f}) is too large")))?;
        for m in 0..q {
            let modulus = digits(m, p, f);
            if f > 1 && modulus[0] == 0 {
                continue;
            }
            let mut mul = vec![0u32; (q * q) as usize];
            for a in 0..q {
                let da = digits(a, p, f);
                for b in a..q {
                    let c = undigits(&poly_mul(&da, &digits(b, p, f), &modulus, p), p);
                    mul[(a * q + b) as usize] = c;
                    mul[(b * q + a) as usize] = c;
                }
            }
            // A field iff every nonzero element is invertible.
            let field = (1..q).all(|a| (1..q).any(|b| mul[(a * q + b) as usize] == 1));
            if !field {
                continue;
            }
            let mut add = vec![0u32; (q * q) as usize];
            for a in 0..q {
                let da = digits(a, p, f);
                for b in 0..q {
                    let db = digits(b, p, f);
                    let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                    add[(a * q + b) as usize] = undigits(&s, p);
                }
            }
            let mut gf = Gf {
                p,
                f,
                q,
                modulus,
                mul,
                add,
                primitive: 0,
            };
            gf.primitive = (1..q)
                .find(|&w| gf.mult_order(w) == q - 1)
                .expect("a finite field has a primitive element");
            return Ok(gf);
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn mult_order(&self, a: u32) -> u32 {
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
            if k > self.q {
                return 0;
            }
        }
        k
    }

    /// The Frobenius automorphism `x ↦ x^p`.
    pub fn frobenius(&self, a: u32) -> u32 {
        self.pow(a, self.p as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms() {
        for (p, f) in [(2, 1), (3, 2), (2, 3), (2, 6), (5, 2), (7, 1)] {
            let k = Gf::new(p, f).unwrap();
            let q = k.q;
            for a in 0..q {
                assert_eq!(k.add(a, 0), a);
                assert_eq!(k.mul(a, 1), a);
                assert_eq!(k.pow(a, q as u64), a, "x^q = x");
                assert_eq!(k.frobenius(k.add(a, 1)), k.add(k.frobenius(a), 1));
            }
            let mut powers: Vec<u32> = (0..q - 1).map(|i| k.pow(k.primitive, i as u64)).collect();
            powers.sort_unstable();
            assert_eq!(powers, (1..q).collect::<Vec<_>>());
            // Distributivity on a sample.
            for a in (0..q).step_by(3) {
                for b in (0..q).step_by(5) {
                    let c = (a * 7 + b) % q;
                    assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(Gf::new(4, 2).is_err());
        assert!(Gf::new(2, 0).is_err());
        assert!(Gf::new(2, 20).is_err());
    }
}
