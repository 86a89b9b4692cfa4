//! Permutation groups, coset enumeration, graph automorphisms and symmetry
//! classification for Cayley graphs that are locally `2K_n`.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the command
//! line and report serialization live in the `symlab` crate.
//!
//! Conventions used throughout:
//!
//! * permutations act on the right, `p.then(&q)` applies `p` first;
//! * commutators are `[x, y] = x^-1 y^-1 x y`;
//! * Cayley graph edges are `{g, s g}` for `s` in the connection set.

#![no_std]

extern crate alloc;

pub mod autgrp;
pub mod classify;
pub mod constructions;
pub mod error;
pub mod fp;
pub mod graph;
pub mod group;
pub mod perm;

pub use error::{Error, Result};
pub use fp::{CosetTable, FinitePresentation, Word};
pub use graph::Graph;
pub use group::PermGroup;
pub use perm::Permutation;
