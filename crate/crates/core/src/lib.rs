//! Type C_n quantum Bruhat graph, quantum alcove model and the inverse
//! Chevalley expansions of level-zero Demazure characters, together with an
//! exact symbolic verification engine.
//!
//! Everything here is pure computation on `alloc` collections; IO, the
//! command-line front end and file formats live in the `qalcove` crate.
//!
//! Layout:
//! - [`root`], [`weyl`]: weights, coroots, roots and signed permutations.
//! - [`qbg`]: the quantum Bruhat graph, canonical paths and the edge lemmas.
//! - [`alcove`]: chains of roots, alcove walks and admissible subsets.
//! - [`ring`]: exact Laurent coefficients with a symbolic dominant weight and
//!   formal combinations of Demazure symbols.
//! - [`chevalley`]: Chevalley expansions and every inverse Chevalley builder.
//! - [`verify`]: identity checks, the pair involution, the collapse check and
//!   the conjecture scan.
//! - [`render`]: text and LaTeX rendering.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod alcove;
pub mod chevalley;
mod error;
pub mod qbg;
pub mod render;
pub mod ring;
pub mod root;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use root::{Coroot, Letter, Root, Weight, MAX_RANK};
pub use weyl::{AffineElt, WeylElt};
