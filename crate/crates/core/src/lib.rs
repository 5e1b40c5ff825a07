//! Exact symbolic combinatorics for modified Macdonald polynomials.
//!
//! The crate computes generalized modified Macdonald polynomials of filled
//! diagrams, Macdonald intersection polynomials `I_{λ,μ}`, Butler
//! permutations, LLT polynomials and the hook and two-column `(q,t)`-Kostka
//! formulas, and verifies the identities relating them by exhaustive
//! enumeration at small sizes.
//!
//! Conventions used throughout:
//! * Young diagrams are drawn in French notation, row 1 at the bottom, and a
//!   cell is addressed as `(row, col)`.
//! * Words and permutations are stored as `u8` slices of 1-based letters.
//! * A subset of `[n-1]` is a `u32` bitmask whose bit `i-1` stands for `i`.

pub mod bijections;
pub mod butler;
pub mod cli;
pub mod error;
pub mod kostka;
pub mod llt;
pub mod macdiag;
pub mod polyring;
pub mod qsymsym;
pub mod shapes;
pub mod words;

pub use error::{Error, Result};
