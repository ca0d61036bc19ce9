//! Exact computer algebra for the Virasoro algebra at c ≤ 1.
//!
//! Verma modules and their Shapovalov forms, Kac determinants, singular
//! vectors, density modules, Jantzen filtrations, oscillator modules and the
//! free-fermion Fock space with its vertex operators. All arithmetic is exact.

pub mod acceptance;
pub mod combinatorics;
pub mod density;
pub mod error;
pub mod fock;
pub mod jantzen;
pub mod linalg;
pub mod lincomb;
pub mod oscillator;
pub mod scalars;
pub mod singular;
pub mod verma;

pub use error::{Error, Result};
