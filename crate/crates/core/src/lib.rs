//! Obstructions to compact Clifford-Klein forms of reductive homogeneous spaces
//! `G/H` with `G` a non-compact real simple Lie group.
//!
//! Two tests are implemented: the real-rank (Calabi-Markus) filter, and the
//! vanishing of the degree-`d(H)` coefficient of the Poincaré polynomial of
//! the compact dual symmetric space `G_U/K`, taken over every ordering of the
//! fundamental degrees that yields a polynomial.

pub mod catalog;
pub mod checker;
pub mod cli;
pub mod error;
pub mod poincare;
pub mod rootsys;
pub mod subalg;

pub use error::{Error, Result};
