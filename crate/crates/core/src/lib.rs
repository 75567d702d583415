//! Exact computation in the graded down-up algebra of lattice paths.
//!
//! Words in `N` and `E` modulo the modular relations, their expansions in the
//! staircase, rectangular and zigzag bases, q-hit numbers, remixed Eulerian
//! numbers in the q-Klyachko algebra, and chromatic quasisymmetric functions
//! of Dyck graphs.

pub mod chromatic;
pub mod error;
pub mod klyachko;
pub mod lattice;
pub mod pathalg;
pub mod qalg;
pub mod qhit;
pub mod verify;

pub use error::{Error, Result};
