//! Chromatic quasisymmetric functions of Dyck graphs.

pub mod abelian;
pub mod checks;
pub mod graph;
pub mod orient;
pub mod qsym;

pub use graph::{csf, csf_descents, csf_partitions, DyckGraph, DEFAULT_BOUND};
pub use orient::{acyclic_orientations, Orientation};
pub use qsym::{compositions, partitions, QSymF, SymE};
