//! Arc combinatorics of the cluster category of Dynkin type `D_n`.
//!
//! Indecomposable objects are modeled by elements of a regular `2n`-gon:
//! pairs of centrally symmetric arcs and colored diameters. The crate
//! implements crossing numbers (= Ext^1 dimensions), the `nc` operator and
//! its torsion-part fixed points, the Ptolemy axioms, cell decompositions
//! for a non-crossing diagram `D`, mutation of elements and diagrams, and
//! the Auslander-Reiten bridge (the bijection `b`, starting/ending frames
//! and mutation triangles) used as an independent oracle.

pub mod ar;
pub mod cells;
pub mod crossing;
pub mod diagram;
pub mod element;
pub mod mutation;
pub mod ptolemy;
pub mod render;

pub use diagram::{full_alphabet, Diagram};
pub use element::{ArcElement, ArcKind, Color, EdgePair};
