//! Exact arithmetic on the triadic Tonnetz.
//!
//! Triangles of the infinite Tonnetz are identified with elements of the
//! affine Coxeter group of type Ã2, written as affine permutations. On top of
//! that the crate provides the integer lattice realization, the translation
//! subgroup and hexagon tiling, Riemann's Schritt-Wechsel group together with
//! the point reflection group and its comma quotient, spelled note names, and
//! PLR progressions.

pub mod error;
pub mod group;
pub mod lattice;
pub mod pitch;
pub mod progression;
pub mod render;
pub mod riemann;
pub mod subgroup;
pub mod verify;

pub use error::{Error, Result};
pub use group::{AffinePermutation, ElementType, Generator, Order, TriangleCoords, Word};
pub use lattice::{Edge, Isometry, Orientation, Triangle, Vertex};
