//! Exact computations with trace ideals, stable ideals and birational
//! overrings of one-dimensional complete local rings `R ⊆ K[[t]]`.

pub mod calculus;
pub mod enumerate;
pub mod lattice;
pub mod linalg;
pub mod ring;
pub mod scalars;
pub mod semigroup;
pub mod series;
