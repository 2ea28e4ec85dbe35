//! Linear substrate: spaces, vectors, multilinear maps and exact elimination.

pub mod echelon;
pub mod maps;
pub mod space;
pub mod vector;

pub use echelon::{eigenspace, kernel_of_columns, nullspace, rref, solve_exact, Solution, SpanBuilder, Subspace};
pub use maps::{apply_bilinear, BilinearMap, LinearMap, TrilinearMap};
pub use space::{tensor_space, Space};
pub use vector::{SparseVec, Vector};
