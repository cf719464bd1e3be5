//! Lie algebras by structure constants, subspaces, and matrix Lie algebras.

pub mod algebra;
pub mod matrix;
pub mod subspace;

pub use algebra::{heisenberg, sl2, trace_of_product, with_abelian_factor, LieAlg, LieAlgJson};
pub use matrix::{ambient_trace_form, PairMat};
pub use subspace::{kernel_on_span, Subspace};
