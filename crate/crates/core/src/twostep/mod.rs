//! Skew tensors, their two-step algebras, the catalog, and tensor stabilizers.

pub mod catalog;
pub mod impossibility;
pub mod parse;
pub mod stabilizer;
pub mod tensor;

pub use catalog::{bis_pairs, catalog, lookup, CatalogEntry, WeightMultiset};
pub use parse::parse_tensor;
pub use stabilizer::stabilizer_lie;
pub use tensor::{lie_to_tensor, tensor_to_lie, SkewTensor, TensorJson};
