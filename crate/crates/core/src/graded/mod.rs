//! Chevalley bases of D7 and E7, their gradings by one node, and the
//! identification of the degree-0 and degree-1 pieces with matrices and tensors.

pub mod chevalley;
pub mod context;
pub mod grading;
pub mod identify;
pub mod roots;

pub use chevalley::ChevalleyAlgebra;
pub use context::{chevalley, GradedContext};
pub use grading::GradedAlgebra;
pub use identify::{G0Identification, ModuleIso};
pub use roots::{CartanType, RootSystem};
