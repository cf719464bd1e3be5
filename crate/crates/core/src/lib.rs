//! Exact construction and verification of the real forms of the
//! non-degenerate two-step nilpotent Lie algebras of dimension 8.

#![allow(clippy::needless_range_loop)]

pub mod duality;
pub mod error;
pub mod exact;
pub mod graded;
pub mod lataut;
pub mod lie;
pub mod realtype;
pub mod report;
pub mod sl2;
pub mod twostep;

pub use error::{Error, Result};
