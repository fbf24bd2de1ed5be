//! Executable algebra of Merge.
//!
//! Planar and abstract binary trees, the Loday–Ronco Hopf algebra, Stabler-style
//! minimalist grammar merges with their partial algebraic structure, Merge acting
//! on workspaces with ε-graded Minimal Search, and externalization via head
//! functions. Every algebraic law comes with an exhaustive small-instance checker.

pub mod error;
pub mod externalization;
pub mod linear;
pub mod lr;
pub mod magma;
pub mod mg;
pub mod parse;
pub mod report;
pub mod trees;
pub mod workbench;
pub mod workspace;

pub use error::{Error, Result};
pub use linear::{Coeff, LinComb};
pub use report::CheckReport;
