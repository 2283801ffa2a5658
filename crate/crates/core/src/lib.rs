//! Finite-model workbench for binary groupoids.

pub mod cli;
pub mod finder;
pub mod harness;
pub mod identity;
pub mod magma;
