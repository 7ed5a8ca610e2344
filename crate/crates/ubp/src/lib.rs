//! Uniform block permutations.
//!
//! The monoid 𝒰ₖ of uniform block permutations, its Green's structure and
//! generalized conjugacy classes, the irreducible modules spanned by uniform
//! tableaux, and the multi-alphabet symmetric functions that compute its
//! character table. All arithmetic is exact.

pub mod cli;
pub mod combinatorics;
pub mod conjugacy;
pub mod diagram;
mod disjoint_sets;
mod error;
pub mod green;
pub mod limits;
pub mod matrix;
pub mod repmod;
pub mod specht;
pub mod symfunc;
pub mod verify;

pub use combinatorics::{
	enumerate_ik, enumerate_setpartitions, monoid_order, sp_count, Partition, SetPartition, VectorPartition,
};
pub use diagram::{Diagram, UniformBlockPermutation};
pub use error::{Error, Result};
pub use matrix::CharMatrix;
