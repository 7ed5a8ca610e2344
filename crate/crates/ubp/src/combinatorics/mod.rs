//! Integer partitions, vector partitions and set partitions.

mod partition;
pub(crate) mod set_partition;
mod vector_partition;

pub use partition::{factorial, permutations, Partition};
pub use set_partition::{enumerate_setpartitions, glr_cmp, SetPartition};
pub(crate) use vector_partition::require_weight;
pub use vector_partition::{enumerate_ik, VectorPartition};

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{arg, Result};

/// Number of set partitions of `[k]` of type `lambda`.
pub fn sp_count(k: usize, lambda: &Partition) -> Result<BigUint> {
	if lambda.weight() != k {
		return arg(format!(
			"partition {lambda} has weight {}, expected {k}",
			lambda.weight()
		));
	}
	let mut denom = BigUint::one();
	for (i, &a) in lambda.multiplicities().iter().enumerate().skip(1) {
		denom *= factorial(a) * factorial(i).pow(a as u32);
	}
	Ok(factorial(k) / denom)
}

/// `|𝒰ₖ|`, summing `sp_k(λ)² · Π aᵢ!` over `λ ⊢ k`.
pub fn monoid_order(k: usize) -> BigUint {
	Partition::all(k)
		.iter()
		.map(|l| {
			let sp = sp_count(k, l).expect("weight matches");
			let sym: BigUint = l.multiplicities().iter().map(|&a| factorial(a)).product();
			&sp * &sp * sym
		})
		.sum()
}
