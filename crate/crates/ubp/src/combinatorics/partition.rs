use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{arg, parse, Result};

pub fn factorial(n: usize) -> BigUint {
	(1..=n as u64).fold(BigUint::one(), |acc, i| acc * i)
}

/// An integer partition, parts stored in nonincreasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
	pub fn new(parts: Vec<usize>) -> Result<Self> {
		if parts.contains(&0) {
			return arg(format!("partition {parts:?} has a zero part"));
		}
		if parts.windows(2).any(|w| w[0] < w[1]) {
			return arg(format!("partition {parts:?} is not nonincreasing"));
		}
		Ok(Partition(parts))
	}

	/// Sorts the parts and drops zeros.
	pub fn from_parts(mut parts: Vec<usize>) -> Self {
		parts.retain(|&p| p > 0);
		parts.sort_unstable_by(|a, b| b.cmp(a));
		Partition(parts)
	}

	/// The partition `(1^{m[1]} 2^{m[2]} …)`; `m[0]` is ignored.
	pub fn from_multiplicities(m: &[usize]) -> Self {
		let mut parts = Vec::new();
		for (i, &a) in m.iter().enumerate().skip(1).rev() {
			parts.extend(std::iter::repeat_n(i, a));
		}
		Partition(parts)
	}

	pub const EMPTY: Partition = Partition(Vec::new());

	pub fn empty() -> Self {
		Partition(Vec::new())
	}

	pub fn parts(&self) -> &[usize] {
		&self.0
	}

	pub fn weight(&self) -> usize {
		self.0.iter().sum()
	}

	pub fn len(&self) -> usize {
		self.0.len()
	}

	pub fn is_empty(&self) -> bool {
		self.0.is_empty()
	}

	/// `m[i]` is the number of parts equal to `i`, for `0 ≤ i ≤ weight`.
	pub fn multiplicities(&self) -> Vec<usize> {
		let mut m = vec![0; self.weight() + 1];
		for &p in &self.0 {
			m[p] += 1;
		}
		m
	}

	/// `z_λ = Π i^{aᵢ} aᵢ!`, the centralizer order of a permutation of cycle type λ.
	pub fn z(&self) -> BigUint {
		let mut z = BigUint::one();
		for (i, &a) in self.multiplicities().iter().enumerate().skip(1) {
			if a > 0 {
				z *= BigUint::from(i).pow(a as u32) * factorial(a);
			}
		}
		z
	}

	/// Multiplies every part by `n`.
	pub fn scale(&self, n: usize) -> Self {
		Partition(self.0.iter().map(|&p| p * n).collect())
	}

	/// Multiset union of parts.
	pub fn union(&self, other: &Partition) -> Self {
		let mut parts = self.0.clone();
		parts.extend_from_slice(&other.0);
		Partition::from_parts(parts)
	}

	pub fn conjugate(&self) -> Self {
		let cols = self.0.first().copied().unwrap_or(0);
		Partition((0..cols).map(|c| self.0.iter().filter(|&&p| p > c).count()).collect())
	}

	/// Number of standard tableaux, by the hook length formula.
	pub fn f(&self) -> BigUint {
		let conj = self.conjugate();
		let mut hooks = BigUint::one();
		for (r, &len) in self.0.iter().enumerate() {
			for c in 0..len {
				hooks *= (len - c) + (conj.0[c] - r) - 1;
			}
		}
		factorial(self.weight()) / hooks
	}

	/// Reverse lexicographic order: λ precedes μ when λ has the larger part at
	/// the first index where they differ, so `(n)` comes first.
	pub fn cmp_revlex(&self, other: &Partition) -> Ordering {
		for (a, b) in self.0.iter().zip(&other.0) {
			if a != b {
				return b.cmp(a);
			}
		}
		self.0.len().cmp(&other.0.len())
	}

	/// All partitions of `n`, in reverse lexicographic order.
	pub fn all(n: usize) -> Vec<Partition> {
		fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
			if rest == 0 {
				out.push(Partition(cur.clone()));
				return;
			}
			for p in (1..=rest.min(max)).rev() {
				cur.push(p);
				go(rest - p, p, cur, out);
				cur.pop();
			}
		}
		let mut out = Vec::new();
		go(n, n, &mut Vec::new(), &mut out);
		out
	}

	/// Parses `[2,1]`, `(2,1)`, `2,1` or the empty forms `[]` and `∅`.
	pub fn parse(s: &str) -> Result<Self> {
		let t = s.trim();
		let t = t
			.strip_prefix('[')
			.and_then(|x| x.strip_suffix(']'))
			.or_else(|| t.strip_prefix('(').and_then(|x| x.strip_suffix(')')))
			.unwrap_or(t)
			.trim();
		if t.is_empty() || t == "∅" {
			return Ok(Partition::empty());
		}
		let parts = t
			.split(',')
			.map(|x| x.trim().parse::<usize>())
			.collect::<std::result::Result<Vec<_>, _>>()
			.or_else(|e| parse(format!("bad partition {s:?}: {e}")))?;
		Partition::new(parts).map_err(|e| crate::Error::Parse(e.to_string()))
	}
}

impl Ord for Partition {
	fn cmp(&self, other: &Self) -> Ordering {
		self.weight().cmp(&other.weight()).then_with(|| self.cmp_revlex(other))
	}
}

impl PartialOrd for Partition {
	fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
		Some(self.cmp(other))
	}
}

impl TryFrom<Vec<usize>> for Partition {
	type Error = crate::Error;

	fn try_from(parts: Vec<usize>) -> Result<Self> {
		Partition::new(parts)
	}
}

impl From<Partition> for Vec<usize> {
	fn from(p: Partition) -> Self {
		p.0
	}
}

impl fmt::Display for Partition {
	fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
		if self.0.is_empty() {
			return write!(f, "∅");
		}
		let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
		write!(f, "({})", parts.join(","))
	}
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
	let mut out = Vec::new();
	let mut cur: Vec<usize> = (0..n).collect();
	loop {
		out.push(cur.clone());
		// next lexicographic permutation
		let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
			return out;
		};
		let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
		cur.swap(i - 1, j);
		cur[i..].reverse();
	}
}
