//! The monoid 𝒰ₖ of uniform block permutations.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::combinatorics::set_partition::{parse_block_tokens, uses_separators, write_elements};
use crate::combinatorics::{enumerate_setpartitions, permutations, Partition, SetPartition};
use crate::disjoint_sets::DisjointSets;
use crate::error::{arg, Error, Result};
use crate::limits::{self, Limit};

/// A uniform set partition of `[k] ∪ [k̄]`.
///
/// Stored as a block label per vertex: vertices `0..k` are `1..k` on top and
/// `k..2k` are `1̄..k̄` on the bottom. Labels are numbered in order of first
/// appearance, which sorts blocks by their least top element; every block has
/// one because diagrams are uniform.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UniformBlockPermutation {
	k: usize,
	ids: Vec<usize>,
	n: usize,
}

pub type Diagram = UniformBlockPermutation;

/// `d = e_top · σ = σ · e_bot`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
	pub sigma: Diagram,
	pub e_top: Diagram,
	pub e_bot: Diagram,
}

impl UniformBlockPermutation {
	fn from_raw(k: usize, raw: &[usize]) -> Self {
		let mut map = std::collections::HashMap::new();
		let ids: Vec<usize> = raw
			.iter()
			.map(|r| {
				let next = map.len();
				*map.entry(*r).or_insert(next)
			})
			.collect();
		let d = UniformBlockPermutation { k, n: map.len(), ids };
		debug_assert!(d.is_uniform(), "non-uniform diagram {d:?}");
		d
	}

	fn is_uniform(&self) -> bool {
		let mut bal = vec![0isize; self.n];
		for (v, &b) in self.ids.iter().enumerate() {
			bal[b] += if v < self.k { 1 } else { -1 };
		}
		bal.iter().all(|&x| x == 0)
	}

	/// Builds a diagram from `(top, bottom)` element lists, 1-based.
	pub fn from_blocks(k: usize, blocks: &[(Vec<usize>, Vec<usize>)]) -> Result<Self> {
		let mut raw = vec![usize::MAX; 2 * k];
		for (i, (top, bot)) in blocks.iter().enumerate() {
			let show = || block_text(top, bot);
			if top.len() != bot.len() {
				return arg(format!(
					"block {{{}}} is not uniform: {} top and {} bottom elements",
					show(),
					top.len(),
					bot.len()
				));
			}
			if top.is_empty() {
				return arg("empty block");
			}
			for (&x, off) in top.iter().map(|x| (x, 0)).chain(bot.iter().map(|x| (x, k))) {
				if x == 0 || x > k {
					return arg(format!("block {{{}}} has element {x} outside [1,{k}]", show()));
				}
				if raw[x - 1 + off] != usize::MAX {
					return arg(format!("block {{{}}} repeats an element used elsewhere", show()));
				}
				raw[x - 1 + off] = i;
			}
		}
		if let Some(v) = raw.iter().position(|&r| r == usize::MAX) {
			let name = if v < k {
				format!("{}", v + 1)
			} else {
				format!("{}'", v - k + 1)
			};
			return arg(format!("vertex {name} is not covered by any block"));
		}
		Ok(Self::from_raw(k, &raw))
	}

	pub fn identity(k: usize) -> Self {
		let raw: Vec<usize> = (0..k).chain(0..k).collect();
		Self::from_raw(k, &raw)
	}

	/// The permutation diagram `{i, σ(i)̄}`; `images[i-1] = σ(i)`, 1-based.
	pub fn from_permutation(images: &[usize]) -> Result<Self> {
		let k = images.len();
		let mut raw = vec![usize::MAX; 2 * k];
		for (i, &s) in images.iter().enumerate() {
			if s == 0 || s > k || raw[k + s - 1] != usize::MAX {
				return arg(format!("{images:?} is not a permutation of [1,{k}]"));
			}
			raw[i] = i;
			raw[k + s - 1] = i;
		}
		Ok(Self::from_raw(k, &raw))
	}

	/// `e_π = {A ∪ Ā : A ∈ π}`.
	pub fn idempotent_of(pi: &SetPartition) -> Self {
		let l = pi.labels();
		let raw: Vec<usize> = l.iter().chain(l.iter()).copied().collect();
		Self::from_raw(pi.k(), &raw)
	}

	/// Joins block `γ_j` on top to block `π_{map[j]}` on the bottom.
	pub fn from_block_map(gamma: &SetPartition, pi: &SetPartition, map: &[usize]) -> Result<Self> {
		let k = gamma.k();
		if pi.k() != k || gamma.len() != pi.len() || map.len() != gamma.len() {
			return arg("block map between partitions of different shapes");
		}
		let blocks: Vec<_> = gamma
			.blocks()
			.iter()
			.zip(map)
			.map(|(g, &j)| (g.clone(), pi.blocks()[j].clone()))
			.collect();
		Self::from_blocks(k, &blocks)
	}

	/// The adjacent transposition `sᵢ`, `1 ≤ i < k`.
	pub fn s(k: usize, i: usize) -> Self {
		assert!(1 <= i && i < k, "s_{i} needs 1 <= i < k = {k}");
		let mut images: Vec<usize> = (1..=k).collect();
		images.swap(i - 1, i);
		Self::from_permutation(&images).expect("valid permutation")
	}

	/// The idempotent `bᵢ` merging `{i, i+1}`, `1 ≤ i < k`.
	pub fn b(k: usize, i: usize) -> Self {
		assert!(1 <= i && i < k, "b_{i} needs 1 <= i < k = {k}");
		let mut labels: Vec<usize> = (0..k).collect();
		labels[i] = i - 1;
		Self::idempotent_of(&SetPartition::from_labels(&labels))
	}

	pub fn k(&self) -> usize {
		self.k
	}

	/// `n(d)`, the number of blocks.
	pub fn block_count(&self) -> usize {
		self.n
	}

	/// Blocks as `(top, bottom)` sorted element lists, ordered by least top element.
	pub fn blocks(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
		let mut out = vec![(Vec::new(), Vec::new()); self.n];
		for (v, &b) in self.ids.iter().enumerate() {
			if v < self.k {
				out[b].0.push(v + 1);
			} else {
				out[b].1.push(v - self.k + 1);
			}
		}
		out
	}

	pub fn top(&self) -> SetPartition {
		SetPartition::from_labels(&self.ids[..self.k])
	}

	pub fn bot(&self) -> SetPartition {
		SetPartition::from_labels(&self.ids[self.k..])
	}

	/// Stacks `self` on top of `other`, merging through the middle row.
	pub fn multiply(&self, other: &Self) -> Result<Self> {
		if self.k != other.k {
			return arg(format!("product of diagrams in 𝒰_{} and 𝒰_{}", self.k, other.k));
		}
		let k = self.k;
		let mut ds = DisjointSets::new(3 * k);
		for (d, offset) in [(self, 0), (other, k)] {
			let mut first = vec![usize::MAX; d.n];
			for (v, &b) in d.ids.iter().enumerate() {
				if first[b] == usize::MAX {
					first[b] = v + offset;
				} else {
					ds.merge(first[b], v + offset);
				}
			}
		}
		let raw: Vec<usize> = (0..k).chain(2 * k..3 * k).map(|v| ds.find(v)).collect();
		Ok(Self::from_raw(k, &raw))
	}

	/// Reflection across a horizontal line.
	pub fn involution(&self) -> Self {
		let raw: Vec<usize> = self.ids[self.k..].iter().chain(&self.ids[..self.k]).copied().collect();
		Self::from_raw(self.k, &raw)
	}

	pub fn pow(&self, m: usize) -> Self {
		let mut acc = Self::identity(self.k);
		for _ in 0..m {
			acc = &acc * self;
		}
		acc
	}

	pub fn is_idempotent(&self) -> bool {
		&(self * self) == self
	}

	pub fn is_permutation(&self) -> bool {
		self.n == self.k
	}

	/// `σ(i)` for each `i`, when `self` is a permutation.
	pub fn permutation(&self) -> Option<Vec<usize>> {
		if !self.is_permutation() {
			return None;
		}
		Some(self.blocks().into_iter().map(|(_, b)| b[0]).collect())
	}

	/// `d = e_{top(d)}·σ = σ·e_{bot(d)}`, with σ matching each top block to
	/// its bottom block in sorted order.
	pub fn factorize(&self) -> Factorization {
		let mut images = vec![0; self.k];
		for (top, bot) in self.blocks() {
			for (t, b) in top.iter().zip(&bot) {
				images[t - 1] = *b;
			}
		}
		let sigma = Self::from_permutation(&images).expect("block bijection gives a permutation");
		let f = Factorization {
			e_top: Self::idempotent_of(&self.top()),
			e_bot: Self::idempotent_of(&self.bot()),
			sigma,
		};
		debug_assert_eq!(&(&f.e_top * &f.sigma), self);
		debug_assert_eq!(&(&f.sigma * &f.e_bot), self);
		f
	}

	/// Parses `1,4,2',3' | 2,1' | …`, inferring `k` from the largest element.
	pub fn parse_with_k(s: &str, k: Option<usize>) -> Result<Self> {
		let s = s.trim();
		let mut blocks = Vec::new();
		if !s.is_empty() && s != "∅" {
			let separated = uses_separators(s);
			for part in s.split('|') {
				let toks = parse_block_tokens(part, separated)?;
				let top = toks.iter().filter(|t| !t.1).map(|t| t.0).collect::<Vec<_>>();
				let bot = toks.iter().filter(|t| t.1).map(|t| t.0).collect::<Vec<_>>();
				blocks.push((top, bot));
			}
		}
		let max = blocks
			.iter()
			.flat_map(|(t, b)| t.iter().chain(b))
			.copied()
			.max()
			.unwrap_or(0);
		let k = k.unwrap_or(max);
		Self::from_blocks(k, &blocks).map_err(|e| Error::Parse(e.to_string()))
	}
}

fn block_text(top: &[usize], bot: &[usize]) -> String {
	let mut s = String::new();
	let elems: Vec<_> = top
		.iter()
		.map(|&x| (x, false))
		.chain(bot.iter().map(|&x| (x, true)))
		.collect();
	write_elements(&mut s, &elems, false).expect("writing to a string");
	s
}

impl Mul for &UniformBlockPermutation {
	type Output = UniformBlockPermutation;

	/// Panics on mismatched `k`; use [`UniformBlockPermutation::multiply`] to get an error instead.
	fn mul(self, rhs: Self) -> UniformBlockPermutation {
		self.multiply(rhs).expect("diagrams of equal size")
	}
}

impl fmt::Display for UniformBlockPermutation {
	fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
		if self.k == 0 {
			return write!(f, "∅");
		}
		let blocks: Vec<String> = self.blocks().iter().map(|(t, b)| block_text(t, b)).collect();
		write!(f, "{}", blocks.join(" | "))
	}
}

impl fmt::Debug for UniformBlockPermutation {
	fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
		write!(f, "Diagram[{self}]")
	}
}

impl FromStr for UniformBlockPermutation {
	type Err = Error;

	fn from_str(s: &str) -> Result<Self> {
		Self::parse_with_k(s, None)
	}
}

/// The generators `(s₁…s_{k−1}, b₁…b_{k−1})`.
pub fn generators(k: usize) -> (Vec<Diagram>, Vec<Diagram>) {
	let s = (1..k).map(|i| Diagram::s(k, i)).collect();
	let b = (1..k).map(|i| Diagram::b(k, i)).collect();
	(s, b)
}

/// Checks the defining relations of the presentation on `sᵢ`, `bᵢ` and
/// returns a description of every one that fails.
pub fn relation_failures(k: usize) -> Vec<String> {
	relation_failures_with(k, |d: &Diagram| d.clone(), |a, b| a * b, &Diagram::identity(k))
}

/// Relation check over any realisation of the generators: `image` maps a
/// diagram to its representing object and `mul` multiplies those.
pub fn relation_failures_with<T: PartialEq>(
	k: usize,
	image: impl Fn(&Diagram) -> T,
	mul: impl Fn(&T, &T) -> T,
	one: &T,
) -> Vec<String> {
	if k < 2 {
		return Vec::new();
	}
	let (s, b): (Vec<T>, Vec<T>) = {
		let (s, b) = generators(k);
		(s.iter().map(&image).collect(), b.iter().map(&image).collect())
	};
	let m = |xs: &[&T]| xs[2..].iter().fold(mul(xs[0], xs[1]), |acc, x| mul(&acc, x));
	let mut fails = Vec::new();
	let mut check = |ok: bool, what: String| {
		if !ok {
			fails.push(what);
		}
	};
	let n = k - 1;
	for i in 0..n {
		check(&mul(&s[i], &s[i]) == one, format!("(1) s{0}^2 = 1", i + 1));
		check(mul(&b[i], &b[i]) == b[i], format!("(2) b{0}^2 = b{0}", i + 1));
		check(
			mul(&b[i], &s[i]) == b[i] && mul(&s[i], &b[i]) == b[i],
			format!("(7) b{0}s{0} = s{0}b{0} = b{0}", i + 1),
		);
		if i + 1 < n {
			check(
				m(&[&s[i], &s[i + 1], &s[i]]) == m(&[&s[i + 1], &s[i], &s[i + 1]]),
				format!("(3) s{0}s{1}s{0} = s{1}s{0}s{1}", i + 1, i + 2),
			);
			check(
				m(&[&s[i], &b[i + 1], &s[i]]) == m(&[&s[i + 1], &b[i], &s[i + 1]]),
				format!("(4) s{0}b{1}s{0} = s{1}b{0}s{1}", i + 1, i + 2),
			);
		}
		for j in 0..n {
			if i.abs_diff(j) > 1 {
				check(
					mul(&s[i], &s[j]) == mul(&s[j], &s[i]),
					format!("(5) s{}s{} = s{}s{}", i + 1, j + 1, j + 1, i + 1),
				);
				check(
					mul(&b[i], &s[j]) == mul(&s[j], &b[i]),
					format!("(6) b{}s{} = s{}b{}", i + 1, j + 1, j + 1, i + 1),
				);
			}
			check(
				mul(&b[i], &b[j]) == mul(&b[j], &b[i]),
				format!("(8) b{}b{} = b{}b{}", i + 1, j + 1, j + 1, i + 1),
			);
		}
	}
	fails
}

pub fn check_relations(k: usize) -> bool {
	relation_failures(k).is_empty()
}

/// Size-preserving bijections between the blocks of two set partitions of
/// the same type, as maps from block index of the first to block index of
/// the second.
pub fn block_bijections(gamma: &SetPartition, pi: &SetPartition) -> Vec<Vec<usize>> {
	let sizes: Vec<usize> = gamma.blocks().iter().map(|b| b.len()).collect();
	let mut maps = vec![vec![0; sizes.len()]];
	let mut start = 0;
	while start < sizes.len() {
		let end = (start..sizes.len())
			.find(|&j| sizes[j] != sizes[start])
			.unwrap_or(sizes.len());
		let perms = permutations(end - start);
		maps = maps
			.into_iter()
			.flat_map(|m| {
				perms.iter().map(move |p| {
					let mut m = m.clone();
					for (off, &q) in p.iter().enumerate() {
						m[start + off] = start + q;
					}
					m
				})
			})
			.collect();
		start = end;
	}
	debug_assert!(pi.block_type() == gamma.block_type());
	maps
}

/// Every element of 𝒰ₖ, grouped by type, then by top, bottom and bijection.
pub fn enumerate_monoid(k: usize) -> Result<Vec<Diagram>> {
	limits::check(Limit::Monoid, "enumerating the monoid", k)?;
	let mut out = Vec::new();
	for lambda in Partition::all(k) {
		let parts = enumerate_setpartitions(k, Some(&lambda));
		for gamma in &parts {
			for pi in &parts {
				for map in block_bijections(gamma, pi) {
					out.push(Diagram::from_block_map(gamma, pi, &map)?);
				}
			}
		}
	}
	Ok(out)
}
