use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::Partition;
use crate::disjoint_sets::DisjointSets;
use crate::error::{arg, parse, Error, Result};

/// Graded last letter order on sorted blocks: by size, then by largest element.
pub fn glr_cmp(a: &[usize], b: &[usize]) -> Ordering {
	a.len()
		.cmp(&b.len())
		.then_with(|| a.last().cmp(&b.last()))
		.then_with(|| a.cmp(b))
}

/// A set partition of `[k] = {1,…,k}`.
///
/// Blocks are sorted ascending internally and listed in graded last letter
/// order, so equality and hashing are structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
	k: usize,
	blocks: Vec<Vec<usize>>,
}

impl SetPartition {
	pub fn new(k: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
		let mut seen = vec![false; k + 1];
		for b in &blocks {
			if b.is_empty() {
				return arg("set partition has an empty block");
			}
			for &x in b {
				if x == 0 || x > k {
					return arg(format!("element {x} outside [1,{k}]"));
				}
				if seen[x] {
					return arg(format!("element {x} appears twice"));
				}
				seen[x] = true;
			}
		}
		if let Some(x) = (1..=k).find(|&x| !seen[x]) {
			return arg(format!("element {x} is not covered"));
		}
		Ok(Self::canonical(k, blocks))
	}

	pub(crate) fn canonical(k: usize, mut blocks: Vec<Vec<usize>>) -> Self {
		for b in &mut blocks {
			b.sort_unstable();
		}
		blocks.sort_by(|a, b| glr_cmp(a, b));
		SetPartition { k, blocks }
	}

	/// From block labels: `labels[x-1]` names the block of `x`.
	pub fn from_labels(labels: &[usize]) -> Self {
		let mut blocks: Vec<Vec<usize>> = Vec::new();
		let mut index = std::collections::HashMap::new();
		for (x, &l) in labels.iter().enumerate() {
			let i = *index.entry(l).or_insert_with(|| {
				blocks.push(Vec::new());
				blocks.len() - 1
			});
			blocks[i].push(x + 1);
		}
		Self::canonical(labels.len(), blocks)
	}

	/// `1|2|…|k`.
	pub fn discrete(k: usize) -> Self {
		SetPartition {
			k,
			blocks: (1..=k).map(|x| vec![x]).collect(),
		}
	}

	/// The one-block partition `12…k` (no blocks when `k = 0`).
	pub fn full(k: usize) -> Self {
		let blocks = if k == 0 { Vec::new() } else { vec![(1..=k).collect()] };
		SetPartition { k, blocks }
	}

	pub fn k(&self) -> usize {
		self.k
	}

	/// Blocks in graded last letter order.
	pub fn blocks(&self) -> &[Vec<usize>] {
		&self.blocks
	}

	pub fn len(&self) -> usize {
		self.blocks.len()
	}

	pub fn is_empty(&self) -> bool {
		self.blocks.is_empty()
	}

	/// `type(π)`, the partition of block sizes.
	pub fn block_type(&self) -> Partition {
		Partition::from_parts(self.blocks.iter().map(|b| b.len()).collect())
	}

	/// `labels()[x-1]` is the index of the block containing `x`.
	pub fn labels(&self) -> Vec<usize> {
		let mut l = vec![0; self.k];
		for (i, b) in self.blocks.iter().enumerate() {
			for &x in b {
				l[x - 1] = i;
			}
		}
		l
	}

	/// Blocks of size `i`, in order.
	pub fn blocks_of_size(&self, i: usize) -> impl Iterator<Item = &Vec<usize>> {
		self.blocks.iter().filter(move |b| b.len() == i)
	}

	/// Whether every block of `self` lies inside a block of `other`.
	pub fn is_finer(&self, other: &SetPartition) -> bool {
		if self.k != other.k {
			return false;
		}
		let l = other.labels();
		self.blocks.iter().all(|b| b.iter().all(|&x| l[x - 1] == l[b[0] - 1]))
	}

	/// The finest common coarsening `π ∨ γ`.
	pub fn join(&self, other: &SetPartition) -> Result<SetPartition> {
		if self.k != other.k {
			return arg(format!("join of partitions of [{}] and [{}]", self.k, other.k));
		}
		let mut ds = DisjointSets::new(self.k);
		for b in self.blocks.iter().chain(&other.blocks) {
			for w in b.windows(2) {
				ds.merge(w[0] - 1, w[1] - 1);
			}
		}
		let labels: Vec<usize> = (0..self.k).map(|x| ds.find(x)).collect();
		Ok(SetPartition::from_labels(&labels))
	}

	/// Applies a permutation of `[k]` (`perm[x-1]` is the image of `x`) to every element.
	pub fn permute(&self, perm: &[usize]) -> SetPartition {
		let blocks = self
			.blocks
			.iter()
			.map(|b| b.iter().map(|&x| perm[x - 1]).collect())
			.collect();
		SetPartition::canonical(self.k, blocks)
	}

	/// Parses `4|16|38|257` or `1,2|3`; see [`parse_block_tokens`] for element rules.
	pub fn parse_with_k(s: &str, k: Option<usize>) -> Result<Self> {
		let s = s.trim();
		let mut blocks = Vec::new();
		if !s.is_empty() && s != "∅" {
			let separated = uses_separators(s);
			for part in s.split('|') {
				let toks = parse_block_tokens(part, separated)?;
				if let Some((x, _)) = toks.iter().find(|t| t.1) {
					return parse(format!("barred element {x}' in a set partition"));
				}
				blocks.push(toks.into_iter().map(|t| t.0).collect::<Vec<_>>());
			}
		}
		let max = blocks.iter().flatten().copied().max().unwrap_or(0);
		let k = k.unwrap_or(max);
		SetPartition::new(k, blocks).map_err(|e| Error::Parse(format!("{s:?}: {e}")))
	}
}

impl FromStr for SetPartition {
	type Err = Error;

	fn from_str(s: &str) -> Result<Self> {
		SetPartition::parse_with_k(s, None)
	}
}

/// Writes a block of elements, juxtaposed when every element is a single digit.
pub(crate) fn write_elements(f: &mut impl fmt::Write, elems: &[(usize, bool)], juxtapose: bool) -> fmt::Result {
	for (i, &(x, barred)) in elems.iter().enumerate() {
		if i > 0 && !juxtapose {
			f.write_char(',')?;
		}
		write!(f, "{x}")?;
		if barred {
			f.write_char('\'')?;
		}
	}
	Ok(())
}

impl fmt::Display for SetPartition {
	fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
		if self.blocks.is_empty() {
			return write!(f, "∅");
		}
		let juxtapose = self.k <= 9;
		for (i, b) in self.blocks.iter().enumerate() {
			if i > 0 {
				f.write_str(if juxtapose { "|" } else { " | " })?;
			}
			let elems: Vec<_> = b.iter().map(|&x| (x, false)).collect();
			write_elements(f, &elems, juxtapose)?;
		}
		Ok(())
	}
}

/// Whether a whole text uses comma/whitespace separated elements rather than
/// juxtaposed single digits.
pub(crate) fn uses_separators(s: &str) -> bool {
	s.contains(',') || s.contains(char::is_whitespace)
}

/// Splits one block of text into `(element, barred)` tokens.
///
/// In separated mode commas and whitespace split tokens of the form `INT` or
/// `INT'`; otherwise every digit is its own element, optionally followed by `'`.
pub(crate) fn parse_block_tokens(block: &str, separated: bool) -> Result<Vec<(usize, bool)>> {
	let t = block.trim();
	if t.is_empty() {
		return parse("empty block");
	}
	let mut out = Vec::new();
	if separated {
		for tok in t
			.split(|c: char| c == ',' || c.is_whitespace())
			.filter(|x| !x.is_empty())
		{
			let (num, barred) = match tok.strip_suffix('\'') {
				Some(n) => (n, true),
				None => (tok, false),
			};
			let x: usize = num
				.parse()
				.or_else(|_| parse(format!("bad element {tok:?} in block {t:?}")))?;
			out.push((x, barred));
		}
	} else {
		let chars: Vec<char> = t.chars().collect();
		let mut i = 0;
		while i < chars.len() {
			let d = chars[i]
				.to_digit(10)
				.ok_or_else(|| Error::Parse(format!("unexpected {:?} in block {t:?}", chars[i])))?;
			let barred = chars.get(i + 1) == Some(&'\'');
			out.push((d as usize, barred));
			i += 1 + barred as usize;
		}
	}
	if out.iter().any(|t| t.0 == 0) {
		return parse(format!("element 0 in block {t:?}; elements start at 1"));
	}
	Ok(out)
}

/// All set partitions of `[k]`, optionally of a given type, in
/// restricted-growth-string lexicographic order.
pub fn enumerate_setpartitions(k: usize, type_filter: Option<&Partition>) -> Vec<SetPartition> {
	if let Some(t) = type_filter {
		if t.weight() != k {
			return Vec::new();
		}
	}
	let mut out = Vec::new();
	let mut rgs = vec![0usize; k];
	fn go(pos: usize, max: usize, rgs: &mut Vec<usize>, filter: Option<&Partition>, out: &mut Vec<SetPartition>) {
		if pos == rgs.len() {
			let p = SetPartition::from_labels(rgs);
			if filter.is_none_or(|t| &p.block_type() == t) {
				out.push(p);
			}
			return;
		}
		let limit = if pos == 0 { 0 } else { max + 1 };
		for v in 0..=limit {
			rgs[pos] = v;
			go(pos + 1, max.max(v), rgs, filter, out);
		}
	}
	go(0, 0, &mut rgs, type_filter, &mut out);
	out
}
