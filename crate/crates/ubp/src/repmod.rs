//! Irreducible 𝒰ₖ-modules realised on uniform tableaux.
//!
//! A uniform tableau of shape λ⃗ is a tuple of standard tableaux, the `i`-th
//! of shape λ⁽ⁱ⁾ filled with size-`i` blocks, whose blocks together partition
//! `[k]`. A diagram acts by renaming blocks through its inverse block
//! bijection and straightening each component.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::json;

use crate::combinatorics::set_partition::{parse_block_tokens, uses_separators, write_elements};
use crate::combinatorics::{enumerate_setpartitions, glr_cmp, require_weight, SetPartition, VectorPartition};
use crate::conjugacy::{class_rep, closed_coarsenings};
use crate::diagram::Diagram;
use crate::error::{arg, parse, Error, Result};
use crate::green::{canonical_pi, GroupElement, OrbitRepresentative};
use crate::limits::{self, Limit};
use crate::matrix::{CharMatrix, IntMatrix};
use crate::specht::{character_sn, standard_tableaux, straighten, Tableau};

/// A block of a set partition, ordered by graded last letter order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Block(Vec<usize>);

impl Block {
	pub fn new(mut elems: Vec<usize>) -> Self {
		elems.sort_unstable();
		Block(elems)
	}

	pub fn elements(&self) -> &[usize] {
		&self.0
	}

	pub fn len(&self) -> usize {
		self.0.len()
	}

	pub fn is_empty(&self) -> bool {
		self.0.is_empty()
	}
}

impl Ord for Block {
	fn cmp(&self, other: &Self) -> Ordering {
		glr_cmp(&self.0, &other.0)
	}
}

impl PartialOrd for Block {
	fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
		Some(self.cmp(other))
	}
}

/// One basis vector of `W^λ⃗`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UniformTableau {
	components: Vec<Tableau<Block>>,
	k: usize,
}

impl UniformTableau {
	/// `components[i-1]` holds the size-`i` blocks; missing trailing
	/// components are empty.
	pub fn new(k: usize, mut components: Vec<Tableau<Block>>) -> Result<Self> {
		if components.len() > k {
			if components[k..].iter().any(|t| !t.rows().is_empty()) {
				return arg(format!("component {} of a tableau in 𝒰_{k}", components.len()));
			}
			components.truncate(k);
		}
		components.resize(k, Tableau::new(Vec::new())?);
		let mut seen = vec![false; k + 1];
		for (i, t) in components.iter().enumerate() {
			for b in t.entries() {
				if b.len() != i + 1 {
					return arg(format!("block {} sits in component {}", fmt_block(b, k), i + 1));
				}
				for &x in b.elements() {
					if x == 0 || x > k {
						return arg(format!("element {x} is outside [1,{k}]"));
					}
					if std::mem::replace(&mut seen[x], true) {
						return arg(format!("element {x} appears twice"));
					}
				}
			}
			if !t.is_standard() {
				return arg(format!("component {} is not standard", i + 1));
			}
		}
		if let Some(x) = (1..=k).find(|&x| !seen[x]) {
			return arg(format!("element {x} is missing"));
		}
		Ok(UniformTableau { components, k })
	}

	pub fn k(&self) -> usize {
		self.k
	}

	pub fn components(&self) -> &[Tableau<Block>] {
		&self.components
	}

	/// Component `i` (1-based).
	pub fn component(&self, i: usize) -> &Tableau<Block> {
		&self.components[i - 1]
	}

	pub fn shape(&self) -> VectorPartition {
		VectorPartition::new(self.components.iter().map(|t| t.shape()).collect())
	}

	/// The set partition formed by all entries.
	pub fn entries(&self) -> SetPartition {
		let blocks = self
			.components
			.iter()
			.flat_map(|t| t.entries().map(|b| b.0.clone()))
			.collect();
		SetPartition::new(self.k, blocks).expect("entries partition [k]")
	}

	/// Parses the text form: components separated by `;`, rows by `/` from
	/// the top (shortest) row down, cells as `{…}`. Empty components are `∅`,
	/// `-` or blank. Without `k`, it is the largest element.
	pub fn parse_with_k(s: &str, k: Option<usize>) -> Result<Self> {
		let cells_text: Vec<&str> = s.split(['{', '}']).skip(1).step_by(2).collect();
		let separated = k.is_some_and(|k| k >= 10) || cells_text.iter().any(|c| uses_separators(c));
		let mut components = Vec::new();
		let mut max = 0;
		for comp in s.split(';') {
			let comp = comp.trim();
			if comp.is_empty() || comp == "∅" || comp == "-" {
				components.push(Tableau::new(Vec::new())?);
				continue;
			}
			let mut rows = Vec::new();
			for row in comp.split('/') {
				let mut cells = Vec::new();
				let mut rest = row.trim();
				while !rest.is_empty() {
					let body = rest
						.strip_prefix('{')
						.ok_or_else(|| Error::Parse(format!("expected '{{' at {rest:?}")))?;
					let end = body
						.find('}')
						.ok_or_else(|| Error::Parse(format!("unclosed cell in {row:?}")))?;
					let elems = parse_block_tokens(&body[..end], separated)?;
					if elems.iter().any(|e| e.1) {
						return parse(format!("barred element in tableau cell {{{}}}", &body[..end]));
					}
					let elems: Vec<usize> = elems.into_iter().map(|e| e.0).collect();
					max = max.max(elems.iter().copied().max().unwrap_or(0));
					cells.push(Block::new(elems));
					rest = body[end + 1..].trim_start().trim_start_matches(',').trim_start();
				}
				if cells.is_empty() {
					return parse(format!("empty row in {comp:?}"));
				}
				rows.push(cells);
			}
			rows.reverse();
			components.push(Tableau::new(rows).map_err(|e| Error::Parse(e.to_string()))?);
		}
		UniformTableau::new(k.unwrap_or(max), components)
	}

	pub fn to_json(&self) -> serde_json::Value {
		let comps: Vec<_> = self
			.components
			.iter()
			.map(|t| {
				t.rows()
					.iter()
					.map(|r| r.iter().map(|b| b.0.clone()).collect::<Vec<_>>())
					.collect::<Vec<_>>()
			})
			.collect();
		json!({ "k": self.k, "shape": self.shape().to_json(), "components": comps })
	}
}

fn fmt_block(b: &Block, k: usize) -> String {
	let mut s = String::from("{");
	let elems: Vec<_> = b.0.iter().map(|&x| (x, false)).collect();
	write_elements(&mut s, &elems, k <= 9).expect("string write");
	s.push('}');
	s
}

impl fmt::Display for UniformTableau {
	fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
		let last = self.components.iter().rposition(|t| !t.rows().is_empty());
		let Some(last) = last else {
			return f.write_str("∅");
		};
		for (i, t) in self.components[..=last].iter().enumerate() {
			if i > 0 {
				f.write_str(" ; ")?;
			}
			if t.rows().is_empty() {
				f.write_str("∅")?;
				continue;
			}
			let rows: Vec<String> = t
				.rows()
				.iter()
				.rev()
				.map(|r| r.iter().map(|b| fmt_block(b, self.k)).collect::<Vec<_>>().join(","))
				.collect();
			f.write_str(&rows.join("/"))?;
		}
		Ok(())
	}
}

impl FromStr for UniformTableau {
	type Err = Error;

	fn from_str(s: &str) -> Result<Self> {
		UniformTableau::parse_with_k(s, None)
	}
}

/// An integer combination of uniform tableaux of one shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleVector {
	pub shape: VectorPartition,
	terms: BTreeMap<UniformTableau, i64>,
}

impl ModuleVector {
	pub fn zero(shape: VectorPartition) -> Self {
		ModuleVector {
			shape,
			terms: BTreeMap::new(),
		}
	}

	pub fn from_tableau(t: UniformTableau) -> Self {
		let mut v = ModuleVector::zero(t.shape());
		v.terms.insert(t, 1);
		v
	}

	pub fn add_term(&mut self, t: UniformTableau, c: i64) {
		if c == 0 {
			return;
		}
		match self.terms.entry(t) {
			std::collections::btree_map::Entry::Vacant(e) => {
				e.insert(c);
			}
			std::collections::btree_map::Entry::Occupied(mut e) => {
				*e.get_mut() += c;
				if *e.get() == 0 {
					e.remove();
				}
			}
		}
	}

	pub fn terms(&self) -> impl Iterator<Item = (&UniformTableau, i64)> {
		self.terms.iter().map(|(t, &c)| (t, c))
	}

	pub fn coefficient(&self, t: &UniformTableau) -> i64 {
		self.terms.get(t).copied().unwrap_or(0)
	}

	pub fn is_zero(&self) -> bool {
		self.terms.is_empty()
	}

	pub fn to_json(&self) -> serde_json::Value {
		let terms: Vec<_> = self
			.terms
			.iter()
			.map(|(t, c)| json!({ "coefficient": c, "tableau": t.to_string() }))
			.collect();
		json!({ "shape": self.shape.to_json(), "terms": terms })
	}
}

impl fmt::Display for ModuleVector {
	fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
		if self.terms.is_empty() {
			return f.write_str("0");
		}
		for (i, (t, &c)) in self.terms.iter().enumerate() {
			let sign = if c < 0 { "-" } else { "+" };
			match (i, c.abs()) {
				(0, 1) if c < 0 => write!(f, "-{t}")?,
				(0, 1) => write!(f, "{t}")?,
				(0, a) => write!(f, "{}{a} {t}", if c < 0 { "-" } else { "" })?,
				(_, 1) => write!(f, " {sign} {t}")?,
				(_, a) => write!(f, " {sign} {a} {t}")?,
			}
		}
		Ok(())
	}
}

/// The uniform tableaux of shape λ⃗, sorted componentwise with each
/// component compared row by row from the longest row.
pub fn basis(shape: &VectorPartition) -> Vec<UniformTableau> {
	let k = shape.weight();
	let mut out = Vec::new();
	for gamma in enumerate_setpartitions(k, Some(&shape.type_up())) {
		let mut partial: Vec<Vec<Tableau<Block>>> = vec![Vec::new()];
		for i in 1..=k {
			let blocks: Vec<Block> = gamma.blocks_of_size(i).map(|b| Block::new(b.clone())).collect();
			let tabs = standard_tableaux(shape.component(i), &blocks).expect("block count matches shape");
			partial = partial
				.into_iter()
				.flat_map(|p| {
					tabs.iter().map(move |t| {
						let mut p = p.clone();
						p.push(t.clone());
						p
					})
				})
				.collect();
		}
		out.extend(partial.into_iter().map(|components| UniformTableau { components, k }));
	}
	out.sort();
	out
}

/// `dim W^λ⃗ = sp_k(type↑ λ⃗) · Π f^{λ⁽ⁱ⁾}`.
pub fn dim(shape: &VectorPartition) -> num_bigint::BigUint {
	let k = shape.weight();
	let sp = crate::combinatorics::sp_count(k, &shape.type_up()).expect("type has weight k");
	shape.components().iter().fold(sp, |acc, p| acc * p.f())
}

/// `d · S`: zero unless `bot(d)` refines the entries of `S`; otherwise each
/// entry `B` becomes the union of the tops of the blocks of `d` whose bottoms
/// lie in `B`, and each component is straightened.
pub fn act(d: &Diagram, s: &UniformTableau) -> Result<ModuleVector> {
	let k = s.k;
	if d.k() != k {
		return arg(format!("diagram in 𝒰_{} acting on a tableau in 𝒰_{k}", d.k()));
	}
	let mut out = ModuleVector::zero(s.shape());
	let gamma = s.entries();
	if !d.bot().is_finer(&gamma) {
		return Ok(out);
	}
	let owner = gamma.labels();
	let mut image: Vec<Vec<usize>> = vec![Vec::new(); gamma.len()];
	for (top, bot) in d.blocks() {
		image[owner[bot[0] - 1]].extend(top);
	}
	let renamed: HashMap<Vec<usize>, Block> = gamma
		.blocks()
		.iter()
		.zip(image)
		.map(|(b, img)| (b.clone(), Block::new(img)))
		.collect();
	let mut partial: Vec<(Vec<Tableau<Block>>, i64)> = vec![(Vec::new(), 1)];
	for t in &s.components {
		let moved = t.map(|b| renamed[&b.0].clone());
		let terms = if moved.rows().is_empty() {
			vec![(moved, 1)]
		} else {
			straighten(&moved)?
		};
		partial = partial
			.into_iter()
			.flat_map(|(p, c)| {
				terms.iter().map(move |(t, e)| {
					let mut p = p.clone();
					p.push(t.clone());
					(p, c * e)
				})
			})
			.collect();
	}
	for (components, c) in partial {
		out.add_term(UniformTableau { components, k }, c);
	}
	Ok(out)
}

/// Matrix of `d` on `basis(λ⃗)`; column `j` is the image of the `j`-th basis
/// tableau, so `matrix(d·d′) = matrix(d)·matrix(d′)`.
pub fn matrix(d: &Diagram, shape: &VectorPartition) -> Result<IntMatrix> {
	require_weight(shape, d.k())?;
	limits::check(Limit::Module, "building module matrices", d.k())?;
	let b = basis(shape);
	let index: HashMap<&UniformTableau, usize> = b.iter().enumerate().map(|(i, t)| (t, i)).collect();
	let mut m = IntMatrix::zeros(b.len(), b.len());
	for (j, t) in b.iter().enumerate() {
		for (u, c) in act(d, t)?.terms() {
			m.set(index[u], j, c);
		}
	}
	Ok(m)
}

/// `χ^λ⃗(d_μ⃗)` as a trace.
pub fn char_trace(shape: &VectorPartition, mu: &VectorPartition) -> Result<i64> {
	require_weight(mu, shape.weight())?;
	let d = class_rep(mu);
	limits::check(Limit::Module, "computing characters", d.k())?;
	let mut tr = 0;
	for t in basis(shape) {
		tr += act(&d, &t)?.coefficient(&t);
	}
	Ok(tr)
}

/// `χ^λ⃗(d_μ⃗)` as a sum over the coarsenings `d ≥ d_μ⃗` with `top(d) = bot(d)`
/// of type `type↑(λ⃗)`, each contributing `χ_{G_λ}(σ_d)` where
/// `d·ℓ = ℓ·σ_d` for `ℓ = ℓ_{π_λ}^{top(d)}`.
pub fn char_by_coarsenings(shape: &VectorPartition, mu: &VectorPartition) -> Result<i64> {
	require_weight(mu, shape.weight())?;
	let lambda = shape.type_up();
	let pi = canonical_pi(&lambda);
	let mut total = 0;
	for (d, _) in closed_coarsenings(&class_rep(mu))? {
		let top = d.top();
		if top.block_type() != lambda {
			continue;
		}
		let l = OrbitRepresentative::new(&pi, &top)?.diagram;
		let sigma = &(&l.involution() * &d) * &l;
		if &d * &l != &l * &sigma {
			return Err(Error::Check(format!("no σ_d for d = {d}")));
		}
		total += group_character(shape, &GroupElement::from_diagram(&pi, &sigma)?)?;
	}
	Ok(total)
}

/// `χ^λ⃗_{G_λ}(g) = Π χ^{λ⁽ⁱ⁾}(cycle type of g on the size-i blocks)`.
pub fn group_character(shape: &VectorPartition, g: &GroupElement) -> Result<i64> {
	let ct = g.cycle_type();
	(1..=shape.weight()).try_fold(1, |acc, i| Ok(acc * character_sn(shape.component(i), ct.component(i))?))
}

fn table(k: usize, f: impl Fn(&VectorPartition, &VectorPartition) -> Result<i64> + Sync) -> Result<CharMatrix> {
	limits::check(Limit::Module, "building the character table", k)?;
	let order = crate::combinatorics::enumerate_ik(k);
	let cells: Vec<(usize, usize)> = (0..order.len())
		.flat_map(|i| (0..order.len()).map(move |j| (i, j)))
		.collect();
	let values: Vec<i64> = cells
		.par_iter()
		.map(|&(i, j)| f(&order[i], &order[j]))
		.collect::<Result<_>>()?;
	let n = order.len();
	let entries = values
		.chunks(n.max(1))
		.take(n)
		.map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
		.collect();
	Ok(CharMatrix { k, order, entries })
}

/// Character table of 𝒰ₖ by traces; rows λ⃗, columns μ⃗.
pub fn character_table_trace(k: usize) -> Result<CharMatrix> {
	table(k, char_trace)
}

/// Character table of 𝒰ₖ by summing group characters over coarsenings.
pub fn character_table_coarsenings(k: usize) -> Result<CharMatrix> {
	table(k, char_by_coarsenings)
}
