//! Green's structure of 𝒰ₖ: ℒ- and 𝒥-classes, maximal subgroups and the
//! orbit representatives `ℓ_π^γ` that carry the Schützenberger action.

use crate::combinatorics::{enumerate_setpartitions, Partition, SetPartition};
use crate::diagram::{block_bijections, Diagram};
use crate::error::{arg, Result};

/// An element of the maximal subgroup `G_{e_π}`, kept both as a diagram and
/// as the permutation it induces on each size class of blocks of π.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
	pub diagram: Diagram,
	/// `perms[i-1][j]` is the index (among blocks of size `i`) of the bottom
	/// block joined to the `j`-th top block of size `i`.
	pub perms: Vec<Vec<usize>>,
}

impl GroupElement {
	/// Reads off the block permutations of `d`, which must have `top = bot = π`.
	pub fn from_diagram(pi: &SetPartition, d: &Diagram) -> Result<Self> {
		if &d.top() != pi || &d.bot() != pi {
			return arg(format!("{d} is not in the maximal subgroup at e_{pi}"));
		}
		let k = pi.k();
		// position of each block within its size class
		let mut class_index = vec![0; pi.len()];
		let mut counts = vec![0; k + 1];
		for (i, b) in pi.blocks().iter().enumerate() {
			class_index[i] = counts[b.len()];
			counts[b.len()] += 1;
		}
		let block_of = pi.labels();
		let mut perms: Vec<Vec<usize>> = (1..=k).map(|i| vec![0; counts[i]]).collect();
		for (top, bot) in d.blocks() {
			let (t, b) = (block_of[top[0] - 1], block_of[bot[0] - 1]);
			perms[top.len() - 1][class_index[t]] = class_index[b];
		}
		Ok(GroupElement {
			diagram: d.clone(),
			perms,
		})
	}

	/// Cycle lengths of each block permutation, one partition per block size.
	pub fn cycle_type(&self) -> crate::VectorPartition {
		crate::VectorPartition::new(self.perms.iter().map(|p| cycle_type(p)).collect())
	}
}

/// Cycle type of a permutation given as images of `0..n`.
pub fn cycle_type(perm: &[usize]) -> Partition {
	let mut seen = vec![false; perm.len()];
	let mut lens = Vec::new();
	for s in 0..perm.len() {
		let mut len = 0;
		let mut x = s;
		while !seen[x] {
			seen[x] = true;
			x = perm[x];
			len += 1;
		}
		if len > 0 {
			lens.push(len);
		}
	}
	Partition::from_parts(lens)
}

/// `G_{e_π}`: the diagrams with `top = bot = π`.
#[derive(Clone, Debug)]
pub struct MaximalSubgroup {
	pub base: SetPartition,
	pub elements: Vec<GroupElement>,
}

impl MaximalSubgroup {
	pub fn order(&self) -> usize {
		self.elements.len()
	}
}

/// `ℓ_π^γ`, the diagram sending the `i`-th block of γ to the `i`-th block of π.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrbitRepresentative {
	pub pi: SetPartition,
	pub gamma: SetPartition,
	pub diagram: Diagram,
}

impl OrbitRepresentative {
	pub fn new(pi: &SetPartition, gamma: &SetPartition) -> Result<Self> {
		if pi.k() != gamma.k() || pi.block_type() != gamma.block_type() {
			return arg(format!("{gamma} and {pi} do not have the same type"));
		}
		let ident: Vec<usize> = (0..pi.len()).collect();
		let diagram = Diagram::from_block_map(gamma, pi, &ident)?;
		Ok(OrbitRepresentative {
			pi: pi.clone(),
			gamma: gamma.clone(),
			diagram,
		})
	}
}

/// `π_λ`: consecutive blocks, singletons first, then pairs, and so on.
pub fn canonical_pi(lambda: &Partition) -> SetPartition {
	let mut blocks = Vec::new();
	let mut next = 1;
	for &size in lambda.parts().iter().rev() {
		blocks.push((next..next + size).collect());
		next += size;
	}
	SetPartition::new(lambda.weight(), blocks).expect("consecutive blocks cover [k]")
}

/// `L_π = {d : bot(d) = π}`, built from block bijections.
pub fn lclass(pi: &SetPartition) -> Vec<Diagram> {
	let mut out = Vec::new();
	for gamma in enumerate_setpartitions(pi.k(), Some(&pi.block_type())) {
		for map in block_bijections(&gamma, pi) {
			out.push(Diagram::from_block_map(&gamma, pi, &map).expect("same type"));
		}
	}
	out
}

/// `J_λ = {d : type(top(d)) = λ}`.
pub fn jclass(lambda: &Partition) -> Vec<Diagram> {
	enumerate_setpartitions(lambda.weight(), Some(lambda))
		.iter()
		.flat_map(lclass)
		.collect()
}

pub fn maximal_subgroup(pi: &SetPartition) -> MaximalSubgroup {
	let elements = block_bijections(pi, pi)
		.into_iter()
		.map(|map| {
			let d = Diagram::from_block_map(pi, pi, &map).expect("same type");
			GroupElement::from_diagram(pi, &d).expect("top = bot = π")
		})
		.collect();
	MaximalSubgroup {
		base: pi.clone(),
		elements,
	}
}

/// Solves `m·ℓ_π^γ = ℓ_π^{γ′}·g` for `(γ′, g)`; `None` exactly when
/// `bot(m)` is not finer than γ, i.e. the product leaves `L_π`.
pub fn act_on_rep(m: &Diagram, rep: &OrbitRepresentative) -> Result<Option<(SetPartition, GroupElement)>> {
	if m.k() != rep.pi.k() {
		return arg(format!("diagram in 𝒰_{} acting on L_π in 𝒰_{}", m.k(), rep.pi.k()));
	}
	if !m.bot().is_finer(&rep.gamma) {
		return Ok(None);
	}
	let ml = m * &rep.diagram;
	let gamma2 = ml.top();
	let rep2 = OrbitRepresentative::new(&rep.pi, &gamma2)?;
	let g = &rep2.diagram.involution() * &ml;
	if &rep2.diagram * &g != ml {
		return Err(crate::Error::Check(format!("m·ℓ ≠ ℓ′·g for m = {m}")));
	}
	Ok(Some((gamma2, GroupElement::from_diagram(&rep.pi, &g)?)))
}
