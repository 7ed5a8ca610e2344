//! ω-powers, cycle types, class representatives and the merge counts `b_μ⃗^ν⃗`.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::{enumerate_ik, Partition, VectorPartition};
use crate::diagram::Diagram;
use crate::error::{arg, Error, Result};
use crate::green::{canonical_pi, GroupElement};
use crate::limits::{self, Limit};
use crate::matrix::CharMatrix;

/// The cycle type of an element: `μ⁽ⁱ⁾` lists cycle lengths on blocks of size `i`.
pub type CycleType = VectorPartition;

/// `(d^m, m)` with `m` the least positive integer making `d^m` idempotent.
pub fn omega(d: &Diagram) -> (Diagram, usize) {
	let mut p = d.clone();
	let mut m = 1;
	loop {
		let pp = &p * &p;
		if pp == p {
			return (p, m);
		}
		p = &p * d;
		m += 1;
		// the exponent never exceeds the number of elements of the cyclic semigroup
		assert!(m <= 1 << 20, "ω-power search did not terminate for {d}");
	}
}

/// Cycle type of `d^{ω+1}` as a block permutation in `G_{d^ω}`.
pub fn cycletype(d: &Diagram) -> CycleType {
	let (e, _) = omega(d);
	let x = &e * d;
	GroupElement::from_diagram(&e.top(), &x)
		.expect("d^{ω+1} lies in the maximal subgroup at d^ω")
		.cycle_type()
}

/// `d_μ⃗`: on `π_{type↑(μ⃗)}`, each size class is cycled consecutively,
/// block `A_j` joined to `Ā_{j+1}`.
pub fn class_rep(mu: &VectorPartition) -> Diagram {
	let pi = canonical_pi(&mu.type_up());
	let mut map: Vec<usize> = (0..pi.len()).collect();
	let mut start = 0;
	for comp in mu.components() {
		for &r in comp.parts() {
			for j in 0..r {
				map[start + j] = start + (j + 1) % r;
			}
			start += r;
		}
	}
	Diagram::from_block_map(&pi, &pi, &map).expect("canonical cycles")
}

/// What a merge set filters on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MergeTarget {
	/// `C(d; λ)`: coarsenings with `top = bot` of type `λ`.
	Type(Partition),
	/// `C(d; ν⃗)`: coarsenings with `top = bot` and cycle type `ν⃗`.
	Cycles(CycleType),
}

/// Every coarsening of `d` (unions of its blocks) with `top = bot`,
/// paired with its cycle type.
///
/// Such a coarsening is fixed by its top partition ρ, which must coarsen
/// `J = top(d) ∨ bot(d)`; its blocks are then forced to be
/// `{β : top(β) ⊆ R}` for `R ∈ ρ`. So we search over partitions of the
/// blocks of J, pruning as soon as two blocks of d have tops in one part of
/// ρ but bottoms in different parts, or the reverse.
pub fn closed_coarsenings(d: &Diagram) -> Result<Vec<(Diagram, CycleType)>> {
	let blocks = d.blocks();
	limits::check(Limit::MergeBlocks, "merging blocks", blocks.len())?;
	let k = d.k();
	let join = d.top().join(&d.bot())?;
	let jl = join.labels();
	let edges: Vec<(usize, usize)> = blocks.iter().map(|(t, b)| (jl[t[0] - 1], jl[b[0] - 1])).collect();
	let n = join.len();
	let mut rgs = vec![0usize; n];
	let mut out = Vec::new();
	search(0, 0, &mut rgs, &edges, &mut |rgs| {
		let groups = rgs.iter().max().map_or(0, |m| m + 1);
		let mut merged = vec![(Vec::new(), Vec::new()); groups];
		for (i, (t, b)) in blocks.iter().enumerate() {
			let g = rgs[edges[i].0];
			merged[g].0.extend_from_slice(t);
			merged[g].1.extend_from_slice(b);
		}
		if merged.iter().any(|(t, b)| t.len() != b.len()) {
			return Ok(());
		}
		let c = Diagram::from_blocks(k, &merged)?;
		let top = c.top();
		if top == c.bot() {
			let ct = GroupElement::from_diagram(&top, &c)?.cycle_type();
			out.push((c, ct));
		}
		Ok(())
	})?;
	Ok(out)
}

fn search(
	pos: usize,
	max: usize,
	rgs: &mut Vec<usize>,
	edges: &[(usize, usize)],
	emit: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
	if pos == rgs.len() {
		return emit(rgs);
	}
	let limit = if pos == 0 { 0 } else { max + 1 };
	for v in 0..=limit {
		rgs[pos] = v;
		if consistent(pos, rgs, edges) {
			search(pos + 1, max.max(v), rgs, edges, emit)?;
		}
	}
	Ok(())
}

/// Checks `a ~ a′ ⇔ b ~ b′` for edge pairs whose endpoints are all assigned
/// and that involve the newest node.
fn consistent(pos: usize, rgs: &[usize], edges: &[(usize, usize)]) -> bool {
	let done = |e: &(usize, usize)| e.0 <= pos && e.1 <= pos;
	let touches = |e: &(usize, usize)| e.0 == pos || e.1 == pos;
	for (i, e) in edges.iter().enumerate() {
		if !done(e) {
			continue;
		}
		for f in &edges[..i] {
			if !done(f) || !(touches(e) || touches(f)) {
				continue;
			}
			if (rgs[e.0] == rgs[f.0]) != (rgs[e.1] == rgs[f.1]) {
				return false;
			}
		}
	}
	true
}

/// `C(d; λ)` or `C(d; ν⃗)`.
pub fn merge_set(d: &Diagram, target: &MergeTarget) -> Result<Vec<Diagram>> {
	Ok(closed_coarsenings(d)?
		.into_iter()
		.filter(|(c, ct)| match target {
			MergeTarget::Type(l) => &c.top().block_type() == l,
			MergeTarget::Cycles(nu) => ct == nu,
		})
		.map(|(c, _)| c)
		.collect())
}

/// `b_μ⃗^ν⃗` by the closed formula: `(1/𝐳_ν⃗) Σ 𝐳_μ⃗ / Π 𝐳_{τ(i,j)}` over all
/// sequences with `μ⃗ = ⨄ νᵢ⁽ʲ⁾·τ(i,j)`, `τ(i,j) ∈ I_j`.
pub fn b_coeff(mu: &VectorPartition, nu: &VectorPartition) -> Result<BigUint> {
	if mu.weight() != nu.weight() {
		return arg(format!("{mu} and {nu} lie in different I_k"));
	}
	let k = mu.weight();
	// remaining multiplicities: rem[a][len] cycles of length len on size-a blocks
	let mut rem: Vec<Vec<usize>> = (1..=k).map(|a| mu.component(a).multiplicities()).collect();
	let slots: Vec<(usize, usize)> = (1..=k)
		.flat_map(|j| nu.component(j).parts().iter().map(move |&n| (j, n)))
		.collect();
	let ik: Vec<Vec<(VectorPartition, BigUint)>> = (0..=k)
		.map(|j| {
			enumerate_ik(j)
				.into_iter()
				.map(|t| {
					let z = t.z();
					(t, z)
				})
				.collect()
		})
		.collect();
	let mut total = BigRational::zero();
	let zmu = BigInt::from(mu.z());
	walk(&slots, 0, &ik, &mut rem, &mut BigUint::one(), &zmu, &mut total);
	let b = total / BigRational::from_integer(BigInt::from(nu.z()));
	if !b.is_integer() {
		return Err(Error::Check(format!(
			"b coefficient for {mu}, {nu} is {b}, not an integer"
		)));
	}
	Ok(b.to_integer().to_biguint().expect("nonnegative"))
}

fn walk(
	slots: &[(usize, usize)],
	pos: usize,
	ik: &[Vec<(VectorPartition, BigUint)>],
	rem: &mut [Vec<usize>],
	zprod: &mut BigUint,
	zmu: &BigInt,
	total: &mut BigRational,
) {
	if pos == slots.len() {
		if rem.iter().all(|m| m.iter().all(|&c| c == 0)) {
			*total += BigRational::new(zmu.clone(), BigInt::from(zprod.clone()));
		}
		return;
	}
	let (j, n) = slots[pos];
	'tau: for (tau, ztau) in &ik[j] {
		let mut taken = Vec::new();
		for (a, comp) in tau.components().iter().enumerate() {
			for &t in comp.parts() {
				let len = n * t;
				match rem[a].get_mut(len) {
					Some(c) if *c > 0 => {
						*c -= 1;
						taken.push((a, len));
					}
					_ => {
						for &(a, len) in &taken {
							rem[a][len] += 1;
						}
						continue 'tau;
					}
				}
			}
		}
		*zprod *= ztau;
		walk(slots, pos + 1, ik, rem, zprod, zmu, total);
		*zprod /= ztau;
		for &(a, len) in &taken {
			rem[a][len] += 1;
		}
	}
}

/// `b_μ⃗^ν⃗ = |C(d_μ⃗; ν⃗)|` by exhaustive merging.
pub fn b_brute(mu: &VectorPartition, nu: &VectorPartition) -> Result<usize> {
	Ok(merge_set(&class_rep(mu), &MergeTarget::Cycles(nu.clone()))?.len())
}

/// All brute-force counts for one `μ⃗`, keyed by `ν⃗`.
pub fn b_brute_column(mu: &VectorPartition) -> Result<HashMap<VectorPartition, usize>> {
	let mut counts = HashMap::new();
	for (_, ct) in closed_coarsenings(&class_rep(mu))? {
		*counts.entry(ct).or_insert(0) += 1;
	}
	Ok(counts)
}

/// `B_k`, with row `ν⃗` and column `μ⃗` holding `b_μ⃗^ν⃗`.
pub fn b_matrix(k: usize) -> Result<CharMatrix> {
	limits::check(Limit::Symfunc, "the B matrix", k)?;
	let order = enumerate_ik(k);
	let cols: Vec<Vec<BigInt>> = {
		use rayon::prelude::*;
		order
			.par_iter()
			.map(|mu| {
				order
					.iter()
					.map(|nu| b_coeff(mu, nu).map(BigInt::from))
					.collect::<Result<Vec<_>>>()
			})
			.collect::<Result<Vec<_>>>()?
	};
	let n = order.len();
	let entries = (0..n).map(|r| (0..n).map(|c| cols[c][r].clone()).collect()).collect();
	Ok(CharMatrix { k, order, entries })
}

/// Number of elements of each generalized conjugacy class of 𝒰ₖ.
pub fn class_sizes(elements: &[Diagram]) -> HashMap<CycleType, usize> {
	let mut sizes = HashMap::new();
	for d in elements {
		*sizes.entry(cycletype(d)).or_insert(0) += 1;
	}
	sizes
}
