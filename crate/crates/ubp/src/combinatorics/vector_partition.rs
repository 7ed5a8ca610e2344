use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::Partition;
use crate::error::{arg, parse, Result};

/// An element of `I_k`: partitions `(λ⁽¹⁾,…,λ⁽ᵏ⁾)` with `Σ i·|λ⁽ⁱ⁾| = k`.
///
/// Exactly `k` component slots are stored; trailing empty partitions are kept
/// so that structural equality coincides with equality in `I_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct VectorPartition {
	comps: Vec<Partition>,
}

impl VectorPartition {
	/// Builds from any number of components; slots are padded or trimmed to the weight.
	pub fn new(mut comps: Vec<Partition>) -> Self {
		let k: usize = comps.iter().enumerate().map(|(i, p)| (i + 1) * p.weight()).sum();
		comps.resize(k, Partition::empty());
		VectorPartition { comps }
	}

	pub fn from_parts(parts: Vec<Vec<usize>>) -> Result<Self> {
		let comps = parts.into_iter().map(Partition::new).collect::<Result<Vec<_>>>()?;
		Ok(VectorPartition::new(comps))
	}

	/// The vector partition with `lambda` in slot 1 and nothing else.
	pub fn single(lambda: Partition) -> Self {
		VectorPartition::new(vec![lambda])
	}

	/// The vector partition with `lambda` in slot `i` (1-based).
	pub fn in_slot(i: usize, lambda: Partition) -> Self {
		assert!(i >= 1, "slots are 1-based");
		let mut comps = vec![Partition::empty(); i];
		comps[i - 1] = lambda;
		VectorPartition::new(comps)
	}

	pub fn empty() -> Self {
		VectorPartition { comps: Vec::new() }
	}

	pub fn weight(&self) -> usize {
		self.comps.len()
	}

	pub fn components(&self) -> &[Partition] {
		&self.comps
	}

	/// Component `i` (1-based); empty beyond the stored slots.
	pub fn component(&self, i: usize) -> &Partition {
		static EMPTY: Partition = Partition::EMPTY;
		if i == 0 {
			return &EMPTY;
		}
		self.comps.get(i - 1).unwrap_or(&EMPTY)
	}

	/// `type↑(λ⃗) = (1^{|λ⁽¹⁾|} 2^{|λ⁽²⁾|} …)`.
	pub fn type_up(&self) -> Partition {
		let mut m = vec![0];
		m.extend(self.comps.iter().map(|p| p.weight()));
		Partition::from_multiplicities(&m)
	}

	/// `𝐳_λ⃗ = Π z_{λ⁽ⁱ⁾}`.
	pub fn z(&self) -> BigUint {
		self.comps.iter().map(|p| p.z()).product()
	}

	/// Multiplies every part by `n`, keeping component indices.
	pub fn scale(&self, n: usize) -> Self {
		VectorPartition::new(self.comps.iter().map(|p| p.scale(n)).collect())
	}

	/// Componentwise multiset union.
	pub fn union(&self, other: &VectorPartition) -> Self {
		let len = self.comps.len().max(other.comps.len());
		let comps = (1..=len).map(|i| self.component(i).union(other.component(i))).collect();
		VectorPartition::new(comps)
	}

	/// True when every part lives in component 1.
	pub fn is_single_alphabet(&self) -> bool {
		self.comps.iter().skip(1).all(|p| p.is_empty())
	}

	/// Components with trailing empties removed.
	pub fn trimmed(&self) -> &[Partition] {
		let end = self.comps.iter().rposition(|p| !p.is_empty()).map_or(0, |i| i + 1);
		&self.comps[..end]
	}

	pub fn to_json(&self) -> serde_json::Value {
		serde_json::to_value(self).expect("vector partitions serialize")
	}

	/// Parses the JSON form `[[2,1],[],[3]]` or the display form `((2,1),∅,(3))`.
	pub fn parse(s: &str) -> Result<Self> {
		let json = s.trim().replace('∅', "[]").replace('(', "[").replace(')', "]");
		let parts: Vec<Vec<usize>> =
			serde_json::from_str(&json).or_else(|e| parse(format!("bad vector partition {s:?}: {e}")))?;
		VectorPartition::from_parts(parts).map_err(|e| crate::Error::Parse(e.to_string()))
	}

	/// Parses and requires membership in `I_k`.
	pub fn parse_in(s: &str, k: usize) -> Result<Self> {
		let v = VectorPartition::parse(s)?;
		if v.weight() != k {
			return parse(format!("{v} lies in I_{}, expected I_{k}", v.weight()));
		}
		Ok(v)
	}
}

impl Ord for VectorPartition {
	fn cmp(&self, other: &Self) -> Ordering {
		self.weight()
			.cmp(&other.weight())
			.then_with(|| self.type_up().cmp_revlex(&other.type_up()))
			.then_with(|| {
				for (a, b) in self.comps.iter().zip(&other.comps) {
					match a.weight().cmp(&b.weight()).then_with(|| a.cmp_revlex(b)) {
						Ordering::Equal => continue,
						o => return o,
					}
				}
				Ordering::Equal
			})
	}
}

impl PartialOrd for VectorPartition {
	fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
		Some(self.cmp(other))
	}
}

impl TryFrom<Vec<Vec<usize>>> for VectorPartition {
	type Error = crate::Error;

	fn try_from(parts: Vec<Vec<usize>>) -> Result<Self> {
		VectorPartition::from_parts(parts)
	}
}

impl From<VectorPartition> for Vec<Vec<usize>> {
	fn from(v: VectorPartition) -> Self {
		v.trimmed().iter().map(|p| p.parts().to_vec()).collect()
	}
}

impl fmt::Display for VectorPartition {
	fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
		let comps: Vec<String> = self.trimmed().iter().map(|p| p.to_string()).collect();
		write!(f, "({})", comps.join(","))
	}
}

/// All of `I_k` in increasing order.
pub fn enumerate_ik(k: usize) -> Vec<VectorPartition> {
	let mut out = Vec::new();
	for t in Partition::all(k) {
		let m = t.multiplicities();
		let mut acc: Vec<Vec<Partition>> = vec![Vec::new()];
		for a in m.iter().skip(1) {
			let choices = Partition::all(*a);
			acc = acc
				.into_iter()
				.flat_map(|prefix| {
					choices.iter().map(move |c| {
						let mut v = prefix.clone();
						v.push(c.clone());
						v
					})
				})
				.collect();
		}
		out.extend(acc.into_iter().map(|comps| VectorPartition { comps }));
	}
	out.sort();
	out
}

/// Checks `v ∈ I_k`.
pub(crate) fn require_weight(v: &VectorPartition, k: usize) -> Result<()> {
	if v.weight() != k {
		return arg(format!("{v} lies in I_{}, expected I_{k}", v.weight()));
	}
	Ok(())
}
