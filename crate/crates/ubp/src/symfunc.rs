//! Symmetric functions in the alphabets `X₁, X₂, …`, stored in the power-sum
//! basis with exact rational coefficients.
//!
//! The key `μ⃗` stands for `𝐩_μ⃗ = Π_i p_{μ⁽ⁱ⁾}[X_i]`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde_json::json;

use crate::combinatorics::{enumerate_ik, require_weight, Partition, VectorPartition};
use crate::error::{Error, Result};
use crate::green::{canonical_pi, maximal_subgroup};
use crate::limits::{self, Limit};
use crate::matrix::CharMatrix;
use crate::specht::character_sn;

fn rat(n: impl Into<BigInt>) -> BigRational {
	BigRational::from_integer(n.into())
}

fn z(mu: &VectorPartition) -> BigRational {
	rat(BigInt::from(mu.z()))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiSym {
	terms: BTreeMap<VectorPartition, BigRational>,
}

impl MultiSym {
	pub fn zero() -> Self {
		MultiSym::default()
	}

	pub fn one() -> Self {
		MultiSym::p(VectorPartition::empty())
	}

	/// `𝐩_μ⃗`.
	pub fn p(mu: VectorPartition) -> Self {
		let mut terms = BTreeMap::new();
		terms.insert(mu, BigRational::one());
		MultiSym { terms }
	}

	/// `p_n[X_i]`.
	pub fn p_in(n: usize, i: usize) -> Self {
		MultiSym::p(VectorPartition::in_slot(i, Partition::from_parts(vec![n])))
	}

	pub fn from_terms(terms: impl IntoIterator<Item = (VectorPartition, BigRational)>) -> Self {
		let mut f = MultiSym::zero();
		for (mu, c) in terms {
			f.add_term(mu, c);
		}
		f
	}

	pub fn add_term(&mut self, mu: VectorPartition, c: BigRational) {
		if c.is_zero() {
			return;
		}
		let e = self.terms.entry(mu.clone()).or_insert_with(BigRational::zero);
		*e += c;
		if e.is_zero() {
			self.terms.remove(&mu);
		}
	}

	pub fn terms(&self) -> &BTreeMap<VectorPartition, BigRational> {
		&self.terms
	}

	/// Coefficient of `𝐩_μ⃗`.
	pub fn coeff(&self, mu: &VectorPartition) -> BigRational {
		self.terms.get(mu).cloned().unwrap_or_else(BigRational::zero)
	}

	pub fn is_zero(&self) -> bool {
		self.terms.is_empty()
	}

	pub fn add(&self, other: &MultiSym) -> MultiSym {
		let mut out = self.clone();
		for (mu, c) in &other.terms {
			out.add_term(mu.clone(), c.clone());
		}
		out
	}

	pub fn sub(&self, other: &MultiSym) -> MultiSym {
		self.add(&other.scale(&-BigRational::one()))
	}

	pub fn scale(&self, c: &BigRational) -> MultiSym {
		MultiSym::from_terms(self.terms.iter().map(|(mu, x)| (mu.clone(), x * c)))
	}

	pub fn mul(&self, other: &MultiSym) -> MultiSym {
		let mut out = MultiSym::zero();
		for (a, x) in &self.terms {
			for (b, y) in &other.terms {
				out.add_term(a.union(b), x * y);
			}
		}
		out
	}

	/// The same function with `X₂ = X₃ = ⋯ = 0`.
	pub fn restrict_to_first_alphabet(&self) -> MultiSym {
		MultiSym::from_terms(
			self.terms
				.iter()
				.filter(|(mu, _)| mu.is_single_alphabet())
				.map(|(m, c)| (m.clone(), c.clone())),
		)
	}

	pub fn to_json(&self) -> serde_json::Value {
		let terms: Vec<_> = self
			.terms
			.iter()
			.map(|(mu, c)| {
				json!({
					"vector_partition": mu.to_json(),
					"numerator": c.numer().to_string(),
					"denominator": c.denom().to_string(),
				})
			})
			.collect();
		json!(terms)
	}
}

/// Writes `c₁ b[key₁] + c₂ b[key₂] …` with `b` the basis letter.
pub fn write_expansion(
	f: &mut impl fmt::Write,
	letter: &str,
	terms: impl IntoIterator<Item = (String, BigRational)>,
) -> fmt::Result {
	let mut first = true;
	for (key, c) in terms {
		let mag = c.abs();
		let sign = if c.is_negative() { "-" } else { "+" };
		if first {
			if c.is_negative() {
				f.write_str("-")?;
			}
		} else {
			write!(f, " {sign} ")?;
		}
		if !mag.is_one() {
			write!(f, "{mag} ")?;
		}
		write!(f, "{letter}{key}")?;
		first = false;
	}
	if first {
		f.write_str("0")?;
	}
	Ok(())
}

impl fmt::Display for MultiSym {
	fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
		write_expansion(f, "p", self.terms.iter().map(|(mu, c)| (mu.to_string(), c.clone())))
	}
}

/// `⟨f, g⟩ = Σ f_μ⃗ g_μ⃗ 𝐳_μ⃗`.
pub fn scalar(f: &MultiSym, g: &MultiSym) -> BigRational {
	let (small, large) = if f.terms.len() <= g.terms.len() { (f, g) } else { (g, f) };
	small
		.terms
		.iter()
		.filter_map(|(mu, x)| large.terms.get(mu).map(|y| x * y * z(mu)))
		.fold(BigRational::zero(), |a, b| a + b)
}

/// `s_λ[X_i] = Σ_μ χ^λ(μ)/z_μ p_μ[X_i]`.
pub fn schur_in(lambda: &Partition, i: usize) -> MultiSym {
	MultiSym::from_terms(Partition::all(lambda.weight()).into_iter().map(|mu| {
		let c = BigRational::new(
			character_sn(lambda, &mu).expect("same size").into(),
			BigInt::from(mu.z()),
		);
		(VectorPartition::in_slot(i, mu), c)
	}))
}

/// `𝐬_λ⃗[𝐗] = Π_i s_{λ⁽ⁱ⁾}[X_i]`.
pub fn s_monomial(lambda: &VectorPartition) -> MultiSym {
	lambda
		.components()
		.iter()
		.enumerate()
		.filter(|(_, l)| !l.is_empty())
		.fold(MultiSym::one(), |acc, (i, l)| acc.mul(&schur_in(l, i + 1)))
}

/// Expands a Schur combination in the power-sum basis.
pub fn s_to_p(schur: &BTreeMap<VectorPartition, BigRational>) -> MultiSym {
	schur
		.iter()
		.fold(MultiSym::zero(), |acc, (lam, c)| acc.add(&s_monomial(lam).scale(c)))
}

/// All vector partitions whose `i`-th component has size `sizes[i-1]`.
fn with_sizes(sizes: &[usize]) -> Vec<VectorPartition> {
	let mut acc: Vec<Vec<Partition>> = vec![Vec::new()];
	for &n in sizes {
		let parts = Partition::all(n);
		acc = acc
			.into_iter()
			.flat_map(|p| {
				parts.iter().map(move |q| {
					let mut p = p.clone();
					p.push(q.clone());
					p
				})
			})
			.collect();
	}
	acc.into_iter().map(VectorPartition::new).collect()
}

fn chi(lambda: &VectorPartition, mu: &VectorPartition) -> BigInt {
	let n = lambda.components().len().max(mu.components().len());
	(1..=n).fold(BigInt::one(), |acc, i| {
		acc * character_sn(lambda.component(i), mu.component(i)).expect("component sizes agree")
	})
}

fn sizes(mu: &VectorPartition) -> Vec<usize> {
	mu.trimmed().iter().map(|p| p.weight()).collect()
}

/// Schur coefficients: `⟨f, 𝐬_ν⃗⟩ = Σ_μ⃗ f_μ⃗ Π χ^{ν⁽ⁱ⁾}(μ⁽ⁱ⁾)`.
pub fn p_to_s(f: &MultiSym) -> BTreeMap<VectorPartition, BigRational> {
	let mut out: BTreeMap<VectorPartition, BigRational> = BTreeMap::new();
	let mut profiles: BTreeMap<Vec<usize>, Vec<VectorPartition>> = BTreeMap::new();
	for mu in f.terms.keys() {
		profiles.entry(sizes(mu)).or_insert_with(|| with_sizes(&sizes(mu)));
	}
	for (mu, c) in &f.terms {
		for nu in &profiles[&sizes(mu)] {
			*out.entry(nu.clone()).or_insert_with(BigRational::zero) += c * rat(chi(nu, mu));
		}
	}
	out.retain(|_, c| !c.is_zero());
	out
}

/// `p_n[f]`: every part of every key is multiplied by `n`.
pub fn pleth_p(n: usize, f: &MultiSym) -> MultiSym {
	MultiSym::from_terms(f.terms.iter().map(|(mu, c)| (mu.scale(n), c.clone())))
}

/// `s_λ[f] = Σ_μ χ^λ(μ)/z_μ Π_j p_{μ_j}[f]`.
pub fn pleth_s(lambda: &Partition, f: &MultiSym) -> MultiSym {
	let mut out = MultiSym::zero();
	for mu in Partition::all(lambda.weight()) {
		let c = BigRational::new(
			character_sn(lambda, &mu).expect("same size").into(),
			BigInt::from(mu.z()),
		);
		if c.is_zero() {
			continue;
		}
		let term = mu
			.parts()
			.iter()
			.fold(MultiSym::one(), |acc, &n| acc.mul(&pleth_p(n, f)));
		out = out.add(&term.scale(&c));
	}
	out
}

/// `E_r = Σ_{μ⃗ ∈ I_r} 𝐩_μ⃗/𝐳_μ⃗`, the Frobenius image of the trivial character.
pub fn e_r(r: usize) -> MultiSym {
	MultiSym::from_terms(enumerate_ik(r).into_iter().map(|mu| {
		let c = BigRational::one() / z(&mu);
		(mu, c)
	}))
}

/// `E_r` as `Σ s_{a₁}[X₁] s_{a₂}[X₂] ⋯` over partitions `(1^{a₁} 2^{a₂} ⋯) ⊢ r`.
pub fn e_r_schur(r: usize) -> MultiSym {
	let mut out = MultiSym::zero();
	for lam in Partition::all(r) {
		let term = lam
			.multiplicities()
			.iter()
			.enumerate()
			.skip(1)
			.filter(|(_, &a)| a > 0)
			.fold(MultiSym::one(), |acc, (i, &a)| {
				acc.mul(&schur_in(&Partition::from_parts(vec![a]), i))
			});
		out = out.add(&term);
	}
	out
}

/// `𝐬_λ⃗[𝐄] = Π_i s_{λ⁽ⁱ⁾}[E_i]`.
pub fn frob_char(lambda: &VectorPartition) -> MultiSym {
	lambda
		.components()
		.iter()
		.enumerate()
		.filter(|(_, l)| !l.is_empty())
		.fold(MultiSym::one(), |acc, (i, l)| acc.mul(&pleth_s(l, &e_r(i + 1))))
}

/// `𝐩_ν⃗[𝐄] = Π_i Π_j p_{ν⁽ⁱ⁾_j}[E_i]`.
pub fn p_of_e(nu: &VectorPartition) -> MultiSym {
	let mut out = MultiSym::one();
	for (i, part) in nu.components().iter().enumerate() {
		for &n in part.parts() {
			out = out.mul(&pleth_p(n, &e_r(i + 1)));
		}
	}
	out
}

/// `Σ values(μ⃗) 𝐩_μ⃗/𝐳_μ⃗`.
pub fn frobenius_of_classfunction(values: &BTreeMap<VectorPartition, BigRational>) -> MultiSym {
	MultiSym::from_terms(values.iter().map(|(mu, v)| (mu.clone(), v / z(mu))))
}

fn integral(x: BigRational, what: impl FnOnce() -> String) -> Result<BigInt> {
	if x.is_integer() {
		Ok(x.to_integer())
	} else {
		Err(Error::Check(format!("{} = {x} is not an integer", what())))
	}
}

fn build(k: usize, row: impl Fn(&VectorPartition) -> Result<Vec<BigInt>> + Sync) -> Result<CharMatrix> {
	limits::check(Limit::Symfunc, "building symmetric function tables", k)?;
	let order = enumerate_ik(k);
	let entries = order.par_iter().map(&row).collect::<Result<Vec<_>>>()?;
	Ok(CharMatrix { k, order, entries })
}

/// `X_k[λ⃗, μ⃗] = ⟨𝐬_λ⃗[𝐄], 𝐩_μ⃗[𝐗]⟩`, the character table.
pub fn x_matrix(k: usize) -> Result<CharMatrix> {
	let order = enumerate_ik(k);
	build(k, |lam| {
		let f = frob_char(lam);
		order
			.iter()
			.map(|mu| integral(f.coeff(mu) * z(mu), || format!("X[{lam}, {mu}]")))
			.collect()
	})
}

/// `A_k[λ⃗, μ⃗] = ⟨𝐬_λ⃗[𝐗], 𝐩_μ⃗[𝐗]⟩`, block diagonal by `type↑`.
pub fn a_matrix(k: usize) -> Result<CharMatrix> {
	let order = enumerate_ik(k);
	build(k, |lam| {
		Ok(order
			.iter()
			.map(|mu| {
				if sizes(lam) == sizes(mu) {
					chi(lam, mu)
				} else {
					BigInt::zero()
				}
			})
			.collect())
	})
}

/// `U_k[λ⃗, ν⃗] = ⟨𝐬_λ⃗[𝐄], 𝐬_ν⃗[𝐗]⟩`, the decomposition matrix.
pub fn u_matrix(k: usize) -> Result<CharMatrix> {
	let order = enumerate_ik(k);
	build(k, |lam| {
		let s = p_to_s(&frob_char(lam));
		order
			.iter()
			.map(|nu| {
				let v = integral(s.get(nu).cloned().unwrap_or_else(BigRational::zero), || {
					format!("U[{lam}, {nu}]")
				})?;
				if v.is_negative() {
					return Err(Error::Check(format!("U[{lam}, {nu}] = {v} is negative")));
				}
				Ok(v)
			})
			.collect()
	})
}

/// `b_μ⃗^ν⃗ = ⟨𝐩_ν⃗[𝐄], 𝐩_μ⃗[𝐗]⟩ / 𝐳_ν⃗`.
pub fn b_by_scalar(mu: &VectorPartition, nu: &VectorPartition) -> Result<BigUint> {
	require_weight(nu, mu.weight())?;
	let v = integral(p_of_e(nu).coeff(mu) * z(mu) / z(nu), || format!("b[{mu}, {nu}]"))?;
	v.to_biguint()
		.ok_or_else(|| Error::Check(format!("b[{mu}, {nu}] is negative")))
}

/// Schur expansion of `s_{λ⁽¹⁾}[s₁] s_{λ⁽²⁾}[s₂] ⋯`, read off from
/// `𝐬_λ⃗[𝐄]` with the alphabets beyond the first set to zero.
pub fn plethysm_schur_expansion(lambda: &VectorPartition) -> BTreeMap<Partition, BigInt> {
	p_to_s(&frob_char(lambda).restrict_to_first_alphabet())
		.into_iter()
		.map(|(nu, c)| {
			assert!(c.is_integer() && !c.is_negative(), "plethysm coefficient {c} at {nu}");
			(nu.component(1).clone(), c.to_integer())
		})
		.collect()
}

/// `⟨α, β⟩ = Σ_λ 1/|G_λ| Σ_{x ∈ G_λ} α(x) β(x)`, evaluated by running over the
/// elements of each representative maximal subgroup.
pub fn class_scalar(
	k: usize,
	alpha: &BTreeMap<VectorPartition, BigRational>,
	beta: &BTreeMap<VectorPartition, BigRational>,
) -> Result<BigRational> {
	limits::check(Limit::Monoid, "enumerating maximal subgroups", k)?;
	let zero = BigRational::zero();
	let mut total = BigRational::zero();
	for lam in Partition::all(k) {
		let group = maximal_subgroup(&canonical_pi(&lam));
		let mut sum = BigRational::zero();
		for g in &group.elements {
			let ct = g.cycle_type();
			sum += alpha.get(&ct).unwrap_or(&zero) * beta.get(&ct).unwrap_or(&zero);
		}
		total += sum / rat(group.order() as u64);
	}
	Ok(total)
}

/// Indicator function of the class `μ⃗`.
pub fn indicator(mu: &VectorPartition) -> BTreeMap<VectorPartition, BigRational> {
	BTreeMap::from([(mu.clone(), BigRational::one())])
}
