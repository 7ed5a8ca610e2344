//! Invariant suites, run by `ubp verify` at two scales.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::One;

use crate::combinatorics::{enumerate_ik, enumerate_setpartitions, factorial, monoid_order, sp_count, Partition};
use crate::conjugacy::{b_brute_column, b_coeff, b_matrix, class_rep, cycletype};
use crate::diagram::{enumerate_monoid, relation_failures, relation_failures_with, Diagram};
use crate::error::{Error, Result};
use crate::green::{canonical_pi, lclass, maximal_subgroup};
use crate::matrix::IntMatrix;
use crate::repmod::{basis, character_table_coarsenings, character_table_trace, dim, matrix};
use crate::specht::{character_sn, count_standard};
use crate::symfunc::{
	a_matrix, class_scalar, e_r, e_r_schur, frobenius_of_classfunction, indicator, plethysm_schur_expansion, scalar,
	u_matrix, x_matrix,
};
use crate::VectorPartition;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
	Fast,
	Full,
}

impl Level {
	fn pick(self, fast: usize, full: usize) -> usize {
		match self {
			Level::Fast => fast,
			Level::Full => full,
		}
	}
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
	pub name: &'static str,
	pub passed: bool,
	pub detail: String,
	pub elapsed: Duration,
}

type Suite = fn(Level) -> Result<String>;

const SUITES: &[(&str, Suite)] = &[
	("monoid-order", monoid_order_suite),
	("relations", relations_suite),
	("inverse-monoid", inverse_monoid_suite),
	("green", green_suite),
	("conjugacy-classes", conjugacy_suite),
	("b-coefficients", b_suite),
	("specht", specht_suite),
	("modules", modules_suite),
	("character-tables", character_tables_suite),
	("factorizations", factorizations_suite),
	("plethysm", plethysm_suite),
	("e-r", e_r_suite),
	("isometry", isometry_suite),
];

pub fn suite_names() -> Vec<&'static str> {
	SUITES.iter().map(|s| s.0).collect()
}

pub fn run_suite(name: &str, level: Level) -> Option<SuiteReport> {
	let &(name, suite) = SUITES.iter().find(|s| s.0 == name)?;
	let start = Instant::now();
	let result = suite(level);
	let elapsed = start.elapsed();
	Some(match result {
		Ok(detail) => SuiteReport {
			name,
			passed: true,
			detail,
			elapsed,
		},
		Err(e) => SuiteReport {
			name,
			passed: false,
			detail: e.to_string(),
			elapsed,
		},
	})
}

pub fn run(level: Level) -> Vec<SuiteReport> {
	SUITES.iter().filter_map(|s| run_suite(s.0, level)).collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
	if ok {
		Ok(())
	} else {
		Err(Error::Check(msg()))
	}
}

fn monoid_order_suite(level: Level) -> Result<String> {
	let top = level.pick(4, 5);
	for k in 0..=top {
		let all = enumerate_monoid(k)?;
		let distinct: HashSet<&Diagram> = all.iter().collect();
		ensure(distinct.len() == all.len(), || format!("duplicates in 𝒰_{k}"))?;
		ensure(BigUint::from(all.len()) == monoid_order(k), || {
			format!("|𝒰_{k}| = {} by enumeration", all.len())
		})?;
	}
	Ok(format!(
		"enumeration = closed formula for k <= {top}; |𝒰_6| = {}",
		monoid_order(6)
	))
}

fn relations_suite(level: Level) -> Result<String> {
	let top = level.pick(5, 6);
	for k in 0..=top {
		let fails = relation_failures(k);
		ensure(fails.is_empty(), || format!("k = {k}: {}", fails.join("; ")))?;
	}
	Ok(format!("relations hold for k <= {top}"))
}

fn inverse_monoid_suite(level: Level) -> Result<String> {
	let top = level.pick(3, 5);
	for k in 0..=top {
		let all = enumerate_monoid(k)?;
		let mut idempotents = Vec::new();
		for d in &all {
			let inv = d.involution();
			ensure(&(d * &inv) * d == *d && &(&inv * d) * &inv == inv, || {
				format!("{d} is not regular")
			})?;
			if d.is_idempotent() {
				ensure(d.top() == d.bot() && *d == Diagram::idempotent_of(&d.top()), || {
					format!("{d}")
				})?;
				idempotents.push(d.clone());
			}
		}
		let bell = enumerate_setpartitions(k, None).len();
		ensure(idempotents.len() == bell, || {
			format!("{} idempotents in 𝒰_{k}", idempotents.len())
		})?;
		if k <= 4 {
			for e in &idempotents {
				for f in &idempotents {
					ensure(e * f == f * e, || format!("{e} and {f} do not commute"))?;
				}
			}
		}
	}
	Ok(format!("regularity and idempotent classification for k <= {top}"))
}

fn green_suite(level: Level) -> Result<String> {
	let top = level.pick(3, 4);
	for k in 0..=top {
		for lambda in Partition::all(k) {
			let pi = canonical_pi(&lambda);
			let group = maximal_subgroup(&pi);
			let l = lclass(&pi);
			let mut tops = HashSet::new();
			for d in &l {
				let orbit: HashSet<Diagram> = group.elements.iter().map(|g| d * &g.diagram).collect();
				ensure(orbit.len() == group.order(), || format!("action on {d} is not free"))?;
				tops.insert(d.top());
			}
			let orbits = l.len() / group.order();
			ensure(
				BigUint::from(orbits) == sp_count(k, &lambda)? && tops.len() == orbits,
				|| format!("L_{pi} has {orbits} orbits"),
			)?;
		}
	}
	Ok(format!("free right action, orbits indexed by tops, k <= {top}"))
}

fn conjugacy_suite(level: Level) -> Result<String> {
	let top = level.pick(4, 5);
	for k in 0..=top {
		let types: HashSet<VectorPartition> = enumerate_monoid(k)?.iter().map(cycletype).collect();
		ensure(types.len() == enumerate_ik(k).len(), || {
			format!("{} classes in 𝒰_{k}", types.len())
		})?;
		for mu in enumerate_ik(k) {
			ensure(cycletype(&class_rep(&mu)) == mu, || format!("class_rep({mu})"))?;
		}
	}
	Ok(format!("class count = |I_k| for k <= {top}"))
}

fn b_suite(level: Level) -> Result<String> {
	let top = level.pick(4, 6);
	let mut pairs = 0;
	for k in 0..=top {
		let ik = enumerate_ik(k);
		for mu in &ik {
			let col = b_brute_column(mu)?;
			for nu in &ik {
				let brute = col.get(nu).copied().unwrap_or(0);
				ensure(b_coeff(mu, nu)? == BigUint::from(brute), || format!("b[{mu}, {nu}]"))?;
				pairs += 1;
			}
		}
	}
	Ok(format!("formula = brute force on {pairs} pairs, k <= {top}"))
}

fn specht_suite(level: Level) -> Result<String> {
	let (nf, no) = (level.pick(6, 8), level.pick(5, 7));
	for n in 0..=nf {
		let sum: BigUint = Partition::all(n)
			.iter()
			.map(|l| BigUint::from(count_standard(l)).pow(2))
			.sum();
		ensure(sum == factorial(n), || format!("sum of f^2 at n = {n}"))?;
	}
	for n in 1..=no {
		let parts = Partition::all(n);
		let nfact: i64 = (1..=n as i64).product();
		for a in &parts {
			for b in &parts {
				let mut s = 0i64;
				for mu in &parts {
					let class = nfact / i64::try_from(mu.z()).expect("small");
					s += class * character_sn(a, mu)? * character_sn(b, mu)?;
				}
				ensure(s == if a == b { nfact } else { 0 }, || {
					format!("<χ^{a}, χ^{b}> at n = {n}")
				})?;
			}
		}
	}
	Ok(format!("Σ(f^λ)² = n! for n <= {nf}; orthogonality for n <= {no}"))
}

fn modules_suite(level: Level) -> Result<String> {
	let (top, rel) = (level.pick(4, 5), level.pick(3, 4));
	for k in 0..=top {
		let mut sum = BigUint::from(0u32);
		for lam in enumerate_ik(k) {
			let n = basis(&lam).len();
			ensure(BigUint::from(n) == dim(&lam), || format!("dim {lam}"))?;
			sum += BigUint::from(n).pow(2);
			if k <= rel {
				let fails = relation_failures_with(
					k,
					|d| matrix(d, &lam).expect("within limits"),
					|a, b| a.mul(b),
					&IntMatrix::identity(n),
				);
				ensure(fails.is_empty(), || format!("{lam}: {}", fails.join("; ")))?;
			}
		}
		ensure(sum == monoid_order(k), || format!("Σ dim² = {sum} at k = {k}"))?;
	}
	Ok(format!(
		"Σ dim² = |𝒰_k| for k <= {top}; relations on matrices for k <= {rel}"
	))
}

fn character_tables_suite(level: Level) -> Result<String> {
	let top = level.pick(3, 5);
	for k in 0..=top {
		let t = character_table_trace(k)?;
		ensure(t == character_table_coarsenings(k)?, || {
			format!("trace vs coarsening sum at k = {k}")
		})?;
		ensure(t == x_matrix(k)?, || format!("trace vs Frobenius at k = {k}"))?;
	}
	Ok(format!("three computations agree for k <= {top}"))
}

fn factorizations_suite(level: Level) -> Result<String> {
	let top = level.pick(4, 5);
	for k in 0..=top {
		let (x, a, b, u) = (x_matrix(k)?, a_matrix(k)?, b_matrix(k)?, u_matrix(k)?);
		ensure(a.mul(&b) == x, || format!("X ≠ AB at k = {k}"))?;
		ensure(u.mul(&a) == x, || format!("X ≠ UA at k = {k}"))?;
		for (name, m) in [("B", &b), ("U", &u)] {
			ensure(m.is_upper_unitriangular() && m.is_nonnegative(), || {
				format!("{name} at k = {k}")
			})?;
		}
	}
	Ok(format!("X = AB = UA for k <= {top}"))
}

fn plethysm_suite(level: Level) -> Result<String> {
	let (top, single) = (level.pick(4, 5), level.pick(5, 6));
	for k in 1..=top {
		let u = u_matrix(k)?;
		for (i, lam) in u.order.iter().enumerate() {
			let exp = plethysm_schur_expansion(lam);
			for (j, nu) in u.order.iter().enumerate().filter(|(_, nu)| nu.is_single_alphabet()) {
				let got = exp.get(nu.component(1)).cloned().unwrap_or_default();
				ensure(&got == u.get(i, j), || format!("{lam} at s{}", nu.component(1)))?;
			}
		}
	}
	for k in 1..=single {
		for lam in Partition::all(k) {
			let exp = plethysm_schur_expansion(&VectorPartition::single(lam.clone()));
			ensure(exp.len() == 1 && exp.get(&lam).is_some_and(|c| c.is_one()), || {
				format!("s{lam}[s1]")
			})?;
		}
	}
	Ok(format!(
		"U-block rows for k <= {top}; s_λ[s₁] = s_λ for |λ| <= {single}"
	))
}

fn e_r_suite(level: Level) -> Result<String> {
	let top = level.pick(6, 8);
	for r in 1..=top {
		ensure(e_r(r) == e_r_schur(r), || format!("E_{r}"))?;
	}
	Ok(format!("power-sum and Schur forms of E_r agree for r <= {top}"))
}

fn isometry_suite(level: Level) -> Result<String> {
	let top = level.pick(3, 5);
	for k in 0..=top {
		let ik = enumerate_ik(k);
		for a in &ik {
			for b in &ik {
				let (ia, ib) = (indicator(a), indicator(b));
				let lhs = class_scalar(k, &ia, &ib)?;
				let rhs = scalar(&frobenius_of_classfunction(&ia), &frobenius_of_classfunction(&ib));
				ensure(lhs == rhs, || format!("<{a}, {b}>"))?;
			}
		}
	}
	Ok(format!("class product = symmetric-function product for k <= {top}"))
}
