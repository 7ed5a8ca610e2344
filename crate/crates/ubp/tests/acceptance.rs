//! The nine acceptance criteria, one PASS/FAIL line each.
//! Runs without the libtest harness so the lines are always printed.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use ubp::conjugacy::{b_brute_column, b_coeff, b_matrix};
use ubp::diagram::{enumerate_monoid, relation_failures};
use ubp::repmod::{act, basis, character_table_trace, dim, ModuleVector, UniformTableau};
use ubp::symfunc::{a_matrix, plethysm_schur_expansion, u_matrix, x_matrix};
use ubp::verify::{self, Level};
use ubp::{enumerate_ik, monoid_order, Diagram, Partition, VectorPartition};

type Check = std::result::Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
	if ok {
		Ok(())
	} else {
		Err(msg())
	}
}

fn e<T: std::fmt::Display>(x: T) -> String {
	x.to_string()
}

fn vp(s: &str) -> VectorPartition {
	VectorPartition::parse(s).unwrap()
}

fn monoid_counts() -> Check {
	let want = [1u32, 1, 3, 16, 131, 1496];
	for (k, &n) in want.iter().enumerate() {
		let got = enumerate_monoid(k).map_err(e)?.len();
		ensure(got == n as usize, || {
			format!("|U_{k}| = {got} by enumeration, expected {n}")
		})?;
	}
	let six = monoid_order(6);
	ensure(six == BigUint::from(22482u32), || format!("|U_6| = {six}"))?;
	Ok("1 1 3 16 131 1496 enumerated, 22482 by formula".into())
}

fn presentation() -> Check {
	for k in 0..=6 {
		let fails = relation_failures(k);
		ensure(fails.is_empty(), || format!("k = {k}: {}", fails.join("; ")))?;
	}
	Ok("relations hold for k <= 6".into())
}

fn character_tables() -> Check {
	let golden = [(2, common::x2()), (3, common::x3()), (4, common::x4())];
	for (k, x) in golden {
		let t = character_table_trace(k).map_err(e)?;
		let f = x_matrix(k).map_err(e)?;
		ensure(t == f, || format!("trace and frobenius tables differ at k = {k}"))?;
		ensure(t.to_i64() == x, || format!("X_{k} differs from the printed table"))?;
	}
	Ok("X_2, X_3, X_4 reproduced by both methods".into())
}

fn factorizations() -> Check {
	for k in 0..=5 {
		let (x, a, b, u) = (
			x_matrix(k).map_err(e)?,
			a_matrix(k).map_err(e)?,
			b_matrix(k).map_err(e)?,
			u_matrix(k).map_err(e)?,
		);
		ensure(a.mul(&b) == x && u.mul(&a) == x, || {
			format!("factorization fails at k = {k}")
		})?;
		for m in [&b, &u] {
			ensure(m.is_upper_unitriangular() && m.is_nonnegative(), || {
				format!("triangularity at k = {k}")
			})?;
		}
	}
	let golden = [
		(2, common::b2(), common::u2()),
		(3, common::b3(), common::u3()),
		(4, common::b4(), common::u4()),
	];
	for (k, b, u) in golden {
		ensure(b_matrix(k).map_err(e)?.to_i64() == b, || format!("B_{k} differs"))?;
		ensure(u_matrix(k).map_err(e)?.to_i64() == u, || format!("U_{k} differs"))?;
	}
	Ok("X = AB = UA for k <= 5; B_2..B_4, U_2..U_4 match".into())
}

fn b_coefficients() -> Check {
	let mut pairs = 0;
	for k in 0..=6 {
		let ik = enumerate_ik(k);
		for mu in &ik {
			let col = b_brute_column(mu).map_err(e)?;
			for nu in &ik {
				let brute = BigUint::from(col.get(nu).copied().unwrap_or(0));
				ensure(b_coeff(mu, nu).map_err(e)? == brute, || format!("b[{mu}, {nu}]"))?;
				pairs += 1;
			}
		}
	}
	let mu = vp("[[4,2],[2]]");
	for (nu, want) in [("[[],[2,1],[],[1]]", 2u32), ("[[],[2],[2]]", 4), ("[[],[2,2,1]]", 1)] {
		let got = b_coeff(&mu, &vp(nu)).map_err(e)?;
		ensure(got == BigUint::from(want), || {
			format!("b[{mu}, {nu}] = {got}, expected {want}")
		})?;
	}
	Ok(format!("{pairs} pairs agree; 2, 4, 1 reproduced"))
}

fn dimensions() -> Check {
	for (k, want) in [(4, 131u32), (5, 1496)] {
		let mut sum = BigUint::from(0u32);
		for lam in enumerate_ik(k) {
			let n = basis(&lam).len();
			ensure(BigUint::from(n) == dim(&lam), || format!("|basis {lam}| = {n}"))?;
			sum += BigUint::from(n).pow(2);
		}
		ensure(sum == BigUint::from(want), || {
			format!("sum of squares {sum} at k = {k}")
		})?;
	}
	for k in 0..=3 {
		for lam in enumerate_ik(k) {
			ensure(BigUint::from(basis(&lam).len()) == dim(&lam), || format!("dim {lam}"))?;
		}
	}
	Ok("dim formula = basis size; 131 and 1496".into())
}

fn golden_action() -> Check {
	let t = |s: &str| UniformTableau::parse_with_k(s, Some(17)).map_err(e);
	let s = t("{16}/{2},{7} ; {5,11},{9,14}/{1,3},{6,13} ; {8,15,17}/{4,10,12}")?;
	let d = Diagram::parse_with_k(
		"2,8' | 8,2' | 9,16' | 10,13' | 11,7' | 12,6' | 14,10' | 15,3' | 17,1' | 1,4,5',11' | 6,7,9',14' | 3,13,4',12' | 5,16,15',17'",
		Some(17),
	)
	.map_err(e)?;
	let mut want = ModuleVector::zero(s.shape());
	want.add_term(t("{9}/{8},{11} ; {10,12},{15,17}/{1,4},{6,7} ; {2,5,16}/{3,13,14}")?, 1);
	want.add_term(
		t("{9}/{8},{11} ; {6,7},{15,17}/{1,4},{10,12} ; {2,5,16}/{3,13,14}")?,
		-1,
	);
	let got = act(&d, &s).map_err(e)?;
	ensure(got == want, || format!("got {got}"))?;
	Ok("two-term signed result reproduced".into())
}

fn plethysm() -> Check {
	let one = || BigInt::from(1);
	let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
	ensure(
		plethysm_schur_expansion(&vp("[[],[1,1]]")) == BTreeMap::from([(p(&[3, 1]), one())]),
		|| "s11[s2]".into(),
	)?;
	ensure(
		plethysm_schur_expansion(&vp("[[],[2]]")) == BTreeMap::from([(p(&[4]), one()), (p(&[2, 2]), one())]),
		|| "s2[s2]".into(),
	)?;
	for k in 1..=5 {
		let u = u_matrix(k).map_err(e)?;
		for (i, lam) in u.order.iter().enumerate() {
			let exp = plethysm_schur_expansion(lam);
			for (j, nu) in u.order.iter().enumerate().filter(|(_, nu)| nu.is_single_alphabet()) {
				let got = exp.get(nu.component(1)).cloned().unwrap_or_default();
				ensure(&got == u.get(i, j), || format!("{lam} at s{}", nu.component(1)))?;
			}
		}
	}
	for k in 1..=6 {
		for lam in Partition::all(k) {
			let exp = plethysm_schur_expansion(&VectorPartition::single(lam.clone()));
			ensure(exp == BTreeMap::from([(lam.clone(), one())]), || format!("s{lam}[s1]"))?;
		}
	}
	Ok("s11[s2] = s31, s2[s2] = s4 + s22, U rows for k <= 5".into())
}

fn property_suites() -> Check {
	let start = Instant::now();
	let reports = verify::run(Level::Full);
	let failed: Vec<String> = reports
		.iter()
		.filter(|r| !r.passed)
		.map(|r| format!("{}: {}", r.name, r.detail))
		.collect();
	ensure(failed.is_empty(), || failed.join("; "))?;
	Ok(format!(
		"{} suites at full scale in {:.1?}",
		reports.len(),
		start.elapsed()
	))
}

type Criterion = (&'static str, fn() -> Check, Duration);

fn main() {
	let criteria: [Criterion; 9] = [
		("monoid counts", monoid_counts, Duration::from_secs(60)),
		("presentation", presentation, Duration::from_secs(5)),
		("character tables", character_tables, Duration::from_secs(120)),
		("factorizations", factorizations, Duration::from_secs(120)),
		("b-coefficients", b_coefficients, Duration::from_secs(120)),
		("dimensions and semisimplicity", dimensions, Duration::from_secs(60)),
		("golden action in U_17", golden_action, Duration::from_secs(5)),
		("plethysm", plethysm, Duration::from_secs(60)),
		("property suites", property_suites, Duration::from_secs(600)),
	];
	let mut all_ok = true;
	for (i, (name, run, budget)) in criteria.iter().enumerate() {
		let start = Instant::now();
		let result = run();
		let elapsed = start.elapsed();
		let (ok, detail) = match result {
			Ok(d) if elapsed <= *budget => (true, d),
			Ok(d) => (false, format!("{d}, but took {elapsed:.1?} (budget {budget:?})")),
			Err(d) => (false, d),
		};
		all_ok &= ok;
		println!(
			"{} {}. {name} [{elapsed:.2?}] {detail}",
			if ok { "PASS" } else { "FAIL" },
			i + 1
		);
	}
	if !all_ok {
		std::process::exit(1);
	}
}
