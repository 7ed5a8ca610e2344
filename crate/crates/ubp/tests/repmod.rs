mod common;

use num_bigint::BigUint;
use ubp::conjugacy::cycletype;
use ubp::diagram::{enumerate_monoid, relation_failures_with};
use ubp::matrix::IntMatrix;
use ubp::repmod::{
	act, basis, char_by_coarsenings, char_trace, character_table_coarsenings, character_table_trace, dim, matrix,
	ModuleVector, UniformTableau,
};
use ubp::{enumerate_ik, monoid_order, Diagram, VectorPartition};

fn vp(s: &str) -> VectorPartition {
	VectorPartition::parse(s).unwrap()
}

fn t(s: &str, k: usize) -> UniformTableau {
	UniformTableau::parse_with_k(s, Some(k)).unwrap()
}

fn d(s: &str, k: usize) -> Diagram {
	Diagram::parse_with_k(s, Some(k)).unwrap()
}

#[test]
fn basis_of_one_and_one_one() {
	// the fifteen tableaux in their expected basis order
	let expected = [
		"{1} ; {45}/{23}",
		"{1} ; {35}/{24}",
		"{1} ; {25}/{34}",
		"{2} ; {45}/{13}",
		"{2} ; {35}/{14}",
		"{2} ; {15}/{34}",
		"{3} ; {45}/{12}",
		"{3} ; {25}/{14}",
		"{3} ; {15}/{24}",
		"{4} ; {35}/{12}",
		"{4} ; {25}/{13}",
		"{4} ; {15}/{23}",
		"{5} ; {34}/{12}",
		"{5} ; {24}/{13}",
		"{5} ; {14}/{23}",
	];
	let got = basis(&vp("[[1],[1,1]]"));
	let want: Vec<UniformTableau> = expected.iter().map(|s| t(s, 5)).collect();
	assert_eq!(got, want);
	assert_eq!(got[0].to_string(), "{1} ; {45}/{23}");
}

#[test]
fn small_bases() {
	let got: Vec<String> = basis(&vp("[[1],[1]]")).iter().map(|x| x.to_string()).collect();
	assert_eq!(got, ["{1} ; {23}", "{2} ; {13}", "{3} ; {12}"]);
	let top = basis(&vp("[[],[],[],[],[1]]"));
	assert_eq!(top.len(), 1);
	assert_eq!(top[0].to_string(), "∅ ; ∅ ; ∅ ; ∅ ; {12345}");
	assert_eq!(basis(&vp("[[2,1]]")).len(), 2);
}

#[test]
fn dimensions() {
	assert_eq!(dim(&vp("[[1],[1]]")), BigUint::from(3u32));
	assert_eq!(dim(&vp("[[2,1]]")), BigUint::from(2u32));
	for k in 0..=5 {
		let mut sum = BigUint::from(0u32);
		for lam in enumerate_ik(k) {
			let b = basis(&lam);
			assert_eq!(BigUint::from(b.len()), dim(&lam), "{lam}");
			assert!(b.iter().all(|x| x.shape() == lam));
			sum += dim(&lam).pow(2);
		}
		assert_eq!(sum, monoid_order(k), "k = {k}");
	}
}

#[test]
fn generator_actions() {
	let s = t("{1} ; {23}", 3);
	assert_eq!(
		act(&Diagram::b(3, 2), &s).unwrap(),
		ModuleVector::from_tableau(s.clone())
	);
	assert!(act(&Diagram::b(3, 1), &s).unwrap().is_zero());
	assert_eq!(
		act(&Diagram::s(3, 1), &s).unwrap(),
		ModuleVector::from_tableau(t("{2} ; {13}", 3))
	);
	assert!(act(&Diagram::identity(4), &s).is_err());
}

#[test]
fn golden_action_in_u17() {
	let s = t("{16}/{2},{7} ; {5,11},{9,14}/{1,3},{6,13} ; {8,15,17}/{4,10,12}", 17);
	assert_eq!(s.shape(), vp("[[2,1],[2,2],[1,1]]"));
	let x = d(
		"2,8' | 8,2' | 9,16' | 10,13' | 11,7' | 12,6' | 14,10' | 15,3' | 17,1' | 1,4,5',11' | 6,7,9',14' | 3,13,4',12' | 5,16,15',17'",
		17,
	);
	let a = t("{9}/{8},{11} ; {10,12},{15,17}/{1,4},{6,7} ; {2,5,16}/{3,13,14}", 17);
	let b = t("{9}/{8},{11} ; {6,7},{15,17}/{1,4},{10,12} ; {2,5,16}/{3,13,14}", 17);
	let got = act(&x, &s).unwrap();
	let mut want = ModuleVector::zero(s.shape());
	want.add_term(a.clone(), 1);
	want.add_term(b.clone(), -1);
	assert_eq!(got, want);
	assert_eq!(got.to_string(), format!("{a} - {b}"));
	assert_eq!(UniformTableau::parse_with_k(&a.to_string(), Some(17)).unwrap(), a);
}

#[test]
fn tableau_text_round_trip() {
	for k in 0..=5 {
		for lam in enumerate_ik(k) {
			for x in basis(&lam) {
				assert_eq!(UniformTableau::parse_with_k(&x.to_string(), Some(k)).unwrap(), x);
				if k > 0 {
					assert_eq!(x.to_string().parse::<UniformTableau>().unwrap(), x);
				}
			}
		}
	}
}

#[test]
fn tableau_parse_errors() {
	assert!("{1} ; {2}".parse::<UniformTableau>().is_err());
	assert!("{1}/{2}".parse::<UniformTableau>().is_err());
	assert!("{1},{3}".parse::<UniformTableau>().is_err());
	assert!("{1},{1}".parse::<UniformTableau>().is_err());
	assert!("{1} ; {23".parse::<UniformTableau>().is_err());
	assert!("{1'}".parse::<UniformTableau>().is_err());
}

fn all_matrices(lam: &VectorPartition, monoid: &[Diagram]) -> Vec<IntMatrix> {
	monoid.iter().map(|x| matrix(x, lam).unwrap()).collect()
}

#[test]
fn matrices_form_a_representation() {
	for k in 1..=4 {
		let monoid = enumerate_monoid(k).unwrap();
		let index: std::collections::HashMap<&Diagram, usize> =
			monoid.iter().enumerate().map(|(i, x)| (x, i)).collect();
		for lam in enumerate_ik(k) {
			let mats = all_matrices(&lam, &monoid);
			for (i, x) in monoid.iter().enumerate() {
				for (j, y) in monoid.iter().enumerate() {
					let xy = index[&(x * y)];
					assert_eq!(mats[i].mul(&mats[j]), mats[xy], "{lam}: {x} * {y}");
				}
			}
		}
	}
}

#[test]
fn matrices_satisfy_the_relations() {
	for k in 2..=5 {
		for lam in enumerate_ik(k) {
			let n = basis(&lam).len();
			let fails = relation_failures_with(
				k,
				|x| matrix(x, &lam).unwrap(),
				|a, b| a.mul(b),
				&IntMatrix::identity(n),
			);
			assert!(fails.is_empty(), "{lam}: {fails:?}");
		}
	}
}

#[test]
fn b_generators_are_diagonal_projections() {
	for k in 2..=5 {
		for lam in enumerate_ik(k) {
			for i in 1..k {
				let m = matrix(&Diagram::b(k, i), &lam).unwrap();
				for r in 0..m.rows {
					for c in 0..m.cols {
						let v = m.get(r, c);
						assert!(if r == c { v == 0 || v == 1 } else { v == 0 });
					}
				}
			}
		}
	}
}

#[test]
fn zero_rule() {
	let monoid = enumerate_monoid(4).unwrap();
	for lam in enumerate_ik(4) {
		for s in basis(&lam) {
			for x in &monoid {
				let v = act(x, &s).unwrap();
				assert_eq!(v.is_zero(), !x.bot().is_finer(&s.entries()), "{x} on {s}");
			}
		}
	}
}

#[test]
fn character_examples() {
	assert_eq!(char_trace(&vp("[[],[1,1]]"), &vp("[[2,2]]")).unwrap(), -1);
	assert_eq!(char_trace(&vp("[[2,1]]"), &vp("[[3]]")).unwrap(), -1);
	assert!(char_trace(&vp("[[2,1]]"), &vp("[[2]]")).is_err());
}

#[test]
fn trace_tables_match_known_values() {
	assert_eq!(character_table_trace(2).unwrap().to_i64(), common::x2());
	assert_eq!(character_table_trace(3).unwrap().to_i64(), common::x3());
	assert_eq!(character_table_trace(4).unwrap().to_i64(), common::x4());
}

#[test]
fn trace_agrees_with_coarsening_sum() {
	for k in 0..=5 {
		let a = character_table_trace(k).unwrap();
		let b = character_table_coarsenings(k).unwrap();
		assert_eq!(a, b, "k = {k}");
		let last = a.size() - 1;
		for (i, lam) in a.order.iter().enumerate() {
			assert_eq!(BigUint::try_from(a.get(i, last).clone()).unwrap(), dim(lam));
		}
	}
	assert_eq!(char_by_coarsenings(&vp("[[],[1,1]]"), &vp("[[2,2]]")).unwrap(), -1);
}

#[test]
fn characters_are_class_functions() {
	let monoid = enumerate_monoid(4).unwrap();
	for lam in enumerate_ik(4) {
		for x in &monoid {
			let tr = matrix(x, &lam).unwrap().trace();
			assert_eq!(tr, char_trace(&lam, &cycletype(x)).unwrap(), "{lam} at {x}");
		}
	}
}
