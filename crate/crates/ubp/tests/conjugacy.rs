use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use ubp::conjugacy::{
	b_brute, b_brute_column, b_coeff, b_matrix, class_rep, class_sizes, closed_coarsenings, cycletype, merge_set,
	omega, MergeTarget,
};
use ubp::diagram::enumerate_monoid;
use ubp::{enumerate_ik, monoid_order, Diagram, Partition, SetPartition, VectorPartition};

fn d(s: &str) -> Diagram {
	s.parse().unwrap()
}

fn vp(parts: &[&[usize]]) -> VectorPartition {
	VectorPartition::from_parts(parts.iter().map(|x| x.to_vec()).collect()).unwrap()
}

fn p(parts: &[usize]) -> Partition {
	Partition::new(parts.to_vec()).unwrap()
}

#[test]
fn omega_golden() {
	let x = Diagram::parse_with_k(
		"1,7' | 2,8' | 6,6' | 9,3' | 3,4,4',5' | 5,10,9',10' | 7,8,1',2'",
		Some(10),
	)
	.unwrap();
	let e_pi = Diagram::idempotent_of(&SetPartition::parse_with_k("6|1,2|7,8|3,4,5,9,10", Some(10)).unwrap());
	// x⁴ = e_π as drawn, but x² is already that idempotent
	assert_eq!(x.pow(4), e_pi);
	assert!(!x.is_idempotent());
	assert_eq!(omega(&x), (e_pi, 2));
	assert_eq!(cycletype(&x), vp(&[&[1], &[2], &[], &[], &[1]]));
}

#[test]
fn omega_small() {
	let e = Diagram::idempotent_of(&"12|3".parse().unwrap());
	assert_eq!(omega(&e), (e.clone(), 1));
	let c = Diagram::from_permutation(&[2, 3, 1]).unwrap();
	assert_eq!(omega(&c), (Diagram::identity(3), 3));
}

#[test]
fn cycletype_of_idempotents() {
	assert_eq!(cycletype(&Diagram::identity(4)), vp(&[&[1, 1, 1, 1]]));
	let e = Diagram::idempotent_of(&"1|2|34|567".parse().unwrap());
	assert_eq!(cycletype(&e), vp(&[&[1, 1], &[1], &[1]]));
}

#[test]
fn class_rep_examples() {
	assert_eq!(class_rep(&vp(&[&[1, 1, 1]])), Diagram::identity(3));
	assert_eq!(class_rep(&vp(&[&[2, 1]])), d("1,2' | 2,1' | 3,3'"));
	let golden = Diagram::parse_with_k(
		"1,2' | 2,3' | 3,4' | 4,1' | 5,6' | 6,5' | 7,8,9',10' | 9,10,7',8'",
		Some(10),
	)
	.unwrap();
	assert_eq!(class_rep(&vp(&[&[4, 2], &[2]])), golden);
}

#[test]
fn class_rep_has_its_cycle_type() {
	for k in 0..=7 {
		for mu in enumerate_ik(k) {
			assert_eq!(cycletype(&class_rep(&mu)), mu);
		}
	}
}

#[test]
fn merge_set_examples() {
	let c = merge_set(&class_rep(&vp(&[&[2, 2]])), &MergeTarget::Type(p(&[2, 2]))).unwrap();
	assert_eq!(c.len(), 3);
	let mu = vp(&[&[4, 2], &[2]]);
	let two = merge_set(&class_rep(&mu), &MergeTarget::Cycles(vp(&[&[], &[2, 1], &[], &[1]]))).unwrap();
	assert_eq!(two.len(), 2);
	let id = Diagram::identity(4);
	assert_eq!(
		merge_set(&id, &MergeTarget::Cycles(vp(&[&[1, 1, 1, 1]]))).unwrap(),
		vec![id]
	);
}

#[test]
fn b_coeff_known_values() {
	let mu = vp(&[&[4, 2], &[2]]);
	assert_eq!(
		b_coeff(&mu, &vp(&[&[], &[2, 1], &[], &[1]])).unwrap(),
		BigUint::from(2u32)
	);
	assert_eq!(b_coeff(&mu, &vp(&[&[], &[2], &[2]])).unwrap(), BigUint::from(4u32));
	assert_eq!(b_coeff(&mu, &vp(&[&[], &[2, 2, 1]])).unwrap(), BigUint::from(1u32));
	for nu in [
		vp(&[&[], &[2, 1], &[], &[1]]),
		vp(&[&[], &[2], &[2]]),
		vp(&[&[], &[2, 2, 1]]),
	] {
		assert_eq!(BigUint::from(b_brute(&mu, &nu).unwrap()), b_coeff(&mu, &nu).unwrap());
	}
}

#[test]
fn b_formula_matches_brute_force() {
	for k in 0..=5 {
		for mu in enumerate_ik(k) {
			let col = b_brute_column(&mu).unwrap();
			for nu in enumerate_ik(k) {
				let brute = col.get(&nu).copied().unwrap_or(0);
				assert_eq!(b_coeff(&mu, &nu).unwrap(), BigUint::from(brute), "{mu} {nu}");
			}
		}
	}
}

#[test]
fn b_matrices_match_known_values() {
	assert_eq!(
		b_matrix(2).unwrap().to_i64(),
		vec![vec![1, 1, 1], vec![0, 1, 0], vec![0, 0, 1]]
	);
	assert_eq!(
		b_matrix(3).unwrap().to_i64(),
		vec![
			vec![1, 1, 1, 1, 1],
			vec![0, 1, 0, 1, 3],
			vec![0, 0, 1, 0, 0],
			vec![0, 0, 0, 1, 0],
			vec![0, 0, 0, 0, 1],
		]
	);
	let mut b4 = vec![
		vec![1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
		vec![0, 1, 0, 0, 0, 2, 0, 1, 0, 2, 4],
		vec![0, 0, 1, 0, 0, 0, 1, 0, 2, 0, 0],
		vec![0, 0, 0, 1, 1, 1, 0, 0, 1, 1, 3],
		vec![0, 0, 0, 0, 1, 0, 0, 0, 2, 1, 0],
		vec![0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 6],
	];
	for i in 6..11 {
		let mut row = vec![0; 11];
		row[i] = 1;
		b4.push(row);
	}
	assert_eq!(b_matrix(4).unwrap().to_i64(), b4);
	for k in 0..=5 {
		let b = b_matrix(k).unwrap();
		assert!(b.is_upper_unitriangular() && b.is_nonnegative(), "k={k}");
	}
}

#[test]
fn one_cycle_merges_once_per_divisor() {
	for r in 1..=8 {
		let mu = VectorPartition::single(p(&[r]));
		let types: Vec<VectorPartition> = closed_coarsenings(&class_rep(&mu))
			.unwrap()
			.into_iter()
			.map(|x| x.1)
			.collect();
		let expected: HashSet<VectorPartition> = (1..=r)
			.filter(|s| r % s == 0)
			.map(|s| VectorPartition::in_slot(r / s, p(&[s])))
			.collect();
		assert_eq!(types.len(), expected.len(), "r={r}");
		assert_eq!(types.into_iter().collect::<HashSet<_>>(), expected);
	}
	let six = closed_coarsenings(&class_rep(&VectorPartition::single(p(&[6])))).unwrap();
	assert_eq!(six.len() - 1, 3);
}

#[test]
fn many_cycles_merge_into_one() {
	for r in 1..=4 {
		for t in 1..=3 {
			let mu = VectorPartition::single(p(&vec![r; t]));
			let nu = VectorPartition::in_slot(t, p(&[r]));
			let n = merge_set(&class_rep(&mu), &MergeTarget::Cycles(nu)).unwrap().len();
			assert_eq!(n, r.pow(t as u32 - 1), "r={r} t={t}");
		}
	}
}

#[test]
fn conjugacy_classes_partition_the_monoid() {
	for k in 0..=5 {
		let all = enumerate_monoid(k).unwrap();
		let sizes = class_sizes(&all);
		let ik: HashSet<VectorPartition> = enumerate_ik(k).into_iter().collect();
		assert_eq!(sizes.len(), ik.len());
		assert!(sizes.keys().all(|c| ik.contains(c)));
		assert_eq!(BigUint::from(sizes.values().sum::<usize>()), monoid_order(k));
	}
}

#[test]
fn conjugacy_matches_the_inverse_monoid_definition() {
	for k in 0..=4 {
		let all = enumerate_monoid(k).unwrap();
		let data: Vec<(Diagram, Diagram)> = all
			.iter()
			.map(|c| {
				let (e, _) = omega(c);
				let x = &e * c;
				(e, x)
			})
			.collect();
		for (i, (ce, cx)) in data.iter().enumerate() {
			let mut reach = HashSet::new();
			for x in &all {
				let xt = x.involution();
				if &(&xt * x) == ce {
					reach.insert((x * &xt, &(x * cx) * &xt));
				}
			}
			let ct = cycletype(&all[i]);
			for (j, pair) in data.iter().enumerate() {
				assert_eq!(reach.contains(pair), cycletype(&all[j]) == ct);
			}
		}
	}
}

#[test]
fn class_sizes_are_consistent_with_subgroups() {
	// |C_μ⃗ ∩ G_λ| = |G_λ| / 𝐳_μ⃗ for the canonical subgroup
	for k in 1..=5 {
		let mut counts: HashMap<VectorPartition, usize> = HashMap::new();
		for l in Partition::all(k) {
			for g in ubp::green::maximal_subgroup(&ubp::green::canonical_pi(&l)).elements {
				*counts.entry(g.cycle_type()).or_insert(0) += 1;
			}
		}
		for mu in enumerate_ik(k) {
			let order: BigUint = mu
				.type_up()
				.multiplicities()
				.iter()
				.map(|&a| ubp::combinatorics::factorial(a))
				.product();
			assert_eq!(BigUint::from(counts[&mu]) * mu.z(), order);
		}
	}
}
