//! Frobenius characteristics, E_r, and the factorizations X = AB = UA.
//!
//! cargo run --example frobenius -- 3

use ubp::conjugacy::b_matrix;
use ubp::symfunc::{a_matrix, e_r, e_r_schur, frob_char, p_to_s, u_matrix, x_matrix};
use ubp::{enumerate_ik, VectorPartition};

fn main() -> ubp::Result<()> {
	let k: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
	for r in 1..=3 {
		println!("E_{r} = {}  (Schur form agrees: {})", e_r(r), e_r(r) == e_r_schur(r));
	}
	println!();
	for lam in enumerate_ik(k) {
		let f = frob_char(&lam);
		let s: Vec<String> = p_to_s(&f).iter().map(|(nu, c)| format!("{c}·s{nu}")).collect();
		println!("φ(χ^{lam}) = {}", s.join(" + "));
	}
	let (x, a, b, u) = (x_matrix(k)?, a_matrix(k)?, b_matrix(k)?, u_matrix(k)?);
	println!("\nX_{k} =\n{x}\nU_{k} =\n{u}");
	println!("X = AB: {}, X = UA: {}", a.mul(&b) == x, u.mul(&a) == x);
	let top = VectorPartition::in_slot(k, ubp::Partition::new(vec![1])?);
	println!("trivial character {top} ↦ E_{k}: {}", frob_char(&top) == e_r(k));
	Ok(())
}
