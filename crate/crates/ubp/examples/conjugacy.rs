//! Cycle types, class representatives, merge sets and the matrix B.
//!
//! cargo run --example conjugacy -- 4

use ubp::conjugacy::{b_coeff, b_matrix, class_rep, cycletype, merge_set, omega, MergeTarget};
use ubp::{Diagram, VectorPartition};

fn main() -> ubp::Result<()> {
	let k: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);

	let d = Diagram::parse_with_k(
		"1,7' | 2,8' | 6,6' | 9,3' | 3,4,4',5' | 5,10,9',10' | 7,8,1',2'",
		Some(10),
	)?;
	let (x, m) = omega(&d);
	println!("d = {d}\nω(d) = {x} (power {m}), cycle type {}", cycletype(&d));

	let mu = VectorPartition::parse("[[4,2],[2]]")?;
	let rep = class_rep(&mu);
	println!("\nd_μ for μ = {mu}: {rep}");
	for nu in ["[[],[2,1],[],[1]]", "[[],[2],[2]]", "[[],[2,2,1]]"] {
		let nu = VectorPartition::parse(nu)?;
		let merges = merge_set(&rep, &MergeTarget::Cycles(nu.clone()))?;
		println!("b[{mu}, {nu}] = {} ({} merges found)", b_coeff(&mu, &nu)?, merges.len());
	}

	println!("\nB_{k} =\n{}", b_matrix(k)?);
	Ok(())
}
