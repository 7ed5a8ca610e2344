//! The action of 𝒰ₖ on uniform tableaux, including a large worked example
//! in 𝒰₁₇ whose result needs straightening.
//!
//! cargo run --example tableau_action

use ubp::repmod::{act, basis, dim, matrix, UniformTableau};
use ubp::{Diagram, VectorPartition};

fn main() -> ubp::Result<()> {
	let shape = VectorPartition::parse("[[1],[1,1]]")?;
	let b = basis(&shape);
	println!("W^{shape} has dimension {} ({} by formula):", b.len(), dim(&shape));
	for t in &b {
		println!("  {t}");
	}

	let s = UniformTableau::parse_with_k(
		"{16}/{2},{7} ; {5,11},{9,14}/{1,3},{6,13} ; {8,15,17}/{4,10,12}",
		Some(17),
	)?;
	let d = Diagram::parse_with_k(
		"2,8' | 8,2' | 9,16' | 10,13' | 11,7' | 12,6' | 14,10' | 15,3' | 17,1' | 1,4,5',11' | 6,7,9',14' | 3,13,4',12' | 5,16,15',17'",
		Some(17),
	)?;
	println!("\nS   = {s}\nd   = {d}\nd·S = {}", act(&d, &s)?);

	let shape = VectorPartition::parse("[[1],[1]]")?;
	for g in ["1,2' | 2,1' | 3,3'", "1,1' | 2,3,2',3'"] {
		let g = Diagram::parse_with_k(g, Some(3))?;
		println!("\n{g} on W^{shape}:");
		for row in matrix(&g, &shape)?.to_rows() {
			println!("  {row:?}");
		}
	}
	Ok(())
}
