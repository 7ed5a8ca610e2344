//! Standard tableaux, Garnir straightening and Specht module matrices.
//!
//! cargo run --example specht_straightening

use ubp::specht::{character_sn, generator_matrix, standard_tableaux, straighten, Tableau};
use ubp::Partition;

fn main() -> ubp::Result<()> {
	let shape = Partition::new(vec![2, 2])?;
	for t in standard_tableaux(&shape, &[1, 2, 3, 4])? {
		println!("standard: {:?}", t.rows());
	}

	let t = Tableau::new(vec![vec![4, 3], vec![1, 2]])?;
	println!("\nstraightening {:?}:", t.rows());
	for (s, c) in straighten(&t)? {
		println!("  {c:+} · {:?}", s.rows());
	}

	let lam = Partition::new(vec![3, 1])?;
	for i in 1..4 {
		let m = generator_matrix(&lam, i)?.matrix;
		println!("\ns{i} on S^{lam}:");
		for row in m.to_rows() {
			println!("  {row:?}");
		}
	}

	println!(
		"\ncharacter table of S_4 (columns {:?}):",
		Partition::all(4).iter().map(|p| p.to_string()).collect::<Vec<_>>()
	);
	for l in Partition::all(4) {
		let row: Vec<i64> = Partition::all(4)
			.iter()
			.map(|mu| character_sn(&l, mu))
			.collect::<ubp::Result<_>>()?;
		println!("  {:>9} {row:?}", l.to_string());
	}
	Ok(())
}
