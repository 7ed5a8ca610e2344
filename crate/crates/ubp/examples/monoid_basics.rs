//! Parsing, multiplying and factorizing uniform block permutations.
//!
//! cargo run --example monoid_basics

use ubp::diagram::{check_relations, enumerate_monoid, generators};
use ubp::{monoid_order, Diagram};

fn main() -> ubp::Result<()> {
	let d: Diagram = "1,4,2',3' | 2,1' | 3,4'".parse()?;
	let e: Diagram = "1,2' | 2,1' | 3,4,3',4'".parse()?;
	println!("d = {d}\ne = {e}");
	println!("d·e = {}", d.multiply(&e)?);
	println!("e·d = {}", e.multiply(&d)?);
	println!(
		"d* = {}  (d·d*·d = d: {})",
		d.involution(),
		&(&d * &d.involution()) * &d == d
	);

	let f = d.factorize();
	println!("d = e_top·σ with e_top = {} and σ = {}", f.e_top, f.sigma);
	println!("d = σ·e_bot with e_bot = {}", f.e_bot);

	let (s, b) = generators(4);
	println!(
		"generators of U_4: {} transpositions, {} merges; s1 = {}, b1 = {}",
		s.len(),
		b.len(),
		s[0],
		b[0]
	);
	for k in 0..=5 {
		let n = enumerate_monoid(k)?.len();
		println!(
			"|U_{k}| = {n} (formula {}), relations hold: {}",
			monoid_order(k),
			check_relations(k)
		);
	}
	for k in 6..=10 {
		println!("|U_{k}| = {}", monoid_order(k));
	}
	Ok(())
}
