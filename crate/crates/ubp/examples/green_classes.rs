//! L- and J-classes, maximal subgroups and the orbit representatives that
//! turn left multiplication into a group action.
//!
//! cargo run --example green_classes

use ubp::green::{act_on_rep, canonical_pi, jclass, lclass, maximal_subgroup, OrbitRepresentative};
use ubp::{Diagram, Partition, SetPartition};

fn main() -> ubp::Result<()> {
	for lambda in Partition::all(4) {
		let pi = canonical_pi(&lambda);
		let g = maximal_subgroup(&pi);
		println!(
			"type {lambda}: π = {pi}, |J| = {}, |L_π| = {}, |G_π| = {}",
			jclass(&lambda).len(),
			lclass(&pi).len(),
			g.order()
		);
	}

	let pi: SetPartition = "12|34".parse()?;
	let gamma: SetPartition = "13|24".parse()?;
	let rep = OrbitRepresentative::new(&pi, &gamma)?;
	println!("\nℓ from {gamma} to {pi}: {}", rep.diagram);
	let m: Diagram = "1,2' | 2,3' | 3,4' | 4,1'".parse()?;
	match act_on_rep(&m, &rep)? {
		Some((gamma2, g)) => println!(
			"m·ℓ = ℓ'·g with top(ℓ') = {gamma2}, g = {} of cycle type {}",
			g.diagram,
			g.cycle_type()
		),
		None => println!("m·ℓ leaves the L-class"),
	}
	Ok(())
}
