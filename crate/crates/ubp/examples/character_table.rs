//! The character table of 𝒰ₖ three ways: traces on uniform tableaux, sums
//! of subgroup characters over coarsenings, and symmetric functions.
//!
//! cargo run --release --example character_table -- 4

use std::time::Instant;

use ubp::repmod::{character_table_coarsenings, character_table_trace};
use ubp::symfunc::x_matrix;

fn main() -> ubp::Result<()> {
	let k: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
	let start = Instant::now();
	let trace = character_table_trace(k)?;
	let t1 = start.elapsed();
	let coarse = character_table_coarsenings(k)?;
	let t2 = start.elapsed() - t1;
	let frob = x_matrix(k)?;
	let t3 = start.elapsed() - t1 - t2;
	println!("{trace}");
	println!("traces {t1:.2?}, coarsenings {t2:.2?}, symmetric functions {t3:.2?}");
	println!("all three agree: {}", trace == coarse && coarse == frob);
	Ok(())
}
