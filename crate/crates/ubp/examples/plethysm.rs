//! Plethysm coefficients s_{λ⁽¹⁾}[s₁]·s_{λ⁽²⁾}[s₂]⋯ read off the Frobenius
//! characteristic.
//!
//! cargo run --example plethysm -- 4

use ubp::enumerate_ik;
use ubp::symfunc::plethysm_schur_expansion;

fn main() {
	let k: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
	for lam in enumerate_ik(k) {
		let terms: Vec<String> = plethysm_schur_expansion(&lam)
			.into_iter()
			.map(|(nu, c)| {
				if c == 1.into() {
					format!("s{nu}")
				} else {
					format!("{c}·s{nu}")
				}
			})
			.collect();
		println!("{:>14} ↦ {}", lam.to_string(), terms.join(" + "));
	}
}
