//! Integer matrices: small dense ones for module actions and the
//! `I_k`-indexed tables.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::json;

use crate::combinatorics::VectorPartition;

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
	pub rows: usize,
	pub cols: usize,
	pub data: Vec<i64>,
}

impl IntMatrix {
	pub fn zeros(rows: usize, cols: usize) -> Self {
		IntMatrix {
			rows,
			cols,
			data: vec![0; rows * cols],
		}
	}

	pub fn identity(n: usize) -> Self {
		let mut m = Self::zeros(n, n);
		for i in 0..n {
			m.data[i * n + i] = 1;
		}
		m
	}

	pub fn get(&self, r: usize, c: usize) -> i64 {
		self.data[r * self.cols + c]
	}

	pub fn set(&mut self, r: usize, c: usize, v: i64) {
		self.data[r * self.cols + c] = v;
	}

	pub fn trace(&self) -> i64 {
		(0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
	}

	pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
		assert_eq!(self.cols, other.rows, "matrix shapes");
		let mut out = Self::zeros(self.rows, other.cols);
		for i in 0..self.rows {
			for l in 0..self.cols {
				let a = self.get(i, l);
				if a == 0 {
					continue;
				}
				for j in 0..other.cols {
					out.data[i * other.cols + j] += a * other.get(l, j);
				}
			}
		}
		out
	}

	pub fn to_rows(&self) -> Vec<Vec<i64>> {
		self.data
			.chunks(self.cols.max(1))
			.map(|r| r.to_vec())
			.take(self.rows)
			.collect()
	}
}

/// A square integer matrix indexed on both sides by `I_k` in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharMatrix {
	pub k: usize,
	pub order: Vec<VectorPartition>,
	pub entries: Vec<Vec<BigInt>>,
}

impl CharMatrix {
	pub fn from_fn(k: usize, mut f: impl FnMut(&VectorPartition, &VectorPartition) -> BigInt) -> Self {
		let order = crate::combinatorics::enumerate_ik(k);
		let entries = order.iter().map(|r| order.iter().map(|c| f(r, c)).collect()).collect();
		CharMatrix { k, order, entries }
	}

	pub fn size(&self) -> usize {
		self.order.len()
	}

	pub fn get(&self, r: usize, c: usize) -> &BigInt {
		&self.entries[r][c]
	}

	pub fn index_of(&self, v: &VectorPartition) -> Option<usize> {
		self.order.iter().position(|x| x == v)
	}

	pub fn mul(&self, other: &CharMatrix) -> CharMatrix {
		assert_eq!(self.order, other.order, "index sets differ");
		let n = self.size();
		let entries = (0..n)
			.map(|i| {
				(0..n)
					.map(|j| (0..n).map(|l| &self.entries[i][l] * &other.entries[l][j]).sum())
					.collect()
			})
			.collect();
		CharMatrix {
			k: self.k,
			order: self.order.clone(),
			entries,
		}
	}

	/// Small integer view; panics on overflow, which no table here approaches.
	pub fn to_i64(&self) -> Vec<Vec<i64>> {
		self.entries
			.iter()
			.map(|r| r.iter().map(|x| i64::try_from(x).expect("entry fits in i64")).collect())
			.collect()
	}

	pub fn is_upper_unitriangular(&self) -> bool {
		let n = self.size();
		(0..n).all(|i| self.entries[i][i].is_one() && (0..i).all(|j| self.entries[i][j].is_zero()))
	}

	pub fn is_nonnegative(&self) -> bool {
		self.entries.iter().flatten().all(|x| x >= &BigInt::zero())
	}

	pub fn to_json(&self) -> serde_json::Value {
		json!({
			"k": self.k,
			"order": self.order.iter().map(|v| v.to_json()).collect::<Vec<_>>(),
			"entries": self.to_i64(),
		})
	}
}

impl fmt::Display for CharMatrix {
	/// Aligned text table with a rule between blocks of equal `type↑`.
	fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
		let labels: Vec<String> = self.order.iter().map(|v| v.to_string()).collect();
		let lw = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
		let cells: Vec<Vec<String>> = self
			.entries
			.iter()
			.map(|r| r.iter().map(|x| x.to_string()).collect())
			.collect();
		let cw = cells.iter().flatten().map(|c| c.len()).max().unwrap_or(1).max(2);
		let types: Vec<_> = self.order.iter().map(|v| v.type_up()).collect();
		for (i, row) in cells.iter().enumerate() {
			if i > 0 && types[i] != types[i - 1] {
				writeln!(f, "{}", "-".repeat(lw + 3 + (cw + 1) * row.len()))?;
			}
			write!(f, "{:>lw$} |", labels[i])?;
			for (j, c) in row.iter().enumerate() {
				let sep = if j > 0 && types[j] != types[j - 1] { "|" } else { " " };
				write!(f, "{sep}{c:>cw$}")?;
			}
			writeln!(f)?;
		}
		Ok(())
	}
}
