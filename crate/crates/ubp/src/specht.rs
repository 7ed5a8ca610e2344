//! Specht modules of the symmetric group: standard tableaux, straightening,
//! action matrices and irreducible characters.
//!
//! Row 0 of a tableau is its longest row.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use crate::combinatorics::{permutations, Partition};
use crate::error::{arg, Result};
use crate::matrix::IntMatrix;

/// A filling of a partition shape; `rows[0]` is the longest row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau<L> {
	rows: Vec<Vec<L>>,
}

impl<L: Ord + Clone> Tableau<L> {
	pub fn new(rows: Vec<Vec<L>>) -> Result<Self> {
		if rows.iter().any(|r| r.is_empty()) {
			return arg("tableau has an empty row");
		}
		if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
			return arg("tableau rows must weakly decrease in length");
		}
		Ok(Tableau { rows })
	}

	pub fn rows(&self) -> &[Vec<L>] {
		&self.rows
	}

	pub fn shape(&self) -> Partition {
		Partition::from_parts(self.rows.iter().map(|r| r.len()).collect())
	}

	pub fn entries(&self) -> impl Iterator<Item = &L> {
		self.rows.iter().flatten()
	}

	/// Rows and columns strictly increasing.
	pub fn is_standard(&self) -> bool {
		let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
		let cols_ok = self
			.rows
			.windows(2)
			.all(|w| w[1].iter().zip(&w[0]).all(|(up, down)| down < up));
		rows_ok && cols_ok
	}

	pub fn map<M: Ord + Clone>(&self, mut f: impl FnMut(&L) -> M) -> Tableau<M> {
		Tableau {
			rows: self.rows.iter().map(|r| r.iter().map(&mut f).collect()).collect(),
		}
	}
}

/// A standard tableau; the type is the same, standardness is the contract.
pub type StandardTableau<L> = Tableau<L>;

/// Row index of each rank, stored from the largest rank down so that the
/// derived lexicographic order is the last letter order on tabloids.
type Tabloid = Vec<u8>;

struct ShapeData {
	shape: Partition,
	tableaux: Vec<Vec<Vec<usize>>>,
	index: HashMap<Vec<Vec<usize>>, usize>,
	polytabloids: OnceLock<Vec<Vec<(Tabloid, i64)>>>,
	generators: RwLock<HashMap<usize, Arc<IntMatrix>>>,
}

fn shape_cache() -> &'static RwLock<HashMap<Partition, Arc<ShapeData>>> {
	static CACHE: OnceLock<RwLock<HashMap<Partition, Arc<ShapeData>>>> = OnceLock::new();
	CACHE.get_or_init(Default::default)
}

fn shape_data(shape: &Partition) -> Arc<ShapeData> {
	if let Some(d) = shape_cache().read().expect("cache lock").get(shape) {
		return d.clone();
	}
	let tableaux = rank_tableaux(shape);
	let index = tableaux.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
	let data = Arc::new(ShapeData {
		shape: shape.clone(),
		tableaux,
		index,
		polytabloids: OnceLock::new(),
		generators: RwLock::new(HashMap::new()),
	});
	shape_cache()
		.write()
		.expect("cache lock")
		.entry(shape.clone())
		.or_insert(data)
		.clone()
}

/// Standard tableaux on `0..n`, in row-reading lexicographic order.
fn rank_tableaux(shape: &Partition) -> Vec<Vec<Vec<usize>>> {
	fn go(next: usize, n: usize, shape: &[usize], rows: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
		if next == n {
			out.push(rows.clone());
			return;
		}
		for r in 0..shape.len() {
			let len = rows[r].len();
			if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
				rows[r].push(next);
				go(next + 1, n, shape, rows, out);
				rows[r].pop();
			}
		}
	}
	let mut out = Vec::new();
	let mut rows = vec![Vec::new(); shape.len()];
	go(0, shape.weight(), shape.parts(), &mut rows, &mut out);
	out.sort_by_key(|t| t.concat());
	out
}

/// Column-group expansion `e_t = Σ sgn(σ) {σt}` of a rank tableau.
fn polytabloid(shape: &Partition, rows: &[Vec<usize>]) -> BTreeMap<Tabloid, i64> {
	let n = shape.weight();
	let cols: Vec<Vec<usize>> = (0..rows.first().map_or(0, |r| r.len()))
		.map(|c| rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect())
		.collect();
	let signed = |len: usize| -> Vec<(Vec<usize>, i64)> {
		permutations(len)
			.into_iter()
			.map(|p| {
				let inv = (0..len)
					.flat_map(|i| (i + 1..len).map(move |j| (i, j)))
					.filter(|&(i, j)| p[i] > p[j])
					.count();
				let s = if inv % 2 == 0 { 1 } else { -1 };
				(p, s)
			})
			.collect()
	};
	let perms: Vec<Vec<(Vec<usize>, i64)>> = cols.iter().map(|c| signed(c.len())).collect();
	let mut out = BTreeMap::new();
	let mut key = vec![0u8; n];
	fn go(
		c: usize,
		sign: i64,
		cols: &[Vec<usize>],
		perms: &[Vec<(Vec<usize>, i64)>],
		key: &mut Tabloid,
		out: &mut BTreeMap<Tabloid, i64>,
	) {
		if c == cols.len() {
			*out.entry(key.clone()).or_insert(0) += sign;
			return;
		}
		let n = key.len();
		for (p, s) in &perms[c] {
			for (r, &src) in p.iter().enumerate() {
				key[n - 1 - cols[c][src]] = r as u8;
			}
			go(c + 1, sign * s, cols, perms, key, out);
		}
	}
	go(0, 1, &cols, &perms, &mut key, &mut out);
	out.retain(|_, v| *v != 0);
	out
}

fn tabloid_rows(shape: &Partition, key: &Tabloid) -> Vec<Vec<usize>> {
	let n = key.len();
	let mut rows = vec![Vec::new(); shape.len()];
	for x in 0..n {
		rows[key[n - 1 - x] as usize].push(x);
	}
	rows
}

impl ShapeData {
	fn polytabloids(&self) -> &Vec<Vec<(Tabloid, i64)>> {
		self.polytabloids.get_or_init(|| {
			self.tableaux
				.iter()
				.map(|t| polytabloid(&self.shape, t).into_iter().collect())
				.collect()
		})
	}

	/// Coordinates of `e_t` in the standard basis.
	fn straighten(&self, rows: &[Vec<usize>]) -> Vec<(usize, i64)> {
		let mut v = polytabloid(&self.shape, rows);
		let mut out = Vec::new();
		while let Some((key, &c)) = v.last_key_value() {
			// the largest tabloid present belongs to a standard tableau
			let t = tabloid_rows(&self.shape, key);
			let i = *self
				.index
				.get(&t)
				.expect("leading tabloid of a Specht vector is standard");
			for (tab, coeff) in &self.polytabloids()[i] {
				let e = v.entry(tab.clone()).or_insert(0);
				*e -= c * coeff;
				if *e == 0 {
					v.remove(tab);
				}
			}
			out.push((i, c));
		}
		out.sort_unstable();
		out
	}

	fn action_matrix(&self, w: &[usize]) -> IntMatrix {
		let f = self.tableaux.len();
		let mut m = IntMatrix::zeros(f, f);
		for (j, t) in self.tableaux.iter().enumerate() {
			let moved: Vec<Vec<usize>> = t.iter().map(|r| r.iter().map(|&x| w[x]).collect()).collect();
			for (i, c) in self.straighten(&moved) {
				m.set(i, j, c);
			}
		}
		m
	}
}

fn sorted_labels<L: Ord + Clone>(labels: impl Iterator<Item = L>) -> Result<Vec<L>> {
	let mut v: Vec<L> = labels.collect();
	v.sort();
	if v.windows(2).any(|w| w[0] == w[1]) {
		return arg("repeated label in tableau");
	}
	Ok(v)
}

/// All standard tableaux of shape λ filled with `labels`, in row-reading
/// lexicographic order.
pub fn standard_tableaux<L: Ord + Clone>(shape: &Partition, labels: &[L]) -> Result<Vec<StandardTableau<L>>> {
	if labels.len() != shape.weight() {
		return arg(format!(
			"{} labels for a shape of size {}",
			labels.len(),
			shape.weight()
		));
	}
	let labels = sorted_labels(labels.iter().cloned())?;
	let data = shape_data(shape);
	Ok(data
		.tableaux
		.iter()
		.map(|t| Tableau {
			rows: t
				.iter()
				.map(|r| r.iter().map(|&x| labels[x].clone()).collect())
				.collect(),
		})
		.collect())
}

/// Number of standard tableaux of shape λ.
pub fn count_standard(shape: &Partition) -> usize {
	shape_data(shape).tableaux.len()
}

/// Expresses the polytabloid of `t` in the standard polytabloid basis.
/// Coefficients are integers; terms come in standard-tableau order.
pub fn straighten<L: Ord + Clone>(t: &Tableau<L>) -> Result<Vec<(StandardTableau<L>, i64)>> {
	let labels = sorted_labels(t.entries().cloned())?;
	let rank = |x: &L| labels.binary_search(x).expect("label present");
	let rows: Vec<Vec<usize>> = t.rows.iter().map(|r| r.iter().map(rank).collect()).collect();
	let data = shape_data(&t.shape());
	Ok(data
		.straighten(&rows)
		.into_iter()
		.map(|(i, c)| {
			let rows = data.tableaux[i]
				.iter()
				.map(|r| r.iter().map(|&x| labels[x].clone()).collect())
				.collect();
			(Tableau { rows }, c)
		})
		.collect())
}

/// Matrix of the adjacent transposition `sᵢ` (swapping labels `i` and `i+1`,
/// 1-based) on the standard basis; column `j` is the image of tableau `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpechtMatrix {
	pub shape: Partition,
	pub generator: usize,
	pub matrix: IntMatrix,
}

pub fn generator_matrix(shape: &Partition, i: usize) -> Result<SpechtMatrix> {
	let n = shape.weight();
	if i == 0 || i >= n {
		return arg(format!("generator s_{i} needs 1 <= i < {n}"));
	}
	let data = shape_data(shape);
	if let Some(m) = data.generators.read().expect("cache lock").get(&i) {
		return Ok(SpechtMatrix {
			shape: shape.clone(),
			generator: i,
			matrix: (**m).clone(),
		});
	}
	let mut w: Vec<usize> = (0..n).collect();
	w.swap(i - 1, i);
	let m = Arc::new(data.action_matrix(&w));
	data.generators.write().expect("cache lock").insert(i, m.clone());
	Ok(SpechtMatrix {
		shape: shape.clone(),
		generator: i,
		matrix: (*m).clone(),
	})
}

/// Matrix of the permutation `w` (`w[x-1]` is the image of label `x`) acting
/// on entries, computed directly by straightening.
pub fn perm_matrix(shape: &Partition, w: &[usize]) -> Result<IntMatrix> {
	let n = shape.weight();
	if w.len() != n || sorted_labels(w.iter().copied())? != (1..=n).collect::<Vec<_>>() {
		return arg(format!("{w:?} is not a permutation of [1,{n}]"));
	}
	let w0: Vec<usize> = w.iter().map(|x| x - 1).collect();
	Ok(shape_data(shape).action_matrix(&w0))
}

/// `χ^λ(μ)` by the Murnaghan–Nakayama rule on beta-sets.
pub fn character_sn(lambda: &Partition, mu: &Partition) -> Result<i64> {
	if lambda.weight() != mu.weight() {
		return arg(format!("χ^{lambda} evaluated at {mu}: sizes differ"));
	}
	static MEMO: OnceLock<RwLock<HashMap<(Partition, Partition), i64>>> = OnceLock::new();
	let memo = MEMO.get_or_init(Default::default);
	let key = (lambda.clone(), mu.clone());
	if let Some(&v) = memo.read().expect("memo lock").get(&key) {
		return Ok(v);
	}
	let len = lambda.len();
	let beta: Vec<usize> = lambda
		.parts()
		.iter()
		.enumerate()
		.map(|(i, &p)| p + len - 1 - i)
		.collect();
	let v = mn(&beta, mu.parts());
	memo.write().expect("memo lock").insert(key, v);
	Ok(v)
}

fn mn(beta: &[usize], mu: &[usize]) -> i64 {
	let Some((&r, rest)) = mu.split_first() else {
		return 1;
	};
	let mut total = 0;
	for (i, &b) in beta.iter().enumerate() {
		if b < r || beta.contains(&(b - r)) {
			continue;
		}
		let between = beta.iter().filter(|&&x| b - r < x && x < b).count();
		let mut next = beta.to_vec();
		next[i] = b - r;
		next.sort_unstable_by(|a, b| b.cmp(a));
		let s = if between % 2 == 0 { 1 } else { -1 };
		total += s * mn(&next, rest);
	}
	total
}
