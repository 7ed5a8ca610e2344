//! Known small tables, rows and columns in increasing `I_k` order.
#![allow(dead_code)]

fn tail_identity(mut rows: Vec<Vec<i64>>, n: usize) -> Vec<Vec<i64>> {
	for i in rows.len()..n {
		let mut row = vec![0; n];
		row[i] = 1;
		rows.push(row);
	}
	rows
}

pub fn x2() -> Vec<Vec<i64>> {
	vec![vec![1, 1, 1], vec![0, 1, 1], vec![0, -1, 1]]
}

pub fn x3() -> Vec<Vec<i64>> {
	vec![
		vec![1, 1, 1, 1, 1],
		vec![0, 1, 0, 1, 3],
		vec![0, 0, 1, 1, 1],
		vec![0, 0, -1, 0, 2],
		vec![0, 0, 1, -1, 1],
	]
}

pub fn x4() -> Vec<Vec<i64>> {
	vec![
		vec![1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
		vec![0, 1, 0, 0, 0, 2, 0, 1, 0, 2, 4],
		vec![0, 0, 1, 1, 1, 1, 1, 0, 3, 1, 3],
		vec![0, 0, -1, 1, 1, 1, -1, 0, -1, 1, 3],
		vec![0, 0, 0, 0, 1, 1, 0, 0, 2, 2, 6],
		vec![0, 0, 0, 0, -1, 1, 0, 0, -2, 0, 6],
		vec![0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1],
		vec![0, 0, 0, 0, 0, 0, -1, 0, -1, 1, 3],
		vec![0, 0, 0, 0, 0, 0, 0, -1, 2, 0, 2],
		vec![0, 0, 0, 0, 0, 0, 1, 0, -1, -1, 3],
		vec![0, 0, 0, 0, 0, 0, -1, 1, 1, -1, 1],
	]
}

pub fn b2() -> Vec<Vec<i64>> {
	vec![vec![1, 1, 1], vec![0, 1, 0], vec![0, 0, 1]]
}

pub fn b3() -> Vec<Vec<i64>> {
	tail_identity(vec![vec![1, 1, 1, 1, 1], vec![0, 1, 0, 1, 3]], 5)
}

pub fn b4() -> Vec<Vec<i64>> {
	tail_identity(
		vec![
			vec![1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
			vec![0, 1, 0, 0, 0, 2, 0, 1, 0, 2, 4],
			vec![0, 0, 1, 0, 0, 0, 1, 0, 2, 0, 0],
			vec![0, 0, 0, 1, 1, 1, 0, 0, 1, 1, 3],
			vec![0, 0, 0, 0, 1, 0, 0, 0, 2, 1, 0],
			vec![0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 6],
		],
		11,
	)
}

pub fn u2() -> Vec<Vec<i64>> {
	vec![vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]]
}

pub fn u3() -> Vec<Vec<i64>> {
	tail_identity(vec![vec![1, 1, 1, 0, 0], vec![0, 1, 1, 1, 0]], 5)
}

pub fn u4() -> Vec<Vec<i64>> {
	tail_identity(
		vec![
			vec![1, 1, 1, 0, 1, 0, 1, 0, 0, 0, 0],
			vec![0, 1, 0, 0, 1, 1, 1, 1, 0, 0, 0],
			vec![0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0],
			vec![0, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0],
			vec![0, 0, 0, 0, 1, 0, 1, 1, 1, 0, 0],
			vec![0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0],
		],
		11,
	)
}
