/// Union-find over `0..len` with path compression and union by size.
pub struct DisjointSets {
	parent: Vec<usize>,
	size: Vec<usize>,
}

impl DisjointSets {
	pub fn new(len: usize) -> Self {
		DisjointSets {
			parent: (0..len).collect(),
			size: vec![1; len],
		}
	}

	pub fn find(&mut self, i: usize) -> usize {
		let mut root = i;
		while self.parent[root] != root {
			root = self.parent[root];
		}
		let mut i = i;
		while self.parent[i] != root {
			let next = self.parent[i];
			self.parent[i] = root;
			i = next;
		}
		root
	}

	pub fn merge(&mut self, i: usize, j: usize) {
		let (mut i, mut j) = (self.find(i), self.find(j));
		if i == j {
			return;
		}
		if self.size[i] < self.size[j] {
			(i, j) = (j, i);
		}
		self.parent[j] = i;
		self.size[i] += self.size[j];
	}
}
