use std::process::{Command, Output};

fn ubp(args: &[&str]) -> Output {
	Command::new(env!("CARGO_BIN_EXE_ubp"))
		.args(args)
		.env_remove("UBP_MAX_K")
		.output()
		.expect("binary runs")
}

fn stdout(o: &Output) -> String {
	String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
	String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn enumerate_count() {
	let o = ubp(&["enumerate", "--k", "4", "--count"]);
	assert_eq!(o.status.code(), Some(0));
	assert_eq!(stdout(&o), "131\n");
	let o = ubp(&["enumerate", "--k", "2"]);
	assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn char_table_both_agrees() {
	let o = ubp(&["char-table", "--k", "3", "--method", "both"]);
	assert_eq!(o.status.code(), Some(0));
	let out = stdout(&o);
	assert!(out.contains("trace and frobenius tables agree"));
	assert!(out.contains("((2,1)) |  0| 0|-1  0  2"), "{out}");
	let o = ubp(&["--format", "json", "char-table", "--k", "2", "--method", "trace"]);
	let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
	assert_eq!(v["entries"], serde_json::json!([[1, 1, 1], [0, 1, 1], [0, -1, 1]]));
	assert_eq!(v["order"], serde_json::json!([[[], [1]], [[2]], [[1, 1]]]));
}

#[test]
fn pleth_rows() {
	let o = ubp(&["pleth", "--shape", "[[],[1,1]]", "--k", "4"]);
	assert_eq!(stdout(&o), "s[3,1]: 1\n");
	let o = ubp(&["pleth", "--shape", "[[],[2]]"]);
	assert_eq!(stdout(&o), "s[4]: 1\ns[2,2]: 1\n");
	let o = ubp(&["symfunc", "--pleth", "[[],[2]]"]);
	assert_eq!(stdout(&o), "s[4]: 1\ns[2,2]: 1\n");
}

#[test]
fn diagram_commands() {
	let o = ubp(&["multiply", "1,2' | 2,1' | 3,3'", "1,1' | 2,3,2',3'"]);
	assert_eq!(stdout(&o), "1,3,2',3' | 2,1'\n");
	let o = ubp(&["factorize", "1,4,2',3' | 2,1' | 3,4'"]);
	assert!(stdout(&o).starts_with("sigma: "));
	let o = ubp(&["cycletype", "1,2' | 2,1' | 3,4,3',4'"]);
	assert_eq!(stdout(&o), "((2),(1))\n");
	let o = ubp(&["class-rep", "--mu", "[[4,2],[2]]"]);
	assert_eq!(
		stdout(&o),
		"1,2' | 2,3' | 3,4' | 4,1' | 5,6' | 6,5' | 7,8,9',10' | 9,10,7',8'\n"
	);
	let o = ubp(&["conj", "--k", "4", "--rep", "[[2,2]]"]);
	assert_eq!(stdout(&o), "1,2' | 2,1' | 3,4' | 4,3'\n");
}

#[test]
fn module_commands() {
	let o = ubp(&["module", "--k", "3", "--shape", "[[1],[1]]", "--basis"]);
	assert_eq!(stdout(&o), "{1} ; {23}\n{2} ; {13}\n{3} ; {12}\n");
	let o = ubp(&[
		"module",
		"--k",
		"3",
		"--shape",
		"[[1],[1]]",
		"--act",
		"1,2' | 2,1' | 3,3'",
		"--on",
		"{1} ; {23}",
	]);
	assert_eq!(stdout(&o), "{2} ; {13}\n");
	let o = ubp(&[
		"module",
		"--k",
		"3",
		"--shape",
		"[[1],[1]]",
		"--act",
		"1,2,1',2' | 3,3'",
		"--on",
		"{1} ; {23}",
	]);
	assert_eq!(stdout(&o), "0\n");
	let o = ubp(&[
		"module",
		"--k",
		"3",
		"--shape",
		"[[1],[1]]",
		"--matrix",
		"1,2' | 2,1' | 3,3'",
	]);
	assert_eq!(stdout(&o), "0 1 0\n1 0 0\n0 0 1\n");
}

#[test]
fn other_commands() {
	assert_eq!(stdout(&ubp(&["sn-char", "--lambda", "[2,1]", "--mu", "[3]"])), "-1\n");
	let o = ubp(&["--format", "json", "symfunc", "--E", "1"]);
	let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
	assert_eq!(
		v,
		serde_json::json!([{"vector_partition": [[1]], "numerator": "1", "denominator": "1"}])
	);
	let o = ubp(&["green", "--k", "3", "--list", "jclasses"]);
	assert_eq!(
		stdout(&o),
		"J(3): 1 elements\nJ(2,1): 9 elements\nJ(1,1,1): 6 elements\n"
	);
	let o = ubp(&["--format", "json", "green", "--k", "4", "--list", "subgroup", "12|34"]);
	let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
	assert_eq!(v["order"], 2);
	let o = ubp(&["matrices", "--k", "3"]);
	assert_eq!(o.status.code(), Some(0));
	assert!(stdout(&o).contains("X = AB: ok\nX = UA: ok"));
	let o = ubp(&["verify", "--level", "fast", "--suite", "e-r"]);
	assert_eq!(o.status.code(), Some(0));
	assert!(stdout(&o).starts_with("PASS e-r"));
}

#[test]
fn exit_codes_and_limits() {
	let o = ubp(&["multiply", "1,2'", "1,1'"]);
	assert_eq!(o.status.code(), Some(2));
	assert!(stderr(&o).contains("not covered"));
	assert_eq!(ubp(&["bogus"]).status.code(), Some(2));
	assert_eq!(ubp(&["conj", "--k", "3"]).status.code(), Some(2));
	let o = ubp(&["enumerate", "--k", "7"]);
	assert_eq!(o.status.code(), Some(2));
	assert!(stderr(&o).contains("--max-k"));
	let o = ubp(&["--max-k", "7", "enumerate", "--k", "7", "--count"]);
	assert_eq!(o.status.code(), Some(0));
	assert_eq!(stdout(&o), "426833\n");
	assert!(stderr(&o).contains("warning"));
	let o = Command::new(env!("CARGO_BIN_EXE_ubp"))
		.args(["char-table", "--k", "6"])
		.env("UBP_MAX_K", "4")
		.output()
		.unwrap();
	assert_eq!(o.status.code(), Some(2));
	assert_eq!(ubp(&["verify", "--suite", "nope"]).status.code(), Some(2));
}
