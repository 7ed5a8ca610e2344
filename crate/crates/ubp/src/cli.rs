//! The `ubp` command-line front end.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::combinatorics::{enumerate_setpartitions, monoid_order, Partition, SetPartition, VectorPartition};
use crate::conjugacy::{b_matrix, class_rep, cycletype};
use crate::diagram::{enumerate_monoid, Diagram};
use crate::error::{Error, Result};
use crate::green::{jclass, lclass, maximal_subgroup};
use crate::limits::{self, Limit};
use crate::matrix::{CharMatrix, IntMatrix};
use crate::repmod::{act, basis, character_table_trace, matrix, UniformTableau};
use crate::specht::character_sn;
use crate::symfunc::{
	a_matrix, e_r, frob_char, p_to_s, plethysm_schur_expansion, u_matrix, write_expansion, x_matrix, MultiSym,
};
use crate::verify::{self, Level};

#[derive(Parser, Debug)]
#[command(
	name = "ubp",
	version,
	about = "Uniform block permutations: monoid, modules, characters and symmetric functions"
)]
struct Cli {
	/// Raise every size limit to K (prints a warning).
	#[arg(long, global = true, env = "UBP_MAX_K", value_name = "K")]
	max_k: Option<usize>,
	/// Worker threads for table assembly.
	#[arg(long, global = true, value_name = "N")]
	jobs: Option<usize>,
	#[arg(long, global = true, value_enum, default_value_t = Format::Text)]
	format: Format,
	#[command(subcommand)]
	command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
	Text,
	Json,
}

#[derive(Subcommand, Debug)]
enum Command {
	/// List the elements of 𝒰ₖ, or count them.
	Enumerate {
		#[arg(long)]
		k: usize,
		#[arg(long)]
		count: bool,
	},
	/// Product d₁·d₂ (d₁ on top).
	Multiply {
		left: String,
		right: String,
		#[arg(long)]
		k: Option<usize>,
	},
	/// d = e_top·σ = σ·e_bot.
	Factorize {
		diagram: String,
		#[arg(long)]
		k: Option<usize>,
	},
	/// Cycle type of a diagram.
	Cycletype {
		diagram: String,
		#[arg(long)]
		k: Option<usize>,
	},
	/// Representative of the class of cycle type MU.
	ClassRep {
		#[arg(long)]
		mu: String,
	},
	/// Green's classes and maximal subgroups.
	Green {
		#[arg(long)]
		k: usize,
		#[arg(long, value_enum)]
		list: GreenList,
		/// Base partition for `--list subgroup`.
		pi: Option<String>,
	},
	/// Conjugacy data.
	Conj(ConjArgs),
	/// Irreducible modules on uniform tableaux.
	Module(ModuleArgs),
	/// Character table of 𝒰ₖ.
	CharTable {
		#[arg(long)]
		k: usize,
		#[arg(long, value_enum, default_value_t = Method::Both)]
		method: Method,
	},
	/// X, A, B and U for 𝒰ₖ, checking X = AB = UA.
	Matrices {
		#[arg(long)]
		k: usize,
	},
	/// Symmetric-function computations.
	Symfunc(SymfuncArgs),
	/// Schur expansion of s_{λ⁽¹⁾}[s₁]·s_{λ⁽²⁾}[s₂]⋯.
	Pleth {
		#[arg(long)]
		shape: String,
		#[arg(long)]
		k: Option<usize>,
	},
	/// Irreducible character of the symmetric group.
	SnChar {
		#[arg(long)]
		lambda: String,
		#[arg(long)]
		mu: String,
	},
	/// Run the invariant suites.
	Verify {
		#[arg(long, value_enum, default_value_t = VerifyLevel::Fast)]
		level: VerifyLevel,
		/// Run only the named suite.
		#[arg(long)]
		suite: Option<String>,
	},
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GreenList {
	Jclasses,
	Lclasses,
	Subgroup,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
	Trace,
	Frobenius,
	Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VerifyLevel {
	Fast,
	Full,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("conj_mode").required(true).args(["cycletype", "rep", "bmatrix"])))]
struct ConjArgs {
	#[arg(long)]
	k: usize,
	#[arg(long)]
	cycletype: Option<String>,
	#[arg(long)]
	rep: Option<String>,
	#[arg(long)]
	bmatrix: bool,
}

#[derive(Args, Debug)]
struct ModuleArgs {
	#[arg(long)]
	k: usize,
	#[arg(long)]
	shape: String,
	#[arg(long, conflicts_with_all = ["act", "matrix"])]
	basis: bool,
	#[arg(long, requires = "on", conflicts_with = "matrix")]
	act: Option<String>,
	#[arg(long)]
	on: Option<String>,
	#[arg(long)]
	matrix: Option<String>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct SymfuncArgs {
	/// E_r in power sums and in Schur functions
	#[arg(long = "E", value_name = "R")]
	e: Option<usize>,
	/// Frobenius image of the irreducible character χ^λ⃗
	#[arg(long, value_name = "LAMBDAVEC")]
	frob: Option<String>,
	/// X_k, the character table computed from E
	#[arg(long, value_name = "K")]
	xmatrix: Option<usize>,
	/// U_k, the decomposition matrix with X = U·A
	#[arg(long, value_name = "K")]
	umatrix: Option<usize>,
	/// A_k, the block-diagonal table with rows ⟨s_λ⃗, p_μ⃗⟩
	#[arg(long, value_name = "K")]
	amatrix: Option<usize>,
	/// Schur expansion of s_{λ⁽¹⁾}[s₁]·s_{λ⁽²⁾}[s₂]⋯
	#[arg(long, value_name = "LAMBDAVEC")]
	pleth: Option<String>,
}

/// What a command produced: text, JSON, and whether its checks passed.
struct Output {
	text: String,
	json: Value,
	ok: bool,
}

impl Output {
	fn new(text: impl Into<String>, json: Value) -> Self {
		Output {
			text: text.into(),
			json,
			ok: true,
		}
	}
}

/// Runs the CLI on the process arguments and returns the exit status.
pub fn main() -> i32 {
	run(std::env::args_os())
}

pub fn run<I, T>(args: I) -> i32
where
	I: IntoIterator<Item = T>,
	T: Into<std::ffi::OsString> + Clone,
{
	let cli = match Cli::try_parse_from(args) {
		Ok(c) => c,
		Err(e) => {
			let _ = e.print();
			return e.exit_code();
		}
	};
	if let Some(k) = cli.max_k {
		let defaults = [limits::DEFAULT_MONOID, limits::DEFAULT_MODULE, limits::DEFAULT_SYMFUNC];
		if defaults.iter().any(|&d| k > d) {
			eprintln!("warning: size limits raised to k = {k}; large tables may take a very long time");
		}
		limits::raise_all(k);
	}
	if let Some(n) = cli.jobs {
		if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
			eprintln!("warning: could not configure {n} threads: {e}");
		}
	}
	match dispatch(&cli.command) {
		Ok(out) => {
			match cli.format {
				Format::Text => print!("{}", out.text),
				Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("json")),
			}
			if out.ok {
				0
			} else {
				1
			}
		}
		Err(e) => {
			eprintln!("error: {e}");
			match e {
				Error::Check(_) => 1,
				_ => 2,
			}
		}
	}
}

fn diagram(s: &str, k: Option<usize>) -> Result<Diagram> {
	Diagram::parse_with_k(s, k)
}

fn vector_partition(s: &str, k: Option<usize>) -> Result<VectorPartition> {
	match k {
		Some(k) => VectorPartition::parse_in(s, k),
		None => VectorPartition::parse(s),
	}
}

fn lines<T: ToString>(items: &[T]) -> String {
	items.iter().map(|x| format!("{}\n", x.to_string())).collect()
}

fn table(m: &CharMatrix) -> Output {
	Output::new(m.to_string(), m.to_json())
}

fn int_matrix_text(m: &IntMatrix) -> String {
	let rows = m.to_rows();
	let w = rows.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
	rows.iter()
		.map(|r| r.iter().map(|x| format!("{x:>w$}")).collect::<Vec<_>>().join(" ") + "\n")
		.collect()
}

fn schur_text(s: &BTreeMap<VectorPartition, num_rational::BigRational>) -> String {
	let mut out = String::new();
	write_expansion(&mut out, "s", s.iter().map(|(k, v)| (k.to_string(), v.clone()))).expect("string write");
	out
}

fn schur_json(s: &BTreeMap<VectorPartition, num_rational::BigRational>) -> Value {
	json!(s
		.iter()
		.map(|(k, v)| json!({"vector_partition": k.to_json(), "numerator": v.numer().to_string(), "denominator": v.denom().to_string()}))
		.collect::<Vec<_>>())
}

fn multisym(f: &MultiSym) -> Output {
	Output::new(format!("{f}\n"), f.to_json())
}

fn dispatch(cmd: &Command) -> Result<Output> {
	match cmd {
		Command::Enumerate { k, count } => {
			let formula = monoid_order(*k);
			if *count {
				let mut out = Output::new(format!("{formula}\n"), json!({"k": k, "count": formula.to_string()}));
				if *k <= limits::get(Limit::Monoid) {
					let n = enumerate_monoid(*k)?.len();
					if num_bigint::BigUint::from(n) != formula {
						out.ok = false;
						eprintln!("enumeration found {n} elements, formula gives {formula}");
					}
				}
				return Ok(out);
			}
			let all = enumerate_monoid(*k)?;
			let json = json!(all.iter().map(|d| d.to_string()).collect::<Vec<_>>());
			Ok(Output::new(lines(&all), json))
		}
		Command::Multiply { left, right, k } => {
			let a = diagram(left, *k)?;
			let b = diagram(right, k.or(Some(a.k())))?;
			let p = a.multiply(&b)?;
			Ok(Output::new(format!("{p}\n"), json!({"product": p.to_string()})))
		}
		Command::Factorize { diagram: d, k } => {
			let f = diagram(d, *k)?.factorize();
			let text = format!("sigma: {}\ne_top: {}\ne_bot: {}\n", f.sigma, f.e_top, f.e_bot);
			let json =
				json!({"sigma": f.sigma.to_string(), "e_top": f.e_top.to_string(), "e_bot": f.e_bot.to_string()});
			Ok(Output::new(text, json))
		}
		Command::Cycletype { diagram: d, k } => {
			let ct = cycletype(&diagram(d, *k)?);
			Ok(Output::new(format!("{ct}\n"), ct.to_json()))
		}
		Command::ClassRep { mu } => {
			let d = class_rep(&vector_partition(mu, None)?);
			Ok(Output::new(format!("{d}\n"), json!({"mu": mu, "rep": d.to_string()})))
		}
		Command::Green { k, list, pi } => green(*k, *list, pi.as_deref()),
		Command::Conj(args) => conj(args),
		Command::Module(args) => module(args),
		Command::CharTable { k, method } => char_table(*k, *method),
		Command::Matrices { k } => {
			let (x, a, b, u) = (x_matrix(*k)?, a_matrix(*k)?, b_matrix(*k)?, u_matrix(*k)?);
			let ab = a.mul(&b) == x;
			let ua = u.mul(&a) == x;
			let mut text = String::new();
			for (name, m) in [("X", &x), ("A", &a), ("B", &b), ("U", &u)] {
				let _ = writeln!(text, "{name}_{k} =\n{m}");
			}
			let _ = writeln!(text, "X = AB: {}\nX = UA: {}", verdict(ab), verdict(ua));
			let json = json!({"X": x.to_json(), "A": a.to_json(), "B": b.to_json(), "U": u.to_json(), "x_eq_ab": ab, "x_eq_ua": ua});
			Ok(Output {
				text,
				json,
				ok: ab && ua,
			})
		}
		Command::Symfunc(args) => symfunc(args),
		Command::Pleth { shape, k } => pleth(&vector_partition(shape, *k)?),
		Command::SnChar { lambda, mu } => {
			let v = character_sn(&Partition::parse(lambda)?, &Partition::parse(mu)?)?;
			Ok(Output::new(format!("{v}\n"), json!(v)))
		}
		Command::Verify { level, suite } => {
			let level = match level {
				VerifyLevel::Fast => Level::Fast,
				VerifyLevel::Full => Level::Full,
			};
			let reports = match suite {
				Some(name) => vec![verify::run_suite(name, level).ok_or_else(|| {
					Error::Argument(format!(
						"unknown suite {name:?}; known: {}",
						verify::suite_names().join(", ")
					))
				})?],
				None => verify::run(level),
			};
			let mut text = String::new();
			for r in &reports {
				let _ = writeln!(
					text,
					"{} {:<18} {:>8.2?}  {}",
					if r.passed { "PASS" } else { "FAIL" },
					r.name,
					r.elapsed,
					r.detail
				);
			}
			let json = json!(reports
				.iter()
				.map(
					|r| json!({"suite": r.name, "passed": r.passed, "detail": r.detail, "seconds": r.elapsed.as_secs_f64()})
				)
				.collect::<Vec<_>>());
			Ok(Output {
				text,
				json,
				ok: reports.iter().all(|r| r.passed),
			})
		}
	}
}

fn verdict(ok: bool) -> &'static str {
	if ok {
		"ok"
	} else {
		"MISMATCH"
	}
}

fn join(parts: &[usize]) -> String {
	parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

fn green(k: usize, list: GreenList, pi: Option<&str>) -> Result<Output> {
	limits::check(Limit::Monoid, "listing Green's classes", k)?;
	match list {
		GreenList::Jclasses => {
			let mut text = String::new();
			let mut json = Vec::new();
			for lambda in Partition::all(k) {
				let j = jclass(&lambda);
				let _ = writeln!(text, "J{lambda}: {} elements", j.len());
				json.push(
					json!({"type": lambda.parts(), "size": j.len(), "elements": j.iter().map(|d| d.to_string()).collect::<Vec<_>>()}),
				);
			}
			Ok(Output::new(text, json!(json)))
		}
		GreenList::Lclasses => {
			let mut text = String::new();
			let mut json = Vec::new();
			for p in enumerate_setpartitions(k, None) {
				let l = lclass(&p);
				let _ = writeln!(text, "L[{p}]: {} elements", l.len());
				json.push(
					json!({"pi": p.to_string(), "size": l.len(), "elements": l.iter().map(|d| d.to_string()).collect::<Vec<_>>()}),
				);
			}
			Ok(Output::new(text, json!(json)))
		}
		GreenList::Subgroup => {
			let p = SetPartition::parse_with_k(
				pi.ok_or_else(|| Error::Argument("--list subgroup needs a set partition PI".into()))?,
				Some(k),
			)?;
			let g = maximal_subgroup(&p);
			let text = g
				.elements
				.iter()
				.map(|x| format!("{}  {}\n", x.diagram, x.cycle_type()))
				.collect::<String>();
			let json = json!({
				"pi": p.to_string(),
				"order": g.order(),
				"elements": g.elements.iter().map(|x| json!({"diagram": x.diagram.to_string(), "cycle_type": x.cycle_type().to_json()})).collect::<Vec<_>>(),
			});
			Ok(Output::new(text, json))
		}
	}
}

fn conj(args: &ConjArgs) -> Result<Output> {
	let k = args.k;
	if let Some(d) = &args.cycletype {
		let ct = cycletype(&diagram(d, Some(k))?);
		return Ok(Output::new(format!("{ct}\n"), json!({"cycle_type": ct.to_json()})));
	}
	if let Some(mu) = &args.rep {
		let d = class_rep(&vector_partition(mu, Some(k))?);
		return Ok(Output::new(format!("{d}\n"), json!({"rep": d.to_string()})));
	}
	Ok(table(&b_matrix(k)?))
}

fn module(args: &ModuleArgs) -> Result<Output> {
	let k = args.k;
	let shape = vector_partition(&args.shape, Some(k))?;
	if let (Some(d), Some(t)) = (&args.act, &args.on) {
		let d = diagram(d, Some(k))?;
		let t = UniformTableau::parse_with_k(t, Some(k))?;
		if t.shape() != shape {
			return Err(Error::Argument(format!("tableau has shape {}, not {shape}", t.shape())));
		}
		let v = act(&d, &t)?;
		return Ok(Output::new(format!("{v}\n"), v.to_json()));
	}
	if let Some(d) = &args.matrix {
		let m = matrix(&diagram(d, Some(k))?, &shape)?;
		return Ok(Output::new(
			int_matrix_text(&m),
			json!({"shape": shape.to_json(), "matrix": m.to_rows()}),
		));
	}
	limits::check(Limit::Module, "listing module bases", k)?;
	let b = basis(&shape);
	let json = json!({"shape": shape.to_json(), "dimension": b.len(), "basis": b.iter().map(|t| t.to_string()).collect::<Vec<_>>()});
	Ok(Output::new(lines(&b), json))
}

fn char_table(k: usize, method: Method) -> Result<Output> {
	let trace = (method != Method::Frobenius)
		.then(|| character_table_trace(k))
		.transpose()?;
	let frob = (method != Method::Trace).then(|| x_matrix(k)).transpose()?;
	match (trace, frob) {
		(Some(t), Some(f)) => {
			let mut text = t.to_string();
			let mut diffs = Vec::new();
			for i in 0..t.size() {
				for j in 0..t.size() {
					if t.get(i, j) != f.get(i, j) {
						diffs.push(format!(
							"[{}, {}]: trace {} vs frobenius {}",
							t.order[i],
							t.order[j],
							t.get(i, j),
							f.get(i, j)
						));
					}
				}
			}
			if diffs.is_empty() {
				text.push_str("trace and frobenius tables agree\n");
			} else {
				let _ = writeln!(text, "{} cells differ:\n{}", diffs.len(), diffs.join("\n"));
			}
			let json = json!({"table": t.to_json(), "agree": diffs.is_empty(), "differences": diffs});
			Ok(Output {
				text,
				json,
				ok: diffs.is_empty(),
			})
		}
		(Some(m), None) | (None, Some(m)) => Ok(table(&m)),
		(None, None) => unreachable!("some method is selected"),
	}
}

fn symfunc(args: &SymfuncArgs) -> Result<Output> {
	if let Some(r) = args.e {
		if r == 0 {
			return Err(Error::Argument("E_r needs r >= 1".into()));
		}
		limits::check(Limit::Symfunc, "computing E_r", r)?;
		return Ok(multisym(&e_r(r)));
	}
	if let Some(s) = &args.frob {
		let lam = vector_partition(s, None)?;
		limits::check(Limit::Symfunc, "computing Frobenius characteristics", lam.weight())?;
		let f = frob_char(&lam);
		let s = p_to_s(&f);
		let text = format!("p: {f}\ns: {}\n", schur_text(&s));
		return Ok(Output::new(text, json!({"p": f.to_json(), "s": schur_json(&s)})));
	}
	if let Some(k) = args.xmatrix {
		return Ok(table(&x_matrix(k)?));
	}
	if let Some(k) = args.umatrix {
		return Ok(table(&u_matrix(k)?));
	}
	if let Some(k) = args.amatrix {
		return Ok(table(&a_matrix(k)?));
	}
	pleth(&vector_partition(
		args.pleth.as_deref().expect("one mode is required"),
		None,
	)?)
}

fn pleth(lam: &VectorPartition) -> Result<Output> {
	limits::check(Limit::Symfunc, "plethysm expansions", lam.weight())?;
	let exp = plethysm_schur_expansion(lam);
	let text = exp
		.iter()
		.map(|(nu, c)| format!("s[{}]: {c}\n", join(nu.parts())))
		.collect::<String>();
	let json = json!(exp
		.iter()
		.map(|(nu, c)| json!({"partition": nu.parts(), "coefficient": c.to_string()}))
		.collect::<Vec<_>>());
	Ok(Output::new(text, json))
}
