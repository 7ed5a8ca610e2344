fn main() {
	std::process::exit(ubp::cli::main());
}
