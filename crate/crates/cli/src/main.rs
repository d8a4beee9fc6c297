fn main() {
    std::process::exit(lens_invariants_cli::run(std::env::args_os()));
}
