fn main() {
    std::process::exit(macint::cli::main_with_args(std::env::args_os()));
}
