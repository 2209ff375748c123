fn main() {
    std::process::exit(hypercert::cli::main_with_args(std::env::args_os()));
}
