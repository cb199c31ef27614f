fn main() {
    std::process::exit(critline::cli::main_with_args(std::env::args_os()));
}
