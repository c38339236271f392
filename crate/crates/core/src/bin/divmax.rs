fn main() {
    std::process::exit(divmax::cli::main_with_args(std::env::args_os()));
}
