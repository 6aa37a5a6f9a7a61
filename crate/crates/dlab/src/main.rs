fn main() {
    std::process::exit(dlab::cli::main_with_args(std::env::args_os()));
}
