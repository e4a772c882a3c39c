fn main() {
    std::process::exit(nbcss::cli::main_with_args(std::env::args_os()));
}
