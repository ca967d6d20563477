fn main() {
    std::process::exit(monogenic_cli::main_with_args(std::env::args_os()));
}
