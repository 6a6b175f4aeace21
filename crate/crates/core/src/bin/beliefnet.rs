fn main() {
    std::process::exit(beliefnet::cli::main_with_args(std::env::args_os()));
}
