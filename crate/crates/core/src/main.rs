fn main() {
    std::process::exit(g2_chevalley::cli::main_with_args(std::env::args_os()));
}
