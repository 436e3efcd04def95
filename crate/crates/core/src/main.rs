fn main() {
    std::process::exit(quadsym::cli::main_from_env());
}
