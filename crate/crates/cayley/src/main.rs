fn main() {
    std::process::exit(cayley::cli::run());
}
