fn main() {
    std::process::exit(tannaka::cli::run());
}
