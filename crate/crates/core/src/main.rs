fn main() {
    std::process::exit(rmatq::cli::run());
}
