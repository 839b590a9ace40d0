fn main() {
    std::process::exit(fibdim::cli::run());
}
