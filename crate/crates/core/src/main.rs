fn main() {
    std::process::exit(beflow::cli::run());
}
