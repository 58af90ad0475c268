fn main() {
    std::process::exit(tiltwall::cli::run());
}
