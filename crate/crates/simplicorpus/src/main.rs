fn main() {
    std::process::exit(simplicorpus::cli::run());
}
