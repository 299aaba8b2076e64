fn main() {
    std::process::exit(orthoplex::cli::run(std::env::args().collect()));
}
