fn main() {
    std::process::exit(planetrees::cli::run(std::env::args_os()));
}
